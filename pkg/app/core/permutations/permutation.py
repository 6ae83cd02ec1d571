from typing import Iterable, List, Sequence, Tuple

from ..exceptions import DegreeMismatchError, InvalidParameterError


class Permutation:
    """
    A bijection of 0..n-1 stored as its image tuple.

    Products compose left to right: ``(p * q)(i) == q(p(i))``.
    """

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise InvalidParameterError(f"{images} is not a permutation of 0..{len(images) - 1}")
        self.images: Tuple[int, ...] = images

    @classmethod
    def _trusted(cls, images: Tuple[int, ...]) -> "Permutation":
        p = object.__new__(cls)
        p.images = images
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._trusted(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(degree))
        for cycle in cycles:
            for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
                images[a] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise DegreeMismatchError(f"Cannot compose permutations of degree {self.degree} and {other.degree}")
        q = other.images
        return Permutation._trusted(tuple(q[i] for i in self.images))

    def inverse(self) -> "Permutation":
        inverse = [0] * self.degree
        for i, image in enumerate(self.images):
            inverse[image] = i
        return Permutation._trusted(tuple(inverse))

    def is_identity(self) -> bool:
        return all(i == image for i, image in enumerate(self.images))

    def moved_points(self) -> List[int]:
        return [i for i, image in enumerate(self.images) if i != image]

    def cycles(self) -> List[List[int]]:
        """Non-trivial cycles, each starting at its smallest point."""
        seen = set()
        cycles = []
        for start in range(self.degree):
            if start in seen or self.images[start] == start:
                continue
            cycle = [start]
            seen.add(start)
            point = self.images[start]
            while point != start:
                cycle.append(point)
                seen.add(point)
                point = self.images[point]
            cycles.append(cycle)
        return cycles

    def cycle_notation(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(i) for i in cycle) + ")" for cycle in cycles)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_notation()}, degree={self.degree})"
