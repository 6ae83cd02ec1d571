"""
Permutation groups given by generators, with a stabilizer chain built by the
incremental Schreier-Sims algorithm.
"""
import logging
import math
from collections import deque
from typing import Deque, Dict, Iterable, List, Optional, Sequence, Tuple

from ..exceptions import DegreeMismatchError
from .permutation import Permutation

logger = logging.getLogger(__name__)


class _Level:
    """One level of the stabilizer chain."""

    def __init__(self, base_point: int, degree: int):
        self.base_point = base_point
        self.generators: List[Permutation] = []
        # transversal[b] maps base_point to b; entries are never replaced
        self.transversal: Dict[int, Permutation] = {base_point: Permutation.identity(degree)}
        self.orbit: List[int] = [base_point]
        self.pending: Deque[Tuple[int, int]] = deque()

    def add_generator(self, h: Permutation) -> None:
        index = len(self.generators)
        self.generators.append(h)
        self.pending.extend((a, index) for a in self.orbit)
        self._close_orbit()

    def _close_orbit(self) -> None:
        position = 0
        while position < len(self.orbit):
            a = self.orbit[position]
            u = self.transversal[a]
            for s in self.generators:
                b = s(a)
                if b not in self.transversal:
                    self.transversal[b] = u * s
                    self.orbit.append(b)
                    self.pending.extend((b, j) for j in range(len(self.generators)))
            position += 1


class PermGroup:
    """
    Permutation group on 0..degree-1.

    Args:
        degree: Number of points acted on
        generators: Generating permutations (identity and duplicates are ignored)
        base: Optional prefix of base points; further points are appended as needed
    """

    def __init__(
        self,
        degree: int,
        generators: Iterable[Permutation] = (),
        base: Optional[Sequence[int]] = None,
    ):
        self.degree = int(degree)
        self.generators: List[Permutation] = []
        self._levels: List[_Level] = [_Level(b, self.degree) for b in (base or [])]

        for g in generators:
            if g.degree != self.degree:
                raise DegreeMismatchError(f"Generator of degree {g.degree} in a group of degree {self.degree}")
            if g.is_identity() or g in self.generators:
                continue
            self.generators.append(g)
            residue, level = self._sift(g, 0)
            if not residue.is_identity():
                self._insert(residue, 0, level)

        logger.debug(
            f"Stabilizer chain of degree {self.degree}: base {self.base}, orbit lengths "
            f"{[len(level.orbit) for level in self._levels]}"
        )

    # ------------------------------------------------------------------
    # Schreier-Sims
    # ------------------------------------------------------------------
    def _sift(self, g: Permutation, start: int) -> Tuple[Permutation, int]:
        """
        Strip g through the levels from ``start`` on.

        Returns:
            The residue and the index of the level where sifting stopped
            (``len(levels)`` when it went through every level)
        """
        residue = g
        for index in range(start, len(self._levels)):
            level = self._levels[index]
            b = residue(level.base_point)
            u = level.transversal.get(b)
            if u is None:
                return residue, index
            residue = residue * u.inverse()
        return residue, len(self._levels)

    def _insert(self, h: Permutation, top: int, bottom: int) -> None:
        if bottom == len(self._levels):
            self._levels.append(_Level(h.moved_points()[0], self.degree))
        for index in range(top, bottom + 1):
            self._levels[index].add_generator(h)
        for index in range(bottom, top - 1, -1):
            self._process(index)

    def _process(self, index: int) -> None:
        level = self._levels[index]
        while level.pending:
            a, j = level.pending.popleft()
            s = level.generators[j]
            schreier = level.transversal[a] * s * level.transversal[s(a)].inverse()
            if schreier.is_identity():
                continue
            residue, stop = self._sift(schreier, index + 1)
            if not residue.is_identity():
                self._insert(residue, index + 1, stop)

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------
    @property
    def base(self) -> List[int]:
        return [level.base_point for level in self._levels]

    @property
    def order(self) -> int:
        return math.prod(len(level.orbit) for level in self._levels)

    def orbit_lengths(self) -> List[int]:
        return [len(level.orbit) for level in self._levels]

    def strong_generators(self) -> List[Permutation]:
        seen = []
        for level in self._levels:
            for g in level.generators:
                if g not in seen:
                    seen.append(g)
        return seen

    def is_member(self, p: Permutation) -> bool:
        """
        Decide membership by sifting.

        Raises:
            DegreeMismatchError: p acts on a different number of points
        """
        if p.degree != self.degree:
            raise DegreeMismatchError(f"Permutation of degree {p.degree} tested against degree {self.degree}")
        residue, _ = self._sift(p, 0)
        return residue.is_identity()

    def vertex_orbits(self) -> List[List[int]]:
        parent = list(range(self.degree))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.generators:
            for i, image in enumerate(g.images):
                ri, rj = find(i), find(image)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)

        orbits: Dict[int, List[int]] = {}
        for v in range(self.degree):
            orbits.setdefault(find(v), []).append(v)
        return sorted(orbits.values())

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self.order}, generators={len(self.generators)})"
