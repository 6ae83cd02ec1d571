import logging
import re
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple, Union

from ..exceptions import InvalidConnectionSetError, InvalidElementError
from ..groups.finite_group import FiniteGroup
from ..groups.group_spec import parse_element, split_top_level

logger = logging.getLogger(__name__)

ColorSet = FrozenSet[int]
ColorSpec = Union[int, Iterable[int]]


def _as_color_set(value: ColorSpec) -> ColorSet:
    if isinstance(value, int):
        return frozenset([value])
    return frozenset(int(c) for c in value)


class ConnectionSet:
    """
    Inverse-closed subset S of a group with a colour set attached to each member.

    Args:
        group: Group the members belong to
        members: Element indices
        colors: Optional map member -> colour or colour set; members left out get {0}

    Raises:
        InvalidConnectionSetError: S is not inverse-closed, or colour(s) != colour(s^-1)
    """

    def __init__(
        self,
        group: FiniteGroup,
        members: Iterable[int],
        colors: Optional[Mapping[int, ColorSpec]] = None,
    ):
        self.group = group
        self.members: FrozenSet[int] = frozenset(group.check_element(s) for s in members)
        colors = dict(colors or {})

        for s in colors:
            if group.check_element(s) not in self.members:
                raise InvalidConnectionSetError(f"Colour given for {group.name_of(s)}, which is not in S")
        self.colors: Dict[int, ColorSet] = {s: _as_color_set(colors.get(s, 0)) for s in self.members}

        for s in self.members:
            if not self.colors[s]:
                raise InvalidConnectionSetError(f"Empty colour set for {group.name_of(s)}")
            t = group.inv(s)
            if t not in self.members:
                raise InvalidConnectionSetError(
                    f"S is not inverse-closed: {group.name_of(s)} is in S but {group.name_of(t)} is not"
                )
            if self.colors[t] != self.colors[s]:
                raise InvalidConnectionSetError(
                    f"colour({group.name_of(s)}) = {sorted(self.colors[s])} differs from "
                    f"colour({group.name_of(t)}) = {sorted(self.colors[t])}"
                )

    @property
    def sorted_members(self) -> List[int]:
        return sorted(self.members)

    @property
    def contains_identity(self) -> bool:
        return self.group.identity in self.members

    @property
    def is_uncolored(self) -> bool:
        return len({c for colors in self.colors.values() for c in colors}) <= 1

    def color_of(self, s: int) -> ColorSet:
        return self.colors[self.group.check_element(s)]

    def color_classes(self) -> Dict[int, List[int]]:
        """S_c for every colour c: the members whose colour set contains c."""
        classes: Dict[int, List[int]] = {}
        for s in self.sorted_members:
            for c in sorted(self.colors[s]):
                classes.setdefault(c, []).append(s)
        return classes

    def inverse_pairs(self) -> List[Tuple[int, int]]:
        pairs = {tuple(sorted((s, self.group.inv(s)))) for s in self.members}
        return sorted(pairs)

    def scaled(self, k: int) -> "ConnectionSet":
        """kS, where colour(t) is the union of colour(s) over every s in S with ks = t."""
        colors: Dict[int, FrozenSet[int]] = {}
        for s in self.sorted_members:
            t = self.group.power(s, k)
            colors[t] = colors.get(t, frozenset()) | self.colors[s]
        return ConnectionSet(self.group, colors.keys(), colors)

    def uncolored(self) -> "ConnectionSet":
        return ConnectionSet(self.group, self.members)

    def names(self) -> List[str]:
        """Members in index order, with "@c" suffixes when S is coloured."""
        out = []
        for s in self.sorted_members:
            name = self.group.name_of(s)
            if not self.is_uncolored:
                colors = sorted(self.colors[s])
                name += "@" + ("+".join(str(c) for c in colors))
            out.append(name)
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ConnectionSet):
            return NotImplemented
        return self.group is other.group and self.colors == other.colors

    def __hash__(self) -> int:
        return hash((self.group.name, frozenset(self.colors.items())))

    def __repr__(self) -> str:
        return f"ConnectionSet({self.group.name}, {{{', '.join(self.names())}}})"


_COLOR_RE = re.compile(r"\d+(\+\d+)*")


def parse_connection_set(group: FiniteGroup, text: str) -> ConnectionSet:
    """
    Parse "1,-1@0,2,-2@1" style input.

    Each comma-separated item is an element specifier optionally followed by
    "@c" or "@c1+c2". A colour suffix applies to its own item and to every
    uncoloured item since the previous suffix, so "1,-1@0" colours both 1 and
    -1; trailing uncoloured items get colour 0. Asymmetric input is rejected,
    never closed under inverses.

    Args:
        group: Group the elements belong to
        text: Connection set specifier; empty text gives the empty set

    Returns:
        The validated connection set
    """
    body = re.sub(r"\s+", "", text or "")
    if body.startswith("{") and body.endswith("}"):
        body = body[1:-1]
    if not body:
        return ConnectionSet(group, [])

    members: List[int] = []
    colors: Dict[int, ColorSet] = {}
    uncolored: List[int] = []
    try:
        items = split_top_level(body)
    except InvalidElementError as e:
        raise InvalidConnectionSetError(str(e))
    for item in items:
        element_text, _, color_text = item.partition("@")
        s = parse_element(group, element_text)
        if s in members:
            raise InvalidConnectionSetError(f"{item!r} repeats element {group.name_of(s)}")
        members.append(s)
        uncolored.append(s)
        if color_text:
            if not _COLOR_RE.fullmatch(color_text):
                raise InvalidConnectionSetError(f"Bad colour {color_text!r} in {item!r}")
            color_set = frozenset(int(c) for c in color_text.split("+"))
            for t in uncolored:
                colors[t] = color_set
            uncolored = []
    logger.debug(f"Parsed connection set {text!r} over {group.name}")
    return ConnectionSet(group, members, colors)
