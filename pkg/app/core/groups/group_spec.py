"""
Parsers for the group and element mini-languages used on the command line.

Groups:   Z9, Z3xZ3, Z3xZ5, SD(7,3,2), SD(3,2,2)xZ5   (case-insensitive, whitespace ignored)
Elements: 4, -1              in cyclic groups
          (1,-1), -(0,2)     in abelian groups with several factors
          a, x^2, ax, (ax)^-1, a^-1x   in SD(n,m,t)
          (ax,3)             componentwise in products that contain SD factors
"""
import logging
import re
from functools import lru_cache
from typing import List

from ..exceptions import GroupSpecError, InvalidElementError
from .finite_group import FiniteGroup, direct_product_group, make_abelian, make_semidirect

logger = logging.getLogger(__name__)

_FACTOR_RE = re.compile(r"z(\d+)|sd\((-?\d+),(-?\d+),(-?\d+)\)")
_INT_RE = re.compile(r"[+-]?\d+")


def normalize_spec(text: str) -> str:
    return re.sub(r"\s+", "", text or "").lower()


@lru_cache(maxsize=64)
def parse_group_spec(text: str) -> FiniteGroup:
    """
    Parse a group specification into a FiniteGroup.

    Args:
        text: Specification such as "Z3xZ5" or "SD(7,3,2)"

    Returns:
        The constructed group (cached per normalized specification)
    """
    spec = normalize_spec(text)
    if not spec:
        raise GroupSpecError("Empty group specification")

    cyclic: List[int] = []
    groups: List[FiniteGroup] = []
    position = 0
    while position < len(spec):
        match = _FACTOR_RE.match(spec, position)
        if match is None:
            raise GroupSpecError(f"Cannot parse group specification {text!r} at position {position}")
        if match.group(1) is not None:
            cyclic.append(int(match.group(1)))
        else:
            if cyclic:
                groups.append(make_abelian(cyclic))
                cyclic = []
            n, m, t = (int(match.group(k)) for k in (2, 3, 4))
            groups.append(make_semidirect(n, m, t))
        position = match.end()
        if position < len(spec):
            if spec[position] != "x":
                raise GroupSpecError(f"Expected 'x' between factors in {text!r}")
            position += 1
            if position == len(spec):
                raise GroupSpecError(f"Dangling 'x' in {text!r}")
    if cyclic:
        groups.append(make_abelian(cyclic))

    group = groups[0]
    for other in groups[1:]:
        group = direct_product_group(group, other)
    logger.debug(f"Parsed group specification {text!r} as {group.name}")
    return group


def split_top_level(text: str, separator: str = ",") -> List[str]:
    parts, depth, current = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise InvalidElementError(f"Unbalanced parentheses in {text!r}")
        if ch == separator and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    if depth != 0:
        raise InvalidElementError(f"Unbalanced parentheses in {text!r}")
    parts.append("".join(current))
    return parts


class _WordParser:
    """Recursive-descent parser for words in the generators a and x of SD(n,m,t)."""

    def __init__(self, group: FiniteGroup, text: str):
        self.group = group
        self.text = text
        self.pos = 0
        m = group.tag["m"]
        # x = x^1 a^0 has index m, a = x^0 a^1 has index 1
        self.generators = {"a": 1, "x": m, "1": group.identity}

    def parse(self) -> int:
        value = self._word()
        if self.pos != len(self.text):
            raise InvalidElementError(f"Unexpected {self.text[self.pos]!r} in element {self.text!r}")
        return value

    def _word(self) -> int:
        value = self.group.identity
        while self.pos < len(self.text) and self.text[self.pos] != ")":
            value = self.group.mul(value, self._item())
        return value

    def _item(self) -> int:
        ch = self.text[self.pos]
        if ch == "(":
            self.pos += 1
            atom = self._word()
            if self.pos >= len(self.text) or self.text[self.pos] != ")":
                raise InvalidElementError(f"Missing ')' in element {self.text!r}")
            self.pos += 1
        elif ch in self.generators:
            atom = self.generators[ch]
            self.pos += 1
        else:
            raise InvalidElementError(f"Unknown symbol {ch!r} in element {self.text!r}")

        if self.pos < len(self.text) and self.text[self.pos] == "^":
            match = _INT_RE.match(self.text, self.pos + 1)
            if match is None:
                raise InvalidElementError(f"Missing exponent in element {self.text!r}")
            self.pos = match.end()
            atom = self.group.power(atom, int(match.group()))
        return atom


def parse_element(group: FiniteGroup, text: str) -> int:
    """
    Parse an element specifier relative to a group.

    Args:
        group: Group the element belongs to
        text: Element specifier (see module docstring)

    Returns:
        Element index
    """
    spec = normalize_spec(text)
    if not spec:
        raise InvalidElementError("Empty element specifier")

    negate = False
    if spec.startswith("-") and spec[1:2] == "(":
        negate = True
        spec = spec[1:]

    factors = group.factors
    if factors is not None:
        if len(factors) == 1 and _INT_RE.fullmatch(spec):
            value = group.encode([int(spec)])
        elif spec.startswith("(") and spec.endswith(")"):
            parts = split_top_level(spec[1:-1])
            if not all(_INT_RE.fullmatch(p) for p in parts):
                raise InvalidElementError(f"Residue vector {text!r} must contain integers only")
            value = group.encode([int(p) for p in parts])
        else:
            raise InvalidElementError(f"Cannot read {text!r} as an element of {group.name}")
        return group.inv(value) if negate else value

    if negate:
        raise InvalidElementError(f"Unary minus is only defined in abelian groups, not {group.name}")

    if group.tag.get("kind") == "semidirect":
        return _WordParser(group, spec).parse()

    if group.components:
        if not (spec.startswith("(") and spec.endswith(")")):
            raise InvalidElementError(f"Elements of {group.name} are written as component tuples")
        parts = split_top_level(spec[1:-1])
        if len(parts) != len(group.components):
            raise InvalidElementError(
                f"{text!r} has {len(parts)} components, {group.name} has {len(group.components)}"
            )
        index = 0
        for part, component in zip(parts, group.components):
            index = index * component.order + parse_element(component, part)
        return index

    raise InvalidElementError(f"No element syntax is defined for {group.name}")
