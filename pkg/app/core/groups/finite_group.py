import logging
import math
from itertools import product
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ...config.settings import settings
from ..exceptions import InvalidActionError, InvalidElementError, InvalidParameterError

logger = logging.getLogger(__name__)


class FiniteGroup:
    """
    A finite group materialized as a full multiplication table.

    Elements are the indices 0..order-1. The table is validated at
    construction (Latin square, identity, inverses, associativity) and is
    read-only afterwards.
    """

    def __init__(
        self,
        table: np.ndarray,
        name: str,
        tag: Dict[str, Any],
        element_names: Sequence[str],
        components: Optional[Tuple["FiniteGroup", ...]] = None,
    ):
        table = np.array(table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise InvalidParameterError("Multiplication table must be a non-empty square array")
        if table.shape[0] > settings.MAX_GROUP_ORDER:
            raise InvalidParameterError(
                f"Group order {table.shape[0]} exceeds MAX_GROUP_ORDER={settings.MAX_GROUP_ORDER}"
            )
        table.setflags(write=False)

        self.table = table
        self.order = int(table.shape[0])
        self.name = name
        self.tag = dict(tag)
        self.element_names = list(element_names)
        self.components = components

        self.identity = self._find_identity()
        self.inverses = self._find_inverses()
        self._check_associativity()
        self.is_abelian = bool(np.array_equal(table, table.T))

        logger.debug(f"Constructed group {self.name} of order {self.order}")

    # ------------------------------------------------------------------
    # Validation
    # ------------------------------------------------------------------
    def _find_identity(self) -> int:
        expected = np.arange(self.order)
        rows_ok = np.all(np.sort(self.table, axis=1) == expected, axis=1)
        cols_ok = np.all(np.sort(self.table, axis=0) == expected[:, None], axis=0)
        if not (rows_ok.all() and cols_ok.all()):
            raise InvalidParameterError(f"Table of {self.name} is not a Latin square")

        for e in range(self.order):
            if np.array_equal(self.table[e], expected) and np.array_equal(self.table[:, e], expected):
                return e
        raise InvalidParameterError(f"Table of {self.name} has no two-sided identity")

    def _find_inverses(self) -> np.ndarray:
        # Latin square: each row contains the identity exactly once
        inverses = np.argmax(self.table == self.identity, axis=1).astype(np.int64)
        if not np.all(self.table[inverses, np.arange(self.order)] == self.identity):
            raise InvalidParameterError(f"Table of {self.name} has one-sided inverses only")
        inverses.setflags(write=False)
        return inverses

    def _check_associativity(self) -> None:
        t = self.table
        if self.order <= settings.ASSOCIATIVITY_EXHAUSTIVE_MAX_ORDER:
            left = t[t]
            right = t[:, t]
            ok = np.array_equal(left, right)
        else:
            rng = np.random.default_rng(settings.RANDOM_SEED)
            a, b, c = rng.integers(0, self.order, size=(3, settings.ASSOCIATIVITY_SAMPLE_SIZE))
            ok = bool(np.all(t[t[a, b], c] == t[a, t[b, c]]))
        if not ok:
            raise InvalidParameterError(f"Table of {self.name} is not associative")

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------
    @property
    def elements(self) -> range:
        return range(self.order)

    @property
    def factors(self) -> Optional[List[int]]:
        """Invariant factors when the group was built as an abelian group."""
        if self.tag.get("kind") == "abelian":
            return list(self.tag["factors"])
        return None

    def check_element(self, g: int) -> int:
        try:
            index = int(g)
        except (TypeError, ValueError):
            raise InvalidElementError(f"{g!r} is not an element index of {self.name}")
        if not 0 <= index < self.order:
            raise InvalidElementError(f"Element {g} is not in {self.name} (order {self.order})")
        return index

    def mul(self, g: int, h: int) -> int:
        return int(self.table[self.check_element(g), self.check_element(h)])

    def inv(self, g: int) -> int:
        return int(self.inverses[self.check_element(g)])

    def power(self, g: int, k: int) -> int:
        """
        Compute g^k (k·g in additive notation) by repeated squaring.

        Args:
            g: Element index
            k: Any integer; negative exponents use the inverse

        Returns:
            Element index of g^k
        """
        g = self.check_element(g)
        k = int(k)
        if k < 0:
            g = int(self.inverses[g])
            k = -k
        result = self.identity
        base = g
        while k:
            if k & 1:
                result = int(self.table[result, base])
            base = int(self.table[base, base])
            k >>= 1
        return result

    def element_order(self, g: int) -> int:
        g = self.check_element(g)
        k = 1
        current = g
        while current != self.identity:
            current = int(self.table[current, g])
            k += 1
        return k

    # ------------------------------------------------------------------
    # Element encoding
    # ------------------------------------------------------------------
    def decode(self, g: int) -> Tuple[int, ...]:
        """Mixed-radix residue vector of an element of an abelian group."""
        factors = self.factors
        if factors is None:
            raise InvalidElementError(f"{self.name} has no residue-vector encoding")
        g = self.check_element(g)
        digits = []
        for f in reversed(factors):
            g, r = divmod(g, f)
            digits.append(r)
        return tuple(reversed(digits))

    def encode(self, vector: Sequence[int]) -> int:
        factors = self.factors
        if factors is None:
            raise InvalidElementError(f"{self.name} has no residue-vector encoding")
        if len(vector) != len(factors):
            raise InvalidElementError(
                f"Vector {tuple(vector)} has {len(vector)} entries, {self.name} needs {len(factors)}"
            )
        index = 0
        for value, f in zip(vector, factors):
            index = index * f + int(value) % f
        return index

    def name_of(self, g: int) -> str:
        return self.element_names[self.check_element(g)]

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"


def _abelian_names(vectors: np.ndarray) -> List[str]:
    if vectors.shape[1] == 1:
        return [str(int(v[0])) for v in vectors]
    return ["(" + ",".join(str(int(x)) for x in v) + ")" for v in vectors]


def make_abelian(factors: Sequence[int]) -> FiniteGroup:
    """
    Build the direct sum of cyclic groups Z_{f1} + ... + Z_{fr}.

    Element indices are the mixed-radix encoding of the residue vector with the
    first factor most significant, so Z3xZ5 maps (1, 1) to 6.

    Args:
        factors: Cyclic orders, each at least 2

    Returns:
        The abelian group
    """
    factors = [int(f) for f in factors]
    if not factors:
        raise InvalidParameterError("An abelian group needs at least one cyclic factor")
    for f in factors:
        if f < 2:
            raise InvalidParameterError(f"Cyclic factor {f} is smaller than 2")
    order = math.prod(factors)
    if order > settings.MAX_GROUP_ORDER:
        raise InvalidParameterError(f"Group order {order} exceeds MAX_GROUP_ORDER={settings.MAX_GROUP_ORDER}")

    moduli = np.array(factors, dtype=np.int64)
    vectors = np.array(list(product(*(range(f) for f in factors))), dtype=np.int64)
    weights = np.array([math.prod(factors[i + 1:]) for i in range(len(factors))], dtype=np.int64)
    sums = (vectors[:, None, :] + vectors[None, :, :]) % moduli
    table = sums @ weights

    name = "x".join(f"Z{f}" for f in factors)
    return FiniteGroup(
        table,
        name=name,
        tag={"kind": "abelian", "factors": factors},
        element_names=_abelian_names(vectors),
    )


def _semidirect_name(i: int, j: int) -> str:
    if i == 0 and j == 0:
        return "1"
    parts = []
    for letter, e in (("x", i), ("a", j)):
        if e == 1:
            parts.append(letter)
        elif e > 1:
            parts.append(f"{letter}^{e}")
    return "".join(parts)


def make_semidirect(n: int, m: int, t: int) -> FiniteGroup:
    """
    Build <a, x | a^m = x^n = 1, a^-1 x a = x^t>, the semidirect product Z_n : Z_m.

    The element x^i a^j has index i*m + j.

    Args:
        n: Order of x
        m: Order of a
        t: Exponent of the action; needs t^m = 1 (mod n)

    Returns:
        The group of order n*m
    """
    n, m = int(n), int(m)
    if n < 2 or m < 2:
        raise InvalidParameterError(f"SD({n},{m},{t}) needs n >= 2 and m >= 2")
    t = int(t) % n
    if math.gcd(t, n) != 1 or pow(t, m, n) != 1:
        raise InvalidActionError(f"t={t} does not satisfy t^{m} = 1 (mod {n}) with gcd(t, {n}) = 1")
    if n * m > settings.MAX_GROUP_ORDER:
        raise InvalidParameterError(f"Group order {n * m} exceeds MAX_GROUP_ORDER={settings.MAX_GROUP_ORDER}")

    # a x a^-1 = x^u with u = t^-1, hence (x^i a^j)(x^k a^l) = x^(i + k u^j) a^(j + l)
    u = pow(t, -1, n)
    u_powers = np.array([pow(u, j, n) for j in range(m)], dtype=np.int64)
    idx = np.arange(n * m, dtype=np.int64)
    i_part, j_part = idx // m, idx % m
    new_i = (i_part[:, None] + i_part[None, :] * u_powers[j_part][:, None]) % n
    new_j = (j_part[:, None] + j_part[None, :]) % m
    table = new_i * m + new_j

    names = [_semidirect_name(int(i), int(j)) for i, j in zip(i_part, j_part)]
    return FiniteGroup(
        table,
        name=f"SD({n},{m},{t})",
        tag={"kind": "semidirect", "n": n, "m": m, "t": t},
        element_names=names,
    )


def direct_product_group(first: FiniteGroup, second: FiniteGroup) -> FiniteGroup:
    """
    Direct product with (g, h) encoded as g*|H| + h.

    Abelian factors merge into one abelian group so residue vectors and the
    group-spec syntax stay uniform.
    """
    if first.factors is not None and second.factors is not None:
        return make_abelian(first.factors + second.factors)

    n_second = second.order
    idx = np.arange(first.order * n_second, dtype=np.int64)
    g, h = idx // n_second, idx % n_second
    table = first.table[g[:, None], g[None, :]] * n_second + second.table[h[:, None], h[None, :]]
    names = [f"({first.element_names[a]},{second.element_names[b]})" for a, b in zip(g, h)]
    components = (first.components or (first,)) + (second.components or (second,))
    return FiniteGroup(
        table,
        name=f"{first.name}x{second.name}",
        tag={"kind": "product", "factors": [first.tag, second.tag]},
        element_names=names,
        components=components,
    )
