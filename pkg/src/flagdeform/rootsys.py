"""
Finite crystallographic root systems in simple-root coordinates.

Every root is a tuple of integers giving its expansion in the simple roots
alpha_1, ..., alpha_n (Bourbaki numbering).  Roots are addressed by an integer
id: ids ``0 .. N-1`` are the positive roots in build order and id ``N + j`` is
the negative of positive root ``j``.

>>> rs = build(CartanType.parse("B2"))
>>> rs.positive_roots
((1, 0), (0, 1), (1, 1), (1, 2))
>>> expansion_multiplicity(rs, 2, (1, 2))
2
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import numpy as np

__all__ = [
    "CartanType",
    "RootSystem",
    "RootSystemError",
    "build",
    "cartan_matrix",
    "expansion_multiplicity",
    "filter_roots",
]


class RootSystemError(ValueError):
    """Invalid Cartan type or root."""


_FAMILIES = "ABCDEFG"


@dataclass(frozen=True, order=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        fam, n = self.family, self.rank
        if fam not in _FAMILIES or len(fam) != 1:
            raise RootSystemError(f"unknown Cartan family {fam!r}")
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 2,
            "D": n >= 3,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }[fam]
        if not ok:
            raise RootSystemError(f"rank {n} is not valid for type {fam}")

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        m = re.fullmatch(r"\s*([A-Ga-g])\s*_?\s*(\d+)\s*", text)
        if m is None:
            raise RootSystemError(f"cannot parse Cartan type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"


def cartan_matrix(ct: CartanType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with entries ``a[i][j] = <alpha_i^vee, alpha_j>``.

    Bourbaki numbering: for B_n the last simple root is short, for C_n it
    is long; G_2 has alpha_1 short; F_4 has alpha_3, alpha_4 short.
    """
    n = ct.rank
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2

    def link(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    fam = ct.family
    if fam in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if fam == "B":
            link(n - 2, n - 1, -1, -2)
        elif fam == "C":
            link(n - 2, n - 1, -2, -1)
    elif fam == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif fam == "E":
        # Bourbaki: 1-3-4-5-6(-7-8), with 2 attached to 4
        link(0, 2)
        link(1, 3)
        link(2, 3)
        for i in range(3, n - 1):
            link(i, i + 1)
    elif fam == "F":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif fam == "G":
        link(0, 1, -3, -1)
    return tuple(tuple(row) for row in a)


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Positive roots of a simple Cartan type with reflection tables.

    ``reflection_table[i][r]`` is the id of ``s_i(root r)`` over all
    ``2N`` root ids.
    """

    cartan_type: CartanType
    cartan_matrix: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    reflection_table: np.ndarray = field(repr=False)

    @property
    def rank(self) -> int:
        return self.cartan_type.rank

    @property
    def n_positive(self) -> int:
        return len(self.positive_roots)

    @cached_property
    def root_index(self) -> dict[tuple[int, ...], int]:
        """Map from coordinates to root id, covering negative roots too."""
        n = self.n_positive
        out = {}
        for j, r in enumerate(self.positive_roots):
            out[r] = j
            out[tuple(-c for c in r)] = n + j
        return out

    def coords(self, rid: int) -> tuple[int, ...]:
        n = self.n_positive
        if rid < n:
            return self.positive_roots[rid]
        return tuple(-c for c in self.positive_roots[rid - n])

    def is_positive(self, rid: int) -> bool:
        return rid < self.n_positive

    def negate(self, rid: int) -> int:
        n = self.n_positive
        return rid + n if rid < n else rid - n

    def simple_root_id(self, i: int) -> int:
        """Root id of alpha_i (1-based simple index)."""
        return self.root_index[self.simple_root(i)]

    def simple_root(self, i: int) -> tuple[int, ...]:
        self._check_index(i)
        return tuple(1 if j == i - 1 else 0 for j in range(self.rank))

    def reflect(self, i: int, root: tuple[int, ...]) -> tuple[int, ...]:
        """``s_i(root)`` on coordinates; ``i`` is 1-based."""
        row = self.cartan_matrix[i - 1]
        pairing = sum(a * c for a, c in zip(row, root))
        out = list(root)
        out[i - 1] -= pairing
        return tuple(out)

    @cached_property
    def symmetrizer(self) -> tuple[int, ...]:
        """Squared lengths ``(alpha_i, alpha_i)``: smallest positive integers with
        ``d_i a_ij = d_j a_ji``."""
        n = self.rank
        a = self.cartan_matrix
        d: list[Fraction | None] = [None] * n
        d[0] = Fraction(1)
        stack = [0]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and a[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * a[i][j] / a[j][i]
                    stack.append(j)
        denom = np.lcm.reduce([x.denominator for x in d])
        vals = [int(x * denom) for x in d]
        g = np.gcd.reduce(vals)
        return tuple(v // int(g) for v in vals)

    def inner(self, x, y) -> Fraction:
        """Invariant bilinear form ``(x, y)`` in simple-root coordinates."""
        a, d = self.cartan_matrix, self.symmetrizer
        n = self.rank
        return Fraction(
            sum(x[i] * y[j] * d[i] * a[i][j] for i in range(n) for j in range(n)), 2
        )

    def coroot_coefficient(self, i: int, root) -> int:
        """Coefficient of alpha_i^vee in root^vee, i.e. ``<omega_i, root^vee>``."""
        val = Fraction(root[i - 1] * self.symmetrizer[i - 1]) / self.inner(root, root)
        if val.denominator != 1:
            raise RootSystemError(f"non-integral coroot coefficient for {root}")
        return int(val)

    @cached_property
    def max_multiplicity(self) -> int:
        return max(max(r) for r in self.positive_roots)

    def _check_index(self, i: int):
        if not 1 <= i <= self.rank:
            raise RootSystemError(f"simple index {i} out of range 1..{self.rank}")

    def __repr__(self):
        return f"RootSystem({self.cartan_type}, {self.n_positive} positive roots)"


_CLASSICAL_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


def _root_order_key(root):
    return (sum(root), tuple(-c for c in root))


_BUILD_CACHE: dict[CartanType, RootSystem] = {}


def build(ct: CartanType | str) -> RootSystem:
    """Generate the positive roots by closing the simple roots under reflections."""
    if isinstance(ct, str):
        ct = CartanType.parse(ct)
    if ct in _BUILD_CACHE:
        return _BUILD_CACHE[ct]
    a = cartan_matrix(ct)
    n = ct.rank
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for root in frontier:
            for i in range(n):
                pairing = sum(a[i][j] * root[j] for j in range(n))
                img = list(root)
                img[i] -= pairing
                img = tuple(img)
                if all(c >= 0 for c in img) and any(img) and img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    positive = tuple(sorted(seen, key=_root_order_key))
    expected = _CLASSICAL_COUNT[ct.family](n)
    if len(positive) != expected:
        raise RootSystemError(
            f"{ct}: generated {len(positive)} positive roots, expected {expected}"
        )

    npos = len(positive)
    lookup = {}
    for j, r in enumerate(positive):
        lookup[r] = j
        lookup[tuple(-c for c in r)] = npos + j
    table = np.empty((n, 2 * npos), dtype=np.int64)
    for rid in range(2 * npos):
        root = positive[rid] if rid < npos else tuple(-c for c in positive[rid - npos])
        for i in range(n):
            pairing = sum(a[i][j] * root[j] for j in range(n))
            img = list(root)
            img[i] -= pairing
            table[i, rid] = lookup[tuple(img)]
    table.setflags(write=False)
    rs = RootSystem(ct, a, positive, table)
    _BUILD_CACHE[ct] = rs
    return rs


def expansion_multiplicity(rs: RootSystem, alpha_index: int, beta) -> int:
    """Multiplicity of alpha_{alpha_index} in the positive root ``beta``."""
    rs._check_index(alpha_index)
    beta = tuple(beta)
    rid = rs.root_index.get(beta)
    if rid is None or not rs.is_positive(rid):
        raise RootSystemError(f"{beta} is not a positive root of {rs.cartan_type}")
    return beta[alpha_index - 1]


def filter_roots(rs: RootSystem, alpha_index: int, k: int) -> frozenset:
    """The filter of positive roots using alpha at least ``k`` times."""
    rs._check_index(alpha_index)
    if k < 1:
        raise RootSystemError("filter level k must be at least 1")
    return frozenset(r for r in rs.positive_roots if r[alpha_index - 1] >= k)
