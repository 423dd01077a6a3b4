"""
The two-parameter deformation of the cup product and its limits.

For ``w`` in ``W^P`` and an associated simple root ``alpha``, the exponent
profile of ``w`` at ``alpha`` is the multiset of multiplicities
``n_{alpha beta}`` over the inversions ``beta`` of ``w`` that involve alpha.
It carries all of ``F_w(t, s) = prod_alpha prod_m t_alpha^(m^s_alpha)``:

* at ``s = 1`` the ``t_alpha`` degree is the sum of the multiset;
* as ``s -> 0`` every entry contributes 1, so the degree is its size, which
  equals ``l(w_alpha)``.

No deformation is ever evaluated at a real ``s``; every specialisation
below is a degree comparison on profiles.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .rootsys import RootSystem
from .schubert import StructureConstantTable, structure_constants_pair
from .weyl import (
    ParabolicData,
    WeylElement,
    WeylError,
    dual,
    is_min_rep,
    longest_element,
    parabolic_decompose,
    project_w_alpha,
)

__all__ = [
    "COUNTING_CONVENTION",
    "ExponentProfile",
    "DeformedCoefficient",
    "ClassificationRecord",
    "f_profile",
    "filter_count",
    "divisibility_check",
    "star_ts_coefficient",
    "bk_coefficient",
    "star0_coefficient",
    "mixed_coefficient",
    "is_q_factoring",
    "region_count_inequality",
    "richmond_factorization_check",
    "ProfileArrays",
    "classify",
]

# The published counts of nonzero constants are over ordered pairs (u, v):
# B4/assoc{2,4}, B4/G/B and C6/assoc{4} all match only this way.
COUNTING_CONVENTION = "ordered"


@dataclass(frozen=True)
class ExponentProfile:
    """Per associated root, the sorted multiplicities ``n_{alpha beta} >= 1``."""

    multisets: tuple[tuple[int, tuple[int, ...]], ...]

    def __getitem__(self, alpha: int) -> tuple[int, ...]:
        for a, ms in self.multisets:
            if a == alpha:
                return ms
        raise KeyError(alpha)

    @property
    def assoc(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.multisets)

    def size(self, alpha: int) -> int:
        return len(self[alpha])

    def s1_degree(self, alpha: int) -> int:
        return sum(self[alpha])

    def at_least(self, alpha: int, k: int) -> int:
        return sum(1 for m in self[alpha] if m >= k)

    def counts(self, alpha: int) -> Counter:
        return Counter(self[alpha])

    def to_dict(self) -> dict[str, list[int]]:
        return {str(a): list(ms) for a, ms in self.multisets}


def _profile_any(w: WeylElement, assoc: Iterable[int]) -> ExponentProfile:
    invs = w.inversions()
    return ExponentProfile(
        tuple((a, tuple(sorted(b[a - 1] for b in invs if b[a - 1] >= 1))) for a in sorted(assoc))
    )


def f_profile(w: WeylElement, pd: ParabolicData) -> ExponentProfile:
    if not is_min_rep(w, pd.levi):
        raise WeylError(f"{w} is not in W^P for {pd}")
    return _profile_any(w, pd.assoc)


def filter_count(w: WeylElement, alpha_index: int, k: int) -> int:
    """Number of inversions of ``w`` using alpha at least ``k`` times."""
    w.rs._check_index(alpha_index)
    if k < 1:
        raise ValueError("k must be at least 1")
    return sum(1 for b in w.inversions() if b[alpha_index - 1] >= k)


def divisibility_check(u: WeylElement, v: WeylElement, w: WeylElement, pd: ParabolicData):
    """Filter-count certificate that ``F_u F_v`` divides ``F_w``.

    Returns ``(True, None)`` or ``(False, (alpha, k))`` for the first
    violated filter.
    """
    kmax = u.rs.max_multiplicity
    pu, pv, pw = (f_profile(x, pd) for x in (u, v, w))
    for a in sorted(pd.assoc):
        for k in range(1, kmax + 1):
            if pu.at_least(a, k) + pv.at_least(a, k) > pw.at_least(a, k):
                return False, (a, k)
    return True, None


@dataclass(frozen=True)
class DeformedCoefficient:
    """Coefficient of ``sigma_w`` in ``sigma_u *_{t,s} sigma_v``.

    ``ledger[alpha][k]`` is (entries equal to ``k`` in the profile of w)
    minus those of u and v.
    """

    c: int
    ledger: dict[int, dict[int, int]]

    def s1_degree(self, alpha: int) -> int:
        return sum(k * d for k, d in self.ledger[alpha].items())

    def s0_degree(self, alpha: int) -> int:
        return sum(self.ledger[alpha].values())

    def filter_difference(self, alpha: int, k: int) -> int:
        return sum(d for j, d in self.ledger[alpha].items() if j >= k)

    @property
    def bk(self) -> int:
        return self.c if all(self.s1_degree(a) == 0 for a in self.ledger) else 0

    @property
    def star0(self) -> int:
        return self.c if all(self.s0_degree(a) == 0 for a in self.ledger) else 0

    def mixed(self, limit_set: Iterable[int]) -> int:
        limit_set = set(limit_set)
        for a in self.ledger:
            deg = self.s0_degree(a) if a in limit_set else self.s1_degree(a)
            if deg != 0:
                return 0
        return self.c

    def to_dict(self) -> dict:
        return {
            "c": self.c,
            "ledger": {str(a): {str(k): d for k, d in sorted(led.items())} for a, led in sorted(self.ledger.items())},
            "s1_degree": {str(a): self.s1_degree(a) for a in sorted(self.ledger)},
            "s0_degree": {str(a): self.s0_degree(a) for a in sorted(self.ledger)},
        }


def _constant(u, v, w, pd, table: StructureConstantTable | None) -> int:
    if table is not None:
        return table.constant(u, v, w)
    if u.length + v.length != w.length:
        return 0
    return structure_constants_pair(u, v, pd).get(w, 0)


def star_ts_coefficient(
    u: WeylElement, v: WeylElement, w: WeylElement, pd: ParabolicData, table: StructureConstantTable | None = None
) -> DeformedCoefficient:
    c = _constant(u, v, w, pd, table)
    pu, pv, pw = (f_profile(x, pd) for x in (u, v, w))
    ledger = {}
    for a in sorted(pd.assoc):
        diff = pw.counts(a)
        diff.subtract(pu.counts(a))
        diff.subtract(pv.counts(a))
        ledger[a] = {k: d for k, d in sorted(diff.items()) if d != 0}
    return DeformedCoefficient(c, ledger)


def bk_coefficient(u, v, w, pd, table=None) -> int:
    """Coefficient under the Belkale-Kumar product at ``t = 0``."""
    return star_ts_coefficient(u, v, w, pd, table).bk


def star0_coefficient(u, v, w, pd, table=None) -> int:
    """``a_{u,v}^w``: ``c`` when ``l(w_alpha) = l(u_alpha) + l(v_alpha)`` for every alpha."""
    return star_ts_coefficient(u, v, w, pd, table).star0


def mixed_coefficient(u, v, w, pd, limit_set: Iterable[int], table=None) -> int:
    """``s_alpha -> 0`` for alpha in ``limit_set``, ``s_alpha = 1`` otherwise, then ``t = 0``."""
    limit_set = set(limit_set)
    if not limit_set <= pd.assoc:
        raise WeylError(f"limit set {sorted(limit_set)} not within assoc {sorted(pd.assoc)}")
    return star_ts_coefficient(u, v, w, pd, table).mixed(limit_set)


def region_count_inequality(u: WeylElement, v: WeylElement, w: WeylElement, pd: ParabolicData):
    """``l(u_alpha) + l(v_alpha) <= l(w_alpha)`` for every associated alpha.

    Returns ``(True, None)`` or ``(False, alpha)``.
    """
    for a in sorted(pd.assoc):
        lu = project_w_alpha(u, a).length
        lv = project_w_alpha(v, a).length
        lw = project_w_alpha(w, a).length
        if lu + lv > lw:
            return False, a
    return True, None


def _dim(rs: RootSystem, levi) -> int:
    return rs.n_positive - longest_element(rs, levi).length


def is_q_factoring(u: WeylElement, v: WeylElement, w: WeylElement, pd: ParabolicData, q_levi: Iterable[int]) -> bool:
    """Whether ``(u, v, w)`` is Q-factoring, given ``c_{u,v}^{w^vee} != 0``.

    Decided by the structure-constant criterion on ``G/Q``: codimensions of
    the heads sum to ``dim G/Q`` and their triple intersection number is
    nonzero.
    """
    q_levi = frozenset(q_levi)
    if not pd.levi < q_levi:
        raise WeylError(f"Q levi {sorted(q_levi)} must strictly contain {sorted(pd.levi)}")
    rs = u.rs
    if _constant(u, v, dual(w, pd), pd, None) == 0:
        raise WeylError("Q-factoring is only defined when c_{u,v}^{w^vee} is nonzero")
    qd = ParabolicData(rs.rank, q_levi)
    uh, _ = parabolic_decompose(u, pd.levi, q_levi)
    vh, _ = parabolic_decompose(v, pd.levi, q_levi)
    wh, _ = parabolic_decompose(w, pd.levi, q_levi)
    if uh.length + vh.length + wh.length != _dim(rs, q_levi):
        return False
    return _constant(uh, vh, dual(wh, qd), qd, None) != 0


def richmond_factorization_check(
    u: WeylElement, v: WeylElement, w: WeylElement, pd: ParabolicData, q_levi: Iterable[int]
) -> bool:
    """``a_{u,v}^w`` equals ``c_{u',v'}^{w'}(G/Q) * c_{u'',v''}^{w''}(L_Q / P cap L_Q)``."""
    q_levi = frozenset(q_levi)
    a = star0_coefficient(u, v, w, pd)
    if a == 0:
        raise WeylError("factorization check needs a nonzero star_0 coefficient")
    rs = u.rs
    qd = ParabolicData(rs.rank, q_levi)
    (uh, ut), (vh, vt), (wh, wt) = (parabolic_decompose(x, pd.levi, q_levi) for x in (u, v, w))
    head = 0
    if uh.length + vh.length == wh.length:
        head = structure_constants_pair(uh, vh, qd).get(wh, 0)
    tail = 0
    if ut.length + vt.length == wt.length:
        tail = structure_constants_pair(ut, vt, pd, gens=q_levi).get(wt, 0)
    return a == head * tail


# ---------------------------------------------------------------------------
# bulk classification


class ProfileArrays:
    """Profile statistics for every class of a table, as arrays over positions.

    ``lalpha[x, a]`` = ``l(x_alpha)``, ``s1[x, a]`` = s=1 degree and
    ``atleast[x, a, k-1]`` = filter count at level k, with columns in
    sorted-assoc order.
    """

    def __init__(self, reps: list[WeylElement], pd: ParabolicData):
        self.assoc = sorted(pd.assoc)
        kmax = reps[0].rs.max_multiplicity
        n, m = len(reps), len(self.assoc)
        self.lalpha = np.zeros((n, m), dtype=np.int64)
        self.s1 = np.zeros((n, m), dtype=np.int64)
        self.atleast = np.zeros((n, m, kmax), dtype=np.int64)
        for x, w in enumerate(reps):
            prof = _profile_any(w, self.assoc)
            for j, a in enumerate(self.assoc):
                ms = prof[a]
                self.lalpha[x, j] = len(ms)
                self.s1[x, j] = sum(ms)
                for k in range(kmax):
                    self.atleast[x, j, k] = sum(1 for e in ms if e >= k + 1)

    def column(self, alpha: int) -> int:
        return self.assoc.index(alpha)

    def star0_mask(self, u, v, w) -> np.ndarray:
        return (self.lalpha[w] == self.lalpha[u] + self.lalpha[v]).all(axis=1)

    def bk_mask(self, u, v, w) -> np.ndarray:
        return (self.s1[w] == self.s1[u] + self.s1[v]).all(axis=1)

    def mixed_mask(self, u, v, w, limit_set) -> np.ndarray:
        sel = np.array([a in set(limit_set) for a in self.assoc])
        s0 = self.lalpha[w] == self.lalpha[u] + self.lalpha[v]
        s1 = self.s1[w] == self.s1[u] + self.s1[v]
        return np.where(sel[None, :], s0, s1).all(axis=1)

    def divisibility_mask(self, u, v, w) -> np.ndarray:
        return (self.atleast[u] + self.atleast[v] <= self.atleast[w]).all(axis=(1, 2))

    def region_mask(self, u, v, w) -> np.ndarray:
        return (self.lalpha[u] + self.lalpha[v] <= self.lalpha[w]).all(axis=1)


@dataclass
class ClassificationRecord:
    type: str
    assoc: list[int]
    counts: dict[str, dict[str, int]] = field(default_factory=dict)
    convention: str = COUNTING_CONVENTION

    @property
    def nonzero_cup(self) -> int:
        return self.counts[self.convention]["nonzero_cup"]

    @property
    def nonzero_star0(self) -> int:
        return self.counts[self.convention]["nonzero_star0"]

    @property
    def levi_movable(self) -> int:
        return self.counts[self.convention]["levi_movable"]

    def as_tuple(self, convention: str | None = None) -> tuple[int, int, int]:
        c = self.counts[convention or self.convention]
        return c["nonzero_cup"], c["nonzero_star0"], c["levi_movable"]

    def to_json(self, convention: str | None = None) -> dict:
        conv = convention or self.convention
        out = {"type": self.type, "assoc": self.assoc, "convention": conv}
        out.update(self.counts[conv])
        return out

    def dumps(self) -> str:
        """Both counting variants, the frozen convention first."""
        convs = [self.convention] + [c for c in self.counts if c != self.convention]
        return "\n".join(json.dumps(self.to_json(c)) for c in convs)


def classify(table: StructureConstantTable, convention: str = COUNTING_CONVENTION, limit_set=None) -> ClassificationRecord:
    """Count nonzero cup, star_0 and Levi-movable constants under both conventions."""
    prof = ProfileArrays(table.reps, table.parabolic)
    rec = ClassificationRecord(str(table.rs.cartan_type), sorted(table.parabolic.assoc), convention=convention)
    for conv in ("ordered", "unordered"):
        u, v, w, c = table.triples(conv)
        s0 = prof.star0_mask(u, v, w)
        bk = prof.bk_mask(u, v, w)
        counts = {
            "nonzero_cup": int(len(c)),
            "nonzero_star0": int(s0.sum()),
            "levi_movable": int(bk.sum()),
        }
        if limit_set is not None:
            counts["nonzero_mixed"] = int(prof.mixed_mask(u, v, w, limit_set).sum())
        rec.counts[conv] = counts
    return rec
