"""
Property suites over whole tables.

Each suite returns a :class:`SuiteResult`; on failure ``counterexample``
names the first violating case (smallest positions first).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import oracles
from .deform import ProfileArrays, _profile_any, richmond_factorization_check
from .rootsys import RootSystem
from .schubert import StructureConstantTable, chevalley_multiply, full_table, localization
from .weyl import ParabolicData, enumerate_group, project_w_alpha, simple_reflection, to_permutation

SUITES = ("divisibility", "associativity", "degree-identity", "region-count", "richmond", "oracle-equivalence")


@dataclass
class SuiteResult:
    suite: str
    target: str
    checked: int
    passed: bool
    counterexample: str | None = None
    notes: list[str] = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = f"{status} {self.suite} {self.target}: {self.checked} checked"
        if self.counterexample:
            out += f"; counterexample {self.counterexample}"
        return out


def _names(table: StructureConstantTable, *idx) -> str:
    return ", ".join(repr(table.reps[int(i)]) for i in idx)


def divisibility(table: StructureConstantTable, sample: int | None = None, seed: int = 0) -> SuiteResult:
    """Filter-count divisibility for every (or a sample of) nonzero constant."""
    prof = ProfileArrays(table.reps, table.parabolic)
    u, v, w, _ = table.ordered()
    if sample is not None and sample < len(u):
        pick = np.sort(np.random.default_rng(seed).choice(len(u), size=sample, replace=False))
        u, v, w = u[pick], v[pick], w[pick]
    ok = prof.divisibility_mask(u, v, w)
    bad = np.nonzero(~ok)[0]
    res = SuiteResult("divisibility", _target(table), len(u), not len(bad))
    if len(bad):
        k = bad[0]
        res.counterexample = _names(table, u[k], v[k], w[k])
    return res


def region_count(table: StructureConstantTable) -> SuiteResult:
    prof = ProfileArrays(table.reps, table.parabolic)
    u, v, w, _ = table.ordered()
    ok = prof.region_mask(u, v, w)
    bad = np.nonzero(~ok)[0]
    res = SuiteResult("region-count", _target(table), len(u), not len(bad))
    if len(bad):
        res.counterexample = _names(table, u[bad[0]], v[bad[0]], w[bad[0]])
    return res


def _dense(n: int, u, v, w, c) -> np.ndarray:
    C = np.zeros((n, n, n), dtype=np.int64)
    C[u, v, w] = c
    return C


def associativity(table: StructureConstantTable, which=("cup", "star0", "bk")) -> list[SuiteResult]:
    """Four-index check ``sum_x c_{uv}^x c_{xw}^y == sum_x c_{vw}^x c_{ux}^y``."""
    prof = ProfileArrays(table.reps, table.parabolic)
    u, v, w, c = table.ordered()
    n = len(table.reps)
    out = []
    for name in which:
        if name == "cup":
            mask = np.ones(len(c), dtype=bool)
        elif name == "star0":
            mask = prof.star0_mask(u, v, w)
        elif name == "bk":
            mask = prof.bk_mask(u, v, w)
        else:
            raise ValueError(name)
        C = _dense(n, u[mask], v[mask], w[mask], c[mask])
        flat = C.reshape(n * n, n)
        # left[u,v,w,y] = sum_x C[u,v,x] C[x,w,y]
        left = (flat @ C.reshape(n, n * n)).reshape(n, n, n, n)
        # right[u,v,w,y] = sum_x C[v,w,x] C[u,x,y]
        right = np.einsum("vwx,uxy->uvwy", C, C, optimize=True)
        bad = np.argwhere(left != right)
        res = SuiteResult(f"associativity[{name}]", _target(table), n**4, not len(bad))
        if len(bad):
            res.counterexample = _names(table, *bad[0])
        out.append(res)
    return out


def degree_identity(rs: RootSystem) -> SuiteResult:
    """Profile size at alpha equals ``l(w_alpha)`` for every ``w`` in W and every alpha."""
    assoc = range(1, rs.rank + 1)
    checked = 0
    for w in enumerate_group(rs):
        prof = _profile_any(w, assoc)
        for a in assoc:
            checked += 1
            if prof.size(a) != project_w_alpha(w, a).length:
                return SuiteResult("degree-identity", str(rs.cartan_type), checked, False, f"{w!r} alpha_{a}")
    return SuiteResult("degree-identity", str(rs.cartan_type), checked, True)


def richmond(table: StructureConstantTable) -> SuiteResult:
    """Factorization of every nonzero ``a_{u,v}^w`` through each maximal Q above P."""
    pd = table.parabolic
    prof = ProfileArrays(table.reps, pd)
    u, v, w, _ = table.ordered()
    mask = prof.star0_mask(u, v, w)
    checked = 0
    for a in sorted(pd.assoc):
        q_levi = frozenset(range(1, pd.rank + 1)) - {a}
        for i, j, k in zip(u[mask], v[mask], w[mask]):
            checked += 1
            x, y, z = table.reps[i], table.reps[j], table.reps[k]
            if not richmond_factorization_check(x, y, z, pd, q_levi):
                return SuiteResult("richmond", _target(table), checked, False, f"{_names(table, i, j, k)} at P_{a}")
    return SuiteResult("richmond", _target(table), checked, True)


def oracle_equivalence(rs: RootSystem) -> list[SuiteResult]:
    """Localization against the Chevalley formula, the exact engine and (type A) Schubert polynomials."""
    pd = ParabolicData.borel(rs.rank)
    eng = localization(rs, pd.levi)
    target = f"{rs.cartan_type} G/B"
    results = []

    checked, bad = 0, None
    for i in range(1, rs.rank + 1):
        si = simple_reflection(rs, i)
        pi = eng.pos(si)
        for w in eng.reps:
            checked += 1
            got = {eng.reps[k]: c for k, c in eng.product(pi, eng.pos(w)).items()}
            if got != chevalley_multiply(rs, i, w, pd):
                bad = f"s{i} * {w!r}"
                break
        if bad:
            break
    results.append(SuiteResult("oracle-equivalence[chevalley]", target, checked, bad is None, bad))

    if len(eng.reps) <= 48:
        ex = localization(rs, pd.levi, engine="exact")
        n = len(eng.reps)
        checked, bad = 0, None
        for i in range(n):
            for j in range(i, n):
                checked += 1
                if eng.product(i, j) != ex.product(i, j):
                    bad = _names_list(eng.reps, i, j)
                    break
            if bad:
                break
        results.append(SuiteResult("oracle-equivalence[exact]", target, checked, bad is None, bad))

    if rs.cartan_type.family == "A" and rs.rank <= 3:
        table = full_table(rs, pd)
        expect = oracles.all_constants(rs.rank + 1)
        got = {}
        u, v, w, c = table.ordered()
        for a, b, d, e in zip(u, v, w, c):
            key = tuple(tuple(to_permutation(table.reps[x])) for x in (a, b, d))
            got[key] = int(e)
        ok = got == expect
        bad = None
        if not ok:
            diff = sorted(set(got.items()) ^ set(expect.items()))
            bad = str(diff[0])
        results.append(SuiteResult("oracle-equivalence[schubert-polynomial]", target, len(expect), ok, bad))
    return results


def _names_list(reps, *idx) -> str:
    return ", ".join(repr(reps[i]) for i in idx)


def _target(table: StructureConstantTable) -> str:
    pd = table.parabolic
    if not pd.levi:
        return f"{table.rs.cartan_type} G/B"
    return f"{table.rs.cartan_type} {pd}"


def run_suite(name: str, rs: RootSystem, pd: ParabolicData, *, sample: int | None = None, seed: int = 0, jobs: int = 1, cache_dir=None) -> list[SuiteResult]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if name == "degree-identity":
        return [degree_identity(rs)]
    if name == "oracle-equivalence":
        return oracle_equivalence(rs)
    table = full_table(rs, pd, jobs=jobs, cache_dir=cache_dir)
    if name == "divisibility":
        return [divisibility(table, sample=sample, seed=seed)]
    if name == "associativity":
        return associativity(table)
    if name == "region-count":
        return [region_count(table)]
    return [richmond(table)]
