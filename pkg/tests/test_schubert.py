import io
import json

import numpy as np
import pytest

from flagdeform import oracles
from flagdeform.polynomial import EquivariantPolynomial as P
from flagdeform.rootsys import build
from flagdeform.schubert import (
    ENGINE_VERSION,
    InternalConsistencyError,
    ModularLocalization,
    StructureConstantTable,
    billey_restriction,
    chevalley_multiply,
    full_table,
    localization,
    restriction_values,
    structure_constants_pair,
)
from flagdeform.verify import associativity, oracle_equivalence
from flagdeform.weyl import (
    ParabolicData,
    WeylError,
    dual,
    enumerate_group,
    enumerate_min_reps,
    from_word,
    identity,
    reduced_word,
    reflection,
    simple_reflection,
    to_permutation,
)

from conftest import table_for


def root_product(rs, roots):
    out = P.constant(rs.rank, 1)
    for r in roots:
        out = out * P.linear(r)
    return out


# ---------------------------------------------------------------- restrictions

@pytest.mark.parametrize("t", ["A3", "B3", "C3", "G2"])
def test_self_restriction_is_product_of_inverse_inversions(t):
    rs = build(t)
    for w in enumerate_group(rs):
        assert billey_restriction(rs, w, w) == root_product(rs, w.inverse().inversions())


@pytest.mark.parametrize("t", ["A3", "B3", "G2"])
def test_restriction_independent_of_reduced_word(t):
    rs = build(t)
    for v in enumerate_group(rs):
        other = reduced_word(v.inverse())[::-1]
        assert restriction_values(rs, reduced_word(v)) == restriction_values(rs, other)


@pytest.mark.parametrize("t", ["A3", "B3"])
def test_restriction_support_and_degree(t):
    rs = build(t)
    for v in enumerate_group(rs):
        for x, p in restriction_values(rs, reduced_word(v)).items():
            assert p.is_homogeneous(x.length)
            assert all(c > 0 for c in p.terms.values())


@pytest.mark.parametrize("t", ["A3", "B3"])
def test_gkm_condition(t):
    rs = build(t)
    elems = enumerate_group(rs)
    vals = {v: restriction_values(rs, reduced_word(v)) for v in elems}
    zero = P(rs.rank)
    for beta in rs.positive_roots:
        sb = reflection(rs, beta)
        lin = P.linear(beta)
        for v in elems:
            for x in elems:
                diff = vals[v].get(x, zero) - vals[sb * v].get(x, zero)
                diff.exact_div(lin)


def test_a2_restrictions():
    rs = build("A2")
    s1, s2 = simple_reflection(rs, 1), simple_reflection(rs, 2)
    w0 = from_word(rs, [1, 2, 1])
    # sigma_{s1} at w0 = s1 s2 s1: word roots a1, a1+a2, a2; s1 occurs at letters 1 and 3
    assert billey_restriction(rs, s1, w0) == P.linear([1, 0]) + P.linear([0, 1])
    assert billey_restriction(rs, s2, w0) == P.linear([1, 1])
    assert billey_restriction(rs, identity(rs), w0) == P.constant(2, 1)
    assert billey_restriction(rs, s1, s2).is_zero()


def test_restriction_rejects_bad_words():
    rs = build("A2")
    with pytest.raises(WeylError):
        restriction_values(rs, [1, 1])
    with pytest.raises(WeylError):
        billey_restriction(rs, identity(rs), from_word(rs, [1, 2]), word=[2, 1])


# ---------------------------------------------------------------- constants

@pytest.mark.parametrize("n", [2, 3])
def test_type_a_against_schubert_polynomials(n):
    table = table_for(f"A{n}")
    got = {}
    for a, b, d, e in zip(*table.ordered()):
        got[tuple(tuple(to_permutation(table.reps[x])) for x in (a, b, d))] = int(e)
    assert got == oracles.all_constants(n + 1)


def test_schubert_polynomial_oracle_sanity():
    assert dict(oracles.schubert_polynomial((2, 1, 3))) == {(1, 0, 0): 1}
    assert dict(oracles.schubert_polynomial((1, 3, 2))) == {(1, 0, 0): 1, (0, 1, 0): 1}
    assert oracles.structure_constant((2, 1, 3), (1, 3, 2), (3, 1, 2)) == 1


def test_a2_products():
    # S_{s1} = x1 and S_{s2} = x1 + x2, so x1 * x1 = S_{312} and x1 (x1 + x2) = S_{312} + S_{231}
    rs = build("A2")
    pd = ParabolicData.borel(2)
    s1, s2 = simple_reflection(rs, 1), simple_reflection(rs, 2)
    s12, s21 = from_word(rs, [1, 2]), from_word(rs, [2, 1])
    assert to_permutation(s21) == [3, 1, 2] and to_permutation(s12) == [2, 3, 1]
    assert structure_constants_pair(s1, s2, pd) == {s12: 1, s21: 1}
    assert structure_constants_pair(s1, s1, pd) == {s21: 1}
    assert structure_constants_pair(s2, s2, pd) == {s12: 1}


def test_grassmannian_gr24():
    rs = build("A3")
    pd = ParabolicData.from_assoc(3, [2])
    s2, s12, s32 = (from_word(rs, w) for w in ([2], [1, 2], [3, 2]))
    assert structure_constants_pair(s2, s2, pd) == {s12: 1, s32: 1}
    pt = from_word(rs, [2, 1, 3, 2])
    assert structure_constants_pair(s12, s12, pd) == {pt: 1}
    assert structure_constants_pair(s32, s32, pd) == {pt: 1}
    assert structure_constants_pair(s12, s32, pd) == {}


@pytest.mark.parametrize("t, assoc", [("B3", None), ("C3", None), ("G2", None), ("B3", [2]), ("C3", [1, 3]), ("D4", [2])])
def test_chevalley_formula(t, assoc):
    rs = build(t)
    pd = ParabolicData.borel(rs.rank) if assoc is None else ParabolicData.from_assoc(rs.rank, assoc)
    for i in sorted(pd.assoc):
        si = simple_reflection(rs, i)
        for w in enumerate_min_reps(rs, pd):
            assert structure_constants_pair(si, w, pd) == chevalley_multiply(rs, i, w, pd)


def test_chevalley_b2_multiplicity_two():
    rs = build("B2")
    pd = ParabolicData.borel(2)
    # sigma_{s1}^2: beta = alpha_1 + alpha_2 = e_1 is short with coroot
    # 2 alpha_1^vee + alpha_2^vee, so <omega_1, beta^vee> = 2
    s1, s2 = simple_reflection(rs, 1), simple_reflection(rs, 2)
    assert chevalley_multiply(rs, 1, s1, pd) == {from_word(rs, [2, 1]): 2}
    assert chevalley_multiply(rs, 2, s2, pd) == {from_word(rs, [1, 2]): 1}
    assert chevalley_multiply(rs, 1, s2, pd) == {from_word(rs, [2, 1]): 1, from_word(rs, [1, 2]): 1}


@pytest.mark.parametrize("t, assoc", [("B3", None), ("B3", [1, 2]), ("C3", [1]), ("A3", [2]), ("G2", [1])])
def test_poincare_duality(t, assoc):
    table = table_for(t, assoc)
    pd = table.parabolic
    top = int(table.lengths[-1])
    n = len(table.reps)
    for i, u in enumerate(table.reps):
        d = table.index_of(dual(u, pd))
        for j in range(n):
            if table.lengths[i] + table.lengths[j] == top:
                assert table.constant(i, j, n - 1) == (1 if j == d else 0)


def test_constants_are_positive_and_graded(b4_24):
    t = b4_24
    assert (t.c > 0).all()
    assert (t.lengths[t.u] + t.lengths[t.v] == t.lengths[t.w]).all()


def test_identity_is_unit(b3_gb):
    for k in range(len(b3_gb.reps)):
        assert b3_gb.product(0, k) == {k: 1}


@pytest.mark.parametrize("t, assoc", [("B3", None), ("B3", [1, 2]), ("C3", [2, 3])])
def test_associativity(t, assoc):
    for res in associativity(table_for(t, assoc), which=("cup",)):
        assert res.passed, res.counterexample


@pytest.mark.parametrize("t, assoc", [("B3", [1]), ("B3", [2, 3]), ("A3", [2]), ("C3", [1, 3])])
def test_partial_flag_embeds_in_full_flag(t, assoc):
    part, full = table_for(t, assoc), table_for(t)
    pos = [full.index_of(x) for x in part.reps]
    for a, b, d, e in zip(part.u, part.v, part.w, part.c):
        assert full.constant(pos[a], pos[b], pos[d]) == e
    # and nothing in the full table lands back in W^P without being recorded
    back = {p: k for k, p in enumerate(pos)}
    for a, b, d, e in zip(full.u, full.v, full.w, full.c):
        if a in back and b in back and d in back:
            assert part.constant(back[a], back[b], back[d]) == e


@pytest.mark.parametrize("t", ["A2", "B2", "G2", "B3", "C3"])
def test_exact_engine_agrees(t):
    for res in oracle_equivalence(build(t)):
        assert res.passed, res.counterexample


def test_exact_engine_parabolic():
    rs = build("C3")
    levi = [2]
    ex, mod = localization(rs, levi, engine="exact"), localization(rs, levi)
    assert ex.reps == mod.reps
    n = len(ex.reps)
    for i in range(n):
        for j in range(i, n):
            assert ex.product(i, j) == mod.product(i, j)


def test_subgroup_engine():
    # W_Q for Q levi {2,3} in B3 is W(B2) with letters shifted by one
    rs, sub = build("B3"), build("B2")
    eng = localization(rs, [], gens=[2, 3])
    ref = localization(sub, [])
    assert [[a - 1 for a in reduced_word(x)] for x in eng.reps] == [reduced_word(x) for x in ref.reps]
    n = len(ref.reps)
    for i in range(n):
        for j in range(i, n):
            assert eng.product(i, j) == ref.product(i, j)


def test_disagreeing_specialisations_abort():
    rs = build("A2")
    eng = ModularLocalization(rs, [])
    p = eng.primes[1]
    eng.R[p] = eng.R[p].copy()
    eng.R[p][0, 5] = (eng.R[p][0, 5] + 1) % p
    with pytest.raises(InternalConsistencyError):
        eng.products(np.array([[1, 2], [0, 5]]))


def test_pair_rejects_non_minimal():
    rs = build("B3")
    pd = ParabolicData.from_assoc(3, [2])
    with pytest.raises(WeylError):
        structure_constants_pair(simple_reflection(rs, 1), identity(rs), pd)
    with pytest.raises(WeylError):
        chevalley_multiply(rs, 1, identity(rs), pd)


# ---------------------------------------------------------------- tables

def test_counts_conventions(b3_gb):
    ordered, unordered = b3_gb.count("ordered"), b3_gb.count("unordered")
    diag = int((b3_gb.u == b3_gb.v).sum())
    assert ordered == 2 * unordered - diag
    with pytest.raises(ValueError):
        b3_gb.count("sideways")


@pytest.mark.parametrize("notation", ["word", "window"])
@pytest.mark.parametrize("convention", ["ordered", "unordered"])
def test_jsonl_round_trip(b3_12, notation, convention):
    buf = io.StringIO()
    b3_12.to_jsonl(buf, notation, convention)
    lines = buf.getvalue().splitlines()
    header = json.loads(lines[0])["header"]
    assert header["type"] == "B3" and header["assoc"] == [1, 2]
    assert header["engine_version"] == ENGINE_VERSION
    assert len(lines) - 1 == b3_12.count(convention)
    back = StructureConstantTable.from_records(b3_12.rs, b3_12.parabolic, map(json.loads, lines[1:]), notation)
    for name in "uvwc":
        assert np.array_equal(getattr(back, name), getattr(b3_12, name))


def test_csv_round_trip(b3_12):
    import csv

    buf = io.StringIO()
    b3_12.to_csv(buf, "window")
    lines = buf.getvalue().splitlines()
    assert lines[0].startswith("# ")
    rows = list(csv.DictReader(lines[1:]))
    back = StructureConstantTable.from_records(b3_12.rs, b3_12.parabolic, rows, "window")
    assert np.array_equal(back.c, b3_12.c) and np.array_equal(back.w, b3_12.w)


def test_cache(tmp_path):
    rs, pd = build("B3"), ParabolicData.from_assoc(3, [2, 3])
    first = full_table(rs, pd, cache_dir=str(tmp_path))
    files = list(tmp_path.iterdir())
    assert len(files) == 1
    again = full_table(rs, pd, cache_dir=str(tmp_path))
    assert np.array_equal(first.c, again.c) and np.array_equal(first.w, again.w)
    files[0].write_bytes(b"not a cache")
    rebuilt = full_table(rs, pd, cache_dir=str(tmp_path))
    assert np.array_equal(first.c, rebuilt.c)


def test_cache_version_mismatch(tmp_path, monkeypatch):
    import flagdeform.schubert as sch

    rs, pd = build("A3"), ParabolicData.borel(3)
    full_table(rs, pd, cache_dir=str(tmp_path))
    monkeypatch.setattr(sch, "ENGINE_VERSION", "999")
    assert sch._load_cached(sch._cache_path(str(tmp_path), rs, pd), rs, pd) is None


def test_jobs_do_not_change_the_table():
    rs, pd = build("B3"), ParabolicData.borel(3)
    one, four = full_table(rs, pd, jobs=1), full_table(rs, pd, jobs=4)
    for name in "uvwc":
        assert np.array_equal(getattr(one, name), getattr(four, name))


def test_bound(b3_gb):
    with pytest.raises(WeylError):
        full_table(build("B4"), ParabolicData.borel(4), bound=100)
