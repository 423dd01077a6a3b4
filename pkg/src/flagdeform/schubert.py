"""
Schubert structure constants of G/P by torus-equivariant localization.

Restriction values ``sigma_x|_v`` are Billey subword sums along a reduced
word of ``v``.  For ``u, v`` in ``W^P`` the product ``sigma_u sigma_v`` is
recovered by an ascending-Bruhat triangular solve over the fixed points
``W^P``: at each ``w`` the equivariant coefficient is

    (sigma_u|_w sigma_v|_w - sum_{x < w} c^x sigma_x|_w) / sigma_w|_w

and the coefficients in degree ``l(u) + l(v)`` are the ordinary constants.

Two engines share that solve:

* :class:`ExactLocalization` keeps the restriction values as exact integer
  polynomials and asserts every division is exact.  Used for small groups
  and as the cross-check of the fast engine.
* :class:`ModularLocalization` specialises the simple roots to a point of
  ``F_p`` for two independent primes.  The identities hold in the polynomial
  ring, so they hold after the specialisation, and a degree-matching
  coefficient is an integer constant.  Both residues must agree and lie in
  ``[0, p/2)``; anything else aborts as an internal consistency failure.
"""

from __future__ import annotations

import csv
import hashlib
import json
import logging
import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Iterable, Iterator, Sequence

import numpy as np

from .polynomial import EquivariantPolynomial
from .rootsys import RootSystem
from .weyl import (
    DEFAULT_BOUND,
    ElementTable,
    ParabolicData,
    SIGNED_CONVENTION,
    WeylElement,
    WeylError,
    format_element,
    from_word,
    identity,
    is_min_rep,
    parse_element,
    reduced_word,
    reflection,
)

__all__ = [
    "ENGINE_VERSION",
    "InternalConsistencyError",
    "restriction_values",
    "billey_restriction",
    "ExactLocalization",
    "ModularLocalization",
    "localization",
    "structure_constants_pair",
    "StructureConstantTable",
    "full_table",
    "chevalley_multiply",
]

log = logging.getLogger(__name__)

ENGINE_VERSION = "1"
PRIMES = (67108859, 67108837)
# p < 2**26 keeps products below 2**52; contract in blocks so sums stay in int64
_BLOCK = 1024


class InternalConsistencyError(RuntimeError):
    """The triangular solve produced a non-integral or negative constant."""


# ---------------------------------------------------------------------------
# restriction values


def _word_roots(rs: RootSystem, word: Sequence[int]) -> list[int]:
    """Root ids ``s_{a_1} ... s_{a_{j-1}} (alpha_{a_j})`` along ``word``."""
    out = []
    table = rs.reflection_table
    for j, a in enumerate(word):
        rid = rs.simple_root_id(a)
        for b in reversed(word[:j]):
            rid = int(table[b - 1][rid])
        out.append(rid)
    return out


def _check_reduced(rs: RootSystem, word: Sequence[int], v: WeylElement | None = None):
    w = from_word(rs, word)
    if w.length != len(word):
        raise WeylError(f"word {list(word)} is not reduced")
    if v is not None and w != v:
        raise WeylError(f"word {list(word)} does not spell {v}")


def restriction_values(rs: RootSystem, word: Sequence[int]) -> dict[WeylElement, EquivariantPolynomial]:
    """``sigma_x|_v`` for every ``x <= v`` where ``word`` is a reduced word of ``v``.

    Dynamic programme over the letters: a subword either skips letter ``j``
    or appends it, multiplying by the ``j``-th word root, and only reduced
    subwords (length-increasing steps) are kept.
    """
    word = list(word)
    _check_reduced(rs, word)
    roots = _word_roots(rs, word)
    state = {identity(rs): EquivariantPolynomial.constant(rs.rank, 1)}
    for a, rid in zip(word, roots):
        r = EquivariantPolynomial.linear(rs.coords(rid))
        new = dict(state)
        for x, val in state.items():
            if not x.has_right_descent(a):
                y = x.times_simple(a)
                term = val * r
                new[y] = new[y] + term if y in new else term
        state = new
    return {x: p for x, p in state.items() if p}


def billey_restriction(rs: RootSystem, w: WeylElement, v: WeylElement, word: Sequence[int] | None = None) -> EquivariantPolynomial:
    """Localization of the Schubert class ``sigma_w`` at the fixed point ``v``."""
    if word is None:
        word = reduced_word(v)
    _check_reduced(rs, word, v)
    vals = restriction_values(rs, word)
    return vals.get(w, EquivariantPolynomial(rs.rank))


# ---------------------------------------------------------------------------
# engines


class _Localization:
    rs: RootSystem
    levi: frozenset
    gens: tuple[int, ...]
    reps: list[WeylElement]
    lengths: np.ndarray

    def _setup(self, rs, levi, gens, bound):
        self.rs = rs
        self.levi = frozenset(levi)
        self.table = ElementTable(rs, gens, bound=bound)
        self.gens = self.table.gens
        self.rep_rows = self.table.min_rep_indices(self.levi)
        self.reps = [self.table.element(k) for k in self.rep_rows]
        self.lengths = np.asarray(self.table.lengths[self.rep_rows])
        self.position = {w: i for i, w in enumerate(self.reps)}
        self.dim = int(self.lengths[-1])

    def pos(self, w: WeylElement) -> int:
        try:
            return self.position[w]
        except KeyError:
            raise WeylError(f"{w} is not a minimal representative for levi {sorted(self.levi)}") from None


class ExactLocalization(_Localization):
    """Triangular solve over exact integer polynomials."""

    def __init__(self, rs: RootSystem, levi: Iterable[int], gens: Iterable[int] | None = None, bound: int = DEFAULT_BOUND):
        self._setup(rs, levi, gens, bound)
        n = len(self.reps)
        zero = EquivariantPolynomial(rs.rank)
        # R[x][v] = sigma_x|_v
        self.R = [[zero] * n for _ in range(n)]
        for j, k in enumerate(self.rep_rows):
            vals = restriction_values(rs, self.table.words[k])
            for i, x in enumerate(self.reps):
                p = vals.get(x)
                if p is not None:
                    self.R[i][j] = p

    def equivariant_product(self, i: int, j: int) -> list[EquivariantPolynomial]:
        """Equivariant coefficients of ``sigma_i sigma_j`` on every class."""
        n = len(self.reps)
        coeffs = [EquivariantPolynomial(self.rs.rank)] * n
        R = self.R
        top = int(self.lengths[i] + self.lengths[j])
        for w in range(n):
            if self.lengths[w] > top:
                break
            num = R[i][w] * R[j][w]
            if num.is_zero():
                continue
            for x in range(w):
                if coeffs[x] and R[x][w]:
                    num = num - coeffs[x] * R[x][w]
            if num.is_zero():
                continue
            try:
                coeffs[w] = num.exact_div(R[w][w])
            except ArithmeticError as exc:
                raise InternalConsistencyError(str(exc)) from exc
        return coeffs

    def product(self, i: int, j: int) -> dict[int, int]:
        top = int(self.lengths[i] + self.lengths[j])
        out = {}
        for w, p in enumerate(self.equivariant_product(i, j)):
            if self.lengths[w] != top or p.is_zero():
                continue
            c = p.constant_value()
            if c < 0:
                raise InternalConsistencyError(f"negative structure constant {c}")
            out[w] = c
        return out


def _inverse_upper_mod(U: np.ndarray, p: int) -> np.ndarray:
    n = U.shape[0]
    X = np.zeros_like(U)
    for i in range(n - 1, -1, -1):
        d = int(U[i, i])
        if d % p == 0:
            raise InternalConsistencyError("singular restriction matrix mod p")
        row = np.zeros(n, dtype=np.int64)
        row[i] = 1
        if i + 1 < n:
            row = (row - _matmul_mod(U[i : i + 1, i + 1 :], X[i + 1 :, :], p)[0]) % p
        X[i, :] = (row * pow(d, -1, p)) % p
    return X


def _matmul_mod(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for s in range(0, A.shape[1], _BLOCK):
        out = (out + A[:, s : s + _BLOCK] @ B[s : s + _BLOCK, :]) % p
    return out


class ModularLocalization(_Localization):
    """Triangular solve after specialising the simple roots into ``F_p``."""

    def __init__(
        self,
        rs: RootSystem,
        levi: Iterable[int],
        gens: Iterable[int] | None = None,
        bound: int = DEFAULT_BOUND,
        primes: Sequence[int] = PRIMES,
        seed: int = 7919,
    ):
        self._setup(rs, levi, gens, bound)
        self.primes = tuple(primes)
        rng = random.Random(seed)
        self.points = {}
        self.R = {}
        self.Rinv = {}
        for p in self.primes:
            point = self._choose_point(rng, p)
            self.points[p] = point
            R = self._restriction_matrix(point, p)
            self.R[p] = R
            self.Rinv[p] = _inverse_upper_mod(R, p)

    def _choose_point(self, rng: random.Random, p: int) -> tuple[int, ...]:
        while True:
            point = tuple(rng.randrange(1, p) for _ in range(self.rs.rank))
            if all(sum(c * x for c, x in zip(r, point)) % p for r in self.rs.positive_roots):
                return point

    def _restriction_matrix(self, point, p: int) -> np.ndarray:
        rs, table = self.rs, self.table
        root_val = [sum(c * x for c, x in zip(rs.coords(r), point)) % p for r in range(2 * rs.n_positive)]
        n_el = len(table)
        ascents = {}
        for a in self.gens:
            col = table.rmul[:, a - 1]
            src = np.nonzero(table.lengths[col] > table.lengths)[0]
            ascents[a] = (src, col[src])
        rows = np.asarray(self.rep_rows)
        R = np.zeros((len(rows), len(rows)), dtype=np.int64)
        for j, k in enumerate(self.rep_rows):
            word = table.words[k]
            vals = np.zeros(n_el, dtype=np.int64)
            vals[0] = 1
            for a, rid in zip(word, _word_roots(rs, word)):
                src, dst = ascents[a]
                new = vals.copy()
                new[dst] = (new[dst] + vals[src] * root_val[rid]) % p
                vals = new
            R[:, j] = vals[rows]
        return R

    def _coefficients(self, pairs: np.ndarray, cols: np.ndarray, p: int) -> np.ndarray:
        R = self.R[p]
        F = (R[pairs[:, 0], :] * R[pairs[:, 1], :]) % p
        return _matmul_mod(F, self.Rinv[p][:, cols], p)

    def products(self, pairs: np.ndarray, chunk: int = 4096) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        """Nonzero degree-matching constants for index pairs ``pairs`` (shape (m, 2)).

        Returns flat arrays ``(u, v, w, c)`` of rep positions and constants.
        """
        pairs = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
        out_u, out_v, out_w, out_c = [], [], [], []
        if len(pairs) == 0:
            empty = np.zeros(0, dtype=np.int64)
            return empty, empty, empty, empty
        deg = self.lengths[pairs[:, 0]] + self.lengths[pairs[:, 1]]
        for d in np.unique(deg):
            cols = np.nonzero(self.lengths == d)[0]
            if len(cols) == 0:
                continue
            sel = pairs[deg == d]
            for s in range(0, len(sel), chunk):
                block = sel[s : s + chunk]
                res = [self._coefficients(block, cols, p) for p in self.primes]
                first = res[0]
                for other in res[1:]:
                    if not np.array_equal(first, other):
                        bad = np.argwhere(first != other)[0]
                        raise InternalConsistencyError(
                            f"specialisations disagree on pair {tuple(block[bad[0]])} "
                            f"class {cols[bad[1]]}: {first[tuple(bad)]} vs {other[tuple(bad)]}"
                        )
                if (first > min(self.primes) // 2).any():
                    raise InternalConsistencyError("negative or non-integral structure constant")
                r, cidx = np.nonzero(first)
                out_u.append(block[r, 0])
                out_v.append(block[r, 1])
                out_w.append(cols[cidx])
                out_c.append(first[r, cidx])
        if not out_u:
            empty = np.zeros(0, dtype=np.int64)
            return empty, empty, empty, empty
        return tuple(np.concatenate(x).astype(np.int64) for x in (out_u, out_v, out_w, out_c))

    def product(self, i: int, j: int) -> dict[int, int]:
        u, v, w, c = self.products(np.array([[i, j]]))
        return {int(a): int(b) for a, b in zip(w, c)}


_ENGINES: dict[tuple, _Localization] = {}


def localization(rs: RootSystem, levi: Iterable[int], gens: Iterable[int] | None = None, engine: str = "modular") -> _Localization:
    """Cached engine for the fixed points ``W_gens^P``."""
    gens_key = tuple(sorted(range(1, rs.rank + 1) if gens is None else set(gens)))
    key = (rs.cartan_type, frozenset(levi), gens_key, engine)
    eng = _ENGINES.get(key)
    if eng is None:
        if engine == "modular":
            eng = ModularLocalization(rs, levi, gens_key)
        elif engine == "exact":
            eng = ExactLocalization(rs, levi, gens_key)
        else:
            raise ValueError(f"unknown engine {engine!r}")
        _ENGINES[key] = eng
    return eng


def structure_constants_pair(
    u: WeylElement, v: WeylElement, pd: ParabolicData, engine: str = "modular", gens: Iterable[int] | None = None
) -> dict[WeylElement, int]:
    """All nonzero ``c_{u,v}^w`` on ``G/P`` (or on ``W_gens/W_P`` when ``gens`` is given)."""
    u._check_same(v)
    eng = localization(u.rs, pd.levi, gens, engine)
    i, j = eng.pos(u), eng.pos(v)
    return {eng.reps[w]: c for w, c in sorted(eng.product(i, j).items())}


# ---------------------------------------------------------------------------
# Chevalley oracle


def chevalley_multiply(rs: RootSystem, i: int, w: WeylElement, pd: ParabolicData) -> dict[WeylElement, int]:
    """``sigma_{s_i} sigma_w`` by the Chevalley formula.

    Sums ``<omega_i, beta^vee>`` over positive ``beta`` with ``w s_beta`` in
    ``W^P`` and one longer than ``w``.
    """
    if i in pd.levi:
        raise WeylError(f"s_{i} lies in W_P; its class vanishes on G/P")
    if not is_min_rep(w, pd.levi):
        raise WeylError(f"{w} is not in W^P")
    out: dict[WeylElement, int] = {}
    lw = w.length
    for beta in rs.positive_roots:
        y = w * reflection(rs, beta)
        if y.length == lw + 1 and is_min_rep(y, pd.levi):
            coeff = rs.coroot_coefficient(i, beta)
            if coeff:
                out[y] = out.get(y, 0) + coeff
    return out


# ---------------------------------------------------------------------------
# tables


@dataclass
class StructureConstantTable:
    """Nonzero constants of ``H^*(G/P)``.

    ``u, v, w, c`` hold positions into ``reps`` for the pairs ``u <= v`` (by
    position; positions are graded by length).  Ordered views fill in the
    symmetric half.
    """

    rs: RootSystem
    parabolic: ParabolicData
    reps: list[WeylElement]
    lengths: np.ndarray
    u: np.ndarray
    v: np.ndarray
    w: np.ndarray
    c: np.ndarray
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        self.position = {x: k for k, x in enumerate(self.reps)}
        self._lookup = None

    def __len__(self):
        return len(self.c)

    @property
    def dim(self) -> int:
        return int(self.lengths[-1])

    def index_of(self, x: WeylElement) -> int:
        try:
            return self.position[x]
        except KeyError:
            raise WeylError(f"{x} is not in W^P for {self.parabolic}") from None

    def _pos(self, x) -> int:
        return x if isinstance(x, (int, np.integer)) else self.index_of(x)

    @property
    def lookup(self) -> dict[tuple[int, int, int], int]:
        if self._lookup is None:
            self._lookup = {
                (int(a), int(b), int(d)): int(e) for a, b, d, e in zip(self.u, self.v, self.w, self.c)
            }
        return self._lookup

    def constant(self, u, v, w) -> int:
        i, j, k = self._pos(u), self._pos(v), self._pos(w)
        if i > j:
            i, j = j, i
        return self.lookup.get((i, j, k), 0)

    def product(self, u, v) -> dict[int, int]:
        i, j = self._pos(u), self._pos(v)
        if i > j:
            i, j = j, i
        mask = (self.u == i) & (self.v == j)
        return {int(a): int(b) for a, b in zip(self.w[mask], self.c[mask])}

    def ordered(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        """All triples ``(u, v, w)`` with both orders of ``u != v``."""
        off = self.u != self.v
        return (
            np.concatenate([self.u, self.v[off]]),
            np.concatenate([self.v, self.u[off]]),
            np.concatenate([self.w, self.w[off]]),
            np.concatenate([self.c, self.c[off]]),
        )

    def triples(self, convention: str = "ordered"):
        if convention == "ordered":
            return self.ordered()
        if convention == "unordered":
            return self.u, self.v, self.w, self.c
        raise ValueError(f"unknown counting convention {convention!r}")

    def count(self, convention: str = "ordered") -> int:
        return len(self.triples(convention)[0])

    # -- serialisation ------------------------------------------------------

    def header(self, notation: str = "word", convention: str = "ordered") -> dict:
        out = {
            "type": str(self.rs.cartan_type),
            "assoc": sorted(self.parabolic.assoc),
            "levi": sorted(self.parabolic.levi),
            "notation": notation,
            "convention": convention,
            "engine_version": ENGINE_VERSION,
        }
        if notation == "window" and self.rs.cartan_type.family in "BCD":
            out["window_convention"] = SIGNED_CONVENTION
        # metadata timestamps stay out so output is byte-deterministic
        out.update({k: val for k, val in self.metadata.items() if k != "created"})
        return out

    def records(self, notation: str = "word", convention: str = "ordered", extra=None) -> Iterator[dict]:
        """One dict per constant; ``extra(u, v, w)`` may add fields."""
        names = [format_element(x, notation) for x in self.reps]
        u, v, w, c = self.triples(convention)
        order = np.lexsort((w, v, u))
        for k in order:
            rec = {"u": names[u[k]], "v": names[v[k]], "w": names[w[k]], "c": int(c[k])}
            if extra is not None:
                rec.update(extra(int(u[k]), int(v[k]), int(w[k])))
            yield rec

    def to_jsonl(self, fh, notation="word", convention="ordered", extra=None):
        fh.write(json.dumps({"header": self.header(notation, convention)}, sort_keys=True) + "\n")
        for rec in self.records(notation, convention, extra):
            fh.write(json.dumps(rec) + "\n")

    def to_csv(self, fh, notation="word", convention="ordered", extra=None):
        writer = None
        hdr = self.header(notation, convention)
        fh.write("# " + json.dumps(hdr, sort_keys=True) + "\n")
        for rec in self.records(notation, convention, extra):
            if writer is None:
                writer = csv.DictWriter(fh, fieldnames=list(rec), lineterminator="\n")
                writer.writeheader()
            writer.writerow(rec)
        if writer is None:
            fh.write("u,v,w,c\n")

    @classmethod
    def from_records(cls, rs: RootSystem, pd: ParabolicData, records: Iterable[dict], notation: str = "word") -> "StructureConstantTable":
        """Rebuild a table from records (either convention)."""
        from .weyl import enumerate_min_reps

        reps = enumerate_min_reps(rs, pd)
        lengths = np.array([x.length for x in reps], dtype=np.int64)
        table = cls(rs, pd, reps, lengths, *(np.zeros(0, dtype=np.int64),) * 4)
        seen = {}
        for rec in records:
            i = table.index_of(parse_element(rs, rec["u"], notation))
            j = table.index_of(parse_element(rs, rec["v"], notation))
            k = table.index_of(parse_element(rs, rec["w"], notation))
            if i > j:
                i, j = j, i
            seen[(i, j, k)] = int(rec["c"])
        keys = sorted(seen)
        arr = np.array(keys, dtype=np.int64).reshape(-1, 3)
        table.u, table.v, table.w = arr[:, 0], arr[:, 1], arr[:, 2]
        table.c = np.array([seen[k] for k in keys], dtype=np.int64)
        return table


def _cache_path(cache_dir: str, rs: RootSystem, pd: ParabolicData) -> str:
    key = f"{rs.cartan_type}-assoc{'_'.join(map(str, sorted(pd.assoc)))}"
    return os.path.join(cache_dir, f"sct-{key}.npz")


def _load_cached(path: str, rs: RootSystem, pd: ParabolicData) -> StructureConstantTable | None:
    if not os.path.exists(path):
        return None
    try:
        data = np.load(path, allow_pickle=False)
        meta = json.loads(str(data["meta"]))
    except (OSError, ValueError, KeyError) as exc:
        log.info("ignoring unreadable cache %s (%s)", path, exc)
        return None
    if meta.get("engine_version") != ENGINE_VERSION:
        log.info("cache %s is from engine %s; rebuilding", path, meta.get("engine_version"))
        return None
    from .weyl import enumerate_min_reps

    reps = enumerate_min_reps(rs, pd)
    if meta.get("rep_digest") != _rep_digest(reps):
        log.info("cache %s indexes a different W^P ordering; rebuilding", path)
        return None
    lengths = np.array([x.length for x in reps], dtype=np.int64)
    return StructureConstantTable(
        rs, pd, reps, lengths, data["u"], data["v"], data["w"], data["c"], {"created": meta.get("created")}
    )


def _rep_digest(reps: Sequence[WeylElement]) -> str:
    h = hashlib.sha256()
    for x in reps:
        h.update(repr(x.images).encode())
    return h.hexdigest()[:16]


def full_table(
    rs: RootSystem,
    pd: ParabolicData,
    *,
    jobs: int = 1,
    cache_dir: str | None = None,
    bound: int = DEFAULT_BOUND,
) -> StructureConstantTable:
    """Every nonzero ``c_{u,v}^w`` of ``H^*(G/P)`` via the modular engine."""
    if cache_dir:
        path = _cache_path(cache_dir, rs, pd)
        cached = _load_cached(path, rs, pd)
        if cached is not None:
            return cached
    from .weyl import group_order

    if group_order(rs) > bound:
        raise WeylError(f"|W({rs.cartan_type})| = {group_order(rs)} exceeds bound {bound}")
    eng = localization(rs, pd.levi)
    lengths = eng.lengths
    n = len(eng.reps)
    iu, iv = np.triu_indices(n)
    keep = lengths[iu] + lengths[iv] <= eng.dim
    pairs = np.stack([iu[keep], iv[keep]], axis=1)
    log.info("%s %s: %d classes, %d pairs", rs.cartan_type, pd, n, len(pairs))
    n_chunks = max(1, jobs) * 4
    chunks = np.array_split(pairs, n_chunks) if len(pairs) else [pairs]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(eng.products, chunks))
    else:
        parts = [eng.products(ch) for ch in chunks]
    cols = [np.concatenate([p[k] for p in parts]) for k in range(4)]
    order = np.lexsort((cols[2], cols[1], cols[0]))
    u, v, w, c = (x[order] for x in cols)
    created = datetime.now(timezone.utc).isoformat(timespec="seconds")
    table = StructureConstantTable(rs, pd, list(eng.reps), np.asarray(lengths), u, v, w, c, {"created": created})
    if cache_dir:
        os.makedirs(cache_dir, exist_ok=True)
        meta = {"engine_version": ENGINE_VERSION, "created": created, "rep_digest": _rep_digest(eng.reps)}
        tmp = path + ".tmp.npz"
        np.savez_compressed(tmp, u=u, v=v, w=w, c=c, meta=np.array(json.dumps(meta)))
        os.replace(tmp, path)
    return table
