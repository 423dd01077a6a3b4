"""
Weyl group elements, parabolic quotients and element notation.

An element is stored canonically by the images of the simple roots, each
recorded as a root id of its :class:`~flagdeform.rootsys.RootSystem`.  This
is the same information as the integer action matrix on simple-root
coordinates (``WeylElement.matrix``), so equality and hashing are
structural.

Parabolics follow the "associated roots" naming: ``ParabolicData.from_assoc``
takes the simple roots inverted by some minimal coset representative, and
the Levi is their complement.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .rootsys import RootSystem, build

__all__ = [
    "WeylElement",
    "WeylError",
    "ParabolicData",
    "ElementTable",
    "identity",
    "simple_reflection",
    "from_word",
    "reflection",
    "longest_element",
    "enumerate_group",
    "enumerate_min_reps",
    "min_coset_rep",
    "project_w_alpha",
    "parabolic_decompose",
    "dual",
    "bruhat_leq",
    "reduced_word",
    "is_min_rep",
    "format_element",
    "parse_element",
    "SIGNED_CONVENTION",
    "to_permutation",
    "from_permutation",
    "to_signed_window",
    "from_signed_window",
    "group_order",
    "DEFAULT_BOUND",
]

DEFAULT_BOUND = 10**6


class WeylError(ValueError):
    """Invalid element, notation or parabolic data."""


class WeylElement:
    """Element of the Weyl group of ``rs``.

    ``images[j]`` is the root id of ``w(alpha_{j+1})``.
    """

    __slots__ = ("rs", "images", "_perm", "_hash")

    def __init__(self, rs: RootSystem, images: Sequence[int]):
        self.rs = rs
        self.images = tuple(int(x) for x in images)
        self._perm = None
        self._hash = hash((rs.cartan_type, self.images))

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.rs is other.rs and self.images == other.images

    def __hash__(self):
        return self._hash

    def __repr__(self):
        word = " ".join(f"s{i}" for i in reduced_word(self)) or "e"
        return f"WeylElement({self.rs.cartan_type}: {word})"

    @property
    def root_perm(self) -> tuple[int, ...]:
        """Image of every root id under ``w``."""
        if self._perm is None:
            rs = self.rs
            npos = rs.n_positive
            cols = [rs.coords(r) for r in self.images]
            perm = [0] * (2 * npos)
            lookup = rs.root_index
            for j, root in enumerate(rs.positive_roots):
                img = [0] * rs.rank
                for c, col in zip(root, cols):
                    if c:
                        for k in range(rs.rank):
                            img[k] += c * col[k]
                rid = lookup[tuple(img)]
                perm[j] = rid
                perm[npos + j] = rs.negate(rid)
            self._perm = tuple(perm)
        return self._perm

    @property
    def matrix(self) -> np.ndarray:
        """Integer matrix whose column j is ``w(alpha_{j+1})``."""
        return np.array([self.rs.coords(r) for r in self.images], dtype=np.int64).T

    def apply(self, root) -> tuple[int, ...]:
        rid = self.rs.root_index[tuple(root)]
        return self.rs.coords(self.root_perm[rid])

    def _check_same(self, other: "WeylElement"):
        if self.rs is not other.rs:
            raise WeylError(
                f"elements of different root systems: {self.rs.cartan_type}, "
                f"{other.rs.cartan_type}"
            )

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        self._check_same(other)
        perm = self.root_perm
        return WeylElement(self.rs, [perm[r] for r in other.images])

    def inverse(self) -> "WeylElement":
        rs = self.rs
        perm = self.root_perm
        where = {img: src for src, img in enumerate(perm)}
        return WeylElement(rs, [where[rs.simple_root_id(j)] for j in range(1, rs.rank + 1)])

    def times_simple(self, i: int) -> "WeylElement":
        """Right multiplication ``w s_i``."""
        rs = self.rs
        ci = rs.coords(self.images[i - 1])
        row = rs.cartan_matrix[i - 1]
        out = []
        for j, img in enumerate(self.images):
            a = row[j]
            if a == 0:
                out.append(img)
            else:
                cj = rs.coords(img)
                out.append(rs.root_index[tuple(x - a * y for x, y in zip(cj, ci))])
        return WeylElement(rs, out)

    def simple_times(self, i: int) -> "WeylElement":
        """Left multiplication ``s_i w``."""
        table = self.rs.reflection_table[i - 1]
        return WeylElement(self.rs, [int(table[r]) for r in self.images])

    def has_right_descent(self, i: int) -> bool:
        return not self.rs.is_positive(self.images[i - 1])

    def right_descents(self) -> tuple[int, ...]:
        return tuple(j + 1 for j, r in enumerate(self.images) if not self.rs.is_positive(r))

    @property
    def length(self) -> int:
        npos = self.rs.n_positive
        return sum(1 for r in self.root_perm[:npos] if r >= npos)

    def inversions(self) -> tuple[tuple[int, ...], ...]:
        """Positive roots sent to negative roots, in root-list order."""
        rs = self.rs
        npos = rs.n_positive
        return tuple(rs.positive_roots[j] for j, r in enumerate(self.root_perm[:npos]) if r >= npos)

    def inversion_ids(self) -> tuple[int, ...]:
        npos = self.rs.n_positive
        return tuple(j for j, r in enumerate(self.root_perm[:npos]) if r >= npos)

    def is_identity(self) -> bool:
        return all(r == self.rs.simple_root_id(j + 1) for j, r in enumerate(self.images))


def identity(rs: RootSystem) -> WeylElement:
    return WeylElement(rs, [rs.simple_root_id(j) for j in range(1, rs.rank + 1)])


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    return identity(rs).times_simple(i)


def from_word(rs: RootSystem, word: Iterable[int]) -> WeylElement:
    w = identity(rs)
    for i in word:
        rs._check_index(i)
        w = w.times_simple(i)
    return w


def reflection(rs: RootSystem, root) -> WeylElement:
    """The reflection ``s_beta`` through a (positive or negative) root."""
    root = tuple(root)
    out = []
    for j in range(1, rs.rank + 1):
        aj = rs.simple_root(j)
        # <alpha_j, beta^vee> = 2 (alpha_j, beta) / (beta, beta)
        pairing = 2 * rs.inner(aj, root) / rs.inner(root, root)
        assert pairing.denominator == 1
        img = tuple(x - int(pairing) * y for x, y in zip(aj, root))
        out.append(rs.root_index[img])
    return WeylElement(rs, out)


def longest_element(rs: RootSystem, levi: Iterable[int] | None = None) -> WeylElement:
    """Longest element of W, or of the parabolic subgroup generated by ``levi``."""
    gens = sorted(range(1, rs.rank + 1) if levi is None else set(levi))
    w = identity(rs)
    while True:
        for i in gens:
            if not w.has_right_descent(i):
                w = w.times_simple(i)
                break
        else:
            return w


def reduced_word(w: WeylElement) -> list[int]:
    """A reduced word ``[a_1, ..., a_l]`` with ``w = s_{a_1} ... s_{a_l}``.

    Peels off the smallest right descent each step.
    """
    word = []
    while True:
        ds = w.right_descents()
        if not ds:
            break
        word.append(ds[0])
        w = w.times_simple(ds[0])
    word.reverse()
    return word


def is_min_rep(w: WeylElement, levi: Iterable[int]) -> bool:
    """``w`` is the shortest element of ``w W_levi``."""
    return not any(w.has_right_descent(j) for j in levi)


def min_coset_rep(w: WeylElement, levi: Iterable[int]) -> WeylElement:
    levi = sorted(set(levi))
    while True:
        for j in levi:
            if w.has_right_descent(j):
                w = w.times_simple(j)
                break
        else:
            return w


def project_w_alpha(w: WeylElement, alpha_index: int) -> WeylElement:
    """Minimal representative of ``w W_{P_alpha}`` for the maximal parabolic of alpha."""
    w.rs._check_index(alpha_index)
    levi = [j for j in range(1, w.rs.rank + 1) if j != alpha_index]
    return min_coset_rep(w, levi)


@dataclass(frozen=True)
class ParabolicData:
    """A standard parabolic, by Levi generators and associated simple roots."""

    rank: int
    levi: frozenset[int]

    def __post_init__(self):
        if not self.levi <= frozenset(range(1, self.rank + 1)):
            raise WeylError(f"levi {sorted(self.levi)} not within 1..{self.rank}")

    @property
    def assoc(self) -> frozenset[int]:
        return frozenset(range(1, self.rank + 1)) - self.levi

    @classmethod
    def from_assoc(cls, rank: int, assoc: Iterable[int]) -> "ParabolicData":
        assoc = frozenset(assoc)
        bad = sorted(a for a in assoc if not 1 <= a <= rank)
        if bad:
            raise WeylError(f"associated roots {bad} out of range 1..{rank}")
        if not assoc:
            raise WeylError("empty set of associated roots (P = G)")
        return cls(rank, frozenset(range(1, rank + 1)) - assoc)

    @classmethod
    def from_levi(cls, rank: int, levi: Iterable[int]) -> "ParabolicData":
        return cls(rank, frozenset(levi))

    @classmethod
    def borel(cls, rank: int) -> "ParabolicData":
        return cls(rank, frozenset())

    def __str__(self):
        return "assoc{" + ",".join(map(str, sorted(self.assoc))) + "}"


def _levi_of(pd_or_levi) -> frozenset[int]:
    if isinstance(pd_or_levi, ParabolicData):
        return pd_or_levi.levi
    return frozenset(pd_or_levi)


def parabolic_decompose(w: WeylElement, p_levi, q_levi) -> tuple[WeylElement, WeylElement]:
    """Split ``w`` in ``W^P`` as ``w' w''`` with ``w'`` in ``W^Q`` and ``w''`` in ``W^P cap W_Q``."""
    p_levi, q_levi = _levi_of(p_levi), _levi_of(q_levi)
    if not p_levi <= q_levi:
        raise WeylError(f"levi {sorted(q_levi)} does not contain {sorted(p_levi)}")
    if not is_min_rep(w, p_levi):
        raise WeylError(f"{w} is not a minimal coset representative for levi {sorted(p_levi)}")
    head = min_coset_rep(w, q_levi)
    tail = head.inverse() * w
    return head, tail


def dual(w: WeylElement, pd: ParabolicData) -> WeylElement:
    """Poincare dual index ``w0 w w0^P``."""
    if not is_min_rep(w, pd.levi):
        raise WeylError(f"{w} is not in W^P for {pd}")
    rs = w.rs
    return longest_element(rs) * w * longest_element(rs, pd.levi)


_BRUHAT_MEMO: dict[tuple, bool] = {}


def bruhat_leq(u: WeylElement, w: WeylElement) -> bool:
    """Bruhat order ``u <= w``.

    Recurses along a right descent ``s`` of ``w``: ``u <= w`` iff
    ``min(u, us) <= ws``, which is the subword property read off one
    reduced word of ``w``.
    """
    u._check_same(w)
    key = (u.rs.cartan_type, u.images, w.images)
    hit = _BRUHAT_MEMO.get(key)
    if hit is not None:
        return hit
    lu, lw = u.length, w.length
    if lu > lw:
        res = False
    elif lu == lw:
        res = u == w
    elif lu == 0:
        res = True
    else:
        s = w.right_descents()[0]
        ws = w.times_simple(s)
        us = u.times_simple(s) if u.has_right_descent(s) else u
        res = bruhat_leq(us, ws)
    _BRUHAT_MEMO[key] = res
    return res


class ElementTable:
    """Frozen indexed enumeration of a standard parabolic subgroup ``W_gens``.

    Elements are graded by length (breadth-first by right multiplication).
    ``rmul[x, i-1]`` is the index of ``x s_i`` (``-1`` when ``i`` is not a
    generator).  ``words[x]`` is a reduced word for element ``x``.
    """

    def __init__(self, rs: RootSystem, gens: Iterable[int] | None = None, bound: int = DEFAULT_BOUND):
        self.rs = rs
        self.gens = tuple(sorted(range(1, rs.rank + 1) if gens is None else set(gens)))
        for g in self.gens:
            rs._check_index(g)
        start = identity(rs)
        keys = [start.images]
        index = {start.images: 0}
        words: list[tuple[int, ...]] = [()]
        lengths = [0]
        rmul_rows: list[list[int]] = []
        pos = 0
        coords = rs.coords
        lookup = rs.root_index
        cm = rs.cartan_matrix
        npos = rs.n_positive
        while pos < len(keys):
            imgs = keys[pos]
            row = [-1] * rs.rank
            for i in self.gens:
                ci = coords(imgs[i - 1])
                arow = cm[i - 1]
                new = []
                for j, img in enumerate(imgs):
                    a = arow[j]
                    if a == 0:
                        new.append(img)
                    else:
                        cj = coords(img)
                        new.append(lookup[tuple(x - a * y for x, y in zip(cj, ci))])
                new = tuple(new)
                k = index.get(new)
                if k is None:
                    k = len(keys)
                    if k >= bound:
                        raise WeylError(
                            f"group generated by {list(self.gens)} in {rs.cartan_type} "
                            f"exceeds enumeration bound {bound}"
                        )
                    index[new] = k
                    keys.append(new)
                    words.append(words[pos] + (i,))
                    lengths.append(lengths[pos] + 1)
                row[i - 1] = k
            rmul_rows.append(row)
            pos += 1
        del npos
        self.keys = keys
        self.index = index
        self.words = words
        self.lengths = np.array(lengths, dtype=np.int64)
        self.rmul = np.array(rmul_rows, dtype=np.int64).reshape(len(keys), rs.rank)
        self.lengths.setflags(write=False)
        self.rmul.setflags(write=False)

    def __len__(self):
        return len(self.keys)

    def element(self, k: int) -> WeylElement:
        return WeylElement(self.rs, self.keys[k])

    def index_of(self, w: WeylElement) -> int:
        return self.index[w.images]

    def min_rep_indices(self, levi: Iterable[int]) -> list[int]:
        """Indices of the minimal representatives of ``W_gens / W_levi``.

        Sorted by length, ties by the canonical key, matching
        :func:`enumerate_min_reps`.
        """
        levi = frozenset(levi)
        if not levi <= frozenset(self.gens):
            raise WeylError(f"levi {sorted(levi)} not within generators {list(self.gens)}")
        rs = self.rs
        out = []
        for k, imgs in enumerate(self.keys):
            if all(rs.is_positive(imgs[j - 1]) for j in levi):
                out.append(k)
        out.sort(key=lambda k: (self.lengths[k], self.keys[k]))
        return out


_GROUP_ORDER = {
    "A": lambda n: _fact(n + 1),
    "B": lambda n: 2**n * _fact(n),
    "C": lambda n: 2**n * _fact(n),
    "D": lambda n: 2 ** (n - 1) * _fact(n),
    "E": lambda n: {6: 51840, 7: 2903040, 8: 696729600}[n],
    "F": lambda n: 1152,
    "G": lambda n: 12,
}


def _fact(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def group_order(rs: RootSystem) -> int:
    return _GROUP_ORDER[rs.cartan_type.family](rs.rank)


def enumerate_group(rs: RootSystem, bound: int = DEFAULT_BOUND) -> list[WeylElement]:
    order = group_order(rs)
    if order > bound:
        raise WeylError(f"|W({rs.cartan_type})| = {order} exceeds bound {bound}; raise it to {order}")
    table = ElementTable(rs, bound=bound + 1)
    return [table.element(k) for k in range(len(table))]


def enumerate_min_reps(rs: RootSystem, pd: ParabolicData, bound: int = DEFAULT_BOUND) -> list[WeylElement]:
    """``W^P`` graded by length, grown by left multiplication inside ``W^P``.

    ``W^P`` is closed under deleting left letters, so the breadth-first
    search never leaves it.
    """
    levi = pd.levi
    start = identity(rs)
    out = [start]
    seen = {start}
    pos = 0
    while pos < len(out):
        w = out[pos]
        pos += 1
        for i in range(1, rs.rank + 1):
            x = w.simple_times(i)
            if x in seen or x.length < w.length or not is_min_rep(x, levi):
                continue
            if len(out) >= bound:
                raise WeylError(f"|W^P| exceeds enumeration bound {bound}")
            seen.add(x)
            out.append(x)
    out.sort(key=lambda x: (x.length, x.images))
    return out


# ---------------------------------------------------------------------------
# notation

# Window convention for signed permutations (types B, C, D): entry k of the
# window is the signed image of e_k in the Bourbaki realisation
# (alpha_i = e_i - e_{i+1}, last simple root e_n / 2e_n / e_{n-1}+e_n), so
# s_n negates the last letter.  Fixed by reproducing a published B4
# coefficient; "reversed" reads positions and values from the other end and
# fails that check (tests/test_acceptance.py).
SIGNED_CONVENTION = "bourbaki"


def _e_basis(rs: RootSystem) -> np.ndarray:
    """Simple roots as rows in Bourbaki e-coordinates (B, C, D)."""
    n = rs.rank
    fam = rs.cartan_type.family
    rows = []
    for i in range(n - 1):
        v = [0] * n
        v[i], v[i + 1] = 1, -1
        rows.append(v)
    v = [0] * n
    if fam == "B":
        v[n - 1] = 1
    elif fam == "C":
        v[n - 1] = 2
    elif fam == "D":
        v[n - 2], v[n - 1] = 1, 1
    else:
        raise WeylError(f"signed permutations not available for type {fam}")
    rows.append(v)
    return np.array(rows, dtype=object)


def _solve_rational(basis_rows: np.ndarray, vec) -> list[Fraction]:
    """Coordinates c with ``sum c_i basis_rows[i] = vec``."""
    n = len(vec)
    m = [[Fraction(int(basis_rows[i][j])) for i in range(n)] + [Fraction(int(vec[j]))] for j in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[i][n] for i in range(n)]


def _to_window_bourbaki(w: WeylElement) -> list[int]:
    rs = w.rs
    n = rs.rank
    basis = _e_basis(rs)
    out = []
    for k in range(n):
        ek = [0] * n
        ek[k] = 1
        c = _solve_rational(basis, ek)
        img = [Fraction(0)] * n
        for cj, rid in zip(c, w.images):
            if cj:
                col = rs.coords(rid)
                for t in range(n):
                    img[t] += cj * col[t]
        evec = [sum(img[i] * int(basis[i][t]) for i in range(n)) for t in range(n)]
        nz = [(t, x) for t, x in enumerate(evec) if x != 0]
        assert len(nz) == 1 and abs(nz[0][1]) == 1
        t, x = nz[0]
        out.append((t + 1) * int(x))
    return out


def _from_window_bourbaki(rs: RootSystem, window: Sequence[int]) -> WeylElement:
    n = rs.rank
    if sorted(abs(x) for x in window) != list(range(1, n + 1)):
        raise WeylError(f"{list(window)} is not a signed permutation of 1..{n}")
    basis = _e_basis(rs)
    images = []
    for i in range(n):
        vec = [0] * n
        for k in range(n):
            c = int(basis[i][k])
            if c:
                x = window[k]
                vec[abs(x) - 1] += c * (1 if x > 0 else -1)
        coords = _solve_rational(basis, vec)
        if any(c.denominator != 1 for c in coords):
            raise WeylError(f"{list(window)} is not in W({rs.cartan_type})")
        rid = rs.root_index.get(tuple(int(c) for c in coords))
        if rid is None:
            raise WeylError(f"{list(window)} is not in W({rs.cartan_type})")
        images.append(rid)
    return WeylElement(rs, images)


def _reverse_window(window: Sequence[int]) -> list[int]:
    n = len(window)
    return [(n + 1 - abs(x)) * (1 if x > 0 else -1) for x in reversed(window)]


def to_signed_window(w: WeylElement, convention: str = SIGNED_CONVENTION) -> list[int]:
    win = _to_window_bourbaki(w)
    if convention == "bourbaki":
        return win
    if convention == "reversed":
        return _reverse_window(win)
    raise WeylError(f"unknown signed-permutation convention {convention!r}")


def from_signed_window(rs: RootSystem, window: Sequence[int], convention: str = SIGNED_CONVENTION) -> WeylElement:
    window = list(window)
    if convention == "reversed":
        window = _reverse_window(window)
    elif convention != "bourbaki":
        raise WeylError(f"unknown signed-permutation convention {convention!r}")
    return _from_window_bourbaki(rs, window)


def to_permutation(w: WeylElement) -> list[int]:
    """One-line notation ``[w(1), ..., w(n+1)]`` for type A."""
    if w.rs.cartan_type.family != "A":
        raise WeylError("one-line permutations are only available in type A")
    perm = list(range(1, w.rs.rank + 2))
    # w = w' s_i swaps positions i, i+1 of the one-line notation of w'
    for i in reduced_word(w):
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return perm


def from_permutation(rs: RootSystem, perm: Sequence[int]) -> WeylElement:
    n = rs.rank + 1
    perm = list(perm)
    if rs.cartan_type.family != "A" or sorted(perm) != list(range(1, n + 1)):
        raise WeylError(f"{perm} is not a permutation of 1..{n} for {rs.cartan_type}")
    word = []
    while True:
        for i in range(n - 1):
            if perm[i] > perm[i + 1]:
                perm[i], perm[i + 1] = perm[i + 1], perm[i]
                word.append(i + 1)
                break
        else:
            break
    return from_word(rs, reversed(word))


_OVERLINE = "̄̅"


def _parse_window_tokens(text: str) -> list[int]:
    text = text.strip().strip("[]()")
    if re.search(r"[,\s]", text):
        toks = [t for t in re.split(r"[,\s]+", text) if t]
        out = []
        for t in toks:
            neg = t.startswith("-") or any(ch in t for ch in _OVERLINE)
            digits = re.sub(r"[^0-9]", "", t)
            if not digits:
                raise WeylError(f"cannot parse window entry {t!r}")
            out.append(-int(digits) if neg else int(digits))
        return out
    out = []
    neg = False
    for ch in text:
        if ch == "-":
            neg = True
        elif ch.isdigit():
            out.append(-int(ch) if neg else int(ch))
            neg = False
        elif ch in _OVERLINE:
            if not out:
                raise WeylError(f"dangling overline in {text!r}")
            out[-1] = -abs(out[-1])
        else:
            raise WeylError(f"cannot parse {text!r}")
    return out


def parse_element(rs: RootSystem, text: str, notation: str = "word") -> WeylElement:
    """Parse ``"s1 s3 s2"`` (word), a signed window (B/C/D) or one-line permutation (A).

    ``notation`` is ``"word"``, ``"window"`` or ``"auto"``.
    """
    text = text.strip()
    if notation == "auto":
        notation = "word" if (text.lower().startswith("s") or text in ("", "e")) else "window"
    if notation == "word":
        if text in ("", "e", "id"):
            return identity(rs)
        toks = re.findall(r"s?_?(\d+)", text.replace(",", " "))
        if not toks or re.sub(r"[\ss_,\d]", "", text):
            raise WeylError(f"cannot parse reduced word {text!r}")
        word = [int(t) for t in toks]
        for i in word:
            if not 1 <= i <= rs.rank:
                raise WeylError(f"simple index {i} out of range in {text!r}")
        w = from_word(rs, word)
        if w.length != len(word):
            raise WeylError(f"{text!r} is not a reduced word")
        return w
    if notation == "window":
        vals = _parse_window_tokens(text)
        if len(vals) == 0:
            raise WeylError(f"empty window {text!r}")
        if rs.cartan_type.family == "A":
            return from_permutation(rs, vals)
        if rs.cartan_type.family in "BCD":
            if len(vals) != rs.rank:
                raise WeylError(f"window {text!r} needs {rs.rank} entries")
            return from_signed_window(rs, vals)
        raise WeylError(f"no window notation for type {rs.cartan_type.family}")
    raise WeylError(f"unknown notation {notation!r}")


def format_element(w: WeylElement, notation: str = "word") -> str:
    if notation == "word":
        word = reduced_word(w)
        return " ".join(f"s{i}" for i in word) if word else "e"
    if notation == "window":
        fam = w.rs.cartan_type.family
        if fam == "A":
            vals = to_permutation(w)
        elif fam in "BCD":
            vals = to_signed_window(w)
        else:
            raise WeylError(f"no window notation for type {fam}")
        return " ".join(str(x) for x in vals)
    raise WeylError(f"unknown notation {notation!r}")

