"""
Type A structure constants from Schubert polynomials.

Works on plain permutations and dict polynomials in ``x_1 .. x_n`` so that
it shares nothing with the localization engine: ``S_w`` is
``d_{w^{-1} w_0}(x^delta)`` and ``c_{u,v}^w = d_w(S_u S_v)``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

Poly = dict  # {exponent tuple: int}


def _mul(f: Poly, g: Poly) -> Poly:
    out: Poly = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def divided_difference(f: Poly, i: int) -> Poly:
    """``(f - s_i f) / (x_i - x_{i+1})`` with ``i`` 1-based.

    Monomial by monomial: ``x_i^a x_{i+1}^b`` with ``a > b`` maps to
    ``sum_{k=0}^{a-b-1} x_i^(a-1-k) x_{i+1}^(b+k)``, and the reverse with a
    sign when ``a < b``.
    """
    out: Poly = {}
    i0, i1 = i - 1, i
    for e, c in f.items():
        a, b = e[i0], e[i1]
        if a == b:
            continue
        lo, hi, sign = (b, a, 1) if a > b else (a, b, -1)
        for k in range(hi - lo):
            ne = list(e)
            ne[i0] = hi - 1 - k
            ne[i1] = lo + k
            ne = tuple(ne)
            out[ne] = out.get(ne, 0) + sign * c
    return {e: c for e, c in out.items() if c}


def perm_word(perm: tuple[int, ...]) -> list[int]:
    """Reduced word ``[a_1 .. a_l]`` with ``perm = s_{a_1} ... s_{a_l}``."""
    p = list(perm)
    word = []
    while True:
        for i in range(len(p) - 1):
            if p[i] > p[i + 1]:
                p[i], p[i + 1] = p[i + 1], p[i]
                word.append(i + 1)
                break
        else:
            break
    return word[::-1]


def _compose(p, q):
    return tuple(p[q[i] - 1] for i in range(len(q)))


def _inverse(p):
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x - 1] = i + 1
    return tuple(out)


def _apply_dd(f: Poly, word) -> Poly:
    # d_w = d_{a1} o ... o d_{al}: apply the last letter first
    for i in reversed(word):
        f = divided_difference(f, i)
        if not f:
            break
    return f


@lru_cache(maxsize=None)
def schubert_polynomial(perm: tuple[int, ...]) -> tuple:
    n = len(perm)
    w0 = tuple(range(n, 0, -1))
    top = {tuple(n - 1 - k for k in range(n)): 1}
    f = _apply_dd(top, perm_word(_compose(_inverse(perm), w0)))
    return tuple(sorted(f.items()))


def structure_constant(u, v, w) -> int:
    """``c_{u,v}^w`` in ``H^*(Fl_n)`` for one-line permutations."""
    u, v, w = tuple(u), tuple(v), tuple(w)
    if len(perm_word(u)) + len(perm_word(v)) != len(perm_word(w)):
        return 0
    prod = _mul(dict(schubert_polynomial(u)), dict(schubert_polynomial(v)))
    res = _apply_dd(prod, perm_word(w))
    if not res:
        return 0
    (e, c), = res.items()
    assert not any(e)
    return c


def all_constants(n: int) -> dict[tuple, int]:
    """Every nonzero ``c_{u,v}^w`` for ``S_n`` keyed by ``(u, v, w)``."""
    perms = list(permutations(range(1, n + 1)))
    length = {p: len(perm_word(p)) for p in perms}
    out = {}
    for u in perms:
        for v in perms:
            for w in perms:
                if length[u] + length[v] == length[w]:
                    c = structure_constant(u, v, w)
                    if c:
                        out[(u, v, w)] = c
    return out
