"""Sparse multivariate polynomials with exact integer coefficients."""

from __future__ import annotations

from typing import Iterable, Mapping


class PolynomialDivisionError(ArithmeticError):
    """Division that was required to be exact left a remainder."""


class EquivariantPolynomial:
    """Polynomial in the simple roots ``alpha_1 .. alpha_n``.

    Stored as ``{exponent tuple: int}`` without zero coefficients.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], int] | None = None):
        self.nvars = nvars
        self.terms = {e: c for e, c in (terms or {}).items() if c != 0}

    @classmethod
    def constant(cls, nvars: int, c: int) -> "EquivariantPolynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def linear(cls, coeffs: Iterable[int]) -> "EquivariantPolynomial":
        """The linear form ``sum c_i alpha_i`` (e.g. a root in simple-root coordinates)."""
        coeffs = tuple(coeffs)
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = c
        return cls(n, terms)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, int):
            other = EquivariantPolynomial.constant(self.nvars, other)
        if not isinstance(other, EquivariantPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                f"a{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __add__(self, other: "EquivariantPolynomial") -> "EquivariantPolynomial":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return EquivariantPolynomial(self.nvars, out)

    def __neg__(self):
        return EquivariantPolynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "EquivariantPolynomial") -> "EquivariantPolynomial":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) - c
        return EquivariantPolynomial(self.nvars, out)

    def __mul__(self, other) -> "EquivariantPolynomial":
        if isinstance(other, int):
            return EquivariantPolynomial(self.nvars, {e: c * other for e, c in self.terms.items()})
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return EquivariantPolynomial(self.nvars, out)

    __rmul__ = __mul__

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def is_homogeneous(self, degree: int | None = None) -> bool:
        ds = self.degrees()
        if not ds:
            return True
        if len(ds) != 1:
            return False
        return degree is None or ds == {degree}

    def constant_value(self) -> int:
        """The value of a polynomial of degree 0; raises if it is not constant."""
        if not self.terms:
            return 0
        if set(self.terms) != {(0,) * self.nvars}:
            raise ValueError(f"{self!r} is not a constant")
        return self.terms[(0,) * self.nvars]

    def evaluate(self, point, modulus: int | None = None) -> int:
        total = 0
        for e, c in self.terms.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t *= pow(x, k, modulus) if modulus else x**k
            total += t
        return total % modulus if modulus else total

    def exact_div(self, divisor: "EquivariantPolynomial") -> "EquivariantPolynomial":
        """Quotient by ``divisor``; raises :class:`PolynomialDivisionError` on a remainder.

        Long division with respect to lex order.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead_e = max(divisor.terms)
        lead_c = divisor.terms[lead_e]
        rem = dict(self.terms)
        quot: dict[tuple[int, ...], int] = {}
        while rem:
            e = max(rem)
            c = rem[e]
            shift = tuple(a - b for a, b in zip(e, lead_e))
            if min(shift) < 0 or c % lead_c:
                raise PolynomialDivisionError(f"{self!r} is not divisible by {divisor!r}")
            q = c // lead_c
            quot[shift] = q
            for de, dc in divisor.terms.items():
                t = tuple(a + b for a, b in zip(de, shift))
                v = rem.get(t, 0) - q * dc
                if v:
                    rem[t] = v
                else:
                    rem.pop(t, None)
        return EquivariantPolynomial(self.nvars, quot)
