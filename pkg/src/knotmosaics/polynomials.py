"""Sparse Laurent polynomials with exact integer coefficients.

Exponents may be negative; coefficients are Python ints so nothing ever
overflows or rounds.  Values are immutable; arithmetic returns new objects.
"""

from __future__ import annotations

from typing import Iterable, Mapping


class LaurentPoly:
    """A Laurent polynomial in a single named variable.

    Internally a mapping exponent -> nonzero integer coefficient.  Two
    polynomials are equal iff they have the same variable tag and the same
    coefficient map (the zero polynomial equals zero in any variable).
    """

    __slots__ = ("var", "_coeffs")

    def __init__(self, var: str, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        self.var = var
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        cleaned: dict[int, int] = {}
        for exp, coef in items:
            if coef:
                cleaned[int(exp)] = cleaned.get(int(exp), 0) + int(coef)
                if not cleaned[int(exp)]:
                    del cleaned[int(exp)]
        self._coeffs = cleaned

    @classmethod
    def zero(cls, var: str) -> "LaurentPoly":
        return cls(var)

    @classmethod
    def constant(cls, value: int, var: str) -> "LaurentPoly":
        return cls(var, {0: value})

    @classmethod
    def monomial(cls, coef: int, exp: int, var: str) -> "LaurentPoly":
        return cls(var, {exp: coef})

    # -- queries ---------------------------------------------------------

    def items(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs, ascending exponent."""
        return sorted(self._coeffs.items())

    def coefficient(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def min_exp(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no exponents")
        return min(self._coeffs)

    @property
    def max_exp(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no exponents")
        return max(self._coeffs)

    @property
    def span(self) -> int:
        """max_exp - min_exp (0 for monomials)."""
        return self.max_exp - self.min_exp

    def evaluate(self, x: int) -> int:
        """Exact integer evaluation; requires x != 0 when negative exponents
        are present (x in {1, -1} is the usual use)."""
        total = 0
        for exp, coef in self._coeffs.items():
            if exp >= 0:
                total += coef * x**exp
            else:
                q, r = divmod(coef, x ** (-exp))
                if r:
                    raise ValueError(f"evaluation at {x} is not an integer")
                total += q
        return total

    # -- arithmetic ------------------------------------------------------

    def _check_var(self, other: "LaurentPoly") -> None:
        if self.var != other.var and self._coeffs and other._coeffs:
            raise ValueError(f"variable mismatch: {self.var!r} vs {other.var!r}")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_var(other)
        out = dict(self._coeffs)
        for exp, coef in other._coeffs.items():
            out[exp] = out.get(exp, 0) + coef
            if not out[exp]:
                del out[exp]
        return LaurentPoly(self.var or other.var, out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.var, {e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_var(other)
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(self.var or other.var, out)

    def scale(self, k: int) -> "LaurentPoly":
        return LaurentPoly(self.var, {e: k * c for e, c in self._coeffs.items()})

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by var**k."""
        return LaurentPoly(self.var, {e + k: c for e, c in self._coeffs.items()})

    def substitute_inverse(self) -> "LaurentPoly":
        """Replace the variable by its inverse (negate all exponents)."""
        return LaurentPoly(self.var, {-e: c for e, c in self._coeffs.items()})

    def map_exponents(self, f) -> "LaurentPoly":
        return LaurentPoly(self.var, {f(e): c for e, c in self._coeffs.items()})

    def with_var(self, var: str) -> "LaurentPoly":
        return LaurentPoly(var, self._coeffs)

    # -- identity --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self._coeffs != other._coeffs:
            return False
        return (not self._coeffs) or self.var == other.var

    def __hash__(self) -> int:
        return hash((self.var if self._coeffs else "", tuple(self.items())))

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.var!r}, {dict(self.items())!r})"

    def __str__(self) -> str:
        return format_poly(self)


def format_poly(poly: LaurentPoly) -> str:
    """Text form "c*v^e + ..." with ascending exponents; "0" when zero."""
    if poly.is_zero:
        return "0"
    parts = []
    for exp, coef in poly.items():
        if exp == 0:
            parts.append(str(coef))
        elif coef == 1:
            parts.append(f"{poly.var}^{exp}")
        elif coef == -1:
            parts.append(f"-{poly.var}^{exp}")
        else:
            parts.append(f"{coef}*{poly.var}^{exp}")
    text = " + ".join(parts)
    return text.replace("+ -", "- ")


def parse_poly(text: str, var: str) -> LaurentPoly:
    """Inverse of format_poly for the forms it emits."""
    text = text.strip()
    if text == "0":
        return LaurentPoly.zero(var)
    coeffs: dict[int, int] = {}
    for chunk in text.replace("- ", "+ -").split("+"):
        term = chunk.strip().replace(" ", "")
        if not term:
            continue
        if f"{var}^" in term:
            head, _, exp_s = term.partition(f"{var}^")
            head = head.rstrip("*")
            if head in ("", "-"):
                coef = -1 if head == "-" else 1
            else:
                coef = int(head)
            exp = int(exp_s)
        else:
            coef, exp = int(term), 0
        coeffs[exp] = coeffs.get(exp, 0) + coef
    return LaurentPoly(var, coeffs)


def normalize_alexander(poly: LaurentPoly) -> LaurentPoly:
    """Canonical form: lowest exponent 0 and positive leading coefficient."""
    if poly.is_zero:
        return poly
    out = poly.shift(-poly.min_exp)
    if out.coefficient(out.max_exp) < 0:
        out = -out
    return out
