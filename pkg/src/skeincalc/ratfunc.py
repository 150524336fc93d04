"""Exact arithmetic over Q and the rational-function field Q(A).

A Laurent polynomial in the formal variable A is a map {exponent:
Fraction} that never stores a zero coefficient, so two polynomials are
equal exactly when their maps are equal.  A rational function is a
reduced pair num/den: the denominator is an ordinary polynomial (no
negative powers of A), monic, with nonzero constant term, and shares no
nonconstant factor with the numerator; any net power of A is carried by
the numerator, and zero is always 0/1.  Under these rules every value has
one representation, so equality never needs simplification.

Coefficients are fractions.Fraction, hence arbitrary precision.  Nothing
in this module touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

_F0 = Fraction(0)
_F1 = Fraction(1)


class LaurentPoly:
    """Laurent polynomial in A over Q, stored as an {exponent: coefficient} map."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, Fraction] | None = None):
        # Coefficients must already be Fractions (or exact ints); zeros are dropped.
        self.terms = {} if not terms else {e: c for e, c in terms.items() if c}

    @classmethod
    def _raw(cls, terms: dict[int, Fraction]) -> "LaurentPoly":
        # Internal: terms are known to contain no zeros.
        poly = cls.__new__(cls)
        poly.terms = terms
        return poly

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return _LP_ZERO

    @classmethod
    def one(cls) -> "LaurentPoly":
        return _LP_ONE

    @classmethod
    def constant(cls, value) -> "LaurentPoly":
        return cls({0: Fraction(value)})

    @classmethod
    def monomial(cls, exp: int, coeff=1) -> "LaurentPoly":
        """The single term coeff * A^exp."""
        return cls({exp: Fraction(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {0: _F1}

    def is_ordinary(self) -> bool:
        """True when no negative power of A occurs."""
        return all(e >= 0 for e in self.terms)

    def min_exp(self) -> int:
        if not self.terms:
            raise ValueError("the zero polynomial has no exponents")
        return min(self.terms)

    def max_exp(self) -> int:
        if not self.terms:
            raise ValueError("the zero polynomial has no exponents")
        return max(self.terms)

    def leading_coeff(self) -> Fraction:
        return self.terms[self.max_exp()]

    def constant_term(self) -> Fraction:
        return self.terms.get(0, _F0)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by A^k."""
        if k == 0 or not self.terms:
            return self
        return LaurentPoly._raw({e + k: c for e, c in self.terms.items()})

    def scale(self, factor: Fraction) -> "LaurentPoly":
        if not factor:
            return _LP_ZERO
        return LaurentPoly._raw({e: c * factor for e, c in self.terms.items()})

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -c for e, c in self.terms.items()})

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, _F0) + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return LaurentPoly._raw(out)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, _F0) - c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return LaurentPoly._raw(out)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not self.terms or not other.terms:
            return _LP_ZERO
        out: dict[int, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                s = out.get(e, _F0) + c1 * c2
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return LaurentPoly._raw(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __str__(self) -> str:
        # Terms in strictly decreasing exponent order; exponent 0 omitted;
        # coefficient +-1 rendered without the digit.
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            neg = c < 0
            mag = -c if neg else c
            if e == 0:
                body = str(mag)
            else:
                var = "A" if e == 1 else f"A^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f" - {body}" if neg else f" + {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


_LP_ZERO = LaurentPoly._raw({})
_LP_ONE = LaurentPoly._raw({0: _F1})


def poly_divmod(a: LaurentPoly, b: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Long division of ordinary polynomials: a = q*b + r with deg r < deg b."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = dict(a.terms)
    quo: dict[int, Fraction] = {}
    db = b.max_exp()
    lb = b.terms[db]
    while rem:
        d = max(rem)
        if d < db:
            break
        c = rem[d] / lb
        quo[d - db] = c
        for e, bc in b.terms.items():
            k = e + d - db
            s = rem.get(k, _F0) - c * bc
            if s:
                rem[k] = s
            elif k in rem:
                del rem[k]
    return LaurentPoly._raw(quo), LaurentPoly._raw(rem)


def poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic gcd of two ordinary polynomials by the Euclidean algorithm."""
    ra, rb = a, b
    while not rb.is_zero():
        ra, rb = rb, poly_divmod(ra, rb)[1]
    if ra.is_zero():
        return _LP_ZERO
    lc = ra.leading_coeff()
    return ra if lc == 1 else ra.scale(1 / lc)


def _poly_exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    q, r = poly_divmod(a, b)
    if not r.is_zero():
        raise ArithmeticError("polynomial division is not exact")
    return q


def _reduce(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    # Bring num/den to canonical form; den is nonzero and not already 1.
    if num.is_zero():
        return _LP_ZERO, _LP_ONE
    v = den.min_exp()
    if v:
        den = den.shift(-v)
        num = num.shift(-v)
    w = num.min_exp()
    num_ord = num.shift(-w)
    g = poly_gcd(num_ord, den)
    if not g.is_one():
        num_ord = _poly_exact_div(num_ord, g)
        den = _poly_exact_div(den, g)
    lc = den.leading_coeff()
    if lc != 1:
        inv = 1 / lc
        num_ord = num_ord.scale(inv)
        den = den.scale(inv)
    return num_ord.shift(w), den


class RationalFunction:
    """An element of Q(A), always held in canonical form num/den."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | None = None):
        if den is None or den.is_one():
            self.num = num
            self.den = _LP_ONE
            return
        if den.is_zero():
            raise ZeroDivisionError("denominator is zero in Q(A)")
        self.num, self.den = _reduce(num, den)

    @classmethod
    def zero(cls) -> "RationalFunction":
        return _RF_ZERO

    @classmethod
    def one(cls) -> "RationalFunction":
        return _RF_ONE

    @classmethod
    def from_int(cls, n: int) -> "RationalFunction":
        return cls(LaurentPoly.constant(n))

    @classmethod
    def from_fraction(cls, f: Fraction) -> "RationalFunction":
        return cls(LaurentPoly.constant(f))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_invertible(self) -> bool:
        """Every nonzero element of the field Q(A) is invertible."""
        return not self.num.is_zero()

    def inverse(self) -> "RationalFunction":
        if self.num.is_zero():
            raise ZeroDivisionError("zero has no inverse in Q(A)")
        return RationalFunction(self.den, self.num)

    def __neg__(self) -> "RationalFunction":
        out = RationalFunction.__new__(RationalFunction)
        out.num = -self.num
        out.den = self.den
        return out

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        if self.den.is_one() and other.den.is_one():
            return RationalFunction(self.num + other.num)
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        if self.den.is_one() and other.den.is_one():
            return RationalFunction(self.num - other.num)
        return RationalFunction(
            self.num * other.den - other.num * self.den, self.den * other.den
        )

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        if self.den.is_one() and other.den.is_one():
            return RationalFunction(self.num * other.num)
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RationalFunction") -> "RationalFunction":
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero in Q(A)")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalFunction)
            and self.num == other.num
            and self.den == other.den
        )

    def __str__(self) -> str:
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RationalFunction({self})"


_RF_ZERO = RationalFunction(_LP_ZERO)
_RF_ONE = RationalFunction(_LP_ONE)


@lru_cache(maxsize=None)
def a_pow(k: int) -> RationalFunction:
    """The monomial A^k as a rational function (values are shared, immutable)."""
    return RationalFunction(LaurentPoly.monomial(k))
