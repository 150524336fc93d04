"""Skein algebra of the 2-torus in the canonical curve basis.

A basis label is the empty link, written (), or an integer pair (p, q)
different from (0, 0) and normalised so that p > 0 or (p == 0 and q > 0);
a pair and its negative name the same curve.  Labels are NOT divided by
their gcd: (2, 4) is itself a basis label (the doubled curve carries the
degree-2 first-kind Chebyshev colouring), and expanding such labels is a
separate operation, not a normal form.

An element is a finite Q(A)-combination of labels stored as
{label: coefficient}.  Label products follow the Frohman-Gelca rule

    (p,q) * (r,s) = A^(ps-qr) (p+r, q+s) + A^-(ps-qr) (p-r, q-s)

extended bilinearly, with () as the unit and any (0, 0) output rewritten
to twice the empty link.  The first-kind Chebyshev recursion, framing
twists and commutators are built on top of this product.
"""

from __future__ import annotations

import math

from .ratfunc import RationalFunction, a_pow

EMPTY: tuple = ()


def canonical_pair(p: int, q: int) -> tuple[int, int]:
    """Pick the canonical representative of {(p,q), (-p,-q)}; (0,0) is rejected."""
    if p == 0 and q == 0:
        raise ValueError("(0,0) is not a curve label")
    if p > 0 or (p == 0 and q > 0):
        return (p, q)
    return (-p, -q)


class SkeinT2Element:
    """Finite Q(A)-combination of curve labels, in canonical form."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple, RationalFunction] | None = None):
        self.terms = (
            {} if not terms else {k: c for k, c in terms.items() if not c.is_zero()}
        )

    @classmethod
    def zero(cls) -> "SkeinT2Element":
        return cls()

    @classmethod
    def unit(cls) -> "SkeinT2Element":
        return cls({EMPTY: RationalFunction.one()})

    @classmethod
    def scalar(cls, coeff: RationalFunction) -> "SkeinT2Element":
        return cls({EMPTY: coeff})

    @classmethod
    def curve(cls, p: int, q: int) -> "SkeinT2Element":
        """The basis label for (p,q); (0,0) becomes twice the empty link."""
        if p == 0 and q == 0:
            return cls({EMPTY: RationalFunction.from_int(2)})
        return cls({canonical_pair(p, q): RationalFunction.one()})

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, label: tuple) -> RationalFunction:
        return self.terms.get(label, RationalFunction.zero())

    def support(self) -> set:
        return set(self.terms)

    def scale(self, coeff: RationalFunction) -> "SkeinT2Element":
        if coeff.is_zero():
            return SkeinT2Element()
        return SkeinT2Element({k: c * coeff for k, c in self.terms.items()})

    def __add__(self, other: "SkeinT2Element") -> "SkeinT2Element":
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return SkeinT2Element(out)

    def __sub__(self, other: "SkeinT2Element") -> "SkeinT2Element":
        return self + (-other)

    def __neg__(self) -> "SkeinT2Element":
        return SkeinT2Element({k: -c for k, c in self.terms.items()})

    def __mul__(self, other: "SkeinT2Element") -> "SkeinT2Element":
        out: dict[tuple, RationalFunction] = {}

        def put(label: tuple, c: RationalFunction) -> None:
            acc = out.get(label)
            acc = c if acc is None else acc + c
            if acc.is_zero():
                out.pop(label, None)
            else:
                out[label] = acc

        for la, ca in self.terms.items():
            for lb, cb in other.terms.items():
                c = ca * cb
                if not la:
                    put(lb, c)
                    continue
                if not lb:
                    put(la, c)
                    continue
                p, q = la
                r, s = lb
                d = p * s - q * r
                for sign in (1, -1):
                    u, v = p + sign * r, q + sign * s
                    cc = c * a_pow(sign * d)
                    if u == 0 and v == 0:
                        put(EMPTY, cc + cc)
                    else:
                        put(canonical_pair(u, v), cc)
        return SkeinT2Element(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, SkeinT2Element) and self.terms == other.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for label in sorted(self.terms):
            name = "empty" if not label else f"({label[0]},{label[1]})"
            parts.append(f"({self.terms[label]})*{name}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"SkeinT2Element({self})"


def curve(p: int, q: int) -> SkeinT2Element:
    return SkeinT2Element.curve(p, q)


def scalar(coeff: RationalFunction) -> SkeinT2Element:
    return SkeinT2Element.scalar(coeff)


def fg_product(x: SkeinT2Element, y: SkeinT2Element) -> SkeinT2Element:
    return x * y


def chebyshev_t(n: int, gamma: tuple[int, int]) -> SkeinT2Element:
    """First-kind Chebyshev colouring of a coprime curve.

    T_0 = 2*empty, T_1 = gamma, T_(n+1) = gamma*T_n - T_(n-1); for coprime
    gamma = (p, q) the result equals the plain label (n*p, n*q).
    """
    p, q = gamma
    if math.gcd(p, q) != 1:
        raise ValueError("gamma must be a coprime pair")
    if n < 0:
        raise ValueError("n must be nonnegative")
    prev = SkeinT2Element.scalar(RationalFunction.from_int(2))
    if n == 0:
        return prev
    g = SkeinT2Element.curve(p, q)
    cur = g
    for _ in range(n - 1):
        prev, cur = cur, g * cur - prev
    return cur


def _poly_x_times(poly: dict[int, int]) -> dict[int, int]:
    return {e + 1: c for e, c in poly.items()}


def _poly_sub(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) - c
        if s:
            out[e] = s
        elif e in out:
            del out[e]
    return out


def t_to_jw(n: int) -> dict[int, int]:
    """Coefficients expressing T_n in the Jones-Wenzl (second-kind) basis.

    Both families satisfy the same recursion in a commuting variable x,
    with T_0 = 2, S_0 = 1 and T_1 = S_1 = x; the returned map {level:
    coefficient} gives T_n = sum c_k S_k and is found by eliminating the
    leading degree with the explicit S polynomials.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    t_prev, t_cur = {0: 2}, {1: 1}
    s_polys = [{0: 1}, {1: 1}]
    for _ in range(n):
        t_prev, t_cur = t_cur, _poly_sub(_poly_x_times(t_cur), t_prev)
        s_polys.append(_poly_sub(_poly_x_times(s_polys[-1]), s_polys[-2]))
    coeffs: dict[int, int] = {}
    rem = dict(t_prev)  # t_prev is now T_n
    for k in range(n, -1, -1):
        c = rem.get(k, 0)
        if c:
            coeffs[k] = c
            rem = _poly_sub(rem, {e: c * sc for e, sc in s_polys[k].items()})
    assert not rem, "second-kind basis elimination left a remainder"
    return coeffs


def framing_twist(x: SkeinT2Element, k: int) -> SkeinT2Element:
    """Multiply by (-A^3)^k, the effect of k positive framing twists."""
    rf = a_pow(3 * k)
    if k % 2:
        rf = -rf
    return x.scale(rf)


def commutator(x: SkeinT2Element, y: SkeinT2Element) -> SkeinT2Element:
    return x * y - y * x
