"""Quantum torus on two invertible generators l, m with l*m = A^2*m*l.

This algebra is the independent cross-check for the torus skein product:
curve labels are mapped onto symmetric pairs of monomials here, where
multiplication is forced by the single commutation rule

    m^q * l^r = A^(-2qr) * l^r * m^q

rather than by any curve combinatorics.  Elements are finite sums
sum c_{p,q} l^p m^q kept in normal order (all l factors on the left) and
stored as {(p, q): coefficient}, which is a canonical form.
"""

from __future__ import annotations

from functools import lru_cache

from .ratfunc import RationalFunction, a_pow


class QTorusElement:
    """Finite Q(A)-combination of normal-ordered monomials l^p m^q."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[int, int], RationalFunction] | None = None):
        self.terms = (
            {} if not terms else {k: c for k, c in terms.items() if not c.is_zero()}
        )

    @classmethod
    def zero(cls) -> "QTorusElement":
        return cls()

    @classmethod
    def scalar(cls, coeff: RationalFunction) -> "QTorusElement":
        return cls({(0, 0): coeff})

    @classmethod
    def one(cls) -> "QTorusElement":
        return cls.scalar(RationalFunction.one())

    @classmethod
    def monomial(cls, p: int, q: int, coeff: RationalFunction | None = None) -> "QTorusElement":
        return cls({(p, q): coeff if coeff is not None else RationalFunction.one()})

    def is_zero(self) -> bool:
        return not self.terms

    def scale(self, coeff: RationalFunction) -> "QTorusElement":
        if coeff.is_zero():
            return QTorusElement()
        return QTorusElement({k: c * coeff for k, c in self.terms.items()})

    def __add__(self, other: "QTorusElement") -> "QTorusElement":
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return QTorusElement(out)

    def __sub__(self, other: "QTorusElement") -> "QTorusElement":
        return self + (-other)

    def __neg__(self) -> "QTorusElement":
        return QTorusElement({k: -c for k, c in self.terms.items()})

    def __mul__(self, other: "QTorusElement") -> "QTorusElement":
        # (l^p m^q)(l^r m^s) = A^(-2qr) l^(p+r) m^(q+s)
        out: dict[tuple[int, int], RationalFunction] = {}
        for (p, q), ca in self.terms.items():
            for (r, s), cb in other.terms.items():
                key = (p + r, q + s)
                c = ca * cb * a_pow(-2 * q * r)
                acc = out.get(key)
                acc = c if acc is None else acc + c
                if acc.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = acc
        return QTorusElement(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, QTorusElement) and self.terms == other.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            f"({self.terms[k]})*l^{k[0]}*m^{k[1]}"
            for k in sorted(self.terms, reverse=True)
        )

    def __repr__(self) -> str:
        return f"QTorusElement({self})"


@lru_cache(maxsize=None)
def embed_curve(p: int, q: int) -> QTorusElement:
    """Image of the (p,q) curve label: A^(-pq) * (l^p m^q + l^-p m^-q).

    The exponent is forced: it is the unique choice of the shape A^(k*pq)
    that makes the map multiplicative for the skein curve product under
    the commutation rule above (the oracle sweep checks this exhaustively).
    (0,0) maps to the scalar 2, matching the empty-link convention.
    """
    if p == 0 and q == 0:
        return QTorusElement.scalar(RationalFunction.from_int(2))
    c = a_pow(-p * q)
    return QTorusElement({(p, q): c, (-p, -q): c})


def embed_element(x) -> QTorusElement:
    """Linear extension of embed_curve to whole skein elements; empty maps to 1."""
    total: dict[tuple[int, int], RationalFunction] = {}
    for label, coeff in x.terms.items():
        if not label:
            img = {(0, 0): coeff}
        else:
            img = {k: coeff * c for k, c in embed_curve(*label).terms.items()}
        for k, c in img.items():
            acc = total.get(k)
            acc = c if acc is None else acc + c
            if acc.is_zero():
                total.pop(k, None)
            else:
                total[k] = acc
    return QTorusElement(total)
