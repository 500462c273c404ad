"""Exact integer Laurent polynomials in one variable v.

These are the scalars of every basis expansion in the package.  The
representation is sparse: a dict from exponent to nonzero coefficient,
so equality is exponent-wise and arithmetic is exact Python bignum
arithmetic.  Instances are immutable once built and safe to share.

The canonical text form (used for golden files, CSV and JSON output)
lists terms in increasing exponent as ``c*v^e``:

* the exponent-0 term is written as a bare integer,
* a unit coefficient is elided (``v^2``, ``-v^-1``),
* terms are joined with `` + `` and negative coefficients carry their
  sign inside the term, e.g. ``1 + 2*v^2`` or ``-2 + v^-1``.
"""

from __future__ import annotations

from typing import Iterator, Mapping


class LaurentPoly:
    """A sparse v-Laurent polynomial with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        data = {}
        if coeffs:
            for e, c in coeffs.items():
                if c:
                    data[e] = c
        self.coeffs = data

    # -- constructors -------------------------------------------------

    @classmethod
    def monomial(cls, coeff: int, exp: int = 0) -> "LaurentPoly":
        p = cls.__new__(cls)
        p.coeffs = {exp: coeff} if coeff else {}
        return p

    @classmethod
    def zero(cls) -> "LaurentPoly":
        p = cls.__new__(cls)
        p.coeffs = {}
        return p

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls.monomial(1, 0)

    @classmethod
    def v(cls, exp: int = 1) -> "LaurentPoly":
        return cls.monomial(1, exp)

    # -- ring structure -----------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        data = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = data.get(e, 0) + c
            if s:
                data[e] = s
            else:
                data.pop(e, None)
        p = LaurentPoly.__new__(LaurentPoly)
        p.coeffs = data
        return p

    def __neg__(self) -> "LaurentPoly":
        p = LaurentPoly.__new__(LaurentPoly)
        p.coeffs = {e: -c for e, c in self.coeffs.items()}
        return p

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        data = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = data.get(e, 0) - c
            if s:
                data[e] = s
            else:
                data.pop(e, None)
        p = LaurentPoly.__new__(LaurentPoly)
        p.coeffs = data
        return p

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            p = LaurentPoly.__new__(LaurentPoly)
            p.coeffs = {e: c * other for e, c in self.coeffs.items()} if other else {}
            return p
        data: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                s = data.get(e, 0) + c1 * c2
                if s:
                    data[e] = s
                else:
                    data.pop(e, None)
        p = LaurentPoly.__new__(LaurentPoly)
        p.coeffs = data
        return p

    __rmul__ = __mul__

    def shifted(self, k: int) -> "LaurentPoly":
        """Multiply by v^k (the hot path of every module action)."""
        p = LaurentPoly.__new__(LaurentPoly)
        p.coeffs = {e + k: c for e, c in self.coeffs.items()}
        return p

    # -- structure queries --------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def bar(self) -> "LaurentPoly":
        """The bar involution v ↦ v⁻¹ (negate every exponent)."""
        p = LaurentPoly.__new__(LaurentPoly)
        p.coeffs = {-e: c for e, c in self.coeffs.items()}
        return p

    def coeff(self, exp: int) -> int:
        return self.coeffs.get(exp, 0)

    def monic_exponent(self) -> int | None:
        """The exponent k if this polynomial is exactly v^k, else None.

        Zero returns None as well; use :meth:`is_zero` to tell the two
        apart when a caller accepts "0 or a monic monomial".
        """
        if len(self.coeffs) != 1:
            return None
        (e, c), = self.coeffs.items()
        return e if c == 1 else None

    def min_exp(self) -> int:
        return min(self.coeffs)

    def max_exp(self) -> int:
        return max(self.coeffs)

    def in_v_times_nonneg(self) -> bool:
        """True iff the polynomial lies in vℤ≥0[v]."""
        return all(e >= 1 and c > 0 for e, c in self.coeffs.items())

    def nonneg_coeffs(self) -> bool:
        return all(c > 0 for c in self.coeffs.values())

    def terms(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self.coeffs.items()))

    # -- comparisons / hashing ----------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.coeffs == ({0: other} if other else {})
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    # -- text ----------------------------------------------------------

    def text(self) -> str:
        """Canonical text form, ``0`` for the zero polynomial."""
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in sorted(self.coeffs.items()):
            if e == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(f"v^{e}")
            elif c == -1:
                parts.append(f"-v^{e}")
            else:
                parts.append(f"{c}*v^{e}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.text()})"


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.one()
V = LaurentPoly.v(1)
VINV = LaurentPoly.v(-1)


def parse_poly(text: str) -> LaurentPoly:
    """Inverse of :meth:`LaurentPoly.text`, for reading golden files."""
    text = text.strip()
    if text == "0":
        return LaurentPoly.zero()
    coeffs: dict[int, int] = {}
    for part in text.split(" + "):
        part = part.strip()
        if "v^" in part:
            head, _, tail = part.partition("v^")
            head = head.rstrip("*")
            if head in ("", "+"):
                c = 1
            elif head == "-":
                c = -1
            else:
                c = int(head)
            e = int(tail)
        else:
            c, e = int(part), 0
        coeffs[e] = coeffs.get(e, 0) + c
    return LaurentPoly(coeffs)
