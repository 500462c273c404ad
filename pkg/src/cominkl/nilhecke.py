"""Demazure operators on the polynomial ring of simple roots, and the
local intersection-form scalars computed through them.

Only the root span is needed: polynomials live in the commuting formal
variables α_0..α_{n-1} with integer coefficients.  The reflection
s_i(α_j) = α_j − ⟨α_iˇ, α_j⟩ α_i is determined by the Cartan pairing
table, which is where types B and C finally differ: on the A-chain all
adjacent pairings are −1, while at the special end ⟨α_0ˇ, α_1⟩ = −2 in
type B (and ⟨α_1ˇ, α_0⟩ = −1), with the two values swapped in type C.

The scalar of a composed light leaf with its flip is evaluated
segment by segment: each removed two-column piece of shape t
contributes ∂_{t-2}( ... ∂_2( ∂_0( α_{t-1} α_{t-3} ... α_1 ) ) ),
with the even operators applied in increasing index (innermost first),
which is the order the trivalent vertices close up in the diagram.
Every division is performed symbolically and checked exact; no closed
form is consulted, so this module is an independent oracle for the
2^|E| (−1)^{ℓ(E)/2} (type B) and (−1)^{ℓ(E)/2} (type C) predictions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .coxeter import mask_elements


@dataclass(frozen=True)
class CartanData:
    family: str  # 'B' or 'C'
    rank: int

    def __post_init__(self):
        if self.family not in ("B", "C"):
            raise ValueError("Cartan data is only realised in types B and C")

    def pairing(self, i: int, j: int) -> int:
        """⟨α_iˇ, α_j⟩."""
        if i == j:
            return 2
        if abs(i - j) != 1:
            return 0
        if (i, j) == (0, 1):
            return -2 if self.family == "B" else -1
        if (i, j) == (1, 0):
            return -1 if self.family == "B" else -2
        return -1


# A RootPoly maps an exponent tuple (one slot per variable) to a nonzero
# integer coefficient.  Keeping bare dicts keeps the Demazure loop lean.
RootPoly = dict


def poly_const(c: int, nvars: int) -> RootPoly:
    return {(0,) * nvars: c} if c else {}


def poly_var(i: int, nvars: int) -> RootPoly:
    mono = [0] * nvars
    mono[i] = 1
    return {tuple(mono): 1}


def poly_add(p: RootPoly, q: RootPoly) -> RootPoly:
    out = dict(p)
    for m, c in q.items():
        s = out.get(m, 0) + c
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return out


def poly_sub(p: RootPoly, q: RootPoly) -> RootPoly:
    return poly_add(p, {m: -c for m, c in q.items()})


def poly_mul(p: RootPoly, q: RootPoly) -> RootPoly:
    out: RootPoly = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            s = out.get(m, 0) + c1 * c2
            if s:
                out[m] = s
            else:
                out.pop(m, None)
    return out


def poly_is_const(p: RootPoly) -> bool:
    return all(not any(m) for m in p)


def poly_const_value(p: RootPoly) -> int:
    if not p:
        return 0
    if not poly_is_const(p):
        raise ValueError("polynomial is not constant")
    return next(iter(p.values()))


def reflect(cartan: CartanData, i: int, p: RootPoly) -> RootPoly:
    """Apply s_i: α_j ↦ α_j − ⟨α_iˇ, α_j⟩ α_i, extended multiplicatively."""
    n = cartan.rank
    images = {}
    for j in range(n):
        img = poly_var(j, n)
        c = cartan.pairing(i, j)
        if c:
            img = poly_sub(img, poly_mul(poly_const(c, n), poly_var(i, n)))
        images[j] = img
    out: RootPoly = {}
    for mono, coeff in p.items():
        term = poly_const(coeff, n)
        for j, e in enumerate(mono):
            for _ in range(e):
                term = poly_mul(term, images[j])
        out = poly_add(out, term)
    return out


def demazure(cartan: CartanData, i: int, p: RootPoly) -> RootPoly:
    """∂_i(f) = (f − s_i f)/α_i, with the division checked exact."""
    num = poly_sub(p, reflect(cartan, i, p))
    out: RootPoly = {}
    for mono, coeff in num.items():
        if mono[i] == 0:
            raise ArithmeticError("Demazure numerator not divisible by the root")
        m = list(mono)
        m[i] -= 1
        out[tuple(m)] = coeff
    return out


def odd_root_product(cartan: CartanData, t: int) -> RootPoly:
    """α_{t-1} α_{t-3} ... α_1 for even t ≥ 2."""
    n = cartan.rank
    p = poly_const(1, n)
    for k in range(t - 1, 0, -2):
        p = poly_mul(p, poly_var(k, n))
    return p


def segment_scalar(cartan: CartanData, t: int) -> int:
    """Evaluate one removed two-column segment of shape t to its scalar."""
    if t % 2 or t < 2:
        raise ValueError("segment shapes are even and at least 2")
    if t > cartan.rank:
        raise ValueError("segment does not fit the rank")
    p = odd_root_product(cartan, t)
    for j in range(0, t, 2):
        p = demazure(cartan, j, p)
    return poly_const_value(p)


def ll_scalar(xmask: int, emask: int, family: str) -> int:
    """Composite light-leaf scalar for the subset E of x, via Demazure calculus."""
    from .cominuscule import e_set  # local import: no cycle at module load

    if emask & ~xmask:
        raise ValueError("E must be a subset of x")
    if emask & ~e_set(xmask):
        raise ValueError("E must consist of removable even rows of x")
    elements = mask_elements(xmask)
    cartan = CartanData(family, max(elements) if elements else 1)
    scalar = 1
    for t in mask_elements(emask):
        scalar *= segment_scalar(cartan, t)
    return scalar


def quadric_scalar(n: int, i: int, family: str) -> int:
    """Intersection-form scalar for the length-i quadric representative.

    For n < i < 2n the composed light leaf reduces by one barbell-forcing
    step per trailing letter, consuming ∂_k(α_{k-1}) for k = 1..i-n.
    """
    if not 0 <= i < 2 * n:
        raise ValueError("quadric index out of range")
    if i <= n:
        return 1
    cartan = CartanData(family, n)
    scalar = 1
    for k in range(1, i - n + 1):
        scalar *= poly_const_value(demazure(cartan, k, poly_var(k - 1, n)))
    return scalar
