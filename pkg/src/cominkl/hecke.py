"""The Hecke algebra in its standard basis, with the canonical basis
computed on Bruhat intervals.

Elements are finitely supported dicts from group elements (tuples, see
:mod:`cominkl.coxeter`) to Laurent polynomials.  The defining relations
are δ_x δ_s = δ_{xs} when the step ascends and
δ_x δ_s = δ_{xs} + (v⁻¹ − v) δ_x when it descends, so that
b_s = δ_s + v satisfies (δ_s + v)(δ_s − v⁻¹) = 0.

The canonical basis element b_x is produced by the usual recursion
b_x = b_{x'} b_s − Σ μ(y, x') b_y over a right descent s of x.  All the
recursion ever touches lies below x in Bruhat order, so large ambient
groups (the rank-7 type A check) stay cheap: only the interval matters.
"""

from __future__ import annotations

from typing import Iterable

from . import coxeter
from .coxeter import CoxeterType, Group, Word
from .laurent import LaurentPoly, ONE, V, VINV

HeckeElt = dict  # Group -> LaurentPoly

_VSUB = VINV - V   # v⁻¹ − v, the descent correction
_VBAR = V - VINV   # v − v⁻¹, its bar image


def unit(ct: CoxeterType) -> HeckeElt:
    return {coxeter.identity(ct): ONE}


def delta(g: Group) -> HeckeElt:
    return {g: ONE}


def _iadd(h: HeckeElt, g: Group, p: LaurentPoly) -> None:
    s = h.get(g)
    s = p if s is None else s + p
    if s:
        h[g] = s
    else:
        h.pop(g, None)


def add(a: HeckeElt, b: HeckeElt) -> HeckeElt:
    out = dict(a)
    for g, p in b.items():
        _iadd(out, g, p)
    return out


def sub(a: HeckeElt, b: HeckeElt) -> HeckeElt:
    out = dict(a)
    for g, p in b.items():
        _iadd(out, g, -p)
    return out


def scale(a: HeckeElt, p: LaurentPoly) -> HeckeElt:
    if not p:
        return {}
    return {g: q * p for g, q in a.items()}


def mul_delta_s(ct: CoxeterType, h: HeckeElt, i: int, side: str = "right") -> HeckeElt:
    """Multiply by the standard generator δ_{s_i} on the given side."""
    out: HeckeElt = {}
    for g, p in h.items():
        if side == "right":
            descent = coxeter.has_right_descent(ct, g, i)
            gs = coxeter.apply_right(ct, g, i)
        else:
            descent = coxeter.has_right_descent(ct, coxeter.inverse(ct, g), i)
            gs = coxeter.apply_left(ct, i, g)
        _iadd(out, gs, p)
        if descent:
            _iadd(out, g, p * _VSUB)
    return out


def mul_b_s(ct: CoxeterType, h: HeckeElt, i: int, side: str = "right") -> HeckeElt:
    """Multiply by b_{s_i} = δ_{s_i} + v."""
    out: HeckeElt = {}
    for g, p in h.items():
        if side == "right":
            descent = coxeter.has_right_descent(ct, g, i)
            gs = coxeter.apply_right(ct, g, i)
        else:
            descent = coxeter.has_right_descent(ct, coxeter.inverse(ct, g), i)
            gs = coxeter.apply_left(ct, i, g)
        _iadd(out, gs, p)
        _iadd(out, g, p.shifted(-1) if descent else p.shifted(1))
    return out


def bs_product(ct: CoxeterType, word: Iterable[int]) -> HeckeElt:
    """b_{s_1} ... b_{s_k} for the given expression."""
    h = unit(ct)
    for i in word:
        h = mul_b_s(ct, h, i)
    return h


def mul_delta_s_inv(ct: CoxeterType, h: HeckeElt, i: int) -> HeckeElt:
    """Multiply by δ_{s_i}⁻¹ = δ_{s_i} + v − v⁻¹ on the right."""
    out = mul_delta_s(ct, h, i)
    for g, p in h.items():
        _iadd(out, g, p * _VBAR)
    return out


def bar(ct: CoxeterType, h: HeckeElt) -> HeckeElt:
    """The bar involution: v ↦ v⁻¹ and δ_x ↦ δ_{x⁻¹}⁻¹."""
    out: HeckeElt = {}
    for g, p in h.items():
        barred = unit(ct)
        for i in coxeter.reduced_word(ct, g):
            barred = mul_delta_s_inv(ct, barred, i)
        for gg, q in barred.items():
            _iadd(out, gg, p.bar() * q)
    return out


_kl_cache: dict[tuple[CoxeterType, Group], HeckeElt] = {}


def kl_b(ct: CoxeterType, g: Group) -> HeckeElt:
    """The canonical basis element b_g, computed within [e, g]."""
    key = (ct, g)
    cached = _kl_cache.get(key)
    if cached is not None:
        return cached
    ident = coxeter.identity(ct)
    if g == ident:
        result = unit(ct)
        _kl_cache[key] = result
        return result
    i = next(j for j in range(coxeter.num_gens(ct)) if coxeter.has_right_descent(ct, g, j))
    gp = coxeter.apply_right(ct, g, i)
    h = mul_b_s(ct, kl_b(ct, gp), i)
    # strip the μ-correction terms: everything bar-invariant left over is a
    # constant multiple of a lower canonical basis element
    order = sorted((y for y in h if y != g), key=lambda y: -coxeter.length(ct, y))
    for y in order:
        p = h.get(y)
        if p is None:
            continue
        c = p.coeff(0)
        if c:
            h = sub(h, scale(kl_b(ct, y), LaurentPoly.monomial(c)))
    assert h.get(g) == ONE, "canonical basis element lost unitriangularity"
    assert all(p.in_v_times_nonneg() for y, p in h.items() if y != g), (
        "canonical basis element is not positively graded"
    )
    _kl_cache[key] = h
    return h


def mu(ct: CoxeterType, y: Group, x: Group) -> int:
    """Coefficient of v in the KL polynomial h_{y,x}."""
    p = kl_b(ct, x).get(y)
    return p.coeff(1) if p is not None else 0


def expand_in_kl(ct: CoxeterType, h: HeckeElt) -> dict[Group, LaurentPoly]:
    """Coefficients g_y with h = Σ g_y b_y, by triangular elimination."""
    h = dict(h)
    out: dict[Group, LaurentPoly] = {}
    while h:
        y = max(h, key=lambda g: (coxeter.length(ct, g), g))
        c = h[y]
        out[y] = c
        h = sub(h, scale(kl_b(ct, y), c))
    return out


def defect_expand_full(ct: CoxeterType, word: Word) -> HeckeElt:
    """Sum of v^{defect} δ_{endpoint} over all 2^ℓ subexpressions.

    The defect counts ascent-steps omitted minus descent-steps omitted;
    this enumeration is the independent oracle for :func:`bs_product`.
    """
    if len(word) > 24:
        raise ValueError("subexpression enumeration capped at length 24")
    out: HeckeElt = {}
    ident = coxeter.identity(ct)
    # iterative depth-first walk over the binary tree of bit choices
    stack = [(0, ident, 0)]
    while stack:
        pos, g, df = stack.pop()
        if pos == len(word):
            _iadd(out, g, LaurentPoly.monomial(1, df))
            continue
        i = word[pos]
        up = not coxeter.has_right_descent(ct, g, i)
        gs = coxeter.apply_right(ct, g, i)
        stack.append((pos + 1, gs, df))                      # bit 1: move
        stack.append((pos + 1, g, df + (1 if up else -1)))   # bit 0: stay
    return out
