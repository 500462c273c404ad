"""Spherical and antispherical modules over the cominuscule quotient.

Vectors are finitely supported maps from coset representatives (subset
bit-masks, see :mod:`cominkl.coxeter`) to Laurent polynomials.  The
generator action on the standard basis is

    antispherical:  δ_x·b_s = δ_{xs} + v δ_x   (ascent inside ᴵW)
                            = δ_{xs} + v⁻¹ δ_x (descent)
                            = 0                (x·s leaves ᴵW)
    spherical:      same two first cases, and (v + v⁻¹) δ_x on exit.

The canonical basis d_x (resp. c_x) is filled in ζ-order by the usual
recursion from the descent removing the smallest row of the partition;
whatever bar-invariant constant corrections appear are stripped against
already-computed lower basis elements.  Because the labels and the
action are stable under the inclusion of rank n into rank n+1, the
tables are cached per kind only.

Subexpression machinery: a Bruhat stroll walks all 2^ℓ bit patterns of
a word, recording for each step the full-group direction (the exit case
is always an ascent) and whether the walk stays inside ᴵW.  A stroll is
parabolic when every step, taken or not, keeps x·s inside ᴵW; the
defect adds one per omitted ascent and subtracts one per omitted
descent.  Summing v^defect over parabolic strolls reproduces the
Bott-Samelson element exactly, which is the oracle the tests enforce.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from . import coxeter
from .coxeter import DOWN, EXIT, UP, Word, column_word, mask_elements, step, zeta
from .laurent import LaurentPoly, ONE, V, VINV

ANTISPHERICAL = "antispherical"
SPHERICAL = "spherical"

_VPLUS = V + VINV
_VSUB = VINV - V


@dataclass
class ModuleVector:
    """An element of the (anti)spherical module in the standard basis."""

    kind: str
    terms: dict[int, LaurentPoly] = field(default_factory=dict)

    def copy(self) -> "ModuleVector":
        return ModuleVector(self.kind, dict(self.terms))

    def add_term(self, mask: int, p: LaurentPoly) -> None:
        s = self.terms.get(mask)
        s = p if s is None else s + p
        if s:
            self.terms[mask] = s
        else:
            self.terms.pop(mask, None)

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        out = self.copy()
        for m, p in other.terms.items():
            out.add_term(m, p)
        return out

    def __sub__(self, other: "ModuleVector") -> "ModuleVector":
        out = self.copy()
        for m, p in other.terms.items():
            out.add_term(m, -p)
        return out

    def scaled(self, p: LaurentPoly) -> "ModuleVector":
        if not p:
            return ModuleVector(self.kind)
        return ModuleVector(self.kind, {m: q * p for m, q in self.terms.items()})

    def coeff(self, mask: int) -> LaurentPoly:
        return self.terms.get(mask, LaurentPoly.zero())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ModuleVector)
            and self.kind == other.kind
            and self.terms == other.terms
        )

    def __bool__(self) -> bool:
        return bool(self.terms)


def standard_basis(mask: int, kind: str) -> ModuleVector:
    return ModuleVector(kind, {mask: ONE})


def act_bs(vec: ModuleVector, i: int) -> ModuleVector:
    """Right action of b_{s_i}."""
    spherical = vec.kind == SPHERICAL
    out = ModuleVector(vec.kind)
    for mask, p in vec.terms.items():
        kind, new = step(mask, i)
        if kind == UP:
            out.add_term(new, p)
            out.add_term(mask, p.shifted(1))
        elif kind == DOWN:
            out.add_term(new, p)
            out.add_term(mask, p.shifted(-1))
        elif spherical:
            out.add_term(mask, p * _VPLUS)
    return out


def act_delta(vec: ModuleVector, i: int) -> ModuleVector:
    """Right action of the standard generator δ_{s_i}."""
    spherical = vec.kind == SPHERICAL
    out = ModuleVector(vec.kind)
    for mask, p in vec.terms.items():
        kind, new = step(mask, i)
        if kind == UP:
            out.add_term(new, p)
        elif kind == DOWN:
            out.add_term(new, p)
            out.add_term(mask, p * _VSUB)
        else:
            out.add_term(mask, p.shifted(-1) if spherical else -p.shifted(1))
    return out


def act_delta_inv(vec: ModuleVector, i: int) -> ModuleVector:
    """Right action of δ_{s_i}⁻¹ = δ_{s_i} + (v − v⁻¹)."""
    out = act_delta(vec, i)
    for mask, p in vec.terms.items():
        out.add_term(mask, p.shifted(1))
        out.add_term(mask, -p.shifted(-1))
    return out


def bott_samelson(word: Iterable[int], kind: str) -> ModuleVector:
    """δᴵ_∅ · b_{s_1} ... b_{s_k}."""
    vec = standard_basis(0, kind)
    for i in word:
        vec = act_bs(vec, i)
    return vec


# ---------------------------------------------------------------------------
# canonical bases

_pkl_cache: dict[tuple[str, int], ModuleVector] = {}


def _descent_step(mask: int) -> tuple[int, int]:
    """(parent mask, generator) removing the smallest row of the partition."""
    t = mask_elements(mask)[-1]
    if t == 1:
        return mask ^ 1, 0
    return mask ^ (1 << (t - 1)) ^ (1 << (t - 2)), t - 1


def pkl_basis(mask: int, kind: str) -> ModuleVector:
    """The canonical basis element d_x (antispherical) or c_x (spherical)."""
    key = (kind, mask)
    cached = _pkl_cache.get(key)
    if cached is not None:
        return cached
    if mask == 0:
        result = standard_basis(0, kind)
        _pkl_cache[key] = result
        return result
    parent, i = _descent_step(mask)
    h = act_bs(pkl_basis(parent, kind), i)
    for y in sorted((m for m in h.terms if m != mask), reverse=True):
        p = h.terms.get(y)
        if p is None:
            continue
        c = p.coeff(0)
        if c:
            h = h - pkl_basis(y, kind).scaled(LaurentPoly.monomial(c))
    assert h.terms.get(mask) == ONE, "canonical basis lost unitriangularity"
    assert all(
        p.in_v_times_nonneg() for y, p in h.terms.items() if y != mask
    ), "canonical basis element is not positively graded"
    _pkl_cache[key] = h
    return h


def expand_in_kl(vec: ModuleVector) -> dict[int, LaurentPoly]:
    """Coefficients g_y with vec = Σ g_y · (canonical basis), exactly."""
    res = vec.copy()
    out: dict[int, LaurentPoly] = {}
    while res.terms:
        y = max(res.terms)  # mask order = ζ-order
        c = res.terms[y]
        out[y] = c
        res = res - pkl_basis(y, vec.kind).scaled(c)
    return out


# ---------------------------------------------------------------------------
# the bar involution on module vectors

_bar_delta_cache: dict[tuple[str, int], ModuleVector] = {}


def _bar_delta(mask: int, kind: str) -> ModuleVector:
    """Image of δᴵ_x under bar, i.e. δᴵ_∅ · δ_{x⁻¹}⁻¹."""
    key = (kind, mask)
    cached = _bar_delta_cache.get(key)
    if cached is None:
        cached = standard_basis(0, kind)
        for i in column_word(mask):
            cached = act_delta_inv(cached, i)
        _bar_delta_cache[key] = cached
    return cached


def module_bar(vec: ModuleVector) -> ModuleVector:
    out = ModuleVector(vec.kind)
    for mask, p in vec.terms.items():
        out = out + _bar_delta(mask, vec.kind).scaled(p.bar())
    return out


# ---------------------------------------------------------------------------
# Bruhat strolls


@dataclass(frozen=True)
class Stroll:
    """A decorated subexpression of a fixed word.

    ``arrows`` holds +1/-1 per step for the full-group direction of
    x_{i-1}·s_i (exits are ascents); ``endpoints`` are the projected
    cosets x_0..x_k; ``defect`` = #(↑,0) − #(↓,0); ``parabolic`` records
    whether every step stayed inside ᴵW.
    """

    word: Word
    bits: tuple[int, ...]
    arrows: tuple[int, ...]
    endpoints: tuple[int, ...]
    defect: int
    parabolic: bool

    @property
    def endpoint(self) -> int:
        return self.endpoints[-1]


def make_stroll(word: Word, bits: Iterable[int]) -> Stroll:
    bits = tuple(bits)
    mask = 0
    endpoints = [0]
    arrows = []
    defect = 0
    parabolic = True
    for i, bit in zip(word, bits):
        kind, new = step(mask, i)
        arrows.append(UP if kind != DOWN else DOWN)
        if kind == EXIT:
            parabolic = False
            new = mask  # the coset projection does not move
        if bit:
            mask = new
        else:
            defect += 1 if kind == UP else (-1 if kind == DOWN else 1)
        endpoints.append(mask)
    return Stroll(word, bits, tuple(arrows), tuple(endpoints), defect, parabolic)


def enumerate_parabolic_strolls(word: Word) -> list[Stroll]:
    """All 2^ℓ strolls of the word, each flagged parabolic or not."""
    if len(word) > 24:
        raise ValueError("stroll enumeration capped at length 24")
    return [
        make_stroll(word, ((m >> k) & 1 for k in range(len(word))))
        for m in range(1 << len(word))
    ]


def _parabolic_walks(word: Word) -> Iterator[tuple[int, int]]:
    """(endpoint, defect) over parabolic strolls only, pruning at exits."""
    stack = [(0, 0, 0)]
    k = len(word)
    while stack:
        pos, mask, df = stack.pop()
        if pos == k:
            yield mask, df
            continue
        kind, new = step(mask, word[pos])
        if kind == EXIT:
            continue
        stack.append((pos + 1, new, df))
        stack.append((pos + 1, mask, df + (1 if kind == UP else -1)))


def defect_expand(word: Word) -> ModuleVector:
    """Σ v^{defect} δᴵ_{endpoint} over parabolic strolls (antispherical)."""
    if len(word) > 24:
        raise ValueError("stroll enumeration capped at length 24")
    out = ModuleVector(ANTISPHERICAL)
    for mask, df in _parabolic_walks(tuple(word)):
        out.add_term(mask, LaurentPoly.monomial(1, df))
    return out
