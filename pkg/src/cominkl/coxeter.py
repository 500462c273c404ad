"""Weyl groups of types A/B/C and the subset model of their (co)minuscule
parabolic quotient.

Group elements are plain tuples: type A_n elements are permutations of
{1..n+1} in one-line notation, and type B_n/C_n elements are signed
permutations given by the window (w(1), ..., w(n)) with w(i) ∈ ±{1..n}.
B and C share the same abstract group; the family only matters for the
Cartan pairings consumed elsewhere.

Generators are labelled 0..n-1 with 0 the special end node, so that in
type B/C the generator 0 negates the first window entry and generator i
(i ≥ 1) swaps window positions i, i+1.  Minimal coset representatives
for the parabolic generated by {1..n-1} are identified with subsets of
{1..n}, stored as bit-masks (bit t-1 set ⟺ t ∈ x).  On masks the
orbit action is: generator 0 toggles membership of 1, and generator
i ≥ 1 swaps the membership of i and i+1 when exactly one is present.

A subset is read as a strict partition (its elements in decreasing
order); Bruhat order on the quotient is rowwise containment of strict
partitions, and ζ(x) = Σ_{t∈x} 2^t is a linear refinement of it.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

Word = tuple[int, ...]
Group = tuple[int, ...]


class CoxeterType(NamedTuple):
    family: str  # 'A', 'B' or 'C'
    rank: int

    def validate(self) -> "CoxeterType":
        if self.family not in ("A", "B", "C"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.rank < 1:
            raise ValueError("rank must be positive")
        return self

    @property
    def is_signed(self) -> bool:
        return self.family in ("B", "C")


# ---------------------------------------------------------------------------
# group elements


def identity(ct: CoxeterType) -> Group:
    if ct.family == "A":
        return tuple(range(1, ct.rank + 2))
    return tuple(range(1, ct.rank + 1))


def apply_right(ct: CoxeterType, g: Group, i: int) -> Group:
    """g · s_i."""
    if ct.family == "A":
        w = list(g)
        w[i], w[i + 1] = w[i + 1], w[i]
        return tuple(w)
    if i == 0:
        return (-g[0],) + g[1:]
    w = list(g)
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def apply_left(ct: CoxeterType, i: int, g: Group) -> Group:
    """s_i · g."""
    if ct.family == "A":
        a, b = i + 1, i + 2
        return tuple(b if v == a else a if v == b else v for v in g)
    if i == 0:
        return tuple(-v if abs(v) == 1 else v for v in g)
    a, b = i, i + 1

    def sw(v: int) -> int:
        if v == a:
            return b
        if v == b:
            return a
        if v == -a:
            return -b
        if v == -b:
            return -a
        return v

    return tuple(sw(v) for v in g)


def length(ct: CoxeterType, g: Group) -> int:
    inv = sum(1 for a, b in itertools.combinations(g, 2) if a > b)
    if ct.family == "A":
        return inv
    return inv + sum(-v for v in g if v < 0)


def has_right_descent(ct: CoxeterType, g: Group, i: int) -> bool:
    """ℓ(g·s_i) < ℓ(g), tested in O(1) from the window."""
    if ct.family == "A":
        return g[i] > g[i + 1]
    if i == 0:
        return g[0] < 0
    return g[i - 1] > g[i]


def num_gens(ct: CoxeterType) -> int:
    return ct.rank


def evaluate_word(ct: CoxeterType, word: Iterable[int]) -> Group:
    g = identity(ct)
    for i in word:
        g = apply_right(ct, g, i)
    return g


def is_reduced(ct: CoxeterType, word: Word) -> bool:
    return length(ct, evaluate_word(ct, word)) == len(word)


def inverse(ct: CoxeterType, g: Group) -> Group:
    if ct.family == "A":
        w = [0] * len(g)
        for pos, v in enumerate(g):
            w[v - 1] = pos + 1
        return tuple(w)
    w = [0] * len(g)
    for pos, v in enumerate(g):
        if v > 0:
            w[v - 1] = pos + 1
        else:
            w[-v - 1] = -(pos + 1)
    return tuple(w)


def reduced_word(ct: CoxeterType, g: Group) -> Word:
    """The lexicographically built reduced word (first descent stripped last)."""
    out = []
    while True:
        for i in range(num_gens(ct)):
            if has_right_descent(ct, g, i):
                out.append(i)
                g = apply_right(ct, g, i)
                break
        else:
            break
    return tuple(reversed(out))


def all_elements(ct: CoxeterType) -> Iterator[Group]:
    if ct.family == "A":
        yield from itertools.permutations(range(1, ct.rank + 2))
        return
    for perm in itertools.permutations(range(1, ct.rank + 1)):
        for signs in itertools.product((1, -1), repeat=ct.rank):
            yield tuple(s * v for s, v in zip(signs, perm))


def bruhat_interval_below(ct: CoxeterType, g: Group) -> frozenset[Group]:
    """{h : h ≤ g}, via the subword property over one reduced expression."""
    interval = {identity(ct)}
    for i in reduced_word(ct, g):
        interval |= {apply_right(ct, h, i) for h in interval}
    return frozenset(interval)


def bruhat_leq_group(ct: CoxeterType, h: Group, g: Group) -> bool:
    return h in bruhat_interval_below(ct, g)


# ---------------------------------------------------------------------------
# the cominuscule quotient: subsets of {1..n} as bit-masks

UP, DOWN, EXIT = 1, -1, 0


def subset_action(mask: int, i: int) -> int:
    """Right orbit action of s_i on the coset labelled by ``mask``."""
    if i == 0:
        return mask ^ 1
    lo, hi = 1 << (i - 1), 1 << i
    if bool(mask & lo) != bool(mask & hi):
        return mask ^ (lo | hi)
    return mask


def step(mask: int, i: int) -> tuple[int, int]:
    """Classify x·s_i for x ∈ ᴵW: (UP|DOWN, new mask) or (EXIT, mask).

    UP/DOWN report the full-group Bruhat direction; EXIT means x·s_i
    leaves the set of minimal coset representatives (always an ascent).
    """
    if i == 0:
        if mask & 1:
            return DOWN, mask ^ 1
        return UP, mask | 1
    lo, hi = 1 << (i - 1), 1 << i
    has_lo, has_hi = bool(mask & lo), bool(mask & hi)
    if has_lo and not has_hi:
        return UP, mask ^ (lo | hi)
    if has_hi and not has_lo:
        return DOWN, mask ^ (lo | hi)
    return EXIT, mask


def mask_elements(mask: int) -> tuple[int, ...]:
    """The subset as a strictly decreasing tuple (a strict partition)."""
    out = []
    t = mask.bit_length()
    while t:
        if mask >> (t - 1) & 1:
            out.append(t)
        t -= 1
    return tuple(out)


def mask_from_elements(elements: Iterable[int]) -> int:
    mask = 0
    for t in elements:
        mask |= 1 << (t - 1)
    return mask


def mask_length(mask: int) -> int:
    return sum(mask_elements(mask))


def mask_card(mask: int) -> int:
    return bin(mask).count("1")


def zeta(mask: int) -> int:
    return sum(1 << t for t in mask_elements(mask))


def bruhat_leq(ymask: int, xmask: int) -> bool:
    """Containment order on strict partitions."""
    ys, xs = mask_elements(ymask), mask_elements(xmask)
    if len(ys) > len(xs):
        return False
    return all(y <= x for y, x in zip(ys, xs))


def mask_text(mask: int) -> str:
    if not mask:
        return "{}"
    return "{" + ",".join(str(t) for t in mask_elements(mask)) + "}"


def row_word(mask: int) -> Word:
    """Row-by-row reading of the right-arm tableau: each row t gives 0..t-1."""
    out: list[int] = []
    for t in mask_elements(mask):
        out.extend(range(t))
    return tuple(out)


@lru_cache(maxsize=None)
def shifted_cells(mask: int) -> tuple[tuple[int, int, int], ...]:
    """Cells (col, row, letter) of the shifted tableau, in column-major order.

    Row r (1-based, rows in decreasing part order) is shifted right by
    2(r-1), so its boxes occupy columns 2(r-1)+1 .. 2(r-1)+t_r and the
    box in column c carries the letter c - 2(r-1) - 1.
    """
    cells = []
    for r, t in enumerate(mask_elements(mask), start=1):
        for m in range(t):
            cells.append((2 * (r - 1) + m + 1, r, m))
    cells.sort()
    return tuple(cells)


@lru_cache(maxsize=None)
def column_word(mask: int) -> Word:
    """Column-major reading of the shifted tableau."""
    return tuple(letter for _, _, letter in shifted_cells(mask))


def walk(mask: int, word: Iterable[int]) -> int:
    for i in word:
        mask = subset_action(mask, i)
    return mask


# ---------------------------------------------------------------------------
# between group elements and coset representatives


def parabolic_gens(ct: CoxeterType, quadric: bool = False) -> tuple[int, ...]:
    """Generator indices of the fixed parabolic I.

    Cominuscule/spherical modes drop the special end node 0 (I is the
    type A_{n-1} chain); quadric mode drops the opposite end node n-1.
    """
    if quadric:
        return tuple(range(ct.rank - 1))
    return tuple(range(1, ct.rank))


def is_min_coset_rep(ct: CoxeterType, g: Group, quadric: bool = False) -> bool:
    lg = length(ct, g)
    return all(
        length(ct, apply_left(ct, i, g)) > lg for i in parabolic_gens(ct, quadric)
    )


def to_group(ct: CoxeterType, mask: int) -> Group:
    return evaluate_word(ct, column_word(mask))


def to_coset_rep(ct: CoxeterType, g: Group) -> int:
    """The subset labelling g ∈ ᴵW; rejects non-minimal representatives."""
    if not is_min_coset_rep(ct, g):
        raise ValueError("element is not a minimal coset representative")
    return walk(0, reduced_word(ct, g))


def all_masks(rank: int) -> range:
    return range(1 << rank)
