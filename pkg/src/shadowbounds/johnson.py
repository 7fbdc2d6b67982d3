"""Johnson scheme J(v, d): Hahn polynomials, the second eigenmatrix Q,
Delsarte's inequalities and the one-intersecting family bound M_{v,d}.

Relations are indexed by i with (x, y) in R_i iff |x & y| = d - i, and
``EigenmatrixQ.entries[i][j]`` is q_j(i).
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import DomainError, NoNegativeEntryError
from .exact_arith import binom

__all__ = [
    "JohnsonParams",
    "EigenmatrixQ",
    "IntersectionDistribution",
    "hahn",
    "q_matrix",
    "delsarte_vector",
    "bound_m",
]


@dataclass(frozen=True)
class JohnsonParams:
    v: int
    d: int

    def __post_init__(self) -> None:
        if self.v < 1 or self.d < 1:
            raise DomainError(f"J(v,d) needs positive v and d, got ({self.v},{self.d})")

    @property
    def num_vertices(self) -> int:
        return binom(self.v, self.d)

    def valency(self, i: int) -> int:
        """Number of vertices in relation R_i with a fixed vertex."""
        return binom(self.d, i) * binom(self.v - self.d, i)


@dataclass(frozen=True)
class EigenmatrixQ:
    params: JohnsonParams
    entries: tuple[tuple[Fraction, ...], ...]

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i][j]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.entries)

    def multiplicities(self) -> tuple[Fraction, ...]:
        return self.entries[0]

    def left_multiply(self, vector: Iterable[Fraction]) -> tuple[Fraction, ...]:
        """Row vector times Q."""
        vec = list(vector)
        size = self.params.d + 1
        if len(vec) != size:
            raise ValueError(f"expected a vector of length {size}, got {len(vec)}")
        return tuple(
            sum((vec[i] * self.entries[i][j] for i in range(size)), Fraction(0))
            for j in range(size)
        )


@dataclass(frozen=True)
class IntersectionDistribution:
    counts: tuple[Fraction, ...]
    size: int


def hahn(v: int, k: int, l: int, x: int) -> Fraction:
    """q_l(x) for J(v, k), as the finite sum

    (C(v,l) - C(v,l-1)) * sum_i (-1)^i C(l,i) C(v+1-l,i) C(x,i) / (C(k,i) C(v-k,i)).
    """
    if v < 2 * k:
        raise DomainError(f"hahn requires v >= 2k, got v={v}, k={k}")
    if not 0 <= l <= k:
        raise DomainError(f"degree l={l} outside 0..{k}")
    if not 0 <= x <= k:
        raise DomainError(f"argument x={x} outside 0..{k}")
    total = Fraction(0)
    for i in range(l + 1):
        term = Fraction(
            binom(l, i) * binom(v + 1 - l, i) * binom(x, i),
            binom(k, i) * binom(v - k, i),
        )
        total += -term if i % 2 else term
    return (binom(v, l) - (binom(v, l - 1) if l >= 1 else 0)) * total


@lru_cache(maxsize=None)
def _q_entries(v: int, d: int) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(hahn(v, d, j, i) for j in range(d + 1)) for i in range(d + 1))


def q_matrix(params: JohnsonParams) -> EigenmatrixQ:
    if params.v < 2 * params.d:
        raise DomainError(f"second eigenmatrix needs v >= 2d, got J({params.v},{params.d})")
    return EigenmatrixQ(params, _q_entries(params.v, params.d))


def _as_mask(subset: Iterable[int], params: JohnsonParams) -> int:
    members = set(subset)
    if len(members) != params.d:
        raise DomainError(f"subset {sorted(members)} does not have size {params.d}")
    mask = 0
    for element in members:
        if not 1 <= element <= params.v:
            raise DomainError(f"element {element} outside 1..{params.v}")
        mask |= 1 << (element - 1)
    return mask


def delsarte_vector(
    subsets: Iterable[Iterable[int]], params: JohnsonParams
) -> tuple[IntersectionDistribution, tuple[Fraction, ...]]:
    """Inner distribution a of a family Y of d-subsets of {1..v}, and aQ.

    Delsarte's inequalities say every entry of aQ is nonnegative.
    """
    masks = [_as_mask(s, params) for s in subsets]
    if not masks:
        raise DomainError("family of subsets must be nonempty")
    if len(set(masks)) != len(masks):
        raise DomainError("family contains a repeated subset")
    if params.v > 64:
        raise DomainError("delsarte_vector packs subsets into 64-bit words; v must be <= 64")

    words = np.array(masks, dtype=np.uint64)
    meets = np.bitwise_count(words[:, None] & words[None, :]).ravel()
    # meets holds |x & y| in 0..d; relation index is d - |x & y|
    hist = np.bincount(meets, minlength=params.d + 1)
    size = len(masks)
    counts = tuple(Fraction(int(hist[params.d - i]), size) for i in range(params.d + 1))
    dist = IntersectionDistribution(counts, size)
    return dist, q_matrix(params).left_multiply(counts)


@lru_cache(maxsize=None)
def bound_m(v: int, d: int) -> Fraction:
    """Delsarte bound on a family of d-subsets of a v-set that pairwise
    meet in exactly one point (not floored)."""
    if d < 1 or v < 0:
        raise DomainError(f"bound_m needs d >= 1 and v >= 0, got v={v}, d={d}")
    if v <= d - 1:
        return Fraction(0)
    if v <= 2 * d - 2:
        return Fraction(1)
    if v == 2 * d - 1:
        return Fraction(2)

    q = q_matrix(JohnsonParams(v, d))
    assert q.entry(d - 1, 0) == 1
    candidates = [
        1 - q.entry(0, j) / q.entry(d - 1, j)
        for j in range(1, d + 1)
        if q.entry(d - 1, j) < 0
    ]
    if not candidates:
        raise NoNegativeEntryError(f"no j with q_j({d - 1}) < 0 in J({v},{d})")
    return min(candidates)
