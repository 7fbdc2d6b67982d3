"""Desk-scale GF(2) linear codes and the shadow of a singly even self-dual code.

Vectors are Python ints; column 0 of a generator matrix is the most
significant bit, so integer order is lexicographic order on 0/1 strings.
Exhaustive enumeration packs codewords into ``uint64`` arrays, which caps
the length at 64 regardless of the guard.
"""

from __future__ import annotations

import enum
import random
import warnings
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from typing import TextIO

import numpy as np

from .bounds import BoundStatement, bound_bhm, bound_imp, bound_n2mod4, shadow_params
from .errors import DomainError, EnumerationGuardError, ParseError
from .johnson import bound_m

__all__ = [
    "DEFAULT_GUARD",
    "BinaryCode",
    "Parity",
    "Classification",
    "ShadowDecomposition",
    "Check",
    "LemmaReport",
    "BoundReport",
    "parse_generator_matrix",
    "repetition_sum",
    "extended_hamming",
    "dual",
    "rains_bound",
    "classify",
    "shadow_decompose",
    "check_shadow_lemmas",
    "verify_bound",
]

DEFAULT_GUARD = 36
_WORD_BITS = 64


def weight(x: int) -> int:
    return x.bit_count()


def dot(x: int, y: int) -> int:
    return (x & y).bit_count() & 1


def _reduce(rows: Iterable[int]) -> tuple[list[int], int]:
    """Row-reduce over GF(2). Returns the nonzero reduced rows (pivots on
    their leading bit, fully reduced) and the number of dropped rows."""
    basis: list[int] = []
    dropped = 0
    for row in rows:
        for b in basis:
            if row ^ b < row:
                row ^= b
        if row:
            lead = row.bit_length() - 1
            basis = [b ^ row if (b >> lead) & 1 else b for b in basis]
            basis.append(row)
            basis.sort(reverse=True)
        else:
            dropped += 1
    return basis, dropped


@dataclass(frozen=True)
class BinaryCode:
    """An [n, k] binary linear code.

    ``generators`` is normalized to the reduced row echelon basis, so two
    codes are equal exactly when they span the same space.
    """

    n: int
    generators: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainError(f"code length must be positive, got {self.n}")
        if any(g < 0 or g >> self.n for g in self.generators):
            raise DomainError(f"generator outside F_2^{self.n}")
        basis, _ = _reduce(self.generators)
        object.__setattr__(self, "generators", tuple(basis))

    @classmethod
    def from_rows(cls, n: int, rows: Iterable[int]) -> BinaryCode:
        return cls(n, tuple(rows))

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> BinaryCode:
        return parse_generator_matrix("\n".join(rows))

    @property
    def k(self) -> int:
        return len(self.generators)

    def codewords(self) -> np.ndarray:
        return span(self.generators, self.n)

    def contains(self, x: int) -> bool:
        for b in self.generators:
            if x ^ b < x:
                x ^= b
        return x == 0

    def rows_as_strings(self) -> list[str]:
        return [format(g, f"0{self.n}b") for g in self.generators]

    def __add__(self, other: BinaryCode) -> BinaryCode:
        """Direct sum."""
        gens = [g << other.n for g in self.generators] + list(other.generators)
        return BinaryCode.from_rows(self.n + other.n, gens)


def span(generators: Sequence[int], n: int) -> np.ndarray:
    """All 2^k combinations of ``generators`` as a uint64 array."""
    if n > _WORD_BITS:
        raise EnumerationGuardError(f"enumeration packs vectors in 64 bits; n={n} is too long")
    words = np.zeros(1, dtype=np.uint64)
    for g in generators:
        words = np.concatenate([words, words ^ np.uint64(g)])
    return words


def weight_distribution(words: np.ndarray, n: int) -> tuple[int, ...]:
    return tuple(int(c) for c in np.bincount(np.bitwise_count(words), minlength=n + 1))


def parse_generator_matrix(text: str | TextIO) -> BinaryCode:
    """Parse rows of 0/1 characters (whitespace ignored, blank lines
    skipped). Dependent rows are dropped with a warning."""
    if not isinstance(text, str):
        text = text.read()
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        bits = "".join(line.split())
        if not bits:
            continue
        bad = set(bits) - {"0", "1"}
        if bad:
            raise ParseError(f"line {lineno}: unexpected characters {sorted(bad)}")
        rows.append((lineno, bits))
    if not rows:
        raise ParseError("empty generator matrix")
    n = len(rows[0][1])
    for lineno, bits in rows:
        if len(bits) != n:
            raise ParseError(f"line {lineno}: row length {len(bits)} differs from {n}")
    basis, dropped = _reduce(int(bits, 2) for _, bits in rows)
    if dropped:
        warnings.warn(f"dropped {dropped} linearly dependent generator row(s)", stacklevel=2)
    return BinaryCode(n, tuple(basis))


def repetition_sum(k: int) -> BinaryCode:
    """i_2 direct-summed with itself k times."""
    return BinaryCode.from_rows(2 * k, [0b11 << (2 * j) for j in range(k)])


def extended_hamming() -> BinaryCode:
    return parse_generator_matrix("11110000\n00111100\n00001111\n01010101")


def dual(code: BinaryCode) -> BinaryCode:
    """Null space of the generator matrix."""
    n = code.n
    pivots = {g.bit_length() - 1: g for g in code.generators}
    rows = []
    for free in range(n):
        if free in pivots:
            continue
        vec = 1 << free
        for lead, g in pivots.items():
            if (g >> free) & 1:
                vec |= 1 << lead
        rows.append(vec)
    return BinaryCode.from_rows(n, rows)


class Parity(enum.Enum):
    DOUBLY_EVEN = "doubly even"
    SINGLY_EVEN = "singly even"
    NOT_SELF_DUAL = "not self-dual"


@dataclass(frozen=True)
class Classification:
    is_self_dual: bool
    parity: Parity
    min_weight: int
    is_extremal: bool
    weights: tuple[int, ...] = field(repr=False, default=())


def rains_bound(n: int, singly_even: bool) -> int:
    """Upper bound on the minimum weight of a self-dual code of length n."""
    if n % 24 == 22:
        return 4 * (n // 24) + 6
    if n % 24 == 0 and singly_even:
        return 4 * (n // 24) + 2
    return 4 * (n // 24) + 4


def _guard(code: BinaryCode, max_n: int) -> None:
    if code.n > max_n:
        raise EnumerationGuardError(
            f"length {code.n} exceeds the enumeration guard {max_n}; raise max_n to force it"
        )


def is_self_dual(code: BinaryCode) -> bool:
    gens = code.generators
    if 2 * code.k != code.n:
        return False
    return all(dot(a, b) == 0 for i, a in enumerate(gens) for b in gens[i:])


def classify(code: BinaryCode, max_n: int = DEFAULT_GUARD) -> Classification:
    _guard(code, max_n)
    weights = weight_distribution(code.codewords(), code.n)
    nonzero = [w for w in range(1, code.n + 1) if weights[w]]
    d = nonzero[0] if nonzero else 0
    if not is_self_dual(code):
        return Classification(False, Parity.NOT_SELF_DUAL, d, False, weights)
    singly = any(weights[w] for w in range(2, code.n + 1, 4))
    parity = Parity.SINGLY_EVEN if singly else Parity.DOUBLY_EVEN
    return Classification(True, parity, d, d == rains_bound(code.n, singly), weights)


# -- shadow ------------------------------------------------------------------


@dataclass(frozen=True)
class ShadowDecomposition:
    """C_0^perp = C_0 + {0, u1, g, u3} with C = C_0 u C_2 and S = C_1 u C_3.

    ``reps[i]`` is the representative of coset C_i (reps[0] = 0, reps[2] = g).
    C_1 is the coset holding the lexicographically smallest shadow vector.
    """

    code: BinaryCode
    c0: BinaryCode
    c0_dual: BinaryCode
    reps: tuple[int, int, int, int]
    A: tuple[int, ...]
    B: tuple[int, ...]
    d: int
    s: int

    @property
    def n(self) -> int:
        return self.code.n

    def coset(self, i: int) -> np.ndarray:
        return self.c0.codewords() ^ np.uint64(self.reps[i])

    def shadow(self) -> np.ndarray:
        return np.concatenate([self.coset(1), self.coset(3)])

    def in_c0(self, x: int) -> bool:
        return self.c0.contains(x)


def _weight_class(code: BinaryCode) -> tuple[list[int], int]:
    """Generators of C_0 and one generator g of weight 2 (mod 4)."""
    g = next((h for h in code.generators if weight(h) % 4 == 2), None)
    if g is None:
        raise DomainError("code has no generator of weight 2 (mod 4); it is doubly even")
    # for self-orthogonal h, g: wt(g+h) = wt(g) + wt(h) (mod 4)
    c0 = [h if weight(h) % 4 == 0 else h ^ g for h in code.generators if h != g]
    return c0, g


def shadow_decompose(code: BinaryCode, max_n: int = DEFAULT_GUARD) -> ShadowDecomposition:
    _guard(code, max_n)
    if not is_self_dual(code):
        raise DomainError("shadow needs a self-dual code")
    n = code.n
    c0_gens, g = _weight_class(code)
    c0 = BinaryCode.from_rows(n, c0_gens)
    c0_dual = dual(c0)
    u = next(h for h in c0_dual.generators if not code.contains(h))

    base = c0.codewords()
    first, second = base ^ np.uint64(u), base ^ np.uint64(u ^ g)
    if int(first.min()) <= int(second.min()):
        u1, u3 = u, u ^ g
    else:
        u1, u3 = u ^ g, u

    cosets = [base ^ np.uint64(r) for r in (0, u1, g, u3)]
    code_words = np.concatenate([cosets[0], cosets[2]])
    shadow_words = np.concatenate([cosets[1], cosets[3]])
    A = weight_distribution(code_words, n)
    B = weight_distribution(shadow_words, n)
    d = next(w for w in range(1, n + 1) if A[w])
    s = next(w for w in range(n + 1) if B[w])
    decomp = ShadowDecomposition(code, c0, c0_dual, (0, u1, g, u3), A, B, d, s)
    _check_invariants(decomp, cosets, code_words)
    return decomp


def _check_invariants(
    decomp: ShadowDecomposition, cosets: list[np.ndarray], code_words: np.ndarray
) -> None:
    n = decomp.n
    half = 1 << (n // 2 - 1)
    problems = []
    if any(len(c) != half for c in cosets):
        problems.append("coset sizes differ from 2^(n/2-1)")
    union = np.unique(np.concatenate(cosets))
    if len(union) != 4 * half:
        problems.append("cosets are not disjoint")
    if not np.array_equal(union, np.sort(decomp.c0_dual.codewords())):
        problems.append("cosets do not cover C_0^perp")
    if not np.array_equal(np.sort(code_words), np.sort(decomp.code.codewords())):
        problems.append("C_0 u C_2 differs from C")
    if sum(decomp.A) != 2 * half or sum(decomp.B) != 2 * half:
        problems.append("weight distributions do not sum to 2^(n/2)")
    if np.any(np.bitwise_count(cosets[0]) % 4):
        problems.append("C_0 contains a weight not divisible by 4")
    if any(decomp.B[w] for w in range(n + 1) if w % 4 != (n // 2) % 4):
        problems.append("shadow weight not congruent to n/2 (mod 4)")
    if problems:
        raise AssertionError("shadow decomposition invariant violated: " + "; ".join(problems))


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class LemmaReport:
    checks: tuple[Check, ...]
    exhaustive: bool

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _pairs(xs: Sequence[int], ys: Sequence[int], limit: int, rng: random.Random):
    if len(xs) * len(ys) <= limit:
        return [(x, y) for x in xs for y in ys], True
    return [(rng.choice(xs), rng.choice(ys)) for _ in range(limit)], False


def check_shadow_lemmas(
    decomp: ShadowDecomposition, max_pairs: int = 1 << 14, seed: int = 0
) -> LemmaReport:
    """Coset-sum, weight-congruence and inner-product facts about C_1, C_3.

    Pairs are checked exhaustively when there are at most ``max_pairs`` of
    them, otherwise ``max_pairs`` are sampled.
    """
    n = decomp.n
    rng = random.Random(seed)
    c1 = [int(x) for x in decomp.coset(1)]
    c3 = [int(x) for x in decomp.coset(3)]
    g = decomp.reps[2]
    in_c0 = decomp.in_c0

    p11, ex11 = _pairs(c1, c1, max_pairs, rng)
    p13, ex13 = _pairs(c1, c3, max_pairs, rng)
    want_11, want_13 = (0, 1) if n % 4 == 0 else (1, 0)

    def failures(pairs, pred) -> int:
        return sum(1 for x, y in pairs if not pred(x, y))

    bad_sum11 = failures(p11, lambda x, y: in_c0(x ^ y))
    bad_sum13 = failures(p13, lambda x, y: in_c0(x ^ y ^ g))
    bad_wt = [x for x in c1 + c3 if weight(x) % 4 != (n // 2) % 4]
    bad_dot11 = failures(p11, lambda x, y: dot(x, y) == want_11)
    bad_dot13 = failures(p13, lambda x, y: dot(x, y) == want_13)

    checks = (
        Check("x1+y1 in C0", bad_sum11 == 0, f"{len(p11) - bad_sum11}/{len(p11)} pairs"),
        Check("x1+x3 in C2", bad_sum13 == 0, f"{len(p13) - bad_sum13}/{len(p13)} pairs"),
        Check(
            "wt(x1) = wt(x3) = n/2 (mod 4)",
            not bad_wt,
            f"{len(c1) + len(c3) - len(bad_wt)}/{len(c1) + len(c3)} vectors",
        ),
        Check(f"x1.y1 = {want_11}", bad_dot11 == 0, f"{len(p11) - bad_dot11}/{len(p11)} pairs"),
        Check(f"x1.x3 = {want_13}", bad_dot13 == 0, f"{len(p13) - bad_dot13}/{len(p13)} pairs"),
    )
    return LemmaReport(checks, ex11 and ex13)


@dataclass(frozen=True)
class BoundReport:
    applicable: bool
    reason: str
    n: int
    d: int
    s: int
    B_s: int
    statement: BoundStatement | None = None
    prior: BoundStatement | None = None
    within_bound: bool | None = None
    pattern: Check | None = None
    family_checks: tuple[Check, ...] = ()


def _intersections(xs: Sequence[int], ys: Sequence[int], same: bool) -> set[int]:
    out = set()
    for i, x in enumerate(xs):
        for y in ys[i + 1:] if same else ys:
            out.add(weight(x & y))
    return out


def verify_bound(decomp: ShadowDecomposition) -> BoundReport:
    """Compare B_s of an explicit code with the applicable closed-form bound."""
    n, d, s = decomp.n, decomp.d, decomp.s
    b_s = decomp.B[s]
    if 2 * s != d + 2:
        return BoundReport(False, f"bounds not applicable: d(S)={s} differs from d/2+1={d // 2 + 1}", n, d, s, b_s)
    try:
        if n % 4 == 2:
            statement, prior = bound_n2mod4(n, s), None
        else:
            shadow_params(n, d)
            statement, prior = bound_imp(n, d), bound_bhm(n, d)
    except DomainError as exc:
        return BoundReport(False, f"bounds not applicable: {exc}", n, d, s, b_s)

    low = [[int(x) for x in decomp.coset(i) if weight(int(x)) == s] for i in (1, 3)]
    within_1 = _intersections(low[0], low[0], True) | _intersections(low[1], low[1], True)
    across = _intersections(low[0], low[1], False)
    want_within, want_across = (1, 0) if n % 4 == 2 else (0, 1)
    ok = within_1 <= {want_within} and across <= {want_across}
    pattern = Check(
        f"|x&y| = {want_within} within a coset, {want_across} across",
        ok,
        f"within={sorted(within_1)}, across={sorted(across)}",
    )

    family_checks: tuple[Check, ...] = ()
    if n % 4 == 2:
        # each Y_i is a one-intersecting family of s-subsets of its own support
        checks = []
        for label, vecs in zip(("Y1", "Y3"), low):
            support = 0
            for x in vecs:
                support |= x
            cap = bound_m(weight(support), s)
            checks.append(Check(f"|{label}| <= M_(|S|,s)", len(vecs) <= cap, f"{len(vecs)} <= {cap}"))
        family_checks = tuple(checks)

    return BoundReport(
        True,
        "n = 2 (mod 4), d(S) = d/2 + 1" if n % 4 == 2 else "n = 0 (mod 4), s = d/2 + 1",
        n,
        d,
        s,
        b_s,
        statement,
        prior,
        statement.allows(b_s),
        pattern,
        family_checks,
    )
