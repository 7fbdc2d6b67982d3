"""Closed-form upper bounds on B_s, the number of weight-s shadow vectors
of a singly even self-dual [n, n/2, d] code with s = d/2 + 1.

For n = 2 (mod 4) the bound comes from Delsarte's inequalities on two
disjoint one-intersecting families (:func:`bound_n2mod4`). For n = 0 (mod 4)
there is the older three-case bound (:func:`bound_bhm`) and the improved
five-case bound (:func:`bound_imp`).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError
from .exact_arith import ceil_div, ceil_sqrt, ceil_two_sqrt
from .johnson import bound_m
from .reference import d_of_n

__all__ = [
    "CaseTag",
    "ShadowParams",
    "BoundStatement",
    "LBounds",
    "shadow_params",
    "bound_n2mod4",
    "lemma42_bound",
    "maxab_closed",
    "maxab_bruteforce",
    "pair_unique",
    "l_bounds",
    "bound_bhm",
    "bound_imp",
    "imp_case",
    "table1",
    "table2",
    "TABLE1_PARAMS",
    "TABLE2_PARAMS",
]


class CaseTag(enum.Enum):
    N2MOD4 = "N2MOD4"
    BHM_I = "BHM_I"
    BHM_II = "BHM_II"
    BHM_III = "BHM_III"
    IMP_I = "IMP_I"
    IMP_II = "IMP_II"
    IMP_III = "IMP_III"
    IMP_IV = "IMP_IV"
    IMP_V = "IMP_V"

    @property
    def roman(self) -> str:
        """Roman-numeral case label, '' for N2MOD4."""
        _, _, numeral = self.value.partition("_")
        return numeral.lower() if self is not CaseTag.N2MOD4 else ""


_EXCLUDING = {CaseTag.BHM_II, CaseTag.IMP_III}


@dataclass(frozen=True)
class ShadowParams:
    n: int
    d: int
    s: int


def shadow_params(n: int, d: int) -> ShadowParams:
    """Validate (n, d) for the s = d/2 + 1 setting and return (n, d, s).

    Requires n even, d even and positive, and d = n - 2 (mod 8); the last
    congruence fixes the parity of s according to n mod 4.
    """
    if n < 1 or d < 1:
        raise DomainError(f"n and d must be positive, got n={n}, d={d}")
    if n % 2:
        raise DomainError(f"self-dual codes have even length, got n={n}")
    if d % 2:
        raise DomainError(f"singly even self-dual codes have even minimum weight, got d={d}")
    if (d - (n - 2)) % 8:
        raise DomainError(
            f"d(S) = d/2 + 1 forces d = n - 2 (mod 8); got n={n}, d={d} "
            f"(d mod 8 = {d % 8}, n - 2 mod 8 = {(n - 2) % 8})"
        )
    return ShadowParams(n, d, d // 2 + 1)


@dataclass(frozen=True)
class BoundStatement:
    """B_s <= bound, and B_s is not in ``excluded``.

    ``exact`` keeps the rational value before flooring; ``details`` carries
    intermediate quantities (l-values, divisibility flag, maximizing v).
    """

    bound: int
    case_tag: CaseTag
    conditions: ShadowParams
    excluded: frozenset[int] = frozenset()
    exact: Fraction | None = None
    details: dict = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        if self.bound < 0:
            raise ValueError(f"negative bound {self.bound}")
        if any(x >= self.bound for x in self.excluded):
            raise ValueError(f"excluded values {set(self.excluded)} must lie below {self.bound}")
        if bool(self.excluded) != (self.case_tag in _EXCLUDING):
            raise ValueError(f"case {self.case_tag.name} inconsistent with excluded={set(self.excluded)}")

    def allows(self, value: int) -> bool:
        return 0 <= value <= self.bound and value not in self.excluded

    def as_row(self) -> dict:
        c = self.conditions
        return {
            "n": c.n,
            "d": c.d,
            "s": c.s,
            "bound": self.bound,
            "case": self.case_tag.value,
            "excluded": sorted(self.excluded),
        }


@dataclass(frozen=True)
class LBounds:
    l1: Fraction
    l2: Fraction
    l1p: Fraction
    l2p: Fraction


# -- n = 2 (mod 4) ----------------------------------------------------------


def bound_n2mod4(n: int, s: int) -> BoundStatement:
    """max over 0 <= v <= n/2 of floor(M_{v,s} + M_{n-v,s})."""
    if n % 4 != 2:
        raise DomainError(f"this bound needs n = 2 (mod 4), got n={n}")
    if s % 2 == 0 or s < 3:
        raise DomainError(f"this bound needs odd s >= 3, got s={s}")
    params = shadow_params(n, 2 * s - 2)

    best, best_v = -1, None
    for v in range(n // 2 + 1):
        value = math.floor(bound_m(v, s) + bound_m(n - v, s))
        if value > best:
            best, best_v = value, v
    return BoundStatement(
        bound=best,
        case_tag=CaseTag.N2MOD4,
        conditions=params,
        exact=Fraction(best),
        details={"argmax_v": best_v},
    )


# -- n = 0 (mod 4) ----------------------------------------------------------


def _params0(n: int, d: int) -> ShadowParams:
    if n % 4:
        raise DomainError(f"this bound needs n = 0 (mod 4), got n={n}")
    return shadow_params(n, d)


def lemma42_bound(n: int, d: int) -> int | None:
    """2k - 1 with k = ceil((n - d + 2) / 2s) when 2s does not divide n;
    None (no constraint) otherwise."""
    p = _params0(n, d)
    if n % (2 * p.s) == 0:
        return None
    return 2 * ceil_div(n - d + 2, 2 * p.s) - 1


def maxab_closed(s: int, n: int) -> int:
    """max{a + b : 0 <= a, b <= s, s(a+b) - ab <= n} = 2s - ceil(2 sqrt(s^2 - n)), n < s^2."""
    if s < 1 or n < 0:
        raise DomainError(f"need s >= 1 and n >= 0, got s={s}, n={n}")
    if n >= s * s:
        raise DomainError(f"closed form needs n < s^2, got n={n}, s^2={s * s}")
    return 2 * s - ceil_two_sqrt(s * s - n)


def maxab_bruteforce(s: int, n: int) -> tuple[int, set[tuple[int, int]]]:
    """Maximum of a + b over the feasible set by direct enumeration, with
    every unordered pair attaining it as (a, b), a <= b."""
    best = -1
    pairs: set[tuple[int, int]] = set()
    for a in range(s + 1):
        for b in range(a, s + 1):
            if s * (a + b) - a * b > n:
                continue
            if a + b > best:
                best, pairs = a + b, set()
            if a + b == best:
                pairs.add((a, b))
    return best, pairs


def pair_unique(s: int, n: int) -> bool:
    """Whether a single unordered pair {a, b} attains the maximum; then
    |B_1| and |B_3| are pinned down."""
    return len(maxab_bruteforce(s, n)[1]) == 1


def l_bounds(n: int, d: int) -> LBounds:
    p = _params0(n, d)
    l1 = Fraction(2 * n, d + 2)
    l2 = min(Fraction(d + 2), Fraction(2 * (2 * n - d - 2), d))
    c = ceil_div(n - d + 2, d + 2)
    l1p = l1 if n % (2 * p.s) == 0 else Fraction(2 * c - 1)
    if 4 * n < (d + 2) ** 2:
        l2p = Fraction(d + 2 - ceil_sqrt((d + 2) ** 2 - 4 * n))
    else:
        l2p = Fraction(min(d + 2, 4 * c - 2))
    return LBounds(l1, l2, l1p, l2p)


def bound_bhm(n: int, d: int) -> BoundStatement:
    """The earlier three-case bound on B_s."""
    p = _params0(n, d)
    if 2 * n > (d + 2) ** 2:
        exact, tag = Fraction(2 * n, d + 2), CaseTag.BHM_I
    elif 4 * n >= (d + 2) ** 2:
        exact, tag = Fraction(d + 2), CaseTag.BHM_II
    else:
        exact, tag = Fraction(2 * (2 * n - d - 2), d), CaseTag.BHM_III
    excluded = frozenset({d + 1}) if tag is CaseTag.BHM_II else frozenset()
    return BoundStatement(math.floor(exact), tag, p, excluded, exact)


def imp_case(n: int, d: int) -> list[CaseTag]:
    """Every case of the improved bound whose region contains (n, d).

    The regions partition the plane for d >= 2, so this has one element.
    """
    sq = (d + 2) ** 2
    hits = []
    if 2 * n > d * d + 6 * d:
        hits.append(CaseTag.IMP_I)
    if sq < 2 * n <= d * d + 6 * d:
        hits.append(CaseTag.IMP_II)
    if d * d + 8 * d - 4 < 4 * n <= 2 * sq:
        hits.append(CaseTag.IMP_III)
    if sq <= 4 * n <= d * d + 8 * d - 4:
        hits.append(CaseTag.IMP_IV)
    if 4 * n < sq:
        hits.append(CaseTag.IMP_V)
    return hits


def bound_imp(n: int, d: int) -> BoundStatement:
    """The improved five-case bound B_s <= max{l1', l2'}."""
    p = _params0(n, d)
    hits = imp_case(n, d)
    if len(hits) != 1:
        raise AssertionError(f"case regions overlap or miss at (n,d)=({n},{d}): {hits}")
    tag = hits[0]
    divisible = n % (2 * p.s) == 0
    c = ceil_div(n - d + 2, d + 2)

    if tag is CaseTag.IMP_I:
        exact = Fraction(2 * n, d + 2) if divisible else Fraction(2 * c - 1)
    elif tag is CaseTag.IMP_II:
        exact = Fraction(2 * n, d + 2) if divisible else Fraction(d + 2)
    elif tag is CaseTag.IMP_III:
        exact = Fraction(d + 2)
    elif tag is CaseTag.IMP_IV:
        exact = Fraction(4 * c - 2)
    else:
        exact = Fraction(d + 2 - ceil_sqrt((d + 2) ** 2 - 4 * n))

    lb = l_bounds(n, d)
    excluded = frozenset({d + 1}) if tag is CaseTag.IMP_III else frozenset()
    return BoundStatement(
        bound=math.floor(exact),
        case_tag=tag,
        conditions=p,
        excluded=excluded,
        exact=exact,
        details={
            "l1": lb.l1,
            "l2": lb.l2,
            "l1p": lb.l1p,
            "l2p": lb.l2p,
            "divisible_by_2s": divisible,
        },
    )


# -- published tables ---------------------------------------------------------

TABLE1_PARAMS = ((42, 5), (62, 7), (70, 7), (82, 9), (90, 9), (98, 9))
TABLE2_PARAMS = ((72, 14), (100, 18), (108, 18), (116, 18), (128, 22))


@dataclass(frozen=True)
class Table1Row:
    n: int
    dn: int | None
    d: int
    s: int
    statement: BoundStatement

    @property
    def bound(self) -> int:
        return self.statement.bound


@dataclass(frozen=True)
class Table2Row:
    n: int
    dn: int | None
    d: int
    s: int
    improved: BoundStatement
    prior: BoundStatement


def table1() -> list[Table1Row]:
    rows = []
    for n, s in TABLE1_PARAMS:
        st = bound_n2mod4(n, s)
        rows.append(Table1Row(n, d_of_n(n), st.conditions.d, s, st))
    return rows


def table2() -> list[Table2Row]:
    rows = []
    for n, d in TABLE2_PARAMS:
        imp = bound_imp(n, d)
        rows.append(Table2Row(n, d_of_n(n), d, imp.conditions.s, imp, bound_bhm(n, d)))
    return rows
