"""Parametrized weight enumerators W_n / S_n and their parameter ranges.

Only the low-order coefficients that appear in the literature are stored;
the tails are unknown here (``truncated`` is always True). Ranges are
polytopes in at most two integer parameters, handled exactly by vertex
enumeration over Fractions.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction

from .bounds import BoundStatement, bound_imp, bound_n2mod4
from .errors import DomainError

__all__ = [
    "AffineForm",
    "Constraint",
    "EnumeratorFamily",
    "ParameterRange",
    "FAMILY_NAMES",
    "family",
    "refine",
    "refine_with",
    "evaluate",
]


@dataclass(frozen=True)
class AffineForm:
    constant: int
    coefficients: tuple[tuple[str, int], ...] = ()

    @classmethod
    def of(cls, constant: int = 0, **coefficients: int) -> AffineForm:
        return cls(constant, tuple(sorted(coefficients.items())))

    def __call__(self, values: Mapping[str, int | Fraction]) -> int | Fraction:
        return self.constant + sum(c * values[p] for p, c in self.coefficients)

    def coefficient(self, name: str) -> int:
        return dict(self.coefficients).get(name, 0)

    def bare_parameter(self) -> str | None:
        """The parameter name if the form is exactly one parameter."""
        if self.constant == 0 and len(self.coefficients) == 1 and self.coefficients[0][1] == 1:
            return self.coefficients[0][0]
        return None

    def __str__(self) -> str:
        parts = [str(self.constant)] if self.constant or not self.coefficients else []
        for name, c in self.coefficients:
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            parts.append(f"{sign} {mag}{name}" if parts else f"{'-' if c < 0 else ''}{mag}{name}")
        return " ".join(parts)


@dataclass(frozen=True)
class Constraint:
    """constant + sum(coefficients * params) >= 0."""

    constant: Fraction
    coefficients: tuple[tuple[str, Fraction], ...]
    label: str = field(default="", compare=False)

    @classmethod
    def nonneg(cls, form: AffineForm, label: str = "") -> Constraint:
        return cls(Fraction(form.constant), tuple((p, Fraction(c)) for p, c in form.coefficients), label)

    @classmethod
    def le(cls, form: AffineForm, bound: int | Fraction, label: str = "") -> Constraint:
        """form <= bound."""
        return cls(
            Fraction(bound) - form.constant,
            tuple((p, -Fraction(c)) for p, c in form.coefficients),
            label,
        )

    def slack(self, values: Mapping[str, int | Fraction]) -> Fraction:
        return self.constant + sum(c * values[p] for p, c in self.coefficients)

    def holds(self, values: Mapping[str, int | Fraction]) -> bool:
        return self.slack(values) >= 0


@dataclass(frozen=True)
class EnumeratorFamily:
    name: str
    n: int
    d: int
    s: int
    params: tuple[str, ...]
    code_leading: Mapping[int, AffineForm]
    shadow_leading: Mapping[int, AffineForm]
    prior_constraints: tuple[Constraint, ...]
    truncated: bool = True

    def coefficient_constraints(self) -> tuple[Constraint, ...]:
        out = [Constraint.nonneg(f, f"A_{w} >= 0") for w, f in sorted(self.code_leading.items())]
        out += [Constraint.nonneg(f, f"B_{w} >= 0") for w, f in sorted(self.shadow_leading.items())]
        return tuple(out)


@dataclass(frozen=True)
class ParameterRange:
    """Integer points of the polytope cut out by ``constraints``, minus
    ``excluded`` values of single parameters.

    ``exact`` holds the rational [min, max] of each parameter over the real
    polytope; ``intervals`` the integer range actually attained.
    """

    params: tuple[str, ...]
    constraints: tuple[Constraint, ...]
    exact: Mapping[str, tuple[Fraction, Fraction]]
    intervals: Mapping[str, tuple[int, int]]
    excluded: Mapping[str, frozenset[int]] = field(default_factory=dict)

    @property
    def empty(self) -> bool:
        return not self.intervals

    def contains(self, values: Mapping[str, int]) -> bool:
        if any(values[p] in self.excluded.get(p, ()) for p in self.params):
            return False
        return all(c.holds(values) for c in self.constraints)


def _vertices(params: tuple[str, ...], constraints: tuple[Constraint, ...]) -> list[dict[str, Fraction]]:
    """Vertices of {x : all constraints hold} for one or two parameters."""
    rows = [(c.constant, [dict(c.coefficients).get(p, Fraction(0)) for p in params]) for c in constraints]
    out = []
    for combo in itertools.combinations(rows, len(params)):
        if len(params) == 1:
            ((c0, (a,)),) = combo
            if a == 0:
                continue
            point = [-c0 / a]
        else:
            (c0, (a, b)), (c1, (e, f)) = combo
            det = a * f - b * e
            if det == 0:
                continue
            point = [(-c0 * f + b * c1) / det, (-a * c1 + e * c0) / det]
        values = dict(zip(params, point))
        if all(c.holds(values) for c in constraints):
            out.append(values)
    return out


def _slice(constraints, params, fixed: str, value: int) -> tuple[Fraction, Fraction] | None:
    """Range of the other parameter when ``fixed`` is pinned."""
    (other,) = [p for p in params if p != fixed]
    lo, hi = None, None
    for c in constraints:
        coef = dict(c.coefficients)
        rest = c.constant + coef.get(fixed, 0) * value
        a = coef.get(other, Fraction(0))
        if a == 0:
            if rest < 0:
                return None
        elif a > 0:
            lo = -rest / a if lo is None else max(lo, -rest / a)
        else:
            hi = -rest / a if hi is None else min(hi, -rest / a)
    if lo is None or hi is None:
        raise DomainError(f"parameter {other} is unbounded")
    return lo, hi


def _integer_feasible(constraints, params, name: str, value: int, excluded) -> bool:
    if value in excluded.get(name, ()):
        return False
    if len(params) == 1:
        return all(c.holds({name: value}) for c in constraints)
    span = _slice(constraints, params, name, value)
    if span is None:
        return False
    (other,) = [p for p in params if p != name]
    lo, hi = math.ceil(span[0]), math.floor(span[1])
    return any(v not in excluded.get(other, ()) for v in range(lo, hi + 1))


def _solve(params, constraints, excluded=None) -> ParameterRange:
    excluded = dict(excluded or {})
    verts = _vertices(params, constraints)
    if not verts:
        return ParameterRange(params, constraints, {}, {}, excluded)
    exact = {p: (min(v[p] for v in verts), max(v[p] for v in verts)) for p in params}
    intervals = {}
    for p in params:
        lo, hi = math.ceil(exact[p][0]), math.floor(exact[p][1])
        while lo <= hi and not _integer_feasible(constraints, params, p, lo, excluded):
            lo += 1
        while hi >= lo and not _integer_feasible(constraints, params, p, hi, excluded):
            hi -= 1
        if lo > hi:
            return ParameterRange(params, constraints, exact, {}, excluded)
        intervals[p] = (lo, hi)
    return ParameterRange(params, constraints, exact, intervals, excluded)


# -- data -------------------------------------------------------------------

F = AffineForm.of


def _le(name: str, bound, label: str) -> Constraint:
    return Constraint.le(F(**{name: 1}), bound, label)


def _ge0(name: str) -> Constraint:
    return Constraint.nonneg(F(**{name: 1}), f"{name} >= 0")


_FAMILIES: dict[str, EnumeratorFamily] = {
    "W42": EnumeratorFamily(
        "W42", 42, 8, 5, ("beta",),
        code_leading={8: F(84, beta=8), 10: F(1449, beta=-24)},
        shadow_leading={5: F(beta=1), 9: F(896, beta=-8), 13: F(48384, beta=28)},
        prior_constraints=(_ge0("beta"), _le("beta", 42, "beta <= 42")),
    ),
    "W62": EnumeratorFamily(
        "W62", 62, 12, 7, ("beta",),
        code_leading={12: F(1860, beta=32), 14: F(28055, beta=-160)},
        shadow_leading={7: F(beta=1), 11: F(1116, beta=-12), 15: F(171368, beta=66)},
        prior_constraints=(_ge0("beta"), _le("beta", 93, "beta <= 93")),
    ),
    "W82": EnumeratorFamily(
        "W82", 82, 16, 9, ("alpha",),
        code_leading={16: F(39524, alpha=128), 18: F(556985, alpha=-896)},
        shadow_leading={9: F(alpha=1), 13: F(1640, alpha=-1), 17: F(281424, alpha=120)},
        prior_constraints=(_ge0("alpha"), _le("alpha", 621, "alpha <= 621")),
    ),
    "W90": EnumeratorFamily(
        "W90", 90, 16, 9, ("alpha", "beta"),
        code_leading={16: F(9180, beta=8), 18: F(224360, alpha=-512, beta=-24)},
        shadow_leading={9: F(alpha=1), 13: F(alpha=-18, beta=1), 17: F(112320, alpha=153, beta=-16)},
        prior_constraints=(
            _ge0("alpha"),
            Constraint.nonneg(F(alpha=-18, beta=1), "alpha <= beta/18"),
            Constraint.le(F(beta=1), 18 * 9348, "beta/18 <= 9348"),
        ),
    ),
    "W72": EnumeratorFamily(
        "W72", 72, 14, 8, ("alpha",),
        code_leading={14: F(8640, alpha=-64), 16: F(124281, alpha=384)},
        shadow_leading={8: F(alpha=1), 12: F(546, alpha=-14), 16: F(244584, alpha=91)},
        prior_constraints=(_ge0("alpha"), _le("alpha", 39, "alpha <= 39")),
    ),
    "W100": EnumeratorFamily(
        "W100", 100, 18, 10, ("alpha", "beta"),
        code_leading={18: F(52250, beta=16), 20: F(972180, alpha=1024, beta=-64)},
        shadow_leading={10: F(alpha=1), 14: F(alpha=-20, beta=-1), 18: F(104500, alpha=190, beta=18)},
        prior_constraints=(
            _ge0("alpha"),
            Constraint.nonneg(F(alpha=-20, beta=-1), "alpha <= -beta/20"),
            Constraint.le(F(beta=-1), Fraction(20 * 5225, 32), "-beta/20 <= 5225/32"),
        ),
    ),
}

FAMILY_NAMES = tuple(_FAMILIES)


def family(name: str) -> EnumeratorFamily:
    key = name.upper()
    if not key.startswith("W"):
        key = "W" + key
    try:
        return _FAMILIES[key]
    except KeyError:
        raise DomainError(f"unknown family {name!r}; choose from {', '.join(FAMILY_NAMES)}") from None


def prior_range(fam: EnumeratorFamily) -> ParameterRange:
    return _solve(fam.params, fam.prior_constraints)


def applicable_bound(fam: EnumeratorFamily) -> BoundStatement:
    if fam.n % 4 == 2:
        return bound_n2mod4(fam.n, fam.s)
    return bound_imp(fam.n, fam.d)


def refine_with(fam: EnumeratorFamily, statement: BoundStatement) -> ParameterRange:
    """Intersect the prior range with 0 <= B_s <= bound and nonnegativity
    of every stored coefficient."""
    lead = fam.shadow_leading[fam.s]
    constraints = (
        fam.prior_constraints
        + fam.coefficient_constraints()
        + (Constraint.le(lead, statement.bound, f"B_{fam.s} <= {statement.bound}"),)
    )
    excluded = {}
    bare = lead.bare_parameter()
    if bare is not None and statement.excluded:
        excluded[bare] = frozenset(statement.excluded)
    return _solve(fam.params, constraints, excluded)


def refine(name: str) -> ParameterRange:
    fam = family(name)
    return refine_with(fam, applicable_bound(fam))


@dataclass(frozen=True)
class CoefficientReport:
    values: Mapping[str, int]
    code: Mapping[int, int]
    shadow: Mapping[int, int]
    negative: tuple[str, ...]
    violated_prior: tuple[str, ...]
    within_refined: bool

    @property
    def feasible(self) -> bool:
        return not self.negative and not self.violated_prior and self.within_refined


def evaluate(name: str | EnumeratorFamily, values: Mapping[str, int]) -> CoefficientReport:
    """Leading coefficients at the given parameters; problems are flagged,
    never raised."""
    fam = name if isinstance(name, EnumeratorFamily) else family(name)
    missing = set(fam.params) - set(values)
    if missing:
        raise DomainError(f"{fam.name} needs values for {sorted(missing)}")
    code = {w: f(values) for w, f in sorted(fam.code_leading.items())}
    shadow = {w: f(values) for w, f in sorted(fam.shadow_leading.items())}
    negative = tuple(
        [f"A_{w}" for w, c in code.items() if c < 0] + [f"B_{w}" for w, c in shadow.items() if c < 0]
    )
    violated = tuple(c.label for c in fam.prior_constraints if not c.holds(values))
    return CoefficientReport(dict(values), code, shadow, negative, violated, refine(fam.name).contains(values))
