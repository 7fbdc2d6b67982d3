from fractions import Fraction

import pytest

from shadowbounds.bounds import BoundStatement, CaseTag, ShadowParams
from shadowbounds.errors import DomainError
from shadowbounds.families import (
    FAMILY_NAMES,
    AffineForm,
    Constraint,
    EnumeratorFamily,
    applicable_bound,
    evaluate,
    family,
    prior_range,
    refine,
    refine_with,
)

F = AffineForm.of

EXPECTED = {
    "W42": ("beta", 42),
    "W62": ("beta", 48),
    "W82": ("alpha", 74),
    "W90": ("alpha", 76),
    "W72": ("alpha", 14),
    "W100": ("alpha", 18),
}


def test_names():
    assert set(FAMILY_NAMES) == set(EXPECTED)
    assert family("62") is family("W62") is family("w62")
    with pytest.raises(DomainError):
        family("W64")


def test_printed_leading_forms():
    assert family("W62").shadow_leading[7] == F(beta=1)
    assert family("W90").shadow_leading[13] == F(alpha=-18, beta=1)
    assert family("W100").shadow_leading[14] == F(alpha=-20, beta=-1)
    assert family("W72").code_leading[14] == F(8640, alpha=-64)
    for name in FAMILY_NAMES:
        fam = family(name)
        assert fam.s in fam.shadow_leading
        assert fam.s == fam.d // 2 + 1
        assert fam.truncated


def test_prior_ranges():
    assert prior_range(family("W42")).intervals == {"beta": (0, 42)}
    assert prior_range(family("W62")).intervals == {"beta": (0, 93)}
    assert prior_range(family("W82")).intervals == {"alpha": (0, 621)}
    assert prior_range(family("W72")).intervals == {"alpha": (0, 39)}
    w100 = prior_range(family("W100"))
    assert w100.exact["alpha"] == (0, Fraction(5225, 32))
    assert w100.exact["beta"] == (Fraction(-26125, 8), 0)
    assert w100.intervals["beta"] == (-3265, 0)


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_refine_reproduces(name):
    param, upper = EXPECTED[name]
    assert refine(name).intervals[param] == (0, upper)


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_refined_subset_of_prior(name):
    fam = family(name)
    ref = refine(name)
    prior = prior_range(fam)
    for p in fam.params:
        lo, hi = ref.intervals[p]
        plo, phi = prior.intervals[p]
        assert plo <= lo <= hi <= phi
    # every stored prior constraint is part of the refined system
    assert set(fam.prior_constraints) <= set(ref.constraints)


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_refine_uses_bound_statement(name):
    fam = family(name)
    param, upper = EXPECTED[name]
    assert applicable_bound(fam).bound == upper
    assert fam.shadow_leading[fam.s].bare_parameter() == param


def test_w90_keeps_beta_coupling():
    fam = family("W90")
    ref = refine("W90")
    # alpha = 76 needs beta >= 18 * 76
    assert ref.contains({"alpha": 76, "beta": 18 * 76})
    assert not ref.contains({"alpha": 76, "beta": 18 * 76 - 1})
    # the B_9 bound does not move beta's range
    loose = refine_with(fam, BoundStatement(10**6, CaseTag.N2MOD4, ShadowParams(90, 16, 9)))
    assert loose.intervals["beta"] == ref.intervals["beta"]


def test_w100_coupling():
    ref = refine("W100")
    assert ref.contains({"alpha": 18, "beta": -360})
    assert not ref.contains({"alpha": 18, "beta": -359})
    assert ref.exact["beta"][0] == Fraction(-26125, 8)


def test_evaluate():
    r = evaluate("W62", {"beta": 0})
    assert r.code[12] == 1860 and r.shadow[7] == 0 and r.shadow[11] == 1116
    assert r.feasible
    assert evaluate("W62", {"beta": 93}).shadow[11] == 0
    assert not evaluate("W62", {"beta": 93}).within_refined
    r72 = evaluate("W72", {"alpha": 15})
    assert not r72.within_refined and not r72.feasible
    assert not r72.violated_prior and not r72.negative


def test_evaluate_flags_outside_prior():
    r = evaluate("W72", {"alpha": 40})
    assert r.violated_prior == ("alpha <= 39",)
    assert r.negative == ("B_12",)
    with pytest.raises(DomainError):
        evaluate("W90", {"alpha": 1})


def _toy(*prior):
    return EnumeratorFamily(
        "toy", 72, 14, 8, ("alpha",),
        code_leading={},
        shadow_leading={8: F(alpha=1)},
        prior_constraints=prior,
    )


PRIOR_72 = BoundStatement(16, CaseTag.BHM_II, ShadowParams(72, 14, 8), frozenset({15}))


def test_excluded_values_propagate():
    r = refine_with(_toy(), PRIOR_72)
    assert r.intervals == {"alpha": (0, 16)}
    assert r.excluded == {"alpha": frozenset({15})}
    assert not r.contains({"alpha": 15}) and r.contains({"alpha": 16})


def test_excluded_top_value_shrinks_interval():
    r = refine_with(_toy(Constraint.le(F(alpha=1), 15)), PRIOR_72)
    assert r.intervals == {"alpha": (0, 14)}


def test_affine_form_str():
    assert str(F(1116, beta=-12)) == "1116 - 12*beta"
    assert str(F(alpha=-18, beta=1)) == "-18*alpha + beta"
    assert str(F(beta=1)) == "beta"
