import io
import itertools
import warnings

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_orthogonal, self_dual_from_orthogonal
from shadowbounds.bounds import CaseTag
from shadowbounds.codes import (
    BinaryCode,
    Parity,
    check_shadow_lemmas,
    classify,
    dual,
    extended_hamming,
    is_self_dual,
    parse_generator_matrix,
    rains_bound,
    repetition_sum,
    shadow_decompose,
    verify_bound,
    weight,
)
from shadowbounds.errors import DomainError, EnumerationGuardError, ParseError


def gray_min_weight(code):
    """Minimum nonzero weight visiting codewords in Gray-code order."""
    gens = code.generators
    word, best = 0, None
    for i in range(1, 1 << len(gens)):
        word ^= gens[(i & -i).bit_length() - 1]
        w = weight(word)
        best = w if best is None else min(best, w)
    return best or 0


def brute_dual(code):
    """Dual by testing every vector of F_2^n."""
    return [x for x in range(1 << code.n) if all(weight(x & g) % 2 == 0 for g in code.generators)]


# -- parsing ------------------------------------------------------------------


def test_parse_i2():
    c = parse_generator_matrix("11")
    assert (c.n, c.k) == (2, 1)


def test_parse_direct_sum():
    c = parse_generator_matrix("1100\n0011\n")
    assert c == repetition_sum(2)


def test_parse_whitespace_and_stream():
    c = parse_generator_matrix(io.StringIO(" 1 1 0 0\n\n0 0 1 1 \n"))
    assert c == repetition_sum(2)


def test_parse_duplicate_row_warns():
    with pytest.warns(UserWarning, match="dependent"):
        c = parse_generator_matrix("1100\n0110\n0011\n1100\n")
    assert c.k == 3


@pytest.mark.parametrize("text", ["", "\n  \n", "110\n11", "1120", "11a0"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_generator_matrix(text)


# -- duals ------------------------------------------------------------------


def test_dual_examples():
    i2 = repetition_sum(1)
    assert dual(i2) == i2
    whole = BinaryCode.from_rows(5, [1 << i for i in range(5)])
    assert dual(whole).k == 0
    assert dual(BinaryCode(5, ())) == whole


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 16).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(0, (1 << n) - 1), max_size=n))))
def test_dual_properties(case):
    n, rows = case
    code = BinaryCode.from_rows(n, rows)
    dd = dual(code)
    assert dd.k == n - code.k
    assert all(weight(g & h) % 2 == 0 for g in code.generators for h in dd.generators)
    assert dual(dd) == code
    if n <= 10:
        assert sorted(int(x) for x in dd.codewords()) == brute_dual(code)


# -- classification ---------------------------------------------------------


def test_classify_i2():
    c = classify(repetition_sum(1))
    assert (c.is_self_dual, c.parity, c.min_weight) == (True, Parity.SINGLY_EVEN, 2)


def test_classify_hamming():
    c = classify(extended_hamming())
    assert (c.is_self_dual, c.parity, c.min_weight, c.is_extremal) == (True, Parity.DOUBLY_EVEN, 4, True)


def test_classify_not_self_dual():
    c = classify(parse_generator_matrix("1000\n0100"))
    assert c.parity is Parity.NOT_SELF_DUAL and not c.is_self_dual
    assert classify(parse_generator_matrix("1111")).parity is Parity.NOT_SELF_DUAL


def test_guard():
    with pytest.raises(EnumerationGuardError):
        classify(repetition_sum(19))
    assert classify(repetition_sum(19), max_n=38).min_weight == 2


def test_rains_bound():
    assert rains_bound(24, singly_even=False) == 8
    assert rains_bound(24, singly_even=True) == 6
    assert rains_bound(22, singly_even=True) == 6
    assert rains_bound(62, singly_even=True) == 12
    assert rains_bound(72, singly_even=True) == 14


def test_random_self_dual_codes(rng):
    seen_parity = set()
    for _ in range(40):
        m = rng.choice([2, 4, 6, 8])
        code = self_dual_from_orthogonal(random_orthogonal(m, rng), m)
        assert is_self_dual(code)
        assert dual(code) == code
        cl = classify(code)
        assert cl.min_weight == gray_min_weight(code)
        seen_parity.add(cl.parity)
    assert seen_parity == {Parity.SINGLY_EVEN, Parity.DOUBLY_EVEN}


# -- shadow -----------------------------------------------------------------


def test_shadow_i2():
    dec = shadow_decompose(repetition_sum(1))
    shadow = sorted(int(x) for x in dec.shadow())
    assert shadow == [0b01, 0b10]
    assert dec.B[1] == 2 and dec.s == 1


def test_shadow_i2_sum_2():
    dec = shadow_decompose(repetition_sum(2))
    assert dec.B == (0, 0, 4, 0, 0)
    assert sorted(int(x) for x in dec.coset(1)) == [0b0101, 0b1010]  # holds the smallest shadow vector


@pytest.mark.parametrize("k", range(1, 13))
def test_shadow_i2_sums(k):
    dec = shadow_decompose(repetition_sum(k))
    assert dec.B[k] == 2**k and sum(dec.B) == 2**k
    assert check_shadow_lemmas(dec).passed


def test_shadow_rejects_doubly_even_and_non_self_dual():
    with pytest.raises(DomainError):
        shadow_decompose(extended_hamming())
    with pytest.raises(DomainError):
        shadow_decompose(parse_generator_matrix("1100"))


def _singly_even_corpus(rng, count=30):
    out = [repetition_sum(1) + extended_hamming(), repetition_sum(3) + extended_hamming()]
    while len(out) < count:
        m = rng.choice([4, 6, 8, 10])
        code = self_dual_from_orthogonal(random_orthogonal(m, rng), m)
        if classify(code).parity is Parity.SINGLY_EVEN:
            out.append(code)
    return out


def test_shadow_invariants_corpus(rng):
    for code in _singly_even_corpus(rng):
        n = code.n
        dec = shadow_decompose(code)
        cosets = [set(int(x) for x in dec.coset(i)) for i in range(4)]
        assert all(len(c) == 2 ** (n // 2 - 1) for c in cosets)
        assert set().union(*cosets) == set(int(x) for x in dual(dec.c0).codewords())
        assert cosets[0] | cosets[2] == set(int(x) for x in code.codewords())
        assert sum(dec.A) == sum(dec.B) == 2 ** (n // 2)
        assert all(weight(x) % 4 == (n // 2) % 4 for x in cosets[1] | cosets[3])
        report = check_shadow_lemmas(dec, max_pairs=1 << 18)
        assert report.passed, report
        assert report.exhaustive


def test_lemma_sampling_path():
    dec = shadow_decompose(repetition_sum(10))
    report = check_shadow_lemmas(dec, max_pairs=500, seed=3)
    assert not report.exhaustive
    assert report.passed


def test_inner_product_dichotomy_by_n_mod_4():
    for k in (3, 4):
        dec = shadow_decompose(repetition_sum(k))
        names = {c.name for c in check_shadow_lemmas(dec).checks}
        if (2 * k) % 4 == 0:
            assert {"x1.y1 = 0", "x1.x3 = 1"} <= names
        else:
            assert {"x1.y1 = 1", "x1.x3 = 0"} <= names


def test_coset_labeling_is_deterministic(rng):
    for code in _singly_even_corpus(rng, 8):
        dec = shadow_decompose(code)
        assert int(dec.coset(1).min()) < int(dec.coset(3).min())


# -- bound verification -----------------------------------------------------


def test_verify_not_applicable():
    for k in (1, 3, 4, 5, 6):
        rep = verify_bound(shadow_decompose(repetition_sum(k)))
        assert not rep.applicable
        assert "not applicable" in rep.reason


def test_verify_i2_sum_2_exceeds_improved_bound():
    # n=4, d=2, s=2: the improved formula gives 2, but this code has B_2 = 4.
    # The prior bound (4, != 3) holds. Reported, not hidden.
    rep = verify_bound(shadow_decompose(repetition_sum(2)))
    assert rep.applicable
    assert rep.statement.case_tag is CaseTag.IMP_IV and rep.statement.bound == 2
    assert rep.B_s == 4 and rep.within_bound is False
    assert rep.prior.allows(rep.B_s)
    assert rep.pattern.passed


def test_verify_i2_plus_hamming():
    # n = 10 = 2 (mod 4), d = 2, s = 1: s != d/2 + 1
    rep = verify_bound(shadow_decompose(repetition_sum(1) + extended_hamming()))
    assert not rep.applicable
