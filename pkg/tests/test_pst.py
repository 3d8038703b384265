import math

import pytest

from icgpst import pst
from icgpst.icg import make_divisor_set, spectrum_exact
from icgpst.pst import (
    MethodDisagreement,
    count_bruteforce,
    count_formula_printed,
    count_formula_setbased,
    decide_pst,
    enumerate_pst,
    iter_divisor_sets,
    pst_abstract_form,
    pst_spectral,
    pst_structural,
    spectral_structure_check,
    swap_check,
)


def D(n, *ds):
    return make_divisor_set(n, ds)


def sets(found):
    return [list(ds) for ds in found]


# -- the three deciders ----------------------------------------------------

@pytest.mark.parametrize(
    "n,divs,want,m",
    [
        (4, (1,), True, 1),  # C4: 2, 0, -2, 0
        (2, (1,), True, 1),  # K2: 1, -1
        (8, (1, 4), True, 1),
        (4, (1, 2), False, None),  # K4: 3, -1, -1, -1 has a zero difference
        (8, (1,), False, None),
        (5, (1,), False, None),
    ],
)
def test_pst_spectral(n, divs, want, m):
    assert pst_spectral(spectrum_exact(D(n, *divs))) == (want, m)


@pytest.mark.parametrize(
    "n,divs,want",
    [
        (4, (1,), True),
        (4, (2,), True),
        (8, (1, 2), True),
        (8, (2, 4), False),  # both n/2 and n/4
        (8, (1,), False),  # neither
        (24, (1, 2, 3, 4, 8, 12), True),
        (24, (1, 3, 8, 12), False),  # D0 = {8} but D2* is empty
        (6, (3,), True),  # perfect matching on six vertices
        (6, (1, 3), False),
        (2, (1,), True),
    ],
)
def test_structural_and_abstract_agree(n, divs, want):
    ds = D(n, *divs)
    assert pst_structural(ds) is want
    assert pst_abstract_form(ds) is want


def test_abstract_form_needs_disjoint_union():
    # n=16: D2' = {}, so {n/4} alone is the whole form
    assert pst_abstract_form(D(16, 4))
    assert not pst_abstract_form(D(16, 4, 8))


def test_structure_check_shapes():
    ds = D(8, 1, 4)
    assert spectral_structure_check(ds, spectrum_exact(ds))
    ds = D(8, 1, 2)
    assert spectral_structure_check(ds, spectrum_exact(ds))
    ds = D(8, 1)
    assert not spectral_structure_check(ds, spectrum_exact(ds))


# -- decide_pst ------------------------------------------------------------

def test_decide_pst_positive():
    v = decide_pst(D(8, 1, 4))
    assert v.has_pst and v.agreement
    assert v.pair == (0, 4) and v.tau == math.pi / 2
    assert v.pqcd == 1 and v.common_valuation == 1
    v = decide_pst(D(8, 1, 2))
    assert v.has_pst and v.pqcd == 2


def test_decide_pst_negative():
    v = decide_pst(D(12, 1, 3))
    assert not v.has_pst and v.agreement
    assert v.pair is v.tau is v.pqcd is v.common_valuation is None
    assert not (v.spectral_result or v.structural_result or v.numeric_result)


def test_decide_pst_raises_on_disagreement(monkeypatch):
    monkeypatch.setattr(pst, "pst_structural", lambda ds: True)
    with pytest.raises(MethodDisagreement, match="structural=True"):
        decide_pst(D(8, 1))


def test_decide_pst_raises_on_bad_pqcd(monkeypatch):
    monkeypatch.setattr(pst, "graph_distance", lambda g, a, b: 3)
    with pytest.raises(pst.TheoremViolation, match="BFS"):
        decide_pst(D(4, 1))


# -- swap ------------------------------------------------------------------

def test_swap_check_examples():
    assert swap_check(8, {1})
    assert swap_check(12, D(12, 1, 2, 4))
    assert swap_check(8, ())


def test_swap_check_rejects():
    with pytest.raises(ValueError):
        swap_check(6, ())
    with pytest.raises(ValueError):
        swap_check(8, {4})


# -- enumeration -----------------------------------------------------------

def test_iter_divisor_sets_order():
    assert sets(iter_divisor_sets(8)) == [[1], [2], [4], [1, 2], [1, 4], [2, 4], [1, 2, 4]]


def test_iter_divisor_sets_guard():
    # 720720 has 240 divisors
    with pytest.raises(ValueError, match="limited"):
        next(iter_divisor_sets(720720))


def test_enumerate_examples():
    assert sets(enumerate_pst(8)) == [[2], [4], [1, 2], [1, 4]]
    assert sets(enumerate_pst(8, connected_only=True)) == [[1, 2], [1, 4]]
    assert sets(enumerate_pst(4)) == [[1], [2]]
    assert sets(enumerate_pst(9)) == []


def test_enumerate_two_mod_four():
    # only the perfect matching; nothing connected
    assert sets(enumerate_pst(6)) == [[3]]
    assert sets(enumerate_pst(6, connected_only=True)) == []
    assert sets(enumerate_pst(2)) == [[1]]


def test_prescreen_does_not_change_results():
    for n in range(2, 41):
        assert enumerate_pst(n) == enumerate_pst(n, prescreen=False)


# -- counting --------------------------------------------------------------

@pytest.mark.parametrize("n,want", [(4, 2), (8, 4), (12, 4), (16, 8), (24, 16), (6, 0), (9, 0)])
def test_count_setbased(n, want):
    assert count_formula_setbased(n) == want


@pytest.mark.parametrize("n,want", [(8, 2), (12, 4), (16, 4), (24, 16), (6, 0)])
def test_count_printed(n, want):
    assert count_formula_printed(n) == want


def test_count_bruteforce():
    assert count_bruteforce(4) == 2
    assert count_bruteforce(8) == 4
    assert count_bruteforce(8, connected_only=True) == 2
    assert count_bruteforce(6) == 1


def test_setbased_closed_form():
    # 2^(tau(odd part) + [8 | n] tau(n/8)) for 4 | n
    from icgpst.numtheory import divisor_count, valuation
    for n in range(4, 400, 4):
        odd = n >> valuation(2, n)
        expo = divisor_count(odd) + (divisor_count(n // 8) if n % 8 == 0 else 0)
        assert count_formula_setbased(n) == 2**expo, n
