import pytest

from skewtilt.flip import (ComplementError, FlipError, complements, flip,
                           iota, mu_hat, mu_hat_steps,
                           stable_under_x1_minus_x2)
from skewtilt.skewcurves import MINUS, PLUS, Half, Pair, Star, tors_pair
from skewtilt.triang import PseudoTri, arc_sort_key, fv_arrow, fv_under, validate


def test_complements_of_generator_slots():
    n = 2
    arrow = fv_arrow(0, 0, n)
    rest = arrow.arcs - {Pair(0, 1, n)}
    comp = complements(rest, n)
    assert set(comp) == {Pair(0, 1, n), Pair(1, 1, n)}
    rest = arrow.arcs - {Half(1, 0, PLUS, n)}
    comp = complements(rest, n)
    assert set(comp) == {Half(1, 0, PLUS, n), Half(1, 1, MINUS, n)}
    # removing then re-adding either complement re-yields the same two-set
    other = fv_arrow(0, 0, n).with_arcs(remove=(Pair(0, 1, n),), add=(Pair(1, 1, n),))
    assert set(complements(other.arcs - {Pair(1, 1, n)}, n)) == \
        {Pair(0, 1, n), Pair(1, 1, n)}


def test_complements_rejects_bad_input():
    n = 2
    with pytest.raises(ComplementError):
        complements({Half(1, 0, PLUS, n)}, n)
    with pytest.raises(ComplementError):
        complements({Star(PLUS, PLUS, n), Star(MINUS, MINUS, n),
                     Half(1, 0, PLUS, n), Half(1, 1, PLUS, n)}, n)


def test_flip_examples():
    n = 2
    arrow = fv_arrow(0, 0, n)
    res = flip(arrow, Pair(0, 1, n))
    assert res.added == Pair(1, 1, n)
    assert res.case_label == "II(2)"
    assert validate(res.new_tri.arcs, n).ok

    res2 = flip(arrow, Half(1, 0, PLUS, n))
    assert res2.added == Half(1, 1, MINUS, n)
    assert res2.case_label == "I(1)"

    # double flip restores
    back = flip(res.new_tri, res.added)
    assert back.new_tri.arcs == arrow.arcs
    with pytest.raises(FlipError):
        flip(arrow, Pair(1, 1, n))


def test_flip_star_cases():
    n = 2
    two_star = PseudoTri.of({Star(PLUS, PLUS, n), Star(MINUS, PLUS, n),
                             Half(2, 0, PLUS, n), Half(2, 1, PLUS, n),
                             Half(2, 2, PLUS, n)}, n)
    assert validate(two_star.arcs, n).ok
    res = flip(two_star, Star(PLUS, PLUS, n))
    assert res.case_label == "III(3)"
    assert res.added == Half(1, 2, MINUS, n)

    one_star = PseudoTri.of({Star(PLUS, MINUS, n), Half(1, 0, PLUS, n),
                             Half(1, 2, PLUS, n), Half(2, 0, MINUS, n),
                             tors_pair(0, 1, n)}, n)
    assert validate(one_star.arcs, n).ok
    res = flip(one_star, Star(PLUS, MINUS, n))
    # the other complement is the opposite-sign half at the second cross
    assert res.case_label == "III(2)"
    assert res.added == Half(2, 0, PLUS, n)


def test_fan_slide_is_labeled_with_removal_sign_rule():
    n = 2
    tri = PseudoTri.of({Half(1, -1, PLUS, n), Half(1, -2, PLUS, n),
                        Half(1, 0, PLUS, n), Star(PLUS, PLUS, n),
                        Star(PLUS, MINUS, n)}, n)
    assert validate(tri.arcs, n).ok
    res = flip(tri, Half(1, -2, PLUS, n))
    assert isinstance(res.added, Half) and res.added.sign == PLUS
    assert res.case_label == "I(1)"


def test_mu_hat_end_mutations_commute():
    for n in (2, 3, 4):
        arrow = fv_arrow(0, 0, n)
        for i in (0, n):
            steps = mu_hat_steps(arrow, i)
            assert len(steps) == 2
            assert validate(steps[-1].new_tri.arcs, n).ok
        with pytest.raises(FlipError):
            mu_hat(arrow, n + 1)


def test_mu_hat_requires_fv():
    n = 2
    tri = PseudoTri.of({Star(PLUS, PLUS, n), Star(MINUS, PLUS, n),
                        Half(2, 0, PLUS, n), Half(2, 1, PLUS, n),
                        Half(2, 2, PLUS, n)}, n)
    with pytest.raises(FlipError):
        mu_hat(tri, 0)


def test_iota_on_generators():
    for n in (2, 3, 4, 5):
        assert iota(fv_arrow(0, 0, n)) == tuple([1] * (n + 1))
        assert iota(fv_under(1, -1, n)) == tuple([1] * (n + 1))
        assert stable_under_x1_minus_x2(fv_arrow(0, 0, n))


def test_iota_detects_off_family():
    # stable but not a generator member: the interior bit drops
    n = 2
    tri = PseudoTri.of({Half(1, 0, PLUS, n), Half(1, 0, MINUS, n),
                        Half(2, -2, PLUS, n), Half(2, -2, MINUS, n),
                        Pair(1, 1, n)}, n)
    assert validate(tri.arcs, n).ok
    assert stable_under_x1_minus_x2(tri)
    assert iota(tri) == (1, 0, 1)
