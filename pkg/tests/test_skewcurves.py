import random
from fractions import Fraction

import pytest

from skewtilt import lattice
from skewtilt.curves import (Bridge, LowerArc, UpperArc, canonicalize)
from skewtilt.skewcurves import (F0, F1, F12, F2, ExtBundle, Half, LineBundle,
                                 MINUS, PLUS, Pair, PwLoop, SpLoop, Star,
                                 TorsN, TorsPair, Tors2, curve_set, display,
                                 equivariant_description, half_of_fixed_bridge,
                                 pair, pair_of_bridge, parse_sheaf, phi,
                                 phi_inv, pw_loop, shift, sp_loop, tau,
                                 tors_pair, tors_pair_of_arc)


def all_window_curves(n, span=None):
    span = span or 3 * n
    out = []
    for idx in range(-span, span + 1):
        for cross in (1, 2):
            for sign in (PLUS, MINUS):
                out.append(Half(cross, idx, sign, n))
    for i in range(-span, span + 1):
        for k in range(1, n):
            out.append(Pair(i, k, n))
    for res in range(n):
        for length in range(1, n + 3):
            out.append(TorsPair(res, length, n))
    for e1 in (PLUS, MINUS):
        for e2 in (PLUS, MINUS):
            out.append(Star(e1, e2, n))
    for lam in (1, -1):
        for j in range(2, n + 3):
            for sign in (PLUS, MINUS):
                out.append(SpLoop(lam, j, sign, n))
    for lam in (Fraction(2), Fraction(3, 2), Fraction(-5, 3)):
        for j in (1, 2, n + 1):
            out.append(pw_loop(lam, j, n))
    return out


def test_worked_example_n4():
    n = 4
    cases = [
        (half_of_fixed_bridge(Bridge(-2, 2, n), PLUS), "O(x1-x2+2*x3)"),
        (half_of_fixed_bridge(Bridge(-2, 2, n), MINUS), "O(2*x3)"),
        (half_of_fixed_bridge(Bridge(0, 0, n), PLUS), "O(x1-x2)"),
        (half_of_fixed_bridge(Bridge(0, 0, n), MINUS), "O"),
        (half_of_fixed_bridge(Bridge(3, 1, n), PLUS), "O(x1-3*x3)"),
        (half_of_fixed_bridge(Bridge(3, 1, n), MINUS), "O(x2-3*x3)"),
        (half_of_fixed_bridge(Bridge(1, 3, n), PLUS), "O(x1-x3)"),
        (half_of_fixed_bridge(Bridge(1, 3, n), MINUS), "O(x2-x3)"),
        (pair_of_bridge(Bridge(0, 2, n)), "E_{O(-x3)}<x3>"),
        (tors_pair_of_arc(UpperArc(-2, 1, n)), "S_{1,1}^{(2)}"),
    ]
    for g, name in cases:
        assert display(phi(g)) == name, (g, display(phi(g)))


def test_worked_example_tau_relation():
    # the extension bundle over O(-x3) with inner twist x3 is the AR shift
    # of the one over O
    n = 4
    assert tau(pair(-1, 2, n)) == pair(0, 2, n)
    assert phi(pair(0, 2, n)) == ExtBundle(0, 2, n)


def test_phi_bijective_on_window():
    for n in (2, 3, 4, 5, 6):
        seen = {}
        for g in all_window_curves(n):
            s = phi(g)
            assert phi_inv(s) == g, (g, s)
            assert s not in seen, (g, seen.get(s))
            seen[s] = g


def test_phi_inv_examples():
    n = 4
    assert phi_inv(LineBundle(F1, -3, n)) == Half(2, -3, PLUS, n)
    assert phi_inv(LineBundle(F0, 0, n)) == Half(1, 0, MINUS, n)
    assert phi_inv(Tors2("inf", 0, 1, n)) == Star(PLUS, PLUS, n)
    assert phi_inv(Tors2("inf", 1, 1, n)) == Star(MINUS, MINUS, n)
    assert phi_inv(Tors2("0", 0, 1, n)) == Star(PLUS, MINUS, n)
    assert phi_inv(Tors2("0", 1, 1, n)) == Star(MINUS, PLUS, n)


def test_sp_loop_normalizes_to_star():
    assert sp_loop(1, 1, PLUS, 4) == Star(PLUS, PLUS, 4)
    assert sp_loop(-1, 1, MINUS, 4) == Star(MINUS, PLUS, 4)
    assert isinstance(sp_loop(1, 2, PLUS, 4), SpLoop)
    with pytest.raises(ValueError):
        SpLoop(1, 1, PLUS, 4)


def test_curve_sets():
    n = 4
    assert curve_set(Half(1, 2, PLUS, n)) == frozenset({Bridge(-2, 2, n)})
    assert curve_set(Pair(0, 2, n)) == frozenset({Bridge(0, 2, n), Bridge(-2, 0, n)})
    assert curve_set(tors_pair(1, 2, n)) == frozenset(
        {UpperArc(-2, 1, n), LowerArc(-1, 2, n)})
    semis = curve_set(Star(PLUS, MINUS, n))
    assert len(semis) == 2


def test_pair_canonicalization_and_faithfulness():
    n = 4
    # the raw orbit relations: (i, k) ~ (i + tn, k + 2tn) ~ (i - k, -k)
    assert pair(1, 2 + 2 * n, n) == pair(1 - n, 2, n)
    assert pair(3, -2, n) == pair(3 + 2, 2, n)
    with pytest.raises(ValueError):
        pair(0, n, n)
    seen = {}
    for i in range(-8, 9):
        for k in range(1, n):
            g = Pair(i, k, n)
            cs = frozenset(canonicalize(c) for c in curve_set(g))
            assert cs not in seen, (g, seen.get(cs))
            seen[cs] = g


def random_element(rng, n):
    return lattice.normalize(tuple(rng.randint(-2 * n, 2 * n) for _ in range(4)), n)


def test_shift_composition_law():
    rng = random.Random(31)
    for n in (2, 3, 4, 5, 6):
        pool = all_window_curves(n, span=4)
        for _ in range(200):
            g = rng.choice(pool)
            x, y = random_element(rng, n), random_element(rng, n)
            assert shift(shift(g, x), y) == shift(g, lattice.add(x, y))


def test_shift_generator_rows():
    n = 4
    x1, x2, x3 = lattice.gen_x1(n), lattice.gen_x2(n), lattice.gen_x3(n)
    # twisting O(-i*x3) by x1 gives O(x1 - i*x3): cross moves, sign flips
    for i in range(-5, 6):
        assert shift(Half(1, i, MINUS, n), x1) == Half(2, i, PLUS, n)
        assert shift(Half(1, i, MINUS, n), x2) == Half(2, i, MINUS, n)
        assert shift(Half(1, i, MINUS, n), x3) == Half(1, i + 1, MINUS, n)
    # extension bundles: x3 lowers the base index, x1/x2 reflect k
    for i in range(-4, 5):
        for k in range(1, n):
            assert shift(Pair(i, k, n), x3) == Pair(i - 1, k, n)
            assert shift(Pair(i, k, n), x1) == Pair(i - k, n - k, n)
            assert shift(Pair(i, k, n), x2) == Pair(i - k, n - k, n)


def test_shift_by_torsion_element():
    n = 4
    t = lattice.normalize((1, -1, 0, 0), n)  # x1 - x2
    for idx in range(-4, 5):
        for cross in (1, 2):
            g = Half(cross, idx, PLUS, n)
            assert shift(g, t) == Half(cross, idx, MINUS, n)
    assert shift(Pair(1, 2, n), t) == Pair(1, 2, n)
    assert shift(tors_pair(1, 2, n), t) == tors_pair(1, 2, n)
    assert shift(Star(PLUS, PLUS, n), t) == Star(MINUS, MINUS, n)
    assert shift(Star(PLUS, MINUS, n), t) == Star(MINUS, PLUS, n)


def test_shift_identity_and_torsion_rules():
    n = 5
    z = lattice.zero(n)
    for g in all_window_curves(n, span=3):
        assert shift(g, z) == g
    assert shift(tors_pair(1, 2, n), lattice.gen_x3(n)) == tors_pair(2, 2, n)
    # period-2 residues see only the matching weight-two generator
    assert shift(Star(PLUS, PLUS, n), lattice.gen_x1(n)) == Star(MINUS, MINUS, n)
    assert shift(Star(PLUS, PLUS, n), lattice.gen_x2(n)) == Star(PLUS, PLUS, n)
    assert shift(Star(PLUS, MINUS, n), lattice.gen_x1(n)) == Star(PLUS, MINUS, n)
    assert shift(Star(PLUS, MINUS, n), lattice.gen_x2(n)) == Star(MINUS, PLUS, n)


def test_curve_set_tracks_x3_shift():
    rng = random.Random(77)
    for n in (2, 4, 5):
        for g in all_window_curves(n, span=3):
            if not isinstance(g, (Half, Pair, TorsPair)):
                continue
            shifted = shift(g, lattice.gen_x3(n))
            expected = set()
            for c in curve_set(g):
                if isinstance(c, Bridge):
                    expected.add(canonicalize(Bridge(c.bot - 1, c.top + 1, n)))
                elif isinstance(c, UpperArc):
                    expected.add(canonicalize(UpperArc(c.a + 1, c.b + 1, n)))
                else:
                    expected.add(canonicalize(LowerArc(c.a - 1, c.b - 1, n)))
            got = {canonicalize(c) for c in curve_set(shifted)}
            assert got == expected, (g, shifted)


def test_tau_power_is_pure_c_shift():
    n = 3
    for idx in (-2, 0, 3):
        g = Half(1, idx, PLUS, n)
        out = g
        for _ in range(2 * n):
            out = tau(out)
        expected = shift(g, lattice.scale(-2, lattice.canonical_c(n)))
        assert out == expected
        assert tau(shift(g, lattice.neg(lattice.omega(n)))) == g


def test_display_parse_roundtrip():
    for n in (2, 4, 5):
        for g in all_window_curves(n, span=4):
            s = phi(g)
            assert parse_sheaf(display(s), n) == s, (g, display(s))
    assert display(ExtBundle(0, 2, 4)) == "E_{O(-x3)}<x3>"
    assert display(LineBundle(F12, 2, 4)) == "O(x1-x2+2*x3)"
    assert display(TorsN(1, 2, 4)) == "S_{1,1}^{(2)}"


def test_equivariant_descriptions():
    n = 4
    assert equivariant_description(Star(PLUS, PLUS, n)) == "(S_{1}^{(1)}, alpha^-)"
    assert equivariant_description(tors_pair(1, 2, n)) == \
        "(S_{0,1}^{(2)} (+) S_{inf,1}^{(2)}, alpha)"
    assert equivariant_description(pw_loop(Fraction(3, 2), 2, n)) == \
        "(S_{3/2}^{(2)} (+) S_{2/3}^{(2)}, alpha)"
    assert equivariant_description(Pair(0, 2, n)) == \
        "(O_Y(2*y1+2*w) (+) O_Y(2*y2+2*w), alpha)"
    assert "O_Y" in equivariant_description(Half(1, 2, MINUS, n))
