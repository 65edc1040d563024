"""Compatibility of skew-curves, realized combinatorially.

Two skew-curves are compatible when the extensions between their sheaves
vanish in both directions.  For the non-loop kinds this reduces to the
intersection conditions T1/T2 on the associated curve sets; for the
parameter pairs (Stars) the 16-entry extension table against line bundles
gives the sign-matching rule.  Self-compatibility ("is a skew-arc") is the
rigidity condition.

Two rules are inferred rather than tabulated and are extensions of the
written-down cases: a Star against period-n torsion is always compatible
(distinct torsion tubes are orthogonal), and the non-rigid loop kinds
(PwLoop, SpLoop of length >= 2) are compatible with torsion in a different
tube only -- never with bundles, same-tube torsion, or themselves.
"""

from __future__ import annotations

from functools import lru_cache

from . import lattice
from .curves import CROSS1, intersection_number
from .skewcurves import (Half, Pair, PwLoop, SpLoop, Star, TorsPair, curve_set,
                         is_loop_kind, phi)

# dim Ext^1(simple, line bundle) for the four period-2 simples against the
# four line-bundle forms, independent of the x3-twist.  Keys: (pt, res),
# values by form F0/F12/F1/F2.
EXT1_STAR_LINE = {
    ("inf", 0): {"F0": 1, "F12": 0, "F1": 0, "F2": 1},
    ("inf", 1): {"F0": 0, "F12": 1, "F1": 1, "F2": 0},
    ("0", 0): {"F0": 1, "F12": 0, "F1": 1, "F2": 0},
    ("0", 1): {"F0": 0, "F12": 1, "F1": 0, "F2": 1},
}


def ext1_dim_star_line(star, half):
    """dim Ext^1 from a period-2 simple (Star) to a line bundle (Half)."""
    if not isinstance(star, Star) or not isinstance(half, Half):
        raise TypeError("expected (Star, Half)")
    t2 = phi(star)
    lb = phi(half)
    return EXT1_STAR_LINE[(t2.pt, t2.res)][lb.form]


def _total_intersections(g1, g2):
    return sum(intersection_number(c, d)
               for c in curve_set(g1) for d in curve_set(g2))


def compatible(g1, g2):
    """The compatibility predicate; symmetric and shift-equivariant."""
    if g1.n != g2.n:
        raise ValueError("mismatched weight parameters")
    return _compatible_cached(g1, g2)


@lru_cache(maxsize=1 << 20)
def _compatible_cached(g1, g2):
    n = g1.n
    if g1 == g2:
        return is_skew_arc(g1)

    if is_loop_kind(g1) or is_loop_kind(g2):
        return _loop_compatible(g1, g2)

    if isinstance(g1, Half) and isinstance(g2, Half) and g1.cross == g2.cross:
        # same fixed point: the two halves of one bridge are always fine;
        # otherwise only same-sign halves meeting exactly once (T2)
        if g1.idx == g2.idx:
            return True
        if g1.sign != g2.sign:
            return False
        hits = _total_intersections(g1, g2)
        arithmetic = abs(g1.idx - g2.idx) <= n
        assert (hits == 1) == arithmetic, \
            "T2 bookkeeping mismatch for %r, %r" % (g1, g2)
        return arithmetic

    return _total_intersections(g1, g2) == 0  # T1


def _loop_compatible(g1, g2):
    if isinstance(g2, Star) and not isinstance(g1, Star):
        g1, g2 = g2, g1
    if isinstance(g1, Star):
        if isinstance(g2, Star):
            # same period-2 tube iff the coordinates differ in both slots
            diff = (g1.e1 != g2.e1) + (g1.e2 != g2.e2)
            return diff <= 1
        if isinstance(g2, Half):
            e = g1.e1 if g2.cross == CROSS1 else g1.e2
            ok = g2.sign == e
            assert ok == (ext1_dim_star_line(g1, g2) == 0)
            return ok
        if isinstance(g2, Pair):
            return False  # a parameter pair never clears an extension bundle
        return _tube_of(g1) != _tube_of(g2)
    # remaining operand is a PwLoop or an SpLoop of length >= 2: non-rigid
    # family, cleared only by torsion in a different tube
    if isinstance(g1, (Half, Pair)) or isinstance(g2, (Half, Pair)):
        return False
    return _tube_of(g1) != _tube_of(g2)


def _tube_of(g):
    """Which torsion tube a torsion-type skew-curve sits in."""
    if isinstance(g, Star):
        return ("p2", 1 if g.e1 == g.e2 else -1)
    if isinstance(g, SpLoop):
        return ("p2", g.lam)
    if isinstance(g, TorsPair):
        return ("pn",)
    if isinstance(g, PwLoop):
        return ("hom", g.orbit)
    return None


@lru_cache(maxsize=1 << 16)
def is_skew_arc(g):
    """Self-compatibility: Half, Pair and Star always; TorsPair exactly when
    its arc span admits no interleaving translate (length <= n-1); loops of
    length >= 2 and homogeneous loops never."""
    if isinstance(g, (Half, Pair, Star)):
        return True
    if isinstance(g, TorsPair):
        geometric = _total_intersections(g, g) == 0
        assert geometric == (g.length <= g.n - 1)
        return geometric
    if isinstance(g, (SpLoop, PwLoop)):
        return False
    raise TypeError("not a skew-curve: %r" % (g,))


def line_bundle_interval_test(h1, h2):
    """Independent oracle for Half/Half compatibility: the twist difference
    of the two line bundles lies in [-c, c]."""
    diff = lattice.sub(phi(h1).degree(), phi(h2).degree())
    return lattice.in_c_interval(diff)
