"""Flips of skew-arcs inside pseudo-triangulations.

The executable definition of a flip is the two-complement search: dropping
one arc from a pseudo-triangulation leaves an almost-complete set with
exactly two completions, and the flip swaps one for the other.  The
classification table (types I(1)-I(6), II(1)-II(3), III(1)-III(3)) is kept
as a total classifier with assertions on every prediction it makes, not as
the execution path.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import compat, lattice
from .skewcurves import (MINUS, PLUS, Half, Pair, Star, TorsPair, flip_sign,
                         shift)
from .triang import (PM0, PseudoTri, arc_sort_key, candidate_arcs, is_fv,
                     zeta, zeta_minus)


class FlipError(Exception):
    pass


class ComplementError(FlipError):
    """The two-complement contract failed: bad input or a window bug."""


@dataclass(frozen=True)
class FlipResult:
    new_tri: PseudoTri
    removed: object
    added: object
    case_label: str


def complements(almost, n):
    """The completions of an almost-complete compatible set of n+2
    skew-arcs; exactly two exist, and anything else raises."""
    almost = set(almost)
    if len(almost) != n + 2:
        raise ComplementError("expected %d arcs, got %d" % (n + 2, len(almost)))
    arcs = sorted(almost, key=arc_sort_key)
    for idx, g in enumerate(arcs):
        if not compat.is_skew_arc(g):
            raise ComplementError("not a skew-arc: %r" % (g,))
        for h in arcs[idx + 1:]:
            if not compat.compatible(g, h):
                raise ComplementError("incompatible input: %r | %r" % (g, h))
    found = []
    for g in candidate_arcs(almost, n):
        if g in almost:
            continue
        if all(compat.compatible(g, a) for a in almost):
            found.append(g)
    if len(found) != 2:
        raise ComplementError(
            "found %d complements instead of 2: %r" % (len(found), found))
    return sorted(found, key=arc_sort_key)


def flip(tri, g):
    """Replace g by the unique other completion of tri minus {g}."""
    if g not in tri.arcs:
        raise FlipError("arc %r is not in the triangulation" % (g,))
    rest = tri.arcs - {g}
    pair_of = complements(rest, tri.n)
    if g not in pair_of:
        raise ComplementError("removed arc is not a complement of the rest")
    added = pair_of[0] if pair_of[1] == g else pair_of[1]
    new_tri = tri.with_arcs(remove=(g,), add=(added,))
    label = classify_flip(tri, g, added)
    return FlipResult(new_tri, g, added, label)


class ClassifyError(FlipError):
    """A flip landed outside the literal rows of the classification table."""


def classify_flip(tri, removed, added):
    """The table row a verified flip belongs to.  Rows that predict the
    result from the sign data recompute the prediction and assert it."""
    z = zeta(tri)
    if isinstance(removed, Half):
        return _classify_type1(tri, removed, added, z)
    if isinstance(removed, (Pair, TorsPair)):
        return _classify_type2(tri, removed, added, z)
    if isinstance(removed, Star):
        return _classify_type3(tri, removed, added, z)
    raise ClassifyError("cannot flip %r" % (removed,))


def _sign_or_raise(z, cross, context):
    v = z[cross - 1]
    if v not in (PLUS, MINUS):
        raise ClassifyError("%s needs a definite sign at cross %d, got %r"
                            % (context, cross, v))
    return v


def _classify_type1(tri, removed, added, z):
    i = removed.cross
    zi = z[i - 1]
    at_zero = zi == PM0
    if isinstance(added, Half) and added.cross == i:
        if at_zero:
            zm = _sign_or_raise(zeta_minus(tri, removed), i, "I(1)")
            _expect(added.sign == zm, "I(1)", added, zm)
            return "I(1)"
        zi = _sign_or_raise(z, i, "I(6)")
        if added.sign == zi:
            # fan slide around the puncture loop (two-star configurations):
            # stays in the sign class and follows the I(1) result formula
            zm = _sign_or_raise(zeta_minus(tri, removed), i, "I(1)")
            _expect(added.sign == zm, "I(1)", added, zm)
            return "I(1)"
        _expect(added.sign == flip_sign(zi), "I(6)", added, flip_sign(zi))
        return "I(6)"
    if isinstance(added, Star):
        if at_zero:
            zm = zeta_minus(tri, removed)
            e1 = _sign_or_raise(zm, 1, "I(2)")
            e2 = _sign_or_raise(zm, 2, "I(2)")
            _expect((added.e1, added.e2) == (e1, e2), "I(2)", added, (e1, e2))
            return "I(2)"
        e1 = _sign_or_raise(z, 1, "I(3)")
        e2 = _sign_or_raise(z, 2, "I(3)")
        want = (flip_sign(e1), e2) if i == 1 else (e1, flip_sign(e2))
        _expect((added.e1, added.e2) == want, "I(3)", added, want)
        return "I(3)"
    if isinstance(added, (Pair, TorsPair)):
        if at_zero:
            raise ClassifyError("pair result from a +-(0) cross: %r" % (added,))
        return "I(4)"
    if isinstance(added, Half):
        j = added.cross
        zj = _sign_or_raise(z, j, "I(5)")
        _expect(added.sign == zj, "I(5)", added, zj)
        return "I(5)"
    raise ClassifyError("unexpected type I result %r" % (added,))


def _classify_type2(tri, removed, added, z):
    if isinstance(added, Half):
        zi = _sign_or_raise(z, added.cross, "II(1)")
        _expect(added.sign == zi, "II(1)", added, zi)
        return "II(1)"
    if isinstance(added, (Pair, TorsPair)):
        return "II(2)"
    if isinstance(added, Star):
        e1 = _sign_or_raise(z, 1, "II(3)")
        e2 = _sign_or_raise(z, 2, "II(3)")
        _expect((added.e1, added.e2) == (e1, e2), "II(3)", added, (e1, e2))
        return "II(3)"
    raise ClassifyError("unexpected type II result %r" % (added,))


def _classify_type3(tri, removed, added, z):
    if isinstance(added, (Pair, TorsPair)):
        return "III(1)"
    if isinstance(added, Half):
        if len(tri.stars()) == 1:
            zi = _sign_or_raise(z, added.cross, "III(2)")
            _expect(added.sign == flip_sign(zi), "III(2)", added, flip_sign(zi))
            return "III(2)"
        # two stars: the +- witness names the cross the new half lives at
        witness = 1 if z[0] == "pm1" else 2 if z[1] == "pm2" else None
        if witness is None:
            raise ClassifyError("two stars without a +-(1)/+-(2) witness")
        _expect(added.cross == witness, "III(3)", added, witness)
        zm = _sign_or_raise(zeta_minus(tri, removed), witness, "III(3)")
        _expect(added.sign == zm, "III(3)", added, zm)
        return "III(3)"
    raise ClassifyError("unexpected type III result %r" % (added,))


def _expect(ok, label, added, want):
    if not ok:
        raise ClassifyError("%s predicted %r, search produced %r"
                            % (label, want, added))


# -- composite mutations on the stable family ---------------------------------

def _fv_slots(tri):
    """(cross-1 halves, pairs by k, cross-2 halves) of a stable-family tri."""
    ok, _, _ = is_fv(tri)
    if not ok:
        raise FlipError("composite mutations need an FV triangulation")
    pairs = {g.k: g for g in tri.sigma_pairs()}
    return tri.halves(cross=1), pairs, tri.halves(cross=2)


def mu_hat_steps(tri, i):
    """The flips realizing the i-th composite mutation (one flip in the
    interior, two at the ends; end flips commute and the result is
    order-independent)."""
    h1, pairs, h2 = _fv_slots(tri)
    if not 0 <= i <= tri.n:
        raise FlipError("mutation index out of range")
    if 1 <= i <= tri.n - 1:
        return [flip(tri, pairs[i])]
    ends = sorted(h1 if i == 0 else h2, key=arc_sort_key)
    first = flip(tri, ends[0])
    second = flip(first.new_tri, ends[1])
    alt = flip(flip(tri, ends[1]).new_tri, ends[0])
    if alt.new_tri != second.new_tri:
        raise FlipError("end mutation is order-dependent at index %d" % i)
    return [first, second]


def mu_hat(tri, i):
    return mu_hat_steps(tri, i)[-1].new_tri


def shift_all(tri, x):
    return PseudoTri.of({shift(g, x) for g in tri.arcs}, tri.n)


def stable_under_x1_minus_x2(tri):
    t = lattice.normalize((1, -1, 0, 0), tri.n)
    return shift_all(tri, t).arcs == tri.arcs


def iota(tri):
    """Which composite mutations keep the triangulation a shift-stable
    tilting bundle: a bit per index 0..n.  Stability alone is not enough;
    a mutation into torsion is shift-stable but not a bundle."""
    ok, _, _ = is_fv(tri)
    if not ok:
        raise FlipError("iota is defined on FV triangulations only")
    bits = []
    for i in range(tri.n + 1):
        out = mu_hat(tri, i)
        is_bundle = all(isinstance(g, (Half, Pair)) for g in out.arcs)
        good = is_bundle and stable_under_x1_minus_x2(out)
        assert good == is_fv(out)[0]
        bits.append(int(good))
    return tuple(bits)
