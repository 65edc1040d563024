"""Pseudo-triangulations: maximal sets of pairwise compatible skew-arcs.

Provides validation with a machine-readable violation list, the per-cross
sign classification zeta with its three +- witnesses, the associated
ordinary triangulation (as counted arc kinds), the stable-family detector,
and the two explicit generator families.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .curves import CROSS1, CROSS2, SemiCircle, canonicalize
from .skewcurves import (MINUS, PLUS, Half, Pair, PwLoop, SpLoop, Star,
                         TorsPair, curve_set, phi)
from . import compat

PM0, PM1, PM2 = "pm0", "pm1", "pm2"  # +- with witness A0 / A1 / A2


def is_pm(z):
    return z in (PM0, PM1, PM2)


@dataclass(frozen=True)
class PseudoTri:
    arcs: frozenset
    n: int

    @staticmethod
    def of(arcs, n):
        return PseudoTri(frozenset(arcs), n)

    def with_arcs(self, remove=(), add=()):
        return PseudoTri(self.arcs - frozenset(remove) | frozenset(add), self.n)

    def stars(self):
        return {g for g in self.arcs if isinstance(g, Star)}

    def sigma_pairs(self):
        return {g for g in self.arcs if isinstance(g, Pair)}

    def torsion_pairs(self):
        return {g for g in self.arcs if isinstance(g, TorsPair)}

    def halves(self, cross=None, sign=None):
        out = set()
        for g in self.arcs:
            if isinstance(g, Half):
                if cross is not None and g.cross != cross:
                    continue
                if sign is not None and g.sign != sign:
                    continue
                out.add(g)
        return out

    def at_cross(self, cross, sign=None):
        """The arcs through the given fixed point: halves there plus all
        stars, optionally restricted to one sign coordinate."""
        out = set()
        for g in self.arcs:
            if isinstance(g, Half) and g.cross == cross:
                if sign is None or g.sign == sign:
                    out.add(g)
            elif isinstance(g, Star):
                e = g.e1 if cross == CROSS1 else g.e2
                if sign is None or e == sign:
                    out.add(g)
        return out


@dataclass(frozen=True)
class Violation:
    code: str
    detail: str


@dataclass(frozen=True)
class Report:
    ok: bool
    violations: tuple


def candidate_arcs(arcs, n, margin=None):
    """Bounded universe of skew-arcs that could extend a compatible set:
    every Half/Pair whose curve endpoints stay within the endpoint span of
    the input plus a 2n margin, all rigid TorsPairs, and the four Stars.

    Pairwise compatibility bounds the index spread of any extension, so a
    sufficient window exists; callers assert properties (exactly two
    complements, window stability) that would expose an insufficient one.
    """
    if margin is None:
        margin = 2 * n
    ends = [0]
    for g in arcs:
        for c in curve_set(g):
            if isinstance(c, SemiCircle):
                continue
            if hasattr(c, "bot"):
                ends.extend((c.bot, c.top))
            else:
                ends.extend((c.a, c.b))
    return _candidates_in(min(ends) - margin, max(ends) + margin, n)


@lru_cache(maxsize=4096)
def _candidates_in(lo, hi, n):
    def inside(*points):
        return all(lo <= p <= hi for p in points)

    out = []
    for idx in range(lo, hi + 1):
        if inside(-idx, idx):
            out.append(Half(CROSS1, idx, PLUS, n))
            out.append(Half(CROSS1, idx, MINUS, n))
        if inside(-idx, n + idx):
            out.append(Half(CROSS2, idx, PLUS, n))
            out.append(Half(CROSS2, idx, MINUS, n))
    for i in range(lo, hi + 1):
        for k in range(1, n):
            if inside(i, k - i, i - k, -i):
                out.append(Pair(i, k, n))
    for res in range(n):
        for length in range(1, n):
            out.append(TorsPair(res, length, n))
    for e1 in (PLUS, MINUS):
        for e2 in (PLUS, MINUS):
            out.append(Star(e1, e2, n))
    return tuple(out)


def validate(arcs, n):
    """Full validity report for a would-be pseudo-triangulation."""
    arcs = list(arcs)
    violations = []
    seen = set()
    for g in arcs:
        if g in seen:
            violations.append(Violation("duplicate", repr(g)))
        seen.add(g)
        if g.n != n:
            violations.append(Violation("wrong_n", repr(g)))
        elif not compat.is_skew_arc(g):
            violations.append(Violation("not_skew_arc", repr(g)))
    if violations:
        return Report(False, tuple(violations))
    for a_idx in range(len(arcs)):
        for b_idx in range(a_idx + 1, len(arcs)):
            if not compat.compatible(arcs[a_idx], arcs[b_idx]):
                violations.append(Violation(
                    "incompatible", "%r | %r" % (arcs[a_idx], arcs[b_idx])))
    if violations:
        return Report(False, tuple(violations))
    if len(arcs) != n + 3:
        violations.append(Violation(
            "wrong_size", "expected %d arcs, got %d" % (n + 3, len(arcs))))
    extensions = maximal_extensions(arcs, n)
    if extensions:
        violations.append(Violation(
            "not_maximal", "extends by e.g. %r" % (extensions[0],)))
    return Report(not violations, tuple(violations))


def maximal_extensions(arcs, n, limit=2):
    """Candidates (up to `limit`) that extend the compatible set."""
    arcs = set(arcs)
    found = []
    for g in candidate_arcs(arcs, n):
        if g in arcs:
            continue
        if all(compat.compatible(g, a) for a in arcs):
            found.append(g)
            if len(found) >= limit:
                break
    return found


# -- the zeta classification --------------------------------------------------

def zeta(tri):
    """Per-cross classification: a definite sign when every arc through the
    cross carries it, otherwise +- with its witness (the half pair through
    the cross, or the star pair separated at that coordinate).

    A Star counts toward cross 1 with its first coordinate and toward
    cross 2 with its second; the second-coordinate reading at cross 2 is
    what makes the A2 witness and the two-star decompositions line up."""
    return (_zeta_at(tri, CROSS1), _zeta_at(tri, CROSS2))


def _zeta_at(tri, cross):
    plus = tri.at_cross(cross, PLUS)
    minus = tri.at_cross(cross, MINUS)
    if not plus and not minus:
        raise ValueError("no arcs at cross %d; not a pseudo-triangulation" % cross)
    if not minus:
        return PLUS
    if not plus:
        return MINUS
    halves = tri.halves(cross=cross)
    idxs = {g.idx for g in halves}
    signs = {g.sign for g in halves}
    if len(halves) == 2 and len(idxs) == 1 and signs == {PLUS, MINUS} \
            and not tri.stars():
        return PM0
    stars = tri.stars()
    if cross == CROSS1:
        if any(s.e1 == PLUS for s in stars) and any(s.e1 == MINUS for s in stars):
            return PM1
    else:
        if any(s.e2 == PLUS for s in stars) and any(s.e2 == MINUS for s in stars):
            return PM2
    raise ValueError("both signs at cross %d without a +- witness" % cross)


def zeta_minus(tri, g):
    """zeta of the almost-complete set tri minus {g}: a definite sign or
    plain '+-' (no witness bookkeeping needed)."""
    rest = tri.with_arcs(remove=(g,))
    out = []
    for cross in (CROSS1, CROSS2):
        plus = rest.at_cross(cross, PLUS)
        minus = rest.at_cross(cross, MINUS)
        if not plus and not minus:
            raise ValueError("cross %d emptied by removal" % cross)
        if not minus:
            out.append(PLUS)
        elif not plus:
            out.append(MINUS)
        else:
            out.append("pm")
    return tuple(out)


# -- the associated ordinary triangulation -----------------------------------

@dataclass(frozen=True)
class Ray:
    """Half of a sigma-fixed bridge, seen as a curve from the boundary to a
    punctured fixed point."""

    cross: int
    idx: int
    to_top: bool
    n: int


@dataclass(frozen=True)
class PunctureLoop:
    """The loop around the cylinder based at a punctured fixed point."""

    cross: int
    n: int


@dataclass(frozen=True)
class GammaLambda:
    punctures: frozenset
    arcs: frozenset


def gamma_lambda(tri):
    """The ordinary triangulation associated with a valid tri: punctures at
    the definitely-signed crosses, arcs per the four local rules.  The arc
    count 2n + 3*|punctures| is enforced."""
    z = zeta(tri)
    punctures = frozenset(
        cross for cross, zi in zip((CROSS1, CROSS2), z) if not is_pm(zi))
    arcs = set()
    for g in tri.arcs:
        if isinstance(g, (Pair, TorsPair)):
            for c in curve_set(g):
                arcs.add(canonicalize(c))
    for cross, zi in zip((CROSS1, CROSS2), z):
        other = CROSS2 if cross == CROSS1 else CROSS1
        if zi in (PM1, PM2):
            arcs.add(PunctureLoop(other, tri.n))
        elif zi == PM0:
            fixed = {canonicalize(c) for g in tri.halves(cross=cross)
                     for c in curve_set(g)}
            assert len(fixed) == 1
            arcs.add(next(iter(fixed)))
        else:
            for g in tri.halves(cross=cross, sign=zi):
                arcs.add(Ray(cross, g.idx, to_top=True, n=tri.n))
                arcs.add(Ray(cross, g.idx, to_top=False, n=tri.n))
    if not is_pm(z[0]) and not is_pm(z[1]) and tri.stars():
        arcs.add(SemiCircle(0, tri.n))
        arcs.add(SemiCircle(1, tri.n))
    out = GammaLambda(punctures, frozenset(arcs))
    expected = 2 * tri.n + 3 * len(punctures)
    if len(out.arcs) != expected:
        raise AssertionError(
            "triangulation count %d != %d" % (len(out.arcs), expected))
    return out


def classify_case(tri):
    """Which of the six counting cases applies (exactly one always does)."""
    z1, z2 = zeta(tri)
    n_star = len(tri.stars())
    if n_star == 2:
        return 1
    if n_star == 1:
        return 2
    if is_pm(z1) and is_pm(z2):
        return 3
    if is_pm(z1):
        return 4
    if is_pm(z2):
        return 5
    return 6


# -- the stable family --------------------------------------------------------

def is_fv(tri):
    """Whether the set has the stable-bundle shape: half pairs at both
    crosses and sigma-pairs whose endpoint chains are monotone.  Returns
    (flag, a_chain, b_chain); the chains are None when the flag is False."""
    if tri.stars() or tri.torsion_pairs():
        return False, None, None
    h1 = tri.halves(cross=CROSS1)
    h2 = tri.halves(cross=CROSS2)
    if len(h1) != 2 or len(h2) != 2:
        return False, None, None
    if len({g.idx for g in h1}) != 1 or len({g.sign for g in h1}) != 2:
        return False, None, None
    if len({g.idx for g in h2}) != 1 or len({g.sign for g in h2}) != 2:
        return False, None, None
    a0 = next(iter(h1)).idx          # ends (b0, a0) = (-a0, a0)
    b0 = -a0
    idx_n = next(iter(h2)).idx       # ends (b_n, a_n) = (-idx, n+idx)
    a_n, b_n = tri.n + idx_n, -idx_n
    pairs = sorted(tri.sigma_pairs(), key=lambda g: g.k)
    if [g.k for g in pairs] != list(range(1, tri.n)):
        return False, None, None
    # the lift of each sigma-pair is forced: only the canonical member has
    # endpoint sum in (0, n), so the chains read off as (b, a) = (i, k-i)
    a_chain = [a0] + [g.k - g.i for g in pairs] + [a_n]
    b_chain = [b0] + [g.i for g in pairs] + [b_n]
    monotone = all(x <= y for x, y in zip(a_chain, a_chain[1:])) and \
        all(x <= y for x, y in zip(b_chain, b_chain[1:]))
    if not monotone:
        return False, None, None
    return True, a_chain, b_chain


def region_labels(tri):
    """Diagnostic partition of a triangulation containing sigma-pairs.

    The sigma-pair closest to each fixed point (its members meet the
    mid-line at distance k/2 from cross 1 and (n-k)/2 from cross 2, so
    closest means minimal resp. maximal k) cuts off a quadrilateral around
    that cross; arcs inside it are labeled "grn" (cross 1) or "blu"
    (cross 2) and everything between is "org".  Purely descriptive; no
    contract depends on it.
    """
    pairs = tri.sigma_pairs()
    if not pairs:
        raise ValueError("region labels need at least one sigma-pair")
    n = tri.n
    k_min = min(g.k for g in pairs)
    k_max = max(g.k for g in pairs)
    labels = {}
    for g in tri.arcs:
        if isinstance(g, Half):
            labels[g] = "grn" if g.cross == CROSS1 else "blu"
        elif isinstance(g, Pair):
            labels[g] = "org"
        elif isinstance(g, TorsPair):
            labels[g] = _torsion_region(g, k_min, k_max, n)
        else:
            raise ValueError("stars are incompatible with sigma-pairs")
    return labels


def _torsion_region(g, k_min, k_max, n):
    # the upper arch spans (res-len-1, res); twice its endpoints against
    # the quadrilateral walls at +-k_min (cross 1) and k_max..2n-k_max
    # (cross 2), modulo the period
    a2, b2 = 2 * (g.res - g.length - 1), 2 * g.res
    period = 2 * n
    for t in range(-2, 3):
        lo, hi = a2 + t * period, b2 + t * period
        if -k_min < lo and hi < k_min:
            return "grn"
        if k_max < lo and hi < period - k_max:
            return "blu"
    return "org"


def _floor_even(k):
    return k if k % 2 == 0 else k - 1


def fv_arrow(a, b, n):
    """The generator family whose first interior step raises the top chain."""
    return _fv_family(a, b, n, first_step_top=True)


def fv_under(a, b, n):
    """The generator family whose first interior step raises the bottom chain."""
    return _fv_family(a, b, n, first_step_top=False)


def _fv_family(a, b, n, first_step_top):
    if a + b != 0:
        raise ValueError("generator families need a + b = 0")
    arcs = {Half(CROSS1, a, PLUS, n), Half(CROSS1, a, MINUS, n)}
    for k in range(1, n):
        m = k // 2
        if k % 2 == 0:
            bot = b + m
        else:
            bot = b + m if first_step_top else b + m + 1
        arcs.add(Pair(bot, k, n))
    half_up = _floor_even(n + 1) // 2
    half_dn = _floor_even(n) // 2
    if first_step_top:
        top, bot = a + half_up, b + half_dn
    else:
        top, bot = a + half_dn, b + half_up
    idx = top - (top + bot + n) // 2  # cross-2 index of the bridge (bot, top)
    assert (top + bot - n) % (2 * n) == 0
    arcs.add(Half(CROSS2, idx, PLUS, n))
    arcs.add(Half(CROSS2, idx, MINUS, n))
    return PseudoTri.of(arcs, n)


def tilting_sheaf(tri):
    """The sheaf names of a valid tri, in canonical order."""
    names = [phi(g) for g in tri.arcs]
    names.sort(key=sheaf_sort_key)
    assert len(set(names)) == len(names)
    return names


def sheaf_sort_key(s):
    from . import skewcurves as sc
    if isinstance(s, sc.LineBundle):
        return (0, (sc.F0, sc.F12, sc.F1, sc.F2).index(s.form), s.i)
    if isinstance(s, sc.ExtBundle):
        return (1, s.k, s.i)
    if isinstance(s, sc.TorsN):
        return (2, s.length, s.res)
    if isinstance(s, sc.Tors2):
        return (3, s.pt, s.length, s.res)
    return (4, s.length, s.lam_max)


def arc_sort_key(g):
    if isinstance(g, Half):
        return (0, g.cross, g.idx, g.sign)
    if isinstance(g, Pair):
        return (1, g.k, g.i)
    if isinstance(g, TorsPair):
        return (2, g.length, g.res)
    if isinstance(g, Star):
        return (3, g.e1, g.e2)
    if isinstance(g, SpLoop):
        return (4, g.lam, g.j, g.sign)
    if isinstance(g, PwLoop):
        return (5, g.j, g.lam_max)
    raise TypeError("not a skew-curve: %r" % (g,))
