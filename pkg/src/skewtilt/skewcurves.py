"""The skew-curve taxonomy on the cylinder with involution, the bijection to
indecomposable sheaf names, the shift action of the string group, and the
descriptive equivariant output.

Skew-curve kinds:

* Half(cross, idx, sign) -- one half of the sigma-fixed bridge through a
  fixed point: at cross 1 the bridge (-idx, idx), at cross 2 (-idx, n+idx).
* Pair(i, k) -- the sigma-orbit {Bridge(i, k-i), Bridge(i-k, -i)} with
  1 <= k <= n-1; parametrizes extension bundles.
* TorsPair(res, len) -- the sigma-orbit {UpperArc(res-len-1, res),
  LowerArc(-res, len+1-res)}; period-n torsion.
* Star(e1, e2) -- the four parameter pairs, i.e. the simple objects of the
  two period-2 tubes, drawn on the semicircle pair {L0, L1}.
* PwLoop(orbit, j) -- parameterized loop with parameter orbit {lam, 1/lam},
  lam not in {0, 1, -1}; homogeneous torsion.
* SpLoop(lam, j, sign) -- special loops (lam = +-1) of length j >= 2; the
  j = 1 loops are canonically the Stars (use sp_loop() to construct).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import lattice
from .curves import CROSS1, CROSS2, Bridge, LowerArc, UpperArc, SemiCircle

PLUS = "+"
MINUS = "-"


def flip_sign(s):
    return MINUS if s == PLUS else PLUS


def _check_sign(s):
    if s not in (PLUS, MINUS):
        raise ValueError("sign must be '+' or '-', got %r" % (s,))


@dataclass(frozen=True)
class Half:
    cross: int
    idx: int
    sign: str
    n: int

    def __post_init__(self):
        if self.cross not in (CROSS1, CROSS2):
            raise ValueError("cross must be 1 or 2")
        _check_sign(self.sign)


@dataclass(frozen=True)
class Pair:
    i: int
    k: int
    n: int

    def __post_init__(self):
        if not 1 <= self.k <= self.n - 1:
            raise ValueError("pair parameter k must lie in [1, n-1]")


@dataclass(frozen=True)
class TorsPair:
    res: int
    length: int
    n: int

    def __post_init__(self):
        if not 0 <= self.res < self.n:
            raise ValueError("residue must be reduced mod n")
        if self.length < 1:
            raise ValueError("length must be >= 1")


@dataclass(frozen=True)
class Star:
    e1: str
    e2: str
    n: int

    def __post_init__(self):
        _check_sign(self.e1)
        _check_sign(self.e2)


@dataclass(frozen=True)
class PwLoop:
    lam_min: Fraction
    lam_max: Fraction
    j: int
    n: int

    def __post_init__(self):
        if self.j < 1:
            raise ValueError("loop power must be >= 1")

    @property
    def orbit(self):
        return (self.lam_min, self.lam_max)


@dataclass(frozen=True)
class SpLoop:
    lam: int
    j: int
    sign: str
    n: int

    def __post_init__(self):
        if self.lam not in (1, -1):
            raise ValueError("special parameter must be +-1")
        if self.j < 2:
            raise ValueError("SpLoop needs j >= 2; j = 1 is a Star")
        _check_sign(self.sign)


# the j = 1 special loops are identified with the parameter pairs:
# (1,L)^+ = (+,+), (1,L)^- = (-,-), (-1,L)^+ = (+,-), (-1,L)^- = (-,+)
_STAR_OF_LOOP = {(1, PLUS): (PLUS, PLUS), (1, MINUS): (MINUS, MINUS),
                 (-1, PLUS): (PLUS, MINUS), (-1, MINUS): (MINUS, PLUS)}
_LOOP_OF_STAR = {v: k for k, v in _STAR_OF_LOOP.items()}


def sp_loop(lam, j, sign, n):
    """Special loop constructor; normalizes j = 1 to the matching Star."""
    if j == 1:
        e1, e2 = _STAR_OF_LOOP[(lam, sign)]
        return Star(e1, e2, n)
    return SpLoop(lam, j, sign, n)


def pw_loop(lam, j, n):
    lam = Fraction(lam)
    if lam in (0, 1, -1):
        raise ValueError("pw parameter must avoid 0 and +-1")
    inv = 1 / lam
    return PwLoop(min(lam, inv), max(lam, inv), j, n)


def tors_pair(res, length, n):
    return TorsPair(res % n, length, n)


def pair(i, k, n):
    """Canonical Pair from a raw (i, k), k arbitrary nonzero mod n.

    The raw data means the sigma-orbit of Bridge(i, k-i); the equivalences
    (i, k) ~ (i+tn, k+2tn) ~ (i-k, -k) reduce k into [1, n-1].
    """
    two_n = 2 * n
    k0 = k % two_n
    if k0 % n == 0:
        raise ValueError("k = 0 mod n gives a sigma-fixed bridge, not a pair")
    if k0 > n:
        i, k = i - k, -k
        k0 = k % two_n
    t = (k - k0) // two_n
    return Pair(i - t * n, k0, n)


# -- associated curve sets ---------------------------------------------------

def curve_set(g):
    """The set of cylinder curves a skew-curve was built from.  Loop kinds
    give the semicircle markers, which intersection_number refuses."""
    n = g.n
    if isinstance(g, Half):
        if g.cross == CROSS1:
            return frozenset({Bridge(-g.idx, g.idx, n)})
        return frozenset({Bridge(-g.idx, n + g.idx, n)})
    if isinstance(g, Pair):
        return frozenset({Bridge(g.i, g.k - g.i, n),
                          Bridge(g.i - g.k, -g.i, n)})
    if isinstance(g, TorsPair):
        return frozenset({UpperArc(g.res - g.length - 1, g.res, n),
                          LowerArc(-g.res, g.length + 1 - g.res, n)})
    if isinstance(g, (Star, PwLoop, SpLoop)):
        return frozenset({SemiCircle(0, n), SemiCircle(1, n)})
    raise TypeError("not a skew-curve: %r" % (g,))


def is_loop_kind(g):
    return isinstance(g, (Star, PwLoop, SpLoop))


# -- sheaf names -------------------------------------------------------------
#
# Line bundles come in the four coset forms
#   F0:  O(i*x3)      F12: O(x1 - x2 + i*x3)
#   F1:  O(x1 + i*x3) F2:  O(x2 + i*x3)

F0, F12, F1, F2 = "F0", "F12", "F1", "F2"


@dataclass(frozen=True)
class LineBundle:
    form: str
    i: int
    n: int

    def __post_init__(self):
        if self.form not in (F0, F12, F1, F2):
            raise ValueError("unknown line-bundle form %r" % (self.form,))

    def degree(self):
        """The twist as a lattice element."""
        a1, a2 = {F0: (0, 0), F12: (1, -1), F1: (1, 0), F2: (0, 1)}[self.form]
        return lattice.normalize((a1, a2, self.i, 0), self.n)


@dataclass(frozen=True)
class ExtBundle:
    i: int
    k: int
    n: int

    def __post_init__(self):
        if not 1 <= self.k <= self.n - 1:
            raise ValueError("extension parameter k must lie in [1, n-1]")


@dataclass(frozen=True)
class TorsN:
    res: int
    length: int
    n: int


@dataclass(frozen=True)
class Tors2:
    pt: str  # "inf" or "0"
    res: int  # mod 2
    length: int
    n: int

    def __post_init__(self):
        if self.pt not in ("inf", "0"):
            raise ValueError("period-2 point must be 'inf' or '0'")
        if self.res not in (0, 1):
            raise ValueError("period-2 residue must be 0 or 1")


@dataclass(frozen=True)
class TorsHom:
    lam_min: Fraction
    lam_max: Fraction
    length: int
    n: int

    @property
    def orbit(self):
        return (self.lam_min, self.lam_max)


def line_bundle_from_degree(x):
    """The unique coset form of O(x) for a lattice element x."""
    l1, l2, l3, l = x.raw()
    n = x.n
    if (l1, l2) == (0, 0):
        return LineBundle(F0, l3 + n * l, n)
    if (l1, l2) == (1, 1):
        return LineBundle(F12, l3 + n * (l + 1), n)
    if (l1, l2) == (1, 0):
        return LineBundle(F1, l3 + n * l, n)
    return LineBundle(F2, l3 + n * l, n)


# -- the bijection phi -------------------------------------------------------

def phi(g):
    """Sheaf name of a skew-curve (the explicit parameterization table)."""
    n = g.n
    if isinstance(g, Half):
        if g.cross == CROSS1:
            return LineBundle(F12 if g.sign == PLUS else F0, g.idx, n)
        return LineBundle(F1 if g.sign == PLUS else F2, g.idx, n)
    if isinstance(g, Pair):
        return ExtBundle(g.i, g.k, n)
    if isinstance(g, TorsPair):
        return TorsN(g.res, g.length, n)
    if isinstance(g, Star):
        lam, sign = _LOOP_OF_STAR[(g.e1, g.e2)]
        return Tors2("inf" if lam == 1 else "0",
                     0 if sign == PLUS else 1, 1, n)
    if isinstance(g, SpLoop):
        res = (g.j + 1) % 2 if g.sign == PLUS else g.j % 2
        return Tors2("inf" if g.lam == 1 else "0", res, g.j, n)
    if isinstance(g, PwLoop):
        return TorsHom(g.lam_min, g.lam_max, g.j, n)
    raise TypeError("not a skew-curve: %r" % (g,))


def phi_inv(s):
    n = s.n
    if isinstance(s, LineBundle):
        cross = CROSS1 if s.form in (F0, F12) else CROSS2
        sign = PLUS if s.form in (F12, F1) else MINUS
        return Half(cross, s.i, sign, n)
    if isinstance(s, ExtBundle):
        return Pair(s.i, s.k, n)
    if isinstance(s, TorsN):
        return TorsPair(s.res % n, s.length, n)
    if isinstance(s, Tors2):
        lam = 1 if s.pt == "inf" else -1
        sign = PLUS if s.res == (s.length + 1) % 2 else MINUS
        return sp_loop(lam, s.length, sign, n)
    if isinstance(s, TorsHom):
        return PwLoop(s.lam_min, s.lam_max, s.length, n)
    raise TypeError("not a sheaf name: %r" % (s,))


# -- the shift action --------------------------------------------------------

def shift(g, x):
    """Degree shift of a skew-curve by a lattice element x (normal form)."""
    if g.n != x.n:
        raise ValueError("mismatched weight parameters")
    n = g.n
    l1, l2, l3, l = x.raw()
    if isinstance(g, Half):
        # raw endpoints move by (-l3 - l*n, l3 + (l1+l2+l)*n); sign flips
        # exactly when l1 = 1
        bot = -g.idx - l3 - l * n
        top = (g.idx if g.cross == CROSS1 else n + g.idx) + l3 + (l1 + l2 + l) * n
        sign = flip_sign(g.sign) if l1 == 1 else g.sign
        return _half_from_bridge(Bridge(bot, top, n), sign)
    if isinstance(g, Pair):
        return pair(g.i - l3 - l * n, g.k + (l1 + l2) * n, n)
    if isinstance(g, TorsPair):
        return TorsPair((g.res + l3) % n, g.length, n)
    if isinstance(g, Star):
        lam, sign = _LOOP_OF_STAR[(g.e1, g.e2)]
        if (l1 if lam == 1 else l2) % 2 == 1:
            sign = flip_sign(sign)
        e1, e2 = _STAR_OF_LOOP[(lam, sign)]
        return Star(e1, e2, n)
    if isinstance(g, SpLoop):
        sign = g.sign
        if (l1 if g.lam == 1 else l2) % 2 == 1:
            sign = flip_sign(sign)
        return SpLoop(g.lam, g.j, sign, n)
    if isinstance(g, PwLoop):
        return g
    raise TypeError("not a skew-curve: %r" % (g,))


def _half_from_bridge(b, sign):
    """Half skew-curve from a sigma-fixed bridge lift and a sign."""
    s = b.bot + b.top
    if s % b.n != 0:
        raise ValueError("bridge %r is not sigma-fixed" % (b,))
    if s % (2 * b.n) == 0:
        return Half(CROSS1, (b.top - b.bot) // 2, sign, b.n)
    return Half(CROSS2, (b.top - b.bot - b.n) // 2, sign, b.n)


def half_of_fixed_bridge(b, sign):
    return _half_from_bridge(b, sign)


def pair_of_bridge(b):
    """The sigma-pair containing the (non sigma-fixed) bridge class."""
    return pair(b.bot, b.bot + b.top, b.n)


def tors_pair_of_arc(c):
    """The sigma-pair containing a boundary-arc class."""
    from .curves import canonicalize
    c = canonicalize(c)
    if isinstance(c, UpperArc):
        return tors_pair(c.b, c.b - c.a - 1, c.n)
    if isinstance(c, LowerArc):
        return tors_pair(-c.a, c.b - c.a - 1, c.n)
    raise TypeError("expected a boundary arc, got %r" % (c,))


def tau(g):
    """The Auslander-Reiten shift: twist by the dualizing element."""
    return shift(g, lattice.omega(g.n))


# -- display and parsing -----------------------------------------------------

def _x3_term(i):
    if i == 0:
        return ""
    if i == 1:
        return "+x3"
    if i == -1:
        return "-x3"
    return "%+d*x3" % i


def display(s):
    """Readable sheaf name; parse_sheaf inverts this."""
    if isinstance(s, LineBundle):
        head = {F0: "", F12: "x1-x2", F1: "x1", F2: "x2"}[s.form]
        tail = _x3_term(s.i)
        if head and tail:
            inner = head + tail
        elif head:
            inner = head
        elif tail:
            inner = tail.lstrip("+")
        else:
            inner = ""
        return "O(%s)" % inner if inner else "O"
    if isinstance(s, ExtBundle):
        base = display(LineBundle(F0, -(s.i + 1), s.n))
        inner = _x3_term(s.k - 1).lstrip("+") or "0"
        return "E_{%s}<%s>" % (base, inner)
    if isinstance(s, TorsN):
        return "S_{1,%d}^{(%d)}" % (s.res, s.length)
    if isinstance(s, Tors2):
        return "S_{%s,%d}^{(%d)}" % (s.pt, s.res, s.length)
    if isinstance(s, TorsHom):
        return "S_{[%s]}^{(%d)}" % (s.lam_max, s.length)
    raise TypeError("not a sheaf name: %r" % (s,))


def parse_sheaf(text, n):
    import re
    s = text.replace(" ", "")
    if s == "O":
        return LineBundle(F0, 0, n)
    m = re.fullmatch(r"O\((.*)\)", s)
    if m:
        return line_bundle_from_degree(lattice.parse_element(m.group(1), n))
    m = re.fullmatch(r"E_\{O(\((.*)\))?\}<(.*)>", s)
    if m:
        deg = lattice.parse_element(m.group(2), n) if m.group(2) else lattice.zero(n)
        l1, l2, l3, l = deg.raw()
        if (l1, l2) != (0, 0):
            raise ValueError("extension base must be a power of x3: %r" % text)
        i = -(l3 + n * l) - 1
        inner = m.group(3)
        k = 1 if inner == "0" else _parse_x3_multiple(inner) + 1
        if not 1 <= k <= n - 1:
            raise ValueError("extension parameter out of range in %r" % text)
        return ExtBundle(i, k, n)
    m = re.fullmatch(r"S_\{1,(-?\d+)\}\^\{?\((\d+)\)\}?", s)
    if m:
        return TorsN(int(m.group(1)) % n, int(m.group(2)), n)
    m = re.fullmatch(r"S_\{(inf|0),(-?\d+)\}\^\{?\((\d+)\)\}?", s)
    if m:
        return Tors2(m.group(1), int(m.group(2)) % 2, int(m.group(3)), n)
    m = re.fullmatch(r"S_\{\[(-?\d+(?:/\d+)?)\]\}\^\{?\((\d+)\)\}?", s)
    if m:
        lam = Fraction(m.group(1))
        pw = pw_loop(lam, int(m.group(2)), n)
        return TorsHom(pw.lam_min, pw.lam_max, pw.j, n)
    raise ValueError("cannot parse sheaf name %r" % text)


def _parse_x3_multiple(text):
    import re
    m = re.fullmatch(r"(-?\d+)?\*?x3", text)
    if not m:
        raise ValueError("expected a multiple of x3, got %r" % text)
    return int(m.group(1)) if m.group(1) else 1


def format_skew(g):
    """Short textual form of a skew-curve."""
    if isinstance(g, Half):
        b = next(iter(curve_set(g)))
        return "[D%d^%d]%s" % (b.bot, b.top, g.sign)
    if isinstance(g, Pair):
        return "~[D%d^%d]" % (g.i, g.k - g.i)
    if isinstance(g, TorsPair):
        return "~[D^{%d,%d}]" % (g.res - g.length - 1, g.res)
    if isinstance(g, Star):
        return "(%s,%s)" % (g.e1, g.e2)
    if isinstance(g, SpLoop):
        return "(%d,L^%d)%s" % (g.lam, g.j, g.sign)
    if isinstance(g, PwLoop):
        return "([%s],L^%d)" % (g.lam_max, g.j)
    raise TypeError("not a skew-curve: %r" % (g,))


# -- equivariant description (purely descriptive output) ---------------------

def equivariant_description(g):
    """The matching row of the equivariant-object dictionary: what the
    skew-curve's sheaf looks like as an equivariant object upstairs."""
    s = phi(g)
    if isinstance(s, LineBundle):
        i = s.i
        if s.form == F0:
            return "(O_Y(%s), alpha^-)" % _w_term(-i)
        if s.form == F12:
            return "(O_Y(%s), alpha^+)" % _w_term(-i)
        even = i % 2 == 0
        if s.form == F1:
            twist = "-" if even else "+"
        else:
            twist = "+" if even else "-"
        return "(O_Y(c%s), alpha^%s)" % (_w_term(-i, signed=True), twist)
    if isinstance(s, ExtBundle):
        w = _w_term(s.i + 2, signed=True)
        return "(O_Y(%d*y1%s) (+) O_Y(%d*y2%s), alpha)" % (s.k, w, s.k, w)
    if isinstance(s, TorsN):
        return "(S_{0,%d}^{(%d)} (+) S_{inf,%d}^{(%d)}, alpha)" % (
            s.res, s.length, s.res, s.length)
    if isinstance(s, Tors2):
        base = "1" if s.pt == "inf" else "-1"
        twist = "-" if s.res == 0 else "+"
        return "(S_{%s}^{(%d)}, alpha^%s)" % (base, s.length, twist)
    if isinstance(s, TorsHom):
        return "(S_{%s}^{(%d)} (+) S_{%s}^{(%d)}, alpha)" % (
            s.lam_max, s.length, s.lam_min, s.length)
    raise TypeError("no equivariant description for %r" % (g,))


def _w_term(m, signed=False):
    if m == 0:
        return "+0*w" if signed else "0"
    if signed:
        return "%+d*w" % m
    return "%d*w" % m
