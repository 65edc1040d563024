"""Exact arithmetic in the rank-one abelian group on generators x1, x2, x3
with relations 2*x1 = 2*x2 = n*x3 = c.

Every element has a unique normal form l1*x1 + l2*x2 + l3*x3 + l*c with
0 <= l1, l2 <= 1 and 0 <= l3 <= n-1.  Elements are immutable values; the
weight parameter n travels with each element and mixing values with
different n is an error.
"""

from __future__ import annotations

import re
from dataclasses import dataclass


@dataclass(frozen=True)
class LElement:
    """A group element in normal form.  Use :func:`normalize` to build one."""

    l1: int
    l2: int
    l3: int
    l: int
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("weight parameter n must be >= 2")
        if not (0 <= self.l1 <= 1 and 0 <= self.l2 <= 1 and 0 <= self.l3 < self.n):
            raise ValueError("coefficients outside normal-form ranges")

    def raw(self):
        return (self.l1, self.l2, self.l3, self.l)

    def is_zero(self):
        return self.raw() == (0, 0, 0, 0)

    def __str__(self):
        return format_element(self)


def normalize(raw, n):
    """Normal form of a1*x1 + a2*x2 + a3*x3 + a*c given as (a1, a2, a3, a)."""
    a1, a2, a3, a = raw
    l1 = a1 % 2
    l2 = a2 % 2
    l3 = a3 % n
    carry = (a1 - l1) // 2 + (a2 - l2) // 2 + (a3 - l3) // n
    return LElement(l1, l2, l3, a + carry, n)


def zero(n):
    return LElement(0, 0, 0, 0, n)


def canonical_c(n):
    return LElement(0, 0, 0, 1, n)


def gen_x1(n):
    return LElement(1, 0, 0, 0, n)


def gen_x2(n):
    return LElement(0, 1, 0, 0, n)


def gen_x3(n):
    return LElement(0, 0, 1, 0, n)


def omega(n):
    """The dualizing element c - x1 - x2 - x3."""
    return normalize((-1, -1, -1, 1), n)


def _require_same_n(a, b):
    if a.n != b.n:
        raise ValueError("mismatched weight parameters: %d vs %d" % (a.n, b.n))


def add(a, b):
    _require_same_n(a, b)
    return normalize((a.l1 + b.l1, a.l2 + b.l2, a.l3 + b.l3, a.l + b.l), a.n)


def neg(a):
    return normalize((-a.l1, -a.l2, -a.l3, -a.l), a.n)


def sub(a, b):
    return add(a, neg(b))


def scale(m, a):
    return normalize((m * a.l1, m * a.l2, m * a.l3, m * a.l), a.n)


def is_effective(a):
    """Whether a >= 0, i.e. a is a nonnegative integer combination of the
    generators.  In normal form this is exactly l >= 0 (see tests for the
    brute-force cross-check)."""
    return a.l >= 0


def in_c_interval(a):
    """Whether -c <= a <= c."""
    c = canonical_c(a.n)
    return is_effective(add(a, c)) and is_effective(sub(c, a))


# -- textual form -----------------------------------------------------------
#
# Rendering "l1*x1 + l2*x2 + l3*x3 + l*c" with zero terms suppressed, and a
# parser for the same grammar (signs may be interleaved: "x1 - x2 + 3*x3").

_TERM_RE = re.compile(r"^(?:(-?\d+)\*)?(x1|x2|x3|c)$|^(-?\d+)$")


def format_element(a):
    parts = []
    for coeff, sym in ((a.l1, "x1"), (a.l2, "x2"), (a.l3, "x3"), (a.l, "c")):
        if coeff == 0:
            continue
        mag = abs(coeff)
        body = sym if mag == 1 else "%d*%s" % (mag, sym)
        if not parts:
            parts.append(body if coeff > 0 else "-" + body)
        else:
            parts.append(("+ " if coeff > 0 else "- ") + body)
    if not parts:
        return "0"
    return " ".join(parts)


def parse_element(text, n):
    """Parse the grammar produced by :func:`format_element`.

    Accepts arbitrary integer coefficients (the result is normalized), e.g.
    "x1 - x2" or "2*x3 - c" or "0".
    """
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty element")
    # split into signed terms
    tokens = re.findall(r"[+-]?[^+-]+", s)
    coeffs = {"x1": 0, "x2": 0, "x3": 0, "c": 0, "": 0}
    for tok in tokens:
        sign = 1
        if tok[0] in "+-":
            sign = -1 if tok[0] == "-" else 1
            tok = tok[1:]
        m = _TERM_RE.match(tok)
        if not m:
            raise ValueError("bad term %r in element %r" % (tok, text))
        if m.group(3) is not None:
            if int(m.group(3)) != 0:
                raise ValueError("bare integer term %r (only 0 allowed)" % tok)
            continue
        coeff = 1 if m.group(1) is None else int(m.group(1))
        coeffs[m.group(2)] += sign * coeff
    return normalize((coeffs["x1"], coeffs["x2"], coeffs["x3"], coeffs["c"]), n)
