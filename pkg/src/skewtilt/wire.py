"""JSON wire encodings for skew-curves, triangulations and flips.

Field names are normative; unknown fields are rejected so that clients
cannot silently drift from the schema.
"""

from __future__ import annotations

from fractions import Fraction

from .flip import FlipResult
from .skewcurves import (MINUS, PLUS, Half, Pair, PwLoop, SpLoop, Star,
                         TorsPair, pw_loop, sp_loop)
from .triang import PseudoTri, arc_sort_key


class WireError(ValueError):
    pass


def _require_keys(obj, keys, what):
    missing = keys - obj.keys()
    extra = obj.keys() - keys
    if missing:
        raise WireError("%s is missing fields %s" % (what, sorted(missing)))
    if extra:
        raise WireError("%s has unknown fields %s" % (what, sorted(extra)))


def _int(obj, key, what):
    v = obj[key]
    if isinstance(v, bool) or not isinstance(v, int):
        raise WireError("%s field %r must be an integer" % (what, key))
    return v


def _sign(obj, key, what):
    v = obj[key]
    if v not in (PLUS, MINUS):
        raise WireError("%s field %r must be '+' or '-'" % (what, key))
    return v


def arc_to_wire(g):
    if isinstance(g, Half):
        return {"type": "half", "cross": g.cross, "index": g.idx, "sign": g.sign}
    if isinstance(g, Pair):
        return {"type": "pair", "i": g.i, "k": g.k}
    if isinstance(g, TorsPair):
        return {"type": "tors", "res": g.res, "len": g.length}
    if isinstance(g, Star):
        return {"type": "star", "e1": g.e1, "e2": g.e2}
    if isinstance(g, PwLoop):
        return {"type": "pwloop",
                "lam": [g.lam_max.numerator, g.lam_max.denominator], "j": g.j}
    if isinstance(g, SpLoop):
        return {"type": "sploop", "lam": g.lam, "j": g.j, "sign": g.sign}
    raise WireError("cannot encode %r" % (g,))


def arc_from_wire(obj, n):
    if not isinstance(obj, dict):
        raise WireError("skew-curve must be an object, got %r" % (obj,))
    kind = obj.get("type")
    try:
        if kind == "half":
            _require_keys(obj, {"type", "cross", "index", "sign"}, "half")
            cross = _int(obj, "cross", "half")
            if cross not in (1, 2):
                raise WireError("half field 'cross' must be 1 or 2")
            return Half(cross, _int(obj, "index", "half"),
                        _sign(obj, "sign", "half"), n)
        if kind == "pair":
            _require_keys(obj, {"type", "i", "k"}, "pair")
            return Pair(_int(obj, "i", "pair"), _int(obj, "k", "pair"), n)
        if kind == "tors":
            _require_keys(obj, {"type", "res", "len"}, "tors")
            return TorsPair(_int(obj, "res", "tors"), _int(obj, "len", "tors"), n)
        if kind == "star":
            _require_keys(obj, {"type", "e1", "e2"}, "star")
            return Star(_sign(obj, "e1", "star"), _sign(obj, "e2", "star"), n)
        if kind == "pwloop":
            _require_keys(obj, {"type", "lam", "j"}, "pwloop")
            lam = obj["lam"]
            if (not isinstance(lam, list) or len(lam) != 2
                    or not all(isinstance(v, int) and not isinstance(v, bool)
                               for v in lam)):
                raise WireError("pwloop field 'lam' must be [num, den]")
            return pw_loop(Fraction(lam[0], lam[1]), _int(obj, "j", "pwloop"), n)
        if kind == "sploop":
            _require_keys(obj, {"type", "lam", "j", "sign"}, "sploop")
            lam = _int(obj, "lam", "sploop")
            if lam not in (1, -1):
                raise WireError("sploop field 'lam' must be 1 or -1")
            return sp_loop(lam, _int(obj, "j", "sploop"),
                           _sign(obj, "sign", "sploop"), n)
    except (ValueError, ZeroDivisionError) as exc:
        raise WireError(str(exc)) from exc
    raise WireError("unknown skew-curve type %r" % (kind,))


def tri_to_wire(tri):
    return {"n": tri.n,
            "arcs": [arc_to_wire(g)
                     for g in sorted(tri.arcs, key=arc_sort_key)]}


def tri_from_wire(obj):
    if not isinstance(obj, dict):
        raise WireError("triangulation must be an object")
    _require_keys(obj, {"n", "arcs"}, "triangulation")
    n = _int(obj, "n", "triangulation")
    if n < 2:
        raise WireError("weight parameter must be >= 2")
    if not isinstance(obj["arcs"], list):
        raise WireError("'arcs' must be a list")
    arcs = [arc_from_wire(a, n) for a in obj["arcs"]]
    if len(set(arcs)) != len(arcs):
        raise WireError("duplicate arcs in triangulation")
    return PseudoTri.of(arcs, n)


def flip_to_wire(res: FlipResult):
    return {"tri": tri_to_wire(res.new_tri),
            "removed": arc_to_wire(res.removed),
            "added": arc_to_wire(res.added),
            "case": res.case_label}


def flip_request_from_wire(obj):
    if not isinstance(obj, dict):
        raise WireError("flip request must be an object")
    _require_keys(obj, {"tri", "arc"}, "flip request")
    tri = tri_from_wire(obj["tri"])
    return tri, arc_from_wire(obj["arc"], tri.n)
