"""Enumeration of pseudo-triangulations, the tilting graph, and the
constructive connectivity procedure.

The graph is infinite (the index shift acts freely), so two complementary
tools are provided: windowed enumeration for exhaustive small checks, and a
total flip-path constructor that routes any two triangulations through the
stable generator family.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from . import compat, lattice
from .curves import Bridge, SemiCircle
from .flip import FlipError, flip, iota, mu_hat_steps, shift_all
from .skewcurves import (PLUS, Half, Star, curve_set, display, phi)
from .triang import (PM0, PseudoTri, arc_sort_key, fv_arrow, fv_under,
                     is_fv, zeta)


def _bottom_endpoints(tri):
    # bridge feet only: they translate linearly under the index shift,
    # while torsion-arc endpoints rotate mod n and cannot anchor an orbit
    ends = []
    for g in tri.arcs:
        for c in curve_set(g):
            if isinstance(c, Bridge):
                ends.append(c.bot)
    return ends


def canonical_form(tri):
    """Representative of the index-shift orbit anchored so the minimal
    bridge foot on the lower boundary is 0; returns (representative, shift
    amount).  A bridge always exists: torsion arcs and stars alone cannot
    fill a pseudo-triangulation."""
    ends = _bottom_endpoints(tri)
    if not ends:
        raise ValueError("no bridge anchor; not a pseudo-triangulation")
    m = min(ends)
    out = shift_all(tri, lattice.scale(m, lattice.gen_x3(tri.n)))
    assert min(_bottom_endpoints(out)) == 0
    return out, m


def _window_candidates(n, window):
    from .triang import candidate_arcs
    # fake span via two bridges at the window corners; margin 0
    probe = [Half(1, -window, PLUS, n), Half(1, window, PLUS, n)]
    return [g for g in candidate_arcs(probe, n, margin=0)
            if compat.is_skew_arc(g)]


def _endpoints_within(tri, window):
    for g in tri.arcs:
        for c in curve_set(g):
            if isinstance(c, SemiCircle):
                continue
            pts = (c.bot, c.top) if isinstance(c, Bridge) else (c.a, c.b)
            if any(abs(p) > window for p in pts):
                return False
    return True


def enumerate_tris(n, window):
    """All pseudo-triangulations whose canonical representative fits in
    [-window, window], deduplicated and sorted."""
    if window < 2 * n:
        raise ValueError("window must be at least 2n")
    cands = sorted(_window_candidates(n, window + n), key=arc_sort_key)
    index = {g: i for i, g in enumerate(cands)}
    adj = [set() for _ in cands]
    for i, g in enumerate(cands):
        for j in range(i + 1, len(cands)):
            if compat.compatible(g, cands[j]):
                adj[i].add(j)
                adj[j].add(i)

    out = {}
    target = n + 3

    def extend(clique, allowed):
        if len(clique) == target:
            tri = PseudoTri.of({cands[i] for i in clique}, n)
            rep, _ = canonical_form(tri)
            if _endpoints_within(rep, window):
                out.setdefault(_tri_key(rep), rep)
            return
        if len(clique) + len(allowed) < target:
            return
        rest = sorted(allowed)
        for pos, v in enumerate(rest):
            extend(clique + [v], allowed & adj[v] & set(rest[pos + 1:]))

    extend([], set(range(len(cands))))
    return [out[k] for k in sorted(out)]


def _tri_key(tri):
    return tuple(arc_sort_key(g) for g in sorted(tri.arcs, key=arc_sort_key))


def neighbors(tri):
    return [flip(tri, g) for g in sorted(tri.arcs, key=arc_sort_key)]


@dataclass(frozen=True)
class TiltingGraph:
    n: int
    window: int
    nodes: tuple
    edges: tuple  # (i, j, case_label) with i < j


def build_graph(n, window):
    nodes = enumerate_tris(n, window)
    key_to_id = {_tri_key(t): i for i, t in enumerate(nodes)}
    edges = {}
    for i, tri in enumerate(nodes):
        for res in neighbors(tri):
            rep, _ = canonical_form(res.new_tri)
            j = key_to_id.get(_tri_key(rep))
            if j is None or j == i:
                continue
            edges.setdefault((min(i, j), max(i, j)), res.case_label)
    return TiltingGraph(n, window, tuple(nodes),
                        tuple((i, j, lab) for (i, j), lab in sorted(edges.items())))


def node_label(tri):
    return "; ".join(display(s) for s in
                     sorted((phi(g) for g in tri.arcs),
                            key=lambda s: _display_key(s)))


def _display_key(s):
    from .triang import sheaf_sort_key
    return sheaf_sort_key(s)


def export_dot(graph):
    lines = ["graph tilting {"]
    for i, tri in enumerate(graph.nodes):
        lines.append('  t%d [label="%s"];' % (i, node_label(tri)))
    for i, j, lab in graph.edges:
        lines.append('  t%d -- t%d [label="%s"];' % (i, j, lab))
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_csv(graph):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["source", "target", "case", "source_label", "target_label"])
    for i, j, lab in graph.edges:
        writer.writerow([i, j, lab, node_label(graph.nodes[i]),
                         node_label(graph.nodes[j])])
    return buf.getvalue()


# -- constructive reduction to the stable family ------------------------------

STAGE_DEPTH_CAP = 6


class ReductionError(FlipError):
    """The staged reduction missed its guarantee; indicates a bug."""


def _search_until(tri, goal, depth_cap=STAGE_DEPTH_CAP):
    """Shortest flip sequence reaching the goal predicate (BFS over flips)."""
    if goal(tri):
        return [], tri
    frontier = [(tri, [])]
    seen = {_tri_key(tri)}
    for _ in range(depth_cap):
        nxt = []
        for cur, steps in frontier:
            for res in neighbors(cur):
                key = _tri_key(res.new_tri)
                if key in seen:
                    continue
                seen.add(key)
                path = steps + [res]
                if goal(res.new_tri):
                    return path, res.new_tri
                nxt.append((res.new_tri, path))
        frontier = nxt
    raise ReductionError("goal unreachable within depth %d" % depth_cap)


def _phase_potential(tri):
    z = zeta(tri)
    torsion = len(tri.torsion_pairs())
    extra_halves = 0
    for cross, zi in zip((1, 2), z):
        if zi != PM0:
            extra_halves += len(tri.halves(cross=cross))
    return (len(tri.stars()), torsion + extra_halves)


def to_fv(tri):
    """Flip any pseudo-triangulation into the stable family.

    Stars are flipped away first (each star flip lands outside the
    parameter pairs, so the count strictly drops); stage 1 then reaches a
    triangulation containing a sigma-pair of bridges; stage 2 walks a
    strictly decreasing potential (torsion arcs plus off-pattern halves)
    down to the stable shape, taking the shortest locally improving flip
    burst each round.
    """
    steps = []
    cur = tri
    while cur.stars():
        res = flip(cur, min(cur.stars(), key=arc_sort_key))
        if isinstance(res.added, Star):
            raise ReductionError("flipping a star produced a star")
        steps.append(res)
        cur = res.new_tri
    seq, cur = _search_until(cur, lambda t: bool(t.sigma_pairs()))
    steps += seq

    while True:
        ok, _, _ = is_fv(cur)
        if ok:
            break
        base = _phase_potential(cur)

        def improved(t, base=base):
            good, _, _ = is_fv(t)
            return good or (bool(t.sigma_pairs()) and _phase_potential(t) < base)

        seq, cur = _search_until(cur, improved)
        steps += seq
    return steps, cur


def _first_zero(bits):
    for pos, b in enumerate(bits):
        if b == 0:
            return pos
    return None


def fv_to_canonical(tri):
    """Mutate a stable-family triangulation into the explicit generator
    orbit: normalize the stability vector to all-ones, then align the
    family kind with an odd-index sweep."""
    steps = []
    cur = tri
    budget = 4 * (tri.n + 1) ** 2
    while True:
        bits = iota(cur)
        j = _first_zero(bits)
        if j is None:
            break
        if j == 0 or j == tri.n:
            raise ReductionError("stability vector has a zero end bit: %r" % (bits,))
        if budget <= 0:
            raise ReductionError("stability normalization did not converge")
        budget -= 1
        # a zero at position 1 or 2 is cleared in place; deeper zeros are
        # walked two places left by mutating just below them
        index = {1: 0, 2: 1}.get(j, j - 1)
        burst = mu_hat_steps(cur, index)
        steps += burst
        cur = burst[-1].new_tri

    cur, steps_kind = _align_family_kind(cur)
    steps += steps_kind
    a, kind = identify_generator(cur)
    assert kind == "arrow"
    return steps, cur, a


def identify_generator(tri):
    """Which generator family member an all-ones FV triangulation is."""
    ok, a_chain, b_chain = is_fv(tri)
    if not ok:
        raise ReductionError("not an FV triangulation")
    a = a_chain[0]
    first = next(g for g in tri.sigma_pairs() if g.k == 1)
    if first.i == b_chain[0]:
        kind = "arrow"
    elif first.i == b_chain[0] + 1:
        kind = "under"
    else:
        raise ReductionError("chain start %r outside the generator families"
                             % (first,))
    expected = (fv_arrow if kind == "arrow" else fv_under)(a, -a, tri.n)
    if expected.arcs != tri.arcs:
        raise ReductionError("all-ones triangulation is not a generator")
    return a, kind


def _odd_sweep(tri):
    steps = []
    cur = tri
    for i in range(1, tri.n + 1, 2):
        burst = mu_hat_steps(cur, i)
        steps += burst
        cur = burst[-1].new_tri
    return steps, cur


def _even_sweep(tri):
    steps = []
    cur = tri
    for i in range(0, tri.n + 1, 2):
        burst = mu_hat_steps(cur, i)
        steps += burst
        cur = burst[-1].new_tri
    return steps, cur


def _align_family_kind(tri):
    a, kind = identify_generator(tri)
    if kind == "arrow":
        return tri, []
    steps, cur = _odd_sweep(tri)
    a2, kind2 = identify_generator(cur)
    if kind2 != "arrow" or a2 != a:
        raise ReductionError("odd sweep left the generator family")
    return cur, steps


def _slide_generator(tri, target_a):
    """Move along the generator family from its current index to target_a
    using the even/odd sweep relations."""
    steps = []
    cur = tri
    a, kind = identify_generator(cur)
    assert kind == "arrow"
    while a != target_a:
        if a < target_a:
            s1, cur = _even_sweep(cur)   # arrow a -> under a+1
            s2, cur = _odd_sweep(cur)    # under a+1 -> arrow a+1
            steps += s1 + s2
            a += 1
        else:
            s1, cur = _odd_sweep(cur)    # arrow a -> under a
            s2, cur = _even_sweep(cur)   # under a -> arrow a-1
            steps += s1 + s2
            a -= 1
        got, kind = identify_generator(cur)
        if kind != "arrow" or got != a:
            raise ReductionError("sweep relations went off the family")
    return steps, cur


def _reversed_steps(seq, start):
    """Undo a flip sequence: flip each added arc back, last step first."""
    steps = []
    cur = start
    for res in reversed(seq):
        back = flip(cur, res.added)
        if back.added != res.removed:
            raise ReductionError("flip involution failed on reversal")
        steps.append(back)
        cur = back.new_tri
    return steps, cur


def flip_path(tri1, tri2):
    """A legal flip sequence from tri1 to tri2 (total by connectivity)."""
    if tri1.n != tri2.n:
        raise ValueError("mismatched weight parameters")
    if tri1.arcs == tri2.arcs:
        return []
    s1, f1 = to_fv(tri1)
    c1, f1c, a1 = fv_to_canonical(f1)
    s2, f2 = to_fv(tri2)
    c2, f2c, a2 = fv_to_canonical(f2)
    bridge, met = _slide_generator(f1c, a2)
    if met.arcs != f2c.arcs:
        raise ReductionError("generator alignment failed")
    back_c, cur = _reversed_steps(c2, met)
    back_s, cur = _reversed_steps(s2, cur)
    path = s1 + c1 + bridge + back_c + back_s
    if cur.arcs != tri2.arcs:
        raise ReductionError("flip path endpoint mismatch")
    return path
