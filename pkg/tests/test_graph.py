import random

import pytest

from skewtilt import lattice
from skewtilt.flip import iota, shift_all
from skewtilt.graph import (ReductionError, build_graph, canonical_form,
                            enumerate_tris, export_csv, export_dot, flip_path,
                            fv_to_canonical, identify_generator, neighbors,
                            to_fv)
from skewtilt.triang import (PseudoTri, fv_arrow, fv_under, gamma_lambda,
                             is_fv, validate)


def tri_key(tri):
    return tuple(sorted(map(str, tri.arcs)))


def test_canonical_form_orbit_invariance():
    n = 3
    tri = fv_arrow(1, -1, n)
    rep, m = canonical_form(tri)
    for j in (1, 2, 5, -4):
        shifted = shift_all(tri, lattice.scale(j, lattice.gen_x3(n)))
        rep2, m2 = canonical_form(shifted)
        assert rep2.arcs == rep.arcs
        assert m2 == m - j  # shifting by j*x3 moves bridge feet by -j


def test_generator_family_is_one_orbit():
    n = 4
    reps = {tri_key(canonical_form(fv_arrow(a, -a, n))[0]) for a in range(-3, 4)}
    assert len(reps) == 1
    reps_u = {tri_key(canonical_form(fv_under(a, -a, n))[0]) for a in range(-3, 4)}
    assert len(reps_u) == 1
    assert reps != reps_u


def test_enumerate_small():
    nodes = enumerate_tris(2, 4)
    keys = {tri_key(t) for t in nodes}
    assert tri_key(canonical_form(fv_arrow(0, 0, 2))[0]) in keys
    assert tri_key(canonical_form(fv_under(0, 0, 2))[0]) in keys
    assert all(len(t.arcs) == 5 for t in nodes)
    with pytest.raises(ValueError):
        enumerate_tris(2, 3)


def test_enumerate_counts_regression():
    # observed shift-orbit counts; window stability makes them well-defined
    assert len(enumerate_tris(2, 4)) == 54
    assert len(enumerate_tris(3, 6)) == 180
    assert len(enumerate_tris(4, 8)) == 630


def test_weight_five_sample_validates():
    nodes = enumerate_tris(5, 10)
    assert len(nodes) == 2268
    rng = random.Random(8)
    for tri in rng.sample(nodes, 20):
        assert len(tri.arcs) == 8
        assert validate(tri.arcs, 5).ok


def test_enumerate_window_stability():
    # every canonical triangulation already fits in the 2n window, so
    # growing it changes nothing
    for n in (2, 3):
        small = {tri_key(t) for t in enumerate_tris(n, 2 * n)}
        large = {tri_key(t) for t in enumerate_tris(n, 3 * n)}
        assert small == large


def test_structure_constraints_over_enumeration():
    from skewtilt.skewcurves import Half, Star
    for n in (2, 3):
        for tri in enumerate_tris(n, 2 * n):
            stars = tri.stars()
            assert len(stars) <= 2
            # both signs at a cross need at least two arcs on the full side
            for cross in (1, 2):
                for sign in ("+", "-"):
                    if not tri.at_cross(cross, sign):
                        other = tri.at_cross(cross, "-" if sign == "+" else "+")
                        assert len(other) >= 2
            if len(stars) == 1:
                (s,) = stars
                assert not tri.sigma_pairs()
                for g in tri.halves(cross=1):
                    assert g.sign == s.e1
                for g in tri.halves(cross=2):
                    assert g.sign == s.e2
            if len(stars) == 2:
                s1, s2 = sorted(stars, key=lambda g: (g.e1, g.e2))
                assert (s1.e1 == s2.e1) != (s1.e2 == s2.e2)
                assert not tri.sigma_pairs()
                if s1.e1 == s2.e1:
                    assert not tri.halves(cross=2)
                    for g in tri.halves(cross=1):
                        assert g.sign == s1.e1
                else:
                    assert not tri.halves(cross=1)
                    for g in tri.halves(cross=2):
                        assert g.sign == s1.e2


def test_every_node_validates_and_counts():
    for n in (2, 3):
        for tri in enumerate_tris(n, 2 * n):
            report = validate(tri.arcs, n)
            assert report.ok, report.violations
            g = gamma_lambda(tri)
            assert len(g.arcs) == 2 * n + 3 * len(g.punctures)


def test_neighbors_degree_and_symmetry():
    n = 2
    tri = fv_arrow(0, 0, n)
    res = neighbors(tri)
    assert len(res) == n + 3
    for r in res:
        assert tri_key(r.new_tri) in {tri_key(x.new_tri) for x in [r]}
        back = [b for b in neighbors(r.new_tri) if b.new_tri.arcs == tri.arcs]
        assert back, "flip edge is not symmetric"


def test_build_graph_and_exports():
    g = build_graph(2, 4)
    assert len(g.nodes) == len(enumerate_tris(2, 4))
    dot = export_dot(g)
    assert dot.startswith("graph tilting {") and dot.rstrip().endswith("}")
    assert dot.count(" -- ") == len(g.edges)
    csv_text = export_csv(g)
    lines = csv_text.strip().split("\n")
    assert lines[0] == "source,target,case,source_label,target_label"
    assert len(lines) == len(g.edges) + 1
    labels = {lab for _, _, lab in g.edges}
    assert labels <= {"I(%d)" % i for i in range(1, 7)} | \
        {"II(%d)" % i for i in range(1, 4)} | {"III(%d)" % i for i in range(1, 4)}


def test_to_fv_on_generator_is_trivial():
    steps, end = to_fv(fv_arrow(0, 0, 3))
    assert steps == [] and end.arcs == fv_arrow(0, 0, 3).arcs


def test_to_fv_from_two_star_configuration():
    from skewtilt.skewcurves import Half, Star, PLUS, MINUS
    n = 2
    tri = PseudoTri.of({Star(PLUS, PLUS, n), Star(MINUS, PLUS, n),
                        Half(2, 0, PLUS, n), Half(2, 1, PLUS, n),
                        Half(2, 2, PLUS, n)}, n)
    steps, end = to_fv(tri)
    assert is_fv(end)[0]
    # the first two flips clear the parameter pairs
    star_removals = [s for s in steps[:2] if isinstance(s.removed, Star)]
    assert len(star_removals) == 2
    cur = tri
    for s in steps:
        assert validate(cur.arcs, n).ok
        cur = s.new_tri
    assert cur.arcs == end.arcs


def test_fv_to_canonical_reaches_family():
    for n in (2, 3):
        for tri in enumerate_tris(n, 2 * n):
            if not is_fv(tri)[0]:
                continue
            steps, end, a = fv_to_canonical(tri)
            got_a, kind = identify_generator(end)
            assert kind == "arrow" and got_a == a
            assert iota(end) == tuple([1] * (n + 1))


def test_window_fragment_is_connected():
    g = build_graph(2, 4)
    adj = {}
    for i, j, _ in g.edges:
        adj.setdefault(i, set()).add(j)
        adj.setdefault(j, set()).add(i)
    seen, stack = {0}, [0]
    while stack:
        v = stack.pop()
        for w in adj.get(v, ()):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    assert len(seen) == len(g.nodes)


def test_all_counting_cases_appear():
    from skewtilt.triang import classify_case
    seen = set()
    for n in (2, 3):
        for tri in enumerate_tris(n, 2 * n):
            seen.add(classify_case(tri))
    assert seen == {1, 2, 3, 4, 5, 6}


def test_path_between_generator_kinds_is_the_odd_sweep():
    n = 4
    path = flip_path(fv_arrow(0, 0, n), fv_under(0, 0, n))
    assert len(path) == 2  # two interior mutations at the odd indices
    assert {s.removed.k for s in path} == {1, 3}


def test_generator_family_members_connect():
    n = 3
    for a in (-2, 0, 1):
        for make in (fv_arrow, fv_under):
            path = flip_path(make(a, -a, n), fv_arrow(0, 0, n))
            cur = make(a, -a, n)
            for s in path:
                cur = s.new_tri
            assert cur.arcs == fv_arrow(0, 0, n).arcs


def test_flip_path_roundtrip():
    rng = random.Random(3)
    nodes = enumerate_tris(2, 4)
    assert flip_path(nodes[0], nodes[0]) == []
    for _ in range(15):
        t1, t2 = rng.choice(nodes), rng.choice(nodes)
        path = flip_path(t1, t2)
        cur = t1
        for res in path:
            assert res.removed in cur.arcs
            cur = res.new_tri
            assert len(cur.arcs) == 5
        assert cur.arcs == t2.arcs
