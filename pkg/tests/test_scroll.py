from functools import lru_cache
from itertools import combinations

import pytest

from scrollreg.errors import DegenerateInputError, LineContainedError
from scrollreg.groebner import Ideal, eliminate, hilbert_data
from scrollreg.poly import PolyRing
from scrollreg.scroll import (BINARY, BundleMapAlpha, EmbeddedScheme, Line, ScrollSpec,
                              cokernel_map, compose, cone_over, cone_scroll_ideal, construct,
                              jacobian_smooth_at_secant, parametrization, project_from_line,
                              random_alpha, scroll_ideal, secant_point_report,
                              secant_scheme_length, splitting_type, veronese, vertex_line)
from scrollreg.verify import image_hilbert_function


@lru_cache(maxsize=None)
def report(n, a, k1, k2, seed=7):
    return construct(ScrollSpec(n, a, k1, k2, seed=seed))


def degenerate_alpha():
    # every entry is divisible by s, so all 2x2 minors vanish at s = 0
    rows = [["s", "0"], ["0", "s"], ["s*t", "s^2"], ["s^2", "s*t"]]
    return BundleMapAlpha(rows, (1, 1), 1, 1, check=False)


# ---- scroll ideals and cones ----------------------------------------------


def test_scroll_of_one_twist_is_twisted_cubic():
    X = scroll_ideal([3])
    assert (X.dimension, X.degree) == (1, 3)
    assert X.betti_table().totals() == [3, 2]


def test_quadric_scroll():
    X = scroll_ideal([1, 1])
    assert list(X.ideal.generators) == [X.ring.parse("x1_0*x2_1 - x1_1*x2_0")]
    assert (X.ambient_dimension, X.dimension, X.degree) == (3, 2, 2)


def test_cubic_scroll_surface():
    X = scroll_ideal([1, 2])
    assert len(X.minimal_generators()) == 3
    assert all(g.total_degree == 2 for g in X.minimal_generators())
    assert (X.ambient_dimension, X.dimension, X.degree) == (4, 2, 3)
    assert X.regularity() == 2


@pytest.mark.parametrize("a", [[2], [1, 1], [1, 2], [2, 2], [1, 1, 1], [1, 3]])
def test_scrolls_have_minimal_degree_and_regularity_two(a):
    X = scroll_ideal(a)
    assert X.degree == sum(a)
    assert X.is_minimal_degree()
    assert X.regularity() == 2


def test_cone_scroll_adds_vertex_coordinates():
    C = cone_scroll_ideal(2, [1, 1])
    assert C.ring.variables[:2] == ("u0", "u1")
    # one quadric in P^5: a cone with vertex line over the quadric surface
    assert (C.ambient_dimension, C.dimension, C.degree) == (5, 4, 2)
    assert C.betti_table() == scroll_ideal([1, 1]).betti_table()


@pytest.mark.parametrize("a", [[1, 1], [1, 2], [3]])
def test_cone_over_keeps_betti_table(a):
    X = scroll_ideal(a)
    for k in (1, 2):
        C = cone_over(X, k)
        assert C.dimension == X.dimension + k
        assert C.degree == X.degree
        assert C.betti_table() == X.betti_table()


# ---- Veronese surfaces ------------------------------------------------------


def test_veronese_invariants():
    V = veronese("V_in_P5")
    Vp = veronese("Vprime_in_P4")
    assert (V.ambient_dimension, V.dimension, V.degree) == (5, 2, 4)
    assert (Vp.ambient_dimension, Vp.dimension, Vp.degree) == (4, 2, 4)
    assert V.regularity() == 2
    assert Vp.regularity() == 3
    assert V.betti_table().totals() == [6, 8, 3]


def test_projected_veronese_generators_match_image_count():
    plane = PolyRing(["s", "t", "u"])
    s, t, u = plane.gens()
    images = [s * t, s * u, t * u, s * s - t * t, t * t - u * u]
    Vp = veronese("Vprime")
    for m in range(5):
        assert Vp.hilbert.hilbert_function(m) == image_hilbert_function(images, m)
    # no quadrics vanish on the projected surface: P^4 has 15 quadrics, the plane 15 quartics
    assert Vp.betti_table()[0, 2] == 0
    assert Vp.betti_table()[0, 3] == 7


def test_cone_over_veronese():
    V = veronese("V")
    for k in (1, 2):
        assert cone_over(V, k).betti_table() == V.betti_table()
    assert cone_over(V, 1).regularity() == 2


def test_unknown_veronese_name():
    with pytest.raises(ValueError):
        veronese("W")


# ---- lines, secants, projections and smoothness -----------------------------


def smooth_quadric():
    ring = PolyRing(["x0", "x1", "x2", "x3"])
    return EmbeddedScheme(Ideal(ring, ["x0*x3 - x1*x2"]))


def test_quadric_and_general_line():
    X = smooth_quadric()
    line = Line(X.ring, [1, 0, 0, 0], [1, 1, 1, 2])
    assert secant_scheme_length(X, line) == 2
    assert jacobian_smooth_at_secant(X, line)
    report = secant_point_report(X, line)
    assert sum(item["multiplicity"] for item in report) == 2


def test_line_without_rational_points_still_has_length_two():
    X = smooth_quadric()
    line = Line(X.ring, [1, 0, 0, 1], [0, 1, -1, 0])
    # the restriction is s^2 + t^2: an irreducible factor of degree 2
    assert secant_scheme_length(X, line) == 2
    rep = secant_point_report(X, line)
    assert [(r["factor"], r["smooth"]) for r in rep] == [("s^2 + t^2", True)]


def test_disjoint_line_has_length_zero():
    ring = PolyRing(["x0", "x1", "x2"])
    point = EmbeddedScheme(Ideal(ring, ["x0", "x1"]))
    assert secant_scheme_length(point, Line.coordinate(ring, ["x0", "x1"])) == 0
    assert secant_scheme_length(point, Line.coordinate(ring, ["x1", "x2"])) == 1


def test_line_contained_in_scheme():
    X = smooth_quadric()
    with pytest.raises(LineContainedError, match="line contained in X"):
        secant_scheme_length(X, Line.coordinate(X.ring, ["x0", "x1"]))


def test_cone_vertex_is_singular():
    ring = PolyRing(["x0", "x1", "x2", "v"])
    C = EmbeddedScheme(Ideal(ring, ["x0*x2 - x1^2"]))
    line = Line(ring, [0, 0, 0, 1], [1, 0, 1, 0])
    assert secant_scheme_length(C, line) == 2
    rep = secant_point_report(C, line)
    assert [(r["factor"], r["multiplicity"], r["smooth"]) for r in rep] == [("t", 2, False)]
    assert not jacobian_smooth_at_secant(C, line)


def test_projecting_cone_from_vertex_drops_dimension():
    C = cone_scroll_ideal(2, [1, 1])
    Y = project_from_line(C, Line.coordinate(C.ring, ["u0", "u1"]))
    # S(0,0,1,1) is a cone over the quadric surface in P^3
    assert (Y.ambient_dimension, Y.dimension, Y.degree) == (3, 2, 2)
    assert Y.flags["dimension_drop"] == 2


def test_line_needs_two_points():
    ring = PolyRing(["x", "y", "z"])
    with pytest.raises(DegenerateInputError):
        Line(ring, [1, 2, 3], [2, 4, 6])
    with pytest.raises(ValueError):
        Line.coordinate(ring, ["x", "x"])


# ---- bundle maps -------------------------------------------------------------


def test_random_alpha_is_deterministic_with_expected_degrees():
    A = random_alpha(2, (1, 1), 1, 2, seed=3)
    B = random_alpha(2, (1, 1), 1, 2, seed=3)
    assert A.to_json() == B.to_json()
    degrees = [[f.total_degree if f else None for f in row] for row in A.entries]
    assert degrees == [[1, 2], [1, 2], [2, 3], [2, 3]]
    assert A.is_fiberwise_injective()
    assert all(abs(c) <= 5 for row in A.entries for f in row for c in f.as_dict().values())


def test_alpha_degree_pattern_is_checked():
    with pytest.raises(ValueError):
        BundleMapAlpha([["s", "s"], ["t", "t"], ["s", "t^2"], ["s^2", "t^2"]], (1, 1), 1, 1)


def test_splitting_types():
    assert splitting_type(random_alpha(2, (1, 1), 1, 1, seed=7)) == [2, 2]
    assert splitting_type(random_alpha(2, (1, 1), 1, 2, seed=7)) == [2, 3]
    assert sum(splitting_type(random_alpha(3, (1, 1, 1), 1, 2, seed=7))) == 6


def test_degenerate_alpha_rejected():
    alpha = degenerate_alpha()
    assert not alpha.is_fiberwise_injective()
    with pytest.raises(DegenerateInputError, match="alpha not fiberwise injective"):
        splitting_type(alpha)
    with pytest.raises(DegenerateInputError, match="alpha not fiberwise injective"):
        cokernel_map(alpha)


def test_trivial_summand_rejected():
    # the first two rows agree, so (1, -1, 0, 0) maps the cokernel onto O
    rows = [["s", "t"], ["s", "t"], ["t^2", "0"], ["0", "s^2"]]
    alpha = BundleMapAlpha(rows, (1, 1), 1, 1)
    assert alpha.is_fiberwise_injective()
    with pytest.raises(DegenerateInputError, match="trivial summand"):
        splitting_type(alpha)


def test_beta_kills_alpha_and_has_degree_pattern():
    alpha = random_alpha(2, (1, 1), 1, 1, seed=7)
    beta, b = cokernel_map(alpha)
    assert all(not f for row in compose(beta, alpha) for f in row)
    twists = (0, 0, 1, 1)
    for bi, row in zip(b, beta):
        for e, f in zip(twists, row):
            assert not f or f.total_degree == bi - e
    # rank n over the function field: some n x n minor is nonzero
    assert any(row0[i] * row1[j] - row0[j] * row1[i]
               for row0, row1 in [beta] for i, j in combinations(range(4), 2))


# ---- specs --------------------------------------------------------------------


def test_spec_derived_numbers():
    spec = ScrollSpec(3, (1, 1, 1), 1, 2, seed=1)
    assert (spec.d, spec.r, spec.expected_secant_length) == (6, 7, 3)


def test_spec_json_round_trip_and_validation():
    spec = ScrollSpec.from_json({"n": 2, "a": [1, 1], "k1": 1, "k2": 2, "seed": 7})
    data = spec.to_json()
    assert data["seed"] == 7 and data["d"] == 5 and data["r"] == 5
    again = ScrollSpec.from_json({k: data[k] for k in ("n", "a", "k1", "k2", "alpha")})
    assert again.alpha.to_json() == spec.alpha.to_json()
    bad = [
        {"n": 2, "a": [1, 1], "k1": 1, "k2": 2},
        {"n": 2, "a": [1, 1], "k1": 1, "k2": 2, "seed": 1, "alpha": []},
        {"n": 2, "a": [2, 1], "k1": 1, "k2": 2, "seed": 1},
        {"n": 2, "a": [1, 1], "k1": 0, "k2": 2, "seed": 1},
        {"n": 2, "a": [1, 1], "k1": 1, "k2": 2, "seed": "7"},
        {"n": 2, "a": [1, 1], "k1": 1, "k2": 2, "seed": 1, "colour": 3},
    ]
    for data in bad:
        with pytest.raises(ValueError):
            ScrollSpec.from_json(data)


# ---- the construction ---------------------------------------------------------


INSTANCES = [
    ((2, (1, 1), 1, 1), 2),
    ((2, (1, 1), 1, 2), 3),
    ((2, (1, 2), 1, 2), 3),
    ((3, (1, 1, 1), 1, 2), 3),
]


@pytest.mark.parametrize("params,length", INSTANCES)
def test_construction_invariants(params, length):
    rep = report(*params)
    spec = rep.spec
    assert rep.failures() == []
    assert rep.X.dimension == spec.n
    assert rep.X.degree == spec.d
    assert sum(rep.b) == spec.d
    assert rep.secant_length == length == spec.k1 + spec.k2 == spec.d - spec.r + spec.n + 1
    assert rep.regularity == length
    assert rep.regularity >= rep.secant_length
    pc = rep.projection_check
    assert (pc["dimension"], pc["degree"], pc["minimal_degree"]) == (spec.n, spec.r - spec.n - 1,
                                                                      True)
    assert rep.smooth_at_secant
    assert len(rep.projection_matrix) == spec.r + 1
    assert all(len(row) == spec.d + spec.n for row in rep.projection_matrix)


@pytest.mark.parametrize("params,length", INSTANCES[:2])
def test_hilbert_function_matches_parametrization(params, length):
    rep = report(*params)
    _, images = parametrization(rep.spec, rep.beta, rep.b)
    for m in range(4):
        assert rep.X.hilbert.hilbert_function(m) == image_hilbert_function(images, m)


def test_images_have_cox_multidegree():
    rep = report(2, (1, 1), 1, 2)
    cox, images = parametrization(rep.spec, rep.beta, rep.b)
    assert all(f.multidegree() == (0, 1) for f in images if f)


def test_alternative_route_through_the_big_scroll():
    # X is also the preimage of I_{S(b)} under the linear projection: eliminate w from
    # the minors of S(b) in w plus y_i - sum_j P_ij w_j
    rep = report(2, (1, 1), 1, 2)
    b = rep.b
    wnames = [f"w{k}_{m}" for k in range(len(b)) for m in range(b[k] + 1)]
    ynames = list(rep.X.ring.variables)
    ring = PolyRing(wnames + ynames)
    top = [ring.var(f"w{k}_{m}") for k in range(len(b)) for m in range(b[k])]
    bot = [ring.var(f"w{k}_{m + 1}") for k in range(len(b)) for m in range(b[k])]
    gens = [top[i] * bot[j] - top[j] * bot[i] for i, j in combinations(range(len(top)), 2)]
    for y, row in zip(ynames, rep.projection_matrix):
        f = ring.var(y)
        for w, c in zip(wnames, row):
            if c:
                f = f - c * ring.var(w)
        gens.append(f)
    J = eliminate(Ideal(ring, [g for g in gens if g]), wnames)
    Xi = Ideal(J.ring, [g.to_ring(J.ring) for g in rep.X.ideal.generators])
    assert J.contains_ideal(Xi) and Xi.contains_ideal(J)


def test_three_secant_points_are_smooth():
    rep = report(2, (1, 1), 1, 2)
    total = sum(p["multiplicity"] * BINARY.parse(p["factor"]).total_degree
                for p in rep.smoothness)
    assert rep.secant_divisor.total_degree == total == 3
    assert all(p["smooth"] and p["rank"] == p["expected_rank"] == 3 for p in rep.smoothness)
    assert jacobian_smooth_at_secant(rep.X, vertex_line(rep.X.ring))


def test_report_json_is_deterministic():
    import json
    a = json.dumps(construct(ScrollSpec(2, (1, 1), 1, 2, seed=7)).to_json(), sort_keys=True)
    b = json.dumps(construct(ScrollSpec(2, (1, 1), 1, 2, seed=7)).to_json(), sort_keys=True)
    assert a == b
    data = json.loads(a)
    assert data["sum_b"] == 5 and data["d_plus_n_minus_1"] == 6
    assert data["betti"]["entries"]


def test_construct_rejects_non_spec():
    with pytest.raises(TypeError):
        construct({"n": 2})


def test_binary_ring_is_s_t():
    assert BINARY.variables == ("s", "t")
    assert hilbert_data(Ideal(BINARY, [])).degree == 1
