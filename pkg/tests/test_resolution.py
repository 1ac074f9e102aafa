import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from scrollreg.errors import NotMinimalError
from scrollreg.groebner import Ideal
from scrollreg.poly import LEX, PolyRing
from scrollreg.resolution import (BettiTable, GradedMatrix, Resolution, betti_table,
                                  check_resolution, frame_betti_table, free_resolution,
                                  minimal_resolution, minimize, regularity, syzygy_matrix)
from scrollreg.resolution.linalg import monomials_of_degree, nullspace, rank
from scrollreg.verify import random_ideal

P3 = PolyRing(["x0", "x1", "x2", "x3"])
XY = PolyRing(["x", "y"])
CUBIC = ["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]


def row(ring, gens):
    polys = [ring.parse(g) for g in gens]
    return GradedMatrix(ring, [polys], [0], [g.total_degree for g in polys])


def koszul():
    x, y = XY.gens()
    d1 = GradedMatrix(XY, [[x, y]], [0], [1, 1])
    d2 = GradedMatrix(XY, [[y], [-x]], [1, 1], [2])
    return Resolution(XY, [d1, d2], Ideal(XY, [x, y]))


def test_koszul_syzygy():
    S = syzygy_matrix(row(XY, ["x", "y"]))
    assert S.shape == (2, 1)
    col = S.column(0)
    assert col[0] * XY.var("x") + col[1] * XY.var("y") == XY.zero
    assert {str(col[0]), str(col[1])} in ({"y", "-x"}, {"-y", "x"})


def test_single_nonzero_column_has_no_syzygies():
    S = syzygy_matrix(row(XY, ["x^2 + y^2"]))
    assert S.ncols == 0


def test_twisted_cubic_linear_syzygies_by_linear_algebra():
    M = row(P3, CUBIC)
    S = syzygy_matrix(M)
    assert S.ncols == 2
    assert all(d == 3 for d in S.column_degrees)
    assert (M @ S).is_zero()
    # brute force: vectors of linear forms (l1, l2, l3) with sum l_i g_i = 0
    gens = [P3.parse(g) for g in CUBIC]
    cubics = {m: i for i, m in enumerate(monomials_of_degree(4, 3))}
    cols = []
    for j, g in enumerate(gens):
        for v in P3.gens():
            col = {}
            for e, c in (g * v).as_dict().items():
                col[cubics[e]] = c
            cols.append(col)
    # transpose: one equation per cubic monomial
    eqs = [{k: col[r] for k, col in enumerate(cols) if r in col} for r in range(len(cubics))]
    assert len(nullspace(eqs, len(cols))) == 2


def test_hypersurface_resolution():
    ring = PolyRing(["x", "y", "z"])
    res = minimal_resolution(Ideal(ring, ["x^3 + y^3 + z^3"]))
    B = betti_table(res)
    assert B.to_json() == {"entries": [{"i": 0, "j": 3, "beta": 1}]}
    assert res.length == 1
    assert regularity(B) == 3


def test_twisted_cubic_betti():
    I = Ideal(P3, CUBIC)
    B = betti_table(minimal_resolution(I))
    assert B[0, 2] == 3 and B[1, 3] == 2
    assert B.totals() == [3, 2]
    assert regularity(B) == 2


def test_koszul_betti():
    B = betti_table(minimal_resolution(Ideal(XY, ["x", "y"])))
    assert B.to_json()["entries"] == [{"i": 0, "j": 1, "beta": 2}, {"i": 1, "j": 2, "beta": 1}]


def test_koszul_check_passes():
    rep = check_resolution(koszul())
    assert rep.ok, rep.failures


def test_corrupted_entry_names_the_composition():
    res = koszul()
    d1, d2 = res.differentials
    bad = GradedMatrix(XY, [[XY.var("y")], [XY.var("x")]], [1, 1], [2])
    rep = check_resolution(Resolution(XY, [d1, bad], res.ideal))
    assert not rep.ok
    assert rep.failures == ["d1*d2 is not zero"]


def test_missing_syzygy_fails_exactness():
    res = koszul()
    rep = check_resolution(Resolution(XY, res.differentials[:1], res.ideal))
    assert not rep.ok
    assert any("not exact at F0" in f for f in rep.failures)


def test_minimize_cancels_identity_summand():
    x, y = XY.gens()
    o, z = XY.one, XY.zero
    d1 = GradedMatrix(XY, [[x, y, z]], [0], [1, 1, 2])
    d2 = GradedMatrix(XY, [[y, z], [-x, z], [z, o]], [1, 1, 2], [2, 2])
    padded = Resolution(XY, [d1, d2], Ideal(XY, [x, y]))
    assert check_resolution(padded).ok
    assert not padded.is_minimal()
    with pytest.raises(NotMinimalError):
        betti_table(padded)
    m = minimize(padded)
    assert m.ranks() == [2, 1]
    assert m.is_minimal()
    assert check_resolution(m).ok


def test_minimize_is_idempotent_on_minimal_input():
    res = koszul()
    assert minimize(res).ranks() == res.ranks()


def test_schreyer_frame_of_twisted_cubic_minimizes_to_three_two():
    I = Ideal(P3, CUBIC)
    frame = free_resolution(I)
    assert check_resolution(frame, degree_cap=6).ok
    m = minimize(frame)
    assert m.ranks() == [3, 2]
    assert check_resolution(m, degree_cap=6).ok
    assert frame_betti_table(frame) == betti_table(m)


def test_betti_text_grid():
    B = betti_table(minimal_resolution(Ideal(P3, CUBIC)))
    assert B.to_text() == "       0 1\ntotal: 3 2\n    2: 3 2"
    I = Ideal(P3, ["x0", "x1^2"])
    text = betti_table(minimal_resolution(I)).to_text().splitlines()
    assert text[2] == "    1: 1 ." and text[3] == "    2: 1 1"


def test_betti_json_round_trip():
    B = betti_table(minimal_resolution(Ideal(P3, CUBIC)))
    assert BettiTable.from_json(B.to_json()) == B


def test_zero_ideal_table_is_empty():
    B = betti_table(minimal_resolution(Ideal(XY, [])))
    assert B.empty
    assert regularity(B) == 0


def test_iterated_and_schreyer_agree_on_examples():
    for ring, gens in [(P3, CUBIC), (XY, ["x^2", "x*y"]), (P3, ["x0^2", "x1^2", "x2^2", "x3^2"])]:
        I = Ideal(ring, gens)
        a = betti_table(minimal_resolution(I))
        b = betti_table(minimal_resolution(I, method="iterated"))
        assert a == b


def test_complete_intersection_of_quadrics_is_koszul():
    B = betti_table(minimal_resolution(Ideal(P3, ["x0^2", "x1^2", "x2^2", "x3^2"])))
    assert B.totals() == [4, 6, 4, 1]
    assert B[3, 8] == 1
    # reg of a complete intersection ideal is sum(d_i - 1) + 1
    assert regularity(B) == 5


def test_sparse_rank_helper():
    assert rank([{0: 1, 1: 2}, {0: 2, 1: 4}, {2: 1}]) == 2
    assert rank([]) == 0


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_random_frames_are_exact_and_order_independent(seed):
    I = random_ideal(random.Random(seed), max_vars=4, max_gens=3, max_degree=2)
    frame = free_resolution(I)
    rep = check_resolution(frame)
    assert rep.ok, (seed, rep.failures)
    m = minimize(frame)
    assert m.is_minimal()
    assert check_resolution(m).ok
    assert len(m) <= I.ring.nvars
    assert betti_table(m) == frame_betti_table(frame)
    assert betti_table(m) == betti_table(minimal_resolution(I, order=LEX))


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_random_schreyer_matches_iterated(seed):
    I = random_ideal(random.Random(seed), max_vars=3, max_gens=3, max_degree=2)
    a = betti_table(minimal_resolution(I))
    b = betti_table(minimal_resolution(I, method="iterated"))
    assert a == b
