import io
from fractions import Fraction
from itertools import islice

import pytest

from sl2words.errors import SearchExhausted
from sl2words.fields import GF, QQ
from sl2words.polynomial import MARKOFF_F, poly_eval
from sl2words.surfaces import (SurfacePoint, commutator_surface, enumerate_points_fp, markoff,
                               markoff_info, search_points_fp, search_points_q, trace_surface,
                               write_points_csv)
from sl2words.trace import commutator_factor
from sl2words.words import parse_word

# exhaustive counts #M_d(F_p), d = 0..p-1, from a plain triple loop
MARKOFF_COUNTS = {3: [10, 16, 1], 5: [26, 41, 6, 16, 36], 7: [50, 64, 64, 29, 78, 22, 36]}


def _gradient(pt):
    s, t, u = pt
    return (2 * s - t * u, 2 * t - s * u, 2 * u - s * t)


def test_markoff_info():
    assert markoff_info(1).smooth
    info = markoff_info(0)
    assert set(info.singular_points) == {(2, 2, 2), (2, -2, -2), (-2, 2, -2), (-2, -2, 2)}
    assert markoff_info(-4).singular_points == [(0, 0, 0)]
    for d in (0, -4):
        for pt in markoff_info(d).singular_points:
            assert _gradient(pt) == (0, 0, 0)
            assert poly_eval(MARKOFF_F, pt) == d


@pytest.mark.parametrize("p", sorted(MARKOFF_COUNTS))
def test_fp_counts(p):
    counts = [enumerate_points_fp(markoff(d, GF(p)), p).count for d in range(p)]
    assert counts == MARKOFF_COUNTS[p]
    assert sum(counts) == p**3


def test_fp_list_and_cayley_point():
    res = enumerate_points_fp(markoff(0, GF(3)), 3, emit_list=True)
    assert len(res.points) == res.count
    assert (2, 2, 2) in [tuple(x.v for x in pt.triple) for pt in res.points]
    assert all(not pt.in_V for pt in res.points)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_commutator_surface_is_markoff(p):
    F = GF(p)
    for a in range(p):
        a_pts = {tuple(x.v for x in pt.triple) for pt in search_points_fp(commutator_surface(a, F))}
        d_pts = {tuple(x.v for x in pt.triple) for pt in search_points_fp(markoff(a - 2, F))}
        assert a_pts == d_pts
        assert len(d_pts) == enumerate_points_fp(markoff(a - 2, F), p).count


def test_trace_surface_polynomial_identity():
    w = parse_word("[x^2,y]")
    spec = trace_surface(w, 5)
    assert spec.poly - 5 == commutator_factor(w) * MARKOFF_F + (2 - 5)


def test_rational_examples():
    assert markoff(-3).contains((1, 0, 0))
    assert SurfacePoint(Fraction(3), Fraction(2), Fraction(2)).F == 1
    first = next(search_points_q(markoff(2)))
    assert markoff(2).contains(first.triple)


@pytest.mark.parametrize("d", [1, 2, 3, -3, 5])
def test_search_points_satisfy_norm_identity(d):
    for pt in islice(search_points_q(markoff(d), bound=12), 30):
        s, t, u = pt.triple
        assert poly_eval(MARKOFF_F, pt.triple) == d
        assert (s * s - 4) * (t * t - 4) == (2 * u - s * t) ** 2 - 4 * d
        assert QQ.is_square(t * t - 4) and t * t != 4


def test_split_strategy_fibre_for_v_2():
    # t = 5/2 comes from v = 2, the first split value
    pts = list(islice(search_points_q(markoff(2)), 10))
    assert any(pt.t in (Fraction(5, 2), Fraction(-5, 2)) for pt in pts)


def test_search_is_deterministic():
    a = [pt.triple for pt in islice(search_points_q(markoff(3), bound=10), 15)]
    b = [pt.triple for pt in islice(search_points_q(markoff(3), bound=10), 15)]
    assert a == b and len(set(a)) == len(a)


def test_search_exhausted():
    # [x,y]^2 = 5 needs tr [x,y] = +-sqrt 7
    with pytest.raises(SearchExhausted):
        list(search_points_q(trace_surface(parse_word("[x,y]^2"), 5), bound=4))


def test_grid_strategy():
    pts = list(islice(search_points_q(markoff(-3), bound=3, strategy="grid"), 5))
    assert all(markoff(-3).contains(pt.triple) for pt in pts)


def test_csv_export():
    buf = io.StringIO()
    write_points_csv([SurfacePoint(Fraction(1), Fraction(0), Fraction(0))], buf)
    assert buf.getvalue().splitlines() == ["s,t,u,F,in_V", "1,0,0,-3,1"]
