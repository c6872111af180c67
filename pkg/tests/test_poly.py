import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from polardet.errors import BudgetExceeded, InvalidArgument, InvalidFamily
from polardet.gaussian import abs2, conj, gauss, to_complex
from polardet.poly import (
    DIRICHLET,
    GAPPED,
    LITTLEWOOD,
    SparsePoly,
    autocorrelation,
    classify,
    dirichlet,
    enumerate_gapped,
    enumerate_littlewood,
    format_poly,
    gapped_count,
    lag_map,
    littlewood,
    littlewood_at,
    littlewood_count,
    parse_poly,
)

gints = st.builds(gauss, st.integers(-3, 3), st.integers(-3, 3)).filter(lambda c: c != 0)


@st.composite
def sparse_polys(draw, max_terms=6, max_degree=12):
    k = draw(st.integers(0, max_terms - 1))
    exps = sorted(draw(st.sets(st.integers(1, max_degree), min_size=k, max_size=k)))
    coeffs = [draw(gints) for _ in range(k + 1)]
    return SparsePoly((0, *exps), tuple(coeffs))


def texts(fs):
    return [format_poly(f) for f in fs]


def test_dirichlet():
    assert dirichlet(1).support == (0,) and dirichlet(1).coeffs == (1,)
    assert dirichlet(3).support == (0, 1, 2) and dirichlet(3).coeffs == (1, 1, 1)
    assert dirichlet(2).coeffs == (1, 1)
    assert dirichlet(4).family_tag == DIRICHLET
    with pytest.raises(InvalidArgument):
        dirichlet(0)


def test_validation():
    with pytest.raises(InvalidArgument):
        SparsePoly((1, 2), (1, 1))
    with pytest.raises(InvalidArgument):
        SparsePoly((0, 2, 1), (1, 1, 1))
    with pytest.raises(InvalidFamily):
        SparsePoly((0, 1), (1, 2), LITTLEWOOD)
    with pytest.raises(InvalidFamily):
        SparsePoly((0, 2), (1, 1), DIRICHLET)


def test_classify():
    assert classify((0, 1, 2), (1, 1, 1)) == DIRICHLET
    assert classify((0, 1), (1, -1)) == LITTLEWOOD
    assert classify((0, 3), (1, -1)) == GAPPED


def test_enumerate_littlewood_small():
    assert texts(enumerate_littlewood(1)) == ["1"]
    assert texts(enumerate_littlewood(2)) == ["1+z", "1-z"]
    assert len(list(enumerate_littlewood(4))) == 8


@pytest.mark.parametrize("N", range(1, 9))
def test_littlewood_family_complete(N):
    fs = list(enumerate_littlewood(N))
    assert len(fs) == littlewood_count(N) == 2 ** (N - 1)
    assert len(set(fs)) == len(fs)
    assert fs.count(dirichlet(N)) == 1 and fs[0] == dirichlet(N)
    assert all(f.coeffs[0] == 1 and f.family_tag in (LITTLEWOOD, DIRICHLET) for f in fs)
    assert [littlewood_at(N, r) for r in range(len(fs))] == fs


def test_enumeration_slices_concatenate():
    whole = list(enumerate_littlewood(6))
    parts = [list(enumerate_littlewood(6, a, b)) for a, b in ((0, 11), (11, 20), (20, 32))]
    assert sum(parts, []) == whole


def test_enumeration_budget():
    with pytest.raises(BudgetExceeded):
        next(enumerate_littlewood(10, max_instances=100))


def test_enumerate_gapped_examples():
    assert texts(enumerate_gapped(2, 2, [1])) == ["1+z", "1+z^2"]
    assert texts(enumerate_gapped(1, 5, [1, -1])) == ["1"]
    assert len(list(enumerate_gapped(2, 3, [1, -1]))) == 6
    with pytest.raises(InvalidFamily):
        list(enumerate_gapped(2, 3, [gauss(0, 0)]))


@pytest.mark.parametrize("N, md, cs", [(3, 5, [1, -1]), (2, 4, [1, gauss(0, 1), gauss(1, 1)]), (4, 6, [1])])
def test_gapped_count_and_membership(N, md, cs):
    fs = list(enumerate_gapped(N, md, cs))
    assert len(fs) == gapped_count(N, md, cs) == len(set(fs))
    for f in fs:
        assert f.N == N and f.degree <= md and all(abs2(c) >= 1 for c in f.coeffs)


def test_autocorrelation_examples():
    assert autocorrelation(dirichlet(2)) == {-1: 1, 0: 2, 1: 1}
    assert autocorrelation(dirichlet(1)) == {0: 1}
    assert autocorrelation(dirichlet(3)) == {-2: 1, -1: 2, 0: 3, 1: 2, 2: 1}


def _numpy_autocorrelation(f):
    # independent route: full convolution of the dense coefficients with their reversed conjugates
    c = np.array([complex(to_complex(x)) for x in f.dense()])
    full = np.convolve(c, np.conj(c[::-1]))
    d = len(c) - 1
    return {m - d: v for m, v in enumerate(full) if abs(v) > 1e-9}


@given(sparse_polys())
def test_autocorrelation_matches_convolution(f):
    ours = {m: to_complex(v) for m, v in autocorrelation(f).items()}
    ref = _numpy_autocorrelation(f)
    assert ours.keys() == ref.keys()
    assert all(abs(ours[m] - ref[m]) < 1e-9 for m in ours)


@given(sparse_polys())
def test_autocorrelation_invariants(f):
    a = autocorrelation(f)
    assert a[0] == sum(abs2(c) for c in f.coeffs)
    assert all(a[-m] == conj(v) for m, v in a.items())
    assert autocorrelation(-f) == a
    shifted = lag_map([k + 5 for k in f.support], f.coeffs)
    assert shifted == a


@given(sparse_polys())
def test_text_round_trip(f):
    assert parse_poly(format_poly(f)) == f


@pytest.mark.parametrize("text", ["1+z-z^3", "1-z", "1", "1+(2-1i)z^4-3z^5", "-1+z"])
def test_parse_examples(text):
    assert format_poly(parse_poly(text)) == text


def test_parse_infers_family():
    assert parse_poly("1+z+z^2").family_tag == DIRICHLET
    assert parse_poly("1-z+z^2").family_tag == LITTLEWOOD
    assert parse_poly("1+z^3").family_tag == GAPPED
    assert littlewood([1, -1]) == parse_poly("1-z")


def test_parse_combines_like_terms():
    assert format_poly(parse_poly("1+z+z")) == "1+2z"


@pytest.mark.parametrize("bad", ["", "z^0+", "1+z^-1", "1-1", "x+1"])
def test_parse_rejects(bad):
    with pytest.raises(InvalidArgument):
        parse_poly(bad)
