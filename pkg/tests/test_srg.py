import pytest
from hypothesis import given, strategies as st

from srgwalk.gf import prime_power
from srgwalk.srg import (
    CompleteGraphError,
    GraphFamily,
    InfeasibleParamsError,
    ParameterError,
    SrgParams,
    check_feasibility,
    degree_bound_holds,
    latin_params,
    paley_params,
    require_feasible,
    triangular_params,
)


@pytest.mark.parametrize(
    "params, expected",
    [
        ((9, 4, 1, 2), True),
        ((8, 3, 0, 1), False),
        ((10, 3, 0, 1), True),
        ((101, 50, 24, 25), True),
        ((2500, 147, 50, 6), True),
    ],
)
def test_check_feasibility(params, expected):
    assert check_feasibility(SrgParams(*params)) is expected


def test_feasibility_rejects_complete_graph():
    with pytest.raises(CompleteGraphError):
        check_feasibility(SrgParams(6, 5, 4, 0))
    with pytest.raises(CompleteGraphError):
        check_feasibility(SrgParams(6, 6, 4, 1))


def test_require_feasible_errors():
    with pytest.raises(InfeasibleParamsError):
        require_feasible(SrgParams(8, 3, 0, 1))
    assert require_feasible(SrgParams(10, 3, 0, 1)) == SrgParams(10, 3, 0, 1)


def test_params_type_checks():
    with pytest.raises(TypeError):
        SrgParams(9.0, 4, 1, 2)
    with pytest.raises(ParameterError):
        SrgParams(9, 0, 1, 2)
    with pytest.raises(ParameterError):
        SrgParams(9, 4, -1, 2)


@pytest.mark.parametrize(
    "t, expected",
    [(1, (5, 2, 0, 1)), (2, (9, 4, 1, 2)), (3, (13, 6, 2, 3)), (25, (101, 50, 24, 25))],
)
def test_paley_params(t, expected):
    assert paley_params(t).astuple() == expected


@pytest.mark.parametrize("t", [5, 11, 14])  # 21, 45, 57 are not prime powers
def test_paley_params_rejects_non_prime_power(t):
    assert prime_power(4 * t + 1) is None
    with pytest.raises(ParameterError):
        paley_params(t)


@pytest.mark.parametrize(
    "t, d, expected",
    [(3, 3, (9, 6, 3, 6)), (50, 3, (2500, 147, 50, 6)), (4, 2, (16, 6, 2, 2))],
)
def test_latin_params(t, d, expected):
    assert latin_params(t, d).astuple() == expected


@pytest.mark.parametrize("t, d", [(5, 1), (3, 4), (2, 3)])
def test_latin_params_range(t, d):
    with pytest.raises(ParameterError):
        latin_params(t, d)


@pytest.mark.parametrize("m, expected", [(5, (10, 6, 3, 4)), (6, (15, 8, 4, 4)), (7, (21, 10, 5, 4))])
def test_triangular_params(m, expected):
    assert triangular_params(m).astuple() == expected


def test_triangular_params_range():
    with pytest.raises(ParameterError):
        triangular_params(4)


def _family_outputs():
    out = [paley_params(t) for t in range(1, 101) if prime_power(4 * t + 1)]
    out += [latin_params(t, d) for t in range(2, 21) for d in range(2, t + 1)]
    out += [triangular_params(m) for m in range(5, 40)]
    return out


def test_every_family_tuple_is_feasible_and_satisfies_degree_bound():
    outputs = _family_outputs()
    assert len(outputs) > 200
    for params in outputs:
        assert check_feasibility(params), params
        assert degree_bound_holds(params), params


@given(
    st.integers(4, 400),
    st.integers(1, 400),
    st.integers(0, 400),
    st.integers(0, 400),
)
def test_check_feasibility_is_pure(N, k, lam, mu):
    params = SrgParams(N, k, lam, mu)
    if k >= N - 1:
        with pytest.raises(CompleteGraphError):
            check_feasibility(params)
        return
    first = check_feasibility(params)
    assert check_feasibility(params) is first
    assert first == (k * (k - lam - 1) == (N - k - 1) * mu)


def test_graph_family():
    assert GraphFamily("paley", q=101).params() == SrgParams(101, 50, 24, 25)
    assert GraphFamily("latin", t=50, d=3).num_vertices == 2500
    assert GraphFamily("complete", n=6).num_vertices == 6
    with pytest.raises(CompleteGraphError):
        GraphFamily("complete", n=6).params()
    with pytest.raises(ParameterError):
        GraphFamily("paley", q=15)
    with pytest.raises(ParameterError):
        GraphFamily("latin", t=4)
    with pytest.raises(ParameterError):
        GraphFamily("hypercube", n=8)
