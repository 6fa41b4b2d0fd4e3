import pytest
from hypothesis import given, settings, strategies as st

from oracles import pell_by_k_sweep, rn_by_k_sweep, triangular_matches
from qubitgroups.diophantine import (
    PellSolution,
    QubitMatch,
    RNSolution,
    exact_sqrt,
    pell_enumerate,
    pell_orbit,
    qubit_rotation_matches,
    solve_rn_bruteforce,
)

FIVE = [(3, 1), (4, 3), (5, 5), (7, 11), (15, 181)]


def pairs(sols):
    return [(s.b, s.k) for s in sols]


def test_exact_sqrt():
    assert exact_sqrt(0) == 0
    assert exact_sqrt(505) is None
    assert exact_sqrt(181**2) == 181
    assert exact_sqrt(-7) is None
    big = 3**2000
    assert exact_sqrt(big * big) == big
    assert exact_sqrt(big * big + 1) is None


def test_rn_examples():
    assert pairs(solve_rn_bruteforce(64)) == FIVE
    assert solve_rn_bruteforce(2) == []
    assert pairs(solve_rn_bruteforce(4)) == FIVE[:2]


def test_rn_against_k_sweep():
    assert pairs(solve_rn_bruteforce(36)) == rn_by_k_sweep(36)


def test_rn_desk_scale():
    assert pairs(solve_rn_bruteforce(10_000)) == FIVE


@settings(max_examples=30)
@given(st.lists(st.integers(1, 199), max_size=5))
def test_rn_partition_independent(cuts):
    edges = sorted({0, *cuts, 200})
    merged = []
    for lo, hi in zip(edges, edges[1:]):
        merged += solve_rn_bruteforce(hi, min_b=lo + 1)
    assert merged == solve_rn_bruteforce(200)


def test_rn_record_checks_itself():
    with pytest.raises(ArithmeticError):
        RNSolution(6, 7)
    assert RNSolution(15, 181).to_json() == {"b": 15, "k": "181"}


def test_qubit_matches():
    got = [(m.n, m.N, m.k) for m in qubit_rotation_matches(20)]
    assert got == [(1, 3, 5), (2, 6, 11), (6, 91, 181)]
    assert [(m.n, m.N, m.k) for m in qubit_rotation_matches(1)] == [(1, 3, 5)]
    # n = 3: 2^9 - 7 = 505 lies strictly between 22^2 and 23^2
    assert 22**2 < 2**9 - 7 < 23**2
    assert all(m.n != 3 for m in qubit_rotation_matches(10))


def test_qubit_matches_against_triangular_scan():
    assert [(m.n, m.N) for m in qubit_rotation_matches(12)] == triangular_matches(12)


def test_qubit_match_cross_consistency():
    rn = {(s.b, s.k) for s in solve_rn_bruteforce(200)}
    orbits = {(d, abs(k)) for sign in (1, -1) for (d, k), _ in zip(pell_orbit(sign), range(40))}
    for m in qubit_rotation_matches(60):
        assert (m.b, m.k) in rn
        assert (2**m.n, m.k) in orbits


def test_qubit_match_validation():
    with pytest.raises(ArithmeticError):
        QubitMatch(3, 32, 63)


def test_pell_examples():
    assert [(s.d, s.k) for s in pell_enumerate(1, 2)] == [(4, 11), (23, 65)]
    assert [(s.d, s.k) for s in pell_enumerate(-1, 2)] == [(2, 5), (11, 31)]
    assert [(s.d, s.k) for s in pell_enumerate(-1, 1)] == [(2, 5)]
    assert (31 + 1) // 2 == 16


def test_pell_conservation_fifty_iterates():
    for sign in (1, -1):
        sols = pell_enumerate(sign, 50)
        assert len(sols) == 50
        for s in sols:
            assert 8 * s.d**2 - s.k**2 == 7
        ds = [s.d for s in sols]
        ks = [s.k for s in sols]
        assert ds == sorted(set(ds)) and ks == sorted(set(ks))


def test_pell_orbits_inside_brute_force():
    found = set(pell_by_k_sweep(5000))
    orbit_points = {(s.d, s.k) for sign in (1, -1) for s in pell_enumerate(sign, 6) if s.k <= 5000}
    assert orbit_points <= found
    assert orbit_points == found - {(1, 1)}


def test_pell_validation():
    with pytest.raises(ValueError):
        pell_enumerate(2, 3)
    with pytest.raises(ValueError):
        pell_enumerate(1, 0)
    with pytest.raises(ArithmeticError):
        PellSolution(3, 8)
    assert PellSolution(11, 31, -1).to_json() == {"d": "11", "k": "31", "seed": -1}
