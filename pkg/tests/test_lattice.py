from fractions import Fraction as F

import pytest

from e8umbral.lattice import (DEFAULT_LATTICE, LatticeConfig,
                              LatticeError, enumerate_coset_cone)


def brute_scan(a, bound, fix=None, box=12):
    """Naive large-box oracle straight from the definitions."""
    lat = DEFAULT_LATTICE
    out = []
    for k in range(-box, box + 1):
        for l in range(-box, box + 1):
            for m in range(-box, box + 1):
                mu = (k + F(a, 10), l + F(a, 10), m + F(a, 10))
                if all(c >= 0 for c in mu):
                    branch = "P"
                elif all(c < 0 for c in mu):
                    branch = "N"
                else:
                    continue
                if fix == "tau" and k != l:
                    continue
                if fix == "sigma" and not (k == l == m):
                    continue
                qv = lat.q_norm(mu)
                if qv <= bound:
                    out.append((qv, (k, l, m), a, branch))
    return sorted(out)


def test_gram_values():
    lat = DEFAULT_LATTICE
    e = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert lat.pair(e[0], e[0]) == 1
    assert lat.pair(e[0], e[1]) == 2
    assert lat.pair((2, -3, 5), lat.rho) == 4
    assert lat.pair(lat.rho, lat.rho) == F(3, 5)


def test_dual_basis_property():
    # eps_i' = 2 rho - eps_i pairs to the identity against the basis
    lat = DEFAULT_LATTICE
    basis = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    for i in range(3):
        dual = tuple(2 * lat.rho[j] - basis[i][j] for j in range(3))
        for j in range(3):
            assert lat.pair(dual, basis[j]) == (1 if i == j else 0)


def test_signature_guard():
    with pytest.raises(LatticeError):
        LatticeConfig(gram=((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    with pytest.raises(LatticeError):
        LatticeConfig(gram=((1, 2, 0), (2, 1, 2), (0, 2, 1)))


def test_minimal_point_coset_one():
    pts = enumerate_coset_cone(1, None, F(3, 40))
    assert len(pts) == 1
    p = pts[0]
    assert p.coords == (0, 0, 0) and p.branch == "P" and p.q == F(3, 40)


def test_sigma_fixed_coset_five():
    pts = enumerate_coset_cone(5, "sigma", F(15, 8))
    assert [(p.coords, p.branch) for p in pts] == \
        [((-1, -1, -1), "N"), ((0, 0, 0), "P")]
    assert all(p.q == F(15, 8) for p in pts)


@pytest.mark.parametrize("a", [1, 3, 5, 7, 9])
@pytest.mark.parametrize("fix", [None, "tau", "sigma"])
def test_completeness_against_box_oracle(a, fix):
    got = [(p.q, p.coords, p.coset_a, p.branch)
           for p in enumerate_coset_cone(a, fix, 10)]
    assert got == brute_scan(a, F(10), fix)


def test_branch_sign_conditions_and_q():
    lat = DEFAULT_LATTICE
    for p in enumerate_coset_cone(7, None, 8):
        mu = p.mu()
        if p.branch == "P":
            assert all(c >= 0 for c in mu)
        else:
            assert all(c < 0 for c in mu)
        assert lat.q_norm(mu) == p.q
        assert p.q > 0


def test_negation_symmetry():
    for a in (1, 3, 7, 9):
        n_pts = sorted((p.q, p.coords) for p in
                       enumerate_coset_cone(a, None, 6) if p.branch == "N")
        p_pts = sorted((p.q, tuple(-c - 1 for c in p.coords)) for p in
                       enumerate_coset_cone(10 - a, None, 6)
                       if p.branch == "P")
        assert n_pts == p_pts


def test_positive_branch_square_bound():
    # on branch P the cross terms are non-negative: Q >= sum(coords^2)/2
    for p in enumerate_coset_cone(3, None, 9):
        if p.branch == "P":
            mu = p.mu()
            assert p.q >= sum(c * c for c in mu) / 2


def test_coset_label_validation():
    with pytest.raises(LatticeError):
        enumerate_coset_cone(2, None, 5)
    with pytest.raises(LatticeError):
        enumerate_coset_cone(11, None, 5)


def test_deterministic_sorted_output():
    a = enumerate_coset_cone(3, None, 12)
    b = enumerate_coset_cone(3, None, 12)
    assert a == b
    assert a == sorted(a)
