import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphspline import InterpolationProblem, build_path_graph, interpolate, laplacian, residual_norm

from oracles import brute_force_lsq


def problem(points, known):
    """Build a problem from a dict {position: value}; other points are unknown."""
    g = build_path_graph(points)
    mask = np.array([x in known for x in g.positions])
    vals = [known[x] for x in g.positions if x in known]
    return InterpolationProblem(g, mask, vals)


def random_problem(rng, n_max=8):
    n = int(rng.integers(3, n_max + 1))
    pts = rng.uniform(-2.0, 1.0) + np.cumsum(rng.uniform(0.02, 0.6, n))
    mask = np.zeros(n, bool)
    k = int(rng.integers(1, n))
    mask[rng.choice(n, k, replace=False)] = True
    return InterpolationProblem(build_path_graph(pts), mask, rng.normal(0, 2, k))


def test_constant_known_values():
    F = interpolate(problem([0.0, 0.3, 1.0], {0.0: 3.0, 1.0: 3.0}))
    np.testing.assert_allclose(F, 3.0, atol=1e-12)


def test_uniform_three_nodes_symmetric():
    F = interpolate(problem([0.0, 0.5, 1.0], {0.0: 0.0, 1.0: 1.0}))
    assert F[1] == pytest.approx(0.5, abs=1e-12)


def test_nonuniform_three_nodes():
    # 5/26 confirmed by brute-force coordinate descent (oracles.brute_force_lsq)
    F = interpolate(problem([0.0, 0.25, 1.0], {0.0: 0.0, 1.0: 1.0}))
    assert F[1] == pytest.approx(5 / 26, abs=1e-12)
    oracle = brute_force_lsq([0.0, 0.25, 1.0], np.array([True, False, True]), [0.0, 1.0])
    assert F[1] == pytest.approx(oracle[1], abs=1e-9)


def test_known_values_copied_verbatim():
    p = problem([0.0, 0.1, 0.4, 0.45, 1.0], {0.1: np.pi, 0.45: -1.0 / 3.0})
    F = interpolate(p)
    assert F[1] == np.pi and F[3] == -1.0 / 3.0


def test_residual_norm_examples():
    p = problem([0.0, 0.5, 1.0], {0.0: 0.0, 1.0: 1.0})
    # L F by hand: rows (2*0 - 2*0.5, -2*0 + 4*0.5 - 2*1, -2*0.5 + 2*1) = (-1, 0, 1)
    assert residual_norm(p, [0.0, 0.5, 1.0]) == pytest.approx(np.sqrt(2.0), rel=1e-15)
    # rows (-2, 4, -2)
    assert residual_norm(p, [0.0, 1.0, 0.0]) == pytest.approx(np.sqrt(24.0), rel=1e-15)
    assert residual_norm(p, [7.0, 7.0, 7.0]) == pytest.approx(0.0, abs=1e-12)


def test_residual_norm_shape_check():
    p = problem([0.0, 0.5, 1.0], {0.0: 0.0, 1.0: 1.0})
    with pytest.raises(ValueError):
        residual_norm(p, [0.0, 1.0])


@pytest.mark.parametrize(
    "mask, vals",
    [([True, True, True], [1, 2, 3]), ([False, False, False], []), ([True, False, True], [1.0])],
)
def test_problem_validation(mask, vals):
    with pytest.raises(ValueError):
        InterpolationProblem(build_path_graph([0, 1, 2]), mask, vals)


def test_non_finite_known_value():
    with pytest.raises(ValueError):
        InterpolationProblem(build_path_graph([0, 1, 2]), [True, False, True], [0.0, np.nan])


def test_constant_reproduction_random_graphs(rng):
    for _ in range(100):
        p = random_problem(rng, n_max=40)
        c = rng.normal(0, 10)
        p = InterpolationProblem(p.graph, p.known_mask, np.full(p.known_mask.sum(), c))
        np.testing.assert_allclose(interpolate(p), c, atol=1e-10)


def test_matches_brute_force_oracle(rng):
    for _ in range(200):
        p = random_problem(rng)
        F = interpolate(p)
        oracle = brute_force_lsq(p.graph.positions, p.known_mask, p.known_values)
        np.testing.assert_allclose(F, oracle, atol=1e-4)


def test_optimality_certificate(rng):
    for _ in range(100):
        p = random_problem(rng, n_max=30)
        F = interpolate(p)
        L = laplacian(p.graph)
        Lu = L[:, ~p.known_mask]
        grad = 2 * Lu.T @ (L @ F)
        bound = 1e-8 * (1 + np.abs(L).sum(axis=1).max() * np.abs(F).max())
        assert np.abs(grad).max() <= bound


def test_rank_deficient_returns_min_norm():
    # isolated pair of unknowns between knowns; still solvable, check minimality
    p = problem([0.0, 1.0, 2.0, 3.0], {0.0: 1.0, 3.0: 4.0})
    F = interpolate(p)
    L = laplacian(p.graph)
    sol, *_ = np.linalg.lstsq(L[:, ~p.known_mask], -L[:, p.known_mask] @ p.known_values, rcond=None)
    np.testing.assert_allclose(F[~p.known_mask], sol, atol=1e-10)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_permutation_invariance(seed):
    rng = np.random.default_rng(seed)
    p = random_problem(rng, n_max=12)
    F = interpolate(p)
    # same vertices listed in a shuffled order give the same value per position
    perm = rng.permutation(p.graph.n_vertices)
    pts = p.graph.positions[perm]
    known = dict(zip(p.graph.positions[p.known_mask], p.known_values))
    F2 = interpolate(problem(list(pts), known))
    np.testing.assert_allclose(F2, F, atol=1e-10)
