import math
import numpy as np
import pytest
from src.common.exceptions import InvalidArgumentError
from src.errors import convergence_order, h1_error, l2_error, q1_h1_norm, superclose_error
from src.fem import assemble_mass, assemble_stiffness
from src.projections import interpolate
from src.stepper import FemField

def u(x, y, t):
    return x * y * (1 - x) * (1 - y)

def grad(x, y, t):
    return (1 - 2 * x) * y * (1 - y), x * (1 - x) * (1 - 2 * y)

def test_error_against_zero_field_is_analytic_norm(mesh8, dofs8, rule3):
    zero = FemField.zeros(dofs8.n_dofs)
    assert l2_error(u, zero, mesh8, 0.0, rule3, dofs=dofs8) == pytest.approx(1 / 30, rel=1e-12)
    assert h1_error(u, grad, zero, mesh8, 0.0, rule3, dofs=dofs8) == pytest.approx(math.sqrt(21) / 30, rel=1e-12)

def test_superclose_of_interpolant_is_zero(mesh8, dofs8):
    Ih = interpolate(lambda x, y: u(x, y, 0.0), mesh8, dofs8)
    assert superclose_error(u, Ih, mesh8, dofs8, 0.0) == 0.0

def test_field_needs_dof_map(mesh8, rule3):
    with pytest.raises(InvalidArgumentError):
        h1_error(u, grad, FemField.zeros(49), mesh8, 0.0, rule3)

def test_q1_norm_is_a_metric(mesh8, dofs8):
    M, K = assemble_mass(mesh8, dofs8), assemble_stiffness(mesh8, dofs8)
    rng = np.random.default_rng(0)
    a = rng.standard_normal(dofs8.n_dofs) + 1j * rng.standard_normal(dofs8.n_dofs)
    b = rng.standard_normal(dofs8.n_dofs) + 1j * rng.standard_normal(dofs8.n_dofs)
    assert q1_h1_norm(np.zeros(dofs8.n_dofs), M, K) == 0.0
    assert q1_h1_norm(a, M, K) == pytest.approx(q1_h1_norm(-a, M, K))
    assert q1_h1_norm(a + b, M, K) <= q1_h1_norm(a, M, K) + q1_h1_norm(b, M, K) + 1e-14

def test_q1_norm_matches_quadrature(mesh8, dofs8, rule3):
    c = np.random.default_rng(3).standard_normal(dofs8.n_dofs) + 0.25j
    zero = lambda x, y, t: np.zeros_like(x)
    zero_grad = lambda x, y, t: (np.zeros_like(x), np.zeros_like(y))
    quad = h1_error(zero, zero_grad, FemField(c), mesh8, 0.0, rule3, dofs=dofs8)
    exact = q1_h1_norm(c, assemble_mass(mesh8, dofs8), assemble_stiffness(mesh8, dofs8))
    assert quad == pytest.approx(exact, rel=1e-12)

def test_convergence_order():
    assert convergence_order(4.0, 1.0) == pytest.approx(2.0)
    assert convergence_order(2.8420e-03, 5.8402e-04) == pytest.approx(2.2828, abs=1e-4)
    assert convergence_order(9.0, 1.0, ratio=3.0) == pytest.approx(2.0)
    with pytest.raises(InvalidArgumentError):
        convergence_order(0.0, 1.0)
    with pytest.raises(InvalidArgumentError):
        convergence_order(1.0, 0.5, ratio=1.0)
