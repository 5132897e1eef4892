import numpy as np
import pytest
from src.common.exceptions import InvalidArgumentError
from src.fem import ElementQuadrature, basis_eval, gauss_rule, reference_values
from src.mesh import build_uniform_mesh

CORNERS = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]

def test_nodal_property():
    for i in range(4):
        for j, pt in enumerate(CORNERS):
            value, _ = basis_eval(i, pt)
            assert value == pytest.approx(1.0 if i == j else 0.0)

def test_reference_gradient_at_origin():
    _, (dxi, deta) = basis_eval(0, (0.0, 0.0))
    assert dxi == pytest.approx(-1.0)
    assert deta == pytest.approx(-1.0)
    _, (dxi, _) = basis_eval(0, (0.5, 0.5))
    assert dxi == pytest.approx(-0.5)

def test_partition_of_unity():
    pts = np.random.default_rng(0).random((50, 2))
    assert reference_values(pts).sum(axis=1) == pytest.approx(np.ones(50))

def test_bad_local_index():
    with pytest.raises(InvalidArgumentError):
        basis_eval(4, (0.5, 0.5))

def test_weights_sum_to_one():
    for n in (1, 2, 3, 4):
        assert gauss_rule(n).weights.sum() == pytest.approx(1.0)

@pytest.mark.parametrize("p,q", [(0, 0), (1, 2), (5, 0), (3, 5), (5, 5)])
def test_three_point_rule_exact_to_degree_five(p, q):
    rule = gauss_rule(3)
    xi, eta = rule.points[:, 0], rule.points[:, 1]
    approx = np.sum(rule.weights * xi ** p * eta ** q)
    assert approx == pytest.approx(1.0 / ((p + 1) * (q + 1)), rel=1e-13)

def test_element_quadrature_integrates_over_domain():
    mesh = build_uniform_mesh(5)
    eq = ElementQuadrature.build(mesh, gauss_rule(3))
    assert eq.x.shape == (25, 9)
    assert eq.integrate(np.ones_like(eq.x)) == pytest.approx(1.0)
    assert eq.integrate(eq.x ** 2 * eq.y) == pytest.approx(1.0 / 6.0)
