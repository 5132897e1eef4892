import numpy as np
import pytest
from src.common.exceptions import ConfigError, InvalidArgumentError, UnsupportedError
from src.problem import (
    PlaneWaveSolution,
    ProblemSpec,
    eval_exact,
    eval_exact_gradient,
    example1_spec,
    get_problem,
    linear_mode_spec,
    manufactured_source,
)

def test_example1_center_value(example1):
    assert example1.u_exact(0.5, 0.5, 0.0) == pytest.approx(-0.026009 - 0.056831j, abs=1e-6)

def test_example1_vanishes_on_boundary(example1):
    s = np.linspace(0, 1, 11)
    for x, y in [(s, 0 * s), (s, 0 * s + 1), (0 * s, s), (0 * s + 1, s)]:
        assert np.abs(example1.u_exact(x, y, 0.3)) == pytest.approx(np.zeros(11))

def test_modulus_independent_of_time_and_periodic(example1):
    x, y = 0.3, 0.7
    a = example1.u_exact(x, y, 0.0)
    assert abs(example1.u_exact(x, y, 0.9)) == pytest.approx(abs(a))
    assert example1.u_exact(x, y, 2 * np.pi) == pytest.approx(a)

def _fd_source(spec, x, y, t, d=1e-4):
    u = spec.u_exact
    ut = (u(x, y, t + d) - u(x, y, t - d)) / (2 * d)
    lap = (u(x + d, y, t) + u(x - d, y, t) + u(x, y + d, t) + u(x, y - d, t) - 4 * u(x, y, t)) / d ** 2
    uu = u(x, y, t)
    return ut - spec.diffusion * lap + spec.reaction * abs(uu) ** 2 * uu - spec.gamma * uu

@pytest.mark.parametrize("x,y,t", [(0.2, 0.3, 0.1), (0.5, 0.5, 0.5), (0.8, 0.4, 0.9)])
def test_source_matches_finite_differences(example1, x, y, t):
    assert example1.source(x, y, t) == pytest.approx(_fd_source(example1, x, y, t), abs=1e-6)

@pytest.mark.parametrize("x,y", [(0.2, 0.3), (0.6, 0.9)])
def test_gradient_matches_finite_differences(example1, x, y):
    d, t = 1e-5, 0.4
    u = example1.u_exact
    gx, gy = example1.grad_u_exact(x, y, t)
    assert gx == pytest.approx((u(x + d, y, t) - u(x - d, y, t)) / (2 * d), abs=1e-7)
    assert gy == pytest.approx((u(x, y + d, t) - u(x, y - d, t)) / (2 * d), abs=1e-7)

def test_zero_amplitude_gives_zero_source():
    spec = ProblemSpec(nu=1, eta=1, kappa=1, zeta=1, gamma=1, f=lambda s: s,
                       exact=PlaneWaveSolution(amplitude=0.0))
    g = manufactured_source(spec)
    assert g(np.array([0.3, 0.6]), np.array([0.2, 0.9]), 0.5) == pytest.approx(np.zeros(2))

def test_linear_mode_is_homogeneous():
    spec = linear_mode_spec()
    assert spec.is_linear
    assert spec.source_g is None
    # the standing mode satisfies the homogeneous equation
    g = manufactured_source(spec)
    assert g(0.3, 0.4, 0.7) == pytest.approx(0.0, abs=1e-12)

def test_example1_is_nonlinear(example1):
    assert not example1.is_linear
    assert example1.diffusion == 1 + 1j
    assert example1.reaction == 1 + 1j

def test_validation():
    with pytest.raises(InvalidArgumentError):
        ProblemSpec(nu=0, eta=0, kappa=0, zeta=0, gamma=0, initial=lambda x, y: x)
    with pytest.raises(InvalidArgumentError):
        ProblemSpec(nu=1, eta=0, kappa=-1, zeta=0, gamma=0, initial=lambda x, y: x)
    with pytest.raises(InvalidArgumentError):
        ProblemSpec(nu=1, eta=0, kappa=0, zeta=0, gamma=0)

def test_exact_required_for_evaluation():
    spec = ProblemSpec(nu=1, eta=0, kappa=0, zeta=0, gamma=0, initial=lambda x, y: x)
    with pytest.raises(UnsupportedError):
        eval_exact(spec, 0.5, 0.5, 0.0)

def test_registry():
    assert get_problem("example1", T=0.5).T == 0.5
    assert get_problem("linear_mode").name == "linear_mode"
    with pytest.raises(ConfigError):
        get_problem("example9")
    assert example1_spec().name == "example1"

def test_exact_gradient_evaluation(example1):
    gx, gy = eval_exact_gradient(example1, 0.0, 0.0, 0.0)
    assert gx == pytest.approx(0.0, abs=1e-14)
    assert gy == pytest.approx(0.0, abs=1e-14)
    assert eval_exact_gradient(example1, 0.3, 0.6, 0.2) == pytest.approx(example1.grad_u_exact(0.3, 0.6, 0.2))
