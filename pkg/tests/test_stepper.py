import numpy as np
import pytest
import scipy.sparse.linalg as spla
from src.common.exceptions import InvalidArgumentError
from src.errors import convergence_order, h1_error, superclose_error
from src.fem import assemble_mass, assemble_stiffness, gauss_rule
from src.mesh import build_dof_map, build_uniform_mesh
from src.problem import ProblemSpec, example1_spec, linear_mode_spec
from src.stepper import CrankNicolsonStepper, FemField, StepperConfig, initial_field, run, snapshot_steps

def _heat(initial, eta=0.0, gamma=0.0):
    return ProblemSpec(nu=1.0, eta=eta, kappa=0.0, zeta=0.0, gamma=gamma, initial=initial)

def _stepper(spec, m, tau, n_steps, **kw):
    mesh = build_uniform_mesh(m)
    dofs = build_dof_map(mesh)
    return CrankNicolsonStepper(spec, mesh, dofs, StepperConfig(tau=tau, n_steps=n_steps, **kw))

def test_single_dof_amplification():
    s = _stepper(_heat(lambda x, y: np.ones_like(x)), m=2, tau=0.5, n_steps=2)
    states = list(s.trajectory())
    assert [u.t for u in states] == [0.0, 0.5, 1.0]
    assert states[0].coefficients[0] == pytest.approx(1.0)
    assert states[1].coefficients[0] == pytest.approx(-5 / 7)
    assert states[2].coefficients[0] == pytest.approx(25 / 49)

def test_initial_field_is_nodal_interpolant(example1):
    mesh = build_uniform_mesh(2)
    U0 = initial_field(example1, mesh, build_dof_map(mesh))
    assert U0.coefficients[0] == pytest.approx(example1.u_exact(0.5, 0.5, 0.0))

def test_zero_stays_zero_for_homogeneous_nonlinear_problem():
    spec = ProblemSpec(nu=1.0, eta=1.0, kappa=1.0, zeta=1.0, gamma=1.0, f=lambda s: s,
                       initial=lambda x, y: np.zeros_like(x))
    s = _stepper(spec, m=6, tau=0.1, n_steps=4)
    (U,) = s.run([0.4])
    assert np.all(U.coefficients == 0)

def test_linear_superposition():
    rng = np.random.default_rng(0)
    spec = _heat(lambda x, y: np.zeros_like(x), eta=0.5, gamma=0.25)
    s = _stepper(spec, m=8, tau=1 / 8, n_steps=8)
    a = FemField(rng.standard_normal(s.n_dofs) + 1j * rng.standard_normal(s.n_dofs))
    b = FemField(rng.standard_normal(s.n_dofs) + 1j * rng.standard_normal(s.n_dofs))
    (Ua,) = s.run([1.0], initial=a)
    (Ub,) = s.run([1.0], initial=b)
    (Uab,) = s.run([1.0], initial=FemField(a.coefficients + b.coefficients))
    assert np.max(np.abs(Uab.coefficients - Ua.coefficients - Ub.coefficients)) < 1e-10

def test_mass_norm_does_not_grow_without_source():
    spec = _heat(lambda x, y: np.sin(np.pi * x) * np.sin(2 * np.pi * y) + 0j, eta=2.0)
    s = _stepper(spec, m=8, tau=0.1, n_steps=10)
    norms = [s.mass_norm(u) for u in s.trajectory()]
    assert all(b <= a + 1e-14 for a, b in zip(norms, norms[1:]))

def test_cached_factorization_matches_direct_recurrence():
    spec = linear_mode_spec()
    s = _stepper(spec, m=8, tau=0.125, n_steps=4)
    states = list(s.trajectory())
    M, K = assemble_mass(s.mesh, s.dofs), assemble_stiffness(s.mesh, s.dofs)
    A = (M / 0.125 + 0.5 * spec.diffusion * K - 0.5 * spec.gamma * M).tocsc()
    a = states[0].coefficients
    for u in states[1:]:
        a = spla.spsolve(A, (2 / 0.125) * (M @ a) - A @ a)
        assert u.coefficients == pytest.approx(a, rel=1e-10, abs=1e-12)

def test_one_step_run_returns_corrector(example1):
    mesh = build_uniform_mesh(4)
    dofs = build_dof_map(mesh)
    s = CrankNicolsonStepper(example1, mesh, dofs, StepperConfig(tau=0.25, n_steps=1))
    (U1,) = s.run([0.25])
    U0 = initial_field(example1, mesh, dofs)
    expected = s.corrector_step(U0, s.predictor_step(U0))
    assert U1.coefficients == pytest.approx(expected.coefficients)
    assert U1.t == pytest.approx(0.25)

def test_snapshot_times_must_be_on_the_grid():
    assert snapshot_steps([0.0, 0.25, 1.0], 0.25, 4) == [0, 1, 4]
    with pytest.raises(InvalidArgumentError):
        snapshot_steps([0.3], 0.25, 4)
    with pytest.raises(InvalidArgumentError):
        snapshot_steps([1.25], 0.25, 4)

def test_config_validation():
    with pytest.raises(InvalidArgumentError):
        StepperConfig(tau=0.0, n_steps=1)
    with pytest.raises(InvalidArgumentError):
        StepperConfig(tau=0.1, n_steps=1, source_rule="left")
    with pytest.raises(InvalidArgumentError):
        StepperConfig.from_final_time(1.0, 0.3)
    assert StepperConfig.from_final_time(1.0, 1 / 12).n_steps == 12

def test_extrapolated_step_needs_history(example1):
    s = _stepper(example1, m=4, tau=0.25, n_steps=4)
    U0 = initial_field(example1, s.mesh, s.dofs)
    with pytest.raises(InvalidArgumentError):
        s.cn_step(U0, U0, 1)
    with pytest.raises(InvalidArgumentError):
        s.predictor_step(FemField.zeros(3))

def test_nonlinear_residuals_within_tolerance(example1):
    s = _stepper(example1, m=8, tau=0.125, n_steps=8)
    s.run([1.0])
    assert len(s.reports) == 9  # predictor + corrector + 7 extrapolated steps
    assert max(r.relative_residual for r in s.reports) <= 1e-10

@pytest.mark.parametrize("method", ["direct", "bicgstab"])
def test_solver_methods_agree(example1, method):
    s = _stepper(example1, m=8, tau=0.125, n_steps=4, solver_method=method)
    ref = _stepper(example1, m=8, tau=0.125, n_steps=4)
    (U,) = s.run([0.5])
    (V,) = ref.run([0.5])
    assert np.max(np.abs(U.coefficients - V.coefficients)) < 1e-7

def test_average_source_rule_is_close_to_midpoint(example1):
    mid = _stepper(example1, m=8, tau=0.125, n_steps=4)
    avg = _stepper(example1, m=8, tau=0.125, n_steps=4, source_rule="average")
    (U,) = mid.run([0.5])
    (V,) = avg.run([0.5])
    assert 0 < np.max(np.abs(U.coefficients - V.coefficients)) < 1e-2

def test_example1_error_on_ten_elements(example1):
    # reference size M = 20: 10 elements per axis, tau = 1/20
    mesh = build_uniform_mesh(10)
    dofs = build_dof_map(mesh)
    (U,) = run(example1, mesh, dofs, StepperConfig(tau=0.05, n_steps=10), [0.5])
    err = h1_error(example1.u_exact, example1.grad_u_exact, U, mesh, 0.5, gauss_rule(3), dofs=dofs)
    assert err == pytest.approx(2.6354e-02, rel=0.05)

def test_example1_convergence_orders(example1):
    h1, sc = [], []
    for m in (8, 16, 32):
        mesh = build_uniform_mesh(m)
        dofs = build_dof_map(mesh)
        (U,) = run(example1, mesh, dofs, StepperConfig(tau=1 / m, n_steps=m // 2), [0.5])
        h1.append(h1_error(example1.u_exact, example1.grad_u_exact, U, mesh, 0.5, gauss_rule(3), dofs=dofs))
        sc.append(superclose_error(example1.u_exact, U, mesh, dofs, 0.5))
    for coarse, fine in zip(h1, h1[1:]):
        assert 0.9 < convergence_order(coarse, fine) < 1.1
    assert convergence_order(sc[1], sc[2]) > 1.6
    assert all(s < e for s, e in zip(sc, h1))

def test_linear_mode_error_decreases():
    spec = linear_mode_spec()
    errs = []
    for m in (8, 16):
        mesh = build_uniform_mesh(m)
        dofs = build_dof_map(mesh)
        (U,) = run(spec, mesh, dofs, StepperConfig(tau=1 / m, n_steps=m), [1.0])
        errs.append(h1_error(spec.u_exact, spec.grad_u_exact, U, mesh, 1.0, gauss_rule(3), dofs=dofs))
    assert errs[0] < 0.5
    assert convergence_order(errs[0], errs[1]) > 0.8
