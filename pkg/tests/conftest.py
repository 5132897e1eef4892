import pytest
from src.fem import gauss_rule
from src.mesh import build_dof_map, build_uniform_mesh
from src.problem import example1_spec

@pytest.fixture
def mesh4():
    return build_uniform_mesh(4)

@pytest.fixture
def mesh8():
    return build_uniform_mesh(8)

@pytest.fixture
def dofs8(mesh8):
    return build_dof_map(mesh8)

@pytest.fixture
def rule3():
    return gauss_rule(3)

@pytest.fixture
def example1():
    return example1_spec(T=1.0)
