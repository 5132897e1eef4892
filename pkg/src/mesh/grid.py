"""Uniform partition of an axis-aligned rectangle into m x m bilinear elements."""
from __future__ import annotations
from dataclasses import dataclass
import numpy as np
from ..common.exceptions import InvalidArgumentError
from ..common.logging import get_logger

log = get_logger("mesh")

@dataclass(frozen=True)
class Rectangle:
    ax: float = 0.0
    bx: float = 1.0
    ay: float = 0.0
    by: float = 1.0

    @property
    def lx(self) -> float:
        return self.bx - self.ax

    @property
    def ly(self) -> float:
        return self.by - self.ay

UNIT_SQUARE = Rectangle()

def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a

@dataclass(frozen=True, eq=False)
class Mesh:
    """Node k = j*(m+1) + i sits at (ax + i*hx, ay + j*hy); element e = j*m + i.

    Element corners are listed counterclockwise starting at the lower-left node,
    matching the local numbering of the reference bilinear basis.
    """
    m: int
    domain: Rectangle
    nodes: np.ndarray          # (m+1)^2 x 2
    elements: np.ndarray       # m^2 x 4
    boundary_mask: np.ndarray  # (m+1)^2 bool

    @property
    def hx(self) -> float:
        return self.domain.lx / self.m

    @property
    def hy(self) -> float:
        return self.domain.ly / self.m

    @property
    def h(self) -> float:
        return max(self.hx, self.hy)

    @property
    def n_nodes(self) -> int:
        return (self.m + 1) ** 2

    @property
    def n_elements(self) -> int:
        return self.m * self.m

    @property
    def n_interior(self) -> int:
        return (self.m - 1) ** 2

    def node_index(self, i: int, j: int) -> int:
        return j * (self.m + 1) + i

    def element_origins(self) -> np.ndarray:
        """Lower-left corner of every element, shape (E, 2)."""
        return self.nodes[self.elements[:, 0]]

def build_uniform_mesh(m: int, domain: Rectangle = UNIT_SQUARE) -> Mesh:
    if int(m) != m or m < 1:
        raise InvalidArgumentError(f"mesh subdivisions must be a positive integer, got {m!r}")
    if not (domain.lx > 0 and domain.ly > 0):
        raise InvalidArgumentError(f"degenerate domain {domain}")
    m = int(m)

    idx = np.arange(m + 1)
    xs = domain.ax + idx * (domain.lx / m)
    ys = domain.ay + idx * (domain.ly / m)
    X, Y = np.meshgrid(xs, ys)  # row j = y index, i fastest
    nodes = np.column_stack([X.ravel(), Y.ravel()])

    I, J = np.meshgrid(np.arange(m), np.arange(m))
    ll = (J * (m + 1) + I).ravel()
    elements = np.column_stack([ll, ll + 1, ll + m + 2, ll + m + 1])

    ii, jj = np.meshgrid(idx, idx)
    boundary = ((ii == 0) | (ii == m) | (jj == 0) | (jj == m)).ravel()

    log.debug(f"uniform mesh m={m} nodes={nodes.shape[0]} elements={elements.shape[0]}")
    return Mesh(m=m, domain=domain, nodes=_frozen(nodes), elements=_frozen(elements),
                boundary_mask=_frozen(boundary))
