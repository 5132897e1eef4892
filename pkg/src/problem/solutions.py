"""Closed-form exact solutions with hand-derived derivatives (vectorised over numpy arrays)."""
from __future__ import annotations
from dataclasses import dataclass
from typing import Protocol
import numpy as np
from ..mesh import Rectangle
from ..mesh.grid import UNIT_SQUARE

class ExactSolution(Protocol):
    def value(self, x, y, t): ...
    def gradient(self, x, y, t): ...
    def time_derivative(self, x, y, t): ...
    def laplacian(self, x, y, t): ...

@dataclass(frozen=True)
class PlaneWaveSolution:
    """u = A e^{i(omega t - kx x - ky y)} p(x) q(y), p and q the quadratic bubbles vanishing on the edges."""
    kx: float = 2.0
    ky: float = 2.0
    omega: float = 1.0
    amplitude: float = 1.0
    domain: Rectangle = UNIT_SQUARE

    def _phase(self, x, y, t):
        return self.amplitude * np.exp(1j * (self.omega * t - self.kx * x - self.ky * y))

    def _bubble_x(self, x):
        d = self.domain
        return (x - d.ax) * (d.bx - x), d.ax + d.bx - 2.0 * x

    def _bubble_y(self, y):
        d = self.domain
        return (y - d.ay) * (d.by - y), d.ay + d.by - 2.0 * y

    def value(self, x, y, t):
        p, _ = self._bubble_x(x)
        q, _ = self._bubble_y(y)
        return self._phase(x, y, t) * p * q

    def gradient(self, x, y, t):
        ph = self._phase(x, y, t)
        p, dp = self._bubble_x(x)
        q, dq = self._bubble_y(y)
        ux = ph * (dp - 1j * self.kx * p) * q
        uy = ph * p * (dq - 1j * self.ky * q)
        return ux, uy

    def time_derivative(self, x, y, t):
        return 1j * self.omega * self.value(x, y, t)

    def laplacian(self, x, y, t):
        # (e^{-ikx} p)'' = e^{-ikx} (p'' - 2ik p' - k^2 p), p'' = -2
        ph = self._phase(x, y, t)
        p, dp = self._bubble_x(x)
        q, dq = self._bubble_y(y)
        pxx = -2.0 - 2j * self.kx * dp - self.kx ** 2 * p
        qyy = -2.0 - 2j * self.ky * dq - self.ky ** 2 * q
        return ph * (pxx * q + p * qyy)

@dataclass(frozen=True)
class StandingModeSolution:
    """u = e^{lam t} sin(pi (x-ax)/Lx) sin(pi (y-ay)/Ly)."""
    lam: complex
    domain: Rectangle = UNIT_SQUARE

    @property
    def eigenvalue(self) -> float:
        d = self.domain
        return np.pi ** 2 * (1.0 / d.lx ** 2 + 1.0 / d.ly ** 2)

    def value(self, x, y, t):
        d = self.domain
        return np.exp(self.lam * t) * np.sin(np.pi * (x - d.ax) / d.lx) * np.sin(np.pi * (y - d.ay) / d.ly)

    def gradient(self, x, y, t):
        d = self.domain
        a, b = np.pi * (x - d.ax) / d.lx, np.pi * (y - d.ay) / d.ly
        e = np.exp(self.lam * t)
        return (e * (np.pi / d.lx) * np.cos(a) * np.sin(b),
                e * (np.pi / d.ly) * np.sin(a) * np.cos(b))

    def time_derivative(self, x, y, t):
        return self.lam * self.value(x, y, t)

    def laplacian(self, x, y, t):
        return -self.eigenvalue * self.value(x, y, t)
