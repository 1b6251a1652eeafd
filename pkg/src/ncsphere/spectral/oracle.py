"""Numeric clock-shift model of the rational deformed sphere.

For ``θ = p/q`` and ``q | N`` the torus generators act on ``C^N`` as the clock
``C = diag(λ^j)`` and the shift ``S e_j = e_{j+1}``, so ``CS = λSC``.  Angle
functions are evaluated at a point ``(φ, ψ)``; spin factors use the same
4×4 matrices as the symbolic side.

Derivatives in this module are computed spectrally from point evaluations
only: every quantity is a trigonometric polynomial in the torus-action
parameters and in the angles, so sampling on a 16-point circle and
differentiating the discrete Fourier series is exact up to rounding.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from ..algebra.hom import torus_embed
from ..algebra.ncpoly import NCPoly
from ..algebra.presentation import sphere_theta, torus_theta
from ..algebra.trig import TrigCoeff
from ..chains import TensorChain
from ..clifford import CliffordElement, spin_rep_m2
from ..errors import PreconditionError, UnsupportedKindError

__all__ = ["ClockShiftOracle", "parse_theta", "clock_shift_oracle"]

_SAMPLES = 16


def parse_theta(theta) -> Fraction:
    """Accept a Fraction, an int or ``"p/q"``; floats are rejected."""
    if isinstance(theta, Fraction):
        return theta
    if isinstance(theta, int):
        return Fraction(theta)
    if isinstance(theta, str):
        return Fraction(theta)
    raise UnsupportedKindError("the clock-shift model needs a rational θ = p/q")


def _spectral_derivative(fn) -> np.ndarray:
    """``d/dx fn(x)`` at 0 for a trigonometric polynomial ``fn`` of degree < 8."""
    xs = 2 * np.pi * np.arange(_SAMPLES) / _SAMPLES
    vals = np.array([fn(x) for x in xs])
    coeffs = np.fft.fft(vals, axis=0) / _SAMPLES
    freqs = np.fft.fftfreq(_SAMPLES, d=1.0 / _SAMPLES)
    freqs[_SAMPLES // 2] = 0  # Nyquist term is absent for degree < 8
    shape = (-1,) + (1,) * (vals.ndim - 1)
    return np.sum(coeffs * (1j * freqs).reshape(shape), axis=0)


class ClockShiftOracle:
    """Dense-matrix evaluator for torus and sphere expressions."""

    def __init__(self, N: int = 5, theta=Fraction(1, 5)):
        theta = parse_theta(theta)
        if N % theta.denominator:
            raise PreconditionError(f"N = {N} is not a multiple of q = {theta.denominator}")
        self.N = N
        self.theta = theta
        self.lam = np.exp(2j * np.pi * float(theta))
        j = np.arange(N)
        self.C = np.diag(self.lam**j)
        self.S = np.roll(np.eye(N), 1, axis=0)
        self.gammas = spin_rep_m2().numeric()

    # -- algebra elements ---------------------------------------------
    def generators(self, s1: float = 0.0, s2: float = 0.0) -> dict:
        """Images of ``u, u*, v, v*`` twisted by the torus action ``(s1, s2)``."""
        u = np.exp(1j * s1) * self.C
        v = np.exp(1j * s2) * self.S
        return {"u": u, "u*": u.conj().T, "v": v, "v*": v.conj().T}

    def word(self, w, s1: float = 0.0, s2: float = 0.0) -> np.ndarray:
        g = self.generators(s1, s2)
        out = np.eye(self.N, dtype=complex)
        for name, p in w:
            out = out @ np.linalg.matrix_power(g[name], p)
        return out

    def coefficient(self, c, phi: float, psi: float) -> complex:
        if isinstance(c, TrigCoeff):
            return c.evaluate(self.lam, phi, psi)
        return c.evaluate(self.lam)

    def torus(self, f: NCPoly, phi: float, psi: float, s1: float = 0.0, s2: float = 0.0) -> np.ndarray:
        if f.pres == sphere_theta():
            f = torus_embed()(f)
        if f.pres != torus_theta():
            raise PreconditionError(f"cannot evaluate elements of {f.pres.name}")
        out = np.zeros((self.N, self.N), dtype=complex)
        for w, c in f.terms.items():
            out += self.coefficient(c, phi, psi) * self.word(w, s1, s2)
        return out

    def relation_residual(self) -> float:
        """Largest entry of ``uv - λvu``, ``uu* - 1`` and ``vv* - 1``."""
        g = self.generators()
        eye = np.eye(self.N)
        res = [
            g["u"] @ g["v"] - self.lam * g["v"] @ g["u"],
            g["u"] @ g["u*"] - eye,
            g["u*"] @ g["u"] - eye,
            g["v"] @ g["v*"] - eye,
            g["v*"] @ g["v"] - eye,
        ]
        return max(float(np.abs(r).max()) for r in res)

    def matrix(self, m: list, phi: float, psi: float, s1: float = 0.0, s2: float = 0.0) -> np.ndarray:
        """Block matrix ``[f_ij]`` of size ``rN``."""
        return np.block([[self.torus(x, phi, psi, s1, s2) for x in row] for row in m])

    def spinor(self, x: CliffordElement, phi: float, psi: float) -> np.ndarray:
        """``Σ_S γ_S ⊗ f_S`` as a ``4N × 4N`` matrix."""
        out = np.zeros((4 * self.N, 4 * self.N), dtype=complex)
        for s, f in x.terms.items():
            g = np.eye(4, dtype=complex)
            for i in s:
                g = g @ self.gammas[i - 1]
            out += np.kron(g, self.torus(f, phi, psi))
        return out

    # -- Dirac commutators from point values only --------------------
    def derivatives(self, f: NCPoly, phi: float, psi: float) -> tuple:
        """Numeric ``(δ₁f, δ₂f, ∂_φ f, ∂_ψ f)``."""
        ev = lambda **kw: self.torus(f, kw.get("phi", phi), kw.get("psi", psi), kw.get("s1", 0.0), kw.get("s2", 0.0))
        d1 = -1j * _spectral_derivative(lambda x: ev(s1=x))
        d2 = -1j * _spectral_derivative(lambda x: ev(s2=x))
        dp = _spectral_derivative(lambda x: ev(phi=phi + x))
        ds = _spectral_derivative(lambda x: ev(psi=psi + x))
        return d1, d2, dp, ds

    def frame_coefficients(self, phi: float, psi: float) -> tuple:
        cf, sf, cp = np.cos(phi), np.sin(phi), np.cos(psi)
        return (1 / (cf * cp), 1 / (sf * cp), 1j / cp, 1j)

    def dirac(self, f: NCPoly, phi: float, psi: float) -> np.ndarray:
        """``[D, f]`` as a ``4N × 4N`` matrix (spin ⊗ algebra)."""
        parts = self.derivatives(f, phi, psi)
        coef = self.frame_coefficients(phi, psi)
        out = np.zeros((4 * self.N, 4 * self.N), dtype=complex)
        for k in range(4):
            out += coef[k] * np.kron(self.gammas[k], parts[k])
        return out

    # -- the quartic -------------------------------------------------
    def quartic(self, e: list, phi: float, psi: float) -> np.ndarray:
        """``(1/r) Tr_r ((e - 1/2)[D, e]⁴)`` as a ``4N × 4N`` matrix."""
        r = len(e)
        N = self.N
        blk = 4 * N
        de = np.zeros((r * blk, r * blk), dtype=complex)
        ee = np.zeros((r * blk, r * blk), dtype=complex)
        eye4 = np.eye(4)
        for i in range(r):
            for j in range(r):
                de[i * blk : (i + 1) * blk, j * blk : (j + 1) * blk] = self.dirac(e[i][j], phi, psi)
                val = self.torus(e[i][j], phi, psi)
                if i == j:
                    val = val - 0.5 * np.eye(N)
                ee[i * blk : (i + 1) * blk, j * blk : (j + 1) * blk] = np.kron(eye4, val)
        d2 = de @ de
        full = ee @ d2 @ d2
        out = np.zeros((blk, blk), dtype=complex)
        for i in range(r):
            out += full[i * blk : (i + 1) * blk, i * blk : (i + 1) * blk]
        return out / r

    def gamma5(self) -> np.ndarray:
        return np.kron(self.gammas[4], np.eye(self.N))

    def pi_chain(self, chain: TensorChain, phi: float, psi: float) -> np.ndarray:
        """``Σ a0 [D, a1] ... [D, an]`` evaluated numerically."""
        cache: dict = {}

        def comm(w):
            if w not in cache:
                cache[w] = self.dirac(NCPoly.from_word(chain.pres, w), phi, psi)
            return cache[w]

        out = np.zeros((4 * self.N, 4 * self.N), dtype=complex)
        for tensor, c in chain.terms.items():
            a0 = self.torus(NCPoly.from_word(chain.pres, tensor[0], c), phi, psi)
            x = np.kron(np.eye(4), a0)
            for w in tensor[1:]:
                x = x @ comm(w)
            out += x
        return out


def clock_shift_oracle(N: int = 5, theta=Fraction(1, 5)) -> ClockShiftOracle:
    return ClockShiftOracle(N, theta)
