"""Uniform periodic grids, DFT wrappers and Fourier-symbol application.

Transform convention: forward sum is unnormalized (numpy's fft), the
inverse carries the 1/n factor.  Grid frequencies are the angular
frequencies 2*pi*k/L for k in {-n/2, ..., n/2 - 1}.
"""

from dataclasses import dataclass, field

import numpy as np


class SymmetryError(ValueError):
    """Spectrum is not conjugate-symmetric but a real field was demanded."""


def _is_power_of_two(n):
    return n >= 1 and (n & (n - 1)) == 0


@dataclass(frozen=True)
class GridSpec:
    """Uniform periodic grid with n points on [origin, origin + length)."""

    n: int
    length: float
    origin: float = 0.0

    def __post_init__(self):
        if self.n < 16 or not _is_power_of_two(self.n):
            raise ValueError(f"n must be a power of two >= 16, got {self.n}")
        if not self.length > 0:
            raise ValueError(f"length must be positive, got {self.length}")

    @classmethod
    def centered(cls, n, length):
        return cls(n=n, length=length, origin=-length / 2)

    @property
    def spacing(self):
        return self.length / self.n

    def points(self):
        return self.origin + self.spacing * np.arange(self.n)

    def frequencies(self):
        """Angular frequencies 2*pi*k/L in fft bin order."""
        return 2 * np.pi * np.fft.fftfreq(self.n, d=self.spacing)


@dataclass
class SampledField:
    grid: GridSpec
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        if v.shape != (self.grid.n,):
            raise ValueError(f"values shape {v.shape} != ({self.grid.n},)")
        if not np.all(np.isfinite(v)):
            raise ValueError("field values must be finite")
        self.values = v

    def copy(self):
        return SampledField(self.grid, self.values.copy())


@dataclass
class Spectrum:
    grid: GridSpec
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=complex)
        if c.shape != (self.grid.n,):
            raise ValueError(f"coeffs shape {c.shape} != ({self.grid.n},)")
        self.coeffs = c


def dft(field):
    """Forward transform (unnormalized sum convention)."""
    return Spectrum(field.grid, np.fft.fft(field.values))


def idft(spec, require_real=True, rtol=1e-10):
    """Inverse transform; rejects non-symmetric spectra when a real field
    is demanded."""
    v = np.fft.ifft(spec.coeffs)
    if require_real:
        scale = np.max(np.abs(v)) or 1.0
        resid = np.max(np.abs(v.imag))
        if resid > rtol * scale:
            raise SymmetryError(
                f"imaginary residue {resid:.3e} exceeds {rtol:.1e} * {scale:.3e}"
            )
        v = v.real
    return SampledField(spec.grid, np.ascontiguousarray(v))


def apply_symbol(field, symbol):
    """Pointwise Fourier multiplier: idft(symbol(freq) * dft(field)).

    `symbol` maps an array of angular frequencies to real values.
    """
    xi = field.grid.frequencies()
    s = np.asarray(symbol(xi), dtype=float)
    if s.shape != xi.shape:
        raise ValueError("symbol must return one value per grid frequency")
    if not np.all(np.isfinite(s)):
        raise ValueError("symbol produced non-finite values")
    coeffs = np.fft.fft(field.values) * s
    return SampledField(field.grid, np.fft.ifft(coeffs).real)


def translate(field, shift):
    """Circular shift by an integer number of cells: result(x) = f(x + shift*dx)."""
    return SampledField(field.grid, np.roll(field.values, -int(shift)))


def grid_norm(field, p):
    """Grid L^p norm with the spacing weight."""
    dx = field.grid.spacing
    if p == np.inf:
        return float(np.max(np.abs(field.values)))
    return float((np.sum(np.abs(field.values) ** p) * dx) ** (1.0 / p))


def inner_product(f, g):
    """Grid inner product sum f*g*dx; fields must share a grid."""
    if f.grid != g.grid:
        raise ValueError("grid mismatch")
    return float(np.sum(f.values * g.values) * f.grid.spacing)
