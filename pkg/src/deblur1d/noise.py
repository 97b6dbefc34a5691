"""Seeded Gaussian measurement noise.

Real measurements pollute the blurred signal with errors whose size scales
with the signal itself, modeled as independent Gaussians of mean zero and
standard deviation epsilon * ||b||.  Library normal generators vary across
platforms and releases, so reproducibility is pinned in-repo: a
splitmix64-initialized xorshift64* stream feeds the Box-Muller transform.
The same (signal, epsilon, seed) triple therefore yields bit-identical
noise everywhere, and the standard-normal stream depends on the seed alone;
epsilon only scales it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .blur import Signal, as_vector

__all__ = ["NoiseSpec", "vector_norm", "standard_normals", "noise_vector", "add_noise"]

_U64 = (1 << 64) - 1


@dataclass(frozen=True)
class NoiseSpec:
    """Relative noise level epsilon >= 0 and the 64-bit stream seed."""

    epsilon: float
    seed: int = 0

    def __post_init__(self):
        eps = float(self.epsilon)
        if not math.isfinite(eps) or eps < 0:
            raise ValueError(f"noise level must be a nonnegative real, got {self.epsilon!r}")
        object.__setattr__(self, "epsilon", eps)
        seed = int(self.seed)
        if not 0 <= seed <= _U64:
            raise ValueError(f"seed must fit in 64 unsigned bits, got {self.seed!r}")
        object.__setattr__(self, "seed", seed)


def vector_norm(v) -> float:
    """Euclidean norm sqrt(sum of squares)."""
    v = as_vector(v)
    return float(np.sqrt(np.sum(v * v)))


def _splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _U64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _U64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _U64
    return x ^ (x >> 31)


def standard_normals(count: int, seed: int) -> np.ndarray:
    """Deterministic standard-normal samples for a 64-bit seed.

    The raw stream is xorshift64* (state seeded through one splitmix64
    step, so seed 0 is fine); each output pair comes from one Box-Muller
    transform with u1 in (0, 1] and u2 in [0, 1).
    """
    count = int(count)
    if count < 0:
        raise ValueError("count must be nonnegative")
    state = _splitmix64(int(seed) & _U64)
    if state == 0:
        state = 0x9E3779B97F4A7C15
    out = np.empty(count)
    i = 0
    while i < count:
        state ^= state >> 12
        state = (state ^ (state << 25)) & _U64
        state ^= state >> 27
        r1 = (state * 0x2545F4914F6CDD1D) & _U64
        state ^= state >> 12
        state = (state ^ (state << 25)) & _U64
        state ^= state >> 27
        r2 = (state * 0x2545F4914F6CDD1D) & _U64
        u1 = ((r1 >> 11) + 1) * 2.0**-53
        u2 = (r2 >> 11) * 2.0**-53
        radius = math.sqrt(-2.0 * math.log(u1))
        angle = 2.0 * math.pi * u2
        out[i] = radius * math.cos(angle)
        if i + 1 < count:
            out[i + 1] = radius * math.sin(angle)
        i += 2
    return out


def noise_vector(b, spec: NoiseSpec) -> np.ndarray:
    """The noise that :func:`add_noise` would add to ``b``.

    The standard-normal stream is drawn once from the seed and then scaled
    by epsilon * ||b||, so holding (b, seed) fixed, the noise for epsilon2
    is exactly (epsilon2/epsilon1) times the noise for epsilon1 whenever
    that ratio is exact in floating point.
    """
    v = as_vector(b)
    if spec.epsilon == 0.0:
        return np.zeros(v.size)
    scale = spec.epsilon * vector_norm(v)
    return scale * standard_normals(v.size, spec.seed)


def add_noise(b: Signal, spec: NoiseSpec) -> Signal:
    """Add mean-zero Gaussian noise of standard deviation epsilon * ||b||."""
    if spec.epsilon == 0.0:
        return Signal(b.grid, b.values.copy())
    return Signal(b.grid, b.values + noise_vector(b, spec))
