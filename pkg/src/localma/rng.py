"""Deterministic counter-based random number generation.

Uniform draws come from the splitmix64 output function applied to a
64-bit counter, so any draw is a pure function of (key, counter index).
Normals are produced from uniform pairs with the Box-Muller transform.
Replications and sub-streams get independent keys via `derive_key`,
which makes every sampled array reproducible regardless of worker
count or execution order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_MASK = np.uint64(0xFFFFFFFFFFFFFFFF)
_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)


def _finalize(z: np.ndarray) -> np.ndarray:
    """splitmix64 finalizer on an array of uint64 states."""
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


def _raw(key: int, start: int, count: int) -> np.ndarray:
    """uint64 outputs for counters start..start+count-1 under `key`."""
    with np.errstate(over="ignore"):
        counters = np.arange(start, start + count, dtype=np.uint64)
        state = np.uint64(key & 0xFFFFFFFFFFFFFFFF) + (counters + np.uint64(1)) * _GOLDEN
        return _finalize(state)


def derive_key(key: int, index: int) -> int:
    """Mix a parent key with a stream/replication index into a child key.

    Defined as finalize(finalize(key) xor ((index+1) * golden)), all
    modulo 2**64. Child keys for distinct indices are statistically
    independent streams of the parent.
    """
    with np.errstate(over="ignore"):
        k = _finalize(np.uint64(key & 0xFFFFFFFFFFFFFFFF))
        i = (np.uint64(index & 0xFFFFFFFFFFFFFFFF) + np.uint64(1)) * _GOLDEN
        return int(_finalize(k ^ i))


@dataclass
class CounterRng:
    """Splittable counter-based generator; state is (key, counter)."""

    key: int
    counter: int = 0

    def uniforms(self, count: int) -> np.ndarray:
        """`count` doubles in the open interval (0, 1)."""
        out = _raw(self.key, self.counter, count)
        self.counter += count
        # top 53 bits, offset by half a ulp so 0 and 1 are unreachable
        return ((out >> np.uint64(11)).astype(np.float64) + 0.5) * 2.0**-53

    def uniform(self) -> float:
        return float(self.uniforms(1)[0])

    def normals(self, count: int) -> np.ndarray:
        """`count` standard-normal doubles via Box-Muller pairs."""
        pairs = (count + 1) // 2
        u = self.uniforms(2 * pairs)
        u1, u2 = u[:pairs], u[pairs:]
        radius = np.sqrt(-2.0 * np.log(u1))
        angle = 2.0 * np.pi * u2
        out = np.empty(2 * pairs)
        out[0::2] = radius * np.cos(angle)
        out[1::2] = radius * np.sin(angle)
        return out[:count]

    def normal(self) -> float:
        return float(self.normals(1)[0])


def standard_normal(rng: CounterRng) -> float:
    """One N(0, 1) draw, advancing the generator state."""
    return rng.normal()
