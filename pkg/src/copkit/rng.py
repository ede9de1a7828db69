"""SplitMix64 pseudorandom generator.

The sequential generator adds the golden-ratio increment to a 64-bit state
and passes the new state through a fixed mixing function.  Because the
n-th output depends only on ``seed + n * GOLDEN``, the same stream can be
produced in bulk with numpy, which is what :func:`uniform_stream` does.
Outputs are bit-identical across platforms.
"""
import numpy as np

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
_MUL1 = 0xBF58476D1CE4E5B9
_MUL2 = 0x94D049BB133111EB


def _mix(z):
    z = ((z ^ (z >> 30)) * _MUL1) & MASK64
    z = ((z ^ (z >> 27)) * _MUL2) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """Scalar reference implementation."""

    def __init__(self, seed):
        self.state = seed & MASK64

    def next_u64(self):
        self.state = (self.state + GOLDEN) & MASK64
        return _mix(self.state)

    def next_float(self):
        """Uniform double in [0, 1) built from the top 53 bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))


def u64_stream(seed, count, start=0):
    """Outputs ``start .. start+count-1`` of the generator seeded with ``seed``."""
    with np.errstate(over="ignore"):
        counter = np.arange(start + 1, start + count + 1, dtype=np.uint64)
        z = np.uint64(seed & MASK64) + counter * np.uint64(GOLDEN)
        z = (z ^ (z >> np.uint64(30))) * np.uint64(_MUL1)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(_MUL2)
        return z ^ (z >> np.uint64(31))


def uniform_stream(seed, count, start=0):
    return (u64_stream(seed, count, start) >> np.uint64(11)).astype(np.float64) * (1.0 / (1 << 53))
