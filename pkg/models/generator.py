"""
Reproducible random streams and sample generation
"""

from dataclasses import dataclass

import numpy as np

from estimators.sample import AngleSample
from kernelmath.fejer import wrap_angle


@dataclass(frozen=True)
class RngStream:
    """
    Counter-based stream identified by (master_seed, stream_id).

    The same pair yields the same draws regardless of process or thread scheduling.
    """
    master_seed: int
    stream_id: int

    def generator(self):
        """Fresh numpy Generator positioned at the start of this stream."""
        seed_sequence = np.random.SeedSequence(entropy=self.master_seed, spawn_key=(self.stream_id,))
        return np.random.Generator(np.random.Philox(seed_sequence))


def as_generator(rng):
    if isinstance(rng, RngStream):
        return rng.generator()
    if isinstance(rng, np.random.Generator):
        return rng
    raise TypeError(f"expected RngStream or numpy Generator, got {type(rng).__name__}")


def sample(model, n, rng):
    """
    Draw an i.i.d. sample.

    Args:
        model: CircularModel
        n: Sample size, n ≥ 1
        rng: RngStream, or a numpy Generator to continue an existing stream

    Returns:
        Unweighted AngleSample
    """
    if int(n) != n or n < 1:
        raise ValueError(f"sample size must be a positive integer, got {n!r}")
    return AngleSample(model.draw(int(n), as_generator(rng)))


def round_to_step(sample_, step):
    """Observations quantized to the nearest multiple of step."""
    return AngleSample(wrap_angle(step * np.round(sample_.angles / step)),
                       None if sample_.unit_weights else sample_.weights)
