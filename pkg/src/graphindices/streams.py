"""Reproducible independent random streams from a single master seed.

Every stochastic routine in the package draws from a generator obtained
via :func:`substream`. The stream for a given ``(master_seed, *path)`` is
a pure function of its arguments, so results never depend on execution
order or on how work is split across processes.

Lane conventions (first path element):

* ``(0, m)``       sample ``m`` of an ensemble run
* ``(1,)``         connectivity calibration inside a run
* ``(2, g, m)``    sample ``m`` at grid point ``g`` of a sweep
* ``(3, m)``       validation ensembles (CLI ``calibrate``)
"""

from __future__ import annotations

import numpy as np

LANE_SAMPLES = 0
LANE_CALIBRATION = 1
LANE_SWEEP = 2
LANE_VALIDATION = 3


def substream(master_seed: int, *path: int) -> np.random.Generator:
    """Return the generator for one derivation path under a master seed.

    The mixing is numpy's SeedSequence hash of ``(master_seed, path)``;
    distinct paths give statistically independent streams.
    """
    seq = np.random.SeedSequence(master_seed, spawn_key=tuple(path))
    return np.random.Generator(np.random.PCG64(seq))
