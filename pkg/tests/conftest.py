import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)


def random_bispinor(rng, nonzero=True):
    from spinorlab import BiSpinor

    while True:
        dof = rng.uniform(-1.0, 1.0, size=8)
        comps = dof[0::2] + 1j * dof[1::2]
        if not nonzero or np.sum(np.abs(comps) ** 2) >= 1e-6:
            return BiSpinor(*comps)
