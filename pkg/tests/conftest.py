import numpy as np

import majorize as mj


def random_distribution(rng: np.random.Generator, k: int | None = None,
                        kmin: int = 2, kmax: int = 8) -> mj.Distribution:
    """Dirichlet draw with a randomized concentration, canonicalized."""
    if k is None:
        k = int(rng.integers(kmin, kmax + 1))
    alpha = float(rng.uniform(0.3, 3.0))
    return mj.make_distribution(rng.dirichlet(np.full(k, alpha)), "renormalize")
