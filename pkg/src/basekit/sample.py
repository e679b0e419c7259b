"""Probabilistic base finder: seeded random tuple sampling with exact testing.

Sampling uses the stdlib Mersenne Twister (random.Random), which is named,
seedable, and platform independent, so identical seeds reproduce identical
runs bit for bit.  Each sampled tuple is tested exactly; when the regular
orbit count is known, the exact hit probability and the weaker index-only
bound are reported alongside a Clopper-Pearson confidence interval.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction

from scipy.stats import beta

from . import engine
from .cosets import CosetSpace

RNG_NAME = "mersenne-twister (python random.Random)"
DEFAULT_TRIALS = 10**5


@dataclass
class SampleRun:
    k: int
    trials: int
    hits: int
    seed: int
    witness: tuple[int, ...] | None
    epsilon_exact: Fraction | None
    epsilon_weak: Fraction | None
    ci_low: float
    ci_high: float
    rng_name: str
    elapsed_ms: float

    @property
    def rate(self) -> float:
        return self.hits / self.trials if self.trials else 0.0

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "trials": self.trials,
            "hits": self.hits,
            "rate": self.rate,
            "seed": self.seed,
            "witness": [p + 1 for p in self.witness] if self.witness else None,
            "epsilon_exact": str(self.epsilon_exact) if self.epsilon_exact is not None else None,
            "epsilon_weak": str(self.epsilon_weak) if self.epsilon_weak is not None else None,
            "ci99": [self.ci_low, self.ci_high],
            "rng": self.rng_name,
            "elapsed_ms": self.elapsed_ms,
        }


def clopper_pearson(hits: int, trials: int, conf: float = 0.99) -> tuple[float, float]:
    alpha = 1.0 - conf
    lo = 0.0 if hits == 0 else float(beta.ppf(alpha / 2, hits, trials - hits + 1))
    hi = 1.0 if hits == trials else float(beta.ppf(1 - alpha / 2, hits + 1, trials - hits))
    return lo, hi


def random_base_search(
    space: CosetSpace,
    k: int,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    reg_orbits: int | None = None,
    bound_budget: int = 10**7,
) -> SampleRun:
    """Sample uniform k-tuples and count the regular hits.

    Zero hits is a valid outcome.  reg_orbits supplies a known regular-orbit
    count for the epsilon bounds; when omitted it is computed if the reduced
    scan fits inside bound_budget, otherwise the bounds are left out.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    t0 = time.perf_counter()
    rng = random.Random(seed)
    size = space.size
    masks = space.group_masks()
    hits = 0
    witness: tuple[int, ...] | None = None
    for _ in range(trials):
        t = tuple(rng.randrange(size) for _ in range(k))
        mask = -1
        for p in t:
            mask &= masks[p]
            if mask == 1:
                break
        if mask == 1:
            hits += 1
            if witness is None:
                witness = t
    if reg_orbits is None and size ** (k - 1) <= bound_budget:
        reg_orbits = engine.reg_count(space, k, rep_cap=0).reg_count
    eps_exact = eps_weak = None
    if reg_orbits is not None:
        eps_exact, eps_weak = engine.epsilon_bounds(size, space.image_order, k, reg_orbits)
    lo, hi = clopper_pearson(hits, trials)
    return SampleRun(
        k=k,
        trials=trials,
        hits=hits,
        seed=seed,
        witness=witness,
        epsilon_exact=eps_exact,
        epsilon_weak=eps_weak,
        ci_low=lo,
        ci_high=hi,
        rng_name=RNG_NAME,
        elapsed_ms=round((time.perf_counter() - t0) * 1000, 3),
    )
