"""Forward probability simulation with exact small-case arithmetic.

Bernoulli trials use exact rational sampling: a trial with success
probability num/den draws ``below(den)`` and succeeds when the draw is
below ``num``, so the simulated probability is exactly the requested
rational.  Run r of any experiment takes its randomness from
``substream(seed, r)``; the vectorized and scalar engines produce identical
results.

Poll sampling without replacement takes the first k positions of a partial
Fisher-Yates shuffle of the population; with replacement it draws k
independent indices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .data import PopulationVector
from .resampling import percentile_interval
from .rng import SubstreamBlock, substream

EVENTS = ("exactly", "at-least", "at-most")
POLL_MODES = ("with-replacement", "without-replacement")


def exact_binomial(n: int, k: int, p) -> Fraction:
    """P(exactly k successes in n trials), as an exact rational."""
    if n < 0 or not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ValueError(f"success probability must be in [0, 1], got {p}")
    return math.comb(n, k) * p**k * (1 - p) ** (n - k)


@dataclass(frozen=True)
class BernoulliExperiment:
    """Repeated runs of n trials, scored by an event on the success count."""

    trials_per_run: int
    success_probability: Fraction
    event: str  # "exactly" | "at-least" | "at-most"
    event_count: int
    runs: int

    def __post_init__(self):
        if self.trials_per_run < 1:
            raise ValueError("need at least one trial per run")
        object.__setattr__(
            self, "success_probability", Fraction(self.success_probability)
        )
        if not 0 <= self.success_probability <= 1:
            raise ValueError(
                f"success probability must be in [0, 1], got {self.success_probability}"
            )
        if self.event not in EVENTS:
            raise ValueError(f"event must be one of {EVENTS}, got {self.event!r}")
        if not 0 <= self.event_count <= self.trials_per_run:
            raise ValueError(
                f"event count must be in [0, {self.trials_per_run}], "
                f"got {self.event_count}"
            )
        if self.runs < 1:
            raise ValueError("need at least one run")

    def matches(self, successes: int) -> bool:
        if self.event == "exactly":
            return successes == self.event_count
        if self.event == "at-least":
            return successes >= self.event_count
        return successes <= self.event_count

    def exact_probability(self) -> Fraction:
        """The event probability by exact enumeration over success counts."""
        return sum(
            (
                exact_binomial(self.trials_per_run, k, self.success_probability)
                for k in range(self.trials_per_run + 1)
                if self.matches(k)
            ),
            Fraction(0),
        )


def simulate_bernoulli(
    experiment: BernoulliExperiment, seed: int = 0, vectorized: bool = True
) -> float:
    """Fraction of runs whose success count satisfies the event."""
    num = experiment.success_probability.numerator
    den = experiment.success_probability.denominator
    n = experiment.trials_per_run
    runs = experiment.runs
    if vectorized:
        blk = SubstreamBlock(seed, runs)
        successes = np.zeros(runs, dtype=np.int64)
        for _ in range(n):
            successes += blk.below(den) < num
        counts = successes
    else:
        counts = np.empty(runs, dtype=np.int64)
        for r in range(runs):
            gen = substream(seed, r)
            counts[r] = sum(gen.below(den) < num for _ in range(n))
    if experiment.event == "exactly":
        hits = counts == experiment.event_count
    elif experiment.event == "at-least":
        hits = counts >= experiment.event_count
    else:
        hits = counts <= experiment.event_count
    return float(np.count_nonzero(hits) / runs)


@dataclass(frozen=True)
class PollResult:
    """Sample proportions from repeated polls of a 0/1 population."""

    proportions: tuple[float, ...]
    sample_size: int
    mode: str
    n_polls: int
    seed: int

    def interval(self, level: float = 0.95) -> tuple[float, float]:
        return percentile_interval(self.proportions, level)

    @property
    def minimum(self) -> float:
        return min(self.proportions)

    @property
    def maximum(self) -> float:
        return max(self.proportions)


def simulate_poll(
    population: PopulationVector,
    sample_size: int,
    mode: str = "without-replacement",
    n_polls: int = 1000,
    seed: int = 0,
    vectorized: bool = True,
) -> PollResult:
    """Poll the population N times and record each poll's sample proportion."""
    if mode not in POLL_MODES:
        raise ValueError(f"mode must be one of {POLL_MODES}, got {mode!r}")
    if sample_size < 1:
        raise ValueError("sample size must be >= 1")
    if n_polls < 1:
        raise ValueError("need at least one poll")
    n = population.n
    if mode == "without-replacement" and sample_size > n:
        raise ValueError(
            f"cannot poll {sample_size} of {n} electors without replacement"
        )
    entries = np.asarray(population.entries, dtype=float)
    if mode == "with-replacement":
        if vectorized:
            blk = SubstreamBlock(seed, n_polls)
            sums = np.zeros(n_polls)
            for _ in range(sample_size):
                sums += entries[blk.below(n)]
            props = sums / sample_size
        else:
            props = np.empty(n_polls)
            for r in range(n_polls):
                gen = substream(seed, r)
                picks = [entries[gen.below(n)] for _ in range(sample_size)]
                props[r] = sum(picks) / sample_size
    else:
        steps = min(sample_size, n - 1)
        if vectorized:
            blk = SubstreamBlock(seed, n_polls)
            mat = np.tile(entries, (n_polls, 1))
            rows = np.arange(n_polls)
            for i in range(steps):
                j = i + blk.below(n - i)
                left = mat[rows, i].copy()
                mat[rows, i] = mat[rows, j]
                mat[rows, j] = left
            props = mat[:, :sample_size].mean(axis=1)
        else:
            props = np.empty(n_polls)
            for r in range(n_polls):
                gen = substream(seed, r)
                picked = gen.sample_without_replacement(entries.tolist(), sample_size)
                props[r] = float(np.asarray(picked).mean())
    return PollResult(
        proportions=tuple(float(p) for p in props),
        sample_size=sample_size,
        mode=mode,
        n_polls=n_polls,
        seed=seed,
    )
