"""Shuffle (permutation) tests and bootstrap confidence distributions.

Replicate randomness is always derived from ``substream(seed, r)`` for
replicate index r, so a run is fully determined by (data, statistic, number
of replicates, seed) no matter how replicates are scheduled.  The per-
replicate draw sequences are:

* shuffle test on a two-group sample of n rows with n1 rows in the first
  group: n1 partial forward Fisher-Yates steps over the values in original
  row order; the first n1 positions become the first group.
* paired shuffle test: n - 1 Fisher-Yates steps over the y column (a full
  shuffle); the x column stays fixed.
* bootstrap of n rows: n draws of ``below(n)``, each an index into the
  original rows.  For grouped data a replicate that loses a whole group is
  redrawn from the same substream (n fresh index draws per attempt) until
  both groups are present; redraws are counted on the result.

Both engines (``vectorized=True`` uses numpy lanes in lockstep, ``False``
steps one substream at a time) produce identical replicate values.

p-values count ties inclusively: two-sided p = #{|T*| >= |T_obs|} / N,
one-sided variants count T* >= T_obs (or <=).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .data import GroupedSample, PairedSample, Sample
from .rng import SubstreamBlock, substream

STAT_MEAN = "mean"
STAT_MEAN_DIFF = "mean-diff"
STAT_PROPORTION_DIFF = "proportion-diff"
STAT_CORRELATION = "correlation"
GROUP_STATS = (STAT_MEAN_DIFF, STAT_PROPORTION_DIFF)

SIDEDNESS = ("two-sided", "greater", "less")

# Diagnostics thresholds.  Skewness above 0.25 marks a resample distribution
# as visibly lopsided (mild sampling noise at N=1000 stays well below this);
# fewer than 9 observations gets a coarse-sample note.
SKEWNESS_FLAG_THRESHOLD = 0.25
SMALL_SAMPLE_SIZE = 9

DEFAULT_REPLICATES = 1000
DEFAULT_BIN_WIDTH = 2.0
CORRELATION_BIN_WIDTH = 0.05

ENUMERATION_LIMIT = 10**6


@dataclass(frozen=True)
class Histogram:
    """Counts per bin; bins are aligned so that 0 is a bin center.

    A value v belongs to the bin with center c when c - w/2 <= v < c + w/2.
    """

    bin_width: float
    centers: tuple[float, ...]
    counts: tuple[int, ...]

    @classmethod
    def from_values(cls, values, bin_width: float = DEFAULT_BIN_WIDTH) -> "Histogram":
        if bin_width <= 0:
            raise ValueError(f"bin width must be positive, got {bin_width}")
        v = np.asarray(values, dtype=float)
        if v.size == 0:
            raise ValueError("cannot bin an empty value list")
        k = np.floor(v / bin_width + 0.5).astype(np.int64)
        lo, hi = int(k.min()), int(k.max())
        counts = np.bincount(k - lo, minlength=hi - lo + 1)
        centers = tuple(float(i * bin_width) for i in range(lo, hi + 1))
        return cls(bin_width=float(bin_width), centers=centers, counts=tuple(int(c) for c in counts))

    @property
    def total(self) -> int:
        return sum(self.counts)

    def to_csv(self) -> str:
        lines = ["bin_center,count"]
        lines += [f"{c:.12g},{n}" for c, n in zip(self.centers, self.counts)]
        return "\n".join(lines) + "\n"

    def to_ascii(self, max_width: int = 50) -> str:
        peak = max(self.counts) if self.counts else 0
        lines = []
        for c, n in zip(self.centers, self.counts):
            bar = "#" * (max(1, round(n / peak * max_width)) if n else 0)
            lines.append(f"{c:>10.6g} | {bar} {n}")
        return "\n".join(lines)


@dataclass(frozen=True)
class ResampleDistribution:
    """Statistic values over N replicates, plus what produced them."""

    values: tuple[float, ...]
    observed: float
    statistic: str
    mode: str  # "with-replacement" | "without-replacement"
    n_resamples: int
    seed: int
    source_size: int
    redraw_count: int = 0

    def __post_init__(self):
        if len(self.values) != self.n_resamples:
            raise ValueError(
                f"{len(self.values)} values for {self.n_resamples} replicates"
            )


@dataclass(frozen=True)
class TestReport:
    observed: float
    p_value: float
    statistic: str
    sidedness: str
    n_resamples: int
    seed: int
    histogram: Histogram
    description: str  # which direction the statistic was taken in
    distribution: ResampleDistribution | None = None


@dataclass(frozen=True)
class DiagnosticsReport:
    source_size: int
    skewness: float
    mean_median_gap: float  # |mean - median| / sd of the resample values
    skew_flagged: bool
    scale_bounds: tuple[float, float] | None
    out_of_bounds_fraction: float | None
    bounds_flagged: bool
    small_sample: bool
    notes: tuple[str, ...]


@dataclass(frozen=True)
class BootstrapReport:
    distribution: ResampleDistribution
    interval_level: float
    interval: tuple[float, float]
    tail_direction: str
    tail_probabilities: tuple[tuple[float, float], ...]  # (threshold, probability)
    histogram: Histogram
    diagnostics: DiagnosticsReport
    description: str

    @property
    def observed(self) -> float:
        return self.distribution.observed

    @property
    def seed(self) -> int:
        return self.distribution.seed

    @property
    def n_resamples(self) -> int:
        return self.distribution.n_resamples


# ---------------------------------------------------------------------------
# statistic evaluation (shared by observed value and all replicates)


def _grouped_diffs(mat: np.ndarray, n1: int) -> np.ndarray:
    """Mean of the first n1 columns minus mean of the rest, per row."""
    s1 = mat[:, :n1].sum(axis=1)
    s2 = mat[:, n1:].sum(axis=1)
    return s1 / n1 - s2 / (mat.shape[1] - n1)


def _correlations(xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """Pearson r of fixed xs against each row of ys."""
    n = xs.size
    sx = xs.sum()
    sxx = (xs * xs).sum()
    sy = ys.sum(axis=1)
    syy = (ys * ys).sum(axis=1)
    sxy = (ys * xs).sum(axis=1)
    den = np.sqrt((n * sxx - sx * sx) * (n * syy - sy * sy))
    return (n * sxy - sx * sy) / den


def _check_statistic(data, statistic: str) -> None:
    if isinstance(data, Sample):
        if statistic != STAT_MEAN:
            raise ValueError(
                f"statistic {statistic!r} needs grouped or paired data"
            )
    elif isinstance(data, GroupedSample):
        if statistic not in GROUP_STATS:
            raise ValueError(
                f"statistic {statistic!r} does not apply to two-group data; "
                f"use one of {GROUP_STATS}"
            )
        if statistic == STAT_PROPORTION_DIFF and not set(data.values) <= {0.0, 1.0}:
            raise ValueError("proportion-diff needs 0/1 values")
    elif isinstance(data, PairedSample):
        if statistic != STAT_CORRELATION:
            raise ValueError(f"paired data supports only {STAT_CORRELATION!r}")
    else:
        raise ValueError(f"unsupported data type {type(data).__name__}")


def default_statistic(data) -> str:
    if isinstance(data, Sample):
        return STAT_MEAN
    if isinstance(data, GroupedSample):
        return STAT_MEAN_DIFF
    if isinstance(data, PairedSample):
        return STAT_CORRELATION
    raise ValueError(f"unsupported data type {type(data).__name__}")


def _difference_description(data: GroupedSample, statistic: str) -> str:
    g1, g2 = data.group_names
    what = "proportion" if statistic == STAT_PROPORTION_DIFF else "mean"
    return f"{what}({g1}) - {what}({g2})"


def observed_statistic(data, statistic: str | None = None) -> float:
    """The statistic evaluated on the real data (no resampling)."""
    if statistic is None:
        statistic = default_statistic(data)
    _check_statistic(data, statistic)
    if isinstance(data, Sample):
        arr = np.asarray(data.values, dtype=float)
        return float(arr.reshape(1, -1).mean(axis=1)[0])
    if isinstance(data, GroupedSample):
        g1, g2 = data.group_names
        ordered = np.asarray(data.group_values(g1) + data.group_values(g2), dtype=float)
        return float(_grouped_diffs(ordered.reshape(1, -1), data.group_count(g1))[0])
    xs = np.asarray(data.xs, dtype=float)
    ys = np.asarray(data.ys, dtype=float)
    return float(_correlations(xs, ys.reshape(1, -1))[0])


# ---------------------------------------------------------------------------
# replicate draw engines (vector and scalar must match exactly)


def _prefix_shuffle_matrix(
    values, n_resamples: int, seed: int, k: int, vectorized: bool
) -> np.ndarray:
    """Row r is the value list after k Fisher-Yates steps of substream(seed, r)."""
    arr = np.asarray(values, dtype=float)
    n = arr.size
    steps = min(k, n - 1)
    if vectorized:
        blk = SubstreamBlock(seed, n_resamples)
        mat = np.tile(arr, (n_resamples, 1))
        rows = np.arange(n_resamples)
        for i in range(steps):
            j = i + blk.below(n - i)
            left = mat[rows, i].copy()
            mat[rows, i] = mat[rows, j]
            mat[rows, j] = left
        return mat
    mat = np.empty((n_resamples, n), dtype=float)
    for r in range(n_resamples):
        gen = substream(seed, r)
        row = list(arr)
        for i in range(steps):
            j = i + gen.below(n - i)
            row[i], row[j] = row[j], row[i]
        mat[r] = row
    return mat


def _replacement_index_matrix(
    n_items: int, n_draws: int, n_resamples: int, seed: int, vectorized: bool
) -> np.ndarray:
    """Row r holds n_draws successive below(n_items) draws of substream(seed, r)."""
    if vectorized:
        blk = SubstreamBlock(seed, n_resamples)
        idx = np.empty((n_resamples, n_draws), dtype=np.int64)
        for d in range(n_draws):
            idx[:, d] = blk.below(n_items)
        return idx
    idx = np.empty((n_resamples, n_draws), dtype=np.int64)
    for r in range(n_resamples):
        gen = substream(seed, r)
        idx[r] = [gen.below(n_items) for _ in range(n_draws)]
    return idx


# ---------------------------------------------------------------------------
# shuffle tests


def _p_value(replicates: np.ndarray, observed: float, sidedness: str) -> float:
    if sidedness == "two-sided":
        hits = np.count_nonzero(np.abs(replicates) >= abs(observed))
    elif sidedness == "greater":
        hits = np.count_nonzero(replicates >= observed)
    elif sidedness == "less":
        hits = np.count_nonzero(replicates <= observed)
    else:
        raise ValueError(f"sidedness must be one of {SIDEDNESS}, got {sidedness!r}")
    return hits / replicates.size


def shuffle_test(
    data: GroupedSample,
    statistic: str = STAT_MEAN_DIFF,
    n_resamples: int = DEFAULT_REPLICATES,
    seed: int = 0,
    sidedness: str = "two-sided",
    bin_width: float = DEFAULT_BIN_WIDTH,
    vectorized: bool = True,
) -> TestReport:
    """Re-deal the values to the original group sizes N times (no replacement).

    Ties count: the p-value is the fraction of re-deals whose statistic is
    at least as extreme as the observed one.
    """
    if not isinstance(data, GroupedSample):
        raise ValueError("shuffle_test needs a two-group sample")
    _check_statistic(data, statistic)
    if sidedness not in SIDEDNESS:
        raise ValueError(f"sidedness must be one of {SIDEDNESS}, got {sidedness!r}")
    if n_resamples < 1:
        raise ValueError("need at least one replicate")
    g1, _ = data.group_names
    n1 = data.group_count(g1)
    observed = observed_statistic(data, statistic)
    mat = _prefix_shuffle_matrix(data.values, n_resamples, seed, n1, vectorized)
    diffs = _grouped_diffs(mat, n1)
    dist = ResampleDistribution(
        values=tuple(float(v) for v in diffs),
        observed=observed,
        statistic=statistic,
        mode="without-replacement",
        n_resamples=n_resamples,
        seed=seed,
        source_size=data.n,
    )
    return TestReport(
        observed=observed,
        p_value=_p_value(diffs, observed, sidedness),
        statistic=statistic,
        sidedness=sidedness,
        n_resamples=n_resamples,
        seed=seed,
        histogram=Histogram.from_values(diffs, bin_width),
        description=_difference_description(data, statistic),
        distribution=dist,
    )


def shuffle_test_paired(
    data: PairedSample,
    n_resamples: int = DEFAULT_REPLICATES,
    seed: int = 0,
    sidedness: str = "two-sided",
    bin_width: float = CORRELATION_BIN_WIDTH,
    vectorized: bool = True,
) -> TestReport:
    """Shuffle the y column against the fixed x column; statistic is Pearson r."""
    if not isinstance(data, PairedSample):
        raise ValueError("shuffle_test_paired needs a paired sample")
    if data.n < 3:
        raise ValueError("need at least 3 pairs for a correlation test")
    xs = np.asarray(data.xs, dtype=float)
    ys = np.asarray(data.ys, dtype=float)
    if np.all(xs == xs[0]) or np.all(ys == ys[0]):
        raise ValueError("correlation undefined: a coordinate has zero variance")
    if sidedness not in SIDEDNESS:
        raise ValueError(f"sidedness must be one of {SIDEDNESS}, got {sidedness!r}")
    if n_resamples < 1:
        raise ValueError("need at least one replicate")
    observed = observed_statistic(data, STAT_CORRELATION)
    mat = _prefix_shuffle_matrix(ys, n_resamples, seed, data.n - 1, vectorized)
    rs = _correlations(xs, mat)
    dist = ResampleDistribution(
        values=tuple(float(v) for v in rs),
        observed=observed,
        statistic=STAT_CORRELATION,
        mode="without-replacement",
        n_resamples=n_resamples,
        seed=seed,
        source_size=data.n,
    )
    return TestReport(
        observed=observed,
        p_value=_p_value(rs, observed, sidedness),
        statistic=STAT_CORRELATION,
        sidedness=sidedness,
        n_resamples=n_resamples,
        seed=seed,
        histogram=Histogram.from_values(rs, bin_width),
        description="pearson correlation of y against fixed x",
        distribution=dist,
    )


def exact_shuffle_p(
    data: GroupedSample,
    statistic: str = STAT_MEAN_DIFF,
    sidedness: str = "two-sided",
    max_splits: int = ENUMERATION_LIMIT,
) -> Fraction:
    """Exact shuffle-test p by enumerating every way to split the rows.

    All C(n, n1) assignments of rows to the first group are equally likely
    under shuffling; arithmetic is exact rational, ties inclusive.
    """
    _check_statistic(data, statistic)
    if not isinstance(data, GroupedSample):
        raise ValueError("exact enumeration needs a two-group sample")
    if sidedness not in SIDEDNESS:
        raise ValueError(f"sidedness must be one of {SIDEDNESS}, got {sidedness!r}")
    g1, g2 = data.group_names
    n = data.n
    n1 = data.group_count(g1)
    total_splits = math.comb(n, n1)
    if total_splits > max_splits:
        raise ValueError(
            f"exact enumeration is capped at C(n, n1) <= {max_splits}; "
            f"this data has C({n}, {n1}) = {total_splits}"
        )
    vals = [Fraction(v) for v in data.values]
    total = sum(vals)
    n2 = n - n1

    def diff(sum1: Fraction) -> Fraction:
        return sum1 / n1 - (total - sum1) / n2

    observed = diff(sum(Fraction(v) for v in data.group_values(g1)))
    hits = 0
    for combo in itertools.combinations(range(n), n1):
        d = diff(sum(vals[i] for i in combo))
        if sidedness == "two-sided":
            hit = abs(d) >= abs(observed)
        elif sidedness == "greater":
            hit = d >= observed
        else:
            hit = d <= observed
        hits += hit
    return Fraction(hits, total_splits)


# ---------------------------------------------------------------------------
# bootstrap


_MAX_REDRAW_ROUNDS = 10_000


def bootstrap(
    data: Sample | GroupedSample,
    statistic: str | None = None,
    n_resamples: int = DEFAULT_REPLICATES,
    seed: int = 0,
    vectorized: bool = True,
) -> ResampleDistribution:
    """Resample whole rows with replacement N times and evaluate the statistic.

    Grouped data keeps each row's value/group pairing; replicates that lose
    an entire group are redrawn (see module docstring) and counted in
    ``redraw_count``.
    """
    if statistic is None:
        statistic = default_statistic(data)
    _check_statistic(data, statistic)
    if n_resamples < 1:
        raise ValueError("need at least one replicate")
    n = data.n
    observed = observed_statistic(data, statistic)
    if isinstance(data, Sample):
        arr = np.asarray(data.values, dtype=float)
        idx = _replacement_index_matrix(n, n, n_resamples, seed, vectorized)
        values = arr[idx].mean(axis=1)
        redraws = 0
    else:
        g1, _ = data.group_names
        arr = np.asarray(data.values, dtype=float)
        in_g1 = np.asarray([g == g1 for g in data.groups])
        idx = _replacement_index_matrix(n, n, n_resamples, seed, vectorized)
        idx, redraws = _redraw_single_group_rows(idx, in_g1, n, seed, vectorized)
        values = _grouped_resample_diffs(arr, in_g1, idx)
    return ResampleDistribution(
        values=tuple(float(v) for v in values),
        observed=observed,
        statistic=statistic,
        mode="with-replacement",
        n_resamples=n_resamples,
        seed=seed,
        source_size=n,
        redraw_count=redraws,
    )


def _grouped_resample_diffs(arr: np.ndarray, in_g1: np.ndarray, idx: np.ndarray) -> np.ndarray:
    picked = arr[idx]
    mask1 = in_g1[idx]
    c1 = mask1.sum(axis=1)
    c2 = idx.shape[1] - c1
    s1 = (picked * mask1).sum(axis=1)
    s2 = picked.sum(axis=1) - s1
    return s1 / c1 - s2 / c2


def _redraw_single_group_rows(
    idx: np.ndarray, in_g1: np.ndarray, n_items: int, seed: int, vectorized: bool
) -> tuple[np.ndarray, int]:
    """Redraw replicates whose resample lost a whole group; keep N fixed.

    Each attempt consumes n_items fresh draws from the replicate's own
    substream, so vector and scalar execution stay identical.
    """
    n_draws = idx.shape[1]
    counts = in_g1[idx].sum(axis=1)
    bad = (counts == 0) | (counts == n_draws)
    redraws = 0
    if not bad.any():
        return idx, 0
    if vectorized:
        # Recreate the block and fast-forward every lane past its first
        # n_draws draws (below() consumes exactly one draw per call here
        # because n_items is tiny next to 2**64 -- and if a rejection ever
        # did occur, the replay consumes it identically).
        blk = SubstreamBlock(seed, idx.shape[0])
        for _ in range(n_draws):
            blk.below(n_items)
        rounds = 0
        while bad.any():
            rounds += 1
            if rounds > _MAX_REDRAW_ROUNDS:
                raise RuntimeError("grouped bootstrap kept drawing one-group resamples")
            redraws += int(bad.sum())
            for d in range(n_draws):
                col = blk.below(n_items, active=bad)
                idx[bad, d] = col[bad]
            counts = in_g1[idx].sum(axis=1)
            bad &= (counts == 0) | (counts == n_draws)
    else:
        for r in np.nonzero(bad)[0]:
            gen = substream(seed, int(r))
            for _ in range(n_draws):
                gen.below(n_items)
            rounds = 0
            while True:
                rounds += 1
                if rounds > _MAX_REDRAW_ROUNDS:
                    raise RuntimeError(
                        "grouped bootstrap kept drawing one-group resamples"
                    )
                redraws += 1
                row = [gen.below(n_items) for _ in range(n_draws)]
                c = int(in_g1[row].sum())
                if 0 < c < n_draws:
                    idx[r] = row
                    break
    return idx, redraws


# ---------------------------------------------------------------------------
# summaries of a resample distribution


def _values_array(dist) -> np.ndarray:
    if isinstance(dist, ResampleDistribution):
        return np.asarray(dist.values, dtype=float)
    return np.asarray(list(dist), dtype=float)


def percentile(values, q: float) -> float:
    """Percentile by linear interpolation at position q*(N-1) (0-indexed)."""
    s = np.sort(_values_array(values))
    if s.size == 0:
        raise ValueError("no values")
    if not 0 <= q <= 1:
        raise ValueError(f"percentile level must be in [0, 1], got {q}")
    pos = q * (s.size - 1)
    i = int(math.floor(pos))
    frac = pos - i
    if i + 1 < s.size:
        return float(s[i] + frac * (s[i + 1] - s[i]))
    return float(s[i])


def percentile_interval(dist, level: float = 0.95) -> tuple[float, float]:
    """Equal-tailed interval: the (1-level)/2 and 1-(1-level)/2 percentiles."""
    if not 0 < level < 1:
        raise ValueError(f"interval level must be in (0, 1), got {level}")
    v = _values_array(dist)
    if v.size < 2:
        raise ValueError("need at least two values for an interval")
    alpha = (1 - level) / 2
    return percentile(v, alpha), percentile(v, 1 - alpha)


def tail_probability(dist, threshold: float, direction: str = "ge") -> float:
    """Fraction of values >= threshold ("ge", default) or > threshold ("gt")."""
    v = _values_array(dist)
    if direction == "ge":
        return float(np.count_nonzero(v >= threshold) / v.size)
    if direction == "gt":
        return float(np.count_nonzero(v > threshold) / v.size)
    raise ValueError(f"direction must be 'ge' or 'gt', got {direction!r}")


def diagnostics(
    dist: ResampleDistribution, scale_bounds: tuple[float, float] | None = None
) -> DiagnosticsReport:
    """Sanity checks before reading the distribution as tentative probabilities.

    Reports asymmetry (skewness plus the |mean - median|/sd gap, flagged above
    ``SKEWNESS_FLAG_THRESHOLD``), the mass whose mirror image around the
    observed value falls outside the measurement scale (flagged when any),
    and whether the source sample is small.
    """
    v = _values_array(dist)
    mu = float(v.mean())
    med = float(np.median(v))
    m2 = float(((v - mu) ** 2).mean())
    sd = math.sqrt(m2)
    skew = float(((v - mu) ** 3).mean() / m2**1.5) if m2 > 0 else 0.0
    gap = abs(mu - med) / sd if sd > 0 else 0.0
    skew_flagged = abs(skew) > SKEWNESS_FLAG_THRESHOLD
    oob = None
    bounds_flagged = False
    if scale_bounds is not None:
        lo, hi = float(scale_bounds[0]), float(scale_bounds[1])
        if not lo < hi:
            raise ValueError(f"scale bounds must satisfy low < high, got {scale_bounds}")
        reflected = 2.0 * dist.observed - v
        oob = float(np.count_nonzero((reflected < lo) | (reflected > hi)) / v.size)
        bounds_flagged = oob > 0
    small = dist.source_size < SMALL_SAMPLE_SIZE
    notes = []
    if skew_flagged:
        notes.append(
            f"resample distribution is noticeably asymmetric (skewness {skew:.2f}); "
            "read intervals and tail probabilities as rough"
        )
    if bounds_flagged:
        notes.append(
            f"{oob:.1%} of the distribution mirrors to outside the measurement "
            f"scale ({scale_bounds[0]:g}, {scale_bounds[1]:g}); probabilities near "
            "the scale edge claim more than is possible"
        )
    if small:
        notes.append(
            f"only {dist.source_size} observations: the resampled view of the "
            "population may be too coarse"
        )
    return DiagnosticsReport(
        source_size=dist.source_size,
        skewness=skew,
        mean_median_gap=gap,
        skew_flagged=skew_flagged,
        scale_bounds=tuple(scale_bounds) if scale_bounds is not None else None,
        out_of_bounds_fraction=oob,
        bounds_flagged=bounds_flagged,
        small_sample=small,
        notes=tuple(notes),
    )


def bootstrap_report(
    data: Sample | GroupedSample,
    statistic: str | None = None,
    n_resamples: int = DEFAULT_REPLICATES,
    seed: int = 0,
    level: float = 0.95,
    thresholds=(),
    tail_direction: str = "ge",
    scale_bounds: tuple[float, float] | None = None,
    bin_width: float = DEFAULT_BIN_WIDTH,
    vectorized: bool = True,
) -> BootstrapReport:
    """Bootstrap plus percentile interval, tail probabilities and diagnostics."""
    dist = bootstrap(data, statistic, n_resamples, seed, vectorized)
    if isinstance(data, GroupedSample):
        description = _difference_description(data, dist.statistic)
    else:
        description = "mean"
    return BootstrapReport(
        distribution=dist,
        interval_level=level,
        interval=percentile_interval(dist, level),
        tail_direction=tail_direction,
        tail_probabilities=tuple(
            (float(t), tail_probability(dist, t, tail_direction)) for t in thresholds
        ),
        histogram=Histogram.from_values(dist.values, bin_width),
        diagnostics=diagnostics(dist, scale_bounds),
        description=description,
    )
