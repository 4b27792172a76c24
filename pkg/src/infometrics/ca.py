"""One-dimensional cellular automata bench for Langton-lambda sweeps.

Lattices are periodic. State 0 is the quiescent state. Neighborhoods are
encoded base k with the leftmost cell most significant, so for elementary
rules the index is 4*left + 2*center + right (Wolfram numbering).
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .emergence import EmergenceInput, emergent_capacity
from .entropy import shannon_entropy
from .errors import DomainError, ValidationError, WidthTooSmall
from .prng import SplitMix64, derive_seed

QUIESCENT = 0
CLASSES = ("I", "II", "III", "IV")
LAMBDA_COUNT_TOL = 1e-9


@dataclass(frozen=True)
class RuleTable:
    states_k: int
    radius_r: int
    outputs: tuple[int, ...]
    quiescent: int = QUIESCENT

    def __post_init__(self):
        if self.states_k < 2:
            raise DomainError(f"states_k must be >= 2, got {self.states_k}")
        if self.radius_r < 1:
            raise DomainError(f"radius_r must be >= 1, got {self.radius_r}")
        outputs = tuple(int(o) for o in self.outputs)
        if len(outputs) != self.table_size:
            raise ValidationError(
                f"rule table needs {self.table_size} outputs, got {len(outputs)}"
            )
        if any(not 0 <= o < self.states_k for o in outputs):
            raise ValidationError(f"rule outputs must lie in [0, {self.states_k})")
        object.__setattr__(self, "outputs", outputs)

    @property
    def neighborhood(self) -> int:
        return 2 * self.radius_r + 1

    @property
    def table_size(self) -> int:
        return self.states_k ** (2 * self.radius_r + 1)


@dataclass(frozen=True)
class SpacetimeDiagram:
    """``rows[t]`` is the lattice at time t; row 0 is the initial condition."""

    rows: np.ndarray
    states_k: int = 2

    def __post_init__(self):
        rows = np.array(self.rows, dtype=np.int64, copy=True)
        if rows.ndim != 2:
            raise ValidationError("spacetime diagram must be 2-D")
        if rows.size and (rows.min() < 0 or rows.max() >= self.states_k):
            raise ValidationError(f"cell states must lie in [0, {self.states_k})")
        rows.setflags(write=False)
        object.__setattr__(self, "rows", rows)

    @property
    def width(self) -> int:
        return self.rows.shape[1]

    @property
    def steps(self) -> int:
        return self.rows.shape[0] - 1

    def render(self) -> str:
        return "".join("".join(str(int(c)) for c in row) + "\n" for row in self.rows)


@dataclass(frozen=True)
class SweepConfig:
    states_k: int = 2
    radius_r: int = 1
    lambda_grid: tuple[float, ...] = (0.0, 0.125, 0.25, 0.375, 0.5)
    samples_per_lambda: int = 64
    width: int = 256
    steps: int = 512
    transient_cutoff: int = 128
    seed: int = 0
    workers: int = 1

    def __post_init__(self):
        object.__setattr__(self, "lambda_grid", tuple(float(x) for x in self.lambda_grid))
        if self.samples_per_lambda < 1:
            raise ValidationError("samples_per_lambda must be >= 1")
        if self.width < 2 * self.radius_r + 1:
            raise WidthTooSmall(f"width {self.width} smaller than neighborhood {2 * self.radius_r + 1}")
        if not 0 <= self.transient_cutoff <= self.steps:
            raise ValidationError("transient_cutoff must lie in [0, steps]")
        if not 0 <= self.seed < 2**64:
            raise ValidationError("seed must be an unsigned 64-bit integer")
        size = self.states_k ** (2 * self.radius_r + 1)
        for lam in self.lambda_grid:
            if nonquiescent_count(lam, size) > size - 1:
                raise DomainError(f"lambda {lam} unreachable with the quiescent neighborhood fixed")

    @classmethod
    def from_dict(cls, raw: dict) -> SweepConfig:
        known = set(cls.__dataclass_fields__)
        unknown = set(raw) - known
        if unknown:
            raise ValidationError(f"unknown sweep config keys: {sorted(unknown)}")
        return cls(**raw)


@dataclass(frozen=True)
class SweepRecord:
    lam: float
    seed: int
    site_entropy_eta: float
    capacity: float
    activity: float
    class_heuristic: str
    label: str = field(default="heuristic", repr=False)


def nonquiescent_count(lam: float, table_size: int) -> int:
    if not 0 <= lam <= 1:
        raise DomainError(f"lambda must lie in [0, 1], got {lam}")
    exact = lam * table_size
    count = round(exact)
    if abs(exact - count) > LAMBDA_COUNT_TOL:
        raise DomainError(
            f"lambda {lam} gives {exact} non-quiescent outputs of {table_size}; must be integral"
        )
    return count


def lambda_of(rule: RuleTable) -> float:
    return sum(o != rule.quiescent for o in rule.outputs) / rule.table_size


def elementary_rule(code: int) -> RuleTable:
    if not 0 <= code <= 255:
        raise DomainError(f"elementary rule code must be in 0..255, got {code}")
    return RuleTable(2, 1, tuple((code >> n) & 1 for n in range(8)))


def random_rule_with_lambda(k: int, r: int, lambda_target: float, seed: int | SplitMix64) -> RuleTable:
    """Exactly round(lambda * k^(2r+1)) random non-quiescent outputs at shuffled slots.

    The all-quiescent neighborhood (slot 0) always maps to quiescent, as in
    Langton's construction, so lambda = 1 is unreachable.
    """
    size = k ** (2 * r + 1)
    count = nonquiescent_count(lambda_target, size)
    if count > size - 1:
        raise DomainError(
            f"lambda {lambda_target} needs {count} non-quiescent outputs; at most {size - 1} "
            "are available with the quiescent neighborhood fixed"
        )
    rng = seed if isinstance(seed, SplitMix64) else SplitMix64(seed)
    slots = list(range(1, size))
    rng.shuffle(slots)
    outputs = [QUIESCENT] * size
    for slot in slots[:count]:
        outputs[slot] = 1 + rng.below(k - 1)
    return RuleTable(k, r, tuple(outputs))


def random_row(width: int, k: int, rng: SplitMix64) -> list[int]:
    return [rng.below(k) for _ in range(width)]


def _neighborhood_index(row: np.ndarray, k: int, r: int) -> np.ndarray:
    idx = np.zeros_like(row)
    for offset in range(-r, r + 1):
        # np.roll(row, 1)[i] == row[i-1], i.e. the left neighbor
        idx = idx * k + np.roll(row, -offset)
    return idx


def evolve(rule: RuleTable, initial: Sequence[int], steps: int) -> SpacetimeDiagram:
    row = np.asarray(initial, dtype=np.int64)
    if row.ndim != 1:
        raise ValidationError("initial row must be 1-D")
    if len(row) < rule.neighborhood:
        raise WidthTooSmall(f"width {len(row)} smaller than neighborhood {rule.neighborhood}")
    if steps < 0:
        raise ValidationError("steps must be >= 0")
    if len(row) and (row.min() < 0 or row.max() >= rule.states_k):
        raise ValidationError(f"initial states must lie in [0, {rule.states_k})")
    table = np.array(rule.outputs, dtype=np.int64)
    rows = np.empty((steps + 1, len(row)), dtype=np.int64)
    rows[0] = row
    for t in range(steps):
        rows[t + 1] = table[_neighborhood_index(rows[t], rule.states_k, rule.radius_r)]
    return SpacetimeDiagram(rows, rule.states_k)


def _tail(d: SpacetimeDiagram, transient_cutoff: int) -> np.ndarray:
    if transient_cutoff < 0 or transient_cutoff > d.steps:
        raise DomainError(
            f"transient_cutoff {transient_cutoff} leaves no rows (diagram has {d.steps} steps)"
        )
    return d.rows[transient_cutoff:]


def site_entropy(d: SpacetimeDiagram, transient_cutoff: int = 0) -> float:
    """Normalized Shannon entropy of cell states pooled over rows t >= cutoff."""
    counts = np.bincount(_tail(d, transient_cutoff).ravel(), minlength=d.states_k)
    probs = counts / counts.sum()
    return shannon_entropy(probs) / math.log2(d.states_k)


def activity(d: SpacetimeDiagram, transient_cutoff: int = 0) -> float:
    tail = _tail(d, transient_cutoff)
    return float(np.count_nonzero(tail != QUIESCENT)) / tail.size


def classify_heuristic(
    d: SpacetimeDiagram,
    p_max: int = 16,
    entropy_threshold: float = 0.9,
    transient_cutoff: int | None = None,
) -> str:
    """Rough Wolfram class from the tail of a diagram; an approximation, not a decision.

    I: final row homogeneous and fixed; II: final row recurs within ``p_max``
    steps; III: tail site entropy >= threshold; IV: anything else.
    """
    if d.steps < 2:
        raise DomainError("classification needs at least 2 steps")
    rows = d.rows
    last = rows[-1]
    if np.all(last == last[0]) and np.array_equal(last, rows[-2]):
        return "I"
    for p in range(1, min(p_max, d.steps) + 1):
        if np.array_equal(last, rows[-1 - p]):
            return "II"
    cutoff = d.steps // 2 if transient_cutoff is None else transient_cutoff
    if site_entropy(d, cutoff) >= entropy_threshold:
        return "III"
    return "IV"


def _run_sample(cfg: SweepConfig, lam: float, ordinal: int) -> SweepRecord:
    sample_seed = derive_seed(cfg.seed, ordinal)
    rng = SplitMix64(sample_seed)
    rule = random_rule_with_lambda(cfg.states_k, cfg.radius_r, lam, rng)
    diagram = evolve(rule, random_row(cfg.width, cfg.states_k, rng), cfg.steps)
    eta = site_entropy(diagram, cfg.transient_cutoff)
    # eta = 0 sits outside the capacity formula's domain; its limit there is m
    capacity = emergent_capacity(EmergenceInput(cfg.width, eta)) if eta > 0 else float(cfg.width)
    return SweepRecord(
        lam=lam,
        seed=sample_seed,
        site_entropy_eta=eta,
        capacity=capacity,
        activity=activity(diagram, cfg.transient_cutoff),
        class_heuristic=classify_heuristic(diagram, transient_cutoff=cfg.transient_cutoff),
    )


def _run_batch(args):
    cfg, jobs = args
    return [_run_sample(cfg, lam, ordinal) for lam, ordinal in jobs]


def lambda_sweep(cfg: SweepConfig) -> list[SweepRecord]:
    """Records ordered by (lambda ascending, sample ordinal ascending)."""
    jobs = [
        (lam, ordinal)
        for lam in sorted(set(cfg.lambda_grid))
        for ordinal in range(cfg.samples_per_lambda)
    ]
    if cfg.workers <= 1:
        return _run_batch((cfg, jobs))
    chunks = [jobs[i :: cfg.workers] for i in range(cfg.workers)]
    results: dict[tuple[float, int], SweepRecord] = {}
    with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
        for chunk, records in zip(chunks, pool.map(_run_batch, [(cfg, c) for c in chunks])):
            results.update(zip(chunk, records))
    return [results[job] for job in jobs]


def mean_eta_by_lambda(records: Sequence[SweepRecord]) -> dict[float, float]:
    groups: dict[float, list[float]] = {}
    for rec in records:
        groups.setdefault(rec.lam, []).append(rec.site_entropy_eta)
    return {lam: math.fsum(v) / len(v) for lam, v in sorted(groups.items())}


def empirical_lambda_c(records: Sequence[SweepRecord]) -> float:
    """Grid lambda with the largest mean activity (ties: smallest lambda)."""
    groups: dict[float, list[float]] = {}
    for rec in records:
        groups.setdefault(rec.lam, []).append(rec.activity)
    means = {lam: math.fsum(v) / len(v) for lam, v in sorted(groups.items())}
    return max(means, key=lambda lam: (means[lam], -lam))
