"""Discrete entropy and information measures.

All functions take an ``EntropyUnits`` (default: bits, K = 1) and use the
convention 0 * log 0 = 0. Distributions are validated and never renormalized.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Hashable, Sequence

import numpy as np

from .errors import (
    DomainError,
    EmptyInput,
    LengthMismatch,
    NegativeProbability,
    SumOutOfTolerance,
    ValidationError,
)

SUM_TOLERANCE = 1e-9


@dataclass(frozen=True)
class EntropyUnits:
    base: float = 2.0
    scale_K: float = 1.0

    def __post_init__(self):
        if not self.base > 1:
            raise DomainError(f"logarithm base must be > 1, got {self.base}")
        if not self.scale_K > 0:
            raise DomainError(f"scale_K must be > 0, got {self.scale_K}")

    def log(self, x: float) -> float:
        if self.base == 2.0:
            return math.log2(x)
        return math.log(x) / math.log(self.base)


BITS = EntropyUnits(2.0)
NATS = EntropyUnits(math.e)


@dataclass(frozen=True)
class ProbabilityDistribution:
    probabilities: tuple[float, ...]

    def __post_init__(self):
        probs = tuple(float(p) for p in self.probabilities)
        if not probs:
            raise EmptyInput("distribution is empty")
        for i, p in enumerate(probs):
            if math.isnan(p) or p < 0:
                raise NegativeProbability(f"probability[{i}] = {p} is negative or NaN")
        total = math.fsum(probs)
        if abs(total - 1.0) > SUM_TOLERANCE:
            raise SumOutOfTolerance(
                f"probabilities sum to {total!r}; |sum - 1| exceeds tolerance {SUM_TOLERANCE:g}"
            )
        object.__setattr__(self, "probabilities", probs)

    def __len__(self):
        return len(self.probabilities)

    def __iter__(self):
        return iter(self.probabilities)

    @property
    def support(self) -> tuple[float, ...]:
        return tuple(p for p in self.probabilities if p > 0)


@dataclass(frozen=True)
class JointDistribution:
    """Joint p(x, y); rows index X, columns index Y."""

    matrix: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(float(v) for v in row) for row in self.matrix)
        if not rows or not rows[0]:
            raise EmptyInput("joint distribution is empty")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise LengthMismatch("joint distribution rows have unequal lengths")
        flat = [v for r in rows for v in r]
        for v in flat:
            if math.isnan(v) or v < 0:
                raise NegativeProbability(f"joint entry {v} is negative or NaN")
        total = math.fsum(flat)
        if abs(total - 1.0) > SUM_TOLERANCE:
            raise SumOutOfTolerance(
                f"joint entries sum to {total!r}; |sum - 1| exceeds tolerance {SUM_TOLERANCE:g}"
            )
        object.__setattr__(self, "matrix", rows)

    @property
    def array(self) -> np.ndarray:
        return np.array(self.matrix, dtype=float)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.matrix), len(self.matrix[0])

    def marginal_x(self) -> ProbabilityDistribution:
        return ProbabilityDistribution(tuple(math.fsum(r) for r in self.matrix))

    def marginal_y(self) -> ProbabilityDistribution:
        return ProbabilityDistribution(tuple(math.fsum(c) for c in zip(*self.matrix)))

    def transpose(self) -> JointDistribution:
        return JointDistribution(tuple(zip(*self.matrix)))


@dataclass(frozen=True)
class MessageSpec:
    alphabet_size_S: int
    length_N: int

    def __post_init__(self):
        if self.alphabet_size_S < 1:
            raise DomainError(f"alphabet size must be >= 1, got {self.alphabet_size_S}")
        if self.length_N < 0:
            raise DomainError(f"message length must be >= 0, got {self.length_N}")


@dataclass(frozen=True)
class MicrostateCount:
    W: float
    k: float = 1.0

    def __post_init__(self):
        if not self.W >= 1:
            raise DomainError(f"microstate count W must be >= 1, got {self.W}")
        if not self.k > 0:
            raise DomainError(f"k must be > 0, got {self.k}")


def _dist(d) -> ProbabilityDistribution:
    return d if isinstance(d, ProbabilityDistribution) else ProbabilityDistribution(tuple(d))


def _joint(j) -> JointDistribution:
    return j if isinstance(j, JointDistribution) else JointDistribution(tuple(map(tuple, j)))


def validate_distribution(raw: Sequence[float]) -> ProbabilityDistribution:
    return ProbabilityDistribution(tuple(raw))


def validate_joint(raw: Sequence[Sequence[float]]) -> JointDistribution:
    return JointDistribution(tuple(tuple(r) for r in raw))


def _plogp_sum(probs, u: EntropyUnits) -> float:
    return math.fsum(p * u.log(p) for p in probs if p > 0)


def _nonneg(x: float) -> float:
    # also maps -0.0 to 0.0
    return x if x > 0 else 0.0


def boltzmann_entropy(m: MicrostateCount) -> float:
    """k ln W."""
    return m.k * math.log(m.W)


def shannon_entropy(d, u: EntropyUnits = BITS) -> float:
    d = _dist(d)
    h = -u.scale_K * _plogp_sum(d.probabilities, u)
    return _nonneg(h)


def gibbs_entropy(d, k: float = 1.0) -> float:
    """Thermodynamic entropy -k sum p ln p (nonnegative form)."""
    d = _dist(d)
    return _nonneg(-k * math.fsum(p * math.log(p) for p in d.probabilities if p > 0))


def max_entropy(n: int, u: EntropyUnits = BITS) -> float:
    return u.scale_K * u.log(n)


def negentropy(d, u: EntropyUnits = BITS) -> float:
    """Distance below the maximum entropy of a distribution with the same number of outcomes."""
    d = _dist(d)
    return max_entropy(len(d), u) - shannon_entropy(d, u)


def hartley_information(m: MessageSpec, u: EntropyUnits = BITS) -> float:
    return m.length_N * u.scale_K * u.log(m.alphabet_size_S)


def message_information(d, m: int, u: EntropyUnits = BITS) -> float:
    if m < 0:
        raise DomainError(f"message length must be >= 0, got {m}")
    return m * shannon_entropy(d, u)


def joint_entropy(j, u: EntropyUnits = BITS) -> float:
    j = _joint(j)
    return _nonneg(-u.scale_K * _plogp_sum((v for r in j.matrix for v in r), u))


def conditional_entropy(j, u: EntropyUnits = BITS) -> float:
    """H(X|Y) with p(x|y) = p(x,y)/p(y); columns with p(y) = 0 contribute nothing."""
    j = _joint(j)
    py = j.marginal_y().probabilities
    terms = []
    for row in j.matrix:
        for y, pxy in enumerate(row):
            if pxy > 0 and py[y] > 0:
                terms.append(pxy * u.log(pxy / py[y]))
    return _nonneg(-u.scale_K * math.fsum(terms))


def mutual_information(j, u: EntropyUnits = BITS) -> float:
    j = _joint(j)
    px = j.marginal_x().probabilities
    py = j.marginal_y().probabilities
    terms = []
    for x, row in enumerate(j.matrix):
        for y, pxy in enumerate(row):
            if pxy > 0:
                terms.append(pxy * u.log(pxy / (px[x] * py[y])))
    return u.scale_K * math.fsum(terms)


def relative_entropy(p, q, u: EntropyUnits = BITS) -> float:
    """KL divergence D(p||q); +inf when p puts mass where q has none."""
    p, q = _dist(p), _dist(q)
    if len(p) != len(q):
        raise LengthMismatch(f"distributions have lengths {len(p)} and {len(q)}")
    terms = []
    for pi, qi in zip(p, q):
        if pi == 0:
            continue
        if qi == 0:
            return math.inf
        terms.append(pi * u.log(pi / qi))
    return _nonneg(u.scale_K * math.fsum(terms))


def renyi_entropy(d, alpha: float, u: EntropyUnits = BITS) -> float:
    if alpha < 0 or math.isnan(alpha):
        raise DomainError(f"Renyi order alpha must be >= 0, got {alpha}")
    d = _dist(d)
    support = d.support
    if alpha == 1:
        return shannon_entropy(d, u)
    if alpha == 0:
        return u.scale_K * u.log(len(support))
    s = math.fsum(p**alpha for p in support)
    return _nonneg(u.scale_K * u.log(s) / (1.0 - alpha))


def normalized_entropy(d) -> float:
    d = _dist(d)
    if len(d) < 2:
        raise DomainError("normalized entropy needs at least 2 outcomes (maximum entropy is 0)")
    return shannon_entropy(d, BITS) / math.log2(len(d))


def empirical_distribution(message: Sequence[Hashable]) -> ProbabilityDistribution:
    """Relative symbol frequencies, ordered by first appearance."""
    if len(message) == 0:
        raise EmptyInput("message is empty")
    counts = Counter(message)  # dict order == first appearance
    n = len(message)
    return ProbabilityDistribution(tuple(c / n for c in counts.values()))


def parse_distribution(text: str) -> ProbabilityDistribution:
    """Parse ``"0.5,0.25,0.25"`` or a JSON array."""
    text = text.strip()
    if text.startswith("["):
        import json

        try:
            values = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"dist: invalid JSON array: {exc}") from None
    else:
        values = [v for v in text.split(",") if v.strip()]
    try:
        return validate_distribution([float(v) for v in values])
    except (TypeError, ValueError) as exc:
        if isinstance(exc, ValidationError):
            raise
        raise ValidationError(f"dist: not a list of numbers: {text!r}") from None
