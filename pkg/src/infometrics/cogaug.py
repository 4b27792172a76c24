"""Cognitive work, gain and augmentation accounting over a ledger of steps.

Each step transforms an information stock (given directly as a structural
complexity psi, or as a Boolean category whose psi is computed) and is
performed by a human or by a cog (artificial cognitive agent).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from . import grit
from .errors import (
    LedgerError,
    NonpositiveEnergy,
    NonpositiveTime,
    UnresolvablePsi,
    ValidationError,
    ZeroBaseComplexity,
    ZeroWork,
)

AGENTS = ("human", "cog")
DIKW_LEVELS = ("data", "information", "knowledge", "wisdom")
BLOOM_LEVELS = ("remember", "understand", "apply", "analyze", "evaluate", "create")
UNBOUNDED = math.inf


@dataclass(frozen=True)
class StockSnapshot:
    psi: float | None = None
    category: grit.BooleanCategory | None = None
    dikw: str | None = None
    bloom: str | None = None

    def __post_init__(self):
        if (self.psi is None) == (self.category is None):
            raise UnresolvablePsi("snapshot needs exactly one of 'psi' or 'category'")
        if self.psi is not None and not self.psi >= 0:
            raise ValidationError(f"psi must be >= 0, got {self.psi}")
        if self.dikw is not None and self.dikw not in DIKW_LEVELS:
            raise ValidationError(f"dikw tag {self.dikw!r} not in {DIKW_LEVELS}")
        if self.bloom is not None and self.bloom not in BLOOM_LEVELS:
            raise ValidationError(f"bloom tag {self.bloom!r} not in {BLOOM_LEVELS}")

    def resolve(self) -> float:
        if self.psi is not None:
            return float(self.psi)
        return grit.psi(self.category)

    @classmethod
    def from_dict(cls, raw: dict) -> StockSnapshot:
        if not isinstance(raw, dict):
            raise UnresolvablePsi("snapshot must be an object")
        unknown = set(raw) - {"psi", "category", "dikw", "bloom"}
        if unknown:
            raise ValidationError(f"unknown snapshot keys {sorted(unknown)}")
        category = raw.get("category")
        return cls(
            psi=None if raw.get("psi") is None else float(raw["psi"]),
            category=None if category is None else grit.BooleanCategory.from_dict(category),
            dikw=raw.get("dikw"),
            bloom=raw.get("bloom"),
        )


@dataclass(frozen=True)
class Step:
    id: str
    agent: str
    stock_in: StockSnapshot
    stock_out: StockSnapshot
    psi_lost: float = 0.0
    time_s: float | None = None
    energy_j: float | None = None

    def __post_init__(self):
        if self.agent not in AGENTS:
            raise ValidationError(f"agent must be one of {AGENTS}, got {self.agent!r}")
        if not self.psi_lost >= 0:
            raise ValidationError(f"psi_lost must be >= 0, got {self.psi_lost}")
        if self.time_s is not None and not self.time_s > 0:
            raise NonpositiveTime(f"time_s must be > 0, got {self.time_s}")
        if self.energy_j is not None and not self.energy_j > 0:
            raise NonpositiveEnergy(f"energy_j must be > 0, got {self.energy_j}")

    @classmethod
    def from_dict(cls, raw: dict) -> Step:
        sid = str(raw.get("id", "?"))
        unknown = set(raw) - {"id", "agent", "in", "out", "psi_lost", "time_s", "energy_j"}
        try:
            if unknown:
                raise ValidationError(f"unknown step keys {sorted(unknown)}")
            if "id" not in raw:
                raise ValidationError("step is missing 'id'")
            if "in" not in raw or "out" not in raw:
                raise UnresolvablePsi("step needs both 'in' and 'out' snapshots")
            return cls(
                id=sid,
                agent=raw.get("agent"),
                stock_in=StockSnapshot.from_dict(raw["in"]),
                stock_out=StockSnapshot.from_dict(raw["out"]),
                psi_lost=float(raw.get("psi_lost", 0.0)),
                time_s=None if raw.get("time_s") is None else float(raw["time_s"]),
                energy_j=None if raw.get("energy_j") is None else float(raw["energy_j"]),
            )
        except LedgerError:
            raise
        except (ValidationError, TypeError, ValueError) as exc:
            raise LedgerError({sid: exc}) from None


@dataclass(frozen=True)
class Ledger:
    steps: tuple[Step, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        ids = [s.id for s in self.steps]
        dupes = sorted({i for i in ids if ids.count(i) > 1})
        if dupes:
            raise ValidationError(f"duplicate step ids: {dupes}")

    @classmethod
    def from_dict(cls, raw: dict) -> Ledger:
        if not isinstance(raw, dict) or not isinstance(raw.get("steps"), list):
            raise ValidationError("ledger must be an object with a 'steps' list")
        return cls(tuple(Step.from_dict(s) for s in raw["steps"]))


class AgentTotals(NamedTuple):
    W_H: float
    G_H: float
    W_C: float
    G_C: float


def step_work(s: Step) -> float:
    return abs(s.stock_out.resolve() - s.stock_in.resolve()) + s.psi_lost


def step_gain(s: Step) -> float:
    psi_in = s.stock_in.resolve()
    if psi_in <= 0:
        raise ZeroBaseComplexity(f"step {s.id}: gain undefined for psi_in = 0")
    return (s.stock_out.resolve() - psi_in) / psi_in


def agent_totals(l: Ledger) -> AgentTotals:
    sums = {("W", a): [] for a in AGENTS} | {("G", a): [] for a in AGENTS}
    for s in l.steps:
        sums[("W", s.agent)].append(step_work(s))
        sums[("G", s.agent)].append(step_gain(s))
    total = {key: math.fsum(v) for key, v in sums.items()}
    return AgentTotals(total[("W", "human")], total[("G", "human")], total[("W", "cog")], total[("G", "cog")])


def ensemble_totals(t: AgentTotals) -> tuple[float, float]:
    return t.W_H + t.W_C, t.G_H + t.G_C


def _ratio(cog: float, human: float) -> float:
    if cog == 0:
        return 0.0
    if human == 0:
        return UNBOUNDED
    return cog / human


def augmentation_factor(t: AgentTotals) -> tuple[float, float]:
    """(A+_W, A+_G): cog over human. 0 without cog contribution, UNBOUNDED without human."""
    return _ratio(t.W_C, t.W_H), _ratio(t.G_C, t.G_H)


def efficiency(G: float, W: float) -> float:
    if W == 0:
        raise ZeroWork("efficiency undefined for zero work")
    return G / W


def power(x: float, t: float) -> float:
    if not t > 0:
        raise NonpositiveTime(f"time must be > 0, got {t}")
    return x / t


def density(x: float, E: float) -> float:
    if not E > 0:
        raise NonpositiveEnergy(f"energy must be > 0, got {E}")
    return x / E


@dataclass
class StepMetrics:
    id: str
    agent: str
    psi_in: float
    psi_out: float
    work: float
    gain: float
    xi: float | None = None
    P_G: float | None = None
    P_W: float | None = None
    D_G: float | None = None
    D_W: float | None = None


def _rates(gain: float, work: float, time_s, energy_j) -> dict:
    out = {"xi": efficiency(gain, work) if work > 0 else None}
    if time_s is not None:
        out["P_G"], out["P_W"] = power(gain, time_s), power(work, time_s)
    if energy_j is not None:
        out["D_G"], out["D_W"] = density(gain, energy_j), density(work, energy_j)
    return out


@dataclass
class LedgerReport:
    W_H: float
    W_C: float
    G_H: float
    G_C: float
    W_total: float
    G_total: float
    A_plus_W: float
    A_plus_G: float
    steps: list[StepMetrics] = field(default_factory=list)
    xi: float | None = None
    P_G: float | None = None
    P_W: float | None = None
    D_G: float | None = None
    D_W: float | None = None

    def to_dict(self) -> dict:
        """Stable key order; metrics that do not apply are left out."""
        def opt(d: dict, obj, names) -> dict:
            for name in names:
                v = getattr(obj, name)
                if v is not None:
                    d[name.lower()] = v
            return d

        out = {
            "w_h": self.W_H,
            "w_c": self.W_C,
            "g_h": self.G_H,
            "g_c": self.G_C,
            "w_total": self.W_total,
            "g_total": self.G_total,
            "a_plus_w": self.A_plus_W,
            "a_plus_g": self.A_plus_G,
        }
        opt(out, self, ("xi", "P_G", "P_W", "D_G", "D_W"))
        out["steps"] = [
            opt(
                {
                    "id": s.id,
                    "agent": s.agent,
                    "psi_in": s.psi_in,
                    "psi_out": s.psi_out,
                    "work": s.work,
                    "gain": s.gain,
                },
                s,
                ("xi", "P_G", "P_W", "D_G", "D_W"),
            )
            for s in self.steps
        ]
        return out


def _evaluate_step(s: Step) -> StepMetrics:
    work, gain = step_work(s), step_gain(s)
    return StepMetrics(
        s.id, s.agent, s.stock_in.resolve(), s.stock_out.resolve(), work, gain,
        **_rates(gain, work, s.time_s, s.energy_j),
    )


def evaluate_ledger(l: Ledger) -> LedgerReport:
    metrics: list[StepMetrics] = []
    failures = {}
    for s in l.steps:
        try:
            metrics.append(_evaluate_step(s))
        except (ValidationError, ValueError) as exc:
            failures[s.id] = exc
    if failures:
        raise LedgerError(failures)

    def total(attr, agent):
        return math.fsum(getattr(m, attr) for m in metrics if m.agent == agent)

    t = AgentTotals(total("work", "human"), total("gain", "human"), total("work", "cog"), total("gain", "cog"))
    w_star, g_star = ensemble_totals(t)
    a_w, a_g = augmentation_factor(t)
    times = [s.time_s for s in l.steps]
    energies = [s.energy_j for s in l.steps]
    aggregate = _rates(
        g_star,
        w_star,
        math.fsum(times) if metrics and None not in times else None,
        math.fsum(energies) if metrics and None not in energies else None,
    )
    return LedgerReport(
        W_H=t.W_H, W_C=t.W_C, G_H=t.G_H, G_C=t.G_C, W_total=w_star, G_total=g_star,
        A_plus_W=a_w, A_plus_G=a_g, steps=metrics, **aggregate,
    )


def retag(l: Ledger, agent: str | None = None, dikw=..., bloom=...) -> Ledger:
    """Copy of a ledger with agents and/or metadata tags overwritten on every step."""
    from dataclasses import replace

    def snap(s: StockSnapshot) -> StockSnapshot:
        changes = {}
        if dikw is not ...:
            changes["dikw"] = dikw
        if bloom is not ...:
            changes["bloom"] = bloom
        return replace(s, **changes)

    steps: Iterable[Step] = (
        replace(s, agent=agent or s.agent, stock_in=snap(s.stock_in), stock_out=snap(s.stock_out))
        for s in l.steps
    )
    return Ledger(tuple(steps))
