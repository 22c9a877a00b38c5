"""Supply and system-environment fit.

Supply is the signed behavioral distance between a system and its
environment at an instant; fit maps supply to (0, 1] with 1 for a perfect
match and negative infinity for any shortfall.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .behavior import Behavior, distance, precedes

__all__ = [
    "NEG_INFINITY",
    "FitVariant",
    "SupplyKind",
    "SupplyReport",
    "cost_adjusted_fit",
    "fit",
    "supply",
]

NEG_INFINITY = float("-inf")


class SupplyKind(Enum):
    PERFECT = "perfect"
    OVERSUPPLY = "oversupply"
    UNDERSUPPLY = "undersupply"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class SupplyReport:
    """Signed supply value plus its classification.

    value > 0 iff oversupply, value = 0 iff perfect, value < 0 for
    undersupply and for incomparable pairs.
    """

    value: float
    kind: SupplyKind

    def __post_init__(self):
        if self.kind is SupplyKind.PERFECT:
            consistent = self.value == 0
        elif self.kind is SupplyKind.OVERSUPPLY:
            consistent = self.value > 0
        else:
            consistent = self.value < 0
        if not consistent:
            raise ValueError(f"supply value {self.value} inconsistent with kind {self.kind.value}")


class FitVariant(Enum):
    LINEAR = "linear"
    QUADRATIC = "quadratic"


def supply(system: Behavior, environment: Behavior) -> SupplyReport:
    """Supply of a system relative to its environment.

    Positive distance when the system behavior strictly exceeds the
    environment's, negative when it falls strictly short, zero when they
    match. Incomparable pairs are reported with their own kind but count
    as a shortfall (negative value): some environmental figures are not
    covered.
    """
    if system == environment:
        return SupplyReport(0.0, SupplyKind.PERFECT)
    d = distance(system, environment)
    if precedes(environment, system):
        return SupplyReport(d, SupplyKind.OVERSUPPLY)
    if precedes(system, environment):
        return SupplyReport(-d, SupplyKind.UNDERSUPPLY)
    return SupplyReport(-d, SupplyKind.INCOMPARABLE)


def fit(report: SupplyReport, variant: FitVariant = FitVariant.LINEAR) -> float:
    """System-environment fit: 1 at perfect supply, decreasing with
    oversupply, negative infinity on any shortfall.

    The quadratic variant divides by 1 + supply squared instead of
    1 + supply.
    """
    s = report.value
    if s < 0:
        return NEG_INFINITY
    if variant is FitVariant.QUADRATIC:
        return 1.0 / (1.0 + s * s)
    return 1.0 / (1.0 + s)


def cost_adjusted_fit(fit_value: float, cost: float, weight: float) -> float:
    """Fit minus a linear cost penalty; negative infinity propagates."""
    if fit_value == NEG_INFINITY:
        return NEG_INFINITY
    return fit_value - weight * cost
