"""Environment turbulence: piecewise-constant behavior traces over ticks.

A trace is a contiguous sequence of segments starting at tick 0, each
holding the environment behavior for its duration. Environment behaviors
always name the figures they affect (a figure set, possibly empty).

Trace text format, ingested and emitted by the CLI::

    # comment
    universe: 1,2,3,4,5
    0 10 pur{1,2,3,4}
    10 10 pur{1,4}
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass, replace

from .behavior import Behavior, BehaviorClass, format_behavior, parse_behavior

__all__ = [
    "EnvironmentTrace",
    "Segment",
    "SplitMix64",
    "TurbulenceSpec",
    "fig2_trace",
    "format_trace",
    "generate_trace",
    "parse_trace",
]


@dataclass(frozen=True)
class Segment:
    start: int
    duration: int
    behavior: Behavior

    def __post_init__(self):
        if self.start < 0:
            raise ValueError(f"segment start must be >= 0, got {self.start}")
        if self.duration < 1:
            raise ValueError(f"segment duration must be >= 1, got {self.duration}")
        if self.behavior.figures is None:
            raise ValueError("environment behaviors must name their figures")

    @property
    def end(self) -> int:
        return self.start + self.duration


@dataclass(frozen=True)
class EnvironmentTrace:
    """Contiguous, non-overlapping segments from tick 0, over a figure universe."""

    segments: tuple[Segment, ...]
    universe: frozenset[str]

    def __post_init__(self):
        if not isinstance(self.segments, tuple):
            object.__setattr__(self, "segments", tuple(self.segments))
        if not isinstance(self.universe, frozenset):
            object.__setattr__(self, "universe", frozenset(self.universe))
        if not self.segments:
            raise ValueError("trace needs at least one segment")
        expected = 0
        for seg in self.segments:
            if seg.start != expected:
                raise ValueError(
                    f"segments must be contiguous from 0; expected start {expected}, got {seg.start}"
                )
            if not seg.behavior.figures <= self.universe:
                extra = sorted(seg.behavior.figures - self.universe)
                raise ValueError(f"segment at {seg.start} references figures outside universe: {extra}")
            expected = seg.end

    @property
    def horizon(self) -> int:
        return self.segments[-1].end

    def behavior_at(self, t: int) -> Behavior:
        """Environment behavior at tick ``t``; raises IndexError out of range."""
        if not 0 <= t < self.horizon:
            raise IndexError(f"tick {t} outside trace range [0, {self.horizon})")
        starts = [seg.start for seg in self.segments]
        i = bisect.bisect_right(starts, t) - 1
        return self.segments[i].behavior


_FIG2_SETS = ("1,2,3,4", "1,4", "4", "1,2,3,4", "1,2,3,4,5")
FIG2_SEGMENT_TICKS = 10


def fig2_trace() -> EnvironmentTrace:
    """The worked five-segment example trace: purposeful behavior over
    figure sets {1,2,3,4}, {1,4}, {4}, {1,2,3,4}, {1,2,3,4,5}, ten ticks
    each, on the universe {1,...,5}."""
    segments = tuple(
        Segment(
            i * FIG2_SEGMENT_TICKS,
            FIG2_SEGMENT_TICKS,
            Behavior(BehaviorClass.PURPOSEFUL, figures=frozenset(figs.split(","))),
        )
        for i, figs in enumerate(_FIG2_SETS)
    )
    return EnvironmentTrace(segments, frozenset("12345"))


class SplitMix64:
    """Tiny portable RNG so generated traces are bit-stable everywhere.

    State advances by the 64-bit recurrence
    ``s += 0x9E3779B97F4A7C15``; each output mixes the new state with
    ``z ^= z >> 30; z *= 0xBF58476D1CE4E5B9; z ^= z >> 27;
    z *= 0x94D049BB133111EB; z ^= z >> 31`` (all mod 2^64).
    """

    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self._state = seed & self.MASK

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & self.MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 bits of precision."""
        return (self.next_u64() >> 11) / (1 << 53)


@dataclass(frozen=True)
class TurbulenceSpec:
    """Knobs for the seeded trace generator."""

    seed: int
    class_walk: float = 0.2
    figure_flip: float = 0.15
    mean_segment_len: int = 10
    horizon: int = 100

    def __post_init__(self):
        if not 0.0 <= self.class_walk <= 1.0:
            raise ValueError(f"class_walk must be in [0, 1], got {self.class_walk}")
        if not 0.0 <= self.figure_flip <= 1.0:
            raise ValueError(f"figure_flip must be in [0, 1], got {self.figure_flip}")
        if self.mean_segment_len < 1:
            raise ValueError(f"mean_segment_len must be >= 1, got {self.mean_segment_len}")
        if self.horizon < self.mean_segment_len:
            raise ValueError("horizon must be at least mean_segment_len")

    def with_seed(self, seed: int) -> "TurbulenceSpec":
        return replace(self, seed=seed)


def _geometric(rng: SplitMix64, mean: int) -> int:
    if mean <= 1:
        return 1
    p = 1.0 / mean
    u = rng.random()
    return int(math.floor(math.log1p(-u) / math.log1p(-p))) + 1


def generate_trace(spec: TurbulenceSpec, universe: frozenset[str]) -> EnvironmentTrace:
    """Deterministic turbulence trace for the given seed and universe.

    Draw order is fixed: first one uniform per figure (lexicographic
    order, inclusion at probability one half) for the initial set; then
    per segment one uniform for the length (geometric with the configured
    mean, truncated at the horizon), one uniform for the lazy class walk
    (and one more for its +/-1 direction, clamped to the class range),
    and one uniform per figure for membership flips. The first segment
    starts purposeful.
    """
    universe = frozenset(universe)
    rng = SplitMix64(spec.seed)
    ordered = sorted(universe)
    figures = {f for f in ordered if rng.random() < 0.5}
    rank = BehaviorClass.PURPOSEFUL.value
    segments = []
    t = 0
    while t < spec.horizon:
        length = min(_geometric(rng, spec.mean_segment_len), spec.horizon - t)
        behavior = Behavior(BehaviorClass(rank), figures=frozenset(figures))
        segments.append(Segment(t, length, behavior))
        t += length
        if rng.random() < spec.class_walk:
            delta = -1 if rng.random() < 0.5 else 1
            rank = min(5, max(1, rank + delta))
        for f in ordered:
            if rng.random() < spec.figure_flip:
                figures.symmetric_difference_update({f})
    return EnvironmentTrace(tuple(segments), universe)


def parse_trace(text: str) -> EnvironmentTrace:
    """Parse the line-oriented trace format (see module docstring)."""
    universe: frozenset[str] | None = None
    segments = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("universe:"):
            if universe is not None:
                raise ValueError(f"line {lineno}: duplicate universe header")
            tokens = [tok.strip() for tok in line[len("universe:"):].split(",")]
            universe = frozenset(tok for tok in tokens if tok)
            continue
        if universe is None:
            raise ValueError(f"line {lineno}: universe header must come first")
        fields = line.split(None, 2)
        if len(fields) != 3:
            raise ValueError(f"line {lineno}: expected 'start duration behavior', got {raw!r}")
        try:
            start, duration = int(fields[0]), int(fields[1])
        except ValueError:
            raise ValueError(f"line {lineno}: start and duration must be integers") from None
        segments.append(Segment(start, duration, parse_behavior(fields[2])))
    if universe is None:
        raise ValueError("trace text has no universe header")
    return EnvironmentTrace(tuple(segments), universe)


def format_trace(trace: EnvironmentTrace) -> str:
    """Canonical trace text; round-trips through parse_trace."""
    lines = ["universe: " + ",".join(sorted(trace.universe))]
    lines.extend(
        f"{seg.start} {seg.duration} {format_behavior(seg.behavior)}" for seg in trace.segments
    )
    return "\n".join(lines) + "\n"
