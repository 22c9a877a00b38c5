"""Scenario simulation loop and CSV/JSON reporting.

CSV columns, in order:
``t,env_behavior,sys_behavior,supply_kind,supply,fit,actions,cost,cum_cost,mode``.
Behaviors use the textual grammar, negative infinity is written ``-inf``,
the actions cell joins action tokens with ``;`` and mode is empty unless
the scenario defines sensors or critical figures.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass

from .behavior import Behavior, BehaviorClass, format_behavior
from .controller import Controller, SystemState, format_action, tick_cost
from .environment import EnvironmentTrace, fig2_trace, generate_trace
from .metrics import NEG_INFINITY, FitVariant, SupplyReport, fit, supply
from .scenario import Scenario, ScenarioError, validate_scenario
from .sensors import awareness_mode, select_sensors

__all__ = [
    "CSV_COLUMNS",
    "RunReport",
    "RunSummary",
    "TickRow",
    "fig2_scenario",
    "render_csv",
    "render_json",
    "run_scenario",
    "scenario_trace",
]

CSV_COLUMNS = (
    "t",
    "env_behavior",
    "sys_behavior",
    "supply_kind",
    "supply",
    "fit",
    "actions",
    "cost",
    "cum_cost",
    "mode",
)


@dataclass(frozen=True)
class TickRow:
    t: int
    env_behavior: Behavior
    sys_behavior: Behavior
    supply: SupplyReport
    fit: float
    actions: tuple[str, ...]
    cost: float
    cum_cost: float
    mode: float | None


@dataclass(frozen=True)
class RunSummary:
    ticks: int
    mean_finite_fit: float
    neg_inf_ticks: int
    total_cost: float


@dataclass(frozen=True)
class RunReport:
    name: str
    rows: tuple[TickRow, ...]
    summary: RunSummary


def fig2_scenario() -> Scenario:
    """The worked-example scenario: a static system over figures 1-4
    facing the five-segment demonstration trace."""
    return Scenario(
        name="fig2",
        universe=frozenset("12345"),
        trace=fig2_trace(),
        initial_behavior=Behavior(BehaviorClass.PURPOSEFUL, figures=frozenset("1234")),
    )


def _summarize(rows: list[TickRow]) -> RunSummary:
    finite = [row.fit for row in rows if row.fit != NEG_INFINITY]
    return RunSummary(
        ticks=len(rows),
        mean_finite_fit=math.fsum(finite) / len(finite) if finite else 0.0,
        neg_inf_ticks=len(rows) - len(finite),
        total_cost=rows[-1].cum_cost if rows else 0.0,
    )


def scenario_trace(scenario: Scenario, seed: int | None = None) -> EnvironmentTrace:
    """The trace a run would use: the fixed one, or the generated one
    (with the seed override applied)."""
    if scenario.trace is not None:
        return scenario.trace
    spec = scenario.turbulence
    if spec is None:
        raise ScenarioError("scenario has neither a trace nor a turbulence spec")
    if seed is not None:
        spec = spec.with_seed(seed)
    return generate_trace(spec, scenario.universe)


def run_scenario(
    scenario: Scenario,
    *,
    seed: int | None = None,
    variant: FitVariant | None = None,
    weight: float | None = None,
) -> RunReport:
    """Simulate one scenario tick by tick; deterministic for a fixed seed.

    ``seed``, ``variant`` and ``weight`` override the scenario's values
    (the seed only applies to generated traces).
    """
    violations = validate_scenario(scenario)
    if violations:
        raise ScenarioError("scenario is invalid:\n" + "\n".join(violations))
    variant = variant if variant is not None else scenario.variant
    weight = weight if weight is not None else scenario.weight
    trace = scenario_trace(scenario, seed)
    if scenario.sensors:
        rows = _run_sensors(scenario, trace, variant)
    elif scenario.predictor is not None:
        rows = _run_controller(scenario, trace, variant, weight)
    else:
        rows = _run_static(scenario, trace, variant)
    return RunReport(scenario.name, tuple(rows), _summarize(rows))


def _mode_level(scenario: Scenario, env: Behavior) -> float | None:
    if not scenario.sensors and not scenario.critical:
        return None
    return awareness_mode(env.figures, scenario.critical).level


def _run_static(scenario: Scenario, trace: EnvironmentTrace, variant: FitVariant) -> list[TickRow]:
    state = SystemState(scenario.initial_behavior)
    cost = tick_cost(state, scenario.costs)
    rows = []
    for t in range(trace.horizon):
        env = trace.behavior_at(t)
        report = supply(state.behavior, env)
        rows.append(
            TickRow(
                t,
                env,
                state.behavior,
                report,
                fit(report, variant),
                (),
                cost,
                cost * (t + 1),
                _mode_level(scenario, env),
            )
        )
    return rows


def _run_controller(
    scenario: Scenario, trace: EnvironmentTrace, variant: FitVariant, weight: float
) -> list[TickRow]:
    controller = Controller(
        scenario.capability, scenario.costs, scenario.predictor, weight, variant
    )
    state = SystemState(scenario.initial_behavior)
    rows = []
    for t in range(trace.horizon):
        env = trace.behavior_at(t)
        before = state.cum_cost
        result = controller.step(state, env, oracle_next=env)
        state = result.state
        rows.append(
            TickRow(
                t,
                env,
                state.behavior,
                result.supply,
                result.fit,
                tuple(format_action(a) for a in result.actions),
                state.cum_cost - before,
                state.cum_cost,
                _mode_level(scenario, env),
            )
        )
    return rows


def _run_sensors(scenario: Scenario, trace: EnvironmentTrace, variant: FitVariant) -> list[TickRow]:
    by_id = {sensor.id: sensor for sensor in scenario.sensors}
    cum = 0.0
    rows = []
    for t in range(trace.horizon):
        env = trace.behavior_at(t)
        active = env.figures
        mode = awareness_mode(active, scenario.critical)
        chosen = sorted(select_sensors(active, scenario.sensors, mode, scenario.critical))
        covered: frozenset[str] = frozenset()
        for sensor_id in chosen:
            covered |= by_id[sensor_id].coverage
        # The sensed behavior mirrors the environment's class: the network
        # tracks the situation, its scope is whatever the sensors cover.
        system = Behavior(env.klass, figures=covered)
        cost = sum(by_id[sensor_id].energy_cost for sensor_id in chosen)
        cum += cost
        report = supply(system, env)
        rows.append(
            TickRow(
                t,
                env,
                system,
                report,
                fit(report, variant),
                tuple(f"activate:{sensor_id}" for sensor_id in chosen),
                cost,
                cum,
                mode.level,
            )
        )
    return rows


def _csv_float(x: float) -> str:
    return repr(x)


def render_csv(report: RunReport) -> str:
    # behavior cells carry commas, so fields are quoted the standard way
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in report.rows:
        writer.writerow(
            (
                str(row.t),
                format_behavior(row.env_behavior),
                format_behavior(row.sys_behavior),
                row.supply.kind.value,
                _csv_float(row.supply.value),
                _csv_float(row.fit),
                ";".join(row.actions),
                _csv_float(row.cost),
                _csv_float(row.cum_cost),
                "" if row.mode is None else _csv_float(row.mode),
            )
        )
    return buffer.getvalue()


def render_json(report: RunReport) -> str:
    def fit_value(x: float):
        return "-inf" if x == NEG_INFINITY else x

    payload = {
        "name": report.name,
        "summary": {
            "ticks": report.summary.ticks,
            "mean_finite_fit": report.summary.mean_finite_fit,
            "neg_inf_ticks": report.summary.neg_inf_ticks,
            "total_cost": report.summary.total_cost,
        },
        "rows": [
            {
                "t": row.t,
                "env_behavior": format_behavior(row.env_behavior),
                "sys_behavior": format_behavior(row.sys_behavior),
                "supply_kind": row.supply.kind.value,
                "supply": row.supply.value,
                "fit": fit_value(row.fit),
                "actions": list(row.actions),
                "cost": row.cost,
                "cum_cost": row.cum_cost,
                "mode": row.mode,
            }
            for row in report.rows
        ],
    }
    return json.dumps(payload, indent=2) + "\n"
