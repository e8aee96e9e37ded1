"""End-to-end operations behind the CLI subcommands.

Each stage is a pure function from documents to documents; determinism is
inherited from the seeded generator, the canonical mesh, and the exact
geometry, so re-running any stage on the same inputs reproduces its output
byte for byte.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import InconsistentInputError, InvalidInputError
from .field import MobileSensor, Sensor, SensorField
from .files import ReportDoc, ScenarioDoc, round_sig
from .geometry import Point
from .healing import (
    Assignment,
    HealingPlan,
    TargetLocation,
    apply_plan,
    plan_relocation,
    select_target,
)
from .holes import HoleReport, detect_holes
from .mesh import TriMesh, triangulate
from .oracle import CoverageEstimate, mc_coverage_fraction

# Report-metadata note for the vertex-sector total used by the case formula.
SECTOR_SUM_CONVENTION = "0.5*pi*R^2"


def generate_scenario(
    width: float,
    height: float,
    n_stationary: int,
    n_mobile: int,
    sensing_radius: float,
    mobile_radius: float,
    seed: int,
) -> ScenarioDoc:
    """Uniform random scenario; same seed, same scenario, bit for bit.

    Stationary sensors get ids ``0..n_stationary-1``, mobiles continue the
    sequence. Positions are quantized to the file precision at creation so
    the in-memory field equals its round-tripped form exactly.
    """
    if n_stationary < 3:
        raise InvalidInputError(
            f"need at least 3 stationary sensors, got {n_stationary}"
        )
    if n_mobile < 0:
        raise InvalidInputError(f"mobile count must be >= 0, got {n_mobile}")
    rng = np.random.default_rng(seed)
    coords = rng.random((n_stationary + n_mobile, 2))
    coords[:, 0] *= width
    coords[:, 1] *= height
    stationary = tuple(
        Sensor(i, Point(round_sig(coords[i, 0]), round_sig(coords[i, 1])))
        for i in range(n_stationary)
    )
    mobile = tuple(
        MobileSensor(
            n_stationary + j,
            Point(
                round_sig(coords[n_stationary + j, 0]),
                round_sig(coords[n_stationary + j, 1]),
            ),
            mobile_radius,
        )
        for j in range(n_mobile)
    )
    field = SensorField(
        width=width,
        height=height,
        sensing_radius=sensing_radius,
        stationary=stationary,
        mobile=mobile,
    )
    meta = {
        "seed": seed,
        "n_stationary": n_stationary,
        "n_mobile": n_mobile,
        "generator": "uniform",
    }
    return ScenarioDoc(field=field, meta=meta)


def _hole_reports_to_entries(reports: Sequence[HoleReport], mesh: TriMesh) -> list:
    cells = {c.id: c for c in mesh.cells}
    return [
        {
            "id": r.cell_id,
            "vertices": list(cells[r.cell_id].sensor_ids),
            "case": r.label.value,
            "s_h": r.hole_area,
            "method": r.computation.method,
            "is_hole": r.is_hole,
        }
        for r in reports
    ]


def run_detect(
    scenario: ScenarioDoc, method: str = "auto", epsilon: float | None = None
) -> ReportDoc:
    """Triangulate, evaluate every cell, and build the detection report."""
    mesh = triangulate(scenario.field)
    reports = detect_holes(scenario.field, mesh, method=method, epsilon=epsilon)
    meta = {
        "method": method,
        "sector_sum_convention": SECTOR_SUM_CONVENTION,
    }
    if epsilon is not None:
        meta["epsilon"] = epsilon
    return ReportDoc(
        scenario_hash=scenario.hash(),
        mesh=mesh.summary(),
        triangles=_hole_reports_to_entries(reports, mesh),
        meta=meta,
    )


def _check_hash(report: ReportDoc, scenario: ScenarioDoc) -> None:
    if report.scenario_hash != scenario.hash():
        raise InconsistentInputError(
            "report was produced from a different scenario "
            f"(hash {report.scenario_hash[:12]}... != {scenario.hash()[:12]}...)"
        )


def targets_from_report(
    report: ReportDoc, scenario: ScenarioDoc, mobile_radius: float
) -> list[TargetLocation]:
    """Recompute hole targets for the report's flagged triangles."""
    if report.triangles is None:
        raise InvalidInputError("report has no detection section")
    _check_hash(report, scenario)
    mesh = triangulate(scenario.field)
    detections = detect_holes(
        scenario.field,
        mesh,
        method=report.meta.get("method", "auto"),
        epsilon=report.meta.get("epsilon"),
    )
    bounds = (scenario.field.width, scenario.field.height)
    cells = {c.id: c for c in mesh.cells}
    return [
        select_target(r, cells[r.cell_id].geom, mobile_radius, bounds=bounds)
        for r in detections
        if r.is_hole
    ]


def plan_to_dict(plan: HealingPlan, mobile_radius: float) -> dict:
    return {
        "mobile_radius": mobile_radius,
        "assignments": [
            {
                "mobile_id": a.mobile_id,
                "cell_id": a.target.cell_id,
                "kind": a.target.kind,
                "target": {"x": a.target.point.x, "y": a.target.point.y},
                "distance": a.distance,
            }
            for a in plan.assignments
        ],
        "total_movement": plan.total_movement,
        "unserved": [t.cell_id for t in plan.unserved],
    }


def run_plan(
    report: ReportDoc, scenario: ScenarioDoc, mobile_radius: float
) -> ReportDoc:
    """Extend a detection report with a relocation plan."""
    targets = targets_from_report(report, scenario, mobile_radius)
    plan = plan_relocation(targets, scenario.field)
    return ReportDoc(
        scenario_hash=report.scenario_hash,
        mesh=report.mesh,
        triangles=report.triangles,
        plan=plan_to_dict(plan, mobile_radius),
        verify=report.verify,
        meta=report.meta,
    )


def plan_from_report(report: ReportDoc, scenario: ScenarioDoc) -> HealingPlan:
    """Rebuild a HealingPlan object from a report's plan section."""
    if report.plan is None:
        raise InvalidInputError("report has no plan section")
    _check_hash(report, scenario)
    by_cell = {}
    if report.triangles is not None:
        by_cell = {t["id"]: t for t in report.triangles}
    assignments = []
    for a in report.plan["assignments"]:
        cell_id = a["cell_id"]
        hole = by_cell.get(cell_id, {}).get("s_h", 0.0)
        target = TargetLocation(
            cell_id=cell_id,
            kind=a["kind"],
            point=Point(a["target"]["x"], a["target"]["y"]),
            hole_area=hole,
        )
        assignments.append(
            Assignment(mobile_id=a["mobile_id"], target=target, distance=a["distance"])
        )
    unserved = tuple(
        TargetLocation(cell_id=cid, kind="", point=Point(0.0, 0.0), hole_area=0.0)
        for cid in report.plan["unserved"]
    )
    return HealingPlan(
        assignments=tuple(assignments),
        total_movement=report.plan["total_movement"],
        unserved=unserved,
    )


def run_verify(
    scenario: ScenarioDoc,
    plan: HealingPlan | None,
    samples: int,
    seed: int,
) -> tuple[CoverageEstimate, CoverageEstimate]:
    """Monte-Carlo coverage before and after applying a plan.

    The same seed drives both estimates (paired sampling); without a plan
    the two are identical.
    """
    before = mc_coverage_fraction(scenario.field, samples, seed)
    if plan is None:
        return before, before
    healed = apply_plan(scenario.field, plan)
    after = mc_coverage_fraction(healed, samples, seed)
    return before, after


def verify_to_dict(
    before: CoverageEstimate, after: CoverageEstimate
) -> dict:
    return {
        "before": before.covered_fraction,
        "after": after.covered_fraction,
        "samples": before.samples,
        "seed": before.seed,
        "half_width": max(before.half_width, after.half_width),
    }


def attach_verify(
    report: ReportDoc | None,
    scenario: ScenarioDoc,
    before: CoverageEstimate,
    after: CoverageEstimate,
) -> ReportDoc:
    """Merge a verification section into a report (or start a fresh one)."""
    section = verify_to_dict(before, after)
    if report is None:
        return ReportDoc(scenario_hash=scenario.hash(), verify=section)
    return ReportDoc(
        scenario_hash=report.scenario_hash,
        mesh=report.mesh,
        triangles=report.triangles,
        plan=report.plan,
        verify=section,
        meta=report.meta,
    )
