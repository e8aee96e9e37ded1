"""Relocation planning for mobile sensors to patch detected holes.

Each hole gets a target point inside (or for the circumcenter rule,
associated with) its triangle; mobiles are then assigned to targets by an
exact minimum-total-movement assignment.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import hypot, pi
from typing import Sequence

import numpy as np
from scipy.optimize import linear_sum_assignment

from .errors import InconsistentInputError, InvalidInputError
from .field import MobileSensor, SensorField
from .geometry import Point, TriangleGeom, circumcenter, incenter
from .holes import HoleReport

CIRCUMCENTER = "circumcenter"
INCENTER = "incenter"


@dataclass(frozen=True)
class TargetLocation:
    """Where a mobile should go to patch one triangle's hole."""

    cell_id: int
    kind: str
    point: Point
    hole_area: float


@dataclass(frozen=True)
class Assignment:
    """One mobile dispatched to one target."""

    mobile_id: int
    target: TargetLocation
    distance: float


@dataclass(frozen=True)
class HealingPlan:
    """A full relocation plan: assignments plus any unserved targets."""

    assignments: tuple[Assignment, ...]
    total_movement: float
    unserved: tuple[TargetLocation, ...]


def select_target(
    report: HoleReport,
    tri: TriangleGeom,
    mobile_radius: float,
    bounds: tuple[float, float] | None = None,
) -> TargetLocation:
    """Pick the patch point for one hole.

    Holes no larger than the mobile's disk (``area <= pi * R_m**2``) are
    patched at the circumcenter (equidistant from all three sensors);
    larger holes at the incenter (deepest interior point). ``bounds``
    optionally clamps the point into the ``[0, w] x [0, h]`` rectangle —
    circumcenters of obtuse triangles can fall outside it.
    """
    if mobile_radius <= 0:
        raise InvalidInputError(
            f"mobile sensing radius must be > 0, got {mobile_radius}"
        )
    if report.hole_area <= pi * mobile_radius * mobile_radius:
        kind = CIRCUMCENTER
        point, _ = circumcenter(tri)
    else:
        kind = INCENTER
        point, _ = incenter(tri)
    if bounds is not None:
        w, h = bounds
        point = Point(min(max(point.x, 0.0), w), min(max(point.y, 0.0), h))
    return TargetLocation(
        cell_id=report.cell_id, kind=kind, point=point, hole_area=report.hole_area
    )


def plan_relocation(
    targets: Sequence[TargetLocation], field: SensorField
) -> HealingPlan:
    """Assign mobiles to targets minimizing the total travel distance.

    With more targets than mobiles, the largest-area targets are served
    (ties broken by cell id) and the rest reported unserved; with more
    mobiles than targets, the surplus stays put. The assignment among the
    served targets is exactly optimal (Hungarian method).
    """
    mobiles = sorted(field.mobile, key=lambda m: m.id)
    ranked = sorted(targets, key=lambda t: (-t.hole_area, t.cell_id))
    served = ranked[: len(mobiles)]
    unserved = tuple(ranked[len(mobiles) :])
    if not served:
        return HealingPlan(assignments=(), total_movement=0.0, unserved=unserved)
    cost = np.array(
        [
            [hypot(m.position.x - t.point.x, m.position.y - t.point.y) for t in served]
            for m in mobiles
        ]
    )
    rows, cols = linear_sum_assignment(cost)
    assignments = tuple(
        sorted(
            (
                Assignment(
                    mobile_id=mobiles[r].id,
                    target=served[c],
                    distance=float(cost[r, c]),
                )
                for r, c in zip(rows, cols)
            ),
            key=lambda a: a.mobile_id,
        )
    )
    total = float(sum(a.distance for a in assignments))
    return HealingPlan(assignments=assignments, total_movement=total, unserved=unserved)


def apply_plan(field: SensorField, plan: HealingPlan) -> SensorField:
    """Return a new field with the plan's mobiles moved to their targets."""
    known = field.mobile_by_id()
    moves: dict[int, Point] = {}
    for a in plan.assignments:
        if a.mobile_id not in known:
            raise InconsistentInputError(
                f"plan references unknown mobile id {a.mobile_id}"
            )
        moves[a.mobile_id] = a.target.point
    new_mobiles = tuple(
        MobileSensor(m.id, moves.get(m.id, m.position), m.radius)
        for m in field.mobile
    )
    return SensorField(
        width=field.width,
        height=field.height,
        sensing_radius=field.sensing_radius,
        stationary=field.stationary,
        mobile=new_mobiles,
    )
