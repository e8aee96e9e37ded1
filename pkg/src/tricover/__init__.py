"""tricover: coverage-hole detection and healing for planar sensor fields."""
from __future__ import annotations

from .errors import (
    DegenerateGeometryError,
    DuplicateSiteError,
    InconsistentInputError,
    InsufficientSitesError,
    InvalidInputError,
    NotFoundError,
    TricoverError,
)
from .field import MobileSensor, Sensor, SensorField, make_field
from .geometry import (
    LensGeom,
    Point,
    TriangleCenters,
    TriangleGeom,
    circumcenter,
    heron_area,
    incenter,
    lens_area,
    sector_area,
    segment_area,
    triangle_centers,
    triangle_disk_intersection_area,
    triangle_disks_covered_area,
    triangle_from_vertices,
)
from .files import (
    ReportDoc,
    ScenarioDoc,
    canonical_json_bytes,
    load_report,
    load_scenario,
    report_from_dict,
    round_sig,
    save_report,
    save_scenario,
    scenario_from_dict,
)
from .healing import (
    Assignment,
    HealingPlan,
    TargetLocation,
    apply_plan,
    plan_relocation,
    select_target,
)
from .holes import (
    CaseLabel,
    HoleComputation,
    HoleReport,
    LensCorrection,
    ValidityFlags,
    case_formula_validity,
    classify,
    detect_holes,
    exact_uncovered_area,
    full_coverage,
    hole_area,
    hole_epsilon,
)
from .mesh import TriangleCell, TriMesh, neighbors, triangulate
from .oracle import CoverageEstimate, grid_region_uncovered, mc_coverage_fraction
from .pipeline import (
    attach_verify,
    generate_scenario,
    plan_from_report,
    plan_to_dict,
    run_detect,
    run_plan,
    run_verify,
    targets_from_report,
    verify_to_dict,
)
from .render import render_svg

__version__ = "0.1.0"

__all__ = [
    "Assignment",
    "CaseLabel",
    "CoverageEstimate",
    "DegenerateGeometryError",
    "DuplicateSiteError",
    "HealingPlan",
    "HoleComputation",
    "HoleReport",
    "InconsistentInputError",
    "InsufficientSitesError",
    "InvalidInputError",
    "LensCorrection",
    "LensGeom",
    "MobileSensor",
    "NotFoundError",
    "Point",
    "ReportDoc",
    "ScenarioDoc",
    "Sensor",
    "SensorField",
    "TargetLocation",
    "TriMesh",
    "TriangleCell",
    "TriangleCenters",
    "TriangleGeom",
    "TricoverError",
    "ValidityFlags",
    "apply_plan",
    "attach_verify",
    "canonical_json_bytes",
    "case_formula_validity",
    "circumcenter",
    "classify",
    "detect_holes",
    "exact_uncovered_area",
    "full_coverage",
    "generate_scenario",
    "grid_region_uncovered",
    "heron_area",
    "hole_area",
    "hole_epsilon",
    "incenter",
    "lens_area",
    "load_report",
    "load_scenario",
    "make_field",
    "mc_coverage_fraction",
    "neighbors",
    "plan_from_report",
    "plan_relocation",
    "plan_to_dict",
    "render_svg",
    "report_from_dict",
    "round_sig",
    "run_detect",
    "run_plan",
    "run_verify",
    "save_report",
    "save_scenario",
    "scenario_from_dict",
    "sector_area",
    "segment_area",
    "select_target",
    "targets_from_report",
    "triangle_centers",
    "triangle_disk_intersection_area",
    "triangle_disks_covered_area",
    "triangle_from_vertices",
    "triangulate",
    "verify_to_dict",
]
