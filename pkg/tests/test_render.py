"""SVG rendering tests: determinism and element inventory."""
from __future__ import annotations

from math import sqrt

import pytest

from tricover import (
    InconsistentInputError,
    ScenarioDoc,
    generate_scenario,
    make_field,
    render_svg,
    run_detect,
    run_plan,
)


def equilateral_scenario(side=1.9, radius=1.0, mobiles=((3, 0.1, 3.9, 1.0),)):
    field = make_field(
        4.0,
        4.0,
        radius,
        [(0, 0.5, 0.5), (1, 0.5 + side, 0.5), (2, 0.5 + side / 2, 0.5 + side * sqrt(3) / 2)],
        list(mobiles),
    )
    return ScenarioDoc(field=field, meta={})


def test_svg_scenario_only_structure():
    scenario = equilateral_scenario()
    svg = render_svg(scenario)
    assert svg.startswith("<svg")
    assert svg.rstrip().endswith("</svg>")
    assert svg.count('class="site"') == 3
    assert svg.count('class="disk disk-stationary"') == 3
    assert svg.count('class="disk disk-mobile"') == 1
    assert svg.count('class="mobile"') == 1
    # no report: no mesh, holes, or plan layers
    assert "mesh-edge" not in svg
    assert 'class="hole' not in svg
    assert "move-arrow" not in svg


def test_svg_with_detection_report():
    scenario = equilateral_scenario()
    report = run_detect(scenario)
    svg = render_svg(scenario, report)
    # one triangle: three mesh edges, one case-I hole polygon
    assert svg.count('class="mesh-edge"') == 3
    assert svg.count('<polygon class="hole') == 1
    assert svg.count("case-I") == 1
    assert "move-arrow" not in svg  # no plan section yet


def test_svg_with_plan():
    scenario = equilateral_scenario()
    report = run_plan(run_detect(scenario), scenario, mobile_radius=1.0)
    svg = render_svg(scenario, report)
    assert svg.count('class="move-arrow"') == 1
    assert svg.count('class="target target-circumcenter"') == 1
    assert "arrowhead" in svg


def test_svg_no_arrows_without_mobiles():
    scenario = equilateral_scenario(mobiles=())
    report = run_plan(run_detect(scenario), scenario, mobile_radius=1.0)
    assert report.plan["assignments"] == []
    assert report.plan["unserved"] == [0]
    svg = render_svg(scenario, report)
    assert "move-arrow" not in svg
    assert 'class="target' not in svg


def test_svg_deterministic():
    scenario = generate_scenario(
        width=30.0,
        height=20.0,
        n_stationary=12,
        n_mobile=2,
        sensing_radius=3.0,
        mobile_radius=3.0,
        seed=5,
    )
    report = run_plan(run_detect(scenario), scenario, mobile_radius=3.0)
    assert render_svg(scenario, report) == render_svg(scenario, report)


def test_svg_counts_scale_with_scenario():
    scenario = generate_scenario(
        width=30.0,
        height=20.0,
        n_stationary=12,
        n_mobile=2,
        sensing_radius=3.0,
        mobile_radius=3.0,
        seed=5,
    )
    report = run_detect(scenario)
    svg = render_svg(scenario, report)
    assert svg.count('class="site"') == 12
    assert svg.count('class="disk disk-mobile"') == 2
    n_holes = sum(1 for t in report.triangles if t["is_hole"])
    assert svg.count('<polygon class="hole') == n_holes


def test_svg_rejects_mismatched_report():
    scenario = equilateral_scenario()
    other = equilateral_scenario(side=1.8)
    report = run_detect(other)
    with pytest.raises(InconsistentInputError):
        render_svg(scenario, report)


def test_svg_no_negative_zero_coordinates():
    scenario = equilateral_scenario()
    report = run_plan(run_detect(scenario), scenario, mobile_radius=1.0)
    svg = render_svg(scenario, report)
    assert "-0.000" not in svg
