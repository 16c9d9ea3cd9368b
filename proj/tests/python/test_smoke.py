import pytest

import tilekit


def test_verify_round_trip():
    report = tilekit.verify_tiling(0, [6], [], [[0], [1], [2]], [[0], [3]])
    assert report["is_tiling"] is True
    assert report["levels"] == {"1": 6}
    assert report["collisions"] == []

    bad = tilekit.verify_tiling(0, [4], [], [[0], [2]], [[0], [2]])
    assert bad["is_tiling"] is False
    assert bad["levels"] == {"0": 2, "2": 2}


def test_enumeration_counts():
    assert len(tilekit.enumerate_tilings(0, [4], [], [[0], [1]])["solutions"]) == 2
    assert len(tilekit.enumerate_tilings(0, [4], [], [[0], [2]])["solutions"]) == 4
    catalog = tilekit.enumerate_tilings(0, [6], [], [[0], [1], [2]])
    assert catalog["solutions"] == [[[0], [3]], [[1], [4]], [[2], [5]]]
    assert catalog["orbit_count"] == 1


def test_dilation_scan_marks_coprime_rows():
    rows = tilekit.dilation_scan(0, [6], [], [[0], [1], [2]], [[0], [3]], [-1, 0, 1, 2, 5])
    by_r = {row["r"]: row for row in rows}
    assert by_r[5]["coprime_to_tile_size"] is True
    assert by_r[5]["report"]["is_tiling"] is True
    assert by_r[0]["coprime_to_tile_size"] is False


def test_frobenius_identity():
    assert tilekit.frobenius_check(0, [9], [], [[0], [1], [5]], 3)["holds"] is True


def test_decompose_checks_pass():
    out = tilekit.decompose(0, [4], [], [[0], [1]], [[0], [2]])
    assert out["check"]["partition_of_unity"] is True
    assert out["check"]["invariant"] is True
    assert out["check"]["mean_correct"] is True


def test_interval_classification():
    got = tilekit.classify_interval(["0", "1", "2"], ["0", "1"], ["1"], "0", "3")
    assert got == {"m": 1, "c": "0", "cprime": "1"}
    got = tilekit.classify_interval(["0", "1/2", "1"], ["0", "1/2"], ["1"], "0", "3/2")
    assert got["cprime"] == "1/2"


def test_torus_quarter_square():
    quarter = {"d": 2, "Q": 2, "cells": [[0, 0]]}
    shifts = [["0", "0"], ["1/2", "0"], ["0", "1/2"], ["1/2", "1/2"]]
    report = tilekit.torus_verify(shifts, quarter)
    assert report["is_tiling"] is True and report["resolution"] == 2

    slide = tilekit.torus_slide(
        [
            ["0", "0"],
            ["1/2", "0"],
            {"rat": ["0", "1/2"], "irr": {"0": ["1", "0"]}},
            {"rat": ["1/2", "1/2"], "irr": {"0": ["1", "0"]}},
        ],
        quarter,
        seed=3,
    )
    assert slide["certified"] is True
    assert slide["velocity"]["common_direction"] == [1, 0]


def test_two_tile_simulation_is_clean_and_reproducible():
    first = tilekit.two_tile(2000, seed=42)
    again = tilekit.two_tile(2000, seed=42)
    assert first == again
    assert first["validation"]["coverage_violations"] == 0
    assert first["validation"]["constraint_violations"] == 0


def test_triple_product_search():
    assert tilekit.triple_product_s3([0, 1], 3) is True
    assert tilekit.triple_product_s3([0], 3) is False


def test_errors_are_typed():
    with pytest.raises(ValueError):
        tilekit.verify_tiling(0, [6], [], [[0], [1]], [[0], [0]])
    with pytest.raises(tilekit.PremiseViolationError):
        tilekit.dilation_scan(0, [4], [], [[0], [2]], [[0], [2]], [1])


def test_render_svg_smoke():
    svg = tilekit.render_svg({"d": 2, "Q": 2, "cells": [[0, 0]]}, [[0, 0.0, 0.0], [1, 0.5, 0.5]])
    assert svg.startswith("<svg") or svg.startswith("<?xml")
