from __future__ import annotations

import math

import numpy as np
import pytest

from tourlen import (
    Instance,
    InvalidInstanceError,
    InvalidTourError,
    NormPolicy,
    build_instance,
    compute_stats,
    distance,
    distance_matrix,
    load_instance,
    load_tour,
    parse_instance,
    tour_length,
)
from ._oracles import pairwise_extremes
from .conftest import random_instance, require_corpus_file

UNIT_SQUARE = Instance(
    name="square", points=np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])
)


def _instance_from_corpus(stem: str) -> Instance:
    return build_instance(load_instance(require_corpus_file(f"{stem}.tsp")))


def _published_order(stem: str, n: int) -> list[int]:
    raw = load_tour(require_corpus_file(f"{stem}.opt.tour"), n)
    return [v - 1 for v in raw.sequence]


def test_build_instance_norm_mapping():
    text = (
        "NAME : t\nTYPE : TSP\nDIMENSION : 2\nEDGE_WEIGHT_TYPE : {}\n"
        "NODE_COORD_SECTION\n1 0 0\n2 3 4\nEOF\n"
    )
    assert build_instance(parse_instance(text.format("EUC_2D"))).norm.report_scale == 1.0
    assert build_instance(parse_instance(text.format("CEIL_2D"))).norm.report_scale == 1.0
    att = build_instance(parse_instance(text.format("ATT")))
    assert att.norm.report_scale == pytest.approx(1.0 / math.sqrt(10.0))


def test_build_instance_rejects_duplicate_points():
    text = (
        "NAME : t\nTYPE : TSP\nDIMENSION : 3\nEDGE_WEIGHT_TYPE : EUC_2D\n"
        "NODE_COORD_SECTION\n1 0 0\n2 3 4\n3 0 0\nEOF\n"
    )
    with pytest.raises(InvalidInstanceError, match="duplicate"):
        build_instance(parse_instance(text))


def test_norm_policy_validates_scale():
    with pytest.raises(InvalidInstanceError):
        NormPolicy(report_scale=0.5)


def test_distance_345_triangle():
    inst = Instance(name="t", points=np.array([[0.0, 0.0], [3.0, 4.0]]))
    assert distance(inst, 0, 1) == pytest.approx(5.0)


def test_distance_rejects_same_vertex_and_out_of_range():
    with pytest.raises(InvalidInstanceError):
        distance(UNIT_SQUARE, 1, 1)
    with pytest.raises(InvalidInstanceError):
        distance(UNIT_SQUARE, 0, 4)


def test_unit_square_stats():
    stats = compute_stats(UNIT_SQUARE)
    assert stats.w0 == pytest.approx(1.0)
    assert stats.w1 == pytest.approx(math.sqrt(2.0))
    assert stats.bbox_diag == pytest.approx(math.sqrt(2.0))


def test_2x3_grid_stats():
    points = np.array([[x, y] for x in range(2) for y in range(3)], dtype=float)
    stats = compute_stats(Instance(name="g", points=points))
    assert stats.w0 == pytest.approx(1.0)
    assert stats.w1 == pytest.approx(math.sqrt(5.0))


def test_eil51_stats_against_pair_scan_oracle():
    inst = _instance_from_corpus("eil51")
    stats = compute_stats(inst)
    # frozen from the independent double-loop scan over the raw file
    assert stats.w0 == pytest.approx(2.23606797749979, rel=1e-12)
    assert stats.w1 == pytest.approx(85.63293758829018, rel=1e-12)
    w0, w1 = pairwise_extremes(inst.points)
    assert stats.w0 == pytest.approx(w0, rel=1e-12)
    assert stats.w1 == pytest.approx(w1, rel=1e-12)


def test_stats_match_oracle_on_random_instances():
    rng = np.random.default_rng(7)
    for _ in range(20):
        inst = random_instance(rng, int(rng.integers(2, 40)))
        stats = compute_stats(inst)
        w0, w1 = pairwise_extremes(inst.points)
        assert stats.w0 == pytest.approx(w0, rel=1e-12)
        assert stats.w1 == pytest.approx(w1, rel=1e-12)
        assert stats.w1 <= stats.bbox_diag * (1 + 1e-12)


def test_unit_square_tour_length():
    assert tour_length(UNIT_SQUARE, [0, 1, 2, 3]).length == pytest.approx(4.0)


def test_tour_length_rejects_non_permutation():
    with pytest.raises(InvalidTourError):
        tour_length(UNIT_SQUARE, [0, 1, 2, 2])
    with pytest.raises(InvalidTourError):
        tour_length(UNIT_SQUARE, [0, 1, 2])


def test_tour_length_invariant_under_rotation_and_reversal():
    rng = np.random.default_rng(11)
    for _ in range(10):
        inst = random_instance(rng, 9)
        order = rng.permutation(9).tolist()
        base = tour_length(inst, order).length
        shift = int(rng.integers(1, 9))
        rotated = order[shift:] + order[:shift]
        assert tour_length(inst, rotated).length == pytest.approx(base, rel=1e-12)
        assert tour_length(inst, order[::-1]).length == pytest.approx(base, rel=1e-12)


def test_published_tour_lengths_reproduce_audit_values():
    eil51 = _instance_from_corpus("eil51")
    assert tour_length(eil51, _published_order("eil51", 51)).length == pytest.approx(
        429.983307, abs=1e-4
    )
    att48 = _instance_from_corpus("att48")
    assert tour_length(att48, _published_order("att48", 48)).length == pytest.approx(
        10601.1282, abs=1e-2
    )


def test_att_scale_is_euclidean_over_sqrt10():
    att48 = _instance_from_corpus("att48")
    order = _published_order("att48", 48)
    scaled = tour_length(att48, order).length
    unscaled = Instance(name="att-raw", points=att48.points)
    plain = tour_length(unscaled, order).length
    assert scaled == pytest.approx(plain / math.sqrt(10.0), rel=1e-12)


def test_distance_symmetry_and_triangle_inequality():
    rng = np.random.default_rng(13)
    for _ in range(5):
        inst = random_instance(rng, 12)
        dm = distance_matrix(inst)
        assert np.allclose(dm, dm.T)
        for _ in range(50):
            i, j, k = rng.choice(12, size=3, replace=False)
            assert dm[i, j] <= dm[i, k] + dm[k, j] + 1e-9
            assert dm[i, j] == pytest.approx(distance(inst, i, j), rel=1e-12)
