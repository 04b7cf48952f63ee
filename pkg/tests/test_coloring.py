"""Edge-3-colorings, Penrose signs, map faces, Tait correspondence."""

from pathlib import Path

import pytest

from weightsys.coloring import (coloring_sign, count_four_colorings,
                                enumerate_edge_3_colorings,
                                enumerate_four_colorings, extract_map,
                                penrose_sum, tait_edge_coloring,
                                verify_tait_bijection, w_sl2)
from weightsys.graphs import TrivalentGraph, parse_graph
from weightsys.ribbon import first_spherical_marking
from oracles import (brute_edge_3_coloring_count, brute_four_coloring_count,
                     brute_signed_coloring_sum)

DATA = Path(__file__).parent / "data"

THETA = TrivalentGraph(2, (4, 3, 5, 1, 0, 2))
THETA_TWISTED = TrivalentGraph(2, (3, 4, 5, 0, 1, 2))


def load(name):
    return parse_graph((DATA / name).read_bytes())


@pytest.mark.parametrize("name,count", [
    ("theta", 6), ("dumbbell", 0), ("k4", 6), ("cube", 24), ("k33", 12),
])
def test_coloring_counts(name, count):
    assert len(enumerate_edge_3_colorings(load(name + ".tgf"))) == count


@pytest.mark.parametrize("name", ["theta", "dumbbell", "k4", "k33"])
def test_coloring_count_matches_brute_force(name):
    g = load(name + ".tgf")
    assert len(enumerate_edge_3_colorings(g)) == brute_edge_3_coloring_count(g)


def test_colorings_are_sorted_and_distinct():
    for name in ("theta", "k4", "cube"):
        cs = enumerate_edge_3_colorings(load(name + ".tgf"))
        assert cs == sorted(set(cs))
    assert enumerate_edge_3_colorings(THETA)[0] == (1, 2, 3)


def test_coloring_sign_theta():
    # Vertex 0 reads colors (1,2,3), vertex 1 reads (2,1,3): one odd
    # permutation, so the sign is -1; reversing a vertex flips it.
    assert coloring_sign(THETA, (1, 2, 3)) == -1
    assert coloring_sign(THETA_TWISTED, (1, 2, 3)) == 1


def test_coloring_sign_rejects_bad_input():
    with pytest.raises(ValueError):
        coloring_sign(THETA, (1, 2))
    with pytest.raises(ValueError):
        coloring_sign(THETA, (1, 1, 2))


@pytest.mark.parametrize("name,value", [
    ("theta", -6), ("dumbbell", 0), ("k4", 6), ("cube", 24), ("k33", 0),
])
def test_penrose_goldens(name, value):
    assert penrose_sum(load(name + ".tgf")) == value


@pytest.mark.parametrize("name", ["theta", "k4", "k33"])
def test_penrose_matches_brute_force(name):
    g = load(name + ".tgf")
    assert penrose_sum(g) == brute_signed_coloring_sum(g)


@pytest.mark.parametrize("name,value", [
    ("theta", -12), ("dumbbell", 0), ("k4", 24), ("cube", 384), ("k33", 0),
])
def test_w_sl2_goldens(name, value):
    assert w_sl2(load(name + ".tgf")) == value


def test_extract_map_theta():
    pm = extract_map(THETA, (1, 1))
    assert pm.graph == THETA
    assert pm.faces == ((0, 5), (1, 4), (2, 3))
    assert pm.edge_faces == ((0, 1), (1, 2), (2, 0))
    assert pm.outer_face == 0
    assert not pm.is_self_bordering()


def test_extract_map_rejects_non_spherical_marking():
    with pytest.raises(ValueError, match="not spherical"):
        extract_map(THETA, (-1, 1))


def test_dumbbell_map_is_self_bordering():
    g = load("dumbbell.tgf")
    pm = extract_map(g, first_spherical_marking(g))
    assert pm.is_self_bordering()
    assert count_four_colorings(pm) == 0
    assert enumerate_four_colorings(pm) == []


@pytest.mark.parametrize("name,four", [
    ("theta", 24), ("k4", 24), ("cube", 96),
])
def test_four_coloring_counts(name, four):
    g = load(name + ".tgf")
    pm = extract_map(g, first_spherical_marking(g))
    assert count_four_colorings(pm) == four
    assert four == brute_four_coloring_count(pm.edge_faces, len(pm.faces))


def test_pinning_the_outer_face_quarters_the_count():
    for name in ("theta", "k4", "cube"):
        g = load(name + ".tgf")
        pm = extract_map(g, first_spherical_marking(g))
        pinned = enumerate_four_colorings(pm, fix_outer=0)
        assert len(pinned) * 4 == count_four_colorings(pm)
        assert all(fc[pm.outer_face] == 0 for fc in pinned)


def test_tait_edge_coloring_by_hand():
    pm = extract_map(THETA, (1, 1))
    # Faces colored 0,1,3: edges see 0^1=1, 1^3=2, 3^0=3.
    assert tait_edge_coloring(pm, (0, 1, 3)) == (1, 2, 3)
    with pytest.raises(ValueError):
        tait_edge_coloring(pm, (0, 0, 1))
    with pytest.raises(ValueError):
        tait_edge_coloring(pm, (0, 1))


def test_tait_images_are_proper():
    g = load("k4.tgf")
    pm = extract_map(g, first_spherical_marking(g))
    for fc in enumerate_four_colorings(pm):
        ec = tait_edge_coloring(pm, fc)
        coloring_sign(pm.graph, ec)  # raises if improper


@pytest.mark.parametrize("name", ["theta", "k4", "cube"])
def test_tait_bijection_verifies(name):
    g = load(name + ".tgf")
    pm = extract_map(g, first_spherical_marking(g))
    assert verify_tait_bijection(pm) is None


def test_loops_kill_colorings():
    g = load("dumbbell.tgf")
    assert enumerate_edge_3_colorings(g) == []
    assert penrose_sum(g) == 0
