"""Shared corpus: random point configurations and lattices with fixed
seeds, plus their computed pipelines, built once per session."""

import random

import pytest

from ugb.driver import compute_ugb
from ugb.groebner import normal_form_table
from ugb.ideals import LatticeBasis, from_lattice, from_points
from ugb.orders import deglex_order


def random_point_configs(count=100, sizes=(3, 4, 5), seed=20260822):
    rng = random.Random(seed)
    configs = []
    while len(configs) < count:
        n = sizes[len(configs) % len(sizes)]
        pts = set()
        while len(pts) < n:
            pts.add((rng.randint(-9, 9), rng.randint(-9, 9)))
        configs.append(tuple(sorted(pts)))
    return configs


def random_lattice_columns(count=20, seed=77):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        cols = ((rng.randint(-4, 4), rng.randint(-4, 4)),
                (rng.randint(-4, 4), rng.randint(-4, 4)))
        det = cols[0][0] * cols[1][1] - cols[1][0] * cols[0][1]
        if 2 <= abs(det) <= 6:
            out.append(cols)
    return out


@pytest.fixture(scope="session")
def point_configs():
    return random_point_configs()


@pytest.fixture(scope="session")
def lattice_columns():
    return random_lattice_columns()


@pytest.fixture(scope="session")
def point_ideals(point_configs):
    order = deglex_order(2)
    return [from_points(pts, order) for pts in point_configs]


@pytest.fixture(scope="session")
def lattice_ideals(lattice_columns):
    order = deglex_order(2)
    return [from_lattice(LatticeBasis(cols), order)
            for cols in lattice_columns]


@pytest.fixture(scope="session")
def point_runs(point_ideals):
    return [(basis, normal_form_table(basis), compute_ugb(basis))
            for basis in point_ideals]


@pytest.fixture(scope="session")
def lattice_runs(lattice_ideals):
    return [(basis, normal_form_table(basis), compute_ugb(basis))
            for basis in lattice_ideals]
