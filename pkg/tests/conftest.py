"""Shared graph corpus and grids for the test suite."""

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from relpoly import (
    complete_graph,
    complete_pendant_graph,
    cycle_graph,
    generate_ba,
    generate_er,
    generate_rgg,
    generate_lattice,
    path_graph,
    star_graph,
    star_pendant_graph,
)

INTERIOR_GRID_99 = tuple((i + 1) / 100 for i in range(99))

# two worker processes exercise the parallel path without oversubscribing CI boxes
WORKERS = min(2, os.cpu_count() or 1)


def build_corpus():
    graphs = []
    for n in range(3, 9):
        graphs.append((f"path:{n}", path_graph(n)))
    for n in range(4, 9):
        graphs.append((f"cycle:{n}", cycle_graph(n)))
    for n in range(3, 6):
        graphs.append((f"complete:{n}", complete_graph(n)))
    for n in range(4, 9):
        graphs.append((f"star:{n}", star_graph(n)))
    for n in range(4, 7):
        graphs.append((f"complete-pendant:{n}", complete_pendant_graph(n)))
    for n in range(4, 7):
        graphs.append((f"star-pendant:{n}", star_pendant_graph(n)))
    graphs.append(("lattice:2x3", generate_lattice((2, 3))))
    graphs.append(("lattice:2x2x2", generate_lattice((2, 2, 2))))
    graphs.append(("er:8,0.35", generate_er(8, 0.35, 101)))
    graphs.append(("er:10,0.3", generate_er(10, 0.3, 102)))
    graphs.append(("er:12,0.25", generate_er(12, 0.25, 103)))
    graphs.append(("er:10,0.12(sparse)", generate_er(10, 0.12, 104)))
    graphs.append(("rgg:9,0.45", generate_rgg(9, 0.45, 105)))
    graphs.append(("ba:10,2", generate_ba(10, 2, 106)))
    graphs.append(("ba:12,3", generate_ba(12, 3, 107)))
    return graphs


CORPUS = build_corpus()


@pytest.fixture(scope="session")
def corpus():
    return CORPUS


@pytest.fixture(scope="session")
def corpus_n10():
    return [(label, g) for label, g in CORPUS if g.num_nodes <= 10]


@pytest.fixture(scope="session")
def corpus_n12():
    return [(label, g) for label, g in CORPUS if g.num_nodes <= 12]


@pytest.fixture(scope="session")
def grid99():
    return INTERIOR_GRID_99
