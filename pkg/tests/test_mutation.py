from __future__ import annotations

import random

import pytest

from coxclust.adapted import all_selections, condition3, frame_for, is_reduced_w0
from coxclust.core import dynkin
from coxclust.errors import NotAClusterError, SelectionError
from coxclust.mutation import (
    LEFT,
    RIGHT,
    algebraic_mutate,
    complements,
    exchange_graph,
    verify_unique_complement,
)

CLUSTER_COUNTS = {"A1": 2, "A2": 5, "A3": 14, "A4": 42, "D4": 50, "B3": 20, "C3": 20, "G2": 8, "B2": 6}


def test_a4_mutation_rows():
    f = frame_for(dynkin("A4"))
    got = [algebraic_mutate(f, (1, 2, 3, 4), k) for k in range(1, 5)]
    assert [s.inserted for s in got] == [5, 7, 10, 14]
    assert [s.target for s in got] == [(2, 3, 4, 5), (1, 3, 4, 7), (1, 2, 4, 10), (1, 2, 3, 14)]
    assert all(s.scan_side == RIGHT for s in got)


def test_a4_second_mutation():
    f = frame_for(dynkin("A4"))
    step = algebraic_mutate(f, (1, 3, 4, 7), 2)      # the entry 3
    assert step.removed == 3
    assert step.target == (1, 4, 7, 9)


def test_a2_pentagon_step():
    f = frame_for(dynkin("A2"))
    step = algebraic_mutate(f, (1, 2), 1)
    assert (step.removed, step.inserted, step.target) == (1, 3, (2, 3))


def test_left_scans_happen():
    f = frame_for(dynkin("A4"))
    back = algebraic_mutate(f, (2, 3, 4, 5), 4)
    assert back.scan_side == LEFT and back.target == (1, 2, 3, 4)


def test_precondition():
    f = frame_for(dynkin("A4"))
    with pytest.raises(NotAClusterError):
        algebraic_mutate(f, (1, 2, 3, 5), 1)
    with pytest.raises(SelectionError):
        algebraic_mutate(f, (1, 2, 3, 4), 5)


def test_unique_complement_examples():
    f = frame_for(dynkin("A4"))
    assert complements(f, (1, 2, 3, 4), 2) == [7]
    a2 = frame_for(dynkin("A2"))
    for sel in all_selections(a2):
        if is_reduced_w0(a2, sel):
            for k in (1, 2):
                assert verify_unique_complement(a2, sel, k)


@pytest.mark.parametrize("label", ["A3", "A4", "D4", "B3", "G2"])
def test_every_step_is_the_unique_complement(label):
    f = frame_for(dynkin(label))
    for step in exchange_graph(f).steps:
        assert complements(f, step.source, step.k) == [step.inserted]
        assert condition3(f, step.target)
        assert step.inserted not in step.source


def test_random_d4_pairs_agree():
    f = frame_for(dynkin("D4"))
    clusters = exchange_graph(f).vertices
    rng = random.Random(20)
    for _ in range(200):
        sel = rng.choice(clusters)
        k = rng.randint(1, 4)
        assert verify_unique_complement(f, sel, k)


@pytest.mark.parametrize("label,count", sorted(CLUSTER_COUNTS.items()))
def test_exchange_graph(label, count):
    f = frame_for(dynkin(label))
    g = exchange_graph(f)
    assert len(g.vertices) == count
    assert g.base == tuple(range(1, f.n + 1)) and g.vertices[0] == g.base
    assert g.is_regular(f.n)
    assert g.is_connected()
    assert g.is_involutive()
    assert len(g.edges) == count * f.n // 2 or (f.n == 1 and len(g.edges) == 1)


@pytest.mark.parametrize("label", ["A2", "A3", "A4", "B3", "G2"])
def test_vertices_are_exactly_the_reduced_selections(label):
    f = frame_for(dynkin(label))
    oracle = {s for s in all_selections(f) if is_reduced_w0(f, s)}
    assert set(exchange_graph(f).vertices) == oracle


def test_a2_pentagon():
    g = exchange_graph(frame_for(dynkin("A2")))
    assert len(g.edges) == 5
    assert all(len(nb) == 2 for nb in g.neighbours().values())


def test_exchange_graph_is_deterministic():
    f = frame_for(dynkin("D4"))
    assert exchange_graph(f) == exchange_graph(f)
