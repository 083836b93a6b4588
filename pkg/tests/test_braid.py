from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxclust.braid import (
    Factorization,
    apply_braid_word,
    enumerate_factorizations,
    hurwitz_orbit,
    move_to_front,
    reflection_length,
    reversed_factorization,
    sigma,
    sigma_inverse,
    simple_sequence,
    standard_factorization,
)
from coxclust.core import (
    GroupElement,
    coxeter_element,
    dynkin,
    from_quiver,
    inverse,
    longest_element,
    positive_roots,
    reflection,
)
from coxclust.errors import NotFiniteTypeError, NotRealRootError, OrbitLimitExceeded

# frozen from the brute-force oracle below
FACTORIZATION_COUNTS = {"A2": 3, "A3": 16, "B2": 4, "G2": 6, "B3": 27, "A4": 125, "D4": 162}


def brute_force_factorizations(cd, target, m):
    """Every m-tuple of positive roots, multiplied out; no pruning."""
    roots = positive_roots(cd)
    refl = {b: reflection(cd, b) for b in roots}
    out = set()
    for combo in itertools.product(roots, repeat=m):
        g = GroupElement.identity(cd.rank)
        for b in combo:
            g = g * refl[b]
        if g == target:
            out.add(combo)
    return out


@pytest.mark.parametrize("label", ["A2", "A3", "B2", "G2", "B3", "A4", "D4"])
def test_enumeration_matches_brute_force(label):
    cd = dynkin(label)
    c = coxeter_element(cd)
    found = {f.roots for f in enumerate_factorizations(cd, c, cd.rank)}
    assert found == brute_force_factorizations(cd, c, cd.rank)
    assert len(found) == FACTORIZATION_COUNTS[label]


@pytest.mark.parametrize("label,count", sorted(FACTORIZATION_COUNTS.items()))
def test_hurwitz_orbit_is_everything(label, count):
    cd = dynkin(label)
    report = hurwitz_orbit(standard_factorization(cd))
    assert report.factorization_count == count
    assert report.orbit_size == count
    assert report.transitive is True
    assert not report.truncated
    c = coxeter_element(cd)
    for f in report.orbit:
        assert f.product == c
        assert apply_braid_word(report.base, report.generator_witnesses[f]) == f


def test_inverse_coxeter_orbit_matches_reversal():
    cd = dynkin("A3")
    report = hurwitz_orbit(simple_sequence(cd))
    assert report.base.product == inverse(cd, coxeter_element(cd))
    forward = {f.roots for f in hurwitz_orbit(standard_factorization(cd)).orbit}
    assert {reversed_factorization(f).roots for f in report.orbit} == forward


def test_small_length_cases():
    cd = dynkin("A2")
    c = coxeter_element(cd)
    assert enumerate_factorizations(cd, c, 1) == []
    assert enumerate_factorizations(cd, c, 3) == []          # wrong parity
    w0 = longest_element(cd)
    assert len(enumerate_factorizations(cd, w0, 1)) == 1     # w0 of A2 is a reflection


def test_reflection_length():
    cd = dynkin("D4")
    assert reflection_length(cd, coxeter_element(cd)) == 4
    assert reflection_length(cd, longest_element(cd)) == 4
    assert reflection_length(cd, GroupElement.identity(4)) == 0
    assert reflection_length(cd, reflection(cd, (1, 1, 1, 1))) == 1


def test_validated_constructor():
    cd = dynkin("A2")
    with pytest.raises(NotRealRootError):
        Factorization.of(cd, [(1, -1)])
    with pytest.raises(NotRealRootError):
        Factorization.of(dynkin("B2"), [(2, 1)])
    assert Factorization.of(cd, [(1, 1)]).roots == ((1, 1),)


def test_infinite_type_needs_depth():
    k = from_quiver(2, [(2, 1, 2)])
    with pytest.raises(NotFiniteTypeError):
        hurwitz_orbit(standard_factorization(k))
    report = hurwitz_orbit(standard_factorization(k), depth_limit=3)
    assert report.truncated and report.depth == 3
    assert report.transitive is None
    # the Kronecker orbit is a line: one new factorization each way per step
    assert report.orbit_size == 7


def test_orbit_size_budget():
    with pytest.raises(OrbitLimitExceeded) as info:
        hurwitz_orbit(standard_factorization(dynkin("A4")), max_size=20)
    assert info.value.report.orbit_size > 20


def test_move_to_front_keeps_entry():
    cd = dynkin("A4")
    base = standard_factorization(cd)
    for i in range(1, 5):
        moved, word = move_to_front(base, i)
        assert moved.roots[0] == base.roots[i - 1]
        assert moved.product == base.product
        assert apply_braid_word(base, word) == moved


orbit_a4 = hurwitz_orbit(standard_factorization(dynkin("A4"))).orbit


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(orbit_a4), st.integers(min_value=1, max_value=3))
def test_sigma_laws(f, i):
    assert sigma_inverse(sigma(f, i), i) == f
    assert sigma(sigma_inverse(f, i), i) == f
    assert sigma(f, i).product == f.product
    if i <= 2:
        assert apply_braid_word(f, (i, i + 1, i)) == apply_braid_word(f, (i + 1, i, i + 1))
    if i == 1:
        assert apply_braid_word(f, (1, 3)) == apply_braid_word(f, (3, 1))


def test_sigma_index_range():
    f = standard_factorization(dynkin("A2"))
    with pytest.raises(IndexError):
        sigma(f, 2)
    with pytest.raises(ValueError):
        apply_braid_word(f, (0,))
