from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxclust.adapted import (
    all_selections,
    ar_quiver_from_word,
    barred_word,
    build_frame,
    condition3,
    deleted_word,
    frame_for,
    is_reduced_w0,
    reflection_product_identity,
    long_word,
    projective_positions,
    rho,
    selection,
)
from coxclust.core import (
    coxeter_element,
    dynkin,
    from_quiver,
    is_reduced,
    longest_element,
    neg,
    positive_roots,
    projective_roots,
    simple_reflection,
    word_to_element,
)
from coxclust.errors import NotAClusterError, NotFiniteTypeError, SelectionError

A4 = frame_for(dynkin("A4"))


def test_a4_adapted_word():
    assert A4.j_sequence == (1, 2, 3, 4, 1, 2, 1, 3, 2, 1, 4, 3, 2, 1)
    assert A4.w0_word == (1, 2, 1, 3, 2, 1, 4, 3, 2, 1)
    assert A4.nu == 10


def test_a2_frame():
    f = frame_for(dynkin("A2"))
    assert f.j_sequence == (1, 2, 1, 2, 1)
    assert f.alpha_sequence == ((1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1))


@pytest.mark.parametrize("label", ["A1", "A3", "A5", "B3", "C3", "D4", "D5", "G2", "F4", "E6"])
def test_frame_invariants(label):
    cd = dynkin(label)
    f = build_frame(cd)
    n, nu = f.n, f.nu
    assert nu == len(positive_roots(cd))
    assert f.j_sequence[:n] == tuple(range(1, n + 1))
    assert sorted(f.alpha_sequence[:nu]) == sorted(positive_roots(cd))
    # the shifted projectives come last, in order
    assert f.alpha_sequence[nu:] == tuple(neg(p) for p in projective_roots(cd))
    assert is_reduced(cd, f.w0_word)
    assert word_to_element(cd, f.w0_word) == longest_element(cd)
    assert word_to_element(cd, f.j_sequence) == coxeter_element(cd) * longest_element(cd)


@pytest.mark.parametrize("label", ["A4", "D4", "B3"])
def test_inverse_translation_is_coxeter(label):
    f = frame_for(dynkin(label))
    c = coxeter_element(f.cd)
    pos = {coord: t for t, coord in enumerate(f.coords, 1)}
    for (i, r), t in pos.items():
        nxt = pos.get((i, r + 1))
        if nxt is not None and nxt <= f.nu:
            assert f.alpha_sequence[nxt - 1] == c(f.alpha_sequence[t - 1])


def test_other_orientations_build():
    for cd in [dynkin("A4", [(1, 2), (3, 2), (3, 4)]), dynkin("D4", [(2, 1), (2, 3), (2, 4)]),
               from_quiver(3, [(1, 2, 1), (3, 2, 1)])]:
        f = build_frame(cd)
        assert word_to_element(cd, f.w0_word) == longest_element(cd)


def test_frame_needs_finite_type():
    with pytest.raises(NotFiniteTypeError):
        build_frame(from_quiver(2, [(2, 1, 2)]))


def test_selection_validation():
    assert selection(A4, [9, 1, 7, 4]) == (1, 4, 7, 9)
    for bad in [(1, 2, 3), (1, 1, 2, 3), (0, 1, 2, 3), (1, 2, 3, 15)]:
        with pytest.raises(SelectionError):
            selection(A4, bad)


def test_deleted_words_of_the_worked_example():
    assert deleted_word(A4, (1, 2, 3, 4)) == A4.w0_word
    assert deleted_word(A4, (1, 4, 7, 9)) == (2, 3, 1, 2, 3, 1, 4, 3, 2, 1)
    assert barred_word(A4, (1, 4, 7, 9))[:4] == (None, 2, 3, None)
    assert is_reduced_w0(A4, (1, 4, 7, 9))
    assert not is_reduced_w0(A4, (1, 2, 3, 5))


def test_cluster_count_by_exhaustion():
    assert sum(is_reduced_w0(A4, s) for s in all_selections(A4)) == 42


@pytest.mark.parametrize("label", ["A2", "A3", "A4"])
def test_conditions_3_and_4_agree_everywhere(label):
    f = frame_for(dynkin(label))
    for sel in all_selections(f):
        assert condition3(f, sel) == is_reduced_w0(f, sel)


def test_universal_identity_a4():
    assert all(reflection_product_identity(A4, s) for s in all_selections(A4))


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(["D4", "B3", "G2", "F4"]), st.randoms(use_true_random=False))
def test_universal_identity_random(label, rng):
    f = frame_for(dynkin(label))
    sel = sorted(rng.sample(range(1, f.size + 1), f.n))
    assert reflection_product_identity(f, sel)


@pytest.mark.parametrize("label", ["A1", "A2", "A4", "B3", "D4", "D5", "E6", "E7", "G2"])
def test_rho_is_conjugation_by_w0(label):
    cd = dynkin(label)
    w0 = longest_element(cd)
    r = rho(cd)
    for i in range(1, cd.rank + 1):
        assert w0 * simple_reflection(cd, i) * w0 == simple_reflection(cd, r[i - 1])


def test_rho_values():
    assert rho(dynkin("A4")) == (4, 3, 2, 1)
    assert rho(dynkin("A1")) == (1,)
    assert rho(dynkin("D4")) == (1, 2, 3, 4)
    assert rho(dynkin("E7")) == tuple(range(1, 8))
    assert rho(dynkin("D5")) != tuple(range(1, 6))
    assert sorted(rho(dynkin("E6"))) == list(range(1, 7)) and rho(dynkin("E6")) != tuple(range(1, 7))


def test_long_word_second_block():
    word = long_word(A4, (1, 4, 7, 9))
    block2 = tuple(letter for _, letter in word[14:])
    assert block2 == (None, 3, 2, None, 4, 3, None, 2, None, 4, 1, 2, 3, 4)
    assert [p for p, _ in word] == list(range(1, 29))


def test_projective_positions_worked_example():
    assert projective_positions(A4, (1, 4, 7, 9)) == {1: 5, 4: 11, 7: 10, 9: 13}
    with pytest.raises(NotAClusterError):
        projective_positions(A4, (1, 2, 3, 5))


def test_ar_quiver_from_word():
    q = ar_quiver_from_word(A4, (1, 4, 7, 9))
    assert q.level(2) == (2, 6, 13)
    assert q.level(1) == (5, 10, 14)
    assert q.level(3) == (3, 8, 12)
    assert q.level(4) == (11,)
    assert set(q.wrap_arrows) == {(13, 2), (14, 3)}
    expected = {(2, 3), (2, 5), (3, 6), (5, 6), (6, 8), (8, 11), (11, 12), (12, 13),
                (10, 13), (13, 14), (13, 2), (14, 3)}
    assert set(q.arrows) == expected


def _brute_force_projective_positions(frame, sel):
    letters, perm = [], rho(frame.cd)
    block = list(frame.j_sequence)
    for _ in range(4):
        letters += block
        block = [perm[j - 1] for j in block]
    size = frame.size
    out = {}
    for t in sel:
        for p in range(t + 1, len(letters) + 1):
            if ((p - 1) % size) + 1 not in sel and letters[p - 1] == frame.j_sequence[t - 1]:
                out[t] = p
                break
    return out


@pytest.mark.parametrize("label", ["A3", "D4"])
def test_projective_positions_are_distinct_vertices(label):
    f = frame_for(dynkin(label))
    for sel in itertools.islice((s for s in all_selections(f) if is_reduced_w0(f, s)), 60):
        pp = projective_positions(f, sel)
        assert pp == _brute_force_projective_positions(f, sel)
        verts = {(p - 1) % f.size + 1 for p in pp.values()}
        assert len(verts) == f.n and not verts & set(sel)


def test_long_word_rejects_zero_copies():
    with pytest.raises(ValueError):
        long_word(A4, (1, 2, 3, 4), copies=0)

