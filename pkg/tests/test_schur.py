from __future__ import annotations

import pytest

from coxclust.adapted import frame_for
from coxclust.braid import Factorization, enumerate_factorizations, reflection_length, standard_factorization
from coxclust.core import (
    GroupElement,
    coxeter_element,
    dynkin,
    from_quiver,
    inverse,
    positive_roots,
    projective_roots,
    reflection,
    simple_root,
)
from coxclust.errors import FactorizationError, NotRealRootError
from coxclust.reptheory import hom_table, is_exceptional_sequence
from coxclust.schur import (
    UNKNOWN,
    YES,
    check_witness,
    is_real_root,
    left_products,
    prefix_set,
    prefix_subgroups,
    prefix_test,
    prefix_to_generators,
)

KRONECKER = from_quiver(2, [(2, 1, 2)])
AFFINE_A2 = from_quiver(3, [(3, 2, 1), (2, 1, 1), (3, 1, 1)])
WILD3 = from_quiver(3, [(2, 1, 2), (3, 2, 1)])


def test_real_root_form_test():
    assert not is_real_root(KRONECKER, (1, 1))
    assert is_real_root(KRONECKER, (2, 1))
    assert is_real_root(KRONECKER, (-2, -1))
    assert not is_real_root(KRONECKER, (1, -1))
    assert not is_real_root(dynkin("B2"), (2, 1))
    assert all(is_real_root(dynkin("A3"), b) for b in positive_roots(dynkin("A3")))
    with pytest.raises(NotRealRootError):
        is_real_root(KRONECKER, (0, 0))


@pytest.mark.parametrize("label", ["A2", "A3", "B3", "D4", "G2"])
def test_every_positive_root_is_a_prefix_in_finite_type(label):
    cd = dynkin(label)
    assert reflection_length(cd, coxeter_element(cd)) == cd.rank     # no shorter factorization
    for beta in positive_roots(cd):
        verdict = prefix_test(cd, beta)
        assert verdict.status == YES and verdict.exhaustive
        assert check_witness(cd, beta, verdict.witness)


@pytest.mark.parametrize("beta,depth", [((2, 1), 1), ((1, 2), 1), ((3, 2), 2), ((1, 0), 0), ((0, 1), 0)])
def test_kronecker_witnesses(beta, depth):
    verdict = prefix_test(KRONECKER, beta)
    assert verdict.status == YES and not verdict.exhaustive
    assert verdict.depth_used == depth
    assert check_witness(KRONECKER, beta, verdict.witness)


def test_imaginary_root_is_rejected():
    with pytest.raises(NotRealRootError):
        prefix_test(KRONECKER, (1, 1))
    with pytest.raises(NotRealRootError):
        prefix_test(KRONECKER, (-2, -1))


def test_last_simple_root_is_found_in_the_base():
    for cd in [KRONECKER, WILD3, dynkin("A3")]:
        beta = simple_root(cd.rank, cd.rank)
        verdict = prefix_test(cd, beta)
        assert verdict.status == YES
        if not cd.finite_type:
            assert verdict.depth_used == 0


def test_depth_limit_reports_unknown_not_no():
    verdict = prefix_test(KRONECKER, (5, 4), depth=2)
    assert verdict.status == UNKNOWN and verdict.depth_used == 2 and verdict.witness is None


def _preprojectives(cd, count):
    c = coxeter_element(cd)
    out = []
    for p in projective_roots(cd):
        v = p
        for _ in range(count):
            out.append(v)
            v = c(v)
    return out


# Observed search depths for preprojective (hence real Schur) roots; every
# case stays well inside the default depth 10 n.
@pytest.mark.parametrize("cd,name", [(KRONECKER, "kronecker"), (from_quiver(2, [(2, 1, 3)]), "3-kronecker"),
                                     (AFFINE_A2, "affine-A2"), (WILD3, "wild-rank-3")])
def test_default_depth_is_adequate_for_preprojectives(cd, name):
    worst = 0
    for beta in _preprojectives(cd, 4):
        verdict = prefix_test(cd, beta)
        assert verdict.status == YES, (name, beta)
        assert check_witness(cd, beta, verdict.witness)
        worst = max(worst, verdict.depth_used)
    assert worst <= 9 < 10 * cd.rank


def test_non_schur_real_roots_stay_unknown():
    # delta + alpha_2 and its partner in the rank-two tube are real but not Schur
    for beta in [(1, 2, 1), (2, 1, 2)]:
        assert is_real_root(AFFINE_A2, beta)
        assert prefix_test(AFFINE_A2, beta).status == UNKNOWN


def test_prefix_set_sizes():
    a2 = prefix_set(dynkin("A2"))
    assert len(a2) == 5
    cd = dynkin("A2")
    expected = {GroupElement.identity(2), reflection(cd, (1, 0)), reflection(cd, (0, 1)),
                reflection(cd, (1, 1)), coxeter_element(cd)}
    assert a2 == expected
    a3 = dynkin("A3")
    assert len(prefix_set(a3)) == 14
    assert coxeter_element(a3) in prefix_set(a3) and GroupElement.identity(3) in prefix_set(a3)


@pytest.mark.parametrize("label", ["A2", "A3", "D4"])
def test_prefixes_give_one_reflection_subgroup(label):
    assert all(len(groups) == 1 for groups in prefix_subgroups(dynkin(label)).values())


def test_prefix_to_generators():
    f = frame_for(dynkin("A3"))
    base = standard_factorization(f.cd)
    assert prefix_to_generators(f, base, 0) == []
    gens = prefix_to_generators(f, base, 3)
    assert [m.dim for m in gens] == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    with pytest.raises(FactorizationError):
        prefix_to_generators(f, Factorization(base.roots[::-1], f.cd), 2)
    with pytest.raises(ValueError):
        prefix_to_generators(f, base, 4)


def test_every_a2_prefix_receives_generators():
    f = frame_for(dynkin("A2"))
    seen = {}
    for fac in enumerate_factorizations(f.cd, coxeter_element(f.cd), 2):
        prods = left_products(fac)
        for r in range(3):
            seen.setdefault(prods[r], []).append(prefix_to_generators(f, fac, r))
    assert len(seen) == 5


@pytest.mark.parametrize("label", ["A2", "A3", "D4"])
def test_prefixes_of_inverse_factorizations_are_exceptional(label):
    f = frame_for(dynkin(label))
    t = hom_table(f)
    c_inv = inverse(f.cd, coxeter_element(f.cd))
    for fac in enumerate_factorizations(f.cd, c_inv, f.n):
        seq = [t.quiver.by_dim(b) for b in fac.roots]
        for r in range(f.n + 1):
            assert is_exceptional_sequence(t, seq[:r])
