"""Real roots, prefixes of the Coxeter element, and real Schur roots.

A positive real root beta is a real Schur root exactly when s_beta is a
prefix of C in absolute order, i.e. some length-n reflection factorization
of C starts with s_beta.  Finite type is decided exhaustively; otherwise a
depth-bounded Hurwitz search from (alpha_n, ..., alpha_1), a factorization of
C^{-1}, either produces a witness or reports ``unknown``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .adapted import AdaptedFrame
from .braid import (
    Factorization,
    apply_braid_word,
    enumerate_factorizations,
    reflection_length,
    reversed_factorization,
    sigma,
    sigma_inverse,
    simple_sequence,
)
from .core import (
    CartanData,
    GroupElement,
    _pairing2,
    abs_root,
    coxeter_element,
    is_negative,
    is_positive,
    positive_roots,
    real_root_descent,
    reflect_in_root,
    reflection,
)
from .errors import FactorizationError, NotRealRootError
from .reptheory import hom_table, is_exceptional_sequence

YES, NO, UNKNOWN = "yes", "no", "unknown"


def is_real_root(cd: CartanData, beta: Sequence[int]) -> bool:
    """Quadratic-form test plus an explicit descent to a simple root."""
    beta = tuple(int(x) for x in beta)
    if len(beta) != cd.rank:
        raise ValueError(f"expected {cd.rank} coordinates, got {len(beta)}")
    if not any(beta):
        raise NotRealRootError("the zero vector is not a root")
    if not (is_positive(beta) or is_negative(beta)):
        return False
    # reflections preserve the form, so a real root has the length of a simple root
    if _pairing2(cd, beta, beta) not in {2 * d for d in cd.symmetrizer}:
        return False
    return real_root_descent(cd, abs_root(beta)) is not None


@dataclass(frozen=True)
class PrefixVerdict:
    root: tuple
    status: str
    witness: Factorization | None
    depth_used: int | None      # Hurwitz depth searched; None in exhaustive mode
    exhaustive: bool


def _complete(cd: CartanData, g: GroupElement, k: int) -> list | None:
    """Some k positive roots whose reflections multiply to g, or None."""
    roots = positive_roots(cd)
    refl = [reflection(cd, b) for b in roots]

    def feasible(h, slots):
        lt = reflection_length(cd, h)
        return lt <= slots and (slots - lt) % 2 == 0

    def dfs(rest, slots):
        if slots == 0:
            return [] if rest.is_identity() else None
        for b, s in zip(roots, refl):
            nxt = s * rest
            if feasible(nxt, slots - 1):
                tail = dfs(nxt, slots - 1)
                if tail is not None:
                    return [b] + tail
        return None

    return dfs(g, k) if feasible(g, k) else None


def _move_to_end(f: Factorization, i: int) -> Factorization:
    """Carry entry i (1-based) to the last slot unchanged."""
    return apply_braid_word(f, range(i, len(f.roots)))


def prefix_test(cd: CartanData, beta: Sequence[int], depth: int | None = None,
                max_size: int = 200_000) -> PrefixVerdict:
    beta = tuple(int(x) for x in beta)
    if not is_real_root(cd, beta) or not is_positive(beta):
        raise NotRealRootError(f"{beta} is not a positive real root")
    n = cd.rank
    c = coxeter_element(cd)

    if cd.finite_type:
        tail = _complete(cd, reflection(cd, beta) * c, n - 1)
        if tail is None:
            return PrefixVerdict(beta, NO, None, None, True)
        return PrefixVerdict(beta, YES, Factorization((beta, *tail), cd), None, True)

    limit = 10 * n if depth is None else depth
    base = simple_sequence(cd)
    seen = {base}
    frontier = deque([base])
    level = 0
    while True:
        for f in frontier:
            if beta in f.roots:
                moved = _move_to_end(f, f.roots.index(beta) + 1)
                return PrefixVerdict(beta, YES, reversed_factorization(moved), level, False)
        if level >= limit or len(seen) > max_size:
            return PrefixVerdict(beta, UNKNOWN, None, level, False)
        nxt = deque()
        for f in frontier:
            for i in range(1, n):
                for move in (sigma, sigma_inverse):
                    h = move(f, i)
                    if h not in seen:
                        seen.add(h)
                        nxt.append(h)
        if not nxt:
            # the orbit closed up without meeting beta
            return PrefixVerdict(beta, NO, None, level, True)
        frontier = nxt
        level += 1


def check_witness(cd: CartanData, beta: Sequence[int], witness: Factorization) -> bool:
    """Positive real entries, n of them, first entry beta, product C."""
    return (len(witness.roots) == cd.rank
            and witness.roots[0] == tuple(beta)
            and all(is_positive(r) and is_real_root(cd, r) for r in witness.roots)
            and witness.product == coxeter_element(cd))


def prefix_to_generators(frame: AdaptedFrame, witness: Factorization, r: int) -> list:
    """Indecomposables generating the subcategory attached to t_1 ... t_r.

    Reversing a factorization of C gives an exceptional sequence; its last r
    terms, (E_{t_r}, ..., E_{t_1}), are returned in sequence order.
    """
    cd = frame.cd
    n = cd.rank
    if not 0 <= r <= n:
        raise ValueError(f"prefix length must lie in 0..{n}")
    if len(witness.roots) != n or not all(is_positive(b) for b in witness.roots):
        raise FactorizationError("witness must consist of n positive roots")
    if witness.product != coxeter_element(cd):
        raise FactorizationError("witness does not multiply to the Coxeter element")
    table = hom_table(frame)
    gens = [table.quiver.by_dim(b) for b in reversed(witness.roots[:r])]
    if not is_exceptional_sequence(table, gens):
        raise FactorizationError("generators do not form an exceptional sequence")
    return gens


def left_products(f: Factorization) -> list:
    """[e, t_1, t_1 t_2, ..., t_1 ... t_m]."""
    out = [GroupElement.identity(f.cd.rank)]
    for b in f.roots:
        out.append(out[-1] * reflection(f.cd, b))
    return out


def prefix_set(cd: CartanData) -> frozenset:
    c = coxeter_element(cd)
    found = set()
    for f in enumerate_factorizations(cd, c, cd.rank):
        found.update(left_products(f))
    return frozenset(found)


def reflection_subgroup_roots(cd: CartanData, roots: Sequence[Sequence[int]]) -> frozenset:
    """Positive roots of the reflection subgroup generated by s_beta, beta in roots."""
    closed = {abs_root(tuple(b)) for b in roots}
    queue = deque(closed)
    while queue:
        b = queue.popleft()
        for a in list(closed):
            for x, y in ((a, b), (b, a)):
                z = abs_root(reflect_in_root(cd, x, y))
                if z not in closed:
                    closed.add(z)
                    queue.append(z)
    return frozenset(closed)


def prefix_subgroups(cd: CartanData) -> dict:
    """prefix -> set of reflection subgroups generated by its first-r witness entries."""
    c = coxeter_element(cd)
    out: dict = {}
    for f in enumerate_factorizations(cd, c, cd.rank):
        prods = left_products(f)
        for r in range(cd.rank + 1):
            out.setdefault(prods[r], set()).add(reflection_subgroup_roots(cd, f.roots[:r]))
    return out
