"""Hurwitz (braid group) action on sequences of positive roots.

A :class:`Factorization` ``(beta_1, ..., beta_m)`` stands for the product
``s_{beta_1} s_{beta_2} ... s_{beta_m}`` read left to right.  The generator
``sigma_i`` sends ``(beta_i, beta_{i+1})`` to ``(|s_{beta_i}(beta_{i+1})|, beta_i)``
and keeps that product fixed.

Braid words are tuples of nonzero ints listed in the order they are
applied: ``+i`` is ``sigma_i`` and ``-i`` is ``sigma_i^{-1}``.

Statements written as ``t_m ... t_1 = C`` (right-to-left reading)
correspond to the reversed tuple; :func:`reversed_factorization` is the one
place that conversion happens.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import sympy

from .core import (
    CartanData,
    GroupElement,
    abs_root,
    is_positive,
    positive_roots,
    real_root_descent,
    reflect_in_root,
    reflection,
)
from .errors import NotFiniteTypeError, NotRealRootError, OrbitLimitExceeded


@dataclass(frozen=True)
class Factorization:
    roots: tuple
    cd: CartanData = field(compare=False, repr=False)

    @classmethod
    def of(cls, cd: CartanData, roots: Iterable[Sequence[int]]) -> Factorization:
        """Validated constructor: every entry must be a positive real root."""
        roots = tuple(tuple(r) for r in roots)
        for r in roots:
            if len(r) != cd.rank or not is_positive(r):
                raise NotRealRootError(f"{r} is not a positive root of {cd!r}")
            if real_root_descent(cd, r) is None:
                raise NotRealRootError(f"{r} is not a real root of {cd!r}")
        return cls(roots, cd)

    def __len__(self):
        return len(self.roots)

    def __getitem__(self, i):
        return self.roots[i]

    @cached_property
    def product(self) -> GroupElement:
        g = GroupElement.identity(self.cd.rank)
        for r in self.roots:
            g = g * reflection(self.cd, r)
        return g


def reversed_factorization(f: Factorization) -> Factorization:
    """(beta_m, ..., beta_1); its product is the inverse of f's product."""
    return Factorization(tuple(reversed(f.roots)), f.cd)


def _check_index(f: Factorization, i: int) -> None:
    if not 1 <= i <= len(f.roots) - 1:
        raise IndexError(f"braid generator {i} outside 1..{len(f.roots) - 1}")


def sigma(f: Factorization, i: int) -> Factorization:
    _check_index(f, i)
    b = list(f.roots)
    x, y = b[i - 1], b[i]
    b[i - 1], b[i] = abs_root(reflect_in_root(f.cd, x, y)), x
    return Factorization(tuple(b), f.cd)


def sigma_inverse(f: Factorization, i: int) -> Factorization:
    _check_index(f, i)
    b = list(f.roots)
    x, y = b[i - 1], b[i]
    b[i - 1], b[i] = y, abs_root(reflect_in_root(f.cd, y, x))
    return Factorization(tuple(b), f.cd)


def apply_braid_word(f: Factorization, word: Iterable[int]) -> Factorization:
    for g in word:
        if g == 0:
            raise ValueError("braid word letters are nonzero")
        f = sigma(f, g) if g > 0 else sigma_inverse(f, -g)
    return f


def move_to_front(f: Factorization, i: int) -> tuple[Factorization, tuple]:
    """Bring entry ``i`` (1-based) to the front without changing it."""
    if not 1 <= i <= len(f.roots):
        raise IndexError(f"entry {i} outside 1..{len(f.roots)}")
    word = tuple(-k for k in range(i - 1, 0, -1))
    return apply_braid_word(f, word), word


# ---------------------------------------------------------------------------
# enumeration (finite type)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _rank_minus_identity(matrix) -> int:
    n = len(matrix)
    m = sympy.Matrix(n, n, lambda i, j: matrix[i][j] - (1 if i == j else 0))
    return int(m.rank())


def reflection_length(cd: CartanData, w: GroupElement) -> int:
    """Absolute length of ``w`` in a finite Weyl group, as rank(w - 1)."""
    if not cd.finite_type:
        raise NotFiniteTypeError("reflection length via rank(w - 1) needs finite type")
    return _rank_minus_identity(w.matrix)


def enumerate_factorizations(cd: CartanData, target: GroupElement, m: int) -> list:
    """Every length-``m`` sequence of positive roots whose reflections multiply to ``target``.

    Depth-first over the positive roots; a branch survives only while the
    remaining element has reflection length at most, and of the same parity
    as, the number of open slots.
    """
    if not cd.finite_type:
        raise NotFiniteTypeError("factorization enumeration needs finite type")
    roots = positive_roots(cd)
    refl = [reflection(cd, b) for b in roots]
    out: list[Factorization] = []

    def feasible(g: GroupElement, k: int) -> bool:
        lt = reflection_length(cd, g)
        return lt <= k and (k - lt) % 2 == 0

    if not feasible(target, m):
        return out

    prefix: list = []

    def dfs(rest: GroupElement, k: int) -> None:
        if k == 0:
            out.append(Factorization(tuple(prefix), cd))
            return
        for b, s in zip(roots, refl):
            # s_b * rest' = rest  =>  rest' = s_b * rest
            nxt = s * rest
            if feasible(nxt, k - 1):
                prefix.append(b)
                dfs(nxt, k - 1)
                prefix.pop()

    dfs(target, m)
    return out


# ---------------------------------------------------------------------------
# orbits
# ---------------------------------------------------------------------------

@dataclass
class OrbitReport:
    base: Factorization
    orbit: tuple
    generator_witnesses: dict
    factorization_count: int | None
    truncated: bool
    depth: int

    @property
    def orbit_size(self) -> int:
        return len(self.orbit)

    @property
    def transitive(self) -> bool | None:
        if self.factorization_count is None or self.truncated:
            return None
        return self.orbit_size == self.factorization_count


def hurwitz_orbit(base: Factorization, depth_limit: int | None = None,
                  max_size: int = 200_000, count: bool = True) -> OrbitReport:
    """Breadth-first closure of ``base`` under all sigma_i and their inverses.

    Without ``depth_limit`` the search runs to closure, which is only
    allowed in finite type.  ``count`` also enumerates all factorizations
    of the same product (finite type) so the report can decide transitivity.
    """
    cd = base.cd
    if depth_limit is None and not cd.finite_type:
        raise NotFiniteTypeError("orbits in infinite type need an explicit depth_limit")
    m = len(base.roots)
    witnesses = {base: ()}
    frontier = deque([base])
    depth = 0
    truncated = False

    def report() -> OrbitReport:
        orbit = tuple(sorted(witnesses, key=lambda f: f.roots))
        total = None
        if count and cd.finite_type:
            total = len(enumerate_factorizations(cd, base.product, m))
        return OrbitReport(base, orbit, dict(witnesses), total, truncated, depth)

    while frontier:
        if depth_limit is not None and depth >= depth_limit:
            # partial ball unless the frontier is already closed
            truncated = any(
                move(f, i) not in witnesses
                for f in frontier for i in range(1, m) for move in (sigma, sigma_inverse))
            break
        nxt = deque()
        for f in frontier:
            path = witnesses[f]
            for i in range(1, m):
                for g, move in ((i, sigma), (-i, sigma_inverse)):
                    h = move(f, i)
                    if h not in witnesses:
                        witnesses[h] = path + (g,)
                        nxt.append(h)
                        if len(witnesses) > max_size:
                            truncated = True
                            raise OrbitLimitExceeded(
                                f"orbit exceeded {max_size} factorizations", report())
        frontier = nxt
        if frontier:
            depth += 1
    return report()


def standard_factorization(cd: CartanData) -> Factorization:
    """(alpha_1, ..., alpha_n), a factorization of C = s_1 ... s_n."""
    n = cd.rank
    return Factorization(tuple(tuple(1 if k == i else 0 for k in range(n)) for i in range(n)), cd)


def simple_sequence(cd: CartanData) -> Factorization:
    """(alpha_n, ..., alpha_1), a factorization of C^{-1}."""
    return reversed_factorization(standard_factorization(cd))
