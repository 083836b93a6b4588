"""Module-theoretic checks for simply-laced finite type.

Indecomposables are knitted from the projectives along the frame order, and
Hom dimensions come from the mesh recursion

    h(M) = sum_{E -> M} h(E) - h(tau M) + [M = X],     h = dim Hom(X, -)

with ``h(tau M) = 0`` when M is projective.  Ext follows from the
Auslander-Reiten formula ext(X, Y) = hom(Y, tau X).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import sympy

from .adapted import AdaptedFrame, selection
from .braid import Factorization, sigma, sigma_inverse
from .core import CartanData, abs_root, type_a_path
from .errors import NotSimplyLacedError, SelectionError


@dataclass(frozen=True)
class Indec:
    dim: tuple
    ar_position: tuple          # (slice r, vertex i): the module tau^{-r} P(i)
    is_projective: bool
    is_injective: bool
    index: int                  # frame position t of M_t

    @property
    def tau_orbit_vertex(self) -> int:
        return self.ar_position[1]


@dataclass(frozen=True)
class ARQuiver:
    frame: AdaptedFrame = field(repr=False)
    indecs: tuple
    arrows: tuple               # (s, t) frame positions, one per irreducible map
    tau: dict                   # t -> position of tau M_t, absent for projectives

    @property
    def nu(self) -> int:
        return len(self.indecs)

    def __getitem__(self, t: int) -> Indec:
        return self.indecs[t - 1]

    @cached_property
    def predecessors(self) -> dict:
        pred = {t: [] for t in range(1, self.nu + 1)}
        for s, t in self.arrows:
            pred[t].append(s)
        return pred

    @cached_property
    def _by_dim(self) -> dict:
        return {m.dim: m for m in self.indecs}

    def by_dim(self, dim: Sequence[int]) -> Indec:
        try:
            return self._by_dim[tuple(dim)]
        except KeyError:
            raise KeyError(f"no indecomposable of dimension {tuple(dim)}") from None

    def projective(self, k: int) -> Indec:
        return self.indecs[self.frame.coords.index((k, 0))]


def knit_ar_quiver(frame: AdaptedFrame) -> ARQuiver:
    cd = frame.cd
    if not cd.simply_laced:
        raise NotSimplyLacedError(f"{cd!r} is not simply laced; Hom/Ext knitting needs species")
    nu = frame.nu
    coords = frame.coords[:nu]
    where = {c: t for t, c in enumerate(coords, 1)}
    last = {}
    for i, r in coords:
        last[i] = max(last.get(i, 0), r)
    indecs = tuple(
        Indec(dim=frame.alpha_sequence[t - 1], ar_position=(r, i), is_projective=(r == 0),
              is_injective=(r == last[i]), index=t)
        for t, (i, r) in enumerate(coords, 1))

    arrows = []
    for src, tgt, _ in cd.arrows:
        for r in range(max(last.values()) + 1):
            for a, b in (((tgt, r), (src, r)), ((src, r), (tgt, r + 1))):
                if a in where and b in where:
                    arrows.append((where[a], where[b]))
    tau = {t: where[(i, r - 1)] for t, (i, r) in enumerate(coords, 1) if r > 0}
    return ARQuiver(frame, indecs, tuple(sorted(arrows)), tau)


class HomTable:
    """dim Hom between all indecomposables; ``hom(x, y)`` takes frame positions or Indecs."""

    def __init__(self, quiver: ARQuiver):
        self.quiver = quiver
        nu = quiver.nu
        rows = []
        for x in range(1, nu + 1):
            h = [0] * (nu + 1)
            for m in range(1, nu + 1):
                val = sum(h[e] for e in quiver.predecessors[m])
                if m in quiver.tau:
                    val -= h[quiver.tau[m]]
                if m == x:
                    val += 1
                h[m] = val
            rows.append(tuple(h[1:]))
        self.matrix = tuple(rows)

    @staticmethod
    def _t(x) -> int:
        return x.index if isinstance(x, Indec) else int(x)

    def hom(self, x, y) -> int:
        return self.matrix[self._t(x) - 1][self._t(y) - 1]

    def ext(self, x, y) -> int:
        tx = self.quiver.tau.get(self._t(x))
        return 0 if tx is None else self.hom(y, tx)

    def ext_matrix(self) -> tuple:
        nu = self.quiver.nu
        return tuple(tuple(self.ext(x, y) for y in range(1, nu + 1)) for x in range(1, nu + 1))


_TABLES: dict = {}


def hom_table(frame: AdaptedFrame) -> HomTable:
    """Memoised HomTable of a frame; read-only once built."""
    key = id(frame)
    entry = _TABLES.get(key)
    if entry is None or entry[0] is not frame:
        entry = (frame, HomTable(knit_ar_quiver(frame)))
        _TABLES[key] = entry
    return entry[1]


def hom_dim(table: HomTable, x, y) -> int:
    return table.hom(x, y)


def ext_dim(table: HomTable, x, y) -> int:
    return table.ext(x, y)


def is_exceptional_sequence(table: HomTable, seq: Sequence) -> bool:
    """Hom(E_j, E_i) = 0 for j > i and Ext(E_j, E_i) = 0 for j >= i."""
    seq = list(seq)
    for i in range(len(seq)):
        for j in range(i, len(seq)):
            if table.ext(seq[j], seq[i]):
                return False
            if j > i and table.hom(seq[j], seq[i]):
                return False
    return True


def N_of(frame: AdaptedFrame, t: int) -> Indec:
    """M_t for t <= nu, and the projective P(k) for t = nu + k."""
    if not 1 <= t <= frame.size:
        raise SelectionError(f"position {t} outside 1..{frame.size}")
    quiver = hom_table(frame).quiver
    if t <= frame.nu:
        return quiver[t]
    return quiver.projective(t - frame.nu)


def exceptional_condition(frame: AdaptedFrame, sel: Sequence[int]) -> bool:
    """(N_{t_1}, ..., N_{t_n}) is an exceptional sequence."""
    sel = selection(frame, sel)
    return is_exceptional_sequence(hom_table(frame), [N_of(frame, t) for t in sel])


def is_cluster_tilting(frame: AdaptedFrame, sel: Sequence[int]) -> bool:
    """Pairwise Ext vanishing in the cluster category.

    Two modules: Ext_A in both directions vanishes.  A module M and a shifted
    projective P(k)[1]: Hom_A(P(k), M) vanishes.  Two shifted projectives
    never extend each other.
    """
    sel = selection(frame, sel)
    table = hom_table(frame)
    nu = frame.nu
    for a_i, a in enumerate(sel):
        for b in sel[a_i + 1:]:
            if b <= nu:
                if table.ext(a, b) or table.ext(b, a):
                    return False
            elif a <= nu:
                if table.hom(N_of(frame, b), a):
                    return False
    return True


# ---------------------------------------------------------------------------
# exceptional-sequence braid moves on dimension vectors
# ---------------------------------------------------------------------------

def braid_exceptional(table: HomTable, seq: Sequence[Indec], i: int, inverse: bool = False) -> tuple:
    """Move (E_i, E_{i+1}) to (X, E_i) with dim X = |s_{e_i}(e_{i+1})| (or the inverse move)."""
    quiver = table.quiver
    f = Factorization(tuple(m.dim for m in seq), quiver.frame.cd)
    g = sigma_inverse(f, i) if inverse else sigma(f, i)
    return tuple(quiver.by_dim(abs_root(d)) for d in g.roots)


# ---------------------------------------------------------------------------
# independent oracle: explicit representations, Hom by linear algebra
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Representation:
    dims: tuple
    maps: dict      # (src, tgt) -> sympy Matrix of shape (dims[tgt], dims[src])


def interval_representation(cd: CartanData, support) -> Representation:
    """The thin module with the given support and identity maps inside it."""
    support = set(support)
    dims = tuple(1 if v in support else 0 for v in range(1, cd.rank + 1))
    maps = {}
    for s, t, _ in cd.arrows:
        maps[(s, t)] = sympy.Matrix(dims[t - 1], dims[s - 1], lambda *_: 1)
    return Representation(dims, maps)


def hom_by_linear_algebra(cd: CartanData, m: Representation, n_: Representation) -> int:
    """dim Hom(M, N): solve N(a) f_s = f_t M(a) for every arrow a: s -> t."""
    rank = cd.rank
    offsets, total = [], 0
    for v in range(rank):
        offsets.append(total)
        total += m.dims[v] * n_.dims[v]
    if total == 0:
        return 0

    def var(v, row, col):      # entry (row, col) of f_v, an N_v x M_v matrix
        return offsets[v] + row * m.dims[v] + col

    equations = []
    for s, t, _ in cd.arrows:
        s0, t0 = s - 1, t - 1
        ma, na = m.maps[(s, t)], n_.maps[(s, t)]
        for row in range(n_.dims[t0]):
            for col in range(m.dims[s0]):
                eq = [0] * total
                for k in range(n_.dims[s0]):           # (N(a) f_s)[row, col]
                    eq[var(s0, k, col)] += na[row, k]
                for k in range(m.dims[t0]):            # (f_t M(a))[row, col]
                    eq[var(t0, row, k)] -= ma[k, col]
                equations.append(eq)
    if not equations:
        return total
    return total - int(sympy.Matrix(equations).rank())


def type_a_hom_oracle(cd: CartanData) -> dict:
    """{(dim X, dim Y): dim Hom(X, Y)} over all interval modules of a type-A quiver."""
    order = type_a_path(cd)
    n = len(order)
    reps = [interval_representation(cd, order[a:b + 1]) for a in range(n) for b in range(a, n)]
    return {(x.dims, y.dims): hom_by_linear_algebra(cd, x, y) for x in reps for y in reps}
