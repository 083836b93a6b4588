"""Algebraic mutation of clusters and the exchange graph."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .adapted import AdaptedFrame, is_reduced_w0, require_cluster, selection
from .core import apply_simple, is_negative, simple_root
from .errors import CoxclustError, SelectionError

LEFT, RIGHT = "left", "right"


@dataclass(frozen=True)
class MutationStep:
    source: tuple
    k: int
    removed: int
    inserted: int
    scan_side: str
    target: tuple

    @property
    def target_k(self) -> int:
        """Direction index of the inserted position in the re-sorted target."""
        return self.target.index(self.inserted) + 1


def _scan(frame: AdaptedFrame, deleted: set, tk: int, positions) -> int | None:
    """Apply the undeleted letters at ``positions`` one by one to alpha_{j_{t_k}}.

    Returns the first position at which the root turns negative.
    """
    n = frame.n
    v = simple_root(n, frame.j_sequence[tk - 1])
    for ell in positions:
        if ell in deleted:
            continue
        v = apply_simple(frame.cd, frame.j_sequence[ell - 1], v)
        if is_negative(v):
            return ell
    return None


def algebraic_mutate(frame: AdaptedFrame, sel: Sequence[int], k: int) -> MutationStep:
    """Exchange the k-th smallest position of a cluster for its unique complement.

    Scanning left, t' is the largest l < t_k with
    s_{j_l} ... s_{j_{t_k - 1}}(alpha_{j_{t_k}}) negative; failing that, t' is
    the least l > t_k with s_{j_l} ... s_{j_{t_k + 1}}(alpha_{j_{t_k}})
    negative.  Deleted letters act as the identity.
    """
    sel = selection(frame, sel)
    if not 1 <= k <= frame.n:
        raise SelectionError(f"direction k must lie in 1..{frame.n}")
    require_cluster(frame, sel)
    deleted = set(sel)
    tk = sel[k - 1]
    left = _scan(frame, deleted, tk, range(tk - 1, 0, -1))
    right = _scan(frame, deleted, tk, range(tk + 1, frame.size + 1))
    if (left is None) == (right is None):
        # for a genuine cluster exactly one side turns negative
        raise CoxclustError(f"mutation scan of {sel} at k={k} found {left=} {right=}")
    if left is not None:
        inserted, side = left, LEFT
    else:
        inserted, side = right, RIGHT
    target = tuple(sorted((deleted - {tk}) | {inserted}))
    return MutationStep(sel, k, tk, inserted, side, target)


def complements(frame: AdaptedFrame, sel: Sequence[int], k: int) -> list:
    """Every position that can replace t_k and keep the deleted word reduced for w_0."""
    sel = selection(frame, sel)
    rest = set(sel) - {sel[k - 1]}
    return [c for c in range(1, frame.size + 1)
            if c not in sel and is_reduced_w0(frame, sorted(rest | {c}))]


def verify_unique_complement(frame: AdaptedFrame, sel: Sequence[int], k: int) -> bool:
    """Brute force finds exactly one replacement, and it is the scanned one."""
    found = complements(frame, sel, k)
    return len(found) == 1 and found[0] == algebraic_mutate(frame, sel, k).inserted


@dataclass(frozen=True)
class ExchangeGraph:
    base: tuple
    vertices: tuple             # BFS discovery order
    steps: tuple                # every directed MutationStep, in BFS order
    edges: tuple                # undirected, as sorted pairs of vertex indices

    def neighbours(self) -> dict:
        adj = {v: set() for v in range(len(self.vertices))}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def is_regular(self, degree: int) -> bool:
        out = {v: 0 for v in self.vertices}
        for step in self.steps:
            out[step.source] += 1
        return all(d == degree for d in out.values()) and \
            all(len(nb) == degree for nb in self.neighbours().values())

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        adj = self.neighbours()
        seen, stack = {0}, [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def is_involutive(self) -> bool:
        lookup = {(s.source, s.k): s for s in self.steps}
        return all(lookup[(s.target, s.target_k)].target == s.source for s in self.steps)


def exchange_graph(frame: AdaptedFrame) -> ExchangeGraph:
    base = tuple(range(1, frame.n + 1))
    index = {base: 0}
    order, steps, edges = [base], [], set()
    queue = deque([base])
    while queue:
        sel = queue.popleft()
        for k in range(1, frame.n + 1):
            step = algebraic_mutate(frame, sel, k)
            steps.append(step)
            if step.target not in index:
                index[step.target] = len(order)
                order.append(step.target)
                queue.append(step.target)
            a, b = index[sel], index[step.target]
            edges.add((min(a, b), max(a, b)))
    return ExchangeGraph(base, tuple(order), tuple(steps), tuple(sorted(edges)))
