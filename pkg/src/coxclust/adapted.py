"""Adapted reduced words for w_0, the word for w_1 = C w_0, and deleted words.

The frame lists the indecomposable objects of the cluster category
(modules, then the shifted projectives P(1)[1], ..., P(n)[1]) in an order
compatible with the Auslander-Reiten quiver.  Position ``t`` carries the
letter of the tau-orbit its object lives in, and

    alpha^t = s_{j_1} ... s_{j_{t-1}} (alpha_{j_t})

recovers the dimension vector of the object (negated for shifted
projectives).  Positions and letters are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .core import (
    CartanData,
    GroupElement,
    abs_root,
    apply_word,
    coxeter_element,
    injective_roots,
    is_positive,
    longest_element,
    neg,
    positive_roots,
    projective_roots,
    reflection,
    simple_reflection,
    simple_root,
    word_to_element,
)
from .errors import FrameError, NotAClusterError, NotFiniteTypeError, SelectionError

PROJECTIVE, MODULE, SHIFTED = 0, 1, 2


@dataclass(frozen=True)
class AdaptedFrame:
    cd: CartanData
    j_sequence: tuple
    alpha_sequence: tuple
    nu: int
    w0: GroupElement
    w1: GroupElement
    # (vertex, r): the object at position t is tau^{-r} P(vertex);
    # shifted projectives sit at r = length of their orbit
    coords: tuple

    @property
    def n(self) -> int:
        return self.cd.rank

    @property
    def size(self) -> int:
        return self.nu + self.cd.rank

    @property
    def w0_word(self) -> tuple:
        return self.j_sequence[self.n:]

    @cached_property
    def _reflections(self) -> tuple:
        return tuple(reflection(self.cd, abs_root(a)) for a in self.alpha_sequence)

    @cached_property
    def _simple(self) -> tuple:
        return tuple(simple_reflection(self.cd, j) for j in self.j_sequence)

    def reflection_at(self, t: int) -> GroupElement:
        """s_{alpha^t}; for t > nu this is the reflection in |alpha^t|."""
        return self._reflections[t - 1]


def _tau_orbits(cd: CartanData) -> list[list[tuple]]:
    c = coxeter_element(cd)
    orbits = []
    for p in projective_roots(cd):
        orbit = [p]
        nxt = c(p)
        while is_positive(nxt):
            orbit.append(nxt)
            nxt = c(nxt)
        orbits.append(orbit)
    return orbits


def build_frame(cd: CartanData) -> AdaptedFrame:
    """Knit the tau^{-1}-orbits of the projectives into an adapted word.

    Objects are placed greedily along the AR order: projectives first (in
    vertex order), then non-projective modules preferring the smallest
    vertex, then P(1)[1], ..., P(n)[1].  Every frame invariant is checked
    before returning.
    """
    if not cd.finite_type:
        raise NotFiniteTypeError(f"{cd!r} has no longest element, so no frame")
    n = cd.rank
    orbits = _tau_orbits(cd)
    nu = sum(len(o) for o in orbits)
    if nu != len(positive_roots(cd)):
        raise FrameError("tau-orbits of the projectives do not exhaust the positive roots")
    injectives = injective_roots(cd)

    # object key -> (kind, sort key)
    objects: dict[tuple, tuple] = {}
    for i, orbit in enumerate(orbits, 1):
        for r in range(len(orbit)):
            objects[(i, r)] = (PROJECTIVE if r == 0 else MODULE, i)
        try:
            k = injectives.index(orbit[-1]) + 1
        except ValueError:
            raise FrameError(f"orbit of P({i}) does not end at an injective") from None
        objects[(i, len(orbit))] = (SHIFTED, k)

    preds: dict[tuple, set] = {key: set() for key in objects}

    def link(a, b):
        if a in objects and b in objects:
            preds[b].add(a)

    for key in objects:
        i, r = key
        link((i, r - 1), key)
    for src, tgt, _ in cd.arrows:
        for r in range(max(len(o) for o in orbits) + 1):
            link((tgt, r), (src, r))
            link((src, r), (tgt, r + 1))

    placed: list[tuple] = []
    done: set = set()
    while len(placed) < len(objects):
        ready = [key for key in objects if key not in done and preds[key] <= done]
        if not ready:
            raise FrameError("AR order has a cycle")
        key = min(ready, key=lambda kk: objects[kk])
        placed.append(key)
        done.add(key)

    j_sequence = tuple(i for i, _ in placed)
    alpha = tuple(apply_word(cd, j_sequence[: t - 1], simple_root(n, j_sequence[t - 1]))
                  for t in range(1, nu + n + 1))
    frame = AdaptedFrame(
        cd=cd,
        j_sequence=j_sequence,
        alpha_sequence=alpha,
        nu=nu,
        w0=longest_element(cd),
        w1=coxeter_element(cd) * longest_element(cd),
        coords=tuple(placed),
    )
    _check_frame(frame, orbits)
    return frame


def _check_frame(frame: AdaptedFrame, orbits) -> None:
    cd, n, nu = frame.cd, frame.n, frame.nu
    j = frame.j_sequence
    if j[:n] != tuple(range(1, n + 1)):
        raise FrameError("frame does not start with the projectives 1..n")
    for t, ((i, r), a) in enumerate(zip(frame.coords, frame.alpha_sequence), 1):
        if t <= nu:
            if a != orbits[i - 1][r]:
                raise FrameError(f"alpha^{t} = {a} is not tau^-{r} P({i})")
    proj = projective_roots(cd)
    for k in range(1, n + 1):
        if frame.alpha_sequence[nu + k - 1] != neg(proj[k - 1]):
            raise FrameError(f"alpha^{nu + k} is not -dim P({k})")
    if sorted(frame.alpha_sequence[:nu]) != sorted(positive_roots(cd)):
        raise FrameError("alpha^1..alpha^nu is not a permutation of the positive roots")
    if len(frame.w0_word) != nu or word_to_element(cd, frame.w0_word) != frame.w0:
        raise FrameError("the adapted word is not a reduced expression for w_0")
    if word_to_element(cd, j) != frame.w1:
        raise FrameError("j-sequence does not multiply to C w_0")


_FRAME_CACHE: dict = {}


def frame_for(cd: CartanData) -> AdaptedFrame:
    """Memoised :func:`build_frame`."""
    if cd not in _FRAME_CACHE:
        _FRAME_CACHE[cd] = build_frame(cd)
    return _FRAME_CACHE[cd]


# ---------------------------------------------------------------------------
# selections and deleted words
# ---------------------------------------------------------------------------

def selection(frame: AdaptedFrame, positions: Iterable[int]) -> tuple:
    """Validate and sort an n-subset of 1..nu+n."""
    sel = tuple(sorted(int(p) for p in positions))
    if len(sel) != frame.n:
        raise SelectionError(f"a selection has exactly {frame.n} positions, got {len(sel)}")
    if len(set(sel)) != len(sel):
        raise SelectionError("selection positions must be distinct")
    if sel[0] < 1 or sel[-1] > frame.size:
        raise SelectionError(f"positions must lie in 1..{frame.size}")
    return sel


def all_selections(frame: AdaptedFrame):
    return combinations(range(1, frame.size + 1), frame.n)


def barred_word(frame: AdaptedFrame, sel: Sequence[int]) -> tuple:
    """Letters of w_1 with ``None`` (the identity) at the deleted positions."""
    deleted = set(sel)
    return tuple(None if t in deleted else j for t, j in enumerate(frame.j_sequence, 1))


def deleted_word(frame: AdaptedFrame, sel: Sequence[int]) -> tuple:
    deleted = set(sel)
    return tuple(j for t, j in enumerate(frame.j_sequence, 1) if t not in deleted)


def deleted_element(frame: AdaptedFrame, sel: Sequence[int]) -> GroupElement:
    deleted = set(sel)
    g = GroupElement.identity(frame.n)
    for t, s in enumerate(frame._simple, 1):
        if t not in deleted:
            g = g * s
    return g


def is_reduced_w0(frame: AdaptedFrame, sel: Sequence[int]) -> bool:
    """Condition (4): the deleted word is a reduced expression for w_0.

    The deleted word always has nu letters, so it is reduced for w_0
    exactly when it evaluates to w_0.
    """
    return deleted_element(frame, sel) == frame.w0


def condition3(frame: AdaptedFrame, sel: Sequence[int]) -> bool:
    """Condition (3): s_{alpha^{t_n}} ... s_{alpha^{t_1}} = C."""
    g = GroupElement.identity(frame.n)
    for t in sorted(sel, reverse=True):
        g = g * frame.reflection_at(t)
    return g == coxeter_element(frame.cd)


def reflection_product_identity(frame: AdaptedFrame, sel: Sequence[int]) -> bool:
    """(s_{alpha^{t_1}} ... s_{alpha^{t_n}}) w_1 equals the deleted word's element."""
    g = GroupElement.identity(frame.n)
    for t in sorted(sel):
        g = g * frame.reflection_at(t)
    return g * frame.w1 == deleted_element(frame, sel)


def require_cluster(frame: AdaptedFrame, sel: Sequence[int]) -> None:
    if not is_reduced_w0(frame, sel):
        raise NotAClusterError(f"w^delta{tuple(sel)} is not a reduced expression for w_0")


# ---------------------------------------------------------------------------
# rho, long words and the AR quiver read off a deleted word
# ---------------------------------------------------------------------------

def rho(cd: CartanData) -> tuple:
    """The letter permutation with w_0 s_i w_0 = s_{rho(i)}; ``rho[i-1]`` is rho(i)."""
    w0 = longest_element(cd)
    simple = [simple_reflection(cd, i) for i in range(1, cd.rank + 1)]
    out = []
    for s in simple:
        conj = w0 * s * w0
        out.append(simple.index(conj) + 1)
    return tuple(out)


def _long_letters(frame: AdaptedFrame, copies: int) -> tuple:
    perm = rho(frame.cd)
    letters = []
    block = list(frame.j_sequence)
    for _ in range(copies):
        letters.extend(block)
        block = [perm[j - 1] for j in block]
    return tuple(letters)


def _is_deleted(frame: AdaptedFrame, deleted: set, position: int) -> bool:
    return ((position - 1) % frame.size) + 1 in deleted


def long_word(frame: AdaptedFrame, sel: Sequence[int], copies: int = 2) -> tuple:
    """w^delta rho(w^delta) w^delta ... as ``(position, letter or None)`` pairs."""
    if copies < 1:
        raise ValueError("copies must be at least 1")
    deleted = set(sel)
    return tuple((p, None if _is_deleted(frame, deleted, p) else j)
                 for p, j in enumerate(_long_letters(frame, copies), 1))


def projective_positions(frame: AdaptedFrame, sel: Sequence[int]) -> dict:
    """For each deleted t, the next undeleted long-word position with letter j_t."""
    require_cluster(frame, sel)
    copies = 2
    while True:
        word = dict(long_word(frame, sel, copies))
        out = {}
        for t in sorted(sel):
            letter = frame.j_sequence[t - 1]
            hit = next((p for p in range(t + 1, len(word) + 1) if word[p] == letter), None)
            if hit is None:
                break
            out[t] = hit
        else:
            return out
        copies *= 2


@dataclass(frozen=True)
class WordQuiver:
    """Leveled quiver on the undeleted positions of a deleted word."""

    vertices: tuple
    levels: dict
    arrows: tuple
    wrap_arrows: tuple

    def level(self, level: int) -> tuple:
        return tuple(v for v in self.vertices if self.levels[v] == level)


def ar_quiver_from_word(frame: AdaptedFrame, sel: Sequence[int]) -> WordQuiver:
    """Vertices are the nu undeleted positions, placed at the level of their letter.

    Arrows are read off the full word w_1 followed by its rho-twisted copy:
    p -> q when the letters are adjacent and neither letter occurs strictly
    between.  Arrows touching a deleted position are dropped, and targets in
    the second copy are identified with their position modulo nu + n.
    """
    require_cluster(frame, sel)
    cd = frame.cd
    size = frame.size
    deleted = set(sel)
    letters = _long_letters(frame, 2)
    vertices = tuple(t for t in range(1, size + 1) if t not in deleted)
    levels = {t: frame.j_sequence[t - 1] for t in vertices}
    arrows, wraps = set(), set()
    for p in vertices:
        a = letters[p - 1]
        for q in range(p + 1, 2 * size + 1):
            b = letters[q - 1]
            if b == a:
                break
            if not cd.adjacent(a, b):
                continue
            if any(letters[x - 1] == b for x in range(p + 1, q)):
                continue
            if _is_deleted(frame, deleted, q):
                continue
            target = ((q - 1) % size) + 1
            arrows.add((p, target))
            if q > size:
                wraps.add((p, target))
    return WordQuiver(vertices, levels, tuple(sorted(arrows)), tuple(sorted(wraps)))
