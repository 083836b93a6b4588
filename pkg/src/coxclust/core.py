"""Root systems and Weyl group arithmetic for crystallographic Coxeter groups.

Everything is exact integer arithmetic in the simple-root basis.  The one
convention that the rest of the package relies on lives here:

    s_i(alpha_j) = alpha_j - a_ij * alpha_i,   a_ij = 2 B(alpha_i, alpha_j) / B(alpha_i, alpha_i)

and the symmetrizer satisfies d_i a_ij = d_j a_ji, so that
B(alpha_i, alpha_j) = d_i a_ij / 2 up to a global scale.

Vertex labels, word letters and generator indices are 1-based throughout the
public API.  Roots are plain tuples of ints (index ``k`` holds the
coefficient of alpha_{k+1}).
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm
from typing import Iterable, Sequence

import sympy

from .errors import CartanError, NonCrystallographicError, NotFiniteTypeError, NotRealRootError, NotTypeAError

Root = tuple  # tuple[int, ...]
Word = tuple  # tuple[int, ...], letters in 1..n
Matrix = tuple  # tuple[tuple[int, ...], ...]


# ---------------------------------------------------------------------------
# roots
# ---------------------------------------------------------------------------

def is_positive(root: Root) -> bool:
    return any(root) and all(c >= 0 for c in root)


def is_negative(root: Root) -> bool:
    return any(root) and all(c <= 0 for c in root)


def abs_root(root: Root) -> Root:
    """|beta|: the positive one of +-beta."""
    if is_negative(root):
        return tuple(-c for c in root)
    return tuple(root)


def neg(root: Root) -> Root:
    return tuple(-c for c in root)


def simple_root(n: int, i: int) -> Root:
    return tuple(1 if k == i - 1 else 0 for k in range(n))


def height(root: Root) -> int:
    return sum(root)


# ---------------------------------------------------------------------------
# Cartan data
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CartanData:
    """Symmetrizable generalized Cartan matrix with an acyclic orientation.

    ``arrows`` are ``(source, target, multiplicity)`` triples in the adapted
    numbering: vertex 1 is a sink, 2 is a sink once 1 is removed, and so on,
    so every arrow points from a larger label to a smaller one.
    ``labels[k-1]`` is the original label of adapted vertex ``k``.
    """

    cartan: Matrix
    symmetrizer: tuple
    arrows: tuple
    labels: tuple
    finite_type: bool
    name: str | None = None

    @property
    def rank(self) -> int:
        return len(self.cartan)

    def a(self, i: int, j: int) -> int:
        return self.cartan[i - 1][j - 1]

    @cached_property
    def simply_laced(self) -> bool:
        n = self.rank
        return all(self.cartan[i][j] in (0, -1) for i in range(n) for j in range(n) if i != j)

    @cached_property
    def _simple(self) -> tuple:
        return tuple(_simple_reflection_matrix(self.cartan, i) for i in range(self.rank))

    def adjacent(self, i: int, j: int) -> bool:
        return i != j and self.cartan[i - 1][j - 1] != 0

    def __repr__(self):
        tag = self.name or f"rank {self.rank}"
        return f"CartanData({tag})"


_TYPE_RE = re.compile(r"^\s*([A-Ia-i])_?\(?(\d+)\)?(?:\((\d+)\))?\s*$")


def _dynkin_edges(letter: str, n: int) -> list[tuple[int, int, int, int]]:
    """Edges ``(i, j, a_ij, a_ji)`` (1-based) for a finite Dynkin type."""
    chain = [(k, k + 1, -1, -1) for k in range(1, n)]
    if letter == "A":
        if n < 1:
            raise CartanError("A_n needs n >= 1")
        return chain
    if letter == "B":
        if n < 2:
            raise CartanError("B_n needs n >= 2")
        # alpha_n short
        return chain[:-1] + [(n - 1, n, -1, -2)]
    if letter == "C":
        if n < 2:
            raise CartanError("C_n needs n >= 2")
        # alpha_n long
        return chain[:-1] + [(n - 1, n, -2, -1)]
    if letter == "D":
        if n < 4:
            raise CartanError("D_n needs n >= 4")
        return [(k, k + 1, -1, -1) for k in range(1, n - 1)] + [(n - 2, n, -1, -1)]
    if letter == "E":
        if n not in (6, 7, 8):
            raise CartanError(f"no type E{n}")
        edges = [(1, 3), (3, 4), (4, 5), (2, 4)] + [(k, k + 1) for k in range(5, n)]
        return [(i, j, -1, -1) for i, j in edges]
    if letter == "F":
        if n != 4:
            raise CartanError(f"no type F{n}")
        return [(1, 2, -1, -1), (2, 3, -1, -2), (3, 4, -1, -1)]
    if letter == "G":
        if n != 2:
            raise CartanError(f"no type G{n}")
        # alpha_1 short
        return [(1, 2, -3, -1)]
    raise CartanError(f"unknown type letter {letter!r}")


def parse_type_label(label: str) -> tuple[str, int]:
    m = _TYPE_RE.match(label)
    if not m:
        raise CartanError(f"unknown type label {label!r}")
    letter, num, extra = m.group(1).upper(), int(m.group(2)), m.group(3)
    if letter in "HI":
        raise NonCrystallographicError(
            f"type {label!r} is not crystallographic; only A-G root data are supported")
    if extra is not None:
        raise CartanError(f"unknown type label {label!r}")
    if letter not in "ABCDEFG":
        raise CartanError(f"unknown type label {label!r}")
    return letter, num


def _symmetrizer(cartan: Sequence[Sequence[int]]) -> tuple:
    n = len(cartan)
    for i in range(n):
        if cartan[i][i] != 2:
            raise CartanError("diagonal Cartan entries must be 2")
        for j in range(n):
            if i == j:
                continue
            if cartan[i][j] > 0:
                raise CartanError("off-diagonal Cartan entries must be <= 0")
            if (cartan[i][j] == 0) != (cartan[j][i] == 0):
                raise CartanError("a_ij = 0 must imply a_ji = 0")
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if j == i or cartan[i][j] == 0:
                    continue
                # d_i a_ij = d_j a_ji
                want = d[i] * cartan[i][j] / cartan[j][i]
                if d[j] is None:
                    d[j] = want
                    queue.append(j)
                elif d[j] != want:
                    raise CartanError("Cartan matrix is not symmetrizable")
    scale = lcm(*(f.denominator for f in d))
    ints = [int(f * scale) for f in d]
    g = gcd(*ints)
    return tuple(v // g for v in ints)


def _is_finite(cartan: Sequence[Sequence[int]], d: Sequence[int]) -> bool:
    n = len(cartan)
    sym = sympy.Matrix(n, n, lambda i, j: d[i] * cartan[i][j])
    return bool(sym.is_positive_definite)


def _adapted_order(n: int, arrows: Iterable[tuple[int, int, int]]) -> list[int]:
    """Repeatedly remove the smallest-labelled sink; raise on a directed cycle."""
    out_deg = {v: 0 for v in range(1, n + 1)}
    sources_of = {v: [] for v in range(1, n + 1)}
    for s, t, _ in arrows:
        out_deg[s] += 1
        sources_of[t].append(s)
    remaining = set(range(1, n + 1))
    order = []
    while remaining:
        sinks = [v for v in remaining if out_deg[v] == 0]
        if not sinks:
            raise CartanError("quiver has an oriented cycle")
        v = min(sinks)
        order.append(v)
        remaining.remove(v)
        for s in sources_of[v]:
            out_deg[s] -= 1
    return order


def from_cartan(cartan: Sequence[Sequence[int]], arrows: Iterable[tuple[int, int]],
                name: str | None = None) -> CartanData:
    """Build CartanData from a Cartan matrix and an orientation of its graph.

    ``arrows`` lists ``(source, target)`` pairs, one per edge of the Dynkin
    graph, in the matrix's own labels.  Vertices are renumbered so that
    ``s_1 s_2 ... s_n`` is adapted.
    """
    n = len(cartan)
    cartan = [list(row) for row in cartan]
    if any(len(row) != n for row in cartan):
        raise CartanError("Cartan matrix must be square")
    d = _symmetrizer(cartan)
    arrows = list(arrows)
    edges = {frozenset((i, j)) for i in range(1, n + 1) for j in range(1, n + 1)
             if i != j and cartan[i - 1][j - 1] != 0}
    oriented = set()
    triples = []
    for s, t in arrows:
        if not (1 <= s <= n and 1 <= t <= n) or s == t:
            raise CartanError(f"bad arrow {s}->{t}")
        e = frozenset((s, t))
        if e not in edges:
            raise CartanError(f"arrow {s}->{t} is not an edge of the Dynkin graph")
        if e in oriented:
            raise CartanError(f"edge {s}-{t} oriented twice")
        oriented.add(e)
        mult = max(-cartan[s - 1][t - 1], -cartan[t - 1][s - 1])
        triples.append((s, t, mult))
    missing = edges - oriented
    if missing:
        raise CartanError(f"edges without orientation: {sorted(tuple(sorted(e)) for e in missing)}")
    order = _adapted_order(n, triples)
    new_of = {old: k + 1 for k, old in enumerate(order)}
    new_cartan = tuple(tuple(cartan[order[i] - 1][order[j] - 1] for j in range(n)) for i in range(n))
    new_d = tuple(d[order[i] - 1] for i in range(n))
    new_arrows = tuple(sorted((new_of[s], new_of[t], m) for s, t, m in triples))
    return CartanData(
        cartan=new_cartan,
        symmetrizer=new_d,
        arrows=new_arrows,
        labels=tuple(order),
        finite_type=_is_finite(new_cartan, new_d),
        name=name,
    )


def from_quiver(n: int, arrows: Iterable[tuple[int, int, int]], name: str | None = None) -> CartanData:
    """Simply-laced CartanData of a quiver given by ``(i, j, mult)`` arrows i -> j."""
    if n < 1:
        raise CartanError("rank must be positive")
    arrows = list(arrows)
    cartan = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    triples = []
    for arrow in arrows:
        s, t, m = arrow if len(arrow) == 3 else (*arrow, 1)
        if not (1 <= s <= n and 1 <= t <= n):
            raise CartanError(f"arrow {s}->{t} out of range")
        if s == t:
            raise CartanError("loops are not allowed")
        if m < 1:
            raise CartanError("arrow multiplicity must be positive")
        cartan[s - 1][t - 1] -= m
        cartan[t - 1][s - 1] -= m
        triples.append((s, t, m))
    pairs = {}
    for s, t, m in triples:
        key = frozenset((s, t))
        if key in pairs and pairs[key][0] != s:
            raise CartanError("quiver has an oriented cycle")
        pairs[key] = (s, t)
    order = _adapted_order(n, triples)
    d = tuple([1] * n)
    new_of = {old: k + 1 for k, old in enumerate(order)}
    new_cartan = tuple(tuple(cartan[order[i] - 1][order[j] - 1] for j in range(n)) for i in range(n))
    merged: dict[tuple[int, int], int] = {}
    for s, t, m in triples:
        key = (new_of[s], new_of[t])
        merged[key] = merged.get(key, 0) + m
    return CartanData(
        cartan=new_cartan,
        symmetrizer=d,
        arrows=tuple(sorted((s, t, m) for (s, t), m in merged.items())),
        labels=tuple(order),
        finite_type=_is_finite(new_cartan, d),
        name=name,
    )


def dynkin(label: str, orientation: Iterable[tuple[int, int]] | None = None) -> CartanData:
    """CartanData for a finite Dynkin type such as ``"A4"``, ``"D4"``, ``"G2"``.

    The default orientation points every edge from the larger to the smaller
    label (linear orientation for A_n, 1 <- 2 <- ... <- n).
    """
    letter, n = parse_type_label(label)
    edges = _dynkin_edges(letter, n)
    cartan = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j, aij, aji in edges:
        cartan[i - 1][j - 1] = aij
        cartan[j - 1][i - 1] = aji
    if orientation is None:
        orientation = [(j, i) for i, j, _, _ in edges]
    return from_cartan(cartan, orientation, name=f"{letter}{n}")


def build_cartan(spec) -> CartanData:
    """Dispatch on a type label, a ``(n, arrows)`` quiver pair, or CartanData."""
    if isinstance(spec, CartanData):
        return spec
    if isinstance(spec, str):
        return dynkin(spec)
    if isinstance(spec, dict):
        if "type" in spec:
            return dynkin(spec["type"], spec.get("orientation"))
        return from_quiver(spec["n"], spec.get("arrows", ()), spec.get("name"))
    n, arrows = spec
    return from_quiver(n, arrows)


def type_a_path(cd: CartanData) -> list:
    """Vertices of a type-A graph listed from one end to the other."""
    n = cd.rank
    nbrs = {v: [w for w in range(1, n + 1) if cd.adjacent(v, w)] for v in range(1, n + 1)}
    ends = [v for v in nbrs if len(nbrs[v]) <= 1]
    if not cd.simply_laced or len(cd.arrows) != n - 1 or not ends \
            or any(len(x) > 2 for x in nbrs.values()) or any(m != 1 for *_, m in cd.arrows):
        raise NotTypeAError(f"{cd!r} is not of type A")
    order, prev = [min(ends)], None
    while len(order) < n:
        nxt = [w for w in nbrs[order[-1]] if w != prev]
        if not nxt:
            raise NotTypeAError(f"{cd!r} is not connected")
        prev = order[-1]
        order.append(nxt[0])
    return order


def parse_quiver_file(text: str) -> CartanData:
    """Parse the line-based quiver format.

    ``n <rank>`` then ``arrow <i> <j> <mult>`` lines (i -> j), or a single
    ``type <label>`` line.  Blank lines and ``#`` comments are ignored.
    """
    n = None
    arrows = []
    label = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        key = parts[0].lower()
        try:
            if key == "n" and len(parts) == 2:
                n = int(parts[1])
            elif key == "arrow" and len(parts) in (3, 4):
                mult = int(parts[3]) if len(parts) == 4 else 1
                arrows.append((int(parts[1]), int(parts[2]), mult))
            elif key == "type" and len(parts) == 2:
                label = parts[1]
            else:
                raise CartanError(f"line {lineno}: cannot parse {raw!r}")
        except ValueError as exc:
            if isinstance(exc, CartanError):
                raise
            raise CartanError(f"line {lineno}: cannot parse {raw!r}") from exc
    if label is not None:
        if arrows:
            raise CartanError("a quiver file gives either 'type' or 'arrow' lines, not both")
        cd = dynkin(label)
        if n is not None and n != cd.rank:
            raise CartanError(f"type {label} has rank {cd.rank}, file says n {n}")
        return cd
    if n is None:
        raise CartanError("quiver file lacks an 'n <rank>' line")
    return from_quiver(n, arrows)


# ---------------------------------------------------------------------------
# group elements
# ---------------------------------------------------------------------------

def _identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _simple_reflection_matrix(cartan: Matrix, i: int) -> Matrix:
    # column c is the image of alpha_c: alpha_c - a_ic alpha_i
    n = len(cartan)
    rows = [list(r) for r in _identity(n)]
    for c in range(n):
        rows[i][c] -= cartan[i][c]
    return tuple(tuple(r) for r in rows)


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(a[i], cols[j])) for j in range(n)) for i in range(n))


def _matvec(a: Matrix, v: Sequence[int]) -> Root:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


@dataclass(frozen=True)
class GroupElement:
    """A Weyl group element as its integer matrix on the root lattice.

    The action is faithful, so equality and hashing go through the matrix.
    """

    matrix: Matrix

    @classmethod
    def identity(cls, n: int) -> GroupElement:
        return cls(_identity(n))

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def __mul__(self, other: GroupElement) -> GroupElement:
        return GroupElement(_matmul(self.matrix, other.matrix))

    def __call__(self, root: Sequence[int]) -> Root:
        return _matvec(self.matrix, root)

    def is_identity(self) -> bool:
        return self.matrix == _identity(len(self.matrix))

    def column(self, i: int) -> Root:
        """Image of alpha_i."""
        return tuple(row[i - 1] for row in self.matrix)


def simple_reflection(cd: CartanData, i: int) -> GroupElement:
    if not 1 <= i <= cd.rank:
        raise IndexError(f"generator index {i} outside 1..{cd.rank}")
    return GroupElement(cd._simple[i - 1])


def apply_simple(cd: CartanData, i: int, root: Sequence[int]) -> Root:
    """s_i(root) without building a matrix."""
    row = cd.cartan[i - 1]
    coeff = sum(a * x for a, x in zip(row, root))
    if coeff == 0:
        return tuple(root)
    out = list(root)
    out[i - 1] -= coeff
    return tuple(out)


def word_to_element(cd: CartanData, word: Iterable[int]) -> GroupElement:
    m = _identity(cd.rank)
    for i in word:
        if not 1 <= i <= cd.rank:
            raise IndexError(f"letter {i} outside 1..{cd.rank}")
        m = _matmul(m, cd._simple[i - 1])
    return GroupElement(m)


def apply_word(cd: CartanData, word: Sequence[int], root: Sequence[int]) -> Root:
    """s_{w_1} s_{w_2} ... s_{w_k} (root): the rightmost letter acts first."""
    v = tuple(root)
    for i in reversed(word):
        v = apply_simple(cd, i, v)
    return v


def coxeter_element(cd: CartanData) -> GroupElement:
    return word_to_element(cd, range(1, cd.rank + 1))


def reduced_word(cd: CartanData, w: GroupElement) -> Word:
    """A reduced word for ``w`` found by stripping right descents."""
    letters = []
    m = w.matrix
    n = cd.rank
    while True:
        for i in range(n):
            if any(m[r][i] < 0 for r in range(n)):
                m = _matmul(m, cd._simple[i])
                letters.append(i + 1)
                break
        else:
            break
    if m != _identity(n):
        raise ValueError("matrix is not an element of the Weyl group")
    return tuple(reversed(letters))


def length(cd: CartanData, w: GroupElement) -> int:
    return len(reduced_word(cd, w))


def is_reduced(cd: CartanData, word: Sequence[int]) -> bool:
    return length(cd, word_to_element(cd, word)) == len(word)


def inverse(cd: CartanData, w: GroupElement) -> GroupElement:
    return word_to_element(cd, reversed(reduced_word(cd, w)))


def longest_element(cd: CartanData) -> GroupElement:
    """w_0, grown by right ascents until every simple root goes negative."""
    if not cd.finite_type:
        raise NotFiniteTypeError(f"{cd!r} has no longest element")
    m = _identity(cd.rank)
    n = cd.rank
    while True:
        for i in range(n):
            if all(m[r][i] >= 0 for r in range(n)):
                m = _matmul(m, cd._simple[i])
                break
        else:
            return GroupElement(m)


# ---------------------------------------------------------------------------
# bilinear form and reflections in arbitrary real roots
# ---------------------------------------------------------------------------

def _pairing2(cd: CartanData, beta: Sequence[int], x: Sequence[int]) -> int:
    """2 B(beta, x) in units where B(alpha_i, alpha_j) = d_i a_ij / 2."""
    n = cd.rank
    total = 0
    for i in range(n):
        if beta[i]:
            ax = sum(cd.cartan[i][j] * x[j] for j in range(n))
            total += beta[i] * cd.symmetrizer[i] * ax
    return total


def bilinear(cd: CartanData, x: Sequence[int], y: Sequence[int]) -> Fraction:
    """B(x, y) with B(alpha_i, alpha_i) = d_i."""
    return Fraction(_pairing2(cd, x, y), 2)


def coroot_pairing(cd: CartanData, beta: Sequence[int], x: Sequence[int]) -> int:
    """<x, beta^vee> = 2 B(beta, x) / B(beta, beta); must be an integer."""
    bb2 = _pairing2(cd, beta, beta)
    if bb2 <= 0:
        raise _not_real(beta)
    q, r = divmod(2 * _pairing2(cd, beta, x), bb2)
    if r:
        raise _not_real(beta)
    return q


def _not_real(beta):
    return NotRealRootError(f"{tuple(beta)} is not a real root")


def reflect_in_root(cd: CartanData, beta: Sequence[int], x: Sequence[int]) -> Root:
    """s_beta(x) = x - <x, beta^vee> beta for a real root beta."""
    c = coroot_pairing(cd, beta, x)
    if c == 0:
        return tuple(x)
    return tuple(xi - c * bi for xi, bi in zip(x, beta))


def reflection(cd: CartanData, beta: Sequence[int]) -> GroupElement:
    """The matrix of s_beta."""
    n = cd.rank
    cols = [reflect_in_root(cd, beta, simple_root(n, i + 1)) for i in range(n)]
    return GroupElement(tuple(tuple(cols[c][r] for c in range(n)) for r in range(n)))


def conjugate_reflection(w: GroupElement, beta: Sequence[int]) -> Root:
    """|w(beta)|, the positive root of the reflection w s_beta w^-1."""
    return abs_root(w(beta))


def real_root_descent(cd: CartanData, beta: Sequence[int], max_steps: int | None = None):
    """Reduce a positive vector by height-lowering simple reflections.

    Returns ``(i, word)`` with ``apply_word(cd, word, alpha_i) == beta`` when beta is a
    positive real root, or ``None`` otherwise.
    """
    v = tuple(beta)
    if not is_positive(v):
        return None
    n = cd.rank
    word = []
    steps = 0
    while True:
        if sum(v) == 1:
            return v.index(1) + 1, tuple(word)
        for i in range(n):
            c = sum(cd.cartan[i][j] * v[j] for j in range(n))
            if c > 0 and v[i] > 0:
                v = apply_simple(cd, i + 1, v)
                word.append(i + 1)
                break
        else:
            return None
        if not is_positive(v):
            return None
        steps += 1
        if max_steps is not None and steps > max_steps:
            return None


# ---------------------------------------------------------------------------
# finite-type root data
# ---------------------------------------------------------------------------

def positive_roots(cd: CartanData) -> tuple:
    """All positive roots, ordered by height then coordinates."""
    if not cd.finite_type:
        raise NotFiniteTypeError(f"{cd!r} has infinitely many roots")
    return _positive_roots(cd)


_ROOT_CACHE: dict = {}


def _positive_roots(cd: CartanData) -> tuple:
    key = (cd.cartan,)
    if key in _ROOT_CACHE:
        return _ROOT_CACHE[key]
    n = cd.rank
    seen = {simple_root(n, i) for i in range(1, n + 1)}
    queue = deque(seen)
    while queue:
        r = queue.popleft()
        for i in range(1, n + 1):
            s = apply_simple(cd, i, r)
            if is_positive(s) and s not in seen:
                seen.add(s)
                queue.append(s)
    roots = tuple(sorted(seen, key=lambda r: (sum(r), tuple(-c for c in r))))
    _ROOT_CACHE[key] = roots
    return roots


def projective_roots(cd: CartanData) -> tuple:
    """p_i = s_1 ... s_{i-1}(alpha_i), i = 1..n."""
    n = cd.rank
    return tuple(apply_word(cd, range(1, i), simple_root(n, i)) for i in range(1, n + 1))


def injective_roots(cd: CartanData) -> tuple:
    """q_i = s_n ... s_{i+1}(alpha_i); the positive roots sent negative by C."""
    n = cd.rank
    return tuple(apply_word(cd, range(n, i, -1), simple_root(n, i)) for i in range(1, n + 1))


def euler_form(cd: CartanData, x: Sequence[int], y: Sequence[int]) -> int:
    """<x, y> = sum x_i y_i - sum over arrows i -> j of m x_i y_j (simply-laced quivers)."""
    total = sum(a * b for a, b in zip(x, y))
    for s, t, m in cd.arrows:
        total -= m * x[s - 1] * y[t - 1]
    return total


def coxeter_exponent_m(cd: CartanData, i: int, j: int) -> int | None:
    """m_ij read from a_ij a_ji; None means infinity."""
    if i == j:
        return 1
    p = cd.a(i, j) * cd.a(j, i)
    return {0: 2, 1: 3, 2: 4, 3: 6}.get(p)
