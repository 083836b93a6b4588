"""Wiring diagrams for type A deleted words, plus DOT exports.

A wiring diagram has n+1 horizontal strands and one column per position of
the word for w_1.  The letter at column t swaps the strands in rows i
and i+1, where i is the letter's place along the type-A path (rows are
counted from the bottom).  Two drawing styles:

``deleted``  deleted letters are tangencies, so the strands realise the
             deleted word and the left margin reads w_0.
``full``     every letter is a crossing, so the left margin reads w_1.

Circles mark the projective positions of a cluster.  Tests compare the
normalized geometry listing, not the SVG bytes.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .adapted import (
    AdaptedFrame,
    ar_quiver_from_word,
    is_reduced_w0,
    projective_positions,
    selection,
)
from .core import type_a_path
from .mutation import ExchangeGraph

STYLES = ("full", "deleted")
CROSSING, TANGENCY, CIRCLE = "crossing", "tangency", "circle"


@dataclass(frozen=True)
class WiringDiagram:
    strands: int
    columns: int
    marks: tuple            # (column, level, kind) for every letter, in column order
    circles: tuple          # (column, level)
    left_labels: tuple      # bottom to top
    right_labels: tuple
    style: str
    selection: tuple

    @property
    def crossings(self) -> tuple:
        return tuple(m for m in self.marks if m[2] == CROSSING)

    def word_read(self) -> tuple:
        """Levels of the crossings read left to right."""
        return tuple(level for _, level, _ in self.crossings)

    def strand_pairs_crossed(self) -> dict:
        """How many times each pair of strands (by right label) crosses."""
        rows = list(self.right_labels)
        counts: dict = {}
        for _, level, kind in sorted(self.marks, reverse=True):
            if kind != CROSSING:
                continue
            a, b = rows[level - 1], rows[level]
            key = (min(a, b), max(a, b))
            counts[key] = counts.get(key, 0) + 1
            rows[level - 1], rows[level] = b, a
        return counts

    def geometry(self) -> list:
        out = [(c, lvl, kind) for c, lvl, kind in self.marks]
        out += [(c, lvl, CIRCLE) for c, lvl in self.circles]
        return sorted(out)

    def geometry_text(self) -> str:
        lines = ["column\tlevel\tkind"]
        lines += [f"{c}\t{lvl}\t{kind}" for c, lvl, kind in self.geometry()]
        lines.append("margin\tleft\t" + ",".join(map(str, self.left_labels)))
        lines.append("margin\tright\t" + ",".join(map(str, self.right_labels)))
        return "\n".join(lines) + "\n"


def _levels(frame: AdaptedFrame) -> dict:
    """letter -> level, counting along the type-A path from its smaller end."""
    return {v: k for k, v in enumerate(type_a_path(frame.cd), 1)}


def wiring_diagram(frame: AdaptedFrame, sel: Sequence[int], style: str = "deleted") -> WiringDiagram:
    level_of = _levels(frame)
    if style not in STYLES:
        raise ValueError(f"style must be one of {STYLES}")
    sel = selection(frame, sel)
    deleted = set(sel)
    marks = []
    for t, j in enumerate(frame.j_sequence, 1):
        kind = TANGENCY if (t in deleted and style == "deleted") else CROSSING
        marks.append((t, level_of[j], kind))

    circles = ()
    if is_reduced_w0(frame, sel):
        size = frame.size
        cols = sorted((p - 1) % size + 1 for p in projective_positions(frame, sel).values())
        circles = tuple((c, level_of[frame.j_sequence[c - 1]]) for c in cols)

    strands = frame.n + 1
    right = tuple(range(1, strands + 1))
    rows = list(right)
    for _, level, kind in reversed(marks):
        if kind == CROSSING:
            rows[level - 1], rows[level] = rows[level], rows[level - 1]
    return WiringDiagram(strands, frame.size, tuple(marks), circles, tuple(rows), right, style, sel)


# ---------------------------------------------------------------------------
# drawing
# ---------------------------------------------------------------------------

def _strand_paths(diagram: WiringDiagram) -> dict:
    """label -> (vertices, codes) of a cubic-Bezier path, traced left to right."""
    from matplotlib.path import Path as MplPath

    rows = list(diagram.left_labels)
    paths = {lab: ([(0.0, r + 0.5)], [MplPath.MOVETO]) for r, lab in enumerate(rows)}
    by_col = {c: (lvl, kind) for c, lvl, kind in diagram.marks}
    for col in range(1, diagram.columns + 1):
        x0, x1 = col - 0.5, col + 0.5
        level, kind = by_col[col]
        new_rows = list(rows)
        if kind == CROSSING:
            new_rows[level - 1], new_rows[level] = rows[level], rows[level - 1]
        for r, lab in enumerate(rows):
            verts, codes = paths[lab]
            y0 = r + 0.5
            verts.append((x0, y0))
            codes.append(MplPath.LINETO)
            r1 = new_rows.index(lab)
            y1 = r1 + 0.5
            if kind == TANGENCY and r in (level - 1, level):
                # bow towards the shared level and back
                verts += [(col - 0.1, level), (col + 0.1, level), (x1, y1)]
            else:
                verts += [(col, y0), (col, y1), (x1, y1)]
            codes += [MplPath.CURVE4] * 3
        rows = new_rows
    for r, lab in enumerate(rows):
        verts, codes = paths[lab]
        verts.append((diagram.columns + 1.0, r + 0.5))
        codes.append(MplPath.LINETO)
    return paths


def draw_wiring(diagram: WiringDiagram, out: str | Path) -> Path:
    """Write the diagram to ``out``; the suffix (.svg, .png, .pdf) picks the format."""
    import matplotlib

    matplotlib.use("Agg")
    matplotlib.rcParams["svg.hashsalt"] = "coxclust"
    import matplotlib.pyplot as plt
    from matplotlib.patches import Circle, PathPatch
    from matplotlib.path import Path as MplPath

    out = Path(out)
    width = 0.6 * (diagram.columns + 3)
    fig, ax = plt.subplots(figsize=(width, 0.6 * (diagram.strands + 1)))
    for verts, codes in _strand_paths(diagram).values():
        ax.add_patch(PathPatch(MplPath(verts, codes), fill=False, lw=1.6, color="black"))
    for col, level in diagram.circles:
        ax.add_patch(Circle((col, level), 0.3, fill=False, lw=1.2, color="tab:red"))
    for r, lab in enumerate(diagram.left_labels):
        ax.text(-0.5, r + 0.5, str(lab), ha="right", va="center")
    for r, lab in enumerate(diagram.right_labels):
        ax.text(diagram.columns + 1.5, r + 0.5, str(lab), ha="left", va="center")
    ax.set_xlim(-1.2, diagram.columns + 2.2)
    ax.set_ylim(-0.3, diagram.strands + 0.3)
    ax.set_aspect("equal")
    ax.axis("off")
    out.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(out, bbox_inches="tight", metadata={"Date": None} if out.suffix == ".svg" else None)
    plt.close(fig)
    return out


# ---------------------------------------------------------------------------
# DOT
# ---------------------------------------------------------------------------

def ar_quiver_dot(frame: AdaptedFrame, sel: Sequence[int]) -> str:
    """AR quiver read off the deleted word; wrap arrows are dashed."""
    sel = selection(frame, sel)
    q = ar_quiver_from_word(frame, sel)
    wraps = set(q.wrap_arrows)
    lines = ["digraph ar_quiver {", "  rankdir=LR;"]
    for level in sorted(set(q.levels.values())):
        nodes = " ".join(f'"{v}";' for v in q.level(level))
        lines.append(f"  {{ rank=same; {nodes} }}  // level {level}")
    for v in q.vertices:
        lines.append(f'  "{v}" [label="{v}", level={q.levels[v]}];')
    for a, b in q.arrows:
        style = " [style=dashed]" if (a, b) in wraps else ""
        lines.append(f'  "{a}" -> "{b}"{style};')
    lines.append("}")
    return "\n".join(lines) + "\n"


def exchange_graph_dot(graph: ExchangeGraph) -> str:
    def name(sel):
        return "(" + ",".join(map(str, sel)) + ")"

    lines = ["graph exchange {"]
    for v in graph.vertices:
        lines.append(f'  "{name(v)}";')
    for a, b in graph.edges:
        lines.append(f'  "{name(graph.vertices[a])}" -- "{name(graph.vertices[b])}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
