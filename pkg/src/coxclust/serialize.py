"""JSON payloads for the CLI.  Keys are sorted, so equal inputs give equal bytes."""

from __future__ import annotations

import json
from typing import Any

from .adapted import AdaptedFrame, rho
from .braid import OrbitReport
from .core import CartanData, positive_roots
from .mutation import ExchangeGraph, MutationStep
from .reptheory import HomTable
from .schur import PrefixVerdict


def dumps(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _lists(rows) -> list:
    return [list(r) for r in rows]


def roots_payload(cd: CartanData) -> dict:
    roots = positive_roots(cd)
    return {"type": cd.name, "rank": cd.rank, "count": len(roots), "positive_roots": _lists(roots)}


def word_payload(frame: AdaptedFrame) -> dict:
    return {
        "type": frame.cd.name,
        "rank": frame.n,
        "nu": frame.nu,
        "j_sequence": list(frame.j_sequence),
        "w0_word": list(frame.w0_word),
        "alpha_sequence": _lists(frame.alpha_sequence),
        "rho": list(rho(frame.cd)),
    }


def selection_payload(sel, conditions: dict) -> dict:
    return {"positions": list(sel), **conditions}


def step_payload(step: MutationStep) -> dict:
    return {
        "source": list(step.source),
        "k": step.k,
        "removed": step.removed,
        "inserted": step.inserted,
        "scan_side": step.scan_side,
        "target": list(step.target),
    }


def exchange_graph_payload(graph: ExchangeGraph) -> dict:
    return {
        "base": list(graph.base),
        "count": len(graph.vertices),
        "clusters": _lists(graph.vertices),
        "edges": _lists(graph.edges),
    }


def orbit_payload(report: OrbitReport) -> dict:
    return {
        "base": _lists(report.base.roots),
        "orbit_size": report.orbit_size,
        "factorization_count": report.factorization_count,
        "transitive": report.transitive,
        "truncated": report.truncated,
        "depth": report.depth,
    }


def verdict_payload(verdict: PrefixVerdict) -> dict:
    return {
        "root": list(verdict.root),
        "status": verdict.status,
        "witness_roots": None if verdict.witness is None else _lists(verdict.witness.roots),
        "depth_used": verdict.depth_used,
        "exhaustive": verdict.exhaustive,
    }


def hom_table_payload(table: HomTable) -> dict:
    return {
        "dims": [list(m.dim) for m in table.quiver.indecs],
        "hom": _lists(table.matrix),
        "ext": _lists(table.ext_matrix()),
    }
