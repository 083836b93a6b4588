"""Command line entry point: ``coxclust <command> --type A4 ...``.

Exit status is 0 on success, 1 when the input is mathematically invalid
(not a cluster, not a real root, ...) and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import serialize
from .adapted import condition3, frame_for, is_reduced_w0, selection
from .braid import hurwitz_orbit, standard_factorization
from .core import build_cartan, height, parse_quiver_file, positive_roots
from .errors import CoxclustError
from .mutation import algebraic_mutate, exchange_graph
from .render import STYLES, ar_quiver_dot, draw_wiring, exchange_graph_dot, wiring_diagram
from .reptheory import exceptional_condition, is_cluster_tilting
from .schur import prefix_test


def _int_list(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _fmt(v) -> str:
    return "(" + ",".join(map(str, v)) + ")"


def _cartan(args):
    if args.quiver:
        return parse_quiver_file(Path(args.quiver).read_text())
    return build_cartan(args.type)


def _conditions(frame, sel) -> dict:
    out = {"reduced": is_reduced_w0(frame, sel), "condition3": condition3(frame, sel)}
    if frame.cd.simply_laced:
        out["cluster_tilting"] = is_cluster_tilting(frame, sel)
        out["exceptional"] = exceptional_condition(frame, sel)
    else:
        out["cluster_tilting"] = out["exceptional"] = None
    return out


def _emit(args, payload: dict, lines) -> None:
    if args.json:
        sys.stdout.write(serialize.dumps(payload))
    else:
        for line in lines:
            print(line)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_roots(args) -> int:
    cd = _cartan(args)
    roots = positive_roots(cd)
    lines = ["index\troot\theight"]
    lines += [f"{i}\t{_fmt(r)}\t{height(r)}" for i, r in enumerate(roots, 1)]
    _emit(args, serialize.roots_payload(cd), lines)
    return 0


def cmd_word(args) -> int:
    frame = frame_for(_cartan(args))
    lines = ["t\tletter\talpha"]
    lines += [f"{t}\t{j}\t{_fmt(a)}"
              for t, (j, a) in enumerate(zip(frame.j_sequence, frame.alpha_sequence), 1)]
    _emit(args, serialize.word_payload(frame), lines)
    return 0


def cmd_select(args) -> int:
    frame = frame_for(_cartan(args))
    if args.sample:
        rng = random.Random(args.seed)
        positions = range(1, frame.size + 1)
        rows = []
        for _ in range(args.sample):
            sel = tuple(sorted(rng.sample(positions, frame.n)))
            conds = _conditions(frame, sel)
            known = {v for v in conds.values() if v is not None}
            rows.append((sel, conds, len(known) == 1))
        payload = {
            "seed": args.seed,
            "samples": len(rows),
            "clusters": sum(c["reduced"] for _, c, _ in rows),
            "all_agree": all(ok for *_, ok in rows),
        }
        lines = ["positions\treduced\tcondition3\tcluster_tilting\texceptional"]
        lines += [f"{_fmt(s)}\t{c['reduced']}\t{c['condition3']}\t{c['cluster_tilting']}\t{c['exceptional']}"
                  for s, c, _ in rows]
        _emit(args, payload, lines)
        return 0
    if args.positions is None:
        raise SystemExit(_usage(args, "select needs --positions or --sample"))
    sel = selection(frame, args.positions)
    conds = _conditions(frame, sel)
    _emit(args, serialize.selection_payload(sel, conds), [f"{k}\t{v}" for k, v in sorted(conds.items())])
    return 0


def cmd_clusters(args) -> int:
    frame = frame_for(_cartan(args))
    graph = exchange_graph(frame)
    if args.dot:
        sys.stdout.write(exchange_graph_dot(graph))
        return 0
    if args.count:
        _emit(args, {"count": len(graph.vertices)}, [str(len(graph.vertices))])
        return 0
    _emit(args, serialize.exchange_graph_payload(graph), [_fmt(v) for v in graph.vertices])
    return 0


def cmd_mutate(args) -> int:
    frame = frame_for(_cartan(args))
    step = algebraic_mutate(frame, args.positions, args.k)
    payload = serialize.step_payload(step)
    _emit(args, payload, [f"{k}\t{v}" for k, v in sorted(payload.items())])
    return 0


def cmd_orbit(args) -> int:
    cd = _cartan(args)
    report = hurwitz_orbit(standard_factorization(cd), depth_limit=args.depth)
    payload = serialize.orbit_payload(report)
    _emit(args, payload, [f"{k}\t{v}" for k, v in sorted(payload.items())])
    return 0


def cmd_schur(args) -> int:
    cd = _cartan(args)
    verdict = prefix_test(cd, args.root, depth=args.depth)
    payload = serialize.verdict_payload(verdict)
    _emit(args, payload, [f"{k}\t{v}" for k, v in sorted(payload.items())])
    return 0


def cmd_render(args) -> int:
    frame = frame_for(_cartan(args))
    if args.what == "exchange-graph":
        text = exchange_graph_dot(exchange_graph(frame))
    else:
        if args.positions is None:
            raise SystemExit(_usage(args, f"render {args.what} needs --positions"))
        sel = selection(frame, args.positions)
        if args.what == "ar-quiver":
            text = ar_quiver_dot(frame, sel)
        else:
            diagram = wiring_diagram(frame, sel, args.style)
            text = diagram.geometry_text()
            if args.out:
                out = draw_wiring(diagram, args.out)
                Path(out).with_suffix(".tsv").write_text(text)
                print(f"wrote {out}", file=sys.stderr)
                print(f"wrote {Path(out).with_suffix('.tsv')}", file=sys.stderr)
            sys.stdout.write(text)
            return 0
    if args.out:
        Path(args.out).parent.mkdir(parents=True, exist_ok=True)
        Path(args.out).write_text(text)
        print(f"wrote {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

_PARSER: argparse.ArgumentParser | None = None


def _usage(args, message: str) -> int:
    _PARSER.print_usage(sys.stderr)
    print(f"coxclust {args.command}: error: {message}", file=sys.stderr)
    return 2


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--type", default="A4", help="Dynkin label such as A4, D4, B3, G2 (default A4)")
    src.add_argument("--quiver", metavar="FILE", help="quiver file ('n', 'arrow i j [m]' or 'type X' lines)")
    common.add_argument("--json", action="store_true", help="emit JSON instead of tab-separated text")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled runs (default 0)")
    common.add_argument("--depth", type=int, default=None, help="Hurwitz search depth")

    parser = argparse.ArgumentParser(prog="coxclust", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("roots", parents=[common], help="list positive roots").set_defaults(func=cmd_roots)
    sub.add_parser("word", parents=[common], help="adapted word for w_1 = C w_0").set_defaults(func=cmd_word)

    p = sub.add_parser("select", parents=[common], help="test the four cluster conditions")
    p.add_argument("--positions", type=_int_list)
    p.add_argument("--sample", type=int, default=0, help="test N random selections instead")
    p.set_defaults(func=cmd_select)

    p = sub.add_parser("clusters", parents=[common], help="enumerate clusters via mutation")
    p.add_argument("--count", action="store_true")
    p.add_argument("--dot", action="store_true", help="print the exchange graph as DOT")
    p.set_defaults(func=cmd_clusters)

    p = sub.add_parser("mutate", parents=[common], help="mutate a cluster in one direction")
    p.add_argument("--positions", type=_int_list, required=True)
    p.add_argument("--k", type=int, required=True, help="index into the sorted positions, 1-based")
    p.set_defaults(func=cmd_mutate)

    sub.add_parser("orbit", parents=[common], help="Hurwitz orbit of (alpha_1, ..., alpha_n)") \
        .set_defaults(func=cmd_orbit)

    p = sub.add_parser("schur", parents=[common], help="is s_beta a prefix of C")
    p.add_argument("--root", type=_int_list, required=True)
    p.set_defaults(func=cmd_schur)

    p = sub.add_parser("render", parents=[common], help="wiring diagram, AR quiver or exchange graph")
    p.add_argument("what", choices=("wiring", "ar-quiver", "exchange-graph"))
    p.add_argument("--positions", type=_int_list)
    p.add_argument("--out", help="output file; .svg/.png/.pdf for wiring, DOT text otherwise")
    p.add_argument("--style", choices=STYLES, default="deleted")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    global _PARSER
    _PARSER = build_parser()
    try:
        args = _PARSER.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except CoxclustError as exc:
        print(f"coxclust {args.command}: {exc}", file=sys.stderr)
        return 1
    except (OSError, IndexError, ValueError) as exc:
        print(f"coxclust {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
