"""Command line interface.

Subcommands:

    verify-k4   check the K4 extremal values against search (m <= 5) and the
                extremal constructions (m >= 6)
    search      exhaustive or sampled extremal search over full covers
    count       count proper colorings of a cover, from a file or a named
                construction, with one or all applicable counters
    signed      proper colorings of the all-negative complete signed graph
    bounds      the main-term band and fold threshold for K_n, optionally
                checked against the parity-appropriate construction

Output goes to stdout as a JSON outcome object by default; --format table
and --format csv render the payload for humans and pipelines.  --plot
renders a matplotlib figure to the given file where the command has one.
Exit codes: 0 ok, 2 invalid input, 3 overflow, 4 resource limit.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from .constructions import (
    all_negative_signing,
    even_pairing_cover,
    odd_complete_cover,
    odd_k4_cover,
)
from .counting import (
    ColorSetSpec,
    DEFAULT_BRUTE_BUDGET,
    count_brute,
    count_inclusion_exclusion,
    count_k4_identity,
    count_signed,
    subset_limit,
)
from .covers import FullCover, canonical_cover, cover_to_json, cycle_stats, is_cover_triangle_free, load_cover
from .errors import DpcoverError, InvalidInputError
from .formulas import dual_dp_bounds, dual_dp_k4
from .graphs import Graph, SignedGraph, catalog_subgraphs, complete_graph, graph_to_json, resolve_graph
from .search import DEFAULT_SEARCH_BUDGET, SearchSpec, search_exhaustive, search_sampled

_COUNTER_FLAGS = {
    "auto": "auto",
    "brute": "brute",
    "inclusion-exclusion": "inclusion_exclusion",
    "k4-identity": "k4_identity",
}


def _plain_graph(spec: str) -> Graph:
    g = resolve_graph(spec)
    return g.graph if isinstance(g, SignedGraph) else g


def _is_k4(g: Graph) -> bool:
    return g.n == 4 and g.is_complete()


def _count_with(counter: str, cover: FullCover) -> int:
    if counter == "brute":
        return count_brute(cover).value
    if counter == "inclusion_exclusion":
        return count_inclusion_exclusion(cover).value
    if counter == "k4_identity":
        if not _is_k4(cover.graph):
            raise InvalidInputError("the k4_identity counter is only valid for K4")
        return count_k4_identity(cycle_stats(cover, catalog_subgraphs(cover.graph)), cover.m).value
    raise InvalidInputError(f"unknown counter {counter!r}")


# ---------------------------------------------------------------------------
# handlers: return (payload, params)
# ---------------------------------------------------------------------------

def cmd_verify_k4(args):
    if args.m_max < 2:
        raise InvalidInputError(f"--m-max must be >= 2, got {args.m_max}")
    k4 = complete_graph(4)
    rows = []
    for m in range(2, args.m_max + 1):
        expected = dual_dp_k4(m)
        if m <= 5:
            result = search_exhaustive(
                SearchSpec(k4, m, mode="max", budget=args.budget, threads=args.threads)
            )
            value, method = result.max_value, "search"
        else:
            cover = even_pairing_cover(4, m) if m % 2 == 0 else odd_k4_cover(m)
            value, method = count_inclusion_exclusion(cover).value, "construction"
        rows.append(
            {"m": m, "value": value, "expected": expected, "method": method, "ok": value == expected}
        )
    payload = {"m_max": args.m_max, "rows": rows, "all_ok": all(r["ok"] for r in rows)}
    if args.plot:
        from .report import save_verification_plot

        payload["plot"] = save_verification_plot(rows, args.plot)
    return payload, {"m_max": args.m_max, "budget": args.budget, "threads": args.threads}


def cmd_search(args):
    g = _plain_graph(args.graph)
    root = args.root - 1
    spec = SearchSpec(
        graph=g,
        m=args.m,
        mode=args.mode,
        normalization=args.normalize,
        root=root,
        reduction=args.reduce,
        counter=_COUNTER_FLAGS[args.counter],
        budget=args.budget,
        threads=args.threads,
        seed=args.seed,
        histogram=args.histogram,
    )
    if args.sampled is not None:
        if args.seed is None:
            raise InvalidInputError("sampled search requires an explicit --seed")
        result = search_sampled(spec, args.sampled)
    else:
        result = search_exhaustive(spec)

    payload = {
        "graph": graph_to_json(g),
        "m": args.m,
        "mode": args.mode,
        "normalization": args.normalize,
        "root": args.root,
        "reduction": args.reduce,
        "counter": args.counter,
        "max": result.max_value,
        "min": result.min_value,
        "argmax_cover": cover_to_json(result.argmax_cover) if result.argmax_cover else None,
        "argmin_cover": cover_to_json(result.argmin_cover) if result.argmin_cover else None,
        "evaluated": result.evaluated,
        "space_size": result.space_size,
    }
    if args.sampled is not None:
        payload["sampled"] = args.sampled
        payload["seed"] = args.seed
    if args.histogram:
        payload["histogram"] = {str(k): v for k, v in (result.histogram or {}).items()}
    if args.plot:
        if not args.histogram:
            raise InvalidInputError("--plot for search needs --histogram data")
        from .report import save_histogram_plot

        title = f"coloring counts over {result.evaluated} covers ({args.graph}, m={args.m})"
        payload["plot"] = save_histogram_plot(result.histogram, args.plot, title)
    params = {
        "graph": args.graph,
        "m": args.m,
        "mode": args.mode,
        "normalize": args.normalize,
        "root": args.root,
        "reduce": args.reduce,
        "counter": args.counter,
        "budget": args.budget,
        "threads": args.threads,
        "sampled": args.sampled,
        "seed": args.seed,
    }
    return payload, params


def _cover_from_args(args):
    if (args.cover is None) == (args.construct is None):
        raise InvalidInputError("provide exactly one of --cover or --construct")
    if args.cover is not None:
        if args.graph is None:
            raise InvalidInputError("--cover needs --graph for the base graph")
        g = _plain_graph(args.graph)
        return load_cover(g, args.cover), f"file:{args.cover}"
    name = args.construct
    if name == "canonical":
        if args.graph is None or args.m is None:
            raise InvalidInputError("--construct canonical needs --graph and --m")
        return canonical_cover(_plain_graph(args.graph), args.m), name
    if name == "even-pairing":
        if args.n is None or args.m is None:
            raise InvalidInputError("--construct even-pairing needs --n and --m")
        return even_pairing_cover(args.n, args.m), name
    if name == "odd-k4":
        if args.m is None:
            raise InvalidInputError("--construct odd-k4 needs --m")
        return odd_k4_cover(args.m), name
    if name == "odd-kn":
        if args.n is None or args.m is None:
            raise InvalidInputError("--construct odd-kn needs --n and --m")
        return odd_complete_cover(args.n, args.m), name
    raise InvalidInputError(f"unknown construction {name!r}")


def cmd_count(args):
    cover, source = _cover_from_args(args)
    g = cover.graph
    if args.all:
        counters = []
        if cover.m**g.n <= DEFAULT_BRUTE_BUDGET:
            counters.append("brute")
        if g.t <= subset_limit():
            counters.append("inclusion_exclusion")
        if _is_k4(g):
            counters.append("k4_identity")
        if not counters:
            raise InvalidInputError("no counter applicable at this size")
    else:
        counter = _COUNTER_FLAGS[args.counter]
        if counter == "auto":
            counter = "k4_identity" if _is_k4(g) else "inclusion_exclusion"
        counters = [counter]

    counts = {name: _count_with(name, cover) for name in counters}
    agree = len(set(counts.values())) == 1
    if args.all and not agree:
        raise DpcoverError(f"counters disagree: {counts}")
    payload = {
        "graph": graph_to_json(g),
        "m": cover.m,
        "source": source,
        "counts": counts,
        "value": counts[counters[0]],
        "agree": agree,
    }
    params = {
        "graph": args.graph,
        "cover": args.cover,
        "construct": args.construct,
        "n": args.n,
        "m": args.m,
        "counter": args.counter,
        "all": args.all,
    }
    return payload, params


def cmd_signed(args):
    if args.n < 1:
        raise InvalidInputError(f"--n must be >= 1, got {args.n}")
    min_lam = 1 if args.n == 1 else 2
    if args.lam < min_lam:
        raise InvalidInputError(f"--lambda must be >= {min_lam} for n={args.n}, got {args.lam}")
    sg = all_negative_signing(args.n)
    spec = ColorSetSpec.for_size(args.lam)
    count = count_signed(sg, spec, budget=args.budget).value
    payload = {
        "n": args.n,
        "lambda": args.lam,
        "colors": list(spec.colors),
        "count": count,
    }
    if args.compare_dual:
        if args.n != 4 or args.lam % 2:
            raise InvalidInputError("--compare-dual applies to n=4 with an even --lambda")
        payload["dual_value"] = dual_dp_k4(args.lam)
        payload["matches_dual"] = payload["dual_value"] == count
    params = {"n": args.n, "lambda": args.lam, "compare_dual": args.compare_dual}
    return payload, params


def cmd_bounds(args):
    pair = dual_dp_bounds(args.n, args.m)
    payload = {
        "n": args.n,
        "m": args.m,
        "threshold": pair.threshold,
        "threshold_cleared": args.m > pair.threshold,
        "main_term": pair.main_term,
        "lower": pair.lower,
        "upper": pair.upper,
    }
    if args.check_construction:
        if args.m % 2 == 0:
            cover, name = even_pairing_cover(args.n, args.m), "even-pairing"
        else:
            cover, name = odd_complete_cover(args.n, args.m), "odd-kn"
        value = count_inclusion_exclusion(cover).value
        payload["construction"] = name
        payload["construction_count"] = value
        payload["within_bounds"] = pair.lower <= value <= pair.upper
        payload["triangle_free"] = is_cover_triangle_free(
            cover, catalog_subgraphs(cover.graph)
        )
    params = {"n": args.n, "m": args.m, "check_construction": args.check_construction}
    return payload, params


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def _render_table(command: str, payload: dict) -> str:
    lines = []
    if command == "verify-k4":
        lines.append(f"{'m':>4} {'value':>12} {'expected':>12}  {'method':<12} status")
        for r in payload["rows"]:
            status = "pass" if r["ok"] else "FAIL"
            lines.append(
                f"{r['m']:>4} {r['value']:>12} {r['expected']:>12}  {r['method']:<12} {status}"
            )
        done = sum(1 for r in payload["rows"] if r["ok"])
        lines.append(f"{done}/{len(payload['rows'])} checks passed")
    elif command == "search":
        for key in ("m", "mode", "normalization", "root", "reduction", "counter",
                    "evaluated", "space_size"):
            lines.append(f"{key:<14} {payload[key]}")
        if payload["max"] is not None:
            lines.append(f"{'max':<14} {payload['max']}")
            lines.append(f"{'argmax_cover':<14} {json.dumps(payload['argmax_cover'])}")
        if payload["min"] is not None:
            lines.append(f"{'min':<14} {payload['min']}")
            lines.append(f"{'argmin_cover':<14} {json.dumps(payload['argmin_cover'])}")
        if "histogram" in payload:
            lines.append(f"{'value':>12} {'covers':>12}")
            for value, freq in payload["histogram"].items():
                lines.append(f"{value:>12} {freq:>12}")
    elif command == "count":
        for name, value in payload["counts"].items():
            lines.append(f"{name:<22} {value}")
        if len(payload["counts"]) > 1:
            lines.append(f"{'agree':<22} {payload['agree']}")
    elif command == "signed":
        lines.append(f"{'n':<14} {payload['n']}")
        lines.append(f"{'lambda':<14} {payload['lambda']}")
        lines.append(f"{'colors':<14} {payload['colors']}")
        lines.append(f"{'count':<14} {payload['count']}")
        if "dual_value" in payload:
            lines.append(f"{'dual_value':<14} {payload['dual_value']}")
            lines.append(f"{'matches_dual':<14} {payload['matches_dual']}")
    elif command == "bounds":
        for key, value in payload.items():
            lines.append(f"{key:<20} {value}")
        if not payload["threshold_cleared"]:
            lines.append("note: fold below threshold, band not asserted")
    return "\n".join(lines)


def _render_csv(command: str, payload: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    if command == "verify-k4":
        writer.writerow(["m", "value", "expected", "method", "ok"])
        for r in payload["rows"]:
            writer.writerow([r["m"], r["value"], r["expected"], r["method"], r["ok"]])
    elif command == "search":
        if "histogram" in payload:
            writer.writerow(["value", "covers"])
            for value, freq in payload["histogram"].items():
                writer.writerow([value, freq])
        else:
            writer.writerow(["max", "min", "evaluated", "space_size"])
            writer.writerow(
                [payload["max"], payload["min"], payload["evaluated"], payload["space_size"]]
            )
    elif command == "count":
        writer.writerow(["counter", "value"])
        for name, value in payload["counts"].items():
            writer.writerow([name, value])
    elif command == "signed":
        header = ["n", "lambda", "count"]
        row = [payload["n"], payload["lambda"], payload["count"]]
        if "dual_value" in payload:
            header += ["dual_value", "matches_dual"]
            row += [payload["dual_value"], payload["matches_dual"]]
        writer.writerow(header)
        writer.writerow(row)
    elif command == "bounds":
        keys = list(payload.keys())
        writer.writerow(keys)
        writer.writerow([payload[k] for k in keys])
    return buf.getvalue().rstrip("\n")


# ---------------------------------------------------------------------------
# parser and dispatch
# ---------------------------------------------------------------------------

def _add_format(p, plot=False):
    p.add_argument("--format", choices=("json", "table", "csv"), default="json",
                   help="output format (default json)")
    if plot:
        p.add_argument("--plot", metavar="FILE",
                       help="also render a matplotlib figure to FILE")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dpcover",
        description="Exact counting and extremal search over full m-fold covers of small graphs.",
    )
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("verify-k4", help="verify the K4 extremal values")
    p.add_argument("--m-max", type=int, default=5, help="largest fold to check (default 5)")
    p.add_argument("--budget", type=int, default=DEFAULT_SEARCH_BUDGET)
    p.add_argument("--threads", type=int, default=1)
    _add_format(p, plot=True)

    p = sub.add_parser("search", help="extremal search over full covers")
    p.add_argument("--graph", required=True, help="builtin name K2..K8 or a graph JSON file")
    p.add_argument("--m", type=int, required=True, help="fold number")
    p.add_argument("--mode", choices=("max", "min", "both"), default="both")
    p.add_argument("--normalize", choices=("star", "none"), default="star")
    p.add_argument("--root", type=int, default=1, help="star root, 1-indexed (default 1)")
    p.add_argument("--reduce", choices=("none", "conjugacy"), default="none")
    p.add_argument("--counter", choices=tuple(_COUNTER_FLAGS), default="auto")
    p.add_argument("--budget", type=int, default=DEFAULT_SEARCH_BUDGET)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--sampled", type=int, metavar="N",
                   help="sample N random covers instead of exhausting the space")
    p.add_argument("--seed", type=int, help="seed for sampled mode (required there)")
    p.add_argument("--histogram", action="store_true",
                   help="collect the count -> frequency histogram")
    _add_format(p, plot=True)

    p = sub.add_parser("count", help="count proper colorings of one cover")
    p.add_argument("--graph", help="base graph for --cover or --construct canonical")
    p.add_argument("--cover", help="cover JSON file")
    p.add_argument("--construct", choices=("canonical", "even-pairing", "odd-k4", "odd-kn"))
    p.add_argument("--n", type=int, help="order for complete-graph constructions")
    p.add_argument("--m", type=int, help="fold number for constructions")
    p.add_argument("--counter", choices=tuple(_COUNTER_FLAGS), default="auto")
    p.add_argument("--all", action="store_true", help="run all applicable counters and compare")
    _add_format(p)

    p = sub.add_parser("signed", help="count colorings of the all-negative complete signed graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=int, required=True, help="color count")
    p.add_argument("--compare-dual", action="store_true",
                   help="compare against the K4 extremal value (n=4, even lambda)")
    p.add_argument("--budget", type=int, default=DEFAULT_BRUTE_BUDGET)
    _add_format(p)

    p = sub.add_parser("bounds", help="main-term band and threshold for K_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--check-construction", action="store_true",
                   help="count the parity-appropriate construction and test the band")
    _add_format(p)

    return parser


_HANDLERS = {
    "verify-k4": cmd_verify_k4,
    "search": cmd_search,
    "count": cmd_count,
    "signed": cmd_signed,
    "bounds": cmd_bounds,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help()
        return 0

    started = time.perf_counter()
    try:
        payload, params = _HANDLERS[args.command](args)
    except DpcoverError as exc:
        elapsed_ms = round((time.perf_counter() - started) * 1000, 3)
        outcome = {
            "command": args.command,
            "params": {},
            "payload": {"error": exc.code, "message": str(exc)},
            "elapsed_ms": elapsed_ms,
            "status": "failed",
        }
        print(json.dumps(outcome, indent=2))
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code

    elapsed_ms = round((time.perf_counter() - started) * 1000, 3)
    if args.command == "search":
        payload["elapsed_ms"] = elapsed_ms
    outcome = {
        "command": args.command,
        "params": params,
        "payload": payload,
        "elapsed_ms": elapsed_ms,
        "status": "ok",
    }
    if args.format == "json":
        print(json.dumps(outcome, indent=2))
    elif args.format == "table":
        print(_render_table(args.command, payload))
    else:
        print(_render_csv(args.command, payload))
    return 0


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
