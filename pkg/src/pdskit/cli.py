"""Command line interface.

Exit codes: 0 success; 1 negative answer (set is not a PDS, no extension,
exceptional cubic instance, invalid certificate); 2 usage or input error;
3 internal verification failure (a solver emitted a set that did not
survive the independent re-check).

Graph arguments accept a file path (edge-list text or JSON), "-" for
stdin, or a fixture name such as cubic10 or path7.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from . import bench as bench_mod
from . import cubic as cubic_mod
from .approx import half_pds
from .errors import (
    InstanceTooLarge,
    InvalidInstance,
    NoPds,
    ParseError,
    PdsKitError,
    UnknownFixture,
    VerificationFailed,
)
from .exact import max_independent_set_exact, max_pds_exact, pds_extension
from .generators import fixture, fixture_names, random_connected
from .graph import (
    Graph,
    VertexSet,
    emit_graph,
    graph_from_json,
    graph_to_json,
    induced_connected,
    parse_graph,
    set_from_json,
)
from .pds import check_pds
from .reductions import (
    ReductionCertificate,
    bipartite_reduction,
    certificate_from_json,
    certificate_to_json,
    split_reduction,
    verify_certificate,
)


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def _read_source(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read()
    p = Path(arg)
    if p.exists():
        return p.read_text()
    raise FileNotFoundError(arg)


def _load_graph(arg: str) -> tuple[Graph, str]:
    """Returns (graph, raw text used for the input digest)."""
    try:
        raw = _read_source(arg)
    except FileNotFoundError:
        try:
            g = fixture(arg).graph
        except UnknownFixture:
            raise ParseError(f"{arg}: not a file, and no such fixture") from None
        return g, emit_graph(g)
    body = raw.lstrip()
    g = graph_from_json(raw) if body.startswith("{") else parse_graph(raw)
    return g, raw


def _parse_ids(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError as exc:
        raise ParseError(f"bad vertex list {text!r}") from exc


def _emit(args, payload: dict, human: list[str]) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2))
    else:
        for line in human:
            print(line)


def _set_lines(s: VertexSet, limit: int = 200) -> list[str]:
    if s.n <= limit:
        return ["set " + " ".join(map(str, s.members()))]
    return [f"set omitted ({len(s)} vertices; use --json)"]


# --- subcommands ----------------------------------------------------------


def cmd_verify(args) -> int:
    g, raw = _load_graph(args.graph)
    if args.set is not None:
        s = VertexSet.from_ids(g.n, _parse_ids(args.set))
    else:
        s = set_from_json(_read_source(args.set_file), g.n)
    verdict = check_pds(g, s)
    connected = induced_connected(g, s) if len(s) else False
    ok = verdict.holds and (connected or not args.connected)
    payload = {
        "command": "verify",
        "input_digest": _digest(raw),
        "holds": verdict.holds,
        "connected": connected,
        "unsatisfied": [
            {"vertex": u, "inside": di, "outside": do}
            for u, di, do in verdict.unsatisfied
        ],
    }
    human = [f"pds {str(verdict.holds).lower()}", f"connected {str(connected).lower()}"]
    human += [
        f"violated by {u}: inside {di}, outside {do}"
        for u, di, do in verdict.unsatisfied
    ]
    _emit(args, payload, human)
    return 0 if ok else 1


def cmd_exact(args) -> int:
    g, raw = _load_graph(args.graph)
    if args.extend is not None:
        base = VertexSet.from_ids(g.n, _parse_ids(args.extend))
        ext = pds_extension(g, base, cap=args.cap)
        if ext is None:
            _emit(
                args,
                {"command": "exact", "input_digest": _digest(raw), "extension": None},
                ["no extension"],
            )
            return 1
        if not check_pds(g, ext).holds:
            raise VerificationFailed("extension failed the re-check")
        payload = {
            "command": "exact",
            "input_digest": _digest(raw),
            "extension": ext.members(),
            "verified": True,
        }
        _emit(args, payload, [f"extension of size {len(ext)}"] + _set_lines(ext))
        return 0
    t0 = time.perf_counter()
    res = max_pds_exact(
        g, connected_only=args.connected, all_optima=args.all_optima, cap=args.cap
    )
    elapsed = time.perf_counter() - t0
    if not check_pds(g, res.witness).holds or (
        args.connected and not induced_connected(g, res.witness)
    ):
        raise VerificationFailed("exact witness failed the re-check")
    payload = {
        "command": "exact",
        "input_digest": _digest(raw),
        "size": res.size,
        "witness": res.witness.members(),
        "connected": induced_connected(g, res.witness),
        "optima": [s.members() for s in res.optima] if res.optima else None,
        "subsets_checked": res.subsets_checked,
        "seconds": elapsed,
        "verified": True,
    }
    human = [f"size {res.size}"] + _set_lines(res.witness)
    if res.optima:
        human.append(f"optima {len(res.optima)}")
    human.append(f"subsets checked {res.subsets_checked}")
    _emit(args, payload, human)
    return 0


def cmd_approx(args) -> int:
    g, raw = _load_graph(args.graph)
    init = (
        VertexSet.from_ids(g.n, _parse_ids(args.init)) if args.init is not None else None
    )
    runs = max(1, args.restarts)
    best = None
    t0 = time.perf_counter()
    for i in range(runs):
        if init is not None:
            seed = None
        elif args.seed is not None:
            seed = args.seed + i
        else:
            seed = i if runs > 1 else None
        s, trace = half_pds(g, init=init, seed=seed)
        if best is None or len(s) > len(best[0]):
            best = (s, trace)
    elapsed = time.perf_counter() - t0
    s, trace = best
    if not check_pds(g, s).holds:
        raise VerificationFailed("local search output failed the re-check")
    connected = induced_connected(g, s)
    payload = {
        "command": "approx",
        "input_digest": _digest(raw),
        "size": len(s),
        "set": s.members(),
        "connected": connected,
        "moves": trace.iterations,
        "restarts": runs,
        "seconds": elapsed,
        "verified": True,
    }
    if args.trace:
        payload["trace"] = [
            {
                "vertex": mv.vertex,
                "inside": mv.inside_degree,
                "outside": mv.outside_degree,
                "cut_before": mv.cut_before,
                "cut_after": mv.cut_after,
            }
            for mv in trace.moves
        ]
    human = [
        f"size {len(s)}",
        *_set_lines(s),
        f"connected {str(connected).lower()}",
        f"moves {trace.iterations}",
    ]
    _emit(args, payload, human)
    return 0


def _hamiltonian_cycle(g: Graph) -> list[int] | None:
    if g.n > 24:
        raise InstanceTooLarge("cycle search is exponential; capped at n=24")
    used = bytearray(g.n)
    used[0] = 1
    order = [0]

    def rec() -> bool:
        v = order[-1]
        if len(order) == g.n:
            return g.has_edge(v, 0)
        for w in g.adj[v]:
            if not used[w]:
                used[w] = 1
                order.append(w)
                if rec():
                    return True
                order.pop()
                used[w] = 0
        return False

    return order if rec() else None


def _cubic_from_graph(g: Graph) -> tuple[cubic_mod.CubicCycleGraph, list[int]]:
    from .graph import is_cubic

    if not is_cubic(g):
        raise InvalidInstance("--find-cycle needs a cubic graph")
    order = _hamiltonian_cycle(g)
    if order is None:
        raise InvalidInstance("the graph has no Hamiltonian cycle")
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    chord = [-1] * g.n
    for i, v in enumerate(order):
        prev_v = order[i - 1]
        next_v = order[(i + 1) % g.n]
        third = next(w for w in g.adj[v] if w not in (prev_v, next_v))
        chord[i] = pos[third]
    return cubic_mod.CubicCycleGraph(g.n, tuple(chord)), order


def cmd_cubic(args) -> int:
    if args.sweep8:
        counts = {"paired": 0, "alternating": 0}
        total = 0
        for inst in cubic_mod.all_cubic_cycles(8):
            total += 1
            outcome = cubic_mod.solve_hamiltonian_cubic(inst)
            if outcome.exceptional:
                counts[outcome.exceptional] += 1
        payload = {"command": "cubic", "instances": total, "exceptional": counts}
        _emit(
            args,
            payload,
            [
                f"instances {total}",
                f"exceptional paired {counts['paired']}",
                f"exceptional alternating {counts['alternating']}",
            ],
        )
        return 0

    order: list[int] | None = None
    if args.random is not None:
        inst = cubic_mod.random_cubic_cycle(args.random, seed=args.seed)
        raw = cubic_mod.emit_cubic(inst)
    else:
        if args.input is None:
            raise ParseError("cubic needs an input, --random N, or --sweep8")
        if args.find_cycle:
            g, raw = _load_graph(args.input)
            inst, order = _cubic_from_graph(g)
        else:
            try:
                raw = _read_source(args.input)
                inst = cubic_mod.parse_cubic(raw)
            except FileNotFoundError:
                rec = fixture(args.input)
                if rec.chords is None:
                    raise InvalidInstance(
                        f"fixture {args.input!r} carries no cycle-plus-chords form"
                    ) from None
                inst = cubic_mod.CubicCycleGraph(rec.graph.n, rec.chords)
                raw = cubic_mod.emit_cubic(inst)

    t0 = time.perf_counter()
    outcome = cubic_mod.solve_hamiltonian_cubic(inst, verify=not args.no_verify)
    elapsed = time.perf_counter() - t0
    payload = {
        "command": "cubic",
        "input_digest": _digest(raw),
        "n": inst.n,
        "seconds": elapsed,
        "verified": not args.no_verify,
    }
    if outcome.exceptional:
        payload["exceptional"] = outcome.exceptional
        _emit(args, payload, [f"exceptional {outcome.exceptional}", "no PDS of target size"])
        return 1
    s = outcome.pds
    if order is not None:
        # translate cycle positions back to the labels the user supplied
        s = VertexSet.from_ids(inst.n, (order[v] for v in s.members()))
        payload["cycle"] = order
    payload["size"] = len(s)
    payload["set"] = s.members() if inst.n <= 100_000 else None
    _emit(args, payload, [f"size {len(s)}"] + _set_lines(s))
    return 0


def cmd_reduce(args) -> int:
    g, raw = _load_graph(args.graph)
    if args.kind == "split":
        inst = split_reduction(g)
        payload = {
            "command": "reduce",
            "kind": "split",
            "input_digest": _digest(raw),
            "target": graph_to_json(inst.target),
            "anchors": list(inst.anchors),
            "edge_block": [[list(e), i] for e, i in inst.edge_ids.items()],
            "source_block": list(inst.source_ids),
            "core_size": inst.core_size,
        }
        human = [
            f"target n {inst.target.n} m {inst.target.m}",
            f"core size {inst.core_size}",
        ]
    else:
        if args.k is None:
            raise ParseError("bipartite reduction needs --k")
        inst = bipartite_reduction(g, args.k)
        payload = {
            "command": "reduce",
            "kind": "bipartite",
            "input_digest": _digest(raw),
            "k": args.k,
            "target": graph_to_json(inst.target),
            "filler_count": inst.filler_count,
            "edge_block": [[list(e), i] for e, i in inst.edge_ids.items()],
            "source_block": list(inst.source_ids),
            "threshold": inst.threshold,
        }
        human = [
            f"target n {inst.target.n} m {inst.target.m}",
            f"filler {inst.filler_count}",
            f"threshold {inst.threshold}",
        ]
    if args.certificate:
        alpha, is_set = max_independent_set_exact(g, cap=args.cap)
        if args.kind == "bipartite" and alpha < args.k:
            raise NoPds(
                f"alpha(G) = {alpha} < k = {args.k}: no certificate exists"
            )
        pds = inst.embed_independent_set(is_set)
        cert = ReductionCertificate(
            kind=args.kind,
            direction="forward",
            k=getattr(inst, "k", None),
            independent_set=is_set,
            pds=pds,
        )
        problems = verify_certificate(inst, cert)
        if problems:
            raise VerificationFailed("; ".join(problems))
        Path(args.certificate).write_text(
            json.dumps(certificate_to_json(inst, cert), indent=2) + "\n"
        )
        payload["certificate"] = args.certificate
        payload["alpha"] = alpha
        human.append(f"alpha {alpha}")
        human.append(f"certificate written to {args.certificate}")
    _emit(args, payload, human)
    return 0


def cmd_certify(args) -> int:
    obj = json.loads(_read_source(args.file))
    inst, cert = certificate_from_json(obj)
    problems = verify_certificate(inst, cert)
    payload = {
        "command": "certify",
        "kind": cert.kind,
        "direction": cert.direction,
        "valid": not problems,
        "problems": problems,
    }
    human = [f"valid {str(not problems).lower()}"] + problems
    _emit(args, payload, human)
    return 0 if not problems else 1


def cmd_gen(args) -> int:
    if args.list:
        for name in fixture_names():
            print(name)
        print("star<N> path<N> cycle<N>")
        return 0
    if args.cubic is not None:
        inst = cubic_mod.random_cubic_cycle(args.cubic, seed=args.seed)
        sys.stdout.write(cubic_mod.emit_cubic(inst))
        return 0
    if args.fixture is not None:
        g = fixture(args.fixture).graph
    elif args.random is not None:
        n, m = args.random
        g = random_connected(n, m, seed=args.seed)
    else:
        raise ParseError("gen needs --list, --fixture, --random or --cubic")
    if args.json:
        print(json.dumps(graph_to_json(g)))
    else:
        sys.stdout.write(emit_graph(g))
    return 0


def cmd_bench(args) -> int:
    kwargs = {"seed": args.seed, "repeats": args.repeats}
    if args.sizes:
        kwargs["sizes"] = tuple(_parse_ids(args.sizes))
    rows = bench_mod.run_suite(args.suite, **kwargs)
    cols = list(rows[0].keys())
    lines = [",".join(cols)]
    lines += [",".join(repr(r[c]) if isinstance(r[c], float) else str(r[c]) for c in cols) for r in rows]
    text = "\n".join(lines) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    if len(rows) > 1:
        slope, r2 = bench_mod.fit_loglog(
            [r["n"] for r in rows], [r["seconds"] for r in rows]
        )
        print(f"log-log slope {slope:.3f} r2 {r2:.3f}", file=sys.stderr)
    return 0


# --- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="pdskit",
        description="Proportionally dense subgraph toolkit",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def with_json(sp):
        sp.add_argument("--json", action="store_true", help="emit a JSON report")
        return sp

    sp = with_json(sub.add_parser("verify", help="check whether a set is a PDS"))
    sp.add_argument("graph")
    grp = sp.add_mutually_exclusive_group(required=True)
    grp.add_argument("--set", help="comma separated vertex ids")
    grp.add_argument("--set-file", help='JSON file {"set": [...]}')
    sp.add_argument(
        "--connected", action="store_true", help="also require a connected subgraph"
    )
    sp.set_defaults(func=cmd_verify)

    sp = with_json(sub.add_parser("exact", help="exhaustive maximum PDS"))
    sp.add_argument("graph")
    sp.add_argument("--connected", action="store_true")
    sp.add_argument("--all-optima", action="store_true")
    sp.add_argument("--cap", type=int, default=None, help="enumeration cap override")
    sp.add_argument("--extend", help="find a PDS strictly containing these ids")
    sp.set_defaults(func=cmd_exact)

    sp = with_json(sub.add_parser("approx", help="half-size local search"))
    sp.add_argument("graph")
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--init", help="explicit initial set (comma separated ids)")
    sp.add_argument("--restarts", type=int, default=1)
    sp.add_argument("--trace", action="store_true", help="include the move trace")
    sp.set_defaults(func=cmd_approx)

    sp = with_json(sub.add_parser("cubic", help="Hamiltonian cubic solver"))
    sp.add_argument("input", nargs="?", help="cycle-format file or fixture name")
    sp.add_argument("--random", type=int, metavar="N", help="random instance size")
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument(
        "--find-cycle",
        action="store_true",
        help="input is an edge list; search a Hamiltonian cycle first (n <= 24)",
    )
    sp.add_argument("--sweep8", action="store_true", help="solve all n=8 instances")
    sp.add_argument("--no-verify", action="store_true")
    sp.set_defaults(func=cmd_cubic)

    sp = with_json(sub.add_parser("reduce", help="independent-set reductions"))
    sp.add_argument("graph")
    sp.add_argument("--kind", choices=("split", "bipartite"), required=True)
    sp.add_argument("--k", type=int, default=None)
    sp.add_argument(
        "--certificate",
        metavar="FILE",
        help="also compute a maximum independent set and write a certificate",
    )
    sp.add_argument("--cap", type=int, default=None)
    sp.set_defaults(func=cmd_reduce)

    sp = with_json(sub.add_parser("certify", help="verify a reduction certificate"))
    sp.add_argument("file")
    sp.set_defaults(func=cmd_certify)

    sp = with_json(sub.add_parser("gen", help="emit graphs"))
    sp.add_argument("--list", action="store_true", help="list fixture names")
    sp.add_argument("--fixture")
    sp.add_argument("--random", nargs=2, type=int, metavar=("N", "M"))
    sp.add_argument("--cubic", type=int, metavar="N")
    sp.add_argument("--seed", type=int, default=None)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("bench", help="timing suites (CSV)")
    sp.add_argument("--suite", required=True)
    sp.add_argument("--output")
    sp.add_argument("--sizes", help="comma separated instance sizes")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--repeats", type=int, default=3)
    sp.set_defaults(func=cmd_bench)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except VerificationFailed as exc:
        print(f"error: verification failed: {exc}", file=sys.stderr)
        return 3
    except NoPds as exc:
        print(f"negative: {exc}", file=sys.stderr)
        return 1
    except PdsKitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as exc:
        print(f"error: bad JSON: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
