"""Command-line front end.

    disjoint-mis analyze GRAPH [--json | --dot]
    disjoint-mis decide GRAPH [--strategy auto|omega-pairs|condition-ii|unicyclic]
    disjoint-mis verify SUITE [--nmax N] [--seed S] [--samples K] [--workers W]
    disjoint-mis generate FAMILY PARAMS...
    disjoint-mis search CONFIG

GRAPH is a file path, ``-`` for stdin, or an inline graph6 string.  Data goes
to stdout, diagnostics to stderr.  Exit codes: 0 ok, 1 internal error,
2 parse error, 3 cap exceeded, 4 strategy mismatch, 5 counterexample or
property violation.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import os
import signal
import sys
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path

from . import __version__
from .errors import CapExceeded, ParseError, PreconditionError, StrategyMismatch
from .families import (
    conjecture_search,
    decide,
    family_stream,
    validate_unicyclic_certificate,
)
from .graph import (
    Graph,
    complete,
    complete_bipartite,
    corona_uniform,
    cycle,
    friendship,
    girth,
    is_bipartite,
    is_connected,
    parse_edge_list,
    parse_graph6,
    path,
    read_graph6_lines,
    star,
    to_dot,
    to_graph6,
    unique_cycle,
)
from .independence import (
    DEFAULT_CAP,
    Certificate,
    alpha_mask,
    check_cap,
    has_two_disjoint_maximal_is,
    is_very_well_covered,
    is_well_covered,
    omega_family,
    validate_certificate,
)
from .matching import matching_number
from .vertex_classes import codominated_vertices, leaves, shedding_vertices, simplicial_vertices

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_PARSE = 2
EXIT_CAP = 3
EXIT_STRATEGY = 4
EXIT_COUNTEREXAMPLE = 5

DEFAULT_MAX_OMEGA = 100_000

log = logging.getLogger("disjoint_mis")


class SearchConfigError(ParseError):
    pass


# input


def read_graphs(source: str, fmt: str = "auto") -> list[Graph]:
    """Graphs from a path, ``-`` (stdin) or an inline graph6 string."""
    if source == "-":
        text = sys.stdin.read()
    elif os.path.exists(source):
        try:
            text = Path(source).read_text()
        except (OSError, UnicodeDecodeError) as exc:
            raise ParseError(f"cannot read {source}: {exc}") from None
    else:
        if fmt == "edges":
            raise ParseError(f"no such file: {source}")
        return [parse_graph6(source.strip())]
    first = next((ln.split() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")), None)
    if first is None:
        raise ParseError("no graph in input")
    if fmt == "edges" or (fmt == "auto" and first[0] == "n"):
        return [parse_edge_list(text)]
    return read_graph6_lines(text.splitlines())


@contextmanager
def time_limit(seconds: float | None) -> Iterator[None]:
    """Raise ``CapExceeded`` when the block runs longer than ``seconds`` (SIGALRM, main thread only)."""
    if not seconds or not hasattr(signal, "SIGALRM"):
        yield
        return

    def fire(signum, frame):
        raise CapExceeded("timeout seconds", seconds, seconds, f"timed out after {seconds:g} s")

    previous = signal.signal(signal.SIGALRM, fire)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, previous)


def _emit_json(docs: list[dict]) -> None:
    payload = docs[0] if len(docs) == 1 else docs
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _check_certificate(g: Graph, cert: Certificate, max_n: int) -> bool:
    if cert.kind in ("unicyclic-cycle-vertex", "konig-egervary", "alpha-matching-bipartite") and unique_cycle(g):
        return validate_unicyclic_certificate(g, cert)
    return validate_certificate(g, cert, cap=max_n)


# analyze


def analysis_report(g: Graph, max_n: int, max_omega: int) -> dict:
    """Every field the caps allow; refused or timed-out fields are listed under ``skipped``."""
    gi = girth(g)
    report: dict = {
        "graph6": to_graph6(g),
        "label": g.label,
        "n": g.n,
        "m": g.m,
        "girth": None if gi == math.inf else int(gi),
        "bipartite": is_bipartite(g),
        "connected": is_connected(g),
        "mu": matching_number(g),
        "vertex_classes": {
            "leaves": list(leaves(g)),
            "simplicial": list(simplicial_vertices(g)),
            "codominated": {str(v): u for v, u in sorted(codominated_vertices(g).items())},
        },
    }
    skipped: dict[str, str] = {}

    def alpha_step():
        check_cap(g, max_n)
        report["alpha"] = alpha_mask(g)

    def omega_step():
        fam = omega_family(g, cap=max_n, omega_cap=max_omega)
        report["omega_size"] = fam.size
        report["core"] = list(fam.core)

    def ke_step():
        report["konig_egervary"] = report["alpha"] + report["mu"] == g.n

    def wc_step():
        report["well_covered"] = is_well_covered(g, cap=max_n)
        report["very_well_covered"] = is_very_well_covered(g, cap=max_n)

    def shed_step():
        report["vertex_classes"]["shedding"] = list(shedding_vertices(g, cap=max_n))

    def maximal_step():
        pair = has_two_disjoint_maximal_is(g, cap=max_n)
        report["disjoint_maximal_pair"] = False if pair is None else [list(pair[0]), list(pair[1])]

    def certificate_step():
        cert = decide(g, "auto", cap=max_n, omega_cap=max_omega)
        if not _check_certificate(g, cert, max_n):
            raise RuntimeError(f"certificate for {report['graph6']} failed re-validation")
        report["certificate"] = cert.to_json()

    steps = [
        ("alpha", alpha_step, ()),
        ("omega_size", omega_step, ("alpha",)),
        ("core", None, ("omega_size",)),
        ("konig_egervary", ke_step, ("alpha",)),
        ("well_covered", wc_step, ("alpha",)),
        ("very_well_covered", None, ("well_covered",)),
        ("shedding", shed_step, ()),
        ("disjoint_maximal_pair", maximal_step, ()),
        ("certificate", certificate_step, ()),
    ]
    timed_out = None
    for name, fn, needs in steps:
        blocked = [d for d in needs if d in skipped]
        if timed_out:
            skipped[name] = timed_out
        elif blocked:
            skipped[name] = f"needs {blocked[0]}"
        elif fn is not None:
            try:
                fn()
            except CapExceeded as exc:
                skipped[name] = str(exc)
                if exc.what == "timeout seconds":
                    timed_out = str(exc)
    for name in skipped:
        if name == "shedding":
            report["vertex_classes"]["shedding"] = None
        else:
            report[name] = None
    report["skipped"] = skipped
    return report


def _format_value(v: object) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if v is None:
        return "skipped"
    if isinstance(v, (list, dict)):
        return json.dumps(v)
    return str(v)


def _format_report(report: dict) -> str:
    lines = []
    for k, v in report.items():
        if k == "vertex_classes":
            for ck, cv in v.items():
                lines.append(f"{ck}: {_format_value(cv)}")
        elif k == "certificate" and v is not None:
            lines.append(f"two disjoint maximum independent sets: {v['verdict']} ({v['kind']})")
            if "pair" in v["payload"]:
                lines.append(f"pair: {json.dumps(v['payload']['pair'])}")
        elif k == "skipped":
            for name, why in v.items():
                lines.append(f"skipped {name}: {why}")
        elif k == "label" and not v:
            continue
        elif k == "girth" and v is None:
            lines.append("girth: inf")
        else:
            lines.append(f"{k.replace('_', ' ')}: {_format_value(v)}")
    return "\n".join(lines) + "\n"


def _highlights(report: dict) -> dict[str, list[int]]:
    marks: dict[str, list[int]] = {}
    cert = report.get("certificate")
    if cert and cert["verdict"] == "yes" and "pair" in cert["payload"]:
        marks["A"], marks["B"] = cert["payload"]["pair"]
    shed = report["vertex_classes"].get("shedding")
    if shed:
        marks["shedding"] = shed
    return marks


def cmd_analyze(args: argparse.Namespace) -> int:
    graphs = read_graphs(args.graph, args.format)
    reports = []
    for g in graphs:
        try:
            with time_limit(args.timeout_seconds):
                reports.append(analysis_report(g, args.max_n, args.max_omega))
        except CapExceeded as exc:
            reports.append({"graph6": to_graph6(g), "n": g.n, "skipped": {"all": str(exc)}})
    for r in reports:
        for name, why in r["skipped"].items():
            print(f"{r['graph6']}: skipped {name}: {why}", file=sys.stderr)
    if args.json:
        _emit_json(reports)
    elif args.dot:
        for g, r in zip(graphs, reports):
            sys.stdout.write(to_dot(g, _highlights(r) if "vertex_classes" in r else None))
    else:
        sys.stdout.write("\n".join(_format_report(r) for r in reports))
    return EXIT_CAP if any(r["skipped"] for r in reports) else EXIT_OK


# decide


def cmd_decide(args: argparse.Namespace) -> int:
    graphs = read_graphs(args.graph, args.format)
    docs = []
    certs = []
    for g in graphs:
        with time_limit(args.timeout_seconds):
            cert = decide(g, args.strategy, cap=args.max_n, omega_cap=args.max_omega)
            if not _check_certificate(g, cert, args.max_n):
                raise RuntimeError(f"certificate for {to_graph6(g)} failed re-validation")
        certs.append(cert)
        docs.append({"graph6": to_graph6(g), "n": g.n, "strategy": args.strategy, "certificate": cert.to_json(), "validated": True})
    if args.json:
        _emit_json(docs)
    elif args.dot:
        for g, cert in zip(graphs, certs):
            pair = cert.pair()
            sys.stdout.write(to_dot(g, {"A": pair[0], "B": pair[1]} if pair else None))
    else:
        for d in docs:
            c = d["certificate"]
            line = f"{d['graph6']}: {c['verdict']} ({c['kind']})"
            if "pair" in c["payload"]:
                line += f" {json.dumps(c['payload']['pair'])}"
            print(line)
    return EXIT_OK


# verify


def cmd_verify(args: argparse.Namespace) -> int:
    from .verify import SUITES, run_suites, summary

    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = run_suites(
        names,
        seed=args.seed,
        workers=args.workers,
        nmax=args.nmax,
        samples=args.samples,
    )
    doc = summary(results, args.seed)
    for r in results:
        print(f"{r.name}: {sum(r.checks.values())} checks in {r.seconds:.1f}s", file=sys.stderr)
        for f in r.failures:
            print(f"FAIL {r.name} {f['property']} {f.get('graph6', '-')}", file=sys.stderr)
    if args.output:
        Path(args.output).write_text(json.dumps(doc, indent=2) + "\n")
    if args.json:
        _emit_json([doc])
    else:
        for r in results:
            status = "PASS" if r.passed else f"FAIL ({r.failure_count} violations)"
            print(f"{r.name}: {status}, {sum(r.checks.values())} checks")
    return EXIT_OK if doc["passed"] else EXIT_COUNTEREXAMPLE


# generate


def _ints(params: list[str], count: int, family: str) -> list[int]:
    if len(params) != count:
        raise ValueError(f"{family} takes {count} integer parameter(s), got {len(params)}")
    try:
        return [int(p) for p in params]
    except ValueError:
        raise ValueError(f"{family} parameters must be integers: {params}") from None


def _one(family: str, params: list[str]) -> list[Graph]:
    if family == "corona-k1":
        if not params:
            raise ValueError("corona-k1 needs a base family, e.g. corona-k1 cycle 5")
        return [corona_uniform(h, complete(1)) for h in _one(params[0], params[1:])]
    if family == "complete-bipartite":
        p, q = _ints(params, 2, family)
        if p < 0 or q < 0:
            raise ValueError("complete-bipartite needs p, q >= 0")
        return [complete_bipartite(p, q)]
    single = {"path": path, "cycle": cycle, "complete": complete, "star": star, "friendship": friendship}
    if family not in single:
        raise ValueError(f"unknown family {family!r}")
    if not params:
        raise ValueError(f"{family} needs at least one integer parameter")
    return [single[family](k) for k in _ints(params, len(params), family)]


GENERATE_FAMILIES = ("path", "cycle", "complete", "complete-bipartite", "star", "friendship", "corona-k1")


def cmd_generate(args: argparse.Namespace) -> int:
    try:
        graphs = _one(args.family, args.params)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    for g in graphs:
        print(to_graph6(g))
    return EXIT_OK


# search


SEARCH_KEYS = {"family": str, "nmax": int, "n": int, "p": float, "budget": int, "seed": int, "workers": int, "output": str, "catalog": str}


def parse_search_config(text: str) -> dict:
    """Flat ``key = value`` lines (``:`` also accepted); ``#`` starts a comment."""
    conf: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        sep = "=" if "=" in line else ":"
        if sep not in line:
            raise SearchConfigError(f"line {lineno}: expected key = value, got {raw!r}")
        key, value = (s.strip() for s in line.split(sep, 1))
        if key not in SEARCH_KEYS:
            raise SearchConfigError(f"line {lineno}: unknown key {key!r}")
        try:
            conf[key] = SEARCH_KEYS[key](value)
        except ValueError:
            raise SearchConfigError(f"line {lineno}: bad value for {key}: {value!r}") from None
    if "family" not in conf:
        raise SearchConfigError("config needs a family")
    if conf["family"] not in ("catalog", "random", "trees", "unicyclic", "odd-cycles"):
        raise SearchConfigError(f"unknown family {conf['family']!r}")
    if conf.get("budget", 0) < 0:
        raise SearchConfigError("budget must be >= 0")
    return conf


def cmd_search(args: argparse.Namespace) -> int:
    try:
        text = Path(args.config).read_text()
    except OSError as exc:
        raise SearchConfigError(f"cannot read config: {exc}") from None
    conf = parse_search_config(text)
    stream = family_stream(
        conf["family"],
        nmax=conf.get("nmax", 7),
        n=conf.get("n", 9),
        p=conf.get("p", 0.5),
        seed=conf.get("seed", 0),
        catalog=conf.get("catalog"),
    )
    budget = conf.get("budget", 10_000)
    report = conjecture_search(stream, budget, conf["family"], workers=conf.get("workers", 1))
    doc = report.to_json(with_runtime=False)
    if conf.get("output"):
        out = Path(conf["output"])
        out.write_text(json.dumps(doc, indent=2) + "\n")
        if report.counterexamples:
            saved = out.with_suffix(".counterexamples.g6")
            saved.write_text("".join(c["graph6"] + "\n" for c in report.counterexamples))
            print(f"counterexamples saved to {saved}", file=sys.stderr)
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")
    print(f"examined {report.examined} graphs in {report.runtime_seconds:.1f}s", file=sys.stderr)
    if report.counterexamples:
        for c in report.counterexamples:
            print(f"COUNTEREXAMPLE {c['graph6']}", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


# parser


def _caps(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("auto", "graph6", "edges"), default="auto")
    p.add_argument("--max-n", type=int, default=DEFAULT_CAP, help="vertex cap for exponential steps (default %(default)s)")
    p.add_argument("--max-omega", type=int, default=DEFAULT_MAX_OMEGA, help="cap on |Omega| (default %(default)s)")
    p.add_argument("--timeout-seconds", type=float, default=None)
    out = p.add_mutually_exclusive_group()
    out.add_argument("--json", action="store_true")
    out.add_argument("--dot", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    from .verify import SUITES

    parser = argparse.ArgumentParser(prog="disjoint-mis", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full structural report for each input graph")
    p.add_argument("graph", help="file path, '-' for stdin, or an inline graph6 string")
    _caps(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("decide", help="two disjoint maximum independent sets, with a certificate")
    p.add_argument("graph")
    p.add_argument("--strategy", choices=("auto", "omega-pairs", "condition-ii", "unicyclic"), default="auto")
    _caps(p)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("verify", help="run property suites")
    p.add_argument("suite", choices=list(SUITES) + ["all"])
    p.add_argument("--nmax", type=int, default=None)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=None, help="default: available CPUs")
    p.add_argument("--output", help="also write the JSON summary here")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="graph6 lines for a named family")
    p.add_argument("family", choices=GENERATE_FAMILIES)
    p.add_argument("params", nargs="*")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("search", help="edge-alpha-critical conjecture search from a config file")
    p.add_argument("config")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except StrategyMismatch as exc:
        print(f"strategy mismatch: {exc}", file=sys.stderr)
        return EXIT_STRATEGY
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_STRATEGY
    except BrokenPipeError:
        return EXIT_OK
    except Exception as exc:
        log.debug("internal error", exc_info=True)
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
