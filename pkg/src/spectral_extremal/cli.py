"""Command-line front end.  Every subcommand prints one JSON report on stdout.

Exit status: 0 when every assertion passes, 1 when one fails, 2 on usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
import time
from fractions import Fraction
from typing import Callable, Optional, Sequence

from . import __version__
from .blowup import BlowupSpec, expand, verify_g_case2, verify_g_leading
from .canonical import canonical_rows, is_isomorphic
from .constructions import Family, FamilyParams, build, grotzsch, turan
from .enumerate import EnumFilter, brute_force_all, enumerate_triangle_free, ingest_graph6
from .graph import Graph, GraphError, is_triangle_free
from .graph6 import Graph6Error, graph6_decode, graph6_encode
from .spectral import SpectralError, UndecidedComparison, compare_rho, rho_graph
from .verify import (
    Match, Verdict, VerifyError, balanced_blowup_report, check_edge_identity,
    check_nosal, check_perturbation_bound, check_vertex_deletion, extremal_edges, extremal_spectral,
    interval_claim_report, perron_matrix, random_perturbation_spec, sk_prediction,
    verify_spectral_turan,
)

log = logging.getLogger("spectral_extremal")

PASS, FAIL = "PASS", "FAIL"


class UsageError(Exception):
    pass


class Report:
    def __init__(self, command: str, params: dict, args: argparse.Namespace):
        self.command = command
        self.params = params
        self.result: object = None
        self.assertions: list[dict] = []
        self.determinism = {"seed": args.seed, "tol": args.tol, "budget": args.budget}
        self.deterministic = args.deterministic
        self._start = time.perf_counter()

    def check(self, name: str, ok: bool, detail: str = "") -> bool:
        self.assertions.append({"name": name, "status": PASS if ok else FAIL, "detail": detail})
        return ok

    def note(self, name: str, status: str, detail: str = "") -> None:
        self.assertions.append({"name": name, "status": status, "detail": detail})

    @property
    def failed(self) -> bool:
        return any(a["status"] == FAIL for a in self.assertions)

    def to_json(self) -> str:
        doc = {
            "tool_version": __version__,
            "command": self.command,
            "params": self.params,
            "result": self.result,
            "assertions": self.assertions,
            "determinism": self.determinism,
        }
        if not self.deterministic:
            doc["timing"] = {"seconds": round(time.perf_counter() - self._start, 3)}
        return json.dumps(doc, indent=2, sort_keys=False)


def _tol(args: argparse.Namespace) -> Fraction:
    try:
        tol = Fraction(args.tol)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--tol: not a decimal number: {args.tol!r}")
    if tol <= 0:
        raise UsageError("--tol must be positive")
    return tol


def _filter(args: argparse.Namespace) -> EnumFilter:
    return EnumFilter(
        require_triangle_free=True,
        min_chromatic=args.min_chromatic,
        connected_only=args.connected,
        non_bipartite_only=args.non_bipartite,
    )


def _decode(text: str) -> Graph:
    try:
        return graph6_decode(text.strip())
    except Graph6Error as e:
        raise UsageError(f"bad graph6 {text.strip()!r}: {e}")


# --- subcommands -------------------------------------------------------------


def cmd_construct(args: argparse.Namespace, out: Callable[[str], None]) -> Optional[Report]:
    split = tuple(int(x) for x in args.split.split(",")) if args.split else ()
    params = FamilyParams(Family(args.family), s=args.s, t=args.t, n=args.n, r=args.r,
                          a=args.a, b=args.b, split=split, swapped=args.swapped)
    obj = build(params)
    g = expand(obj) if isinstance(obj, BlowupSpec) else obj
    if args.format == "graph6":
        out(graph6_encode(g))
        return None
    if args.format == "edges":
        out(f"{g.n} {g.num_edges()}")
        for u, v in g.edges():
            out(f"{u} {v}")
        return None
    rep = Report("construct", {"family": args.family, "s": args.s, "t": args.t, "n": args.n,
                               "r": args.r, "a": args.a, "b": args.b, "split": list(split),
                               "swapped": args.swapped}, args)
    result = {"graph6": graph6_encode(g), "order": g.n, "edges": g.num_edges(),
              "triangle_free": is_triangle_free(g)}
    if isinstance(obj, BlowupSpec):
        result["class_sizes"] = list(obj.sizes)
        if obj.labels:
            result["class_labels"] = list(obj.labels)
    rep.result = result
    return rep


def cmd_enumerate(args: argparse.Namespace, out: Callable[[str], None]) -> Optional[Report]:
    flt = _filter(args)
    graphs = [graph6_encode(g) for g in enumerate_triangle_free(args.n, flt, workers=args.workers)]
    if args.format == "graph6":
        for s in graphs:
            out(s)
        return None
    rep = Report("enumerate", {"n": args.n, "filter": flt.to_dict()}, args)
    rep.result = {"count": len(graphs), "graphs": graphs}
    return rep


def cmd_certify_rho(args: argparse.Namespace, out: Callable[[str], None]) -> Optional[Report]:
    tol = _tol(args)
    if args.input is not None:
        stream = sys.stdin if args.input == "-" else open(args.input, encoding="ascii")
        errors: list = []
        try:
            graphs = list(ingest_graph6(stream, errors))
        finally:
            if stream is not sys.stdin:
                stream.close()
        for e in errors:
            print(f"line {e.line}: {e.message}", file=sys.stderr)
    else:
        graphs = [_decode(s) for s in args.graph6]
        errors = []
    if not graphs and not errors:
        raise UsageError("no graphs given (use --graph6 or --input)")
    rep = Report("certify-rho", {"input": args.input, "graph6": args.graph6}, args)
    rep.result = {
        "graphs": [{"graph6": graph6_encode(g), "rho": rho_graph(g, tol).to_dict()} for g in graphs],
        "skipped_lines": [{"line": e.line, "error": e.message} for e in errors],
    }
    return rep


def cmd_compare(args: argparse.Namespace, out: Callable[[str], None]) -> Optional[Report]:
    tol = _tol(args)
    a, b = _decode(args.a), _decode(args.b)
    rep = Report("compare", {"a": args.a, "b": args.b}, args)
    try:
        order = compare_rho(perron_matrix(a, tol), perron_matrix(b, tol), args.budget, tol).name
    except UndecidedComparison:
        order = "UNDECIDED"
    rep.result = {"ordering": order, "rho_a": rho_graph(a, tol).to_dict(), "rho_b": rho_graph(b, tol).to_dict()}
    return rep


def cmd_extremal(args: argparse.Namespace, out: Callable[[str], None]) -> Optional[Report]:
    flt = _filter(args)
    rep = Report("extremal", {"n": args.n, "objective": args.objective, "filter": flt.to_dict()}, args)
    if args.objective == "edges":
        r = extremal_edges(args.n, flt, workers=args.workers)
    else:
        r = extremal_spectral(args.n, flt, workers=args.workers, tol=_tol(args), budget=args.budget)
    rep.result = r.to_dict()
    rep.note(f"extremal-{args.objective}-n{args.n}", "RECORDED",
             f"prediction {r.matches_paper_prediction.value}: {r.prediction_detail}")
    return rep


CLAIMS = ("balanced-blowup", "interval-claim", "nosal", "vertex-deletion", "perturbation",
          "spectral-turan", "sk-maximiser", "edge-identity", "g-expansion")


def cmd_check(args: argparse.Namespace, out: Callable[[str], None]) -> Optional[Report]:
    tol = _tol(args)
    claim = args.claim
    rep = Report("check", {"claim": claim, "n": args.n, "graph6": args.graph6, "u": args.u,
                           "k": args.k, "count": args.count}, args)

    def need_n() -> int:
        if args.n is None:
            raise UsageError(f"--n is required for --claim {claim}")
        return args.n

    if claim == "balanced-blowup":
        r = balanced_blowup_report(need_n(), budget=args.budget)
        rep.result = r.to_dict()
        rep.check("balanced-blowup", r.passed,
                  f"{r.strict} strict, {r.identical} identical to the best member, of {len(r.comparisons)}")
    elif claim == "interval-claim":
        r = interval_claim_report(need_n(), tol)
        rep.result = r.to_dict()
        rep.check("interval-claim", r.passed and r.interval.width <= tol, str(r.interval))
    elif claim in ("nosal", "vertex-deletion"):
        if not args.graph6:
            raise UsageError(f"--graph6 is required for --claim {claim}")
        g = _decode(args.graph6[0])
        if claim == "nosal":
            rep.check("nosal", check_nosal(g), f"e={g.num_edges()}")
        else:
            if args.u is None:
                raise UsageError("--u is required for --claim vertex-deletion")
            rep.check("vertex-deletion", check_vertex_deletion(g, args.u), f"u={args.u}")
    elif claim == "perturbation":
        rng = random.Random(args.seed)
        verdicts = []
        for _ in range(args.count):
            spec = random_perturbation_spec(rng)
            res = check_perturbation_bound(spec, k=args.k, enforce_size_gates=not args.ungated)
            verdicts.append({"spec": spec.to_dict(), **res.to_dict()})
        rep.result = {"checks": verdicts}
        bad = sum(v["verdict"] == Verdict.FAIL.value for v in verdicts)
        judged = sum(v["verdict"] != Verdict.NOT_APPLICABLE.value for v in verdicts)
        rep.check("perturbation-bound", bad == 0, f"{judged} judged, {bad} failed")
    elif claim == "spectral-turan":
        n = need_n()
        rep.check(f"spectral-turan-n{n}", verify_spectral_turan(n, tol=tol))
    elif claim == "sk-maximiser":
        n = need_n()
        r = extremal_spectral(n, EnumFilter(non_bipartite_only=True), workers=args.workers,
                              tol=tol, budget=args.budget)
        rep.result = r.to_dict()
        rep.check(f"sk-maximiser-n{n}", r.matches_paper_prediction is Match.YES, r.prediction_detail)
    elif claim == "edge-identity":
        n = need_n()
        rep.check(f"edge-identity-n{n}", check_edge_identity(n))
    elif claim == "g-expansion":
        for x in (-2, -1, 0):
            for t in (-1, 0, 1, 2):
                rep.check(f"g-leading-x{x}-t{t}", verify_g_leading(x, t))
        for x in (-2, -1, 0):
            rep.check(f"g-case2-n9-x{x}", verify_g_case2(x))
    return rep


# --- verify-all ----------------------------------------------------------------


def _random_graph(rng: random.Random, n: int) -> Graph:
    p = rng.random()
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def run_acceptance(rep: Report, *, seed: int, tol: Fraction, budget: int, workers: int) -> dict:
    """Run every acceptance check, appending one assertion per criterion."""
    result: dict = {}

    # 1. canonical augmentation against the brute-force oracle
    ok, counts = True, []
    for n in range(1, 8):
        fast = [g.adj for g in enumerate_triangle_free(n, workers=workers)]
        slow = [g.adj for g in brute_force_all(n, is_triangle_free)]
        counts.append(len(slow))
        ok &= fast == slow
    result["enumeration_counts"] = counts
    rep.check("enumeration-oracle", ok, f"class counts n=1..7: {counts}")

    # 2. no triangle-free 4-chromatic graph below 11 vertices
    chi4 = EnumFilter(min_chromatic=4)
    at10 = list(enumerate_triangle_free(10, chi4, workers=workers))
    at11 = list(enumerate_triangle_free(11, chi4, workers=workers))
    has_g = any(is_isomorphic(g, grotzsch()) for g in at11)
    rep.check("grotzsch-minimality", not at10 and has_g, f"n=10: {len(at10)}, n=11: {len(at11)}")

    # 3. SK maximiser among non-bipartite triangle-free classes
    sk = {}
    for n in range(5, 11):
        r = extremal_spectral(n, EnumFilter(non_bipartite_only=True), workers=workers, tol=tol, budget=budget)
        sk[n] = r.to_dict()
        rep.check(f"sk-maximiser-n{n}", r.matches_paper_prediction is Match.YES
                  and r.winners == [graph6_encode(_canon(sk_prediction(n)))], r.prediction_detail)
    result["sk_maximiser"] = sk

    # 4. Mantel and the spectral Turan bound
    mantel = []
    for n in range(3, 14):
        r = extremal_edges(n, workers=workers)
        good = r.value == n * n // 4 and r.winners == [graph6_encode(_canon(turan(n, 2)))]
        mantel.append(good)
    rep.check("mantel", all(mantel), "n=3..13")
    turan_ok = [verify_spectral_turan(n, tol=tol) for n in range(2, 8)]
    rep.check("spectral-turan", all(turan_ok), "n=2..7")

    # 5. balanced blow-up comparisons
    blow = {}
    for n in list(range(60, 81)) + [1001, 10**4, 10**6 + 1]:
        r = balanced_blowup_report(n, budget=budget)
        blow[n] = {"strict": r.strict, "identical": r.identical, "comparisons": len(r.comparisons)}
        rep.check(f"balanced-blowup-n{n}", r.passed,
                  f"{r.strict} strict, {r.identical} identical to the best member, of {len(r.comparisons)}")
    result["balanced_blowup"] = blow

    # 6. g(x, t) expansion
    g_ok = all(verify_g_leading(x, t) for x in (-2, -1, 0) for t in (-1, 0, 1, 2))
    g2_ok = all(verify_g_case2(x) for x in (-2, -1, 0))
    rep.check("g-expansion", g_ok and g2_ok, "n^10, n^9 at x in {-2,-1,0}, t in {-1,0,1,2}; n^9 at t=1")

    # 7. interval claim
    iv = {}
    for n in (100, 1001, 10**5):
        r = interval_claim_report(n, tol)
        iv[n] = r.to_dict()
        rep.check(f"interval-claim-n{n}", r.passed and r.interval.width <= tol, str(r.interval))
    result["interval_claim"] = iv

    # 8. property suites
    nosal_ok = all(check_nosal(g) for n in range(1, 10) for g in enumerate_triangle_free(n, workers=workers))
    rep.check("nosal", nosal_ok, "all triangle-free classes n <= 9")
    rng = random.Random(seed)
    vd_ok = True
    for _ in range(1000):
        g = _random_graph(rng, rng.randint(1, 10))
        vd_ok &= check_vertex_deletion(g, rng.randrange(g.n))
    rep.check("vertex-deletion", vd_ok, f"1000 random graphs, seed {seed}")
    judged = failed = 0
    for _ in range(100):
        spec = random_perturbation_spec(rng)
        res = check_perturbation_bound(spec, k=0, enforce_size_gates=False)
        judged += res.verdict is not Verdict.NOT_APPLICABLE
        failed += res.verdict is Verdict.FAIL
    rep.check("perturbation-bound", failed == 0 and judged == 100,
              f"{judged} judged with size gates reported only, {failed} failed")

    # 9. substitutes for the large-n statements
    ext = {}
    for n in (11, 12):
        for objective in ("edges", "rho"):
            if objective == "edges":
                r = extremal_edges(n, chi4, workers=workers)
            else:
                r = extremal_spectral(n, chi4, workers=workers, tol=tol, budget=budget)
            ext[f"{objective}-n{n}"] = r.to_dict()
            rep.note(f"extremal-{objective}-n{n}", "RECORDED",
                     f"prediction {r.matches_paper_prediction.value}: {r.prediction_detail}")
    result["extremal_chi4"] = ext
    rep.check("edge-identity", all(check_edge_identity(n) for n in range(11, 501)), "11 <= n <= 500")
    return result


def _canon(g: Graph) -> Graph:
    return Graph(g.n, canonical_rows(g))


def cmd_verify_all(args: argparse.Namespace, out: Callable[[str], None]) -> Optional[Report]:
    rep = Report("verify-all", {"workers_independent": True}, args)
    rep.result = run_acceptance(rep, seed=args.seed, tol=_tol(args), budget=args.budget, workers=args.workers)
    return rep


# --- argument parsing ------------------------------------------------------------


def _add_filter_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--min-chromatic", type=int, default=0)
    p.add_argument("--triangle-free", action="store_true", default=True,
                   help="always on; searches run over triangle-free classes")
    p.add_argument("--connected", action="store_true")
    p.add_argument("--non-bipartite", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--tol", default="1e-9")
    common.add_argument("--budget", type=int, default=12)
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--deterministic", action="store_true", help="omit timing from the report")
    common.add_argument("--output", help="write the report here instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="spectral-extremal", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="build a named graph")
    p.add_argument("--family", required=True, choices=[f.value for f in Family])
    for name, default in (("s", 0), ("t", 1), ("n", 0), ("r", 2), ("a", 1), ("b", 1)):
        p.add_argument(f"--{name}", type=int, default=default)
    p.add_argument("--split", help="comma-separated |V1|,|V2|,|V3| for f1n")
    p.add_argument("--swapped", action="store_true")
    p.add_argument("--format", choices=("json", "graph6", "edges"), default="json")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("enumerate", parents=[common], help="triangle-free classes of order n")
    p.add_argument("--n", type=int, required=True)
    _add_filter_flags(p)
    p.add_argument("--format", choices=("json", "graph6"), default="json")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("certify-rho", parents=[common], help="certified spectral radius")
    p.add_argument("--graph6", nargs="*", default=[])
    p.add_argument("--input", help="file of graph6 lines, or - for stdin")
    p.set_defaults(func=cmd_certify_rho)

    p = sub.add_parser("compare", parents=[common], help="certified comparison of two spectral radii")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("extremal", parents=[common], help="exhaustive extremal search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--objective", choices=("edges", "rho"), default="edges")
    _add_filter_flags(p)
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("check", parents=[common], help="check one claim")
    p.add_argument("--claim", required=True, choices=CLAIMS)
    p.add_argument("--n", type=int)
    p.add_argument("--graph6", nargs="*", default=[])
    p.add_argument("--u", type=int)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--ungated", action="store_true", help="judge perturbations with size gates reported only")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify-all", parents=[common], help="run the whole acceptance suite")
    p.set_defaults(func=cmd_verify_all)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    lines: list[str] = []
    try:
        if args.workers < 1:
            raise UsageError("--workers must be at least 1")
        _tol(args)
        rep = args.func(args, lines.append)
    except (UsageError, GraphError, Graph6Error, VerifyError, SpectralError, ValueError) as e:
        print(f"{parser.prog} {args.command}: error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"{parser.prog} {args.command}: error: {e}", file=sys.stderr)
        return 2
    text = rep.to_json() if rep is not None else "\n".join(lines)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    return 1 if rep is not None and rep.failed else 0


if __name__ == "__main__":
    sys.exit(main())
