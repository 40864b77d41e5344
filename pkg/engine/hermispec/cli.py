"""
Command-line front end.

Usage: hermispec [--json] [--registry PATH] [--show-log] VERB ...

Graph arguments are a JSON file path, a family shorthand or a union of
those joined with "+":

  P:n          path on n vertices
  C:n C1:n C2:n  cycles of Type 0, 1 and 2
  Gt:t         C2_4 with a pendant path of t vertices
  Gttm:t,s     C2_4 with pendant paths of t and s = t+m vertices on opposite corners
  D:n  T:a,b,c  Dt:n  K:n  S:k  trees, complete graphs and stars
  theta:p,q,r  theta graph with path vertex counts p, q and r
  E:r Y1:r Y2:r  orientation classes on theta(3,3,r)
  o or (o)     lettered admissible graph from the registry

Exit codes: 0 on success, 1 when a checked claim fails, 2 on usage or parse errors.
"""

import argparse
import json
import sys

from pydantic import ValidationError

from .admissible_registry import RegistryError
from .analysis_logger import analysis_logger, get_logs
from .campaign_registry import CampaignDefinitionError, CampaignRegistry
from .charpoly import CharPolyConsistencyError, SizeGuardExceeded, char_poly, char_poly_elementary, schwenk_vertex
from .enumeration import SearchConstraints, SearchGuardExceeded, same_class
from .family_registry import UnknownFamilyError, default_registry, set_default_registry
from .graph_families import FamilyParameterError
from .graph_io import GraphParseError, parse_graph_argument, switching_to_json
from .identities import verify_family_identities
from .mate_search import find_mates, is_dhs
from .mixed_graph import GraphValidationError, structure
from .reconstruction import ReconstructionError, update_registry
from .report_writer import ReportWriter
from .spectra import ClosedFormError, ConvergenceError, Spectrum, graph_spectrum
from .switching import (
    SwitchingError,
    apply_switching,
    canonicalize_cycle,
    canonicalize_unicyclic,
    normalize_forest,
    switching_equivalent,
)
from .verification_suite import VerificationSuite

EXIT_OK = 0
EXIT_CLAIM_FAILED = 1
EXIT_USAGE = 2

USAGE_ERRORS = (GraphParseError, GraphValidationError, FamilyParameterError, UnknownFamilyError,
                SwitchingError, ValidationError, CampaignDefinitionError, ValueError)
CLAIM_ERRORS = (CharPolyConsistencyError, ConvergenceError, ReconstructionError, RegistryError,
                ArithmeticError)


class UsageError(Exception):
    """Raised for a well-formed command that cannot be applied to its input."""


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hermispec",
        description="Spectral analysis of mixed graphs through their Hermitian adjacency matrices.",
        epilog=__doc__.split("\n\n", 1)[1],
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--json", action="store_true", help="Emit the report as JSON")
    parser.add_argument("--registry", metavar="PATH", help="Admissible-graph registry file")
    parser.add_argument("--show-log", action="store_true", help="Append the analysis log to the output")
    subparsers = parser.add_subparsers(dest="verb", metavar="VERB")
    subparsers.required = True

    p = subparsers.add_parser("spectrum", help="Eigenvalues, with the closed form when one is known")
    p.add_argument("graph")
    p.add_argument("--tol", type=float, help="Solver tolerance (HERMISPEC_TOL)")

    p = subparsers.add_parser("charpoly", help="Exact characteristic polynomial")
    p.add_argument("graph")
    p.add_argument("--routes", action="store_true",
                   help="Cross-check against the elementary-subgraph and vertex recursions")

    p = subparsers.add_parser("canonicalize", help="Switch a forest, cycle or unicyclic graph to canonical form")
    p.add_argument("graph")

    p = subparsers.add_parser("equivalent", help="Switching equivalence, with a witness")
    p.add_argument("graph")
    p.add_argument("other")

    p = subparsers.add_parser("cospectral", help="Exact cospectrality")
    p.add_argument("graph")
    p.add_argument("other")

    for verb, text in (("mates", "Cospectral mates"), ("dhs", "Determined by Hermitian spectrum")):
        p = subparsers.add_parser(verb, help=text)
        p.add_argument("graph")
        mode = p.add_mutually_exclusive_group()
        mode.add_argument("--free", dest="mode", action="store_const", const="free",
                          help="Exhaustive enumeration (default)")
        mode.add_argument("--guided", dest="mode", action="store_const", const="guided",
                          help="Closed-form catalogue of admissible components")
        p.set_defaults(mode="free")
        p.add_argument("--max-order", type=int, help="Order guard (HERMISPEC_MAX_ORDER)")
        p.add_argument("--max-degree", type=int, help="Largest vertex degree of a mate")
        p.add_argument("--connected", action="store_true", help="Connected mates only")

    p = subparsers.add_parser("out-check", help="Run a computer-search campaign")
    p.add_argument("campaign", nargs="?", help="Campaign name, or 'all'")
    p.add_argument("--list", action="store_true", help="List the campaigns")

    p = subparsers.add_parser("verify", aliases=["verify-paper"], help="Run the verification checks")
    p.add_argument("--all", action="store_true", help="Include the search-heavy checks")
    p.add_argument("--check", action="append", metavar="ID", help="Run only this check (repeatable)")

    p = subparsers.add_parser("reconstruct", help="Reconstruct lettered graphs and theta classes")
    p.add_argument("letters", nargs="*", help="Letters to reconstruct (all when omitted)")
    p.add_argument("--force", action="store_true", help="Replace recorded graphs")
    p.add_argument("--output", metavar="PATH", help="Registry output file")
    p.add_argument("--no-save", action="store_true", help="Do not write the registry")

    subparsers.add_parser("identities", help="Check the family cospectrality identities")
    return parser


def _closed_form(text, registry):
    """Closed-form spectrum of a shorthand argument, or None when some term has none."""
    pairs = []
    for term in text.split("+"):
        name, _, raw = term.strip().partition(":")
        family = registry.get_family(name)
        if family is None:
            return None
        try:
            params = tuple(int(p) for p in raw.split(",")) if raw.strip() else ()
            spectrum = family.closed_form(family.check_params(params))
        except (ClosedFormError, FamilyParameterError, ValueError):
            return None
        pairs.extend(spectrum.exact)
    return Spectrum.from_exact(pairs)


def _spectrum(args, registry):
    g, label = parse_graph_argument(args.graph, registry)
    spectrum = graph_spectrum(g, args.tol)
    result = {"graph": label, "n": g.n, "spectrum": spectrum.to_json(), "char_poly": char_poly(g).to_json()}
    lines = [f"{label}: {g.n} eigenvalues", "char poly: " + str(char_poly(g))]
    writer = ReportWriter("spectrum", result)
    rows = [{"k": k, "eigenvalue": round(v, 12)} for k, v in enumerate(spectrum.values)]

    closed = _closed_form(args.graph, registry)
    if closed is not None:
        gap = max((abs(a - b) for a, b in zip(spectrum.values, closed.values)), default=0.0)
        agrees = closed.exact_polynomial() == char_poly(g) and gap <= 1e-9
        result["closed_form"] = [list(pq) for pq in closed.exact]
        result["closed_form_agrees"] = agrees
        for row, (p, q) in zip(rows, closed.exact):
            row["closed form"] = f"2cos({p}pi/{q})"
        lines.append("closed form agrees" if agrees else "closed form DISAGREES")
        if not agrees:
            writer.status = "claim_failed"
    writer.add_section("eigenvalues", rows)
    return writer, lines


def _charpoly(args, registry):
    g, label = parse_graph_argument(args.graph, registry)
    p = char_poly(g)
    result = {"graph": label, "n": g.n, "char_poly": p.to_json(), "text": str(p)}
    writer = ReportWriter("charpoly", result)
    lines = [f"{label}: {p}"]
    if args.routes:
        routes = {"elementary": char_poly_elementary(g) == p}
        routes.update({f"schwenk@{u}": schwenk_vertex(g, u) == p for u in range(g.n)})
        result["routes"] = routes
        agree = all(routes.values())
        lines.append("all routes agree" if agree else "routes DISAGREE")
        if not agree:
            writer.status = "claim_failed"
    return writer, lines


def _canonicalize(args, registry):
    g, label = parse_graph_argument(args.graph, registry)
    info = structure(g)
    if info.corank == 0:
        kind, theta = "forest", normalize_forest(g)
    elif len(info.components) == 1 and info.corank == 1:
        if all(d == 2 for d in g.degrees()):
            cycle_type, theta = canonicalize_cycle(g)
        else:
            cycle_type, theta = canonicalize_unicyclic(g)
        kind = cycle_type.name
    else:
        raise UsageError(f"{label}: canonicalize applies to forests and connected unicyclic graphs")
    canonical = apply_switching(g, theta)
    result = {"graph": label, "type": kind, "switching": switching_to_json(theta), "canonical": canonical.to_json()}
    lines = [f"{label}: {kind}", "switching: " + json.dumps(switching_to_json(theta), sort_keys=True),
             "canonical: " + json.dumps(canonical.to_json(), sort_keys=True)]
    return ReportWriter("canonicalize", result), lines


def _equivalent(args, registry):
    g1, label1 = parse_graph_argument(args.graph, registry)
    g2, label2 = parse_graph_argument(args.other, registry)
    if g1.n == g2.n and g1.edges() == g2.edges():
        equivalent, theta = switching_equivalent(g1, g2)
    else:
        equivalent, theta = False, None
    relabeled = same_class(g1, g2)
    result = {"graphs": [label1, label2], "equivalent": equivalent, "up_to_relabeling": relabeled}
    lines = [f"{label1} and {label2} are " + ("switching equivalent" if equivalent else "not switching equivalent")
             + " at fixed labels",
             "same switching class up to relabeling" if relabeled else "different switching classes"]
    if theta is not None:
        result["switching"] = switching_to_json(theta)
        lines.append("witness: " + json.dumps(switching_to_json(theta), sort_keys=True))
    return ReportWriter("equivalent", result), lines


def _cospectral(args, registry):
    g1, label1 = parse_graph_argument(args.graph, registry)
    g2, label2 = parse_graph_argument(args.other, registry)
    p1, p2 = char_poly(g1), char_poly(g2)
    result = {"graphs": [label1, label2], "cospectral": p1 == p2, "char_polys": [p1.to_json(), p2.to_json()]}
    lines = [f"{label1}: {p1}", f"{label2}: {p2}",
             "cospectral" if p1 == p2 else "not cospectral"]
    return ReportWriter("cospectral", result), lines


def _constraints(args, g):
    return SearchConstraints(max_order=max(g.n, 1), max_degree=args.max_degree, connected=args.connected)


def _mate_rows(mates):
    return [{"mate": mate.label, "components": len(mate.components)} for mate in mates]


def _mates(args, registry):
    g, label = parse_graph_argument(args.graph, registry)
    report = find_mates(g, _constraints(args, g), args.mode, args.max_order, label, registry)
    writer = ReportWriter("mates", report.to_json())
    writer.add_section("mates", _mate_rows(report.mates))
    lines = [f"{label}: {len(report.mates)} mate(s), {args.mode} search"
             + (" (exhaustive)" if report.exhaustive else " (not exhaustive)")]
    return writer, lines


def _dhs(args, registry):
    g, label = parse_graph_argument(args.graph, registry)
    verdict = is_dhs(g, _constraints(args, g), args.mode, args.max_order, label, registry)
    writer = ReportWriter("dhs", verdict.to_json())
    if verdict.mates:
        writer.add_section("mates", _mate_rows(verdict.mates))
    return writer, [f"{label}: {verdict.status} ({verdict.reason})"]


def _out_check(args, registry):
    campaigns = CampaignRegistry(family_registry=registry)
    if args.list or not args.campaign:
        rows = [{"campaign": name, "description": campaigns.get_campaign(name).description}
                for name in campaigns.get_available_campaigns()]
        writer = ReportWriter("out-check", {"campaigns": [r["campaign"] for r in rows]})
        writer.add_section("campaigns", rows)
        return writer, []
    reports = campaigns.run_all() if args.campaign == "all" else [campaigns.run_campaign(args.campaign)]
    writer = ReportWriter("out-check", {"campaigns": reports})
    writer.add_section("campaigns", [
        {"campaign": r["campaign"], "members": r["members"], "out": r["out_members"],
         "counterexamples": len(r["counterexamples"]), "passed": r["passed"]}
        for r in reports
    ])
    lines = [note for r in reports for note in r["notes"]]
    for r in reports:
        for check in r["checks"]:
            lines.append(f"{r['campaign']}: {check['check']} {'holds' if check['passed'] else 'FAILS'}")
    if not all(r["passed"] for r in reports):
        writer.status = "claim_failed"
    return writer, lines


def _verify(args, registry):
    suite = VerificationSuite(registry)
    results = suite.evaluate(args.check, include_slow=args.all)
    writer = ReportWriter("verify", results)
    writer.add_section("checks", [
        {"id": r["id"], "check": r["title"], "passed": r["passed"],
         "seconds": r["elapsed_s"], "budget": r["budget_s"]}
        for r in results["checks"]
    ])
    if not results["passed"]:
        writer.status = "claim_failed"
    total = len(results["checks"])
    return writer, [f"{total - len(results['failed'])}/{total} checks passed"]


def _reconstruct(args, registry):
    summary = update_registry(args.letters or None, registry, force=args.force,
                              save=not args.no_save, path=args.output)
    writer = ReportWriter("reconstruct", {"matches": summary})
    writer.add_section("reconstructed", [{"graph": k, "matching classes": v} for k, v in summary.items()])
    return writer, []


def _identities(args, registry):
    results = verify_family_identities(strict=False, registry=registry)
    writer = ReportWriter("identities", {"identities": results})
    writer.add_section("identities", [{"identity": r["identity"], "holds": r["holds"]} for r in results])
    failures = [r for r in results if not r["holds"]]
    if failures:
        writer.status = "claim_failed"
    return writer, [f"{len(results) - len(failures)}/{len(results)} identities hold"]


COMMANDS = {
    "spectrum": _spectrum,
    "charpoly": _charpoly,
    "canonicalize": _canonicalize,
    "equivalent": _equivalent,
    "cospectral": _cospectral,
    "mates": _mates,
    "dhs": _dhs,
    "out-check": _out_check,
    "verify": _verify,
    "verify-paper": _verify,
    "reconstruct": _reconstruct,
    "identities": _identities,
}


def run(argv=None, out=None, err=None):
    """
    Run one command.

    Args:
        argv: Arguments without the program name (sys.argv[1:] when omitted)
        out: Stream for the report (stdout when omitted)
        err: Stream for error messages (stderr when omitted)

    Returns:
        int: Exit code
    """
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    try:
        registry = set_default_registry(args.registry) if args.registry else default_registry()
        writer, lines = COMMANDS[args.verb](args, registry)
    except (SearchGuardExceeded, SizeGuardExceeded) as e:
        analysis_logger.log_error(args.verb, e)
        print(f"error: {e}", file=err)
        return EXIT_USAGE
    except CLAIM_ERRORS as e:
        analysis_logger.log_error(args.verb, e)
        print(f"error: {e}", file=err)
        return EXIT_CLAIM_FAILED
    except (UsageError, OSError) + USAGE_ERRORS as e:
        analysis_logger.log_error(args.verb, e)
        print(f"error: {e}", file=err)
        return EXIT_USAGE

    if args.show_log:
        writer.attach_log(reversed(get_logs(limit=500)))
    if args.json:
        print(writer.to_json(), file=out)
    else:
        print(writer.to_text(lines), file=out)
    return EXIT_CLAIM_FAILED if writer.status == "claim_failed" else EXIT_OK


def main():
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
