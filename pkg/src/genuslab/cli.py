"""Command-line front-end.

Every subcommand funnels through the same handlers the HTTP service
uses, so local runs and `--server URL` runs produce identical reports.
Machine output (`--json`) goes to stdout byte-stably; diagnostics go to
stderr.  Exit codes: 0 all verdicts hold, 1 a checked congruence fails,
2 input or validation error.
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional

from .models import DocumentError, load_document
from .schemas import (
    ArfReport,
    BrownReport,
    BundleReport,
    CatalogReport,
    FormDoc,
    GenusReport,
    LatticeDoc,
    ManifoldDoc,
    PipelineReport,
    ReduceReport,
    ReportBase,
    SelftestReport,
    TripleDoc,
    compact_json,
    report_json,
)
from . import service


def _parse_sweep(text: str) -> tuple[int, int]:
    head, sep, tail = text.partition("..")
    if not sep:
        raise DocumentError(f"bad --y-sweep {text!r}, want A..B")
    try:
        start, stop = int(head), int(tail)
    except ValueError as exc:
        raise DocumentError(f"bad --y-sweep {text!r}, want integers A..B") from exc
    if start > stop:
        raise DocumentError(f"bad --y-sweep {text!r}, start exceeds stop")
    return start, stop


def _load_as(path: str, doc_type, what: str):
    doc = load_document(path)
    if not isinstance(doc, doc_type):
        raise DocumentError(f"{path}: expected a {what} document")
    return doc


# ------------------------------------------------------- human renderers


def _render_genus(report: GenusReport) -> str:
    r = report.results
    lines = [f"{r.name}: n={r.n}" + (" (singular)" if r.singular else "")]
    lines.append(
        f"chi_y = {r.chi_y}; chi={r.euler} todd={r.todd} sigma={r.signature}"
    )
    lines.append(
        f"chi^even={r.chi_even} chi^odd={r.chi_odd} "
        f"duality={'yes' if r.duality else 'no'}"
    )
    return "\n".join(lines)


def _render_reduce(report: ReduceReport) -> str:
    r = report.results
    return "\n".join(
        [
            f"{r.name} mod {r.modulus}",
            f"chi_y     = {r.chi_y}",
            f"reduced   = {r.reduced}",
            f"canonical = {r.canonical}",
            f"match: {'OK' if r.match else 'FAIL'}",
        ]
    )


def _render_bundle(report: BundleReport) -> str:
    r = report.results
    mode = "duality" if r.duality_mode else "singular"
    lines = [
        f"triple {r.fiber} -> {r.total} -> {r.base} ({mode} mode, "
        f"monodromy mod 4 trivial: {'yes' if r.monodromy_mod4_trivial else 'no'})",
        f"defect = {r.defect_poly}; sigma defect = {r.sigma_defect}",
        f"{'y':>6} {'chi_y(E)':>14} {'chi_y(F)*chi_y(B)':>18} {'defect':>14} "
        f"{'mod4':>4} {'mod8':>4} {'modulus':>7}  verdict",
    ]
    for row in r.rows:
        verdict = row.verdict
        if row.equivalence_checked:
            verdict += " (equiv)" if row.equivalence_holds else " (equiv FAIL)"
        lines.append(
            f"{row.y:>6} {str(row.chi_y_total):>14} {str(row.chi_y_product):>18} "
            f"{str(row.defect):>14} {row.defect_mod4:>4} {row.defect_mod8:>4} "
            f"{row.guaranteed_modulus:>7}  {verdict}"
        )
    noun = "value" if len(r.rows) == 1 else "values"
    lines.append(f"{r.failures} failures over {len(r.rows)} odd {noun}")
    return "\n".join(lines)


def _render_arf(report: ArfReport) -> str:
    r = report.results
    return f"dim = {r.dim}; Arf = {r.arf}"


def _render_brown(report: BrownReport) -> str:
    r = report.results
    sign = "+" if r.gauss_im >= 0 else "-"
    return (
        f"dim = {r.dim}; Brown = {r.brown}; "
        f"gauss sum = {r.gauss_re}{sign}{abs(r.gauss_im)}i"
    )


def _render_pipeline(report: PipelineReport) -> str:
    r = report.results
    verdict = "OK" if r.consistent else "FAIL"
    return "\n".join(
        [
            f"sigma defect = {r.sigma_defect} ({r.sigma_total} - {r.sigma_reference})",
            f"W dim = {r.w_dim}",
            f"Arf = {r.arf}; 4*Arf = {r.four_arf_mod8} ≡ sigma-defect mod 8: {verdict}",
        ]
    )


def _render_catalog(report: CatalogReport) -> str:
    lines = [f"{'name':<20} {'n':>2} {'chi':>5} {'todd':>5} {'sigma':>6}  chi_y"]
    for e in report.results.entries:
        lines.append(
            f"{e.name:<20} {e.n:>2} {str(e.euler):>5} {str(e.todd):>5} "
            f"{str(e.signature):>6}  {e.chi_y}"
        )
    lines.append(f"{len(report.results.entries)} entries")
    return "\n".join(lines)


def _render_selftest(report: SelftestReport) -> str:
    lines = []
    for s in report.results.suites:
        lines.append(f"{'ok' if s.ok else 'FAIL':<4} {s.name:<25} {s.detail}")
    lines.append(f"{report.results.passed} passed, {report.results.failed} failed")
    return "\n".join(lines)


_RENDERERS = {
    GenusReport: _render_genus,
    ReduceReport: _render_reduce,
    BundleReport: _render_bundle,
    ArfReport: _render_arf,
    BrownReport: _render_brown,
    PipelineReport: _render_pipeline,
    CatalogReport: _render_catalog,
    SelftestReport: _render_selftest,
}


def render_human(report: ReportBase) -> str:
    return _RENDERERS[type(report)](report)


# ------------------------------------------------------- remote transport


_REPORT_TYPES = {
    "genus": GenusReport,
    "reduce": ReduceReport,
    "check-bundle": BundleReport,
    "arf": ArfReport,
    "brown": BrownReport,
    "pipeline": PipelineReport,
    "catalog": CatalogReport,
    "selftest": SelftestReport,
}


def _remote(server: str, command: str, body: Optional[str], params: dict) -> ReportBase:
    import httpx

    url = server.rstrip("/") + "/v1/" + command
    try:
        if body is None:
            resp = httpx.get(url, params=params, timeout=30.0)
        else:
            resp = httpx.post(
                url,
                params=params,
                content=body.encode("utf-8"),
                headers={"content-type": "application/json"},
                timeout=30.0,
            )
    except httpx.HTTPError as exc:
        raise DocumentError(f"server {server}: {exc}") from exc
    if resp.status_code == 400:
        raise DocumentError(resp.json().get("detail", resp.text))
    if resp.status_code != 200:
        raise DocumentError(f"server returned {resp.status_code}: {resp.text[:200]}")
    return _REPORT_TYPES[command].model_validate_json(resp.text)


# ------------------------------------------------------------- dispatch


def _run_genus(args) -> ReportBase:
    doc = _load_as(args.manifold, ManifoldDoc, "manifold")
    if args.server:
        return _remote(args.server, "genus", compact_json(doc), {})
    return service.compute_genus(doc)


def _run_reduce(args) -> ReportBase:
    doc = _load_as(args.manifold, ManifoldDoc, "manifold")
    if args.server:
        return _remote(args.server, "reduce", compact_json(doc), {"mod": args.mod})
    return service.compute_reduce(doc, args.mod)


def _run_check_bundle(args) -> ReportBase:
    doc = _load_as(args.triple, TripleDoc, "triple")
    start, stop = _parse_sweep(args.y_sweep)
    if args.server:
        params = {"y_start": start, "y_stop": stop, "singular": args.singular}
        return _remote(args.server, "check-bundle", compact_json(doc), params)
    return service.check_bundle(doc, start, stop, args.singular)


def _run_arf(args) -> ReportBase:
    doc = _load_as(args.form, FormDoc, "form")
    if args.server:
        return _remote(args.server, "arf", compact_json(doc), {})
    return service.compute_arf(doc)


def _run_brown(args) -> ReportBase:
    doc = _load_as(args.form, FormDoc, "form")
    if args.server:
        return _remote(args.server, "brown", compact_json(doc), {})
    return service.compute_brown(doc)


def _run_pipeline(args) -> ReportBase:
    total = _load_as(args.total, LatticeDoc, "lattice")
    reference = _load_as(args.reference, LatticeDoc, "lattice")
    if args.server:
        body = (
            '{"total": ' + compact_json(total)
            + ', "reference": ' + compact_json(reference) + "}"
        )
        return _remote(args.server, "pipeline", body, {})
    return service.run_pipeline(total, reference)


def _run_catalog(args) -> ReportBase:
    if args.server:
        return _remote(args.server, "catalog", None, {})
    return service.catalog_report()


def _run_selftest(args) -> ReportBase:
    if args.server:
        return _remote(args.server, "selftest", None, {})
    return service.selftest_report()


def _run_serve(args) -> int:
    import uvicorn

    uvicorn.run(service.app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genuslab",
        description="Exact chi_y genera, congruence checks, and form invariants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable report")
        p.add_argument("--server", metavar="URL", help="run against a service instead")

    p = sub.add_parser("genus", help="chi_y polynomial and specializations")
    p.add_argument("manifold", help="manifold JSON document")
    common(p)
    p.set_defaults(run=_run_genus)

    p = sub.add_parser("reduce", help="residue mod 1-y^2 or y-y^3, with canonical form")
    p.add_argument("manifold", help="manifold JSON document")
    p.add_argument("--mod", choices=("1-y2", "y-y3"), default="1-y2")
    common(p)
    p.set_defaults(run=_run_reduce)

    p = sub.add_parser("check-bundle", help="congruence sweep for a bundle triple")
    p.add_argument("triple", help="triple JSON document")
    p.add_argument("--y-sweep", default="-99..99", metavar="A..B")
    p.add_argument("--singular", action="store_true", help="weakened moduli (2/4)")
    common(p)
    p.set_defaults(run=_run_check_bundle)

    p = sub.add_parser("arf", help="Arf invariant of a Z/2 quadratic form")
    p.add_argument("form", help="form JSON document with h values")
    common(p)
    p.set_defaults(run=_run_arf)

    p = sub.add_parser("brown", help="Brown invariant of a Z/4 quadratic form")
    p.add_argument("form", help="form JSON document with q values")
    common(p)
    p.set_defaults(run=_run_brown)

    p = sub.add_parser("pipeline", help="signature defect as 4*Arf via reduction")
    p.add_argument("total", help="lattice JSON document")
    p.add_argument("reference", help="lattice JSON document")
    common(p)
    p.set_defaults(run=_run_pipeline)

    p = sub.add_parser("catalog", help="list the built-in models")
    common(p)
    p.set_defaults(run=_run_catalog)

    p = sub.add_parser("selftest", help="run the built-in check suites")
    common(p)
    p.set_defaults(run=_run_selftest)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(run=_run_serve, serve=True)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "serve", False):
        return args.run(args)
    try:
        report = args.run(args)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(report_json(report) if args.json else render_human(report))
    return report.exit_status


if __name__ == "__main__":
    sys.exit(main())
