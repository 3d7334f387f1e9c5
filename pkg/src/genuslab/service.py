"""Request handlers shared by the HTTP service and the command line.

Every handler is a pure function from validated documents to a typed
report, so the CLI can call them in-process and get byte-identical
results to the HTTP service.  The FastAPI app at the bottom is a thin
adapter: parse body, call handler, emit the report's canonical JSON.
"""
from __future__ import annotations

import hashlib

from fastapi import FastAPI, Query, Request, Response
from fastapi.responses import JSONResponse

from .congruence import (
    canonical_for_chi,
    defect,
    odd_range,
    reduce_for_modulus,
    sigma_defect,
    sweep_checks,
)
from .genus import chi_y_polynomial, check_duality, parity_parts, specialize
from .models import (
    DocumentError,
    ManifoldModel,
    builtin_catalog,
    form_space_from_doc,
    lattice_from_doc,
    manifold_from_doc,
    parse_document,
    triple_from_doc,
)
from .schemas import (
    ArfReport,
    ArfResults,
    BrownReport,
    BrownResults,
    BundleReport,
    BundleResults,
    BundleRow,
    CatalogEntry,
    CatalogReport,
    CatalogResults,
    FormDoc,
    GenusReport,
    GenusResults,
    LatticeDoc,
    ManifoldDoc,
    PipelineReport,
    PipelineResults,
    ReduceReport,
    ReduceResults,
    ReportBase,
    SelftestReport,
    SelftestResults,
    SelftestSuite,
    StrictModel,
    TripleDoc,
    compact_json,
    report_json,
)
from .selftest import run_selftests
from .ypoly import YPolynomial
from .z2forms import (
    Z2QuadraticForm,
    Z4QuadraticForm,
    arf,
    brown_invariant,
    defect_arf_pipeline,
)


def inputs_digest(*docs: StrictModel) -> str:
    payload = "\n".join(compact_json(d) for d in docs)
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


def _int_coeffs(p: YPolynomial) -> list[int]:
    return [int(c) for c in p.coeffs]


def compute_genus(doc: ManifoldDoc) -> GenusReport:
    model = manifold_from_doc(doc)
    poly = chi_y_polynomial(model.chi)
    s = specialize(model.chi)
    even, odd = parity_parts(model.chi)
    results = GenusResults(
        name=model.name,
        n=model.n,
        singular=model.singular,
        chi=list(model.chi.values),
        chi_y=str(poly),
        euler=s.euler,
        todd=s.todd,
        signature=s.signature,
        chi_even=even,
        chi_odd=odd,
        duality=check_duality(model.chi),
    )
    return GenusReport(
        command="genus", inputs_digest=inputs_digest(doc), results=results
    )


def compute_reduce(doc: ManifoldDoc, modulus: str) -> ReduceReport:
    model = manifold_from_doc(doc)
    if model.singular:
        raise DocumentError(
            f"{model.name}: canonical reduction needs duality; model is singular"
        )
    poly = chi_y_polynomial(model.chi)
    reduced = reduce_for_modulus(poly, modulus)
    canonical = canonical_for_chi(model.chi, modulus)
    results = ReduceResults(
        name=model.name,
        modulus=modulus,
        chi_y=str(poly),
        reduced=str(reduced),
        reduced_coefficients=_int_coeffs(reduced),
        canonical=str(canonical),
        canonical_coefficients=_int_coeffs(canonical),
        match=reduced == canonical,
    )
    report = ReduceReport(
        command=f"reduce --mod {modulus}",
        inputs_digest=inputs_digest(doc),
        results=results,
    )
    if not results.match:
        report = report.model_copy(update={"exit_status": 1})
    return report


def check_bundle(
    doc: TripleDoc,
    y_start: int = -99,
    y_stop: int = 99,
    singular: bool = False,
) -> BundleReport:
    triple = triple_from_doc(doc)
    duality_mode = not (singular or triple.singular)
    d = triple.defect()
    sd = triple.sigma_defect()
    f_poly = chi_y_polynomial(triple.fiber.chi)
    b_poly = chi_y_polynomial(triple.base.chi)
    e_poly = chi_y_polynomial(triple.total.chi)
    rows = []
    failures = 0
    for rep in sweep_checks(
        d,
        sd,
        odd_range(y_start, y_stop),
        duality_mode=duality_mode,
        monodromy_mod4_trivial=triple.monodromy_mod4_trivial,
    ):
        ok = rep.ok
        failures += 0 if ok else 1
        rows.append(
            BundleRow(
                y=rep.y,
                chi_y_total=e_poly(rep.y),
                chi_y_product=f_poly(rep.y) * b_poly(rep.y),
                defect=rep.defect_value,
                defect_mod4=rep.defect_value % 4,
                defect_mod8=rep.defect_value % 8,
                guaranteed_modulus=rep.guaranteed_modulus,
                holds=rep.holds,
                equivalence_checked=rep.equivalence_checked,
                equivalence_holds=rep.equivalence_holds,
                verdict="OK" if ok else "FAIL",
            )
        )
    command = f"check-bundle --y-sweep {y_start}..{y_stop}"
    if singular:
        command += " --singular"
    results = BundleResults(
        fiber=triple.fiber.name,
        total=triple.total.name,
        base=triple.base.name,
        duality_mode=duality_mode,
        monodromy_mod4_trivial=triple.monodromy_mod4_trivial,
        y_start=y_start,
        y_stop=y_stop,
        defect_poly=str(d),
        sigma_defect=sd,
        rows=rows,
        failures=failures,
    )
    return BundleReport(
        command=command,
        inputs_digest=inputs_digest(doc),
        exit_status=1 if failures else 0,
        results=results,
    )


def compute_arf(doc: FormDoc) -> ArfReport:
    space = form_space_from_doc(doc)
    if doc.h is None:
        raise DocumentError("form document needs the 'h' value list for arf")
    try:
        form = Z2QuadraticForm(space, tuple(doc.h))
    except ValueError as exc:
        raise DocumentError(f"form: {exc}") from exc
    if not space.nonsingular:
        raise DocumentError("arf needs a nonsingular pairing")
    results = ArfResults(dim=space.dim, arf=arf(form))
    return ArfReport(
        command="arf", inputs_digest=inputs_digest(doc), results=results
    )


def compute_brown(doc: FormDoc) -> BrownReport:
    space = form_space_from_doc(doc)
    if doc.q is None:
        raise DocumentError("form document needs the 'q' value list for brown")
    try:
        form = Z4QuadraticForm(space, tuple(doc.q))
    except ValueError as exc:
        raise DocumentError(f"form: {exc}") from exc
    if not space.nonsingular:
        raise DocumentError("brown needs a nonsingular pairing")
    c0, c1, c2, c3 = form.distribution()
    results = BrownResults(
        dim=space.dim,
        brown=brown_invariant(form),
        gauss_re=c0 - c2,
        gauss_im=c1 - c3,
    )
    return BrownReport(
        command="brown", inputs_digest=inputs_digest(doc), results=results
    )


def run_pipeline(total_doc: LatticeDoc, reference_doc: LatticeDoc) -> PipelineReport:
    total = lattice_from_doc(total_doc)
    reference = lattice_from_doc(reference_doc)
    for name, lat in (("total", total), ("reference", reference)):
        if not lat.unimodular:
            raise DocumentError(
                f"{name} lattice must be unimodular (determinant {lat.determinant})"
            )
    try:
        res = defect_arf_pipeline(total, reference)
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc
    results = PipelineResults(
        sigma_total=res.sigma_total,
        sigma_reference=res.sigma_reference,
        sigma_defect=res.sigma_defect,
        w_dim=res.space.dim,
        arf=res.arf,
        four_arf_mod8=(4 * res.arf) % 8,
        sigma_defect_mod8=res.sigma_defect % 8,
        consistent=res.consistent,
    )
    return PipelineReport(
        command="pipeline",
        inputs_digest=inputs_digest(total_doc, reference_doc),
        exit_status=0 if res.consistent else 1,
        results=results,
    )


def _catalog_entry(model: ManifoldModel) -> CatalogEntry:
    s = specialize(model.chi)
    return CatalogEntry(
        name=model.name,
        n=model.n,
        chi=list(model.chi.values),
        chi_y=str(chi_y_polynomial(model.chi)),
        euler=s.euler,
        todd=s.todd,
        signature=s.signature,
        has_hodge=model.hodge is not None,
        has_chern=model.chern is not None,
        has_lattice=model.lattice is not None,
        singular=model.singular,
    )


def catalog_report() -> CatalogReport:
    entries = [_catalog_entry(m) for m in builtin_catalog()]
    return CatalogReport(
        command="catalog",
        inputs_digest=inputs_digest(),
        results=CatalogResults(entries=entries),
    )


def selftest_report() -> SelftestReport:
    suites = [
        SelftestSuite(name=name, ok=ok, detail=detail)
        for name, ok, detail in run_selftests()
    ]
    passed = sum(1 for s in suites if s.ok)
    failed = len(suites) - passed
    return SelftestReport(
        command="selftest",
        inputs_digest=inputs_digest(),
        exit_status=0 if failed == 0 else 1,
        results=SelftestResults(suites=suites, passed=passed, failed=failed),
    )


# ----------------------------------------------------------- HTTP layer

app = FastAPI(title="genuslab", version="0.1.0")


@app.exception_handler(DocumentError)
async def _document_error(_request: Request, exc: DocumentError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc)})


def _report_response(report: ReportBase) -> Response:
    return Response(content=report_json(report), media_type="application/json")


def _expect(doc, doc_type):
    if not isinstance(doc, doc_type):
        raise DocumentError(
            f"expected a {doc_type.model_fields['schema_version'].default} document"
        )
    return doc


async def _body_document(request: Request):
    return parse_document((await request.body()).decode("utf-8"))


@app.post("/v1/genus")
async def genus_endpoint(request: Request) -> Response:
    doc = _expect(await _body_document(request), ManifoldDoc)
    return _report_response(compute_genus(doc))


@app.post("/v1/reduce")
async def reduce_endpoint(
    request: Request, mod: str = Query("1-y2", pattern="^(1-y2|y-y3)$")
) -> Response:
    doc = _expect(await _body_document(request), ManifoldDoc)
    return _report_response(compute_reduce(doc, mod))


@app.post("/v1/check-bundle")
async def check_bundle_endpoint(
    request: Request,
    y_start: int = Query(-99),
    y_stop: int = Query(99),
    singular: bool = Query(False),
) -> Response:
    doc = _expect(await _body_document(request), TripleDoc)
    return _report_response(check_bundle(doc, y_start, y_stop, singular))


@app.post("/v1/arf")
async def arf_endpoint(request: Request) -> Response:
    doc = _expect(await _body_document(request), FormDoc)
    return _report_response(compute_arf(doc))


@app.post("/v1/brown")
async def brown_endpoint(request: Request) -> Response:
    doc = _expect(await _body_document(request), FormDoc)
    return _report_response(compute_brown(doc))


class PipelineRequest(StrictModel):
    total: LatticeDoc
    reference: LatticeDoc


@app.post("/v1/pipeline")
async def pipeline_endpoint(request: Request) -> Response:
    try:
        req = PipelineRequest.model_validate_json(await request.body())
    except Exception as exc:
        raise DocumentError(f"pipeline request: {exc}") from exc
    return _report_response(run_pipeline(req.total, req.reference))


@app.get("/v1/catalog")
async def catalog_endpoint() -> Response:
    return _report_response(catalog_report())


@app.get("/v1/selftest")
async def selftest_endpoint() -> Response:
    return _report_response(selftest_report())


@app.get("/health")
async def health() -> dict:
    return {"status": "ok"}
