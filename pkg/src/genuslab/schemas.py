"""Wire formats: JSON documents in, JSON reports out.

Pydantic models define both the file formats and the HTTP payloads, so
the CLI and the service cannot drift apart.  Integers ride as JSON
numbers up to the 53-bit safe range and as decimal strings beyond it,
preserving exactness for consumers that parse into doubles.
"""
from __future__ import annotations

from typing import Annotated, Literal, Optional, Union

from pydantic import BaseModel, BeforeValidator, ConfigDict, Field, PlainSerializer

MAX_SAFE_INT = (1 << 53) - 1


def _parse_exact_int(v):
    if isinstance(v, bool):
        raise ValueError("booleans are not integers")
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        body = v[1:] if v[:1] in "+-" else v
        if body.isdigit():
            return int(v)
    raise ValueError(f"expected an integer or integer string, got {v!r}")


def _emit_exact_int(v: int):
    return v if abs(v) <= MAX_SAFE_INT else str(v)


BigInt = Annotated[
    int,
    BeforeValidator(_parse_exact_int),
    PlainSerializer(_emit_exact_int, when_used="json"),
]


class StrictModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True, extra="forbid")


class ManifoldDoc(StrictModel):
    schema_version: Literal["genuslab/manifold/1"] = Field(
        "genuslab/manifold/1", alias="schema"
    )
    name: str
    n: int = Field(ge=0)
    chi: list[BigInt]
    hodge: Optional[list[list[int]]] = None
    chern: Optional[dict[str, BigInt]] = None
    lattice: Optional[list[list[BigInt]]] = None
    singular: bool = False


class TripleDoc(StrictModel):
    schema_version: Literal["genuslab/triple/1"] = Field(
        "genuslab/triple/1", alias="schema"
    )
    fiber: Union[str, ManifoldDoc] = Field(alias="F")
    total: Union[str, ManifoldDoc] = Field(alias="E")
    base: Union[str, ManifoldDoc] = Field(alias="B")
    monodromy_mod4_trivial: bool = False


class LatticeDoc(StrictModel):
    schema_version: Literal["genuslab/lattice/1"] = Field(
        "genuslab/lattice/1", alias="schema"
    )
    gram: list[list[BigInt]]


class FormDoc(StrictModel):
    """Mod-2 pairing with an optional Z/2 enhancement h or Z/4 refinement q."""

    schema_version: Literal["genuslab/form/1"] = Field(
        "genuslab/form/1", alias="schema"
    )
    gram: list[list[int]]
    h: Optional[list[int]] = None
    q: Optional[list[int]] = None


Document = Union[ManifoldDoc, TripleDoc, LatticeDoc, FormDoc]


# ---------------------------------------------------------------- reports


class ReportBase(StrictModel):
    schema_version: Literal["genuslab/report/1"] = Field(
        "genuslab/report/1", alias="schema"
    )
    command: str
    inputs_digest: str
    exit_status: int = 0


class GenusResults(StrictModel):
    name: str
    n: int
    singular: bool
    chi: list[BigInt]
    chi_y: str
    euler: BigInt
    todd: BigInt
    signature: BigInt
    chi_even: BigInt
    chi_odd: BigInt
    duality: bool


class GenusReport(ReportBase):
    results: GenusResults


class ReduceResults(StrictModel):
    name: str
    modulus: str
    chi_y: str
    reduced: str
    reduced_coefficients: list[BigInt]
    canonical: str
    canonical_coefficients: list[BigInt]
    match: bool


class ReduceReport(ReportBase):
    results: ReduceResults


class BundleRow(StrictModel):
    y: int
    chi_y_total: BigInt
    chi_y_product: BigInt
    defect: BigInt
    defect_mod4: int
    defect_mod8: int
    guaranteed_modulus: int
    holds: bool
    equivalence_checked: bool
    equivalence_holds: Optional[bool] = None
    verdict: str


class BundleResults(StrictModel):
    fiber: str
    total: str
    base: str
    duality_mode: bool
    monodromy_mod4_trivial: bool
    y_start: int
    y_stop: int
    defect_poly: str
    sigma_defect: BigInt
    rows: list[BundleRow]
    failures: int


class BundleReport(ReportBase):
    results: BundleResults


class ArfResults(StrictModel):
    dim: int
    arf: int


class ArfReport(ReportBase):
    results: ArfResults


class BrownResults(StrictModel):
    dim: int
    brown: int
    gauss_re: BigInt
    gauss_im: BigInt


class BrownReport(ReportBase):
    results: BrownResults


class PipelineResults(StrictModel):
    sigma_total: BigInt
    sigma_reference: BigInt
    sigma_defect: BigInt
    w_dim: int
    arf: int
    four_arf_mod8: int
    sigma_defect_mod8: int
    consistent: bool


class PipelineReport(ReportBase):
    results: PipelineResults


class CatalogEntry(StrictModel):
    name: str
    n: int
    chi: list[BigInt]
    chi_y: str
    euler: BigInt
    todd: BigInt
    signature: BigInt
    has_hodge: bool
    has_chern: bool
    has_lattice: bool
    singular: bool


class CatalogResults(StrictModel):
    entries: list[CatalogEntry]


class CatalogReport(ReportBase):
    results: CatalogResults


class SelftestSuite(StrictModel):
    name: str
    ok: bool
    detail: str


class SelftestResults(StrictModel):
    suites: list[SelftestSuite]
    passed: int
    failed: int


class SelftestReport(ReportBase):
    results: SelftestResults


AnyReport = Union[
    GenusReport,
    ReduceReport,
    BundleReport,
    ArfReport,
    BrownReport,
    PipelineReport,
    CatalogReport,
    SelftestReport,
]


def report_json(report: ReportBase) -> str:
    """Canonical machine rendering: indented, aliased, deterministic."""
    return report.model_dump_json(by_alias=True, indent=2)


def document_json(doc: StrictModel) -> str:
    return doc.model_dump_json(by_alias=True, indent=2)


def compact_json(doc: StrictModel) -> str:
    return doc.model_dump_json(by_alias=True)
