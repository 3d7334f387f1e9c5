"""Named manifold models, fiber-bundle triples, and JSON ingestion.

A model bundles a chi-vector with whatever richer data is available
(Hodge matrix, Chern numbers, middle intersection lattice); validation
recomputes every derivable quantity and cross-checks.  Triples are
synthesized at the chi-vector level: the congruence theorems constrain
only that arithmetic, so the generator enforces exactly the necessary
invariants (duality of the total space, Euler multiplicativity, a
signature defect of exactly 4t) and nothing more.  Whether a generated
vector is realized by an honest algebraic bundle is not claimed; the
provenance field says "generated" to keep that caveat visible.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from random import Random
from typing import Optional, Union

from .congruence import defect as defect_poly
from .congruence import sigma_defect
from .genus import (
    ChernData,
    ChiVector,
    HodgeDiamond,
    check_duality,
    chi_vector_from_hodge,
    chi_y_polynomial,
    genus_from_chern,
    product_chern,
    product_chi_vector,
    product_hodge,
    projective_space_fixture,
    specialize,
)
from .schemas import FormDoc, LatticeDoc, ManifoldDoc, TripleDoc
from .z2forms import (
    IntegralLattice,
    Z2BilinearSpace,
    direct_sum_lattice,
    diagonal_lattice,
    e8_lattice,
    hyperbolic_lattice,
    lattice_signature,
)


class DocumentError(ValueError):
    """Input documents that parse but violate an invariant."""


@dataclass(frozen=True)
class ManifoldModel:
    name: str
    n: int
    chi: ChiVector
    hodge: Optional[HodgeDiamond] = None
    chern: Optional[ChernData] = None
    lattice: Optional[IntegralLattice] = None
    singular: bool = False

    def validate(self) -> "ManifoldModel":
        if self.chi.n != self.n:
            raise DocumentError(
                f"{self.name}: chi-vector has {self.chi.n + 1} entries, need {self.n + 1}"
            )
        if not self.singular and not check_duality(self.chi):
            raise DocumentError(
                f"{self.name}: chi-vector breaks duality and the model is not "
                "flagged singular"
            )
        if self.hodge is not None:
            if self.hodge.n != self.n:
                raise DocumentError(f"{self.name}: hodge matrix is not {self.n + 1} square")
            derived = chi_vector_from_hodge(self.hodge)
            for p, (got, want) in enumerate(zip(self.chi.values, derived.values)):
                if got != want:
                    raise DocumentError(
                        f"{self.name}: chi[{p}] = {got} but the hodge matrix gives "
                        f"{want} at p={p}"
                    )
        if self.chern is not None:
            if self.chern.n != self.n:
                raise DocumentError(f"{self.name}: chern data is for dimension {self.chern.n}")
            try:
                via_chern = genus_from_chern(self.chern)
            except ValueError as exc:
                raise DocumentError(f"{self.name}: {exc}") from exc
            if via_chern != chi_y_polynomial(self.chi):
                raise DocumentError(
                    f"{self.name}: chern numbers give {via_chern}, chi-vector gives "
                    f"{chi_y_polynomial(self.chi)}"
                )
        if self.lattice is not None:
            if not self.lattice.unimodular:
                raise DocumentError(
                    f"{self.name}: intersection lattice must be unimodular "
                    f"(determinant {self.lattice.determinant})"
                )
            sig = lattice_signature(self.lattice)
            if sig != specialize(self.chi).signature:
                raise DocumentError(
                    f"{self.name}: lattice signature {sig} does not match "
                    f"chi-vector signature {specialize(self.chi).signature}"
                )
        return self


@dataclass(frozen=True)
class BundleTriple:
    fiber: ManifoldModel
    total: ManifoldModel
    base: ManifoldModel
    monodromy_mod4_trivial: bool = False
    provenance: str = "user"

    @property
    def singular(self) -> bool:
        return self.fiber.singular or self.total.singular or self.base.singular

    def validate(self) -> "BundleTriple":
        for part in (self.fiber, self.total, self.base):
            part.validate()
        if self.total.n != self.fiber.n + self.base.n:
            raise DocumentError(
                f"dimension mismatch: total {self.total.n} != fiber {self.fiber.n} "
                f"+ base {self.base.n}"
            )
        e = specialize(self.total.chi).euler
        f = specialize(self.fiber.chi).euler
        b = specialize(self.base.chi).euler
        if e != f * b:
            raise DocumentError(
                f"Euler characteristic is not multiplicative: {e} != {f} * {b}"
            )
        return self

    def defect(self):
        return defect_poly(self.total.chi, self.fiber.chi, self.base.chi)

    def sigma_defect(self) -> int:
        return sigma_defect(self.total.chi, self.fiber.chi, self.base.chi)


def _curve(name: str, genus: int) -> ManifoldModel:
    hodge = HodgeDiamond(1, ((1, genus), (genus, 1)))
    return ManifoldModel(
        name=name,
        n=1,
        chi=chi_vector_from_hodge(hodge),
        hodge=hodge,
        chern=ChernData(1, {(1,): 2 - 2 * genus}),
    )


def _projective(name: str, n: int, lattice=None) -> ManifoldModel:
    hodge, chern = projective_space_fixture(n)
    return ManifoldModel(
        name=name,
        n=n,
        chi=chi_vector_from_hodge(hodge),
        hodge=hodge,
        chern=chern,
        lattice=lattice,
    )


def _product(name: str, a: ManifoldModel, b: ManifoldModel, lattice=None) -> ManifoldModel:
    return ManifoldModel(
        name=name,
        n=a.n + b.n,
        chi=product_chi_vector(a.chi, b.chi),
        hodge=product_hodge(a.hodge, b.hodge),
        chern=product_chern(a.chern, b.chern),
        lattice=lattice,
    )


def k3_lattice() -> IntegralLattice:
    """Three hyperbolic planes plus two negative E8 blocks (dim 22, sig -16)."""
    return direct_sum_lattice(hyperbolic_lattice(3), e8_lattice(-1), e8_lattice(-1))


@lru_cache(maxsize=1)
def builtin_catalog() -> tuple[ManifoldModel, ...]:
    point = ManifoldModel(
        name="point",
        n=0,
        chi=ChiVector(0, (1,)),
        hodge=HodgeDiamond(0, ((1,),)),
        chern=ChernData(0, {}),
    )
    p1 = _projective("p1", 1)
    p2 = _projective("p2", 2, lattice=diagonal_lattice([1]))
    p3 = _projective("p3", 3)
    p4 = _projective("p4", 4, lattice=diagonal_lattice([1]))
    elliptic = _curve("elliptic", 1)
    curve_g2 = _curve("curve_g2", 2)
    curve_g3 = _curve("curve_g3", 3)
    k3 = ManifoldModel(
        name="k3",
        n=2,
        chi=ChiVector(2, (2, -20, 2)),
        hodge=HodgeDiamond(2, ((1, 0, 1), (0, 20, 0), (1, 0, 1))),
        chern=ChernData(2, {(2,): 24, (1, 1): 0}),
        lattice=k3_lattice(),
    )
    # middle intersection form of p2 x p2 on (a^2, ab, b^2): off-diagonal pairing
    p2xp2_lattice = IntegralLattice(3, ((0, 0, 1), (0, 1, 0), (1, 0, 0)))
    entries = (
        point,
        p1,
        p2,
        p3,
        p4,
        elliptic,
        curve_g2,
        curve_g3,
        k3,
        _product("p1xp1", p1, p1, lattice=hyperbolic_lattice()),
        _product("p1xp2", p1, p2),
        _product("p1xp3", p1, p3),
        _product("p2xp2", p2, p2, lattice=p2xp2_lattice),
        _product("p1xk3", p1, k3),
        _product("p2xk3", p2, k3),
        _product("ellipticxp1", elliptic, p1),
        _product("ellipticxp2", elliptic, p2),
        _product("ellipticxelliptic", elliptic, elliptic),
        _product("curve_g2xp1", curve_g2, p1),
        _product("k3xk3", k3, k3),
    )
    for entry in entries:
        entry.validate()
    return entries


def catalog_lookup(name: str) -> ManifoldModel:
    for entry in builtin_catalog():
        if entry.name == name:
            return entry
    raise DocumentError(f"unknown catalog model {name!r}")


def generate_triple(
    fiber: ManifoldModel,
    base: ManifoldModel,
    t: int,
    seed: int,
    monodromy_mod4_trivial: bool = False,
) -> BundleTriple:
    """Synthesize a total space with signature defect exactly 4t.

    Starts from the product chi-vector and applies |t| defect moves, each
    bumping a duality-symmetric pair of entries at an even index and at an
    odd index with the same sign: the Euler characteristic is untouched
    while the signature moves by 4 per step.  Needs an even total
    dimension >= 2 when t != 0 (an odd index must exist below it).
    """
    if fiber.singular or base.singular:
        raise ValueError("generator needs non-singular fiber and base")
    n = fiber.n + base.n
    chi = list(product_chi_vector(fiber.chi, base.chi).values)
    if t != 0:
        if n % 2 or n < 2:
            raise ValueError(
                f"defect moves need an even total dimension >= 2, got {n}"
            )
        rng = Random(seed)
        sign = 1 if t > 0 else -1
        evens = list(range(0, n // 2 + 1, 2))
        odds = list(range(1, n // 2 + 1, 2))
        for _ in range(abs(t)):
            for p in (rng.choice(evens), rng.choice(odds)):
                if p == n - p:
                    chi[p] += 2 * sign
                else:
                    chi[p] += sign
                    chi[n - p] += sign
    total = ManifoldModel(
        name=f"bundle_{fiber.name}_{base.name}_t{t}_s{seed}",
        n=n,
        chi=ChiVector(n, tuple(chi)),
    )
    triple = BundleTriple(
        fiber=fiber,
        total=total,
        base=base,
        monodromy_mod4_trivial=monodromy_mod4_trivial,
        provenance="generated",
    )
    return triple.validate()


# ------------------------------------------------------- doc conversion


def _partition_key(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise DocumentError(f"bad partition key {text!r}") from exc
    if parts != tuple(sorted(parts, reverse=True)) or any(p < 1 for p in parts):
        raise DocumentError(f"partition key must be descending positive parts: {text!r}")
    return parts


def _partition_text(key: tuple[int, ...]) -> str:
    return ",".join(str(p) for p in key)


def manifold_from_doc(doc: ManifoldDoc) -> ManifoldModel:
    try:
        chi = ChiVector(doc.n, tuple(doc.chi))
        hodge = HodgeDiamond(doc.n, tuple(tuple(r) for r in doc.hodge)) if doc.hodge else None
        chern = (
            ChernData(doc.n, {_partition_key(k): v for k, v in doc.chern.items()})
            if doc.chern is not None
            else None
        )
        lattice = (
            IntegralLattice(len(doc.lattice), tuple(tuple(r) for r in doc.lattice))
            if doc.lattice
            else None
        )
    except ValueError as exc:
        raise DocumentError(f"{doc.name}: {exc}") from exc
    model = ManifoldModel(
        name=doc.name,
        n=doc.n,
        chi=chi,
        hodge=hodge,
        chern=chern,
        lattice=lattice,
        singular=doc.singular,
    )
    return model.validate()


def manifold_to_doc(model: ManifoldModel) -> ManifoldDoc:
    return ManifoldDoc(
        name=model.name,
        n=model.n,
        chi=list(model.chi.values),
        hodge=[list(r) for r in model.hodge.rows] if model.hodge else None,
        chern=(
            {_partition_text(k): v for k, v in sorted(model.chern.numbers.items())}
            if model.chern is not None
            else None
        ),
        lattice=[list(r) for r in model.lattice.gram] if model.lattice else None,
        singular=model.singular,
    )


def _resolve_part(part: Union[str, ManifoldDoc]) -> ManifoldModel:
    if isinstance(part, str):
        return catalog_lookup(part)
    return manifold_from_doc(part)


def triple_from_doc(doc: TripleDoc) -> BundleTriple:
    triple = BundleTriple(
        fiber=_resolve_part(doc.fiber),
        total=_resolve_part(doc.total),
        base=_resolve_part(doc.base),
        monodromy_mod4_trivial=doc.monodromy_mod4_trivial,
    )
    return triple.validate()


def triple_to_doc(triple: BundleTriple) -> TripleDoc:
    return TripleDoc(
        fiber=manifold_to_doc(triple.fiber),
        total=manifold_to_doc(triple.total),
        base=manifold_to_doc(triple.base),
        monodromy_mod4_trivial=triple.monodromy_mod4_trivial,
    )


def lattice_from_doc(doc: LatticeDoc) -> IntegralLattice:
    try:
        return IntegralLattice(len(doc.gram), tuple(tuple(r) for r in doc.gram))
    except ValueError as exc:
        raise DocumentError(f"lattice: {exc}") from exc


def form_space_from_doc(doc: FormDoc) -> Z2BilinearSpace:
    for row in doc.gram:
        for v in row:
            if v not in (0, 1):
                raise DocumentError("form gram entries must be 0 or 1")
    try:
        return Z2BilinearSpace.from_matrix(doc.gram)
    except ValueError as exc:
        raise DocumentError(f"form: {exc}") from exc


_SCHEMA_TYPES = {
    "genuslab/manifold/1": ManifoldDoc,
    "genuslab/triple/1": TripleDoc,
    "genuslab/lattice/1": LatticeDoc,
    "genuslab/form/1": FormDoc,
}


def parse_document(text: str):
    """Parse a JSON document into the typed doc its schema field names."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise DocumentError("document must be a JSON object")
    schema = raw.get("schema")
    doc_type = _SCHEMA_TYPES.get(schema)
    if doc_type is None:
        raise DocumentError(f"unknown or missing schema field: {schema!r}")
    try:
        return doc_type.model_validate(raw)
    except Exception as exc:
        raise DocumentError(f"document does not match {schema}: {exc}") from exc


def load_document(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from exc
    return parse_document(text)


def load_models(path: str):
    """Load and fully validate: returns the domain object for the file."""
    return validate(load_document(path))


def validate(document):
    if isinstance(document, ManifoldDoc):
        return manifold_from_doc(document)
    if isinstance(document, TripleDoc):
        return triple_from_doc(document)
    if isinstance(document, LatticeDoc):
        return lattice_from_doc(document)
    if isinstance(document, FormDoc):
        return form_space_from_doc(document)
    raise DocumentError(f"unsupported document type {type(document).__name__}")
