"""Bit-exact JSON interchange for algebra instances and named extension data.

Scalars are strings "num/den" over the rationals and plain integers over a
prime field; matrices are column-major dense lists; 3-index structure
constants are sparse [i, j, k, scalar] rows.  Emission is deterministic
(sorted rows), so emit(parse(f)) re-parses to structurally equal objects.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

from .bialgebra import Algebra, Coalgebra, TensorElement, WeakBialgebra, WeakHopfAlgebra
from .errors import ParseError
from .fields import Field
from .linalg import Matrix, Vector


@dataclass
class SpecBundle:
    """A parsed instance plus its named elements, functionals and maps."""

    field: Field
    wb: WeakBialgebra
    elements: dict = dc_field(default_factory=dict)
    functionals: dict = dc_field(default_factory=dict)
    maps: dict = dc_field(default_factory=dict)
    name: str | None = None

    @property
    def has_antipode(self):
        return isinstance(self.wb, WeakHopfAlgebra)


def _parse_scalar(field, value, where):
    try:
        return field.parse(value)
    except ParseError as exc:
        raise ParseError(str(exc), where) from exc


def _parse_vector(field, values, dim, where):
    if not isinstance(values, list) or len(values) != dim:
        raise ParseError(f"expected a dense list of {dim} scalars", where)
    return Vector.from_list(field, [_parse_scalar(field, v, f"{where}[{i}]")
                                    for i, v in enumerate(values)])


def _parse_matrix(field, columns, dim, where):
    if not isinstance(columns, list) or len(columns) != dim:
        raise ParseError(f"expected {dim} columns", where)
    cols = [_parse_vector(field, col, dim, f"{where}[{j}]") for j, col in enumerate(columns)]
    return Matrix.from_columns(field, dim, cols)


def _parse_triples(field, rows, dim, where):
    out = []
    if not isinstance(rows, list):
        raise ParseError("expected a list of [i, j, k, scalar] rows", where)
    for pos, row in enumerate(rows):
        if not (isinstance(row, list) and len(row) == 4):
            raise ParseError("expected [i, j, k, scalar]", f"{where}[{pos}]")
        i, j, k, c = row
        for idx in (i, j, k):
            if not isinstance(idx, int) or not 0 <= idx < dim:
                raise ParseError(f"index {idx} out of range", f"{where}[{pos}]")
        out.append((i, j, k, _parse_scalar(field, c, f"{where}[{pos}]")))
    return out


def parse_spec(source, validate=True) -> SpecBundle:
    """Parse a spec file (path, JSON text, or dict) into validated objects.

    With validate=False the structures are built without axiom checks, so
    deliberately broken files can be diagnosed by the report functions.
    """
    if isinstance(source, dict):
        doc = source
    else:
        text = None
        try:
            with open(source, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError:
            if isinstance(source, str) and source.lstrip().startswith("{"):
                text = source
            else:
                raise ParseError(f"cannot read spec file {source!r}")
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", f"offset {exc.pos}") from exc
    if not isinstance(doc, dict):
        raise ParseError("spec document must be a JSON object")

    for key in ("field", "dim", "basis", "mult", "unit", "comult", "counit"):
        if key not in doc:
            raise ParseError(f"missing required key {key!r}")
    field = Field.from_json(doc["field"])
    dim = doc["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise ParseError("dim must be a positive integer", "dim")
    basis = doc["basis"]
    if not (isinstance(basis, list) and len(basis) == dim
            and all(isinstance(b, str) for b in basis)):
        raise ParseError(f"basis must list {dim} labels", "basis")

    mult = {}
    for (i, j, k, c) in _parse_triples(field, doc["mult"], dim, "mult"):
        vec = mult.setdefault((i, j), {})
        vec[k] = vec.get(k, field.zero()) + c
    mult = {ij: Vector(field, dim, data) for ij, data in mult.items()}
    unit = _parse_vector(field, doc["unit"], dim, "unit")
    algebra = Algebra(field, dim, mult, unit, basis, validate=validate)

    comult = {}
    for (i, j, k, c) in _parse_triples(field, doc["comult"], dim, "comult"):
        slot = comult.setdefault(k, {})
        slot[(i, j)] = slot.get((i, j), field.zero()) + c
    comult = {k: TensorElement(field, dim, dim, data) for k, data in comult.items()}
    counit = _parse_vector(field, doc["counit"], dim, "counit")
    coalgebra = Coalgebra(field, dim, comult, counit, validate=validate)

    if "antipode" in doc and doc["antipode"] is not None:
        antipode = _parse_matrix(field, doc["antipode"], dim, "antipode")
        wb = WeakHopfAlgebra(algebra, coalgebra, antipode, validate=validate)
    else:
        wb = WeakBialgebra(algebra, coalgebra, validate=validate)

    def named(section, parser):
        out = {}
        d = doc.get(section) or {}
        if not isinstance(d, dict):
            raise ParseError("expected a name -> value object", section)
        for name, value in d.items():
            out[name] = parser(field, value, dim, f"{section}.{name}")
        return out

    return SpecBundle(field=field, wb=wb,
                      elements=named("elements", _parse_vector),
                      functionals=named("functionals", _parse_vector),
                      maps=named("maps", _parse_matrix),
                      name=doc.get("name"))


def _emit_vector(field, v: Vector):
    return [field.format(c) for c in v.to_list()]


def _emit_matrix(field, m: Matrix):
    return [_emit_vector(field, col) for col in m.columns()]


def emit_spec(bundle: SpecBundle) -> dict:
    """Serialize a bundle to a JSON-ready dict (deterministic row order)."""
    field = bundle.field
    wb = bundle.wb
    mult_rows = []
    for (i, j), vec in sorted(wb.algebra.mult.items()):
        for k, c in vec.items():
            mult_rows.append([i, j, k, field.format(c)])
    comult_rows = []
    for k in range(wb.dim):
        for (i, j), c in wb.coalgebra.coproduct_of_basis(k).items():
            comult_rows.append([i, j, k, field.format(c)])
    doc = {
        "name": bundle.name,
        "field": field.to_json(),
        "dim": wb.dim,
        "basis": list(wb.labels),
        "mult": mult_rows,
        "unit": _emit_vector(field, wb.unit),
        "comult": comult_rows,
        "counit": _emit_vector(field, wb.counit),
    }
    if isinstance(wb, WeakHopfAlgebra):
        doc["antipode"] = _emit_matrix(field, wb.antipode)
    if bundle.elements:
        doc["elements"] = {k: _emit_vector(field, v) for k, v in sorted(bundle.elements.items())}
    if bundle.functionals:
        doc["functionals"] = {k: _emit_vector(field, v) for k, v in sorted(bundle.functionals.items())}
    if bundle.maps:
        doc["maps"] = {k: _emit_matrix(field, m) for k, m in sorted(bundle.maps.items())}
    if doc["name"] is None:
        del doc["name"]
    return doc


def write_spec(bundle: SpecBundle, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(emit_spec(bundle), fh, indent=2)
        fh.write("\n")


def spec_text(bundle: SpecBundle) -> str:
    return json.dumps(emit_spec(bundle), indent=2)
