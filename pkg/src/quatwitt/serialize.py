"""JSON (de)serialization of forms, mixed classes and invariants.

Schemas:
  QuadForm            {"diag": ["1", "-2", ...]}
  AntiHermForm        {"herm_diag": [["0","1","0","0"], ...]}
  MixedClass          {"even": QuadForm, "odd": AntiHermForm}
  FunctionFieldForm   {"entries": [{"unit": "3", "factors":
                        [{"poly": ["0","1"], "exp": 1, "irreducible": true}]}]}
  LambdaInvariant     {"r": 1, "coeffs": [MixedClass, ...]}

parse_input dispatches on the top-level key; SchemaViolation errors carry a
JSON-pointer to the offending spot.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Optional

from . import polys as P
from .errors import SchemaViolation
from .fields import QQ, FieldSpec
from .funcfield import FFEntry, FunctionFieldForm, ff_entry
from .hermitian import AntiHermForm
from .invariants import LambdaInvariant
from .mixed import MixedClass, mixed
from .quadforms import QuadForm, qf, witt_class
from .quaternions import QuatAlgebra, Quaternion


def _frac(raw, ptr: str) -> Fraction:
    try:
        return Fraction(str(raw))
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaViolation(f"not a rational number: {raw!r}", ptr) from exc


def _nonzero_frac(raw, ptr: str) -> Fraction:
    x = _frac(raw, ptr)
    if x == 0:
        raise SchemaViolation("entry must be nonzero", ptr)
    return x


def parse_quadform(doc: dict, field: FieldSpec = QQ, ptr: str = "") -> QuadForm:
    diag = doc.get("diag")
    if not isinstance(diag, list):
        raise SchemaViolation('expected {"diag": [...]}', ptr + "/diag")
    vals = [_nonzero_frac(v, f"{ptr}/diag/{i}") for i, v in enumerate(diag)]
    return qf(vals, field)


def parse_quaternion(coords, A: QuatAlgebra, ptr: str) -> Quaternion:
    if not isinstance(coords, list) or len(coords) != 4:
        raise SchemaViolation("quaternion needs 4 coordinates", ptr)
    cs = [_frac(c, f"{ptr}/{i}") for i, c in enumerate(coords)]
    return A.element(*cs)


def parse_hermform(doc: dict, A: QuatAlgebra, ptr: str = "") -> AntiHermForm:
    diag = doc.get("herm_diag")
    if not isinstance(diag, list):
        raise SchemaViolation('expected {"herm_diag": [...]}', ptr + "/herm_diag")
    entries = [
        parse_quaternion(c, A, f"{ptr}/herm_diag/{i}") for i, c in enumerate(diag)
    ]
    from .errors import NotPureInvertible

    try:
        return AntiHermForm(tuple(entries), A)
    except NotPureInvertible as exc:
        raise SchemaViolation(str(exc), ptr + "/herm_diag") from exc


def parse_mixed(doc: dict, A: QuatAlgebra, ptr: str = "") -> MixedClass:
    even_doc = doc.get("even", {"diag": []})
    if isinstance(even_doc, list):  # shorthand: bare diagonal
        even_doc = {"diag": even_doc}
    if not isinstance(even_doc, dict):
        raise SchemaViolation("even part must be an object or list",
                              ptr + "/even")
    odd_doc = doc.get("odd", {"herm_diag": []})
    if isinstance(odd_doc, list):  # shorthand: bare coordinate rows
        odd_doc = {"herm_diag": odd_doc}
    if not isinstance(odd_doc, dict):
        raise SchemaViolation("odd part must be an object or list",
                              ptr + "/odd")
    even = witt_class(parse_quadform(even_doc, QQ, ptr + "/even"))
    odd = parse_hermform(odd_doc, A, ptr + "/odd")
    return MixedClass(even, odd, A)


def parse_ffform(doc: dict, ptr: str = "") -> FunctionFieldForm:
    raw = doc.get("entries")
    if not isinstance(raw, list):
        raise SchemaViolation('expected {"entries": [...]}', ptr + "/entries")
    entries = []
    for i, e in enumerate(raw):
        eptr = f"{ptr}/entries/{i}"
        if isinstance(e, (str, int)):  # shorthand: constant entry
            entries.append(ff_entry(_nonzero_frac(e, eptr)))
            continue
        if isinstance(e, list):  # shorthand: polynomial coefficients
            coeffs = [_frac(c, f"{eptr}/{j}") for j, c in enumerate(e)]
            if not any(coeffs):
                raise SchemaViolation("entry must be nonzero", eptr)
            entries.append(ff_entry(coeffs))
            continue
        if not isinstance(e, dict):
            raise SchemaViolation("entry must be an object or list", eptr)
        unit = _nonzero_frac(e.get("unit", "1"), eptr + "/unit")
        factors = []
        for k, f in enumerate(e.get("factors", [])):
            fptr = f"{eptr}/factors/{k}"
            coeffs = f.get("poly")
            if not isinstance(coeffs, list) or not coeffs:
                raise SchemaViolation("factor needs poly coefficients",
                                      fptr + "/poly")
            pol = P.poly([_frac(c, f"{fptr}/poly/{j}")
                          for j, c in enumerate(coeffs)])
            if P.degree(pol) < 1:
                raise SchemaViolation("factor must be non-constant",
                                      fptr + "/poly")
            pol = P.monic(pol)
            if not f.get("irreducible"):
                raise SchemaViolation("factor lacks irreducibility flag",
                                      fptr + "/irreducible")
            if not P.is_irreducible(pol):
                raise SchemaViolation("factor is not irreducible",
                                      fptr + "/poly")
            exp = f.get("exp", 1)
            if not isinstance(exp, int) or exp < 1:
                raise SchemaViolation("exponent must be a positive integer",
                                      fptr + "/exp")
            if exp % 2:
                factors.append((pol, 1))
        entries.append(FFEntry(unit, tuple(sorted(factors))))
    return FunctionFieldForm(tuple(entries))


def parse_invariant(doc: dict, A: QuatAlgebra, ptr: str = "") -> LambdaInvariant:
    r = doc.get("r")
    if not isinstance(r, int) or r < 1:
        raise SchemaViolation("r must be a positive integer", ptr + "/r")
    coeffs = doc.get("coeffs")
    if not isinstance(coeffs, list) or len(coeffs) != 2 * r + 1:
        raise SchemaViolation(f"need exactly {2 * r + 1} coefficients",
                              ptr + "/coeffs")
    parsed = [parse_mixed(c, A, f"{ptr}/coeffs/{i}")
              for i, c in enumerate(coeffs)]
    return LambdaInvariant(r, tuple(parsed))


def parse_input(doc, algebra: Optional[QuatAlgebra] = None,
                field: FieldSpec = QQ):
    """Dispatch on the document shape; strings are parsed as JSON first."""
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise SchemaViolation(f"invalid JSON: {exc}", "") from exc
    if not isinstance(doc, dict):
        raise SchemaViolation("top-level value must be an object", "")
    if "diag" in doc:
        return parse_quadform(doc, field)
    if "herm_diag" in doc:
        if algebra is None:
            raise SchemaViolation("hermitian input needs a quaternion algebra", "")
        return parse_hermform(doc, algebra)
    if "even" in doc or "odd" in doc:
        if algebra is None:
            raise SchemaViolation("mixed input needs a quaternion algebra", "")
        return parse_mixed(doc, algebra)
    if "entries" in doc:
        return parse_ffform(doc)
    if "r" in doc and "coeffs" in doc:
        if algebra is None:
            raise SchemaViolation("invariant input needs a quaternion algebra", "")
        return parse_invariant(doc, algebra)
    raise SchemaViolation("unrecognized document shape", "")


# ---------------------------------------------------------------------------
# serialization


def serialize(obj) -> dict:
    if isinstance(obj, QuadForm):
        return {"diag": [str(r) for r in obj.reps()]}
    if isinstance(obj, AntiHermForm):
        return {
            "herm_diag": [[str(c) for c in z.coords] for z in obj.diag]
        }
    if isinstance(obj, MixedClass):
        return {
            "even": serialize(obj.even.anis),
            "odd": serialize(obj.odd),
        }
    if isinstance(obj, FunctionFieldForm):
        return {
            "entries": [
                {
                    "unit": str(e.unit),
                    "factors": [
                        {
                            "poly": [str(c) for c in f],
                            "exp": ex,
                            "irreducible": True,
                        }
                        for f, ex in e.factors
                    ],
                }
                for e in obj.entries
            ]
        }
    if isinstance(obj, LambdaInvariant):
        return {"r": obj.r, "coeffs": [serialize(c) for c in obj.coeffs]}
    raise TypeError(f"cannot serialize {type(obj).__name__}")
