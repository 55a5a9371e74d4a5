"""
Canonical JSON documents.

Every document carries ``"type"`` and ``"version"``.  Rationals are strings
``"p/q"`` in lowest terms (``"3"`` for integers), keys are sorted and there is
no insignificant whitespace, so two values are structurally equal exactly when
their encodings are byte-identical.
"""

from __future__ import annotations

import json
from fractions import Fraction

import jsonschema

from .cacti import Cactus, Lobe, cactus, canonical_cactus
from .chains import Affine, Cell, CellwiseFamily, Interval, ParamDomain, Triangle
from .circle import ExtClass
from .core import ArcFamily, Region, canonical, ensure_valid, parse_side, side_name
from .loop import CircleConfiguration, Identification, configuration_violations, normalized
from .twisted import TwistedElement

VERSION = 1


class DocumentError(ValueError):
    """A document that does not decode; ``path`` locates the offending field."""

    def __init__(self, path, message):
        self.path = path
        super().__init__("%s: %s" % (path or "$", message))


# ---------------------------------------------------------------------------
# rationals

def qstr(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)


def parse_q(s, path) -> Fraction:
    if not isinstance(s, str):
        raise DocumentError(path, "expected a rational string like \"3/4\"")
    try:
        if "/" in s:
            p, q = s.split("/")
            p, q = int(p), int(q)
            if q <= 0:
                raise DocumentError(path, "denominator must be positive")
            x = Fraction(p, q)
            if x.denominator != q or q == 1:
                raise DocumentError(path, "fraction %r is not in lowest terms" % s)
            return x
        return Fraction(int(s))
    except ValueError as exc:
        if isinstance(exc, DocumentError):
            raise
        raise DocumentError(path, "not a rational: %r" % s) from None


# ---------------------------------------------------------------------------
# schemas

Q = {"type": "string", "pattern": r"^-?[0-9]+(/[0-9]+)?$"}
NAT = {"type": "integer", "minimum": 0}
END = {"type": "array", "items": NAT, "minItems": 2, "maxItems": 2}

FAMILY_SCHEMA = {
    "type": "object",
    "required": ["type", "version", "surface", "endpoints", "arcs", "regions"],
    "properties": {
        "type": {"const": "family"},
        "version": {"const": VERSION},
        "surface": {"type": "object", "required": ["genus", "punctures", "boundaries"],
                    "properties": {"genus": NAT, "punctures": NAT, "boundaries": NAT},
                    "additionalProperties": False},
        "endpoints": {"type": "array", "items": NAT},
        "arcs": {"type": "array", "items": {
            "type": "object", "required": ["ends", "weight"], "additionalProperties": False,
            "properties": {"ends": {"type": "array", "items": END, "minItems": 2, "maxItems": 2},
                           "weight": Q}}},
        "regions": {"type": "array", "items": {
            "type": "object", "required": ["genus", "punctures", "cycles"], "additionalProperties": False,
            "properties": {"genus": NAT, "punctures": NAT,
                           "cycles": {"type": "array", "items": {"type": "array", "items": {"type": "string"}}}}}},
    },
    "additionalProperties": False,
}

CACTUS_SCHEMA = {
    "type": "object",
    "required": ["type", "version", "lobes", "orders", "global_zero"],
    "properties": {
        "type": {"const": "cactus"},
        "version": {"const": VERSION},
        "lobes": {"type": "array", "minItems": 1, "items": {
            "type": "object", "required": ["circumference", "zero", "points"], "additionalProperties": False,
            "properties": {"circumference": Q, "zero": Q,
                           "points": {"type": "array", "items": {
                               "type": "object", "required": ["position", "id"], "additionalProperties": False,
                               "properties": {"position": Q, "id": {"type": ["string", "integer"]}}}}}}},
        "orders": {"type": "array", "items": {
            "type": "object", "required": ["id", "lobes"], "additionalProperties": False,
            "properties": {"id": {"type": ["string", "integer"]},
                           "lobes": {"type": "array", "items": {"type": "integer", "minimum": 1}}}}},
        "global_zero": {"type": "array", "minItems": 2, "maxItems": 2, "prefixItems": [NAT, Q]},
    },
    "additionalProperties": False,
}

CONFIG_SCHEMA = {
    "type": "object",
    "required": ["type", "version", "circumferences", "identifications"],
    "properties": {
        "type": {"const": "configuration"},
        "version": {"const": VERSION},
        "circumferences": {"type": "array", "items": Q},
        "identifications": {"type": "array", "items": {
            "type": "object", "additionalProperties": False,
            "required": ["a", "start_a", "b", "start_b", "length", "reversed"],
            "properties": {"a": NAT, "start_a": Q, "b": NAT, "start_b": Q, "length": Q,
                           "reversed": {"type": "boolean"}}}},
    },
    "additionalProperties": False,
}

AFFINE = {"type": "object", "required": ["const", "coeffs"], "additionalProperties": False,
          "properties": {"const": Q, "coeffs": {"type": "array", "items": Q}}}

CELLWISE_SCHEMA = {
    "type": "object",
    "required": ["type", "version", "name", "domain", "cells"],
    "properties": {
        "type": {"const": "cellwise"},
        "version": {"const": VERSION},
        "name": {"type": "string"},
        "domain": {"type": "array", "items": {"enum": ["interval", "triangle"]}},
        "cells": {"type": "array", "minItems": 1, "items": {
            "type": "object", "required": ["constraints", "template", "weights"], "additionalProperties": False,
            "properties": {"constraints": {"type": "array", "items": AFFINE},
                           "template": {"type": "object"},
                           "weights": {"type": "array", "items": AFFINE}}}},
    },
    "additionalProperties": False,
}

TWISTED_SCHEMA = {
    "type": "object",
    "required": ["type", "version", "family", "angles"],
    "properties": {"type": {"const": "twisted"}, "version": {"const": VERSION},
                   "family": {"type": "object"}, "angles": {"type": "array", "items": Q}},
    "additionalProperties": False,
}

EXT_SCHEMA = {
    "type": "object",
    "required": ["type", "version", "size", "terms"],
    "properties": {
        "type": {"const": "extclass"}, "version": {"const": VERSION}, "size": NAT,
        "terms": {"type": "array", "items": {
            "type": "object", "required": ["coefficient", "vector"], "additionalProperties": False,
            "properties": {"coefficient": {"type": "integer"},
                           "vector": {"type": "array", "items": {"enum": [0, 1]}}}}},
    },
    "additionalProperties": False,
}

SCHEMAS = {"family": FAMILY_SCHEMA, "cactus": CACTUS_SCHEMA, "configuration": CONFIG_SCHEMA,
           "cellwise": CELLWISE_SCHEMA, "twisted": TWISTED_SCHEMA, "extclass": EXT_SCHEMA}


def _path(base, parts):
    out = base
    for p in parts:
        out += "[%d]" % p if isinstance(p, int) else ".%s" % p
    return out


def _check_schema(doc, kind, path):
    validator = jsonschema.Draft202012Validator(SCHEMAS[kind])
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(map(str, e.absolute_path)))
    if errors:
        e = errors[0]
        where = _path(path, e.absolute_path)
        if e.validator == "required":
            missing = [k for k in e.validator_value if k not in e.instance]
            missing_path = "%s.%s" % (where, missing[0])
            raise DocumentError(missing_path, "missing required field")
        raise DocumentError(where, e.message)


# ---------------------------------------------------------------------------
# to documents

def family_doc(f: ArcFamily) -> dict:
    f = canonical(f)
    return {
        "type": "family", "version": VERSION,
        "surface": {"genus": f.genus, "punctures": f.punctures, "boundaries": f.boundaries},
        "endpoints": list(f.counts),
        "arcs": [{"ends": [list(e0), list(e1)], "weight": qstr(w)} for (e0, e1), w in zip(f.arcs, f.weights)],
        "regions": [{"genus": r.genus, "punctures": r.punctures,
                     "cycles": [[side_name(s) for s in cyc] for cyc in r.cycles]} for r in f.regions],
    }


def cactus_doc(c: Cactus) -> dict:
    lobes, orders, (lab, pos) = canonical_cactus(c)
    return {
        "type": "cactus", "version": VERSION,
        "lobes": [{"circumference": qstr(circ), "zero": qstr(zero),
                   "points": [{"position": qstr(p), "id": pid} for p, pid in pts]} for circ, zero, pts in lobes],
        "orders": [{"id": pid, "lobes": list(order)} for pid, order in orders],
        "global_zero": [lab, qstr(pos)],
    }


def configuration_doc(K: CircleConfiguration) -> dict:
    K = normalized(K)
    return {
        "type": "configuration", "version": VERSION,
        "circumferences": [qstr(c) for c in K.circumferences],
        "identifications": [{"a": I.a, "start_a": qstr(I.start_a), "b": I.b, "start_b": qstr(I.start_b),
                             "length": qstr(I.length), "reversed": bool(I.reversed)} for I in K.identifications],
    }


def _affine_doc(a: Affine) -> dict:
    return {"const": qstr(a.const), "coeffs": [qstr(c) for c in a.coeffs]}


def cellwise_doc(F: CellwiseFamily) -> dict:
    names = {Interval: "interval", Triangle: "triangle"}
    return {
        "type": "cellwise", "version": VERSION, "name": F.name,
        "domain": [names[type(f)] for f in F.domain.factors],
        "cells": [{"constraints": [_affine_doc(a) for a in c.constraints],
                   "template": family_doc_raw(c.template),
                   "weights": [_affine_doc(w) for w in c.weights]} for c in F.cells],
    }


def family_doc_raw(f: ArcFamily) -> dict:
    """Family document without canonical reordering (cell templates keep their arc order)."""
    return {
        "type": "family", "version": VERSION,
        "surface": {"genus": f.genus, "punctures": f.punctures, "boundaries": f.boundaries},
        "endpoints": list(f.counts),
        "arcs": [{"ends": [list(e0), list(e1)], "weight": qstr(w)} for (e0, e1), w in zip(f.arcs, f.weights)],
        "regions": [{"genus": r.genus, "punctures": r.punctures,
                     "cycles": [[side_name(s) for s in cyc] for cyc in r.cycles]} for r in f.regions],
    }


def twisted_doc(x: TwistedElement) -> dict:
    return {"type": "twisted", "version": VERSION, "family": family_doc(x.fam),
            "angles": [qstr(t) for t in x.angles]}


def extclass_doc(x: ExtClass) -> dict:
    return {"type": "extclass", "version": VERSION, "size": x.size,
            "terms": [{"coefficient": v, "vector": list(bits)} for v, bits in x.vectors()]}


def to_doc(x) -> dict:
    for kind, fn in ((ArcFamily, family_doc), (Cactus, cactus_doc), (CircleConfiguration, configuration_doc),
                     (CellwiseFamily, cellwise_doc), (TwistedElement, twisted_doc), (ExtClass, extclass_doc)):
        if isinstance(x, kind):
            return fn(x)
    raise TypeError("cannot encode %s" % type(x).__name__)


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def encode(x) -> bytes:
    return dumps(to_doc(x)).encode("ascii")


# ---------------------------------------------------------------------------
# from documents

def _family_from(doc, path, validate=True) -> ArcFamily:
    _check_schema(doc, "family", path)
    sig = doc["surface"]
    counts = tuple(doc["endpoints"])
    if len(counts) != sig["boundaries"]:
        raise DocumentError(path + ".endpoints", "expected %d entries, one per boundary" % sig["boundaries"])
    arcs, weights = [], []
    for k, a in enumerate(doc["arcs"]):
        arcs.append(tuple(tuple(e) for e in a["ends"]))
        weights.append(parse_q(a["weight"], "%s.arcs[%d].weight" % (path, k)))
    regions = []
    for k, r in enumerate(doc["regions"]):
        cycles = []
        for c, cyc in enumerate(r["cycles"]):
            sides = []
            for s, tok in enumerate(cyc):
                try:
                    sides.append(parse_side(tok))
                except ValueError as exc:
                    raise DocumentError("%s.regions[%d].cycles[%d][%d]" % (path, k, c, s), str(exc)) from None
            cycles.append(tuple(sides))
        regions.append(Region(r["genus"], r["punctures"], tuple(cycles)))
    f = ArcFamily(sig["genus"], sig["punctures"], counts, tuple(arcs), tuple(weights), tuple(regions))
    if validate:
        try:
            f = ensure_valid(f)
        except ValueError as exc:
            raise DocumentError(path, "invalid family: %s" % exc) from None
    return f


def _cactus_from(doc, path) -> Cactus:
    _check_schema(doc, "cactus", path)
    lobes = []
    for k, l in enumerate(doc["lobes"]):
        p = "%s.lobes[%d]" % (path, k)
        pts = [(parse_q(pt["position"], "%s.points[%d].position" % (p, j)), pt["id"]) for j, pt in enumerate(l["points"])]
        lobes.append((parse_q(l["circumference"], p + ".circumference"), parse_q(l["zero"], p + ".zero"), pts))
    orders = {o["id"]: tuple(o["lobes"]) for o in doc["orders"]}
    gz = (doc["global_zero"][0], parse_q(doc["global_zero"][1], path + ".global_zero[1]"))
    try:
        return cactus(lobes, orders, gz)
    except ValueError as exc:
        raise DocumentError(path, "invalid cactus: %s" % exc) from None


def _config_from(doc, path) -> CircleConfiguration:
    _check_schema(doc, "configuration", path)
    circs = tuple(parse_q(c, "%s.circumferences[%d]" % (path, k)) for k, c in enumerate(doc["circumferences"]))
    idents = []
    for k, I in enumerate(doc["identifications"]):
        p = "%s.identifications[%d]" % (path, k)
        idents.append(Identification(I["a"], parse_q(I["start_a"], p + ".start_a"), I["b"],
                                     parse_q(I["start_b"], p + ".start_b"), parse_q(I["length"], p + ".length"),
                                     I["reversed"]))
    K = CircleConfiguration(circs, tuple(idents))
    problems = configuration_violations(K)
    if problems:
        raise DocumentError(path, "invalid configuration: %s" % "; ".join(problems))
    return normalized(K)


def _affine_from(doc, path) -> Affine:
    return Affine(parse_q(doc["const"], path + ".const"),
                  tuple(parse_q(c, "%s.coeffs[%d]" % (path, k)) for k, c in enumerate(doc["coeffs"])))


def _cellwise_from(doc, path) -> CellwiseFamily:
    _check_schema(doc, "cellwise", path)
    factors = tuple(Interval() if f == "interval" else Triangle() for f in doc["domain"])
    dom = ParamDomain(factors)
    cells = []
    for k, c in enumerate(doc["cells"]):
        p = "%s.cells[%d]" % (path, k)
        cons = tuple(_affine_from(a, "%s.constraints[%d]" % (p, j)) for j, a in enumerate(c["constraints"]))
        ws = tuple(_affine_from(a, "%s.weights[%d]" % (p, j)) for j, a in enumerate(c["weights"]))
        tmpl = _family_from(c["template"], p + ".template")
        if len(ws) != len(tmpl.arcs):
            raise DocumentError(p + ".weights", "one weight per template arc expected")
        for j, a in enumerate(cons + ws):
            if len(a.coeffs) != dom.dim:
                raise DocumentError(p, "affine function %d has %d coefficients, domain has dimension %d"
                                    % (j, len(a.coeffs), dom.dim))
        cells.append(Cell(cons, tmpl, ws))
    return CellwiseFamily(doc["name"], dom, tuple(cells))


def _twisted_from(doc, path) -> TwistedElement:
    from .twisted import element

    _check_schema(doc, "twisted", path)
    fam = _family_from(doc["family"], path + ".family")
    thetas = [parse_q(t, "%s.angles[%d]" % (path, k)) for k, t in enumerate(doc["angles"])]
    for k, t in enumerate(thetas):
        if not 0 <= t < 1:
            raise DocumentError("%s.angles[%d]" % (path, k), "angles are reduced to [0, 1)")
    try:
        return element(fam, thetas, boundary_zero=len(thetas) == fam.boundaries)
    except ValueError as exc:
        raise DocumentError(path, str(exc)) from None


def _ext_from(doc, path) -> ExtClass:
    _check_schema(doc, "extclass", path)
    out = {}
    for k, t in enumerate(doc["terms"]):
        if len(t["vector"]) != doc["size"]:
            raise DocumentError("%s.terms[%d].vector" % (path, k), "expected %d entries" % doc["size"])
        mono = tuple(j for j, b in enumerate(t["vector"]) if b)
        out[mono] = out.get(mono, 0) + t["coefficient"]
    return ExtClass.make(doc["size"], out)


DECODERS = {"family": _family_from, "cactus": _cactus_from, "configuration": _config_from,
            "cellwise": _cellwise_from, "twisted": _twisted_from, "extclass": _ext_from}


def from_doc(doc, expect=None):
    if not isinstance(doc, dict):
        raise DocumentError("$", "expected a JSON object")
    kind = doc.get("type")
    if kind not in DECODERS:
        raise DocumentError("$.type", "unknown document type %r" % (kind,))
    if expect and kind not in ((expect,) if isinstance(expect, str) else expect):
        raise DocumentError("$.type", "expected %s, got %r" % (expect, kind))
    return DECODERS[kind](doc, "$")


def decode(data, expect=None):
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise DocumentError("$", "not JSON: %s" % exc) from None
    return from_doc(doc, expect)


def load(path, expect=None):
    with open(path, "rb") as fh:
        return decode(fh.read(), expect)


def save(x, path):
    with open(path, "wb") as fh:
        fh.write(encode(x) + b"\n")
