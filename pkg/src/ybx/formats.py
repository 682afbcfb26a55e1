"""JSON structure documents: exact scalar codecs, schema validation, canonical bytes.

Documents are UTF-8 JSON with a "kind" discriminator. Scalars are JSON
integers when integral and "p/q" strings otherwise; matrices are row-major
nested arrays; finite maps are flat tables. Canonical text sorts keys,
indents by two, and ends with a newline, so canonical documents round-trip
byte for byte.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .braided import BraidedSystem, build_system
from .exact import GF, QQ, Field, Matrix, SetFn
from .groups import FiniteGroup, GroupCrossedModule, ShelfCrossedModule
from .gyd import (
    GYDModule,
    GroupGradedRep,
    RepresentationBundle,
    ShelfRep,
    as_gyd,
    connecting_data,
)
from .hopf import FinHopfAlgebra
from .leibniz import LeibnizAlgebra, LeibnizCrossedModule, LeibnizRep
from .shelves import Rack, Shelf, ShelfAction

KINDS = (
    "shelf",
    "rack",
    "group",
    "group_crossed_module",
    "shelf_crossed_module",
    "leibniz_algebra",
    "leibniz_crossed_module",
    "hopf_algebra",
    "representation",
    "bundle",
)

FLAVORS = ("shelf", "group", "leibniz", "gyd")

BUILDERS = {
    "hopf": "hopf_algebra",
    "group_crmod": "group_crossed_module",
    "shelf_crmod": "shelf_crossed_module",
    "leibniz_crmod": "leibniz_crossed_module",
}

FLAVOR_BUILDERS = {"shelf": "shelf_crmod", "group": "group_crmod", "leibniz": "leibniz_crmod"}


class DocumentError(ValueError):
    """A parse or schema violation: the document cannot name a structure."""


class LawViolation(ValueError):
    """A well-formed document whose structure fails a defining law."""


# ---------------------------------------------------------------------------
# scalars and fields


def encode_field(field: Field) -> str:
    return "Q" if field.kind == "rationals" else f"F{field.p}"


def decode_field(spec, where: str = "field") -> Field:
    if spec == "Q":
        return QQ
    if isinstance(spec, str) and spec.startswith("F") and spec[1:].isdigit():
        try:
            return GF(int(spec[1:]))
        except ValueError:
            raise DocumentError(f"{where}: {spec[1:]} is not prime") from None
    raise DocumentError(f"{where}: expected 'Q' or 'F<prime>', got {spec!r}")


def decode_scalar(field: Field, value, where: str):
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise DocumentError(f"{where}: scalars must be integers or rational strings")
    if field.kind == "prime":
        if not isinstance(value, int):
            raise DocumentError(f"{where}: prime-field scalars must be integers")
        if not 0 <= value < field.p:
            raise DocumentError(f"{where}: residue {value} out of range for F{field.p}")
        return value
    if isinstance(value, int):
        return Fraction(value)
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise DocumentError(f"{where}: {value!r} is not a rational") from None


def encode_matrix(m: Matrix) -> list:
    return [[m.field.encode(x) for x in row] for row in m.data]


def decode_matrix(field: Field, data, rows: int, cols: int, where: str) -> Matrix:
    if not isinstance(data, list) or len(data) != rows:
        raise DocumentError(f"{where}: expected {rows} rows")
    grid = []
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != cols:
            raise DocumentError(f"{where}: row {i} must have {cols} entries")
        grid.append([decode_scalar(field, x, f"{where}[{i}]") for x in row])
    return Matrix(field, grid)


def _int_list(data, length: int, bound: int, where: str) -> list[int]:
    if not isinstance(data, list) or len(data) != length:
        raise DocumentError(f"{where}: expected a list of {length} integers")
    for v in data:
        if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < bound:
            raise DocumentError(f"{where}: entries must be integers in [0, {bound})")
    return list(data)


def _int_table(data, rows: int, cols: int, bound: int, where: str) -> list[list[int]]:
    if not isinstance(data, list) or len(data) != rows:
        raise DocumentError(f"{where}: expected {rows} rows")
    return [_int_list(row, cols, bound, f"{where}[{i}]") for i, row in enumerate(data)]


def square_table(doc: dict, kind: str = "table") -> list[list[int]]:
    """The raw operation table of a shelf, rack, or group document; no laws checked."""
    data = doc.get("table")
    if not isinstance(data, list) or not data:
        raise DocumentError(f"{kind}: expected a nonempty square table")
    return _int_table(data, len(data), len(data), len(data), kind)


def _expect_keys(doc: dict, required: set[str], optional: set[str], kind: str) -> None:
    keys = set(doc) - {"kind"}
    missing = sorted(required - keys)
    if missing:
        raise DocumentError(f"{kind}: missing keys {missing}")
    extra = sorted(keys - required - optional)
    if extra:
        raise DocumentError(f"{kind}: unknown keys {extra}")


def _names(doc: dict, size: int, kind: str) -> None:
    names = doc.get("names")
    if names is None:
        return
    if (
        not isinstance(names, list)
        or len(names) != size
        or any(not isinstance(s, str) for s in names)
    ):
        raise DocumentError(f"{kind}: names must be {size} strings")


def _subdoc(doc: dict, key: str, expected: str, kind: str) -> dict:
    sub = doc[key]
    if not isinstance(sub, dict) or sub.get("kind") != expected:
        raise DocumentError(f"{kind}: {key} must be a document of kind {expected!r}")
    return sub


# ---------------------------------------------------------------------------
# decoding


def _decode_shelf(doc: dict) -> Shelf:
    _expect_keys(doc, {"table"}, {"names"}, "shelf")
    table = square_table(doc, "shelf")
    _names(doc, len(table), "shelf")
    try:
        return Shelf(table)
    except ValueError as e:
        raise LawViolation(f"shelf: {e}") from None


def _decode_rack(doc: dict) -> Rack:
    _expect_keys(doc, {"table"}, {"names"}, "rack")
    table = square_table(doc, "rack")
    _names(doc, len(table), "rack")
    try:
        return Rack(Shelf(table))
    except ValueError as e:
        raise LawViolation(f"rack: {e}") from None


def _decode_group(doc: dict) -> FiniteGroup:
    _expect_keys(doc, {"table"}, {"names"}, "group")
    table = square_table(doc, "group")
    _names(doc, len(table), "group")
    try:
        return FiniteGroup(table)
    except ValueError as e:
        raise LawViolation(f"group: {e}") from None


def _decode_group_crossed_module(doc: dict) -> GroupCrossedModule:
    _expect_keys(doc, {"k", "g", "pi", "action"}, set(), "group_crossed_module")
    k = _decode_group(_subdoc(doc, "k", "group", "group_crossed_module"))
    g = _decode_group(_subdoc(doc, "g", "group", "group_crossed_module"))
    pi = _int_list(doc["pi"], k.size, g.size, "group_crossed_module: pi")
    action = _int_table(doc["action"], k.size, g.size, k.size, "group_crossed_module: action")
    return GroupCrossedModule(k, g, SetFn(k.size, g.size, pi), action)


def _decode_shelf_crossed_module(doc: dict) -> ShelfCrossedModule:
    _expect_keys(doc, {"r", "s", "pi", "action"}, set(), "shelf_crossed_module")
    r = _decode_shelf(_subdoc(doc, "r", "shelf", "shelf_crossed_module"))
    s = _decode_shelf(_subdoc(doc, "s", "shelf", "shelf_crossed_module"))
    pi = _int_list(doc["pi"], r.size, s.size, "shelf_crossed_module: pi")
    action = _int_table(doc["action"], r.size, s.size, r.size, "shelf_crossed_module: action")
    return ShelfCrossedModule(r, s, SetFn(r.size, s.size, pi), ShelfAction(s, action))


def _decode_leibniz_algebra(doc: dict) -> LeibnizAlgebra:
    _expect_keys(doc, {"field", "dim", "bracket"}, set(), "leibniz_algebra")
    field = decode_field(doc["field"], "leibniz_algebra: field")
    dim = doc["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise DocumentError("leibniz_algebra: dim must be a positive integer")
    data = doc["bracket"]
    if not isinstance(data, list) or len(data) != dim:
        raise DocumentError(f"leibniz_algebra: bracket needs {dim} rows")
    bracket = []
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != dim:
            raise DocumentError(f"leibniz_algebra: bracket[{i}] needs {dim} cells")
        cells = []
        for j, cell in enumerate(row):
            if not isinstance(cell, list) or len(cell) != dim:
                raise DocumentError(f"leibniz_algebra: bracket[{i}][{j}] needs {dim} entries")
            cells.append([decode_scalar(field, x, f"bracket[{i}][{j}]") for x in cell])
        bracket.append(cells)
    return LeibnizAlgebra(field, dim, bracket)


def _decode_leibniz_crossed_module(doc: dict) -> LeibnizCrossedModule:
    _expect_keys(doc, {"k", "g", "pi", "action"}, set(), "leibniz_crossed_module")
    k = _decode_leibniz_algebra(_subdoc(doc, "k", "leibniz_algebra", "leibniz_crossed_module"))
    g = _decode_leibniz_algebra(_subdoc(doc, "g", "leibniz_algebra", "leibniz_crossed_module"))
    if k.field != g.field:
        raise DocumentError("leibniz_crossed_module: k and g must share a field")
    pi = decode_matrix(k.field, doc["pi"], g.dim, k.dim, "leibniz_crossed_module: pi")
    data = doc["action"]
    if not isinstance(data, list) or len(data) != g.dim:
        raise DocumentError(f"leibniz_crossed_module: action needs {g.dim} matrices")
    action = [
        decode_matrix(k.field, mat, k.dim, k.dim, f"leibniz_crossed_module: action[{j}]")
        for j, mat in enumerate(data)
    ]
    return LeibnizCrossedModule(k, g, pi, action)


def _decode_hopf_algebra(doc: dict) -> FinHopfAlgebra:
    _expect_keys(doc, {"field", "dim", "mu", "nu", "delta", "eps", "antipode"}, set(),
                 "hopf_algebra")
    field = decode_field(doc["field"], "hopf_algebra: field")
    dim = doc["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise DocumentError("hopf_algebra: dim must be a positive integer")
    shapes = {
        "mu": (dim, dim * dim),
        "nu": (dim, 1),
        "delta": (dim * dim, dim),
        "eps": (1, dim),
        "antipode": (dim, dim),
    }
    mats = {
        name: decode_matrix(field, doc[name], r, c, f"hopf_algebra: {name}")
        for name, (r, c) in shapes.items()
    }
    return FinHopfAlgebra(field, dim, mats["mu"], mats["nu"], mats["delta"], mats["eps"],
                          mats["antipode"])


class SystemContext:
    """A decoded system sub-document: builder, base structure, and the built system."""

    __slots__ = ("doc", "builder", "base_doc", "base", "field", "variant", "system")

    def __init__(self, doc, builder, base_doc, base, field, variant, system):
        self.doc = doc
        self.builder = builder
        self.base_doc = base_doc
        self.base = base
        self.field = field
        self.variant = variant
        self.system = system

    def connection(self):
        return connecting_data(self.builder, self.base, field=self.field)


def decode_system(doc: dict) -> SystemContext:
    if not isinstance(doc, dict):
        raise DocumentError("system: expected an object")
    _expect_keys(doc, {"builder", "base"}, {"field", "variant"}, "system")
    builder = doc["builder"]
    if builder not in BUILDERS:
        raise DocumentError(f"system: unknown builder {builder!r}")
    base_doc = _subdoc(doc, "base", BUILDERS[builder], "system")
    base = decode_structure(base_doc)
    field = None
    if builder == "group_crmod":
        if "field" not in doc:
            raise DocumentError("system: builder group_crmod needs a field")
        field = decode_field(doc["field"], "system: field")
    elif "field" in doc:
        raise DocumentError(f"system: builder {builder} takes no field")
    variant = doc.get("variant", "coass")
    if builder == "shelf_crmod":
        if variant not in ("coass", "sd"):
            raise DocumentError(f"system: unknown variant {variant!r}")
    elif "variant" in doc:
        raise DocumentError(f"system: builder {builder} takes no variant")
    system = build_system(builder, base, field=field, variant=variant)
    return SystemContext(doc, builder, base_doc, base, field, variant, system)


def _rep_base(doc: dict, flavor: str, context: SystemContext | None):
    """Resolve the crossed module (or system) a representation document lives over."""
    if flavor == "gyd":
        if context is None:
            if "system" not in doc:
                raise DocumentError("representation: flavor gyd needs a system")
            return decode_system(doc["system"])
        if "system" in doc and doc["system"] != context.doc:
            raise DocumentError("representation: system does not match the bundle")
        return context
    if context is not None:
        if context.builder != FLAVOR_BUILDERS[flavor]:
            raise DocumentError(
                f"representation: flavor {flavor} does not fit builder {context.builder}")
        if "base" in doc and doc["base"] != context.base_doc:
            raise DocumentError("representation: base does not match the bundle")
        return context.base
    if "base" not in doc:
        raise DocumentError(f"representation: flavor {flavor} needs a base")
    kind = BUILDERS[FLAVOR_BUILDERS[flavor]]
    return decode_structure(_subdoc(doc, "base", kind, "representation"))


def _decode_representation(doc: dict, context: SystemContext | None = None):
    flavor = doc.get("flavor")
    if flavor not in FLAVORS:
        raise DocumentError(f"representation: unknown flavor {flavor!r}")
    per_flavor = {
        "shelf": {"action", "gr"},
        "group": {"field", "grades", "action"},
        "leibniz": {"dim", "action", "delta0"},
        "gyd": {"carrier", "rho", "delta"},
    }
    optional = {"base"} if flavor != "gyd" else {"system"}
    if flavor == "shelf":
        optional = optional | {"twist"}
    _expect_keys(doc, per_flavor[flavor] | {"flavor"}, optional, "representation")
    base = _rep_base(doc, flavor, context)

    if flavor == "shelf":
        x: ShelfCrossedModule = base
        data = doc["action"]
        if not isinstance(data, list) or not data:
            raise DocumentError("representation: action must be a nonempty table")
        m = len(data)
        action = _int_table(data, m, x.s.size, m, "representation: action")
        gr = _int_list(doc["gr"], m, x.r.size, "representation: gr")
        twist = None
        if "twist" in doc:
            twist = SetFn(m, m, _int_list(doc["twist"], m, m, "representation: twist"))
        return ShelfRep(x, ShelfAction(x.s, action), SetFn(m, x.r.size, gr), twist)

    if flavor == "group":
        x: GroupCrossedModule = base
        field = decode_field(doc["field"], "representation: field")
        grades = doc["grades"]
        if not isinstance(grades, list) or not grades:
            raise DocumentError("representation: grades must be a nonempty list")
        dim = len(grades)
        grades = _int_list(grades, dim, x.k.size, "representation: grades")
        data = doc["action"]
        if not isinstance(data, list) or len(data) != x.g.size:
            raise DocumentError(f"representation: action needs {x.g.size} matrices")
        action = [
            decode_matrix(field, mat, dim, dim, f"representation: action[{g}]")
            for g, mat in enumerate(data)
        ]
        return GroupGradedRep(x, grades, action)

    if flavor == "leibniz":
        x: LeibnizCrossedModule = base
        dim = doc["dim"]
        if not isinstance(dim, int) or dim < 1:
            raise DocumentError("representation: dim must be a positive integer")
        field = x.k.field
        data = doc["action"]
        if not isinstance(data, list) or len(data) != x.g.dim:
            raise DocumentError(f"representation: action needs {x.g.dim} matrices")
        action = [
            decode_matrix(field, mat, dim, dim, f"representation: action[{j}]")
            for j, mat in enumerate(data)
        ]
        delta0 = decode_matrix(field, doc["delta0"], dim * x.k.dim, dim,
                               "representation: delta0")
        return LeibnizRep(x, dim, action, delta0)

    ctx: SystemContext = base
    carrier = doc["carrier"]
    if not isinstance(carrier, int) or carrier < 1:
        raise DocumentError("representation: carrier must be a positive integer")
    c_dim, a_dim = ctx.system.carriers
    if ctx.system.mode == "set":
        rho = SetFn(carrier * a_dim, carrier,
                    _int_list(doc["rho"], carrier * a_dim, carrier, "representation: rho"))
        delta = SetFn(carrier, carrier * c_dim,
                      _int_list(doc["delta"], carrier, carrier * c_dim,
                                "representation: delta"))
    else:
        field = ctx.system.mode
        rho = decode_matrix(field, doc["rho"], carrier, carrier * a_dim, "representation: rho")
        delta = decode_matrix(field, doc["delta"], carrier * c_dim, carrier,
                              "representation: delta")
    return GYDModule(ctx.system, carrier, rho, delta)


def _decode_bundle(doc: dict) -> RepresentationBundle:
    _expect_keys(doc, {"system", "representations", "members"}, set(), "bundle")
    ctx = decode_system(doc["system"])
    reps = doc["representations"]
    if not isinstance(reps, dict):
        raise DocumentError("bundle: representations must map ids to documents")
    members = doc["members"]
    if not isinstance(members, list) or not members:
        raise DocumentError("bundle: members must be a nonempty list of ids")
    loaded = []
    for mid in members:
        if mid not in reps:
            raise DocumentError(f"bundle: member {mid!r} is not defined")
        sub = reps[mid]
        if not isinstance(sub, dict) or sub.get("kind") != "representation":
            raise DocumentError(f"bundle: representation {mid!r} must have kind 'representation'")
        rep = _decode_representation(sub, ctx)
        if isinstance(rep, GYDModule):
            loaded.append(rep)
        else:
            try:
                loaded.append(as_gyd(rep, ctx.system))
            except ValueError as e:
                raise LawViolation(f"bundle member {mid!r}: {e}") from None
    return RepresentationBundle(ctx.system, ctx.connection(), loaded)


_DECODERS = {
    "shelf": _decode_shelf,
    "rack": _decode_rack,
    "group": _decode_group,
    "group_crossed_module": _decode_group_crossed_module,
    "shelf_crossed_module": _decode_shelf_crossed_module,
    "leibniz_algebra": _decode_leibniz_algebra,
    "leibniz_crossed_module": _decode_leibniz_crossed_module,
    "hopf_algebra": _decode_hopf_algebra,
    "representation": _decode_representation,
    "bundle": _decode_bundle,
}


def decode_structure(doc):
    """The typed structure a document names; DocumentError or LawViolation otherwise."""
    if not isinstance(doc, dict):
        raise DocumentError("expected a JSON object with a 'kind' key")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise DocumentError(f"unknown kind {kind!r}")
    return _DECODERS[kind](doc)


# ---------------------------------------------------------------------------
# encoding


def system_document(builder: str, base, *, field: Field | None = None,
                    variant: str | None = None) -> dict:
    doc = {"builder": builder, "base": to_document(base)}
    if field is not None:
        doc["field"] = encode_field(field)
    if variant is not None:
        doc["variant"] = variant
    return doc


def _rep_payload(rep, system_doc: dict | None = None) -> dict:
    if isinstance(rep, ShelfRep):
        doc = {
            "kind": "representation",
            "flavor": "shelf",
            "action": [list(row) for row in rep.action.table],
            "gr": list(rep.gr.table),
        }
        if rep.twist != SetFn.identity(rep.action.set_size):
            doc["twist"] = list(rep.twist.table)
        return doc
    if isinstance(rep, GroupGradedRep):
        return {
            "kind": "representation",
            "flavor": "group",
            "field": encode_field(rep.field),
            "grades": list(rep.grades),
            "action": [encode_matrix(m) for m in rep.action],
        }
    if isinstance(rep, LeibnizRep):
        return {
            "kind": "representation",
            "flavor": "leibniz",
            "dim": rep.dim,
            "action": [encode_matrix(m) for m in rep.action],
            "delta0": encode_matrix(rep.delta0),
        }
    if isinstance(rep, GYDModule):
        doc = {"kind": "representation", "flavor": "gyd", "carrier": rep.carrier}
        if rep.system.mode == "set":
            doc["rho"] = list(rep.rho.table)
            doc["delta"] = list(rep.delta.table)
        else:
            doc["rho"] = encode_matrix(rep.rho)
            doc["delta"] = encode_matrix(rep.delta)
        if system_doc is not None:
            doc["system"] = system_doc
        return doc
    raise TypeError(f"no representation document for {type(rep).__name__}")


def bundle_document(builder: str, base, members, *, field: Field | None = None,
                    variant: str | None = None) -> dict:
    """A bundle document from (id, representation) pairs over one system."""
    sysdoc = system_document(builder, base, field=field, variant=variant)
    reps = {}
    order = []
    for mid, rep in members:
        reps[mid] = _rep_payload(rep)
        order.append(mid)
    return {"kind": "bundle", "system": sysdoc, "representations": reps, "members": order}


def to_document(obj, *, system_doc: dict | None = None) -> dict:
    """The canonical document of a structure; representations embed their base."""
    if isinstance(obj, Shelf):
        return {"kind": "shelf", "table": [list(row) for row in obj.table]}
    if isinstance(obj, Rack):
        return {"kind": "rack", "table": [list(row) for row in obj.shelf.table]}
    if isinstance(obj, FiniteGroup):
        return {"kind": "group", "table": [list(row) for row in obj.table]}
    if isinstance(obj, GroupCrossedModule):
        return {
            "kind": "group_crossed_module",
            "k": to_document(obj.k),
            "g": to_document(obj.g),
            "pi": list(obj.pi.table),
            "action": [list(row) for row in obj.action],
        }
    if isinstance(obj, ShelfCrossedModule):
        return {
            "kind": "shelf_crossed_module",
            "r": to_document(obj.r),
            "s": to_document(obj.s),
            "pi": list(obj.pi.table),
            "action": [list(row) for row in obj.action.table],
        }
    if isinstance(obj, LeibnizAlgebra):
        return {
            "kind": "leibniz_algebra",
            "field": encode_field(obj.field),
            "dim": obj.dim,
            "bracket": [
                [[obj.field.encode(x) for x in cell] for cell in row] for row in obj.bracket
            ],
        }
    if isinstance(obj, LeibnizCrossedModule):
        return {
            "kind": "leibniz_crossed_module",
            "k": to_document(obj.k),
            "g": to_document(obj.g),
            "pi": encode_matrix(obj.pi),
            "action": [encode_matrix(m) for m in obj.action],
        }
    if isinstance(obj, FinHopfAlgebra):
        return {
            "kind": "hopf_algebra",
            "field": encode_field(obj.field),
            "dim": obj.dim,
            "mu": encode_matrix(obj.mu),
            "nu": encode_matrix(obj.nu),
            "delta": encode_matrix(obj.delta),
            "eps": encode_matrix(obj.eps),
            "antipode": encode_matrix(obj.antipode),
        }
    if isinstance(obj, (ShelfRep, GroupGradedRep, LeibnizRep)):
        doc = _rep_payload(obj)
        doc["base"] = to_document(obj.x)
        return doc
    if isinstance(obj, GYDModule):
        return _rep_payload(obj, system_doc)
    raise TypeError(f"no document encoding for {type(obj).__name__}")


# ---------------------------------------------------------------------------
# files


def dumps_document(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def loads_document(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"invalid JSON: {e}") from None
    if not isinstance(doc, dict):
        raise DocumentError("expected a JSON object with a 'kind' key")
    if doc.get("kind") not in KINDS:
        raise DocumentError(f"unknown kind {doc.get('kind')!r}")
    return doc


def load_document(path) -> dict:
    with open(path, encoding="utf-8") as fh:
        return loads_document(fh.read())


def save_document(doc: dict, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_document(doc))


def load_structure(path):
    """Load and decode a document in one step."""
    return decode_structure(load_document(path))
