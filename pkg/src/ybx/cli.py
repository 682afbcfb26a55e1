"""Command-line verification and reporting over structure documents.

Exit codes: 0 when every requested check passes, 1 when a verified law
fails, 2 for input errors (unreadable files, schema violations, bad flags,
or sizes above the YBX_MAX_DIM bound).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import replace

from .braided import build_system, check_cybe, cybe_check
from .category import associator, coherence_check, enumerate_yd_characters, tensor_reps
from .exact import QQ, Matrix, SetFn
from .formats import (
    DocumentError,
    LawViolation,
    decode_structure,
    decode_system,
    dumps_document,
    encode_field,
    encode_matrix,
    load_document,
    square_table,
)
from .groups import (
    adjoint_crossed_module,
    check_group,
    check_group_crossed_module,
    check_shelf_crossed_module,
)
from .gyd import (
    ConnectingData,
    GYDModule,
    GroupGradedRep,
    RepresentationBundle,
    ShelfRep,
    as_gyd,
    braid_operator,
    check_group_graded_rep,
    check_gyd,
    check_pi_condition,
    check_shelf_rep,
    check_ybe_family,
    connecting_data,
    gyd_braiding,
)
from .hopf import adjoint_braidings, check_hopf_algebra, counit_pair
from .leibniz import (
    LeibnizRep,
    check_leibniz,
    check_leibniz_crossed_module,
    check_leibniz_rep,
    identity_crossed_module,
)
from .reports import Report
from .shelves import Shelf, check_rack, check_shelf, sd_pair_map

DEFAULT_MAX_DIM = 16

SYSTEM_KINDS = {
    "group_crossed_module": "group_crmod",
    "shelf_crossed_module": "shelf_crmod",
    "leibniz_crossed_module": "leibniz_crmod",
    "hopf_algebra": "hopf",
}


def _max_dim() -> int:
    raw = os.environ.get("YBX_MAX_DIM", str(DEFAULT_MAX_DIM))
    try:
        value = int(raw)
    except ValueError:
        raise DocumentError(f"YBX_MAX_DIM must be an integer, got {raw!r}") from None
    if value < 1:
        raise DocumentError("YBX_MAX_DIM must be positive")
    return value


def _guard(points: int, what: str) -> None:
    bound = _max_dim() ** 3
    if points > bound:
        raise DocumentError(
            f"{what} needs {points} tensor points, above the YBX_MAX_DIM bound {bound}")


def _law(fn, *args, **kwargs):
    """Run a checker-backed builder; its rejections are law failures, not input errors."""
    try:
        return fn(*args, **kwargs)
    except (DocumentError, LawViolation):
        raise
    except ValueError as e:
        raise LawViolation(str(e)) from None


def _ints(text: str, n: int, what: str) -> list[int]:
    parts = [p.strip() for p in text.split(",")]
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise DocumentError(f"{what} must be {n} comma-separated integers") from None
    if len(values) != n:
        raise DocumentError(f"{what} must be {n} comma-separated integers")
    return values


def _prefixed(report: Report, prefix: str) -> Report:
    return Report(tuple(replace(c, check_id=f"{prefix}.{c.check_id}") for c in report.checks))


def _build_base_system(kind: str, doc: dict):
    """(structure, system, connecting data) for a crossed-module or Hopf document.

    Bare group crossed modules carry no field, so they linearize over the rationals.
    """
    obj = decode_structure(doc)
    builder = SYSTEM_KINDS[kind]
    field = QQ if kind == "group_crossed_module" else None
    system = build_system(builder, obj, field=field)
    conn = connecting_data(builder, obj, field=field)
    return obj, system, conn


def _rep_bundle(rep, doc: dict) -> RepresentationBundle:
    """A singleton bundle around a decoded representation document."""
    if isinstance(rep, GYDModule):
        ctx = decode_system(doc["system"])
        return RepresentationBundle(ctx.system, ctx.connection(), [rep])
    if isinstance(rep, ShelfRep):
        builder, field = "shelf_crmod", None
    elif isinstance(rep, GroupGradedRep):
        builder, field = "group_crmod", rep.field
    else:
        builder, field = "leibniz_crmod", None
    system = build_system(builder, rep.x, field=field)
    conn = connecting_data(builder, rep.x, field=field)
    return RepresentationBundle(system, conn, [_law(as_gyd, rep, system)])


# ---------------------------------------------------------------------------
# verify / report


def _verify_report(doc: dict) -> Report:
    kind = doc["kind"]
    if kind == "shelf":
        return check_shelf(square_table(doc, "shelf"))
    if kind == "rack":
        report = check_shelf(square_table(doc, "rack"))
        if report.passed:
            report = report.merge(check_rack(Shelf(square_table(doc, "rack"))))
        return report
    if kind == "group":
        return check_group(square_table(doc, "group"))
    if kind == "group_crossed_module":
        return check_group_crossed_module(decode_structure(doc))
    if kind == "shelf_crossed_module":
        return check_shelf_crossed_module(decode_structure(doc))
    if kind == "leibniz_algebra":
        return check_leibniz(decode_structure(doc))
    if kind == "leibniz_crossed_module":
        x = decode_structure(doc)
        report = _prefixed(check_leibniz(x.k), "k").merge(_prefixed(check_leibniz(x.g), "g"))
        return report.merge(check_leibniz_crossed_module(x))
    if kind == "hopf_algebra":
        return check_hopf_algebra(decode_structure(doc))
    if kind == "representation":
        rep = decode_structure(doc)
        if isinstance(rep, ShelfRep):
            base = check_shelf_crossed_module(rep.x)
            return _prefixed(base, "base").merge(check_shelf_rep(rep))
        if isinstance(rep, GroupGradedRep):
            base = check_group_crossed_module(rep.x)
            return _prefixed(base, "base").merge(check_group_graded_rep(rep))
        if isinstance(rep, LeibnizRep):
            report = _prefixed(check_leibniz(rep.x.k), "base.k")
            report = report.merge(_prefixed(check_leibniz(rep.x.g), "base.g"))
            report = report.merge(_prefixed(check_leibniz_crossed_module(rep.x), "base"))
            return report.merge(check_leibniz_rep(rep))
        return check_gyd(rep)
    bundle = decode_structure(doc)
    _guard(max(m.carrier for m in bundle.members) ** 3, "the member YBE family")
    return bundle.validate().merge(_law(check_ybe_family, bundle))


def _emit_report(report: Report, fmt: str = "text") -> int:
    if fmt == "json":
        print(json.dumps(report.to_obj(), indent=2, sort_keys=True))
    else:
        print(report.render_text())
    return 0 if report.passed else 1


def _cmd_verify(args) -> int:
    return _emit_report(_verify_report(load_document(args.file)))


def _cmd_report(args) -> int:
    return _emit_report(_verify_report(load_document(args.file)), args.format)


# ---------------------------------------------------------------------------
# ybe


def _cmd_ybe(args) -> int:
    doc = load_document(args.file)
    kind = doc["kind"]
    triple = _ints(args.triple, 3, "--triple") if args.triple else None

    if kind in ("shelf", "rack"):
        table = square_table(doc, kind)
        n = len(table)
        if triple is not None and triple != [0, 0, 0]:
            raise DocumentError("--triple on a single braiding must be 0,0,0")
        _guard(n ** 3, "the YBE check")
        sigma = sd_pair_map(table)
        return _emit_report(Report.of(
            cybe_check(sigma, sigma, sigma, (n, n, n), check_id="cybe.0.0.0")))

    if kind in SYSTEM_KINDS:
        _, system, _ = _build_base_system(kind, doc)
        field = None if system.mode == "set" else system.mode
        _guard(max(system.carriers) ** 3, "the YBE check")
        if triple is None:
            return _emit_report(check_cybe(system))
        i, j, k = triple
        if not (0 <= i <= j <= k < system.rank):
            raise DocumentError("--triple indices must be ascending component indices")
        sizes = (system.carriers[i], system.carriers[j], system.carriers[k])
        return _emit_report(Report.of(
            cybe_check(system.sigma[(i, j)], system.sigma[(i, k)], system.sigma[(j, k)],
                       sizes, field, check_id=f"cybe.{i}.{j}.{k}")))

    if kind == "representation":
        bundle = _rep_bundle(decode_structure(doc), doc)
    elif kind == "bundle":
        bundle = decode_structure(doc)
    else:
        raise DocumentError(f"ybe does not apply to kind {kind!r}")
    sizes = [m.carrier for m in bundle.members]
    _guard(max(sizes) ** 3, "the YBE family check")
    if triple is None:
        return _emit_report(_law(check_ybe_family, bundle))
    i, j, k = triple
    n = len(bundle.members)
    if not all(0 <= t < n for t in triple):
        raise DocumentError(f"--triple indices must name members below {n}")
    field = None if bundle.system.mode == "set" else bundle.system.mode
    check = cybe_check(
        _law(gyd_braiding, bundle, i, j),
        _law(gyd_braiding, bundle, i, k),
        _law(gyd_braiding, bundle, j, k),
        (sizes[i], sizes[j], sizes[k]), field, check_id=f"ybe.{i}.{j}.{k}")
    return _emit_report(Report.of(check))


# ---------------------------------------------------------------------------
# braiding


def _map_document(sigma) -> dict:
    if isinstance(sigma, SetFn):
        return {"domain": sigma.domain, "codomain": sigma.codomain, "table": list(sigma.table)}
    return {"field": encode_field(sigma.field), "matrix": encode_matrix(sigma)}


def _cmd_braiding(args) -> int:
    doc = load_document(args.file)
    kind = doc["kind"]
    i, j = _ints(args.pair, 2, "--pair")

    if kind in ("shelf", "rack"):
        if (i, j) != (0, 0):
            raise DocumentError("--pair on a single braiding must be 0,0")
        sigma = sd_pair_map(square_table(doc, kind))
    elif kind in SYSTEM_KINDS:
        _, system, _ = _build_base_system(kind, doc)
        if not (0 <= i <= j < system.rank):
            raise DocumentError("--pair must be ascending component indices")
        sigma = system.sigma[(i, j)]
    elif kind in ("representation", "bundle"):
        if kind == "representation":
            bundle = _rep_bundle(decode_structure(doc), doc)
        else:
            bundle = decode_structure(doc)
        n = len(bundle.members)
        if not (0 <= i < n and 0 <= j < n):
            raise DocumentError(f"--pair indices must name members below {n}")
        sigma = _law(gyd_braiding, bundle, i, j)
    else:
        raise DocumentError(f"braiding does not apply to kind {kind!r}")

    text = dumps_document(_map_document(sigma))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return 0


# ---------------------------------------------------------------------------
# pi-check


def _cmd_pi_check(args) -> int:
    doc = load_document(args.file)
    kind = doc["kind"]
    if kind in ("shelf", "rack"):
        obj = decode_structure(doc)
        x = adjoint_crossed_module(obj.shelf if kind == "rack" else obj)
        system = build_system("shelf_crmod", x)
        stock = connecting_data("shelf_crmod", x)
    elif kind in SYSTEM_KINDS:
        _, system, stock = _build_base_system(kind, doc)
    else:
        raise DocumentError(f"pi-check does not apply to kind {kind!r}")
    exponents = _ints(args.exponents, 4, "--exponents")
    conn = ConnectingData(stock.pi, exponents)
    _guard(max(system.carriers) ** 3, "the connecting condition")
    return _emit_report(check_pi_condition(system, conn))


# ---------------------------------------------------------------------------
# pentagon


def _pentagon_rep(doc: dict):
    kind = doc["kind"]
    if kind in ("shelf", "rack"):
        obj = decode_structure(doc)
        shelf = obj.shelf if kind == "rack" else obj
        x = adjoint_crossed_module(shelf)
        return ShelfRep(x, x.action, SetFn.identity(shelf.size))
    if kind == "shelf_crossed_module":
        x = decode_structure(doc)
        return ShelfRep(x, x.action, SetFn.identity(x.r.size))
    if kind == "leibniz_algebra":
        x = identity_crossed_module(decode_structure(doc))
        return LeibnizRep(x, x.k.dim, x.action, Matrix.zeros(x.k.field, x.k.dim ** 2, x.k.dim))
    if kind == "leibniz_crossed_module":
        x = decode_structure(doc)
        return LeibnizRep(x, x.k.dim, x.action, Matrix.zeros(x.k.field, x.k.dim ** 2, x.k.dim))
    if kind == "representation":
        rep = decode_structure(doc)
        if isinstance(rep, (ShelfRep, LeibnizRep)):
            return rep
        raise DocumentError("pentagon applies to shelf or Leibniz representations")
    raise DocumentError(f"pentagon does not apply to kind {kind!r}")


def _cmd_pentagon(args) -> int:
    rep = _pentagon_rep(load_document(args.file))
    if isinstance(rep, ShelfRep):
        tensor_kind, assoc_kind = "shelf_diagonal", "shelf_tilde"
        size = rep.action.set_size
    else:
        tensor_kind, assoc_kind = "leibniz", "leibniz"
        size = rep.dim
    _guard(size ** 4, "the pentagon check")
    report = _law(coherence_check, "pentagon", {
        "objects": [rep],
        "tensor": lambda u, v: tensor_reps(tensor_kind, u, v),
        "associator": lambda u, v, w: associator(assoc_kind, u, v, w),
    })
    return _emit_report(report)


# ---------------------------------------------------------------------------
# characters


def _cmd_characters(args) -> int:
    doc = load_document(args.file)
    kind = doc["kind"]
    if kind in ("shelf", "rack"):
        obj = decode_structure(doc)
        x = adjoint_crossed_module(obj.shelf if kind == "rack" else obj)
    elif kind == "shelf_crossed_module":
        x = decode_structure(doc)
    else:
        raise DocumentError(f"characters does not apply to kind {kind!r}")
    chars = _law(enumerate_yd_characters, x)
    print(f"{len(chars)} YD characters")
    for n, ch in enumerate(chars):
        print(f"character {n}: invariant grade {ch.nu_c(0)}")
    return 0


# ---------------------------------------------------------------------------
# braid


def _cmd_braid(args) -> int:
    doc = load_document(args.file)
    kind = doc["kind"]
    if args.strands < 2:
        raise DocumentError("--strands must be at least 2")
    try:
        word = [int(w) for w in args.word.split()]
    except ValueError:
        raise DocumentError("--word must be whitespace-separated nonzero integers") from None
    if not word or 0 in word:
        raise DocumentError("--word must be whitespace-separated nonzero integers")

    if kind in ("shelf", "rack"):
        sigma = sd_pair_map(square_table(doc, kind))
        dim = len(doc["table"])
    elif kind == "hopf_algebra":
        hopf = decode_structure(doc)
        sigma = adjoint_braidings(hopf, counit_pair(hopf), "woronowicz_sigma")
        dim = hopf.dim
    elif kind in ("representation", "bundle"):
        if kind == "representation":
            bundle = _rep_bundle(decode_structure(doc), doc)
        else:
            bundle = decode_structure(doc)
        sigma = _law(gyd_braiding, bundle, 0, 0)
        dim = bundle.members[0].carrier
    else:
        raise DocumentError(f"braid does not apply to kind {kind!r}")

    _guard(dim ** args.strands, "the braid evaluation")
    op = braid_operator(sigma, args.strands, word)
    summary = {"strands": args.strands, "word": word}
    if isinstance(op, SetFn):
        summary["size"] = op.domain
        summary["bijective"] = op.is_bijective()
        summary["fixed_points"] = sum(1 for p in range(op.domain) if op(p) == p)
    else:
        summary["size"] = op.rows
        summary["trace"] = op.field.encode(
            sum((op.data[d][d] for d in range(op.rows)), op.field.zero))
    print(json.dumps(summary, indent=2, sort_keys=True))
    return 0


# ---------------------------------------------------------------------------
# wiring


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ybx",
        description="Exact verification of Yang-Baxter-type laws on structure documents.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run every law checker that applies to the document")
    p.add_argument("file")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("ybe", help="check the colored Yang-Baxter equation")
    p.add_argument("file")
    p.add_argument("--triple", help="one instance i,j,k instead of the full family")
    p.set_defaults(func=_cmd_ybe)

    p = sub.add_parser("braiding", help="compute one braiding component")
    p.add_argument("file")
    p.add_argument("--pair", required=True, help="component or member indices i,j")
    p.add_argument("--out", help="write the map as JSON instead of printing it")
    p.set_defaults(func=_cmd_braiding)

    p = sub.add_parser("pi-check", help="check the connecting-map condition")
    p.add_argument("file")
    p.add_argument("--exponents", required=True, help="four exponents a1,a2,g1,g2")
    p.set_defaults(func=_cmd_pi_check)

    p = sub.add_parser("pentagon", help="check pentagon coherence of the associator")
    p.add_argument("file")
    p.set_defaults(func=_cmd_pentagon)

    p = sub.add_parser("characters", help="enumerate the one-point module structures")
    p.add_argument("file")
    p.set_defaults(func=_cmd_characters)

    p = sub.add_parser("braid", help="evaluate a braid word on tensor powers")
    p.add_argument("file")
    p.add_argument("--strands", type=int, required=True)
    p.add_argument("--word", required=True, help='generators like "1 2 -1"')
    p.set_defaults(func=_cmd_braid)

    p = sub.add_parser("report", help="run the verify checks and render the report")
    p.add_argument("file")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=_cmd_report)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    try:
        return args.func(args)
    except DocumentError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except LawViolation as e:
        print(f"law failure: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
