"""Regenerate the bundled document corpus under src/ybx/corpus/.

Every file is written in canonical form (sorted keys, two-space indent,
trailing newline) and re-decoded as a sanity check before it lands.
"""

from __future__ import annotations

import pathlib
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from ybx.braided import build_system
from ybx.category import canonical_enriching, enrich_yd
from ybx.exact import GF, QQ, Matrix, SetFn
from ybx.formats import (
    bundle_document,
    decode_structure,
    dumps_document,
    system_document,
    to_document,
)
from ybx.groups import (
    GroupCrossedModule,
    adjoint_crossed_module,
    conjugation_shelf,
    cyclic_group,
    symmetric_group,
)
from ybx.gyd import GYDModule, GroupGradedRep, ShelfRep
from ybx.hopf import HopfCharacterPair, group_algebra, group_character
from ybx.leibniz import LeibnizRep, identity_crossed_module, l2_algebra
from ybx.shelves import (
    Rack,
    Shelf,
    ShelfAction,
    cyclic_shelf,
    dihedral_shelf,
    projection_shelf,
)

CORPUS = ROOT / "src" / "ybx" / "corpus"


def adjoint_rep(shelf: Shelf) -> ShelfRep:
    x = adjoint_crossed_module(shelf)
    return ShelfRep(x, ShelfAction(shelf, shelf.table), SetFn.identity(shelf.size))


def doubled_rep(shelf: Shelf) -> ShelfRep:
    x = adjoint_crossed_module(shelf)
    n = shelf.size
    table = [[2 * shelf.ap(p // 2, s) + p % 2 for s in range(n)] for p in range(2 * n)]
    gr = SetFn(2 * n, n, [p // 2 for p in range(2 * n)])
    twist = SetFn(2 * n, 2 * n, [p ^ 1 for p in range(2 * n)])
    return ShelfRep(x, ShelfAction(shelf, table), gr, twist)


def bantay_crossed_module() -> GroupCrossedModule:
    z2 = cyclic_group(2)
    return GroupCrossedModule(z2, z2, SetFn(2, 2, [0, 1]), [[0, 0], [1, 1]])


def bantay_rep(x: GroupCrossedModule) -> GroupGradedRep:
    return GroupGradedRep(x, (0, 1), (Matrix.identity(QQ, 2), Matrix(QQ, [[1, 0], [0, -1]])))


def swap_rep(x: GroupCrossedModule) -> GroupGradedRep:
    return GroupGradedRep(x, (0, 0), (Matrix.identity(QQ, 2), Matrix(QQ, [[0, 1], [1, 0]])))


def flat_rep(x) -> LeibnizRep:
    kd = x.k.dim
    return LeibnizRep(x, kd, x.action, Matrix.zeros(x.k.field, kd * kd, kd))


def kplus_rep(x) -> LeibnizRep:
    F = x.k.field
    kd = x.k.dim
    action = []
    for theta in x.action:
        grid = [[F.zero] * (kd + 1) for _ in range(kd + 1)]
        for r in range(kd):
            for c in range(kd):
                grid[r][c] = theta.data[r][c]
        action.append(Matrix(F, grid))
    grid = [[F.zero] * (kd + 1) for _ in range((kd + 1) * kd)]
    for k in range(kd):
        grid[kd * kd + k][k] = F.one
    return LeibnizRep(x, kd + 1, action, Matrix(F, grid))


def enriched_pair(hopf, pair):
    """The counit/character one-dimensional module enriched by each canonical structure."""
    system = build_system("hopf", hopf)
    char = GYDModule(system, 1, pair.zeta, pair.eta)
    return [
        ("enriched_by_c", enrich_yd(char, canonical_enriching(system, "C"))),
        ("enriched_by_a", enrich_yd(char, canonical_enriching(system, "A"))),
    ]


def documents() -> dict[str, dict]:
    d3 = dihedral_shelf(3)
    conj = conjugation_shelf(symmetric_group(3))
    bantay = bantay_crossed_module()
    l2x = identity_crossed_module(l2_algebra(QQ))
    qs3 = group_algebra(symmetric_group(3), QQ)
    f7z3 = group_algebra(cyclic_group(3), GF(7))
    hennings = HopfCharacterPair(group_character(cyclic_group(3), GF(7), [1, 2, 4]), f7z3.nu)

    docs = {
        "d3_shelf.json": to_document(d3),
        "conj_s3_shelf.json": to_document(conj),
        "cyclic3_shelf.json": to_document(cyclic_shelf(3)),
        "projection3_shelf.json": to_document(projection_shelf(3)),
        "broken_shelf.json": {"kind": "shelf", "table": [[1, 0], [0, 1]]},
        "d3_rack.json": to_document(Rack(d3)),
        "s3_group.json": to_document(symmetric_group(3)),
        "z3_group.json": to_document(cyclic_group(3)),
        "z2_conj_crmod.json": to_document(bantay),
        "d3_adjoint_crmod.json": to_document(adjoint_crossed_module(d3)),
        "conj_s3_adjoint.json": to_document(adjoint_crossed_module(conj)),
        "l2_leibniz.json": to_document(l2_algebra(QQ)),
        "l2_identity_crmod.json": to_document(l2x),
        "qs3_hopf.json": to_document(qs3),
        "f7z3_hopf.json": to_document(f7z3),
        "d3_adjoint_rep.json": to_document(adjoint_rep(d3)),
        "bantay_rep.json": to_document(bantay_rep(bantay)),
        "l2_kplus_rep.json": to_document(kplus_rep(l2x)),
        "d3_shelf_bundle.json": bundle_document(
            "shelf_crmod", adjoint_crossed_module(d3),
            [("adjoint", adjoint_rep(d3)), ("doubled", doubled_rep(d3))],
            variant="coass"),
        "bantay_bundle.json": bundle_document(
            "group_crmod", bantay,
            [("sign", bantay_rep(bantay)), ("swap", swap_rep(bantay))], field=QQ),
        "l2_leibniz_bundle.json": bundle_document(
            "leibniz_crmod", l2x, [("flat", flat_rep(l2x)), ("kplus", kplus_rep(l2x))]),
        "qs3_hopf_bundle.json": bundle_document(
            "hopf", qs3, enriched_pair(qs3, HopfCharacterPair(qs3.eps, qs3.nu))),
        "f7z3_hennings_bundle.json": bundle_document("hopf", f7z3, enriched_pair(f7z3, hennings)),
    }
    return docs


def main() -> None:
    CORPUS.mkdir(parents=True, exist_ok=True)
    docs = documents()
    for name, doc in sorted(docs.items()):
        if name != "broken_shelf.json":
            decode_structure(doc)
        (CORPUS / name).write_text(dumps_document(doc), encoding="utf-8")
        print(f"wrote {name}")
    stale = {p.name for p in CORPUS.glob("*.json")} - set(docs)
    for name in sorted(stale):
        (CORPUS / name).unlink()
        print(f"removed {name}")


if __name__ == "__main__":
    main()
