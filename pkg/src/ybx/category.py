"""Enriching structures over a rank-2 braided system: the mixed Yang-Baxter laws
they satisfy, canonical and tensor constructions, the functors turning
representations into enriching structures, tensor products and associators of
representations, finite coherence checks, and the one-point unit objects of
shelf representation categories."""

from __future__ import annotations

import time
from dataclasses import dataclass

from .braided import SET_MODE, BraidedSystem, build_system, cybe_check
from .exact import Matrix, SetFn, compose, diff_witness, flip, identity, kron, kron_apply
from .groups import GroupCrossedModule, ShelfCrossedModule, check_shelf_crossed_module
from .gyd import (
    GYDModule,
    GroupGradedRep,
    ShelfRep,
    check_group_graded_rep,
    check_gyd,
    check_shelf_rep,
    connecting_data,
)
from .hopf import FinHopfAlgebra
from .leibniz import (
    LeibnizCrossedModule,
    LeibnizRep,
    UnitalLeibnizAlgebra,
    check_leibniz_rep,
    pair_matrix,
    rep_action_map,
    rep_coaction,
    unital_coalgebra,
)
from .reports import Check, Report
from .shelves import ShelfAction


def _require(report: Report, what: str) -> None:
    if not report.passed:
        raise ValueError(f"{what} fails {report.first_failure().check_id}")


class EnrichingStructure:
    """A carrier M with sigma_cm: C(x)M -> M(x)C and sigma_ma: M(x)A -> A(x)M.

    Together with the system components these must satisfy the three mixed
    Yang-Baxter instances of check_enriching; the constructor only fixes shapes.
    """

    __slots__ = ("system", "carrier", "sigma_cm", "sigma_ma")

    def __init__(self, system: BraidedSystem, carrier: int, sigma_cm, sigma_ma):
        if system.rank != 2:
            raise ValueError("enriching structures live over a rank-2 system")
        m = int(carrier)
        if m < 1:
            raise ValueError("the carrier must have positive size")
        c_dim, a_dim = system.carriers
        if system.mode == SET_MODE:
            if not (isinstance(sigma_cm, SetFn) and isinstance(sigma_ma, SetFn)):
                raise ValueError("set-mode structures need SetFn braidings")
            cm_shape = (sigma_cm.codomain, sigma_cm.domain)
            ma_shape = (sigma_ma.codomain, sigma_ma.domain)
        else:
            if not (isinstance(sigma_cm, Matrix) and isinstance(sigma_ma, Matrix)):
                raise ValueError("linear structures need matrix braidings")
            if sigma_cm.field != system.mode or sigma_ma.field != system.mode:
                raise ValueError("braidings must live over the system field")
            cm_shape = (sigma_cm.rows, sigma_cm.cols)
            ma_shape = (sigma_ma.rows, sigma_ma.cols)
        if cm_shape != (m * c_dim, c_dim * m):
            raise ValueError(f"sigma_cm has shape {cm_shape}, expected {(m * c_dim, c_dim * m)}")
        if ma_shape != (a_dim * m, m * a_dim):
            raise ValueError(f"sigma_ma has shape {ma_shape}, expected {(a_dim * m, m * a_dim)}")
        self.system = system
        self.carrier = m
        self.sigma_cm = sigma_cm
        self.sigma_ma = sigma_ma

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, EnrichingStructure)
            and self.system == other.system
            and self.carrier == other.carrier
            and self.sigma_cm == other.sigma_cm
            and self.sigma_ma == other.sigma_ma
        )

    __hash__ = None


def check_enriching(e: EnrichingStructure) -> Report:
    """The mixed colored Yang-Baxter instances on (C,C,M), (C,M,A) and (M,A,A)."""
    sys_ = e.system
    field = None if sys_.mode == SET_MODE else sys_.mode
    c_dim, a_dim = sys_.carriers
    m = e.carrier
    s_cc, s_ca, s_aa = sys_.sigma[(0, 0)], sys_.sigma[(0, 1)], sys_.sigma[(1, 1)]
    return Report((
        cybe_check(s_cc, e.sigma_cm, e.sigma_cm, (c_dim, c_dim, m), field,
                   check_id="enrich.ccm"),
        cybe_check(e.sigma_cm, s_ca, e.sigma_ma, (c_dim, m, a_dim), field,
                   check_id="enrich.cma"),
        cybe_check(e.sigma_ma, e.sigma_ma, s_aa, (m, a_dim, a_dim), field,
                   check_id="enrich.maa"),
    ))


def canonical_enriching(system: BraidedSystem, which: str) -> EnrichingStructure:
    """E_C = (C, sigma_CC, sigma_CA) or E_A = (A, sigma_CA, sigma_AA)."""
    c_dim, a_dim = system.carriers
    if which == "C":
        return EnrichingStructure(system, c_dim, system.sigma[(0, 0)], system.sigma[(0, 1)])
    if which == "A":
        return EnrichingStructure(system, a_dim, system.sigma[(0, 1)], system.sigma[(1, 1)])
    raise ValueError("which must be 'C' or 'A'")


def unit_enriching(system: BraidedSystem) -> EnrichingStructure:
    """The size-one carrier with identity braidings; the tensor unit."""
    field = None if system.mode == SET_MODE else system.mode
    c_dim, a_dim = system.carriers
    return EnrichingStructure(system, 1, identity(c_dim, field), identity(a_dim, field))


def tensor_enriching(e: EnrichingStructure, e2: EnrichingStructure) -> EnrichingStructure:
    """The structure on M (x) M', strictly associative and unital.

    sigma_cm = (M (x) sigma'_cm) o (sigma_cm (x) M') and
    sigma_ma = (sigma_ma (x) M') o (M (x) sigma'_ma).
    """
    if e.system != e2.system:
        raise ValueError("enriching structures must share the system")
    sys_ = e.system
    field = None if sys_.mode == SET_MODE else sys_.mode
    m, m2 = e.carrier, e2.carrier
    cm = compose(kron(identity(m, field), e2.sigma_cm), kron(e.sigma_cm, identity(m2, field)))
    ma = compose(kron(e.sigma_ma, identity(m2, field)), kron(identity(m, field), e2.sigma_ma))
    return EnrichingStructure(sys_, m * m2, cm, ma)


def enrich_yd(module: GYDModule, e: EnrichingStructure) -> GYDModule:
    """The module structure on N (x) M induced by an enriching structure:
    rho' = (rho (x) M) o (N (x) sigma_ma) and delta' = (N (x) sigma_cm) o (delta (x) M).

    Deliberately no law check on the input module: weakened character pairs give
    modules that fail the strict compatibility yet enrich to modules that pass.
    """
    if module.system != e.system:
        raise ValueError("the module and the enriching structure must share the system")
    sys_ = module.system
    field = None if sys_.mode == SET_MODE else sys_.mode
    n, m = module.carrier, e.carrier
    rho = compose(kron(module.rho, identity(m, field)), kron(identity(n, field), e.sigma_ma))
    delta = compose(kron(identity(n, field), e.sigma_cm), kron(module.delta, identity(m, field)))
    return GYDModule(sys_, n * m, rho, delta)


def _z_yd(module: GYDModule, hopf: FinHopfAlgebra) -> EnrichingStructure:
    if not isinstance(hopf, FinHopfAlgebra):
        raise ValueError("the yd functor needs a Hopf algebra")
    system = build_system("hopf", hopf)
    if module.system != system:
        raise ValueError("the module must live over the system of the Hopf algebra")
    _require(check_gyd(module), "the module")
    F = hopf.field
    h, m = hopf.dim, module.carrier
    stage = kron(identity(h, F), module.delta)
    stage = kron_apply([flip(h, m, F), identity(h, F)], stage)
    sigma_cm = kron_apply([identity(m, F), hopf.mu], stage)
    stage = kron(identity(m, F), hopf.delta)
    stage = kron_apply([flip(m, h, F), identity(h, F)], stage)
    sigma_ma = kron_apply([identity(h, F), module.rho], stage)
    return EnrichingStructure(system, m, sigma_cm, sigma_ma)


def _z_group(rep: GroupGradedRep) -> EnrichingStructure:
    _require(check_group_graded_rep(rep), "the representation")
    x, F, d = rep.x, rep.field, rep.dim
    ks, gs = x.k.size, x.g.size
    system = build_system("group_crmod", x, field=F)
    # sigma_cm(e_k (x) e_c) = e_c (x) e_{k gr(c)}; sigma_ma(e_c (x) e_g) = e_g (x) e_c A_g.
    sigma_cm = Matrix.from_columns(
        F, d * ks, ks * d,
        [[(c * ks + x.k.op(k, rep.grades[c]), F.one)] for k in range(ks) for c in range(d)],
    )
    sigma_ma = Matrix.from_columns(
        F, gs * d, d * gs,
        [[(g * d + r, v) for r, v in rep.action[g].column(c)]
         for c in range(d) for g in range(gs)],
    )
    return EnrichingStructure(system, d, sigma_cm, sigma_ma)


def _z_shelf(rep: ShelfRep, diagonal: bool) -> EnrichingStructure:
    _require(check_shelf_rep(rep), "the representation")
    x = rep.x
    rs, ss, m = x.r.size, x.s.size, rep.action.set_size
    system = build_system("shelf_crmod", x)
    if diagonal:
        cm_table = [rep.twist(p) * rs + x.r.ap(r, rep.gr(p))
                    for r in range(rs) for p in range(m)]
    else:
        cm_table = [rep.twist(p) * rs + rep.gr(p) for _ in range(rs) for p in range(m)]
    sigma_cm = SetFn(rs * m, m * rs, cm_table)
    sigma_ma = SetFn(m * ss, ss * m,
                     [s * m + rep.action.act(p, s) for p in range(m) for s in range(ss)])
    return EnrichingStructure(system, m, sigma_cm, sigma_ma)


def _z_leibniz(rep: LeibnizRep) -> EnrichingStructure:
    _require(check_leibniz_rep(rep), "the representation")
    x = rep.x
    F = x.k.field
    kp, gp, d = x.k.dim + 1, x.g.dim + 1, rep.dim
    system = build_system("leibniz_crmod", x)
    adjoint = pair_matrix(F, UnitalLeibnizAlgebra(x.k).adjoint_action(), kp)
    stage = kron(identity(kp, F), rep_coaction(rep))
    stage = kron_apply([flip(kp, d, F), identity(kp, F)], stage)
    sigma_cm = kron_apply([identity(d, F), adjoint], stage)
    g_delta, _ = unital_coalgebra(F, gp)
    stage = kron(identity(d, F), g_delta)
    stage = kron_apply([flip(d, gp, F), identity(gp, F)], stage)
    sigma_ma = kron_apply([identity(gp, F), rep_action_map(rep)], stage)
    return EnrichingStructure(system, d, sigma_cm, sigma_ma)


def z_functor(kind: str, rep, *, hopf: FinHopfAlgebra | None = None) -> EnrichingStructure:
    """The enriching structure a representation carries over its own system.

    Kinds: "yd" (GYDModule over a Hopf system, pass hopf=), "crmod"
    (GroupGradedRep), "sd" and "sd_tilde" (ShelfRep), "crmodla" (LeibnizRep).
    The input is validated with its own checker first.
    """
    if kind == "yd":
        return _z_yd(rep, hopf)
    if kind == "crmod":
        return _z_group(rep)
    if kind in ("sd", "sd_tilde"):
        return _z_shelf(rep, diagonal=(kind == "sd_tilde"))
    if kind == "crmodla":
        return _z_leibniz(rep)
    raise ValueError(f"unknown functor kind {kind!r}")


def _same_base(a, b) -> bool:
    """Structural equality of the crossed modules two representations live over."""
    if a is b:
        return True
    if isinstance(a, GroupCrossedModule) and isinstance(b, GroupCrossedModule):
        return a.k == b.k and a.g == b.g and a.pi == b.pi and a.action == b.action
    if isinstance(a, ShelfCrossedModule) and isinstance(b, ShelfCrossedModule):
        return (a.r == b.r and a.s == b.s and a.pi == b.pi
                and a.action.table == b.action.table)
    if isinstance(a, LeibnizCrossedModule) and isinstance(b, LeibnizCrossedModule):
        return a.k == b.k and a.g == b.g and a.pi == b.pi and a.action == b.action
    return False


def _tensor_hopf(u: GYDModule, v: GYDModule, hopf: FinHopfAlgebra) -> GYDModule:
    if not isinstance(hopf, FinHopfAlgebra):
        raise ValueError("the hopf tensor product needs a Hopf algebra")
    system = build_system("hopf", hopf)
    if u.system != system or v.system != system:
        raise ValueError("both modules must live over the system of the Hopf algebra")
    _require(check_gyd(u), "the left module")
    _require(check_gyd(v), "the right module")
    F = hopf.field
    h, m, m2 = hopf.dim, u.carrier, v.carrier
    stage = kron(identity(m * m2, F), hopf.delta)
    stage = kron_apply([identity(m, F), flip(m2, h, F), identity(h, F)], stage)
    rho = kron_apply([u.rho, v.rho], stage)
    stage = kron(u.delta, v.delta)
    stage = kron_apply([identity(m, F), flip(h, m2, F), identity(h, F)], stage)
    delta = kron_apply([identity(m * m2, F), hopf.mu], stage)
    return GYDModule(system, m * m2, rho, delta)


def _tensor_group(u: GroupGradedRep, v: GroupGradedRep) -> GroupGradedRep:
    if not _same_base(u.x, v.x):
        raise ValueError("representations must share the crossed module")
    _require(check_group_graded_rep(u), "the left representation")
    _require(check_group_graded_rep(v), "the right representation")
    x, F = u.x, u.field
    grades = [x.k.op(u.grades[r], v.grades[r2])
              for r in range(u.dim) for r2 in range(v.dim)]
    action = [kron(u.action[g], v.action[g]) for g in range(x.g.size)]
    return GroupGradedRep(x, grades, action)


def _tensor_shelf(u: ShelfRep, v: ShelfRep, diagonal: bool) -> ShelfRep:
    if not _same_base(u.x, v.x):
        raise ValueError("representations must share the crossed module")
    _require(check_shelf_rep(u), "the left representation")
    _require(check_shelf_rep(v), "the right representation")
    x = u.x
    m, m2, ss = u.action.set_size, v.action.set_size, x.s.size
    table = [[u.action.act(p, s) * m2 + v.action.act(p2, s) for s in range(ss)]
             for p in range(m) for p2 in range(m2)]
    if diagonal:
        gr_table = [x.r.ap(u.gr(p), v.gr(p2)) for p in range(m) for p2 in range(m2)]
    else:
        gr_table = [v.gr(p2) for p in range(m) for p2 in range(m2)]
    twist = SetFn(m * m2, m * m2,
                  [u.twist(p) * m2 + v.twist(p2) for p in range(m) for p2 in range(m2)])
    return ShelfRep(x, ShelfAction(x.s, table), SetFn(m * m2, x.r.size, gr_table), twist)


def _tensor_leibniz(u: LeibnizRep, v: LeibnizRep) -> LeibnizRep:
    if not _same_base(u.x, v.x):
        raise ValueError("representations must share the crossed module")
    _require(check_leibniz_rep(u), "the left representation")
    _require(check_leibniz_rep(v), "the right representation")
    x = u.x
    F = x.k.field
    d, d2, kd = u.dim, v.dim, x.k.dim
    action = [kron(theta, identity(d2, F)).add(kron(identity(d, F), theta2))
              for theta, theta2 in zip(u.action, v.action)]
    bracket = x.k.bracket_map()
    # delta0(m (x) m') = m_0 (x) m' (x) m_1 + m_0 (x) m'_0 (x) [m_1, m'_1].
    cols = []
    for c in range(d):
        for c2 in range(d2):
            acc: dict[int, object] = {}
            for r, val in u.delta0.column(c):
                c0, k1 = divmod(r, kd)
                row = (c0 * d2 + c2) * kd + k1
                acc[row] = F.add(acc.get(row, F.zero), val)
                for r2, val2 in v.delta0.column(c2):
                    c20, k2 = divmod(r2, kd)
                    for kk, bval in bracket.column(k1 * kd + k2):
                        row = (c0 * d2 + c20) * kd + kk
                        acc[row] = F.add(acc.get(row, F.zero), F.mul(val, F.mul(val2, bval)))
            cols.append(sorted((r, val) for r, val in acc.items() if val != F.zero))
    delta0 = Matrix.from_columns(F, d * d2 * kd, d * d2, cols)
    return LeibnizRep(x, d * d2, action, delta0)


def tensor_reps(kind: str, u, v, *, hopf: FinHopfAlgebra | None = None):
    """The tensor product representation of two validated representations.

    Kinds: "hopf" (GYDModules, pass hopf=), "group", "shelf_peripheral" and
    "shelf_diagonal" (same actions and twists, gradings gr'(m') resp.
    gr(m) <| gr'(m')), "leibniz".
    """
    if kind == "hopf":
        return _tensor_hopf(u, v, hopf)
    if kind == "group":
        return _tensor_group(u, v)
    if kind in ("shelf_peripheral", "shelf_diagonal"):
        return _tensor_shelf(u, v, diagonal=(kind == "shelf_diagonal"))
    if kind == "leibniz":
        return _tensor_leibniz(u, v)
    raise ValueError(f"unknown tensor kind {kind!r}")


def _shelf_associator(u: ShelfRep, v: ShelfRep, w: ShelfRep, direction: str) -> SetFn:
    x = u.x
    su, sv, sw = u.action.set_size, v.action.set_size, w.action.set_size
    twists = [x.pi(w.gr(p3)) for p3 in range(sw)]
    if direction == "forward":
        move = {t: [u.action.act(p, t) for p in range(su)] for t in set(twists)}
    else:
        move = {}
        for t in set(twists):
            inverse = [-1] * su
            for p in range(su):
                inverse[u.action.act(p, t)] = p
            if -1 in inverse:
                raise ValueError("the inverse associator needs bijective translations")
            move[t] = inverse
    table = [move[twists[p3]][p] * (sv * sw) + p2 * sw + p3
             for p in range(su) for p2 in range(sv) for p3 in range(sw)]
    return SetFn(su * sv * sw, su * sv * sw, table)


def _leibniz_associator(u: LeibnizRep, v: LeibnizRep, w: LeibnizRep, direction: str) -> Matrix:
    x = u.x
    F = x.k.field
    kp, gp = x.k.dim + 1, x.g.dim + 1
    d, d2, d3 = u.dim, v.dim, w.dim
    pi_plus = connecting_data("leibniz_crmod", x).pi
    rho = rep_action_map(u)
    coact = rep_coaction(w)
    unit_g = gp - 1
    # alpha((m (x) m') (x) m'') = m * pi(m''_1) (x) (m' (x) m''_0); the inverse
    # routes through the sign flip g -> -g on the non-unit part of g+.
    cols = []
    for c in range(d):
        for c2 in range(d2):
            for c3 in range(d3):
                acc: dict[int, object] = {}
                for r, val in coact.column(c3):
                    c30, k1 = divmod(r, kp)
                    for gi, pval in pi_plus.column(k1):
                        if direction == "inverse" and gi != unit_g:
                            pval = F.neg(pval)
                        for r1, aval in rho.column(c * gp + gi):
                            row = (r1 * d2 + c2) * d3 + c30
                            term = F.mul(val, F.mul(pval, aval))
                            acc[row] = F.add(acc.get(row, F.zero), term)
                cols.append(sorted((r, val) for r, val in acc.items() if val != F.zero))
    total = d * d2 * d3
    return Matrix.from_columns(F, total, total, cols)


def associator(kind: str, u, v, w, direction: str = "forward"):
    """The associativity isomorphism on (U (x) V) (x) W for the twisted products.

    Kinds: "shelf_tilde" (diagonal shelf product; the inverse needs bijective
    translations) and "leibniz".  direction is "forward" or "inverse".
    """
    if direction not in ("forward", "inverse"):
        raise ValueError(f"unknown direction {direction!r}")
    if kind == "shelf_tilde":
        for rep in (u, v, w):
            _require(check_shelf_rep(rep), "a representation")
        if not (_same_base(u.x, v.x) and _same_base(u.x, w.x)):
            raise ValueError("representations must share the crossed module")
        return _shelf_associator(u, v, w, direction)
    if kind == "leibniz":
        for rep in (u, v, w):
            _require(check_leibniz_rep(rep), "a representation")
        if not (_same_base(u.x, v.x) and _same_base(u.x, w.x)):
            raise ValueError("representations must share the crossed module")
        return _leibniz_associator(u, v, w, direction)
    raise ValueError(f"unknown associator kind {kind!r}")


def _rep_size(rep) -> int:
    if isinstance(rep, GYDModule):
        return rep.carrier
    if isinstance(rep, ShelfRep):
        return rep.action.set_size
    if isinstance(rep, (GroupGradedRep, LeibnizRep)):
        return rep.dim
    raise TypeError(f"no carrier size for {type(rep).__name__}")


def _need(data, key: str, kind: str):
    if key not in data or data[key] is None:
        raise ValueError(f"{kind} checks need {key!r} data")
    return data[key]


def _pentagon_checks(data) -> tuple[Check, ...]:
    objects = tuple(_need(data, "objects", "pentagon"))
    tensor = _need(data, "tensor", "pentagon")
    alpha = _need(data, "associator", "pentagon")
    checks = []
    for a, ou in enumerate(objects):
        for b, ov in enumerate(objects):
            for c, ow in enumerate(objects):
                for e, ox in enumerate(objects):
                    t0 = time.perf_counter()
                    su, sx = _rep_size(ou), _rep_size(ox)
                    inner = alpha(ov, ow, ox)
                    field = None if isinstance(inner, SetFn) else inner.field
                    lhs = compose(
                        kron(identity(su, field), inner),
                        compose(alpha(ou, tensor(ov, ow), ox),
                                kron(alpha(ou, ov, ow), identity(sx, field))),
                    )
                    rhs = compose(alpha(ou, ov, tensor(ow, ox)), alpha(tensor(ou, ov), ow, ox))
                    w, n = diff_witness(lhs, rhs, (su, _rep_size(ov), _rep_size(ow), sx))
                    checks.append(Check(f"pentagon.{a}.{b}.{c}.{e}", "pentagon-coherence",
                                        w is None, w, detail=f"{n} violations" if n else "",
                                        seconds=time.perf_counter() - t0))
    return tuple(checks)


def _triangle_checks(data) -> tuple[Check, ...]:
    objects = tuple(_need(data, "objects", "triangle"))
    unit = _need(data, "unit", "triangle")
    alpha = _need(data, "associator", "triangle")
    if "left_unitor" not in data or "right_unitor" not in data:
        raise ValueError("triangle checks need both unitors")
    lunit, runit = data["left_unitor"], data["right_unitor"]
    si = _rep_size(unit)
    checks = []
    for i, ov in enumerate(objects):
        for j, ow in enumerate(objects):
            t0 = time.perf_counter()
            sv, sw = _rep_size(ov), _rep_size(ow)
            lam = lunit(ow)
            field = None if isinstance(lam, SetFn) else lam.field
            lhs = compose(kron(identity(sv, field), lam), alpha(ov, unit, ow))
            rhs = kron(runit(ov), identity(sw, field))
            w, n = diff_witness(lhs, rhs, (sv, si, sw))
            checks.append(Check(f"triangle.{i}.{j}", "triangle-coherence", w is None, w,
                                detail=f"{n} violations" if n else "",
                                seconds=time.perf_counter() - t0))
    return tuple(checks)


def _hexagon_checks(data, second: bool) -> tuple[Check, ...]:
    name = "hexagon2" if second else "hexagon1"
    objects = tuple(_need(data, "objects", name))
    tensor = _need(data, "tensor", name)
    braiding = _need(data, "braiding", name)
    checks = []
    for i, ou in enumerate(objects):
        for j, ov in enumerate(objects):
            for k, ow in enumerate(objects):
                t0 = time.perf_counter()
                su, sv, sw = _rep_size(ou), _rep_size(ov), _rep_size(ow)
                c_uv = braiding(ou, ov)
                field = None if isinstance(c_uv, SetFn) else c_uv.field
                if second:
                    lhs = braiding(tensor(ou, ov), ow)
                    rhs = compose(kron(braiding(ou, ow), identity(sv, field)),
                                  kron(identity(su, field), braiding(ov, ow)))
                else:
                    lhs = braiding(ou, tensor(ov, ow))
                    rhs = compose(kron(identity(sv, field), braiding(ou, ow)),
                                  kron(c_uv, identity(sw, field)))
                w, n = diff_witness(lhs, rhs, (su, sv, sw))
                checks.append(Check(f"{name}.{i}.{j}.{k}", "braiding-hexagon", w is None, w,
                                    detail=f"{n} violations" if n else "",
                                    seconds=time.perf_counter() - t0))
    return tuple(checks)


def _naturality_checks(data) -> tuple[Check, ...]:
    objects = tuple(_need(data, "objects", "naturality"))
    tensor = _need(data, "tensor", "naturality")
    braiding = _need(data, "braiding", "naturality")
    checks = []
    for i, ou in enumerate(objects):
        for j, ov in enumerate(objects):
            for k, ow in enumerate(objects):
                su, sv, sw = _rep_size(ou), _rep_size(ov), _rep_size(ow)
                c_uv = braiding(ou, ov)
                field = None if isinstance(c_uv, SetFn) else c_uv.field
                t0 = time.perf_counter()
                lhs = compose(kron(identity(sw, field), c_uv), braiding(tensor(ou, ov), ow))
                rhs = compose(braiding(tensor(ov, ou), ow), kron(c_uv, identity(sw, field)))
                w, n = diff_witness(lhs, rhs, (su, sv, sw))
                checks.append(Check(f"naturality.first.{i}.{j}.{k}", "braiding-naturality",
                                    w is None, w, detail=f"{n} violations" if n else "",
                                    seconds=time.perf_counter() - t0))
                t0 = time.perf_counter()
                lhs = compose(braiding(ow, tensor(ov, ou)), kron(identity(sw, field), c_uv))
                rhs = compose(kron(c_uv, identity(sw, field)), braiding(ow, tensor(ou, ov)))
                w, n = diff_witness(lhs, rhs, (sw, su, sv))
                checks.append(Check(f"naturality.second.{i}.{j}.{k}", "braiding-naturality",
                                    w is None, w, detail=f"{n} violations" if n else "",
                                    seconds=time.perf_counter() - t0))
    return tuple(checks)


def _shelf_morphism_checks(src: ShelfRep, tgt: ShelfRep, fn: SetFn) -> tuple[Check, ...]:
    m, ss = src.action.set_size, src.x.s.size
    t0 = time.perf_counter()
    bad = [(p, s) for p in range(m) for s in range(ss)
           if fn(src.action.act(p, s)) != tgt.action.act(fn(p), s)]
    action = Check("morphism.action", "action-intertwines", not bad,
                   bad[0] if bad else None, detail=f"{len(bad)} violations" if bad else "",
                   seconds=time.perf_counter() - t0)
    t0 = time.perf_counter()
    bad = [(p,) for p in range(m) if tgt.gr(fn(p)) != src.gr(p)]
    grading = Check("morphism.grading", "grading-preserved", not bad,
                    bad[0] if bad else None, detail=f"{len(bad)} violations" if bad else "",
                    seconds=time.perf_counter() - t0)
    t0 = time.perf_counter()
    bad = [(p,) for p in range(m) if fn(src.twist(p)) != tgt.twist(fn(p))]
    twist = Check("morphism.twist", "twist-intertwines", not bad,
                  bad[0] if bad else None, detail=f"{len(bad)} violations" if bad else "",
                  seconds=time.perf_counter() - t0)
    return (action, grading, twist)


def _group_morphism_checks(src: GroupGradedRep, tgt: GroupGradedRep, fn: Matrix) -> tuple[Check, ...]:
    t0 = time.perf_counter()
    witness = None
    count = 0
    for g in range(src.x.g.size):
        w, n = diff_witness(compose(fn, src.action[g]), compose(tgt.action[g], fn), (src.dim,))
        count += n
        if w is not None and witness is None:
            witness = (g,) + w
    action = Check("morphism.action", "action-intertwines", witness is None, witness,
                   detail=f"{count} violations" if count else "",
                   seconds=time.perf_counter() - t0)
    t0 = time.perf_counter()
    bad = [(r, c) for c in range(src.dim) for r, v in fn.column(c)
           if tgt.grades[r] != src.grades[c]]
    grading = Check("morphism.grading", "grading-preserved", not bad,
                    bad[0] if bad else None, detail=f"{len(bad)} violations" if bad else "",
                    seconds=time.perf_counter() - t0)
    return (action, grading)


def _leibniz_morphism_checks(src: LeibnizRep, tgt: LeibnizRep, fn: Matrix) -> tuple[Check, ...]:
    F = src.x.k.field
    t0 = time.perf_counter()
    witness = None
    count = 0
    for g in range(src.x.g.dim):
        w, n = diff_witness(compose(fn, src.action[g]), compose(tgt.action[g], fn), (src.dim,))
        count += n
        if w is not None and witness is None:
            witness = (g,) + w
    action = Check("morphism.action", "action-intertwines", witness is None, witness,
                   detail=f"{count} violations" if count else "",
                   seconds=time.perf_counter() - t0)
    t0 = time.perf_counter()
    lhs = compose(kron(fn, identity(src.x.k.dim, F)), src.delta0)
    rhs = compose(tgt.delta0, fn)
    w, n = diff_witness(lhs, rhs, (src.dim,))
    coaction = Check("morphism.coaction", "coaction-intertwines", w is None, w,
                     detail=f"{n} violations" if n else "",
                     seconds=time.perf_counter() - t0)
    return (action, coaction)


def _morphism_checks(data) -> tuple[Check, ...]:
    src = _need(data, "source", "morphism")
    tgt = _need(data, "target", "morphism")
    fn = _need(data, "map", "morphism")
    if type(src) is not type(tgt):
        raise ValueError("source and target must be representations of one kind")
    if isinstance(src, ShelfRep):
        if not isinstance(fn, SetFn):
            raise ValueError("shelf morphisms need a SetFn map")
        if fn.domain != src.action.set_size or fn.codomain != tgt.action.set_size:
            raise ValueError("the map does not fit the carriers")
        return _shelf_morphism_checks(src, tgt, fn)
    if isinstance(src, GroupGradedRep):
        if not isinstance(fn, Matrix):
            raise ValueError("linear morphisms need a matrix map")
        if fn.cols != src.dim or fn.rows != tgt.dim:
            raise ValueError("the map does not fit the carriers")
        return _group_morphism_checks(src, tgt, fn)
    if isinstance(src, LeibnizRep):
        if not isinstance(fn, Matrix):
            raise ValueError("linear morphisms need a matrix map")
        if fn.cols != src.dim or fn.rows != tgt.dim:
            raise ValueError("the map does not fit the carriers")
        return _leibniz_morphism_checks(src, tgt, fn)
    raise TypeError(f"no morphism laws for {type(src).__name__}")


def coherence_check(kind: str, data) -> Report:
    """Finite coherence checks over explicitly supplied objects.

    data is a mapping whose keys depend on the kind:
      pentagon    objects, tensor(u, v), associator(u, v, w)
      triangle    objects, unit, associator, left_unitor(w), right_unitor(v)
      hexagon1    objects, tensor, braiding(u, v)   [strict associator]
      hexagon2    objects, tensor, braiding         [strict associator]
      naturality  objects, tensor, braiding
      morphism    source, target, map
    Callables receive representation objects and return maps of matching mode.
    """
    if kind == "pentagon":
        return Report(_pentagon_checks(data))
    if kind == "triangle":
        return Report(_triangle_checks(data))
    if kind == "hexagon1":
        return Report(_hexagon_checks(data, second=False))
    if kind == "hexagon2":
        return Report(_hexagon_checks(data, second=True))
    if kind == "naturality":
        return Report(_naturality_checks(data))
    if kind == "morphism":
        return Report(_morphism_checks(data))
    raise ValueError(f"unknown coherence kind {kind!r}")


@dataclass(frozen=True)
class YDCharacter:
    """A one-point module: a character eps_a on A and a cocharacter nu_c into C."""

    eps_a: object
    nu_c: object

    def as_module(self, system: BraidedSystem) -> GYDModule:
        return GYDModule(system, 1, self.eps_a, self.nu_c)


def enumerate_yd_characters(x: ShelfCrossedModule) -> tuple[YDCharacter, ...]:
    """One character per action-invariant element of R, in increasing order."""
    _require(check_shelf_crossed_module(x), "the crossed module")
    rs, ss = x.r.size, x.s.size
    out = []
    for r0 in range(rs):
        if all(x.act(r0, s) == r0 for s in range(ss)):
            out.append(YDCharacter(SetFn(ss, 1, [0] * ss), SetFn(1, rs, [r0])))
    return tuple(out)


def character_rep(x: ShelfCrossedModule, r0: int) -> ShelfRep:
    """The one-point representation graded by an action-invariant r0."""
    if not (0 <= r0 < x.r.size) or any(x.act(r0, s) != r0 for s in range(x.s.size)):
        raise ValueError("r0 must be a fixed point of the action")
    return ShelfRep(x, ShelfAction(x.s, [[0] * x.s.size]), SetFn(1, x.r.size, [r0]))


def unit_maps(x: ShelfCrossedModule, r0: int, rep: ShelfRep) -> tuple[SetFn, SetFn]:
    """The unitors of the one-point object: I (x) M -> M is the identity on
    points and M (x)~ I -> M is m -> m <| pi(r0)."""
    if not (0 <= r0 < x.r.size) or any(x.act(r0, s) != r0 for s in range(x.s.size)):
        raise ValueError("r0 must be a fixed point of the action")
    m = rep.action.set_size
    left = SetFn.identity(m)
    right = SetFn(m, m, [rep.action.act(p, x.pi(r0)) for p in range(m)])
    return left, right
