"""Yetter-Drinfel'd modules over rank-2 braided systems: the defining checks, the
connecting-map condition, graded-representation converters, the braiding every
bundle of modules carries, and braid-word evaluation."""

from __future__ import annotations

import time
from dataclasses import replace

from .braided import SET_MODE, BraidedModuleData, BraidedSystem, check_braided_module, cybe_check
from .exact import (
    Field,
    Matrix,
    SetFn,
    compose,
    diff_witness,
    flip,
    identity,
    kron,
    kron_apply,
    layered_diff,
    linearize,
)
from .groups import GroupCrossedModule, ShelfCrossedModule
from .leibniz import LeibnizRep, check_leibniz_rep, pair_matrix, rep_action_map, rep_coaction
from .reports import Check, Report
from .shelves import ShelfAction, check_shelf_action

MAX_EXPONENT = 8


class GYDModule:
    """Carrier M with rho: M(x)A -> M and delta: M -> M(x)C over a rank-2 system (C, A).

    The constructor validates shapes and modes; the three defining laws live in
    check_gyd.
    """

    __slots__ = ("system", "carrier", "rho", "delta")

    def __init__(self, system: BraidedSystem, carrier: int, rho, delta):
        if system.rank != 2:
            raise ValueError("the system must have exactly the two carriers (C, A)")
        m = int(carrier)
        c_dim, a_dim = system.carriers
        if system.mode == SET_MODE:
            if not isinstance(rho, SetFn) or not isinstance(delta, SetFn):
                raise ValueError("set-mode modules need SetFn structure maps")
            rho_shape = (rho.codomain, rho.domain)
            delta_shape = (delta.codomain, delta.domain)
        else:
            if not isinstance(rho, Matrix) or not isinstance(delta, Matrix):
                raise ValueError("linear modules need matrix structure maps")
            if rho.field != system.mode or delta.field != system.mode:
                raise ValueError("structure maps must live over the system field")
            rho_shape = (rho.rows, rho.cols)
            delta_shape = (delta.rows, delta.cols)
        if rho_shape != (m, m * a_dim):
            raise ValueError(f"rho has shape {rho_shape}, expected {(m, m * a_dim)}")
        if delta_shape != (m * c_dim, m):
            raise ValueError(f"delta has shape {delta_shape}, expected {(m * c_dim, m)}")
        self.system = system
        self.carrier = m
        self.rho = rho
        self.delta = delta


def check_gyd(module: GYDModule) -> Report:
    """Braided action over (A; sigma_AA), braided coaction over (C; sigma_CC), and
    the compatibility delta o rho = (rho (x) C) o (M (x) sigma_CA) o (delta (x) A)."""
    sys_ = module.system
    m = module.carrier
    c_dim, a_dim = sys_.carriers
    field = None if sys_.mode == SET_MODE else sys_.mode

    action = check_braided_module(
        BraidedModuleData(sys_.subsystem([1]), m, [module.rho]), "action"
    ).checks[0]
    coaction = check_braided_module(
        BraidedModuleData(sys_.subsystem([0]), m, [module.delta]), "coaction"
    ).checks[0]

    t0 = time.perf_counter()
    if field is None:
        id_m = identity(m)
        id_c = identity(c_dim)
        id_a = identity(a_dim)
        lhs = compose(module.delta, module.rho)
        rhs = compose(
            kron(module.rho, id_c),
            compose(kron(id_m, sys_.sigma[(0, 1)]), kron(module.delta, id_a)),
        )
        w, n = diff_witness(lhs, rhs, (m, a_dim))
    else:
        w, n = layered_diff(
            [[module.rho], [module.delta]],
            [[module.delta, a_dim], [m, sys_.sigma[(0, 1)]], [module.rho, c_dim]],
            (m, a_dim), field)
    compat = Check("gyd.compatibility", "action-coaction-compatibility", w is None, w,
                   detail=f"{n} violations" if n else "",
                   seconds=time.perf_counter() - t0)

    return Report((
        replace(action, check_id="gyd.braided-action"),
        replace(coaction, check_id="gyd.braided-coaction"),
        compat,
    ))


class ConnectingData:
    """A map pi: C -> A with the four exponents (alpha1, alpha2, gamma1, gamma2)."""

    __slots__ = ("pi", "exponents")

    def __init__(self, pi, exponents):
        exponents = tuple(int(e) for e in exponents)
        if len(exponents) != 4 or any(e < 0 for e in exponents):
            raise ValueError("exponents must be four non-negative integers")
        self.pi = pi
        self.exponents = exponents


def check_pi_condition(system: BraidedSystem, conn: ConnectingData) -> Report:
    """Both sides of the connecting-map condition as maps C^(x)3 -> A^(x)3.

    lhs = (A (x) s_AA^a1) o (c_AA (x) pi) o (pi (x) s_CA) o (c_CC (x) pi) o (C (x) s_CC^g1)
    rhs = (A (x) s_AA^a2) o (A (x) pi (x) A) o (c_CA (x) pi) o (C (x) pi (x) C) o (C (x) s_CC^g2)

    with c the plain flip. sigma^0 is the identity; exponents above 8 are rejected.
    """
    if system.rank != 2:
        raise ValueError("the connecting condition lives on a rank-2 system")
    if any(e > MAX_EXPONENT for e in conn.exponents):
        raise ValueError(f"exponents above {MAX_EXPONENT} are rejected")
    c_dim, a_dim = system.carriers
    pi = conn.pi
    a1, a2, g1, g2 = conn.exponents
    s_cc = system.sigma[(0, 0)]
    s_ca = system.sigma[(0, 1)]
    s_aa = system.sigma[(1, 1)]

    t0 = time.perf_counter()
    if system.mode == SET_MODE:
        if not isinstance(pi, SetFn) or pi.domain != c_dim or pi.codomain != a_dim:
            raise ValueError("pi must be a SetFn from C to A")
        id_c = identity(c_dim)
        id_a = identity(a_dim)
        c_cc = flip(c_dim, c_dim, None)
        c_aa = flip(a_dim, a_dim, None)
        c_ca = flip(c_dim, a_dim, None)
        stages = [id_c.kron(s_cc.power(g1)), c_cc.kron(pi), pi.kron(s_ca),
                  c_aa.kron(pi), id_a.kron(s_aa.power(a1))]
        lhs = stages[0]
        for st in stages[1:]:
            lhs = compose(st, lhs)
        stages = [id_c.kron(s_cc.power(g2)), id_c.kron(pi).kron(id_c), c_ca.kron(pi),
                  id_a.kron(pi).kron(id_a), id_a.kron(s_aa.power(a2))]
        rhs = stages[0]
        for st in stages[1:]:
            rhs = compose(st, rhs)
    else:
        F = system.mode
        if not isinstance(pi, Matrix) or pi.field != F:
            raise ValueError("pi must be a matrix over the system field")
        if pi.rows != a_dim or pi.cols != c_dim:
            raise ValueError(f"pi must be {a_dim} x {c_dim}")
        id_c = identity(c_dim, F)
        id_a = identity(a_dim, F)
        lhs = kron(id_c, s_cc.power(g1))
        lhs = kron_apply([flip(c_dim, c_dim, F), pi], lhs)
        lhs = kron_apply([pi, s_ca], lhs)
        lhs = kron_apply([flip(a_dim, a_dim, F), pi], lhs)
        lhs = kron_apply([id_a, s_aa.power(a1)], lhs)
        rhs = kron(id_c, s_cc.power(g2))
        rhs = kron_apply([id_c, pi, id_c], rhs)
        rhs = kron_apply([flip(c_dim, a_dim, F), pi], rhs)
        rhs = kron_apply([id_a, pi, id_a], rhs)
        rhs = kron_apply([id_a, s_aa.power(a2)], rhs)
    w, n = diff_witness(lhs, rhs, (c_dim, c_dim, c_dim))
    return Report((
        Check("pi.condition", "connecting-map-condition", w is None, w,
              detail=f"{n} violations" if n else "",
              seconds=time.perf_counter() - t0),
    ))


def connecting_data(kind: str, x, *, field: Field | None = None) -> ConnectingData:
    """The stock connecting map and exponents matching build_system(kind, x)."""
    if kind == "hopf":
        return ConnectingData(Matrix.identity(x.field, x.dim), (1, 1, 1, 1))
    if kind == "group_crmod":
        if field is None:
            raise ValueError("group_crmod needs a field")
        return ConnectingData(linearize(x.pi, field), (1, 1, 1, 1))
    if kind == "shelf_crmod":
        return ConnectingData(x.pi, (0, 1, 1, 1))
    if kind == "leibniz_crmod":
        F = x.k.field
        kd, gd = x.k.dim, x.g.dim
        grid = [[F.zero] * (kd + 1) for _ in range(gd + 1)]
        for r in range(gd):
            for c in range(kd):
                grid[r][c] = x.pi.data[r][c]
        grid[gd][kd] = F.one
        return ConnectingData(Matrix(F, grid), (0, 1, 1, 1))
    raise ValueError(f"unknown system kind {kind!r}")


class GroupGradedRep:
    """A K-graded space with a right G-action moving grade k to grade k.g.

    grades assigns a K-element to each basis vector; action holds one matrix per
    group element, with action[g][r][c] != 0 only when grades[r] = grades[c].g.
    """

    __slots__ = ("x", "field", "dim", "grades", "action")

    def __init__(self, x: GroupCrossedModule, grades, action):
        action = tuple(action)
        if len(action) != x.g.size:
            raise ValueError("one action matrix per group element")
        dim = action[0].rows
        field = action[0].field
        for mat in action:
            if mat.field != field or mat.rows != dim or mat.cols != dim:
                raise ValueError("action matrices must be square and share a field")
        grades = tuple(int(k) for k in grades)
        if len(grades) != dim or any(not 0 <= k < x.k.size for k in grades):
            raise ValueError("grades must assign a K-element to each basis vector")
        self.x = x
        self.field = field
        self.dim = dim
        self.grades = grades
        self.action = action


def check_group_graded_rep(rep: GroupGradedRep) -> Report:
    """Right-action axioms and the grading condition, with witnesses."""
    x, G = rep.x, rep.x.g
    checks = []

    t0 = time.perf_counter()
    ok = rep.action[G.identity] == Matrix.identity(rep.field, rep.dim)
    checks.append(Check("grrep.unit", "identity-acts-trivially", ok,
                        None if ok else (G.identity,),
                        seconds=time.perf_counter() - t0))

    t0 = time.perf_counter()
    w = next(
        (
            (a, b)
            for a in range(G.size)
            for b in range(G.size)
            if rep.action[G.op(a, b)] != rep.action[b] @ rep.action[a]
        ),
        None,
    )
    checks.append(Check("grrep.action", "right-action", w is None, w,
                        seconds=time.perf_counter() - t0))

    t0 = time.perf_counter()
    w = next(
        (
            (g, r, c)
            for g in range(G.size)
            for r in range(rep.dim)
            for c in range(rep.dim)
            if rep.action[g].data[r][c] and rep.grades[r] != x.act(rep.grades[c], g)
        ),
        None,
    )
    checks.append(Check("grrep.grading", "action-moves-grades", w is None, w,
                        seconds=time.perf_counter() - t0))
    return Report(tuple(checks))


class ShelfRep:
    """An R-graded set with an S-action and an optional grading-preserving twist.

    gr sends carrier points to R; the untwisted case takes f = identity.
    """

    __slots__ = ("x", "action", "gr", "twist")

    def __init__(self, x: ShelfCrossedModule, action: ShelfAction, gr: SetFn,
                 twist: SetFn | None = None):
        if action.shelf != x.s:
            raise ValueError("the action must be an action of S")
        m = action.set_size
        if gr.domain != m or gr.codomain != x.r.size:
            raise ValueError("gr must map the carrier to R")
        if twist is None:
            twist = SetFn.identity(m)
        if twist.domain != m or twist.codomain != m:
            raise ValueError("the twist must be a self-map of the carrier")
        self.x = x
        self.action = action
        self.gr = gr
        self.twist = twist


def check_shelf_rep(rep: ShelfRep) -> Report:
    """Action axiom, grading compatibility, and the two twist laws."""
    x = rep.x
    m, ss = rep.action.set_size, x.s.size
    checks = [replace(check_shelf_action(rep.action).checks[0], check_id="shrep.action")]

    t0 = time.perf_counter()
    w = next(
        (
            (p, s)
            for p in range(m)
            for s in range(ss)
            if rep.gr(rep.action.act(p, s)) != x.act(rep.gr(p), s)
        ),
        None,
    )
    checks.append(Check("shrep.grading", "grading-follows-action", w is None, w,
                        seconds=time.perf_counter() - t0))

    t0 = time.perf_counter()
    w = next(((p,) for p in range(m) if rep.gr(rep.twist(p)) != rep.gr(p)), None)
    checks.append(Check("shrep.twist-grading", "twist-preserves-grading", w is None, w,
                        seconds=time.perf_counter() - t0))

    t0 = time.perf_counter()
    w = next(
        (
            (p, s)
            for p in range(m)
            for s in range(ss)
            if rep.twist(rep.action.act(p, s)) != rep.action.act(rep.twist(p), s)
        ),
        None,
    )
    checks.append(Check("shrep.twist-action", "twist-commutes-with-action", w is None, w,
                        seconds=time.perf_counter() - t0))
    return Report(tuple(checks))


def _require(report: Report, what: str) -> None:
    if not report.passed:
        raise ValueError(f"{what} fails {report.first_failure().check_id}")


def as_gyd(rep, system: BraidedSystem) -> GYDModule:
    """Re-read a graded representation as a Yetter-Drinfel'd module over its system.

    Group reps get delta(e_r) = e_r (x) e_{grade(r)}; shelf reps get
    delta(p) = (f(p), gr(p)); Leibniz reps are unitarized with
    delta = delta0 + (- (x) 1). The representation axioms are verified first.
    """
    if isinstance(rep, GroupGradedRep):
        _require(check_group_graded_rep(rep), "representation")
        ks = rep.x.k.size
        F = rep.field
        rho = pair_matrix(F, rep.action, rep.dim)
        delta = Matrix.from_columns(
            F, rep.dim * ks, rep.dim,
            [[(r * ks + rep.grades[r], F.one)] for r in range(rep.dim)],
        )
        return GYDModule(system, rep.dim, rho, delta)
    if isinstance(rep, ShelfRep):
        _require(check_shelf_rep(rep), "representation")
        m, rs, ss = rep.action.set_size, rep.x.r.size, rep.x.s.size
        rho = SetFn(m * ss, m, [rep.action.act(p, s) for p in range(m) for s in range(ss)])
        delta = SetFn(m, m * rs, [rep.twist(p) * rs + rep.gr(p) for p in range(m)])
        return GYDModule(system, m, rho, delta)
    if isinstance(rep, LeibnizRep):
        _require(check_leibniz_rep(rep), "representation")
        return GYDModule(system, rep.dim, rep_action_map(rep), rep_coaction(rep))
    raise TypeError(f"no conversion for {type(rep).__name__}")


class RepresentationBundle:
    """Yetter-Drinfel'd modules over one shared system plus its connecting data.

    validate() runs check_gyd on every member and check_pi_condition once; the
    report is cached, so the braiding builders pay for it a single time.
    """

    __slots__ = ("system", "conn", "members", "_report")

    def __init__(self, system: BraidedSystem, conn: ConnectingData, members):
        members = tuple(members)
        if not members:
            raise ValueError("a bundle needs at least one member")
        for mod in members:
            if not isinstance(mod, GYDModule):
                raise ValueError("members must be GYDModules")
            if mod.system != system:
                raise ValueError("members must share the bundle system")
        self.system = system
        self.conn = conn
        self.members = members
        self._report = None

    def validate(self) -> Report:
        if self._report is None:
            report = Report(())
            for i, mod in enumerate(self.members):
                member = check_gyd(mod)
                report = report.merge(
                    Report(tuple(replace(c, check_id=f"m{i}.{c.check_id}") for c in member.checks))
                )
            self._report = report.merge(check_pi_condition(self.system, self.conn))
        return self._report


def _validated(bundle: RepresentationBundle) -> None:
    report = bundle.validate()
    if not report.passed:
        raise ValueError(f"bundle fails {report.first_failure().check_id}")


def braiding_map(pi, mi: GYDModule, mj: GYDModule):
    """sigma_gYD = (M_j (x) rho_i) o (c_{M_i,M_j} (x) pi) o (M_i (x) delta_j),
    in Sweedler form m (x) n -> n_(0) (x) m * pi(n_(1)).  No validation."""
    if mi.system.mode == SET_MODE:
        stage = SetFn.identity(mi.carrier).kron(mj.delta)
        stage = compose(flip(mi.carrier, mj.carrier, None).kron(pi), stage)
        return compose(SetFn.identity(mj.carrier).kron(mi.rho), stage)
    F = mi.system.mode
    m = kron(identity(mi.carrier, F), mj.delta)
    m = kron_apply([flip(mi.carrier, mj.carrier, F), pi], m)
    return kron_apply([identity(mj.carrier, F), mi.rho], m)


def gyd_braiding(bundle: RepresentationBundle, i: int, j: int):
    """The induced braiding M_i (x) M_j -> M_j (x) M_i of a validated bundle."""
    _validated(bundle)
    n = len(bundle.members)
    if not (0 <= i < n and 0 <= j < n):
        raise ValueError("member index out of range")
    return braiding_map(bundle.conn.pi, bundle.members[i], bundle.members[j])


def check_ybe_family(bundle: RepresentationBundle) -> Report:
    """The colored YBE on M_i (x) M_j (x) M_k for every ordered member triple."""
    _validated(bundle)
    n = len(bundle.members)
    field = None if bundle.system.mode == SET_MODE else bundle.system.mode
    sizes = [mod.carrier for mod in bundle.members]
    sig = {(i, j): gyd_braiding(bundle, i, j) for i in range(n) for j in range(n)}
    checks = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                checks.append(
                    cybe_check(sig[(i, j)], sig[(i, k)], sig[(j, k)],
                               (sizes[i], sizes[j], sizes[k]), field,
                               check_id=f"ybe.{i}.{j}.{k}")
                )
    return Report(tuple(checks))


def braid_operator(sigma, strands: int, word):
    """Evaluate a braid word on M^(x)n, one generator s_i^{+-1} per letter.

    The first letter acts first. Negative letters use the exact inverse of
    sigma and fail loudly when it does not exist.
    """
    strands = int(strands)
    if strands < 2:
        raise ValueError("braid words need at least two strands")
    if isinstance(sigma, SetFn):
        if sigma.domain != sigma.codomain:
            raise ValueError("the braiding must be an endomap of M (x) M")
        d = _isqrt_exact(sigma.domain)
        field = None
    else:
        if sigma.rows != sigma.cols:
            raise ValueError("the braiding must be an endomap of M (x) M")
        d = _isqrt_exact(sigma.rows)
        field = sigma.field
    inverse = None
    total = d ** strands
    acc = identity(total) if field is None else identity(total, field)
    for letter in word:
        letter = int(letter)
        idx = abs(letter)
        if not 1 <= idx <= strands - 1:
            raise ValueError(f"letter {letter} out of range for {strands} strands")
        if letter < 0 and inverse is None:
            try:
                inverse = sigma.inverse()
            except ValueError:
                raise ValueError("negative letters need an invertible braiding") from None
        op = sigma if letter > 0 else inverse
        left, right = d ** (idx - 1), d ** (strands - 1 - idx)
        if field is None:
            acc = compose(SetFn.identity(left).kron(op).kron(SetFn.identity(right)), acc)
        else:
            acc = kron_apply([identity(left, field), op, identity(right, field)], acc)
    return acc


def _isqrt_exact(n: int) -> int:
    from math import isqrt

    d = isqrt(n)
    if d * d != n:
        raise ValueError("the braiding must act on a square-sized space")
    return d
