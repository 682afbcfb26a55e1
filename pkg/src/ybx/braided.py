"""Braided systems in Set and Vect: the colored Yang-Baxter equation, braided
(co)modules, structural braidings of algebraic carriers, and the rank-2 builders."""

from __future__ import annotations

import time

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
from .groups import (
    GroupCrossedModule,
    ShelfCrossedModule,
    check_group_crossed_module,
    check_shelf_crossed_module,
)
from .leibniz import (
    LeibnizCrossedModule,
    UnitalLeibnizAlgebra,
    action_on_kplus,
    check_leibniz,
    check_leibniz_crossed_module,
    pair_matrix,
)
from .reports import Check, Report
from .shelves import Shelf, sigma_sd

SET_MODE = "set"


class AssocAlgebra:
    """A unital associative algebra as structure tensors mu: A(x)A -> A, nu: field -> A."""

    __slots__ = ("field", "dim", "mu", "nu")

    def __init__(self, field: Field, dim: int, mu: Matrix, nu: Matrix):
        if mu.rows != dim or mu.cols != dim * dim:
            raise ValueError("mu must be a dim x dim^2 matrix")
        if nu.rows != dim or nu.cols != 1:
            raise ValueError("nu must be a dim x 1 matrix")
        if mu.field != field or nu.field != field:
            raise ValueError("field mismatch")
        self.field = field
        self.dim = dim
        self.mu = mu
        self.nu = nu


class Coalgebra:
    """A counital coalgebra as structure tensors delta: C -> C(x)C, eps: C -> field."""

    __slots__ = ("field", "dim", "delta", "eps")

    def __init__(self, field: Field, dim: int, delta: Matrix, eps: Matrix):
        if delta.rows != dim * dim or delta.cols != dim:
            raise ValueError("delta must be a dim^2 x dim matrix")
        if eps.rows != 1 or eps.cols != dim:
            raise ValueError("eps must be a 1 x dim matrix")
        if delta.field != field or eps.field != field:
            raise ValueError("field mismatch")
        self.field = field
        self.dim = dim
        self.delta = delta
        self.eps = eps


def check_assoc_algebra(alg: AssocAlgebra) -> Report:
    """Associativity and both unit laws as exact matrix identities."""
    d, F = alg.dim, alg.field
    eye = Matrix.identity(F, d)
    checks = []

    t0 = time.perf_counter()
    w, n = diff_witness(alg.mu @ kron(alg.mu, eye), alg.mu @ kron(eye, alg.mu), (d, d, d))
    checks.append(Check("algebra.associativity", "associativity", w is None, w,
                        detail=f"{n} violations" if n else "",
                        seconds=time.perf_counter() - t0))

    t0 = time.perf_counter()
    w, _ = diff_witness(alg.mu @ kron(alg.nu, eye), eye, (d,))
    checks.append(Check("algebra.unit-left", "left-unit", w is None, w,
                        seconds=time.perf_counter() - t0))

    t0 = time.perf_counter()
    w, _ = diff_witness(alg.mu @ kron(eye, alg.nu), eye, (d,))
    checks.append(Check("algebra.unit-right", "right-unit", w is None, w,
                        seconds=time.perf_counter() - t0))
    return Report(tuple(checks))


def check_coalgebra(coa: Coalgebra) -> Report:
    """Coassociativity and both counit laws as exact matrix identities."""
    d, F = coa.dim, coa.field
    eye = Matrix.identity(F, d)
    checks = []

    t0 = time.perf_counter()
    w, n = diff_witness(kron(coa.delta, eye) @ coa.delta, kron(eye, coa.delta) @ coa.delta, (d,))
    checks.append(Check("coalgebra.coassociativity", "coassociativity", w is None, w,
                        detail=f"{n} violations" if n else "",
                        seconds=time.perf_counter() - t0))

    t0 = time.perf_counter()
    w, _ = diff_witness(kron(coa.eps, eye) @ coa.delta, eye, (d,))
    checks.append(Check("coalgebra.counit-left", "left-counit", w is None, w,
                        seconds=time.perf_counter() - t0))

    t0 = time.perf_counter()
    w, _ = diff_witness(kron(eye, coa.eps) @ coa.delta, eye, (d,))
    checks.append(Check("coalgebra.counit-right", "right-counit", w is None, w,
                        seconds=time.perf_counter() - t0))
    return Report(tuple(checks))


def sigma_ass(mu: Matrix, nu: Matrix) -> Matrix:
    """v (x) v' -> 1 (x) vv'. No axioms assumed; YBE holds iff mu is associative."""
    return kron(nu, mu)


def sigma_coass(delta: Matrix, eps: Matrix) -> Matrix:
    """v (x) v' -> eps(v) Delta(v'). No axioms assumed; YBE holds iff delta is coassociative."""
    return kron(eps, delta)


def sigma_lei(U: UnitalLeibnizAlgebra) -> Matrix:
    """v (x) v' -> v' (x) v + 1 (x) [v, v']. YBE holds iff the base bracket is Leibniz."""
    F = U.field
    nu = Matrix.from_columns(F, U.dim, 1, [[(U.unit, F.one)]])
    return flip(U.dim, U.dim, F).add(kron(nu, U.bracket_map()))


class BraidedSystem:
    """Carriers V_0..V_{r-1} with components sigma[(i, j)]: V_i(x)V_j -> V_j(x)V_i, i <= j.

    mode is either the string "set" (SetFn components over finite sets) or a Field
    (exact matrix components). Only the i <= j components exist; the defining law
    is the colored YBE, verified by check_cybe, never assumed here.
    """

    __slots__ = ("mode", "carriers", "sigma")

    def __init__(self, mode, carriers, sigma: dict):
        if mode != SET_MODE and not isinstance(mode, Field):
            raise ValueError("mode must be 'set' or a Field")
        carriers = tuple(int(c) for c in carriers)
        if not carriers or any(c < 1 for c in carriers):
            raise ValueError("carriers must be positive sizes or dimensions")
        rank = len(carriers)
        expected = {(i, j) for i in range(rank) for j in range(i, rank)}
        if set(sigma) != expected:
            raise ValueError("sigma needs exactly the components with i <= j")
        for (i, j), s in sigma.items():
            size = carriers[i] * carriers[j]
            if mode == SET_MODE:
                if not isinstance(s, SetFn) or s.domain != size or s.codomain != size:
                    raise ValueError(f"sigma[{i},{j}] must be a SetFn on {size} points")
            else:
                if not isinstance(s, Matrix) or s.field != mode:
                    raise ValueError(f"sigma[{i},{j}] must be a matrix over {mode!r}")
                if s.rows != size or s.cols != size:
                    raise ValueError(f"sigma[{i},{j}] must be {size} x {size}")
        self.mode = mode
        self.carriers = carriers
        self.sigma = dict(sigma)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BraidedSystem)
            and self.mode == other.mode
            and self.carriers == other.carriers
            and self.sigma == other.sigma
        )

    __hash__ = None

    @property
    def rank(self) -> int:
        return len(self.carriers)

    @property
    def is_linear(self) -> bool:
        return self.mode != SET_MODE

    def component(self, i: int, j: int):
        if not 0 <= i <= j < self.rank:
            raise ValueError(f"component ({i},{j}) out of range; only i <= j are stored")
        return self.sigma[(i, j)]

    def subsystem(self, indices) -> "BraidedSystem":
        """The braided system on a sorted subfamily of the carriers."""
        indices = tuple(indices)
        if list(indices) != sorted(set(indices)):
            raise ValueError("indices must be strictly increasing")
        sigma = {
            (a, b): self.sigma[(indices[a], indices[b])]
            for a in range(len(indices))
            for b in range(a, len(indices))
        }
        return BraidedSystem(self.mode, [self.carriers[i] for i in indices], sigma)

    def invertibility(self) -> dict:
        """Which components are invertible; metadata only, nothing downstream assumes it."""
        out = {}
        for key, s in self.sigma.items():
            if isinstance(s, SetFn):
                out[key] = s.is_bijective()
            else:
                try:
                    s.inverse()
                    out[key] = True
                except ValueError:
                    out[key] = False
        return out


def rank_one(sigma, size: int) -> BraidedSystem:
    """Wrap a single braiding candidate on V(x)V as a rank-1 system."""
    mode = SET_MODE if isinstance(sigma, SetFn) else sigma.field
    return BraidedSystem(mode, (size,), {(0, 0): sigma})


def cybe_sides(s_ij, s_ik, s_jk, sizes, field: Field | None = None):
    """Both sides of the colored YBE on V_i(x)V_j(x)V_k, avoiding large square factors."""
    vi, vj, vk = sizes
    if field is None:
        id_i, id_j, id_k = identity(vi), identity(vj), identity(vk)
        lhs = compose(kron(s_jk, id_i), compose(kron(id_j, s_ik), kron(s_ij, id_k)))
        rhs = compose(kron(id_k, s_ij), compose(kron(s_ik, id_j), kron(id_i, s_jk)))
        return lhs, rhs
    id_i = identity(vi, field)
    id_j = identity(vj, field)
    id_k = identity(vk, field)
    lhs = kron_apply([s_jk, id_i], kron_apply([id_j, s_ik], kron(s_ij, id_k)))
    rhs = kron_apply([id_k, s_ij], kron_apply([s_ik, id_j], kron(id_i, s_jk)))
    return lhs, rhs


def cybe_check(s_ij, s_ik, s_jk, sizes, field: Field | None = None,
               check_id: str = "cybe", law: str = "colored-yang-baxter") -> Check:
    """One cYBE instance as a Check with first witness and violation count."""
    t0 = time.perf_counter()
    vi, vj, vk = sizes
    if field is None:
        lhs, rhs = cybe_sides(s_ij, s_ik, s_jk, sizes, field)
        w, n = diff_witness(lhs, rhs, sizes)
    else:
        w, n = layered_diff(
            [[s_ij, vk], [vj, s_ik], [s_jk, vi]],
            [[vi, s_jk], [s_ik, vj], [vk, s_ij]],
            sizes, field)
    return Check(check_id, law, w is None, w,
                 detail=f"{n} violations" if n else "",
                 seconds=time.perf_counter() - t0)


def check_cybe(system: BraidedSystem) -> Report:
    """The colored YBE on V_i(x)V_j(x)V_k for every ordered triple i <= j <= k."""
    field = None if system.mode == SET_MODE else system.mode
    checks = []
    r = system.rank
    for i in range(r):
        for j in range(i, r):
            for k in range(j, r):
                checks.append(
                    cybe_check(
                        system.sigma[(i, j)],
                        system.sigma[(i, k)],
                        system.sigma[(j, k)],
                        (system.carriers[i], system.carriers[j], system.carriers[k]),
                        field,
                        check_id=f"cybe.{i}.{j}.{k}",
                    )
                )
    return Report(tuple(checks))


class BraidedModuleData:
    """Carrier M with one structure map per system component.

    For side "action" the maps are rho_i: M(x)V_i -> M; for side "coaction"
    delta_i: M -> M(x)V_i. Shapes are validated by check_braided_module.
    """

    __slots__ = ("system", "carrier", "maps")

    def __init__(self, system: BraidedSystem, carrier: int, maps):
        maps = tuple(maps)
        if len(maps) != system.rank:
            raise ValueError("one structure map per system component")
        self.system = system
        self.carrier = int(carrier)
        self.maps = maps


def _shape_of(m):
    if isinstance(m, SetFn):
        return m.codomain, m.domain
    return m.rows, m.cols


def check_braided_module(data: BraidedModuleData, side: str) -> Report:
    """Eq. (BrMod) for actions, or its coaction dual, over all component pairs i <= j."""
    if side not in ("action", "coaction"):
        raise ValueError("side must be 'action' or 'coaction'")
    sys_ = data.system
    m = data.carrier
    field = None if sys_.mode == SET_MODE else sys_.mode
    for i, f in enumerate(data.maps):
        if sys_.mode == SET_MODE and not isinstance(f, SetFn):
            raise ValueError("set-mode modules need SetFn structure maps")
        if sys_.mode != SET_MODE and not isinstance(f, Matrix):
            raise ValueError("linear-mode modules need matrix structure maps")
        out, inp = _shape_of(f)
        want = (m, m * sys_.carriers[i]) if side == "action" else (m * sys_.carriers[i], m)
        if (out, inp) != want:
            raise ValueError(f"map {i} has shape {(out, inp)}, expected {want}")
    id_m = identity(m) if field is None else None
    checks = []
    for i in range(sys_.rank):
        for j in range(i, sys_.rank):
            vi, vj = sys_.carriers[i], sys_.carriers[j]
            s_ij = sys_.sigma[(i, j)]
            t0 = time.perf_counter()
            if side == "action":
                rho_i, rho_j = data.maps[i], data.maps[j]
                if field is None:
                    id_i, id_j = identity(vi), identity(vj)
                    lhs = compose(rho_j, kron(rho_i, id_j))
                    rhs = compose(rho_i, compose(kron(rho_j, id_i), kron(id_m, s_ij)))
                    w, n = diff_witness(lhs, rhs, (m, vi, vj))
                else:
                    w, n = layered_diff(
                        [[rho_i, vj], [rho_j]],
                        [[m, s_ij], [rho_j, vi], [rho_i]],
                        (m, vi, vj), field)
                cid = f"brmod.{i}.{j}"
                law = "braided-module"
            else:
                d_i, d_j = data.maps[i], data.maps[j]
                if field is None:
                    id_i, id_j = identity(vi), identity(vj)
                    lhs = compose(kron(d_j, id_i), d_i)
                    rhs = compose(kron(id_m, s_ij), compose(kron(d_i, id_j), d_j))
                    w, n = diff_witness(lhs, rhs, (m,))
                else:
                    w, n = layered_diff(
                        [[d_i], [d_j, vi]],
                        [[d_j], [d_i, vj], [m, s_ij]],
                        (m,), field)
                cid = f"brcomod.{i}.{j}"
                law = "braided-comodule"
            checks.append(Check(cid, law, w is None, w,
                                detail=f"{n} violations" if n else "",
                                seconds=time.perf_counter() - t0))
    return Report(tuple(checks))


def structural_braiding(carrier) -> BraidedSystem:
    """The rank-1 braided system canonically attached to an algebraic carrier.

    Shelves get sigma_SD in Set; unital algebras sigma_Ass, counital coalgebras
    sigma_coAss, and unital Leibniz algebras sigma_Lei in Vect. The carrier's
    own axioms are verified first.
    """
    if isinstance(carrier, Shelf):
        return rank_one(sigma_sd(carrier), carrier.size)
    if isinstance(carrier, AssocAlgebra):
        report = check_assoc_algebra(carrier)
        if not report.passed:
            raise ValueError(f"carrier fails {report.first_failure().check_id}")
        return rank_one(sigma_ass(carrier.mu, carrier.nu), carrier.dim)
    if isinstance(carrier, Coalgebra):
        report = check_coalgebra(carrier)
        if not report.passed:
            raise ValueError(f"carrier fails {report.first_failure().check_id}")
        return rank_one(sigma_coass(carrier.delta, carrier.eps), carrier.dim)
    if isinstance(carrier, UnitalLeibnizAlgebra):
        report = check_leibniz(carrier.base)
        if not report.passed:
            raise ValueError("carrier fails leibniz-identity")
        return rank_one(sigma_lei(carrier), carrier.dim)
    raise TypeError(f"no structural braiding for {type(carrier).__name__}")


def _hopf_system(H) -> BraidedSystem:
    from .hopf import adjoint_entwining, check_hopf_algebra

    report = check_hopf_algebra(H)
    if not report.passed:
        raise ValueError(f"input fails {report.first_failure().check_id}")
    F, d = H.field, H.dim
    return BraidedSystem(
        F,
        (d, d),
        {
            (0, 0): sigma_coass(H.delta, H.eps),
            (0, 1): adjoint_entwining(H),
            (1, 1): sigma_ass(H.mu, H.nu),
        },
    )


def _group_crmod_system(x: GroupCrossedModule, field: Field) -> BraidedSystem:
    report = check_group_crossed_module(x)
    if not report.passed:
        raise ValueError(f"input fails {report.first_failure().check_id}")
    ks, gs = x.k.size, x.g.size
    coass = SetFn(ks * ks, ks * ks, [b * ks + b for a in range(ks) for b in range(ks)])
    ass = SetFn(
        gs * gs,
        gs * gs,
        [x.g.identity * gs + x.g.op(a, b) for a in range(gs) for b in range(gs)],
    )
    ca = SetFn(
        ks * gs,
        gs * ks,
        [b * ks + x.act(a, b) for a in range(ks) for b in range(gs)],
    )
    return BraidedSystem(
        field,
        (ks, gs),
        {
            (0, 0): linearize(coass, field),
            (0, 1): linearize(ca, field),
            (1, 1): linearize(ass, field),
        },
    )


def _shelf_crmod_system(x: ShelfCrossedModule, variant: str = "coass") -> BraidedSystem:
    if variant not in ("coass", "sd"):
        raise ValueError("variant must be 'coass' or 'sd'")
    report = check_shelf_crossed_module(x)
    if not report.passed:
        raise ValueError(f"input fails {report.first_failure().check_id}")
    rs, ss = x.r.size, x.s.size
    if variant == "coass":
        cc = SetFn(rs * rs, rs * rs, [b * rs + b for a in range(rs) for b in range(rs)])
    else:
        cc = sigma_sd(x.r)
    ca = SetFn(rs * ss, ss * rs, [b * rs + x.act(a, b) for a in range(rs) for b in range(ss)])
    return BraidedSystem(
        SET_MODE,
        (rs, ss),
        {(0, 0): cc, (0, 1): ca, (1, 1): sigma_sd(x.s)},
    )


def _leibniz_crmod_system(x: LeibnizCrossedModule) -> BraidedSystem:
    report = check_leibniz(x.k).merge(check_leibniz(x.g)).merge(check_leibniz_crossed_module(x))
    if not report.passed:
        raise ValueError(f"input fails {report.first_failure().check_id}")
    F = x.k.field
    kplus = UnitalLeibnizAlgebra(x.k)
    gplus = UnitalLeibnizAlgebra(x.g)
    kp, gp = kplus.dim, gplus.dim
    act = pair_matrix(F, action_on_kplus(x), kp)
    # (k, g) -> (k, g1, g2) -> (g1, k, g2) -> (g1, k . g2)
    m = kron(Matrix.identity(F, kp), gplus.delta)
    m = kron_apply([flip(kp, gp, F), Matrix.identity(F, gp)], m)
    ca = kron_apply([Matrix.identity(F, gp), act], m)
    return BraidedSystem(
        F,
        (kp, gp),
        {
            (0, 0): sigma_coass(kplus.delta, kplus.eps),
            (0, 1): ca,
            (1, 1): sigma_lei(gplus),
        },
    )


def build_system(kind: str, x, *, field: Field | None = None, variant: str = "coass",
                 mode: str | None = None) -> BraidedSystem:
    """The rank-2 braided systems with components (C, A).

    kind "hopf": C = A = H with (sigma_coAss, adjoint entwining, sigma_Ass).
    kind "group_crmod": C = field[K], A = field[G] with the action entwining.
    kind "shelf_crmod": C = R, A = S in Set; variant picks sigma_CC in
    {"coass", "sd"}. kind "leibniz_crmod": C = k+, A = g+ in Vect.
    """
    linear_only = {"hopf", "group_crmod", "leibniz_crmod"}
    if mode == SET_MODE and kind in linear_only:
        raise ValueError(f"kind {kind!r} builds a linear system; set mode is unavailable")
    if mode == "linear" and kind == "shelf_crmod":
        raise ValueError("kind 'shelf_crmod' builds a set-mode system")
    if kind == "hopf":
        return _hopf_system(x)
    if kind == "group_crmod":
        if field is None:
            raise ValueError("group_crmod needs a field")
        return _group_crmod_system(x, field)
    if kind == "shelf_crmod":
        return _shelf_crmod_system(x, variant)
    if kind == "leibniz_crmod":
        return _leibniz_crmod_system(x)
    raise ValueError(f"unknown system kind {kind!r}")
