"""Finite-dimensional Hopf algebras as exact structure tensors: group algebras and
their duals, algebra characters, and the adjoint braidings they induce on H."""

from __future__ import annotations

import time

from .braided import (
    AssocAlgebra,
    Coalgebra,
    check_assoc_algebra,
    check_coalgebra,
    cybe_check,
    sigma_ass,
    sigma_coass,
)
from .exact import (
    Field,
    Matrix,
    SetFn,
    diff_witness,
    flip,
    kron,
    kron_apply,
    linearize,
    permutation_matrix,
)
from .groups import FiniteGroup
from .reports import Check, Report


class FinHopfAlgebra:
    """Structure tensors (mu, nu, delta, eps, antipode) over an exact field.

    The constructor checks shapes only; check_hopf_algebra verifies the axioms,
    and every builder in this module runs it before returning.
    """

    __slots__ = ("field", "dim", "mu", "nu", "delta", "eps", "antipode")

    def __init__(self, field: Field, dim: int, mu: Matrix, nu: Matrix,
                 delta: Matrix, eps: Matrix, antipode: Matrix):
        shapes = {
            "mu": (mu, dim, dim * dim),
            "nu": (nu, dim, 1),
            "delta": (delta, dim * dim, dim),
            "eps": (eps, 1, dim),
            "antipode": (antipode, dim, dim),
        }
        for name, (mat, r, c) in shapes.items():
            if mat.field != field:
                raise ValueError(f"{name} must live over {field!r}")
            if (mat.rows, mat.cols) != (r, c):
                raise ValueError(f"{name} must be {r} x {c}")
        self.field = field
        self.dim = dim
        self.mu = mu
        self.nu = nu
        self.delta = delta
        self.eps = eps
        self.antipode = antipode

    def algebra(self) -> AssocAlgebra:
        return AssocAlgebra(self.field, self.dim, self.mu, self.nu)

    def coalgebra(self) -> Coalgebra:
        return Coalgebra(self.field, self.dim, self.delta, self.eps)


def check_hopf_algebra(H: FinHopfAlgebra) -> Report:
    """All Hopf axioms as exact matrix identities: (co)algebra, bialgebra, antipode."""
    F, d = H.field, H.dim
    eye = Matrix.identity(F, d)
    report = check_assoc_algebra(H.algebra()).merge(check_coalgebra(H.coalgebra()))
    checks = []

    t0 = time.perf_counter()
    lhs = H.delta @ H.mu
    rhs = kron_apply([H.mu, H.mu], kron_apply([eye, flip(d, d, F), eye], kron(H.delta, H.delta)))
    w, _ = diff_witness(lhs, rhs, (d, d))
    checks.append(Check("hopf.bialgebra-product", "coproduct-is-algebra-map", w is None, w,
                        seconds=time.perf_counter() - t0))

    t0 = time.perf_counter()
    w, _ = diff_witness(H.eps @ H.mu, kron(H.eps, H.eps), (d, d))
    checks.append(Check("hopf.bialgebra-counit", "counit-is-algebra-map", w is None, w,
                        seconds=time.perf_counter() - t0))

    t0 = time.perf_counter()
    w, _ = diff_witness(H.delta @ H.nu, kron(H.nu, H.nu), (1,))
    checks.append(Check("hopf.bialgebra-unit", "unit-is-group-like", w is None, w,
                        seconds=time.perf_counter() - t0))

    t0 = time.perf_counter()
    w, _ = diff_witness(H.eps @ H.nu, Matrix.identity(F, 1), (1,))
    checks.append(Check("hopf.bialgebra-scalar", "counit-of-unit", w is None, w,
                        seconds=time.perf_counter() - t0))

    nu_eps = H.nu @ H.eps
    t0 = time.perf_counter()
    w, _ = diff_witness(H.mu @ kron(H.antipode, eye) @ H.delta, nu_eps, (d,))
    checks.append(Check("hopf.antipode-left", "antipode-law-left", w is None, w,
                        seconds=time.perf_counter() - t0))

    t0 = time.perf_counter()
    w, _ = diff_witness(H.mu @ kron(eye, H.antipode) @ H.delta, nu_eps, (d,))
    checks.append(Check("hopf.antipode-right", "antipode-law-right", w is None, w,
                        seconds=time.perf_counter() - t0))
    return report.merge(Report(tuple(checks)))


def group_algebra(G: FiniteGroup, field: Field) -> FinHopfAlgebra:
    """field[G]: basis indexed by group elements, group-like coproduct, S(g) = g^{-1}."""
    n = G.size
    product = SetFn(n * n, n, [G.op(a, b) for a in range(n) for b in range(n)])
    mu = linearize(product, field)
    nu = Matrix.from_columns(field, n, 1, [[(G.identity, field.one)]])
    delta = Matrix.from_columns(field, n * n, n, [[(g * n + g, field.one)] for g in range(n)])
    eps = Matrix.from_columns(field, 1, n, [[(0, field.one)] for _ in range(n)])
    antipode = permutation_matrix(field, G.inv)
    H = FinHopfAlgebra(field, n, mu, nu, delta, eps, antipode)
    report = check_hopf_algebra(H)
    if not report.passed:
        raise ValueError(f"group algebra fails {report.first_failure().check_id}")
    return H


def dual_group_algebra(K: FiniteGroup, field: Field) -> FinHopfAlgebra:
    """Functions on K: idempotent basis, coproduct summing over factorizations."""
    n = K.size
    mu = Matrix.from_columns(
        field, n, n * n,
        [[(a, field.one)] if a == b else [] for a in range(n) for b in range(n)],
    )
    nu = Matrix.from_columns(field, n, 1, [[(k, field.one) for k in range(n)]])
    delta = Matrix.from_columns(
        field, n * n, n,
        [[(a * n + b, field.one) for a in range(n) for b in range(n) if K.op(a, b) == k]
         for k in range(n)],
    )
    eps = Matrix.from_columns(
        field, 1, n, [[(0, field.one)] if k == K.identity else [] for k in range(n)]
    )
    antipode = permutation_matrix(field, K.inv)
    H = FinHopfAlgebra(field, n, mu, nu, delta, eps, antipode)
    report = check_hopf_algebra(H)
    if not report.passed:
        raise ValueError(f"dual group algebra fails {report.first_failure().check_id}")
    return H


def adjoint_entwining(H: FinHopfAlgebra) -> Matrix:
    """h (x) h' -> h'_(2) (x) S(h'_(1)) h h'_(3), the entwining between the two copies of H."""
    F, d = H.field, H.dim
    eye = Matrix.identity(F, d)
    mu2 = H.mu @ kron(H.mu, eye)
    delta2 = kron(H.delta, eye) @ H.delta
    c = flip(d, d, F)
    # (h, h') -> (h, h'1, h'2, h'3) -> (h'1, h, h'2, h'3) -> (S h'1, h'2, h, h'3)
    #         -> (h'2, S h'1, h, h'3) -> (h'2, (S h'1) h h'3)
    m = kron(eye, delta2)
    m = kron_apply([c, eye, eye], m)
    m = kron_apply([H.antipode, c, eye], m)
    m = kron_apply([c, eye, eye], m)
    return kron_apply([eye, mu2], m)


class HopfCharacterPair:
    """An algebra character zeta: H -> field and a group-like cocharacter eta: field -> H."""

    __slots__ = ("zeta", "eta")

    def __init__(self, zeta: Matrix, eta: Matrix):
        if zeta.rows != 1 or eta.cols != 1 or zeta.cols != eta.rows:
            raise ValueError("zeta must be a row, eta a column, on the same space")
        if zeta.field != eta.field:
            raise ValueError("field mismatch")
        self.zeta = zeta
        self.eta = eta


def check_character_pair(H: FinHopfAlgebra, pair: HopfCharacterPair) -> Report:
    """zeta multiplicative and unital; eta group-like and counital."""
    F, d = H.field, H.dim
    one = Matrix.identity(F, 1)
    checks = []
    for cid, law, lhs, rhs, dims in (
        ("char.multiplicative", "zeta-of-product", pair.zeta @ H.mu,
         kron(pair.zeta, pair.zeta), (d, d)),
        ("char.unital", "zeta-of-unit", pair.zeta @ H.nu, one, (1,)),
        ("char.group-like", "eta-group-like", H.delta @ pair.eta,
         kron(pair.eta, pair.eta), (1,)),
        ("char.counital", "counit-of-eta", H.eps @ pair.eta, one, (1,)),
    ):
        t0 = time.perf_counter()
        w, _ = diff_witness(lhs, rhs, dims)
        checks.append(Check(cid, law, w is None, w, seconds=time.perf_counter() - t0))
    return Report(tuple(checks))


def counit_pair(H: FinHopfAlgebra) -> HopfCharacterPair:
    return HopfCharacterPair(H.eps, H.nu)


def group_character(G: FiniteGroup, field: Field, values) -> Matrix:
    """The row vector of a homomorphism G -> field^*, validated pointwise."""
    vals = [field.coerce(v) for v in values]
    if len(vals) != G.size:
        raise ValueError("one value per group element")
    if vals[G.identity] != field.one:
        raise ValueError("character must send the identity to 1")
    for a in range(G.size):
        for b in range(G.size):
            if vals[G.op(a, b)] != field.mul(vals[a], vals[b]):
                raise ValueError(f"not multiplicative at ({a}, {b})")
    return Matrix(field, [vals])


def group_like(field: Field, dim: int, index: int) -> Matrix:
    """The cocharacter picking out one basis vector (a group element of field[G])."""
    if not 0 <= index < dim:
        raise ValueError("index out of range")
    return Matrix.from_columns(field, dim, 1, [[(index, field.one)]])


def check_yd_character(H: FinHopfAlgebra, pair: HopfCharacterPair) -> Report:
    """The compatibility of (zeta, eta) with the adjoint entwining, strict and weakened.

    strict: nu_C o eps_A = (eps_A (x) C) o sigma_{C,A} o (nu_C (x) A) with
    eps_A = zeta, nu_C = eta. The weakened forms tensor the difference with the
    identity and compose with sigma_Ass (before) or sigma_coAss (after); they
    hold for every character pair and suffice for the braiding constructions.
    """
    F, d = H.field, H.dim
    eye = Matrix.identity(F, d)
    sigma_ca = adjoint_entwining(H)
    checks = []

    t0 = time.perf_counter()
    lhs = pair.eta @ pair.zeta
    rhs = kron(pair.zeta, eye) @ sigma_ca @ kron(pair.eta, eye)
    w, _ = diff_witness(lhs, rhs, (d,))
    checks.append(Check("ydchar.strict", "character-compatibility", w is None, w,
                        seconds=time.perf_counter() - t0))

    difference = rhs.sub(lhs)
    t0 = time.perf_counter()
    pre = kron(difference, eye) @ sigma_ass(H.mu, H.nu)
    checks.append(Check("ydchar.weak-pre", "compatibility-after-sigma-ass", pre.is_zero(),
                        None if pre.is_zero() else diff_witness(pre, Matrix.zeros(F, pre.rows, pre.cols), (d, d))[0],
                        seconds=time.perf_counter() - t0))

    t0 = time.perf_counter()
    post = sigma_coass(H.delta, H.eps) @ kron(difference, eye)
    checks.append(Check("ydchar.weak-post", "compatibility-before-sigma-coass", post.is_zero(),
                        None if post.is_zero() else diff_witness(post, Matrix.zeros(F, post.rows, post.cols), (d, d))[0],
                        seconds=time.perf_counter() - t0))
    return Report(tuple(checks))


ADJOINT_SIDES = ("woronowicz_sigma", "woronowicz_sigma_prime",
                 "hennings_sigma", "hennings_sigma_prime")


def adjoint_braidings(H: FinHopfAlgebra, pair: HopfCharacterPair, side: str) -> Matrix:
    """The braidings on H induced by a character pair.

    woronowicz_sigma:        h (x) h' -> h'_(1) (x) S(h'_(2)) h h'_(3)
    woronowicz_sigma_prime:  h (x) h' -> h'_(2) (x) h S(h'_(1)) h'_(3)
    hennings_sigma:          h (x) h' -> zeta(h'_(3)) h'_(1) (x) S(h'_(2)) h h'_(4)
    hennings_sigma_prime:    h (x) h' -> h'_(2) (x) h S(h'_(1)) eta h'_(3)

    The Woronowicz sides require pair = (eps, nu); every side verifies the YBE
    on the result before returning it.
    """
    if side not in ADJOINT_SIDES:
        raise ValueError(f"unknown side {side!r}")
    axioms = check_hopf_algebra(H)
    if not axioms.passed:
        raise ValueError(f"input fails {axioms.first_failure().check_id}")
    pair_report = check_character_pair(H, pair)
    if not pair_report.passed:
        raise ValueError(f"character pair fails {pair_report.first_failure().check_id}")
    F, d = H.field, H.dim
    eye = Matrix.identity(F, d)
    if side.startswith("woronowicz"):
        if pair.zeta != H.eps or pair.eta != H.nu:
            raise ValueError("Woronowicz braidings are defined for the (eps, nu) pair")
    else:
        yd = check_yd_character(H, pair)
        weak = {c.check_id: c.passed for c in yd.checks}
        if not (weak["ydchar.weak-pre"] and weak["ydchar.weak-post"]):
            raise ValueError("character pair fails the weakened compatibility")

    mu2 = H.mu @ kron(H.mu, eye)
    delta2 = kron(H.delta, eye) @ H.delta
    if side == "hennings_sigma":
        # replace Delta^2 by (H (x) H (x) ((zeta (x) H) o Delta)) o Delta^2
        zd = kron(pair.zeta, eye) @ H.delta
        delta2 = kron_apply([eye, eye, zd], delta2)
    if side == "hennings_sigma_prime":
        # replace mu^2 by mu^2 o (H (x) H (x) (mu o (eta (x) H)))
        em = H.mu @ kron(pair.eta, eye)
        mu2 = mu2 @ kron(eye, kron(eye, em))
    c = flip(d, d, F)
    m = kron(eye, delta2)
    if side in ("woronowicz_sigma", "hennings_sigma"):
        m = kron_apply([c, H.antipode, eye], m)
        m = kron_apply([eye, c, eye], m)
    else:
        m = kron_apply([eye, c, eye], m)
        m = kron_apply([c, H.antipode, eye], m)
    sigma = kron_apply([eye, mu2], m)
    ybe = cybe_check(sigma, sigma, sigma, (d, d, d), F, check_id=f"ybe.{side}")
    if not ybe.passed:
        raise ValueError(f"{side} fails the YBE at {ybe.witness}")
    return sigma
