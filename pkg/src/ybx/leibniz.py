"""Leibniz algebras over exact fields: unitarization, crossed modules, representations."""

from __future__ import annotations

import time

from .exact import Field, Matrix, flip, kron
from .reports import Check, Report


class LeibnizAlgebra:
    """Structure constants [e_i, e_j] = sum_k bracket[i][j][k] e_k over an exact field."""

    __slots__ = ("field", "dim", "bracket")

    def __init__(self, field: Field, dim: int, bracket):
        if len(bracket) != dim or any(
            len(row) != dim or any(len(cell) != dim for cell in row) for row in bracket
        ):
            raise ValueError("bracket tensor must be dim x dim x dim")
        self.field = field
        self.dim = dim
        self.bracket = tuple(
            tuple(tuple(field.coerce(c) for c in cell) for cell in row) for row in bracket
        )

    def bracket_map(self) -> Matrix:
        """[ , ] as a matrix k (x) k -> k under the pair-index convention."""
        cols = [self.bracket[i][j] for i in range(self.dim) for j in range(self.dim)]
        return Matrix(self.field, [[col[k] for col in cols] for k in range(self.dim)])

    def ad(self, j: int) -> Matrix:
        """The right-bracket operator [ -, e_j ]."""
        return Matrix(
            self.field, [[self.bracket[i][j][k] for i in range(self.dim)] for k in range(self.dim)]
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LeibnizAlgebra)
            and self.field == other.field
            and self.bracket == other.bracket
        )

    def __hash__(self) -> int:
        return hash((self.field, self.bracket))


def abelian_leibniz(field: Field, dim: int) -> LeibnizAlgebra:
    zero = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
    return LeibnizAlgebra(field, dim, zero)


def l2_algebra(field: Field) -> LeibnizAlgebra:
    """Basis x, y with [x, x] = y and all other brackets zero; Leibniz but not Lie."""
    bracket = [[[0, 0], [0, 0]], [[0, 0], [0, 0]]]
    bracket[0][0] = [0, 1]
    return LeibnizAlgebra(field, 2, bracket)


def check_leibniz(L: LeibnizAlgebra) -> Report:
    """[v,[w,u]] = [[v,w],u] - [[v,u],w] as one exact matrix identity over basis triples."""
    t0 = time.perf_counter()
    br = L.bracket_map()
    d = L.dim
    eye = Matrix.identity(L.field, d)
    lhs = br @ kron(eye, br)
    rhs = (br @ kron(br, eye)).sub(br @ kron(br, eye) @ kron(eye, flip(d, d, L.field)))
    witness = None
    if lhs != rhs:
        col = next(
            c
            for c in range(d ** 3)
            if any(lhs.data[r][c] != rhs.data[r][c] for r in range(d))
        )
        witness = (col // (d * d), (col // d) % d, col % d)
    return Report.of(
        Check(
            check_id="leibniz",
            law="leibniz-identity",
            passed=witness is None,
            witness=witness,
            detail=f"{d ** 3} basis triples",
            seconds=time.perf_counter() - t0,
        )
    )


def unital_coalgebra(field: Field, dim_plus: int) -> tuple[Matrix, Matrix]:
    """The primitive-element coproduct and counit on a space whose last basis vector is the unit."""
    unit = dim_plus - 1
    columns = []
    for k in range(dim_plus):
        if k == unit:
            columns.append([(unit * dim_plus + unit, field.one)])
        else:
            columns.append(
                [(k * dim_plus + unit, field.one), (unit * dim_plus + k, field.one)]
            )
    delta = Matrix.from_columns(field, dim_plus * dim_plus, dim_plus, columns)
    eps = Matrix.from_columns(field, 1, dim_plus, [[(0, field.one)] if k == unit else [] for k in range(dim_plus)])
    return delta, eps


class UnitalLeibnizAlgebra:
    """A Leibniz algebra with a two-sided Lie unit appended as the last basis vector."""

    __slots__ = ("base", "field", "dim", "unit", "bracket", "delta", "eps")

    def __init__(self, base: LeibnizAlgebra):
        n = base.dim
        self.base = base
        self.field = base.field
        self.dim = n + 1
        self.unit = n
        extended = [
            [
                list(base.bracket[i][j]) + [0] if i < n and j < n else [0] * (n + 1)
                for j in range(n + 1)
            ]
            for i in range(n + 1)
        ]
        self.bracket = tuple(
            tuple(tuple(self.field.coerce(c) for c in cell) for cell in row) for row in extended
        )
        self.delta, self.eps = unital_coalgebra(self.field, self.dim)

    def bracket_map(self) -> Matrix:
        cols = [self.bracket[i][j] for i in range(self.dim) for j in range(self.dim)]
        return Matrix(self.field, [[col[k] for col in cols] for k in range(self.dim)])

    def adjoint_action(self) -> tuple[Matrix, ...]:
        """Unitarized adjoint of k+ on k+: k.k' = [k,k'], k.1 = k, 1.k' = 0, 1.1 = 1."""
        n = self.unit
        F = self.field
        mats = []
        for j in range(n):
            cols = [[(k, self.bracket[i][j][k]) for k in range(self.dim) if self.bracket[i][j][k]]
                    for i in range(n)]
            cols.append([])  # 1 . e_j = eps(e_j) 1 = 0
            mats.append(Matrix.from_columns(F, self.dim, self.dim, cols))
        mats.append(Matrix.identity(F, self.dim))  # action of the unit
        return tuple(mats)

    def __eq__(self, other) -> bool:
        return isinstance(other, UnitalLeibnizAlgebra) and self.base == other.base

    def __hash__(self) -> int:
        return hash(("unital", self.base))


def unitarize(L: LeibnizAlgebra) -> UnitalLeibnizAlgebra:
    """Adjoin a Lie unit and the primitive coalgebra structure."""
    report = check_leibniz(L)
    if not report.passed:
        raise ValueError(f"not a Leibniz algebra, witness {report.first_failure().witness}")
    return UnitalLeibnizAlgebra(L)


def pair_matrix(field: Field, mats, carrier_dim: int) -> Matrix:
    """Stack per-generator matrices into one map M (x) g -> M; column (i, j) holds mats[j](e_i)."""
    cols = []
    for i in range(carrier_dim):
        for mat in mats:
            cols.append([(r, mat.data[r][i]) for r in range(carrier_dim) if mat.data[r][i]])
    return Matrix.from_columns(field, carrier_dim, carrier_dim * len(mats), cols)


class LeibnizCrossedModule:
    """(k, g, pi, .): a Leibniz map pi with g acting on k by derivations."""

    __slots__ = ("k", "g", "pi", "action")

    def __init__(self, k: LeibnizAlgebra, g: LeibnizAlgebra, pi: Matrix, action):
        if k.field != g.field:
            raise ValueError("field mismatch")
        if pi.rows != g.dim or pi.cols != k.dim:
            raise ValueError("pi must be a g.dim x k.dim matrix")
        if len(action) != g.dim:
            raise ValueError("one action matrix per basis element of g")
        for theta in action:
            if theta.rows != k.dim or theta.cols != k.dim or theta.field != k.field:
                raise ValueError("action matrices must be k.dim x k.dim over the same field")
        self.k = k
        self.g = g
        self.pi = pi
        self.action = tuple(action)

    def action_map(self) -> Matrix:
        """The action as one matrix k (x) g -> k; column (i, j) carries theta_j(e_i)."""
        return pair_matrix(self.k.field, self.action, self.k.dim)


def action_on_kplus(x: LeibnizCrossedModule) -> tuple[Matrix, ...]:
    """The action of g+ on k+ after unitarization: both units annihilate or fix per the Lie rules."""
    F = x.k.field
    kp = x.k.dim + 1
    mats = []
    for theta in x.action:
        grid = [[F.zero] * kp for _ in range(kp)]
        for r in range(kp - 1):
            for c in range(kp - 1):
                grid[r][c] = theta.data[r][c]
        mats.append(Matrix(F, grid))
    mats.append(Matrix.identity(F, kp))
    return tuple(mats)


def identity_crossed_module(L: LeibnizAlgebra) -> LeibnizCrossedModule:
    """(k, k, Id, adjoint): every Leibniz algebra over itself."""
    eye = Matrix.identity(L.field, L.dim)
    return LeibnizCrossedModule(L, L, eye, tuple(L.ad(j) for j in range(L.dim)))


def _column_witness(a: Matrix, b: Matrix, dims) -> tuple | None:
    """Decompose the first differing column into a basis multi-index."""
    if a == b:
        return None
    col = next(
        c for c in range(a.cols) if any(a.data[r][c] != b.data[r][c] for r in range(a.rows))
    )
    idx = []
    rem = col
    for d in reversed(dims):
        idx.append(rem % d)
        rem //= d
    return tuple(reversed(idx))


def check_leibniz_crossed_module(x: LeibnizCrossedModule) -> Report:
    """Morphism, derivation, and the two compatibility identities, as matrix identities."""
    F = x.k.field
    kd, gd = x.k.dim, x.g.dim
    br_k = x.k.bracket_map()
    br_g = x.g.bracket_map()
    eye_k = Matrix.identity(F, kd)
    eye_g = Matrix.identity(F, gd)
    act = x.action_map()
    checks = []

    t0 = time.perf_counter()
    w = _column_witness(x.pi @ br_k, br_g @ kron(x.pi, x.pi), (kd, kd))
    checks.append(
        Check("crmodla.pi-morphism", "pi-is-leibniz-morphism", w is None, w,
              seconds=time.perf_counter() - t0)
    )

    t0 = time.perf_counter()
    w = None
    for j in range(gd):
        theta = x.action[j]
        lhs = theta @ br_k
        rhs = (br_k @ kron(theta, eye_k)).add(br_k @ kron(eye_k, theta))
        pair = _column_witness(lhs, rhs, (kd, kd))
        if pair is not None:
            w = (j,) + pair
            break
    checks.append(
        Check("crmodla.derivations", "action-by-derivations", w is None, w,
              seconds=time.perf_counter() - t0)
    )

    t0 = time.perf_counter()
    w = _column_witness(act @ kron(eye_k, x.pi), br_k, (kd, kd))
    checks.append(
        Check("crmodla.peiffer", "action-through-pi-is-the-bracket", w is None, w,
              seconds=time.perf_counter() - t0)
    )

    t0 = time.perf_counter()
    w = _column_witness(x.pi @ act, br_g @ kron(x.pi, eye_g), (kd, gd))
    checks.append(
        Check("crmodla.equivariance", "pi-equivariance", w is None, w,
              seconds=time.perf_counter() - t0)
    )
    return Report(tuple(checks))


class LeibnizRep:
    """(M, *, delta0) over a crossed module: one action matrix per g basis element
    and a square-zero coaction part delta0: M -> M (x) k."""

    __slots__ = ("x", "dim", "action", "delta0")

    def __init__(self, x: LeibnizCrossedModule, dim: int, action, delta0: Matrix):
        action = tuple(action)
        if len(action) != x.g.dim:
            raise ValueError("representation needs one action matrix per basis element of g")
        for theta in action:
            if theta.rows != dim or theta.cols != dim:
                raise ValueError("action matrices must be dim x dim")
        if delta0.cols != dim or delta0.rows != dim * x.k.dim:
            raise ValueError("delta0 must map M to M (x) k")
        self.x = x
        self.dim = dim
        self.action = action
        self.delta0 = delta0


def rep_action_map(rep: LeibnizRep) -> Matrix:
    """Unitarized action as one matrix M (x) g+ -> M; the unit acts as the identity."""
    field = rep.x.k.field
    thetas = list(rep.action) + [Matrix.identity(field, rep.dim)]
    return pair_matrix(field, thetas, rep.dim)


def rep_coaction(rep: LeibnizRep) -> Matrix:
    """delta = delta0 + (- (x) 1) into M (x) k+, the unit sitting last."""
    field = rep.x.k.field
    md = rep.dim
    kd = rep.x.k.dim
    kp_dim = kd + 1
    grid = [[field.zero] * md for _ in range(md * kp_dim)]
    for r in range(md * kd):
        m, kk = divmod(r, kd)
        for c in range(md):
            grid[m * kp_dim + kk][c] = rep.delta0.data[r][c]
    for m in range(md):
        grid[m * kp_dim + kd][m] = field.add(grid[m * kp_dim + kd][m], field.one)
    return Matrix(field, grid)


def check_leibniz_rep(rep: LeibnizRep) -> Report:
    """Representation axioms plus the compatibility relations of the unitarized form."""
    x = rep.x
    F = x.k.field
    kd, gd, md = x.k.dim, x.g.dim, rep.dim
    eye_m = Matrix.identity(F, md)
    eye_k = Matrix.identity(F, kd)
    checks = []

    t0 = time.perf_counter()
    w = None
    for i in range(gd):
        for j in range(gd):
            bracket_action = Matrix.zeros(F, md, md)
            for k in range(gd):
                c = x.g.bracket[i][j][k]
                if c:
                    bracket_action = bracket_action.add(rep.action[k].scale(c))
            commutator = (rep.action[j] @ rep.action[i]).sub(rep.action[i] @ rep.action[j])
            if bracket_action != commutator:
                w = (i, j)
                break
        if w:
            break
    checks.append(
        Check("rep.action", "action-respects-brackets", w is None, w,
              seconds=time.perf_counter() - t0)
    )

    t0 = time.perf_counter()
    sq = kron(rep.delta0, eye_k) @ rep.delta0
    checks.append(
        Check("rep.square-zero", "delta0-square-zero", sq.is_zero(),
              None if sq.is_zero() else (0,),
              seconds=time.perf_counter() - t0)
    )

    t0 = time.perf_counter()
    w = None
    for j in range(gd):
        lhs = rep.delta0 @ rep.action[j]
        rhs = (kron(eye_m, x.action[j]).add(kron(rep.action[j], eye_k))) @ rep.delta0
        if lhs != rhs:
            w = (j,)
            break
    checks.append(
        Check("rep.equivariance", "delta0-g-equivariance", w is None, w,
              seconds=time.perf_counter() - t0)
    )

    report = Report(tuple(checks))
    if report.passed:
        report = report.merge(_unitarized_relations(rep))
    return report


def _unitarized_relations(rep: LeibnizRep) -> Report:
    """The Sweedler-form relations every representation satisfies after unitarization."""
    x = rep.x
    F = x.k.field
    kp, gp, md = x.k.dim + 1, x.g.dim + 1, rep.dim
    delta_g, eps_g = unital_coalgebra(F, gp)
    delta_k, eps_k = unital_coalgebra(F, kp)
    act_m = rep_action_map(rep)
    coact = rep_coaction(rep)
    eye_m = Matrix.identity(F, md)
    eye_gp = Matrix.identity(F, gp)
    eye_kp = Matrix.identity(F, kp)

    # unitarized adjoint of g+ on g+ and unitarized action of g+ on k+
    gplus = UnitalLeibnizAlgebra(x.g)
    adj_g_map = pair_matrix(F, gplus.adjoint_action(), gp)   # g+ (x) g+ -> g+
    act_k_map = pair_matrix(F, action_on_kplus(x), kp)       # k+ (x) g+ -> k+

    checks = []
    t0 = time.perf_counter()
    # (m * g') * g = (m * g_(1)) * (g' . g_(2))
    lhs = act_m @ kron(act_m, eye_gp)
    mid = kron(kron(eye_m, eye_gp), delta_g)           # m, g', g1, g2
    swap = kron(eye_m, flip(gp, gp * gp, F))           # m, g1, g2, g'
    arrange = kron(kron(eye_m, eye_gp), flip(gp, gp, F))  # m, g1, g', g2
    step = kron(kron(eye_m, eye_gp), adj_g_map)        # m, g1, g'.g2
    rhs = act_m @ kron(act_m, eye_gp) @ step @ arrange @ swap @ mid
    # explanation of the pipeline, innermost first:
    #   mid:      (m, g', g)          -> (m, g', g1, g2)
    #   swap:     (m, g', g1, g2)     -> (m, g1, g2, g')
    #   arrange:  (m, g1, g2, g')     -> (m, g1, g', g2)
    #   step:     (m, g1, g', g2)     -> (m, g1, g'.g2)
    #   act twice: ((m * g1) * (g'.g2))
    checks.append(
        Check("rep.rel-braided-action", "iterated-action-sweedler-form", lhs == rhs,
              _column_witness(lhs, rhs, (md, gp, gp)),
              seconds=time.perf_counter() - t0)
    )

    t0 = time.perf_counter()
    # delta(m * g) = m_(0) * g_(1) (x) m_(1) . g_(2)
    lhs2 = coact @ act_m
    pipeline = kron(coact, delta_g)                       # m0, m1, g1, g2
    arrange2 = kron(eye_m, kron(flip(kp, gp, F), eye_gp))  # m0, g1, m1, g2
    finish = kron(act_m, act_k_map) @ arrange2 @ pipeline
    checks.append(
        Check("rep.rel-coaction-action", "coaction-of-action-sweedler-form", lhs2 == finish,
              _column_witness(lhs2, finish, (md, gp)),
              seconds=time.perf_counter() - t0)
    )

    t0 = time.perf_counter()
    # iterated coaction factors through f (x) Delta with f(m) = eps(m_(1)) m_(0)
    f_map = kron(eye_m, eps_k) @ coact
    lhs3 = kron(coact, eye_kp) @ coact
    rhs3 = kron(f_map, delta_k) @ coact
    checks.append(
        Check("rep.rel-coassociativity", "iterated-coaction-twist-form", lhs3 == rhs3,
              _column_witness(lhs3, rhs3, (md,)),
              seconds=time.perf_counter() - t0)
    )

    t0 = time.perf_counter()
    # (m * 1) * g = (m * g) * 1
    ok = True
    wit = None
    thetas = list(rep.action) + [eye_m]
    for j in range(gp):
        if thetas[j] @ thetas[gp - 1] != thetas[gp - 1] @ thetas[j]:
            ok = False
            wit = (j,)
            break
    checks.append(Check("rep.rel-unit-swap", "unit-action-commutes", ok, wit,
                        seconds=time.perf_counter() - t0))

    t0 = time.perf_counter()
    # f commutes with the coaction
    lhs5 = coact @ f_map
    rhs5 = kron(f_map, eye_kp) @ coact
    checks.append(
        Check("rep.rel-twist-coaction", "twist-commutes-with-coaction", lhs5 == rhs5,
              _column_witness(lhs5, rhs5, (md,)),
              seconds=time.perf_counter() - t0)
    )
    return Report(tuple(checks))
