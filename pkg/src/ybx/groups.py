"""Finite groups and crossed modules of groups and of shelves/racks."""

from __future__ import annotations

import time
from itertools import permutations

from .exact import SetFn
from .reports import Check, Report
from .shelves import (
    Rack,
    Shelf,
    ShelfAction,
    automorphism_group,
    check_rack,
    check_shelf_action,
    check_shelf_morphism,
)


def _scan_table(table) -> int:
    n = len(table)
    if n == 0:
        raise ValueError("table must be nonempty")
    for row in table:
        if len(row) != n:
            raise ValueError("table must be square")
        for v in row:
            if not isinstance(v, int) or not (0 <= v < n):
                raise ValueError(f"table entry {v!r} out of range 0..{n - 1}")
    return n


def check_group(table) -> Report:
    """Identity, inverses, and associativity on a raw Cayley table."""
    t0 = time.perf_counter()
    n = _scan_table(table)
    identity = next(
        (e for e in range(n) if all(table[e][x] == x and table[x][e] == x for x in range(n))),
        None,
    )
    checks = [
        Check(
            check_id="group.identity",
            law="two-sided-identity",
            passed=identity is not None,
            detail=f"identity = {identity}" if identity is not None else "no identity element",
            seconds=time.perf_counter() - t0,
        )
    ]
    inverses_ok = False
    if identity is not None:
        t1 = time.perf_counter()
        missing = next(
            (
                (a,)
                for a in range(n)
                if not any(table[a][b] == identity and table[b][a] == identity for b in range(n))
            ),
            None,
        )
        inverses_ok = missing is None
        checks.append(
            Check(
                check_id="group.inverses",
                law="two-sided-inverses",
                passed=inverses_ok,
                witness=missing,
                seconds=time.perf_counter() - t1,
            )
        )
    t2 = time.perf_counter()
    assoc_witness = None
    for a in range(n):
        for b in range(n):
            ab = table[a][b]
            for c in range(n):
                if table[ab][c] != table[a][table[b][c]]:
                    assoc_witness = (a, b, c)
                    break
            if assoc_witness:
                break
        if assoc_witness:
            break
    checks.append(
        Check(
            check_id="group.associativity",
            law="associativity",
            passed=assoc_witness is None,
            witness=assoc_witness,
            detail=f"{n ** 3} triples",
            seconds=time.perf_counter() - t2,
        )
    )
    return Report(tuple(checks))


class FiniteGroup:
    """Group on {0..n-1} given by its Cayley table; validated at construction."""

    __slots__ = ("size", "table", "identity", "inv")

    def __init__(self, table):
        report = check_group(table)
        if not report.passed:
            fail = report.first_failure()
            raise ValueError(f"not a group: {fail.law} fails, witness {fail.witness}")
        n = len(table)
        self.size = n
        self.table = tuple(tuple(row) for row in table)
        self.identity = next(
            e for e in range(n) if all(table[e][x] == x and table[x][e] == x for x in range(n))
        )
        inv = [0] * n
        for a in range(n):
            inv[a] = next(b for b in range(n) if table[a][b] == self.identity)
        self.inv = tuple(inv)

    def op(self, a: int, b: int) -> int:
        return self.table[a][b]

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self) -> int:
        return hash(self.table)

    def __repr__(self) -> str:
        return f"FiniteGroup(size={self.size})"


def cyclic_group(n: int) -> FiniteGroup:
    return FiniteGroup([[(a + b) % n for b in range(n)] for a in range(n)])


def symmetric_group(n: int) -> FiniteGroup:
    """All permutations of {0..n-1} in lexicographic order; products read left to right."""
    elems = list(permutations(range(n)))
    index = {p: i for i, p in enumerate(elems)}
    table = [[index[tuple(b[a[x]] for x in range(n))] for b in elems] for a in elems]
    return FiniteGroup(table)


def conjugation_shelf(group: FiniteGroup) -> Shelf:
    """a <| b = b^{-1} a b; always a rack."""
    return Shelf(
        [
            [group.op(group.op(group.inv[b], a), b) for b in range(group.size)]
            for a in range(group.size)
        ]
    )


class GroupCrossedModule:
    """(K, G, pi, .): a group map pi with a right G-action on K; axioms via the checker."""

    __slots__ = ("k", "g", "pi", "action")

    def __init__(self, k: FiniteGroup, g: FiniteGroup, pi: SetFn, action):
        if pi.domain != k.size or pi.codomain != g.size:
            raise ValueError("pi must map K to G")
        if len(action) != k.size or any(len(row) != g.size for row in action):
            raise ValueError("action table must be |K| x |G|")
        for row in action:
            for v in row:
                if not (0 <= v < k.size):
                    raise ValueError(f"action value {v} out of range")
        self.k = k
        self.g = g
        self.pi = pi
        self.action = tuple(tuple(row) for row in action)

    def act(self, x: int, a: int) -> int:
        return self.action[x][a]


def check_group_crossed_module(x: GroupCrossedModule) -> Report:
    """Morphism, action, automorphism, and the two compatibility identities."""
    k, g, pi, act = x.k, x.g, x.pi, x.act
    checks = []

    t0 = time.perf_counter()
    w = next(
        (
            (a, b)
            for a in range(k.size)
            for b in range(k.size)
            if pi(k.op(a, b)) != g.op(pi(a), pi(b))
        ),
        None,
    )
    checks.append(
        Check("crmod.pi-morphism", "pi-is-group-morphism", w is None, w,
              seconds=time.perf_counter() - t0)
    )

    t0 = time.perf_counter()
    w = next(((a,) for a in range(k.size) if act(a, g.identity) != a), None)
    if w is None:
        w = next(
            (
                (a, b, c)
                for a in range(k.size)
                for b in range(g.size)
                for c in range(g.size)
                if act(act(a, b), c) != act(a, g.op(b, c))
            ),
            None,
        )
    checks.append(
        Check("crmod.action", "right-group-action", w is None, w,
              seconds=time.perf_counter() - t0)
    )

    t0 = time.perf_counter()
    w = next(
        (
            (a, b, c)
            for a in range(k.size)
            for b in range(k.size)
            for c in range(g.size)
            if act(k.op(a, b), c) != k.op(act(a, c), act(b, c))
        ),
        None,
    )
    checks.append(
        Check("crmod.automorphisms", "action-by-group-automorphisms", w is None, w,
              seconds=time.perf_counter() - t0)
    )

    t0 = time.perf_counter()
    w = next(
        (
            (a, b)
            for a in range(k.size)
            for b in range(k.size)
            if act(a, pi(b)) != k.op(k.op(k.inv[b], a), b)
        ),
        None,
    )
    checks.append(
        Check("crmod.peiffer", "peiffer-identity", w is None, w,
              seconds=time.perf_counter() - t0)
    )

    t0 = time.perf_counter()
    w = next(
        (
            (a, b)
            for a in range(k.size)
            for b in range(g.size)
            if pi(act(a, b)) != g.op(g.op(g.inv[b], pi(a)), b)
        ),
        None,
    )
    checks.append(
        Check("crmod.equivariance", "pi-equivariance", w is None, w,
              seconds=time.perf_counter() - t0)
    )
    return Report(tuple(checks))


class ShelfCrossedModule:
    """(R, S, pi, .): a shelf map pi with an S-action on R; axioms via the checker."""

    __slots__ = ("r", "s", "pi", "action")

    def __init__(self, r: Shelf, s: Shelf, pi: SetFn, action: ShelfAction):
        if pi.domain != r.size or pi.codomain != s.size:
            raise ValueError("pi must map R to S")
        if action.shelf is not s and action.shelf != s:
            raise ValueError("action must be an action of S")
        if action.set_size != r.size:
            raise ValueError("action must act on the carrier of R")
        self.r = r
        self.s = s
        self.pi = pi
        self.action = action

    def act(self, x: int, a: int) -> int:
        return self.action.act(x, a)


def check_shelf_crossed_module(x: ShelfCrossedModule, rack_mode: bool = False) -> Report:
    """Action axiom, morphism axioms, and the two compatibility identities; rack extras on demand."""
    r, s, pi, act = x.r, x.s, x.pi, x.act
    report = check_shelf_action(x.action)

    t0 = time.perf_counter()
    w = next(
        (
            (a, b, c)
            for a in range(r.size)
            for b in range(r.size)
            for c in range(s.size)
            if act(r.ap(a, b), c) != r.ap(act(a, c), act(b, c))
        ),
        None,
    )
    report = report.merge(
        Report.of(
            Check("crmodsh.morphism-action", "action-by-shelf-morphisms", w is None, w,
                  seconds=time.perf_counter() - t0)
        )
    )

    morphism = check_shelf_morphism(pi, r, s)
    report = report.merge(
        Report.of(
            Check(
                "crmodsh.pi-morphism",
                "pi-is-shelf-morphism",
                morphism.passed,
                morphism.first_failure().witness if not morphism.passed else None,
                seconds=sum(c.seconds for c in morphism.checks),
            )
        )
    )

    t0 = time.perf_counter()
    w = next(
        (
            (a, b)
            for a in range(r.size)
            for b in range(r.size)
            if act(a, pi(b)) != r.ap(a, b)
        ),
        None,
    )
    report = report.merge(
        Report.of(
            Check("crmodsh.peiffer", "action-through-pi-is-the-operation", w is None, w,
                  seconds=time.perf_counter() - t0)
        )
    )

    t0 = time.perf_counter()
    w = next(
        (
            (a, b)
            for a in range(r.size)
            for b in range(s.size)
            if pi(act(a, b)) != s.ap(pi(a), b)
        ),
        None,
    )
    report = report.merge(
        Report.of(
            Check("crmodsh.equivariance", "pi-equivariance", w is None, w,
                  seconds=time.perf_counter() - t0)
        )
    )

    if rack_mode:
        t0 = time.perf_counter()
        rack_checks = check_rack(r.table).merge(check_rack(s.table))
        w = next(
            (
                (b,)
                for b in range(s.size)
                if len({act(a, b) for a in range(r.size)}) != r.size
            ),
            None,
        )
        report = report.merge(rack_checks).merge(
            Report.of(
                Check("crmodsh.rack-action", "action-maps-bijective", w is None, w,
                      seconds=time.perf_counter() - t0)
            )
        )
    return report


def adjoint_crossed_module(shelf: Shelf) -> ShelfCrossedModule:
    """(S, S, Id, <|): every shelf is a crossed module over itself."""
    return ShelfCrossedModule(
        shelf, shelf, SetFn.identity(shelf.size), ShelfAction(shelf, shelf.table)
    )


def crossed_module_from_group(x: GroupCrossedModule) -> ShelfCrossedModule:
    """Re-read (K, G, pi, .) as (Conj K, Conj G, pi, .) on the same carriers."""
    conj_k = conjugation_shelf(x.k)
    conj_g = conjugation_shelf(x.g)
    return ShelfCrossedModule(conj_k, conj_g, x.pi, ShelfAction(conj_g, x.action))


def aut_augmented_crossed_module(shelf: Shelf, size_limit: int = 8) -> ShelfCrossedModule:
    """Augment a rack over the conjugation rack of its automorphism group via r -> t_r."""
    Rack.from_shelf(shelf)  # translations must be automorphisms, so demand a rack
    group, autos = automorphism_group(shelf, size_limit)
    index = {a.table: i for i, a in enumerate(autos)}
    n = shelf.size
    pi = SetFn(n, group.size, [index[tuple(shelf.ap(x, r) for x in range(n))] for r in range(n)])
    conj = conjugation_shelf(group)
    action = ShelfAction(conj, [[autos[phi](x) for phi in range(group.size)] for x in range(n)])
    return ShelfCrossedModule(shelf, conj, pi, action)


def induced_crossed_module(s: Shelf, pi: SetFn, action: ShelfAction) -> ShelfCrossedModule:
    """Synthesize r <| l := r . pi(l) from a generalized augmented shelf; fails if not a shelf."""
    if action.shelf != s or pi.codomain != s.size or pi.domain != action.set_size:
        raise ValueError("augmented data sizes do not line up")
    m = action.set_size
    table = [[action.act(a, pi(b)) for b in range(m)] for a in range(m)]
    induced = Shelf(table)  # raises with a witness when the induced operation is not a shelf
    return ShelfCrossedModule(induced, s, pi, ShelfAction(s, action.table))


def standard_crossed_module(kind: str, *args, **kwargs):
    """Dispatch over the stock crossed-module constructions by name."""
    if kind == "adjoint":
        return adjoint_crossed_module(*args, **kwargs)
    if kind == "from_group":
        return crossed_module_from_group(*args, **kwargs)
    if kind == "aut_augmented":
        return aut_augmented_crossed_module(*args, **kwargs)
    if kind == "induced":
        return induced_crossed_module(*args, **kwargs)
    raise ValueError(f"unknown crossed-module kind {kind!r}")
