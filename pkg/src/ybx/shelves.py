"""Finite shelves and racks: law checkers, standard constructions, morphisms, actions."""

from __future__ import annotations

import time
from itertools import permutations

from .exact import SetFn
from .reports import Check, Report


def _validate_square_table(table) -> int:
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


def sd_violations(table):
    """All triples (a,b,c) with (a<|b)<|c != (a<|c)<|(b<|c), in lexicographic order."""
    n = len(table)
    bad = []
    for a in range(n):
        ta = table[a]
        for b in range(n):
            ab = ta[b]
            tab = table[ab]
            tb = table[b]
            for c in range(n):
                if tab[c] != table[ta[c]][tb[c]]:
                    bad.append((a, b, c))
    return bad


def check_shelf(table) -> Report:
    """Self-distributivity over all triples; failures list every violating triple."""
    t0 = time.perf_counter()
    n = _validate_square_table(table)
    bad = sd_violations(table)
    return Report.of(
        Check(
            check_id="shelf",
            law="self-distributivity",
            passed=not bad,
            witness=bad[0] if bad else None,
            witnesses=tuple(bad),
            detail=f"{n ** 3} triples",
            seconds=time.perf_counter() - t0,
        )
    )


class Shelf:
    """Finite set {0..n-1} with a self-distributive operation a <| b = table[a][b]."""

    __slots__ = ("size", "table")

    def __init__(self, table):
        self.size = _validate_square_table(table)
        bad = sd_violations(table)
        if bad:
            raise ValueError(f"not self-distributive, witness {bad[0]}")
        self.table = tuple(tuple(row) for row in table)

    def ap(self, a: int, b: int) -> int:
        return self.table[a][b]

    def __eq__(self, other) -> bool:
        return isinstance(other, Shelf) and self.table == other.table

    def __hash__(self) -> int:
        return hash(self.table)

    def __repr__(self) -> str:
        return f"Shelf(size={self.size})"


def check_rack(shelf) -> Report:
    """Every right translation t_b must be a bijection; witness is a non-bijective column."""
    t0 = time.perf_counter()
    if not isinstance(shelf, Shelf):
        shelf = Shelf(shelf)
    n = shelf.size
    bad = []
    for b in range(n):
        col = [shelf.table[a][b] for a in range(n)]
        if len(set(col)) != n:
            bad.append((b,))
    return Report.of(
        Check(
            check_id="rack",
            law="bijective-right-translations",
            passed=not bad,
            witness=bad[0] if bad else None,
            witnesses=tuple(bad),
            detail=f"{n} columns",
            seconds=time.perf_counter() - t0,
        )
    )


class Rack:
    """A shelf whose right translations are bijective, with the inverse operation table."""

    __slots__ = ("shelf", "inverse_translations")

    def __init__(self, shelf: Shelf):
        report = check_rack(shelf)
        if not report.passed:
            raise ValueError(f"not a rack, non-bijective column {report.first_failure().witness}")
        n = shelf.size
        inv = [[0] * n for _ in range(n)]
        for b in range(n):
            for a in range(n):
                inv[shelf.table[a][b]][b] = a
        self.shelf = shelf
        self.inverse_translations = tuple(tuple(row) for row in inv)

    @classmethod
    def from_shelf(cls, shelf: Shelf) -> "Rack":
        return cls(shelf)

    @property
    def size(self) -> int:
        return self.shelf.size

    def unap(self, a: int, b: int) -> int:
        """The inverse operation: unap(a <| b, b) = a."""
        return self.inverse_translations[a][b]


class PointedShelf:
    """A shelf with an element e satisfying e <| s = e and s <| e = s for all s."""

    __slots__ = ("shelf", "e")

    def __init__(self, shelf: Shelf, e: int):
        for s in range(shelf.size):
            if shelf.ap(e, s) != e or shelf.ap(s, e) != s:
                raise ValueError(f"element {e} is not a shelf point (fails at s={s})")
        self.shelf = shelf
        self.e = e


def projection_shelf(n: int) -> Shelf:
    """a <| b = a."""
    return Shelf([[a] * n for a in range(n)])


def cyclic_shelf(n: int) -> Shelf:
    """a <| b = a+1 mod n, the finite quotient of the cyclic rack on the integers."""
    return Shelf([[(a + 1) % n] * n for a in range(n)])


def dihedral_shelf(n: int) -> Shelf:
    """a <| b = 2b-a mod n."""
    return Shelf([[(2 * b - a) % n for b in range(n)] for a in range(n)])


def constant_shelf(f) -> Shelf:
    """a <| b = f(a) for a fixed self-map f; self-distributivity is automatic."""
    n = len(f)
    if any(not (0 <= v < n) for v in f):
        raise ValueError("self-map entry out of range")
    return Shelf([[f[a]] * n for a in range(n)])


def standard_shelf(kind: str, arg=None) -> Shelf:
    """Dispatch over the stock constructions by name."""
    if kind == "conjugation":
        from .groups import FiniteGroup, conjugation_shelf

        group = arg if isinstance(arg, FiniteGroup) else FiniteGroup(arg)
        return conjugation_shelf(group)
    if kind == "cyclic_mod":
        return cyclic_shelf(arg)
    if kind == "dihedral":
        return dihedral_shelf(arg)
    if kind == "constant_map":
        return constant_shelf(arg)
    if kind == "projection":
        return projection_shelf(arg)
    raise ValueError(f"unknown shelf kind {kind!r}")


def check_shelf_morphism(f, src: Shelf, dst: Shelf) -> Report:
    """f(r <| l) = f(r) <| f(l) over all pairs; witness is the first failing (r, l)."""
    t0 = time.perf_counter()
    if isinstance(f, SetFn):
        if f.domain != src.size or f.codomain != dst.size:
            raise ValueError("map sizes do not match the shelves")
        table = f.table
    else:
        table = tuple(f)
        if len(table) != src.size or any(not (0 <= v < dst.size) for v in table):
            raise ValueError("map sizes do not match the shelves")
    witness = None
    for r in range(src.size):
        for l in range(src.size):
            if table[src.ap(r, l)] != dst.ap(table[r], table[l]):
                witness = (r, l)
                break
        if witness:
            break
    return Report.of(
        Check(
            check_id="shelf-morphism",
            law="shelf-morphism",
            passed=witness is None,
            witness=witness,
            detail=f"{src.size ** 2} pairs",
            seconds=time.perf_counter() - t0,
        )
    )


class ShelfAction:
    """A right action of a shelf S on a set: m ◂ s = table[m][s]."""

    __slots__ = ("shelf", "set_size", "table")

    def __init__(self, shelf: Shelf, table):
        m = len(table)
        if m == 0:
            raise ValueError("action table must be nonempty")
        for row in table:
            if len(row) != shelf.size:
                raise ValueError("action rows must have one entry per shelf element")
            for v in row:
                if not (0 <= v < m):
                    raise ValueError(f"action value {v} out of range 0..{m - 1}")
        self.shelf = shelf
        self.set_size = m
        self.table = tuple(tuple(row) for row in table)

    def act(self, x: int, s: int) -> int:
        return self.table[x][s]


def check_shelf_action(action: ShelfAction) -> Report:
    """(m ◂ s) ◂ s' = (m ◂ s') ◂ (s <| s') over all triples; first witness reported."""
    t0 = time.perf_counter()
    S = action.shelf
    witness = None
    for m in range(action.set_size):
        for s in range(S.size):
            for s2 in range(S.size):
                if action.act(action.act(m, s), s2) != action.act(action.act(m, s2), S.ap(s, s2)):
                    witness = (m, s, s2)
                    break
            if witness:
                break
        if witness:
            break
    return Report.of(
        Check(
            check_id="shelf-action",
            law="shelf-action-compatibility",
            passed=witness is None,
            witness=witness,
            detail=f"{action.set_size * S.size ** 2} triples",
            seconds=time.perf_counter() - t0,
        )
    )


def automorphism_group(shelf: Shelf, size_limit: int = 8):
    """Brute-force the bijections preserving <|; returns (group, automorphisms).

    The Cayley table composes diagrammatically: (a * b) means "apply a, then b",
    which is the convention under which r . phi = phi(r) is equivariant for the
    translation augmentation.
    """
    if shelf.size > size_limit:
        raise ValueError(f"shelf size {shelf.size} over automorphism search limit {size_limit}")
    from .groups import FiniteGroup

    n = shelf.size
    autos = []
    for perm in permutations(range(n)):
        if all(
            perm[shelf.ap(a, b)] == shelf.ap(perm[a], perm[b]) for a in range(n) for b in range(n)
        ):
            autos.append(perm)
    index = {perm: i for i, perm in enumerate(autos)}
    table = [
        [index[tuple(b[a[x]] for x in range(n))] for b in autos]
        for a in autos
    ]
    group = FiniteGroup(table)
    return group, tuple(SetFn(n, n, perm) for perm in autos)


def sd_pair_map(table) -> SetFn:
    """(a, b) -> (b, a <| b) for an arbitrary binary-operation table."""
    n = _validate_square_table(table)
    out = [0] * (n * n)
    for a in range(n):
        for b in range(n):
            out[a * n + b] = b * n + table[a][b]
    return SetFn(n * n, n * n, out)


def sigma_sd(shelf: Shelf) -> SetFn:
    """The self-distributivity braiding of a shelf."""
    return sd_pair_map(shelf.table)
