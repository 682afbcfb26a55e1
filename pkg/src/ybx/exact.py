"""Exact scalars, dense matrices, and finite set maps: the substrate for every structure layer."""

from __future__ import annotations

import itertools
from fractions import Fraction


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Field:
    """Arbitrary-precision rationals or a prime field F_p; scalars stay canonical."""

    __slots__ = ("kind", "p")

    def __init__(self, kind: str, p: int | None = None):
        if kind == "prime":
            if p is None or not _is_prime(p):
                raise ValueError(f"modulus must be prime, got {p!r}")
        elif kind == "rationals":
            if p is not None:
                raise ValueError("rationals take no modulus")
        else:
            raise ValueError(f"unknown field kind {kind!r}")
        self.kind = kind
        self.p = p

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and self.kind == other.kind and self.p == other.p

    def __hash__(self) -> int:
        return hash((self.kind, self.p))

    def __repr__(self) -> str:
        return "QQ" if self.kind == "rationals" else f"GF({self.p})"

    @property
    def zero(self):
        return 0 if self.kind == "prime" else _QZERO

    @property
    def one(self):
        return 1 if self.kind == "prime" else _QONE

    def coerce(self, x):
        """Bring an int, Fraction, or string into canonical scalar form."""
        if isinstance(x, str):
            x = Fraction(x)
        if self.kind == "prime":
            if isinstance(x, Fraction):
                return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
            return x % self.p
        if isinstance(x, Fraction):
            return x
        return Fraction(x)

    def add(self, a, b):
        return (a + b) % self.p if self.kind == "prime" else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.kind == "prime" else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.kind == "prime" else a * b

    def neg(self, a):
        return (-a) % self.p if self.kind == "prime" else -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.kind == "prime":
            return pow(a, -1, self.p)
        return 1 / a

    def encode(self, x):
        """Canonical JSON form: an int when integral, else a 'p/q' string."""
        if self.kind == "prime":
            return x
        return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


_QZERO = Fraction(0)
_QONE = Fraction(1)

QQ = Field("rationals")


def GF(p: int) -> Field:
    return Field("prime", p)


class Matrix:
    """Dense exact matrix over a Field, stored as a tuple of row tuples."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: Field, data):
        rows = len(data)
        if rows == 0:
            raise ValueError("matrix needs at least one row")
        cols = len(data[0])
        if cols == 0 or any(len(row) != cols for row in data):
            raise ValueError("matrix rows must be nonempty and of equal length")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.data = tuple(tuple(field.coerce(x) for x in row) for row in data)

    @classmethod
    def _trusted(cls, field: Field, grid) -> "Matrix":
        """Internal fast path: entries already canonical in this field."""
        m = object.__new__(cls)
        m.field = field
        m.rows = len(grid)
        m.cols = len(grid[0])
        m.data = tuple(tuple(row) for row in grid)
        return m

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        z = field.zero
        return cls._trusted(field, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls._trusted(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, field: Field, rows: int, cols: int, column_entries) -> "Matrix":
        """Build from per-column sparse entries: column_entries[j] lists (row, coeff)."""
        grid = [[field.zero] * cols for _ in range(rows)]
        for j, entries in enumerate(column_entries):
            for i, v in entries:
                grid[i][j] = field.add(grid[i][j], field.coerce(v))
        return cls._trusted(field, grid)

    def entry(self, i: int, j: int):
        return self.data[i][j]

    def apply(self, vec: dict) -> dict:
        """Apply to a sparse column vector {index: coeff}; zero entries are dropped."""
        F = self.field
        out: dict = {}
        for idx, coeff in vec.items():
            if not coeff:
                continue
            for i, row in enumerate(self.data):
                v = row[idx]
                if v:
                    out[i] = F.add(out.get(i, F.zero), F.mul(coeff, v))
        return {k: v for k, v in out.items() if v}

    def column(self, j: int):
        """Sparse column j as (row, coeff) pairs."""
        return [(i, row[j]) for i, row in enumerate(self.data) if row[j]]

    def sparse_columns(self) -> list:
        """All columns at once as sparse (row, coeff) lists; one pass over the data."""
        cols = [[] for _ in range(self.cols)]
        for i, row in enumerate(self.data):
            for j, v in enumerate(row):
                if v:
                    cols[j].append((i, v))
        return cols

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.data == other.data
        )

    def __hash__(self) -> int:
        return hash((self.field, self.data))

    def __repr__(self) -> str:
        return f"Matrix({self.field!r}, {self.rows}x{self.cols})"

    def mul(self, other: "Matrix") -> "Matrix":
        """Matrix product self @ other, touching only nonzero entries.

        The nonzero positions of `other` are gathered once up front; braidings
        and structure maps are near-permutation matrices, so products cost
        little more than the scans that locate their entries.
        """
        if self.field != other.field:
            raise ValueError("field mismatch")
        if self.cols != other.rows:
            raise ValueError(f"dimension mismatch: {self.cols} vs {other.rows}")
        F = self.field
        sparse_rows = [[(k, b) for k, b in enumerate(row) if b] for row in other.data]
        out = []
        for row in self.data:
            acc = [F.zero] * other.cols
            for j, a in enumerate(row):
                if a:
                    for k, b in sparse_rows[j]:
                        acc[k] = F.add(acc[k], F.mul(a, b))
            out.append(acc)
        return Matrix._trusted(F, out)

    __matmul__ = mul

    def compose(self, other: "Matrix") -> "Matrix":
        return self.mul(other)

    def add(self, other: "Matrix") -> "Matrix":
        if self.field != other.field or (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape or field mismatch")
        F = self.field
        return Matrix._trusted(
            F, [[F.add(a, b) for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)]
        )

    def sub(self, other: "Matrix") -> "Matrix":
        if self.field != other.field or (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape or field mismatch")
        F = self.field
        return Matrix._trusted(
            F, [[F.sub(a, b) for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)]
        )

    def scale(self, c) -> "Matrix":
        F = self.field
        c = F.coerce(c)
        return Matrix._trusted(F, [[F.mul(c, x) for x in row] for row in self.data])

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product; e_i (x) e_j of the codomain has index i*other.rows + j."""
        if self.field != other.field:
            raise ValueError("field mismatch")
        F = self.field
        out = [[F.zero] * (self.cols * other.cols) for _ in range(self.rows * other.rows)]
        for i, row in enumerate(self.data):
            for j, a in enumerate(row):
                if a:
                    ibase = i * other.rows
                    jbase = j * other.cols
                    for k, brow in enumerate(other.data):
                        acc = out[ibase + k]
                        for l, b in enumerate(brow):
                            if b:
                                acc[jbase + l] = F.mul(a, b)
        return Matrix._trusted(F, out)

    def transpose(self) -> "Matrix":
        return Matrix._trusted(
            self.field, [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)]
        )

    def power(self, k: int) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("power needs a square matrix")
        if k < 0:
            raise ValueError("negative power")
        acc = Matrix.identity(self.field, self.rows)
        for _ in range(k):
            acc = acc.mul(self)
        return acc

    def is_zero(self) -> bool:
        return all(not x for row in self.data for x in row)

    def inverse(self) -> "Matrix":
        """Exact Gauss-Jordan inverse; raises ValueError when singular."""
        if self.rows != self.cols:
            raise ValueError("inverse needs a square matrix")
        n = self.rows
        F = self.field
        a = [list(row) for row in self.data]
        b = [list(row) for row in Matrix.identity(F, n).data]
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col]), None)
            if piv is None:
                raise ValueError("matrix is not invertible")
            a[col], a[piv] = a[piv], a[col]
            b[col], b[piv] = b[piv], b[col]
            scale = F.inv(a[col][col])
            a[col] = [F.mul(scale, x) for x in a[col]]
            b[col] = [F.mul(scale, x) for x in b[col]]
            for r in range(n):
                if r != col and a[r][col]:
                    f = a[r][col]
                    a[r] = [F.sub(x, F.mul(f, y)) for x, y in zip(a[r], a[col])]
                    b[r] = [F.sub(x, F.mul(f, y)) for x, y in zip(b[r], b[col])]
        return Matrix._trusted(F, b)


class SetFn:
    """Map between finite index sets {0..n-1}, stored as a lookup table."""

    __slots__ = ("domain", "codomain", "table")

    def __init__(self, domain: int, codomain: int, table):
        if len(table) != domain:
            raise ValueError("table length must equal domain size")
        if any(not (0 <= v < codomain) for v in table):
            raise ValueError("table entry out of codomain range")
        self.domain = domain
        self.codomain = codomain
        self.table = tuple(table)

    @classmethod
    def identity(cls, n: int) -> "SetFn":
        return cls(n, n, range(n))

    def __call__(self, i: int) -> int:
        return self.table[i]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SetFn)
            and self.domain == other.domain
            and self.codomain == other.codomain
            and self.table == other.table
        )

    def __hash__(self) -> int:
        return hash((self.domain, self.codomain, self.table))

    def __repr__(self) -> str:
        return f"SetFn({self.domain}->{self.codomain})"

    def compose(self, other: "SetFn") -> "SetFn":
        """(self o other)(x) = self(other(x))."""
        if other.codomain != self.domain:
            raise ValueError(f"size mismatch: {other.codomain} vs {self.domain}")
        return SetFn(other.domain, self.codomain, [self.table[v] for v in other.table])

    def kron(self, other: "SetFn") -> "SetFn":
        """Pair map (x,y) -> (self(x), other(y)) under the pair-index convention."""
        table = [
            self.table[x] * other.codomain + other.table[y]
            for x in range(self.domain)
            for y in range(other.domain)
        ]
        return SetFn(self.domain * other.domain, self.codomain * other.codomain, table)

    def power(self, k: int) -> "SetFn":
        if self.domain != self.codomain:
            raise ValueError("power needs an endomap")
        if k < 0:
            raise ValueError("negative power")
        acc = SetFn.identity(self.domain)
        for _ in range(k):
            acc = acc.compose(self)
        return acc

    def is_bijective(self) -> bool:
        return self.domain == self.codomain and len(set(self.table)) == self.domain

    def inverse(self) -> "SetFn":
        if not self.is_bijective():
            raise ValueError("map is not bijective")
        inv = [0] * self.domain
        for i, v in enumerate(self.table):
            inv[v] = i
        return SetFn(self.domain, self.domain, inv)


def kron(a, b):
    """Tensor/pair product of two maps of the same kind."""
    if isinstance(a, Matrix) and isinstance(b, Matrix):
        return a.kron(b)
    if isinstance(a, SetFn) and isinstance(b, SetFn):
        return a.kron(b)
    raise TypeError("kron needs two matrices or two set maps")


def compose(f, g):
    """(f o g); matrix product in linear mode."""
    if isinstance(f, Matrix) and isinstance(g, Matrix):
        return f.mul(g)
    if isinstance(f, SetFn) and isinstance(g, SetFn):
        return f.compose(g)
    raise TypeError("compose needs two maps of the same kind")


def flip(dim_a: int, dim_b: int, field: Field | None = None):
    """The flip V(x)W -> W(x)V: index i*dim_b+j goes to j*dim_a+i."""
    if dim_a < 1 or dim_b < 1:
        raise ValueError("dims must be positive")
    table = [0] * (dim_a * dim_b)
    for i in range(dim_a):
        for j in range(dim_b):
            table[i * dim_b + j] = j * dim_a + i
    if field is None:
        return SetFn(dim_a * dim_b, dim_a * dim_b, table)
    return permutation_matrix(field, table)


def identity(n: int, field: Field | None = None):
    return SetFn.identity(n) if field is None else Matrix.identity(field, n)


def permutation_matrix(field: Field, table) -> Matrix:
    """Column j carries e_{table[j]}, so the matrix acts like the set map on basis vectors."""
    n = len(table)
    return Matrix.from_columns(field, n, n, [[(v, field.one)] for v in table])


def linearize(fn: SetFn, field: Field) -> Matrix:
    """The field-linear extension of a set map on basis vectors."""
    return Matrix.from_columns(
        field, fn.codomain, fn.domain, [[(v, field.one)] for v in fn.table]
    )


def diff_witness(a, b, dims):
    """First input where two same-shape maps disagree, decoded over dims, plus a count.

    Matrices are compared column by column, set maps entry by entry; the flat
    index is decoded with the last dim varying fastest. Returns (None, 0) on equality.
    """
    if isinstance(a, SetFn):
        bad = [i for i in range(a.domain) if a.table[i] != b.table[i]]
    else:
        bad = [
            j
            for j in range(a.cols)
            if any(a.data[i][j] != b.data[i][j] for i in range(a.rows))
        ]
    if not bad:
        return None, 0
    idx = []
    rem = bad[0]
    for d in reversed(dims):
        idx.append(rem % d)
        rem //= d
    return tuple(reversed(idx)), len(bad)


def _apply_stage(vec: dict, factors, F: Field) -> dict:
    """One pipeline stage applied to a sparse column vector {index: coeff}.

    factors holds (cols, rows, sparse_columns-or-None) triples acting on
    consecutive tensor slots; None marks an identity factor.
    """
    add, mul, zero = F.add, F.mul, F.zero
    out: dict = {}
    for idx, coeff in vec.items():
        rem = idx
        entry_lists = []
        annihilated = False
        for cdim, _, cols in reversed(factors):
            rem, d = divmod(rem, cdim)
            if cols is None:
                entry_lists.append(((d, None),))
            else:
                entries = cols[d]
                if not entries:
                    annihilated = True
                    break
                entry_lists.append(entries)
        if annihilated:
            continue
        entry_lists.reverse()
        for combo in itertools.product(*entry_lists):
            row = 0
            c = coeff
            for (_, rdim, _), (i, v) in zip(factors, combo):
                row = row * rdim + i
                if v is not None:
                    c = mul(c, v)
            out[row] = add(out.get(row, zero), c)
    return {k: v for k, v in out.items() if v}


def layered_diff(left, right, dims, field: Field):
    """First basis input where two layered linear pipelines disagree, plus a count.

    left and right are sequences of stages applied first to last; each stage is
    a sequence of factors on consecutive tensor slots, where a factor is a
    Matrix or an int (the identity of that size). Basis vectors of the common
    domain are pushed through both pipelines via sparse columns, never
    materializing Kronecker products. The flat input index of the first
    disagreement is decoded over dims with the last dim varying fastest,
    exactly as in diff_witness. Returns (None, 0) on equality.
    """

    def normalize(stages, size_in):
        norm = []
        size = size_in
        for stage in stages:
            facs = []
            cin = 1
            rout = 1
            for f in stage:
                if isinstance(f, int):
                    if f < 1:
                        raise ValueError("identity factors need a positive size")
                    facs.append((f, f, None))
                    cin *= f
                    rout *= f
                elif isinstance(f, Matrix):
                    if f.field != field:
                        raise ValueError("field mismatch")
                    facs.append((f.cols, f.rows, f.sparse_columns()))
                    cin *= f.cols
                    rout *= f.rows
                else:
                    raise TypeError("factors must be matrices or identity sizes")
            if cin != size:
                raise ValueError(f"stage domain {cin} does not chain with {size}")
            size = rout
            norm.append(facs)
        return norm, size

    total = 1
    for d in dims:
        total *= d
    lnorm, lout = normalize(left, total)
    rnorm, rout = normalize(right, total)
    if lout != rout:
        raise ValueError(f"pipelines end in different spaces: {lout} vs {rout}")
    one = field.one
    bad = []
    for e in range(total):
        va = {e: one}
        for facs in lnorm:
            va = _apply_stage(va, facs, field)
        vb = {e: one}
        for facs in rnorm:
            vb = _apply_stage(vb, facs, field)
        if va != vb:
            bad.append(e)
    if not bad:
        return None, 0
    idx = []
    rem = bad[0]
    for d in reversed(dims):
        idx.append(rem % d)
        rem //= d
    return tuple(reversed(idx)), len(bad)


def kron_apply(factors, m: Matrix) -> Matrix:
    """kron(*factors) composed after m, never materializing the square Kronecker factor."""
    F = m.field
    dims_in = [f.cols for f in factors]
    size_in = 1
    for d in dims_in:
        size_in *= d
    if size_in != m.rows:
        raise ValueError("factor domains do not match the matrix codomain")
    rows_out = 1
    for f in factors:
        if f.field != F:
            raise ValueError("field mismatch")
        rows_out *= f.rows
    fac_cols = [[f.column(j) for j in range(f.cols)] for f in factors]
    out = [[F.zero] * m.cols for _ in range(rows_out)]
    for r in range(m.rows):
        nz = [(c, v) for c, v in enumerate(m.data[r]) if v]
        if not nz:
            continue
        idxs = []
        rem = r
        for d in reversed(dims_in):
            idxs.append(rem % d)
            rem //= d
        idxs.reverse()
        for combo in itertools.product(*(fac_cols[t][idxs[t]] for t in range(len(factors)))):
            out_row = 0
            coeff = F.one
            for t, (i, v) in enumerate(combo):
                out_row = out_row * factors[t].rows + i
                coeff = F.mul(coeff, v)
            acc = out[out_row]
            for c, v in nz:
                acc[c] = F.add(acc[c], F.mul(coeff, v))
    return Matrix._trusted(F, out)
