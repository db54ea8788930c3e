"""Dense exact matrices over cyclotomic scalars.

Row-reduced echelon form, kernels, subspace coordinates and Kronecker
products; all arithmetic is exact, all outputs deterministic.  The
Kronecker index convention is (i tensor j) -> i * dim_b + j everywhere.
"""

from __future__ import annotations

from .cyclotomic import FieldContext, Scalar


class Matrix:
    """Row-major dense matrix of Scalars sharing one FieldContext."""

    __slots__ = ("ctx", "rows", "cols", "entries")

    def __init__(self, ctx: FieldContext, rows: int, cols: int, entries: list[Scalar]):
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match shape")
        self.ctx = ctx
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def zero(cls, ctx: FieldContext, rows: int, cols: int) -> "Matrix":
        z = ctx.zero()
        return cls(ctx, rows, cols, [z] * (rows * cols))

    @classmethod
    def identity(cls, ctx: FieldContext, n: int) -> "Matrix":
        z, o = ctx.zero(), ctx.one()
        entries = [z] * (n * n)
        for i in range(n):
            entries[i * n + i] = o
        return cls(ctx, n, n, entries)

    @classmethod
    def from_rows(cls, ctx: FieldContext, rows: list[list[Scalar]]) -> "Matrix":
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        flat: list[Scalar] = []
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            flat.extend(r)
        return cls(ctx, nrows, ncols, flat)

    def __getitem__(self, idx: tuple[int, int]) -> Scalar:
        i, j = idx
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[Scalar]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> list[Scalar]:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def to_rows(self) -> list[list[Scalar]]:
        return [self.row(i) for i in range(self.rows)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols} over Q(zeta_{self.ctx.conductor}))"

    def transpose(self) -> "Matrix":
        e = self.entries
        out = [e[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)]
        return Matrix(self.ctx, self.cols, self.rows, out)

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix(
            self.ctx,
            self.rows,
            self.cols,
            [a + b for a, b in zip(self.entries, other.entries)],
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix(
            self.ctx,
            self.rows,
            self.cols,
            [a - b for a, b in zip(self.entries, other.entries)],
        )

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in product")
        ctx = self.ctx
        z = ctx.zero()
        out = [z] * (self.rows * other.cols)
        oc = other.cols
        for i in range(self.rows):
            arow = self.row(i)
            base = i * oc
            for k, aik in enumerate(arow):
                if aik.is_zero():
                    continue
                brow = other.entries[k * oc : (k + 1) * oc]
                for j, bkj in enumerate(brow):
                    if not bkj.is_zero():
                        out[base + j] = out[base + j] + aik * bkj
        return Matrix(ctx, self.rows, other.cols, out)

    def apply(self, vec: list[Scalar]) -> list[Scalar]:
        """Matrix-vector product."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        z = self.ctx.zero()
        out = [z] * self.rows
        for k, vk in enumerate(vec):
            if vk.is_zero():
                continue
            for i in range(self.rows):
                e = self.entries[i * self.cols + k]
                if not e.is_zero():
                    out[i] = out[i] + e * vk
        return out

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Row-reduced echelon form with pivots normalised to 1.

    Pivot selection scans columns left to right and takes the first row
    with a nonzero entry, so the result is deterministic.
    """
    rows = [list(r) for r in m.to_rows()]
    nrows, ncols = m.rows, m.cols
    pivots: list[int] = []
    pr = 0
    for pc in range(ncols):
        found = -1
        for r in range(pr, nrows):
            if not rows[r][pc].is_zero():
                found = r
                break
        if found < 0:
            continue
        rows[pr], rows[found] = rows[found], rows[pr]
        pivot = rows[pr][pc]
        if not pivot.is_one():
            pinv = pivot.inv()
            rows[pr] = [e * pinv for e in rows[pr]]
        prow = rows[pr]
        for r in range(nrows):
            if r == pr:
                continue
            f = rows[r][pc]
            if f.is_zero():
                continue
            target = rows[r]
            for c in range(pc, ncols):
                if not prow[c].is_zero():
                    target[c] = target[c] - f * prow[c]
        pivots.append(pc)
        pr += 1
        if pr == nrows:
            break
    return Matrix.from_rows(m.ctx, rows) if nrows else m, tuple(pivots)


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


class SubspaceBasis:
    """Basis of a subspace of k^ambient_dim in reduced echelon form."""

    __slots__ = ("ctx", "ambient_dim", "vectors", "pivots")

    def __init__(self, ctx: FieldContext, ambient_dim: int, vectors: list[list[Scalar]], pivots: tuple[int, ...]):
        self.ctx = ctx
        self.ambient_dim = ambient_dim
        self.vectors = vectors
        self.pivots = pivots

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def __repr__(self) -> str:
        return f"SubspaceBasis(dim {self.dim} in k^{self.ambient_dim})"

    @classmethod
    def from_spanning(cls, ctx: FieldContext, ambient_dim: int, vectors: list[list[Scalar]]) -> "SubspaceBasis":
        if not vectors:
            return cls(ctx, ambient_dim, [], ())
        red, pivots = rref(Matrix.from_rows(ctx, vectors))
        rows = [red.row(i) for i in range(len(pivots))]
        return cls(ctx, ambient_dim, rows, pivots)


def kernel_basis(m: Matrix) -> SubspaceBasis:
    """Echelonised basis of the right kernel of m."""
    red, pivots = rref(m)
    pivot_set = set(pivots)
    free_cols = [c for c in range(m.cols) if c not in pivot_set]
    z, o = m.ctx.zero(), m.ctx.one()
    vectors: list[list[Scalar]] = []
    for f in free_cols:
        v = [z] * m.cols
        v[f] = o
        for i, pc in enumerate(pivots):
            e = red[i, f]
            if not e.is_zero():
                v[pc] = -e
        vectors.append(v)
    return SubspaceBasis.from_spanning(m.ctx, m.cols, vectors)


def coords_in_basis(v: list[Scalar], b: SubspaceBasis) -> list[Scalar] | None:
    """Coordinates of v in the echelon basis b, or None when v is not in
    the span (the NotInSubspace signal)."""
    if len(v) != b.ambient_dim:
        raise ValueError("vector length does not match ambient dimension")
    coords = [v[pc] for pc in b.pivots]
    residual = list(v)
    for c, vec in zip(coords, b.vectors):
        if c.is_zero():
            continue
        for i, e in enumerate(vec):
            if not e.is_zero():
                residual[i] = residual[i] - c * e
    if any(not e.is_zero() for e in residual):
        return None
    return coords


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product with (i tensor j) -> i * dim_b + j indexing."""
    if a.ctx.conductor != b.ctx.conductor:
        raise ValueError("mixed field contexts in kron")
    ctx = a.ctx
    z = ctx.zero()
    rows = a.rows * b.rows
    cols = a.cols * b.cols
    out = [z] * (rows * cols)
    for i in range(a.rows):
        for j in range(a.cols):
            aij = a[i, j]
            if aij.is_zero():
                continue
            for k in range(b.rows):
                base = (i * b.rows + k) * cols + j * b.cols
                off = k * b.cols
                for l in range(b.cols):
                    e = b.entries[off + l]
                    if not e.is_zero():
                        out[base + l] = aij * e
    return Matrix(ctx, rows, cols, out)


def solve(a: Matrix, rhs: list[Scalar]) -> list[Scalar] | None:
    """One particular solution of a x = rhs (free variables set to 0),
    or None when the system is inconsistent."""
    if len(rhs) != a.rows:
        raise ValueError("rhs length mismatch")
    aug_rows = [a.row(i) + [rhs[i]] for i in range(a.rows)]
    aug = Matrix.from_rows(a.ctx, aug_rows) if a.rows else Matrix.zero(a.ctx, 0, a.cols + 1)
    red, pivots = rref(aug)
    if a.cols in pivots:
        return None
    z = a.ctx.zero()
    x = [z] * a.cols
    for i, pc in enumerate(pivots):
        x[pc] = red[i, a.cols]
    return x


def invert(m: Matrix) -> Matrix | None:
    """Inverse of a square matrix, or None if singular."""
    if m.rows != m.cols:
        raise ValueError("only square matrices can be inverted")
    n = m.rows
    ident = Matrix.identity(m.ctx, n)
    aug_rows = [m.row(i) + ident.row(i) for i in range(n)]
    red, pivots = rref(Matrix.from_rows(m.ctx, aug_rows))
    if tuple(pivots) != tuple(range(n)):
        return None
    rows = [red.row(i)[n:] for i in range(n)]
    return Matrix.from_rows(m.ctx, rows)
