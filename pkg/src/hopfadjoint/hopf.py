"""Finite-dimensional algebras, coalgebras and Hopf algebras by
structure constants, with exhaustive axiom checkers and antipode
solving.

Structure constants are stored densely; checkers iterate over all basis
tuples and report exact pass/fail with witnesses.  Antipodes are never
transcribed from formulas: they are solved from the convolution
identity, which independently validates every construction.
"""

from __future__ import annotations

import time

from .cyclotomic import FieldContext, Scalar
from .linalg import Matrix, kernel_basis, solve
from .reports import VerificationReport


class NoAntipodeError(Exception):
    """The convolution system for the antipode is inconsistent."""


def _zeros(ctx: FieldContext, n: int) -> list[Scalar]:
    return [ctx.zero()] * n


class FinDimAlgebra:
    """Algebra with mult[i][j] = coordinates of e_i * e_j."""

    def __init__(self, ctx: FieldContext, dim: int, mult, unit):
        self.ctx = ctx
        self.dim = dim
        self.mult = mult
        self.unit = list(unit)
        self._sparse: dict[tuple[int, int], list[tuple[int, Scalar]]] = {}

    def mult_sparse(self, i: int, j: int) -> list[tuple[int, Scalar]]:
        key = (i, j)
        cached = self._sparse.get(key)
        if cached is None:
            cached = [(k, c) for k, c in enumerate(self.mult[i][j]) if not c.is_zero()]
            self._sparse[key] = cached
        return cached

    def mult_vec(self, u: list[Scalar], v: list[Scalar]) -> list[Scalar]:
        out = _zeros(self.ctx, self.dim)
        for i, ui in enumerate(u):
            if ui.is_zero():
                continue
            for j, vj in enumerate(v):
                if vj.is_zero():
                    continue
                c = ui * vj
                for k, m in self.mult_sparse(i, j):
                    out[k] = out[k] + c * m
        return out

    def basis_vec(self, i: int) -> list[Scalar]:
        v = _zeros(self.ctx, self.dim)
        v[i] = self.ctx.one()
        return v

    def left_mult_matrix(self, u: list[Scalar]) -> Matrix:
        cols = [self.mult_vec(u, self.basis_vec(j)) for j in range(self.dim)]
        entries = [cols[j][i] for i in range(self.dim) for j in range(self.dim)]
        return Matrix(self.ctx, self.dim, self.dim, entries)

    def right_mult_matrix(self, u: list[Scalar]) -> Matrix:
        cols = [self.mult_vec(self.basis_vec(j), u) for j in range(self.dim)]
        entries = [cols[j][i] for i in range(self.dim) for j in range(self.dim)]
        return Matrix(self.ctx, self.dim, self.dim, entries)

    def to_jsonable(self):
        return {
            "dim": self.dim,
            "mult": self.mult,
            "unit": self.unit,
        }


class FinDimCoalgebra:
    """Coalgebra with comult[i][j][k] the coefficient of e_j x e_k in
    Delta(e_i); counit is a linear functional on the basis."""

    def __init__(self, ctx: FieldContext, dim: int, comult, counit):
        self.ctx = ctx
        self.dim = dim
        self.comult = comult
        self.counit = list(counit)
        self._delta: dict[int, list[tuple[int, int, Scalar]]] = {}
        self._delta2: dict[int, list[tuple[int, int, int, Scalar]]] = {}

    def delta_terms(self, i: int) -> list[tuple[int, int, Scalar]]:
        cached = self._delta.get(i)
        if cached is None:
            rows = self.comult[i]
            cached = [
                (j, k, rows[j][k])
                for j in range(self.dim)
                for k in range(self.dim)
                if not rows[j][k].is_zero()
            ]
            self._delta[i] = cached
        return cached

    def delta2_terms(self, i: int) -> list[tuple[int, int, int, Scalar]]:
        """Terms of (Delta x id) Delta(e_i)."""
        cached = self._delta2.get(i)
        if cached is None:
            acc: dict[tuple[int, int, int], Scalar] = {}
            for j, k, c in self.delta_terms(i):
                for a, b, d in self.delta_terms(j):
                    key = (a, b, k)
                    coeff = c * d
                    if key in acc:
                        acc[key] = acc[key] + coeff
                    else:
                        acc[key] = coeff
            cached = [(a, b, k, v) for (a, b, k), v in sorted(acc.items()) if not v.is_zero()]
            self._delta2[i] = cached
        return cached

    def delta_vec(self, u: list[Scalar]) -> dict[tuple[int, int], Scalar]:
        acc: dict[tuple[int, int], Scalar] = {}
        for i, ui in enumerate(u):
            if ui.is_zero():
                continue
            for j, k, c in self.delta_terms(i):
                key = (j, k)
                coeff = ui * c
                if key in acc:
                    acc[key] = acc[key] + coeff
                else:
                    acc[key] = coeff
        return {k: v for k, v in acc.items() if not v.is_zero()}

    def counit_vec(self, u: list[Scalar]) -> Scalar:
        out = self.ctx.zero()
        for i, ui in enumerate(u):
            if not ui.is_zero():
                out = out + ui * self.counit[i]
        return out

    def to_jsonable(self):
        return {
            "dim": self.dim,
            "comult": self.comult,
            "counit": self.counit,
        }


class FinDimHopf:
    """Hopf algebra: algebra + coalgebra on one basis + antipode matrix."""

    def __init__(self, algebra: FinDimAlgebra, coalgebra: FinDimCoalgebra, antipode: Matrix):
        if algebra.dim != coalgebra.dim:
            raise ValueError("algebra/coalgebra dimension mismatch")
        self.algebra = algebra
        self.coalgebra = coalgebra
        self.antipode = antipode

    @property
    def ctx(self) -> FieldContext:
        return self.algebra.ctx

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def antipode_vec(self, u: list[Scalar]) -> list[Scalar]:
        return self.antipode.apply(u)

    def to_jsonable(self):
        return {
            "dim": self.dim,
            "mult": self.algebra.mult,
            "unit": self.algebra.unit,
            "comult": self.coalgebra.comult,
            "counit": self.coalgebra.counit,
            "antipode": self.antipode,
        }


def _vec_eq(u: list[Scalar], v: list[Scalar]) -> bool:
    return all((a - b).is_zero() for a, b in zip(u, v))


def check_algebra(a: FinDimAlgebra, report: VerificationReport | None = None, prefix: str = "algebra") -> VerificationReport:
    """Associativity on all basis triples and both unit laws."""
    rep = report if report is not None else VerificationReport()
    t0 = time.perf_counter()
    bad = None
    for i in range(a.dim):
        ei = a.basis_vec(i)
        for j in range(a.dim):
            ij = a.mult[i][j]
            ej = a.basis_vec(j)
            for k in range(a.dim):
                lhs = a.mult_vec(ij, a.basis_vec(k))
                rhs = a.mult_vec(ei, a.mult[j][k])
                if not _vec_eq(lhs, rhs):
                    bad = {"triple": [i, j, k], "residual": [x - y for x, y in zip(lhs, rhs)]}
                    break
            if bad:
                break
        if bad:
            break
    rep.add(f"{prefix}/associativity", bad is None, bad, (time.perf_counter() - t0) * 1e3)

    t0 = time.perf_counter()
    bad = None
    for i in range(a.dim):
        ei = a.basis_vec(i)
        if not _vec_eq(a.mult_vec(a.unit, ei), ei) or not _vec_eq(a.mult_vec(ei, a.unit), ei):
            bad = {"index": i}
            break
    rep.add(f"{prefix}/unit-laws", bad is None, bad, (time.perf_counter() - t0) * 1e3)
    return rep


def check_coalgebra(c: FinDimCoalgebra, report: VerificationReport | None = None, prefix: str = "coalgebra") -> VerificationReport:
    """Coassociativity and counit laws on every basis element."""
    rep = report if report is not None else VerificationReport()
    t0 = time.perf_counter()
    bad = None
    for i in range(c.dim):
        left: dict[tuple[int, int, int], Scalar] = {}
        for j, k, coeff in c.delta_terms(i):
            for a, b, d in c.delta_terms(j):
                key = (a, b, k)
                left[key] = left.get(key, c.ctx.zero()) + coeff * d
        right: dict[tuple[int, int, int], Scalar] = {}
        for j, k, coeff in c.delta_terms(i):
            for a, b, d in c.delta_terms(k):
                key = (j, a, b)
                right[key] = right.get(key, c.ctx.zero()) + coeff * d
        keys = set(left) | set(right)
        for key in keys:
            diff = left.get(key, c.ctx.zero()) - right.get(key, c.ctx.zero())
            if not diff.is_zero():
                bad = {"index": i, "tensor_index": list(key)}
                break
        if bad:
            break
    rep.add(f"{prefix}/coassociativity", bad is None, bad, (time.perf_counter() - t0) * 1e3)

    t0 = time.perf_counter()
    bad = None
    for i in range(c.dim):
        lvec = _zeros(c.ctx, c.dim)
        rvec = _zeros(c.ctx, c.dim)
        for j, k, coeff in c.delta_terms(i):
            lvec[k] = lvec[k] + coeff * c.counit[j]
            rvec[j] = rvec[j] + coeff * c.counit[k]
        ei = _zeros(c.ctx, c.dim)
        ei[i] = c.ctx.one()
        if not _vec_eq(lvec, ei) or not _vec_eq(rvec, ei):
            bad = {"index": i}
            break
    rep.add(f"{prefix}/counit-laws", bad is None, bad, (time.perf_counter() - t0) * 1e3)
    return rep


def check_bialgebra(a: FinDimAlgebra, c: FinDimCoalgebra, report: VerificationReport | None = None, prefix: str = "bialgebra") -> VerificationReport:
    """Algebra + coalgebra axioms plus multiplicativity of Delta and
    the counit on all basis pairs."""
    rep = report if report is not None else VerificationReport()
    check_algebra(a, rep, prefix=f"{prefix}/algebra")
    check_coalgebra(c, rep, prefix=f"{prefix}/coalgebra")

    t0 = time.perf_counter()
    bad = None
    for i in range(a.dim):
        if bad:
            break
        for j in range(a.dim):
            prod = a.mult[i][j]
            lhs = c.delta_vec(prod)
            rhs: dict[tuple[int, int], Scalar] = {}
            for p, q, cc in c.delta_terms(i):
                for r, s, dd in c.delta_terms(j):
                    coeff = cc * dd
                    for x, m1 in a.mult_sparse(p, r):
                        for y, m2 in a.mult_sparse(q, s):
                            key = (x, y)
                            add = coeff * m1 * m2
                            rhs[key] = rhs.get(key, a.ctx.zero()) + add
            keys = set(lhs) | set(rhs)
            for key in keys:
                diff = lhs.get(key, a.ctx.zero()) - rhs.get(key, a.ctx.zero())
                if not diff.is_zero():
                    bad = {"pair": [i, j], "tensor_index": list(key)}
                    break
            if bad:
                break
    rep.add(f"{prefix}/comult-multiplicative", bad is None, bad, (time.perf_counter() - t0) * 1e3)

    t0 = time.perf_counter()
    bad = None
    one_delta = c.delta_vec(a.unit)
    expect: dict[tuple[int, int], Scalar] = {}
    for i, ui in enumerate(a.unit):
        if ui.is_zero():
            continue
        for j, uj in enumerate(a.unit):
            if not uj.is_zero():
                expect[(i, j)] = ui * uj
    keys = set(one_delta) | set(expect)
    for key in keys:
        if not (one_delta.get(key, a.ctx.zero()) - expect.get(key, a.ctx.zero())).is_zero():
            bad = {"tensor_index": list(key)}
            break
    rep.add(f"{prefix}/comult-unit", bad is None, bad, (time.perf_counter() - t0) * 1e3)

    t0 = time.perf_counter()
    bad = None
    for i in range(a.dim):
        for j in range(a.dim):
            lhs = c.counit_vec(a.mult[i][j])
            rhs = c.counit[i] * c.counit[j]
            if not (lhs - rhs).is_zero():
                bad = {"pair": [i, j]}
                break
        if bad:
            break
    if bad is None and not (c.counit_vec(a.unit) - a.ctx.one()).is_zero():
        bad = {"pair": "unit"}
    rep.add(f"{prefix}/counit-multiplicative", bad is None, bad, (time.perf_counter() - t0) * 1e3)
    return rep


def convolution_identity_holds(a: FinDimAlgebra, c: FinDimCoalgebra, s: Matrix, side: str) -> tuple[bool, dict | None]:
    """Check m(S x id)Delta = u eps (side="left") or m(id x S)Delta = u eps."""
    for i in range(a.dim):
        acc = _zeros(a.ctx, a.dim)
        for j, k, coeff in c.delta_terms(i):
            if side == "left":
                sv = [s[l, j] for l in range(a.dim)]
                term = a.mult_vec(sv, a.basis_vec(k))
            else:
                sv = [s[l, k] for l in range(a.dim)]
                term = a.mult_vec(a.basis_vec(j), sv)
            for l in range(a.dim):
                if not term[l].is_zero():
                    acc[l] = acc[l] + coeff * term[l]
        target = [a.unit[l] * c.counit[i] for l in range(a.dim)]
        if not _vec_eq(acc, target):
            return False, {"index": i, "side": side}
    return True, None


def solve_antipode(a: FinDimAlgebra, c: FinDimCoalgebra) -> Matrix:
    """Solve m(S x id)Delta = u eps for the matrix S, verify uniqueness
    and the right-handed identity m(id x S)Delta = u eps.

    Raises NoAntipodeError when the linear system is inconsistent."""
    ctx = a.ctx
    dim = a.dim
    n_unknowns = dim * dim  # S[l][j] at column index l * dim + j
    rows: list[list[Scalar]] = []
    rhs: list[Scalar] = []
    z = ctx.zero()
    for i in range(dim):
        coeffs: dict[tuple[int, int, int], Scalar] = {}
        for j, k, coeff in c.delta_terms(i):
            for l in range(dim):
                for p, m in a.mult_sparse(l, k):
                    key = (p, l, j)
                    coeffs[key] = coeffs.get(key, z) + coeff * m
        for p in range(dim):
            row = [z] * n_unknowns
            for (pp, l, j), v in coeffs.items():
                if pp == p:
                    row[l * dim + j] = v
            rows.append(row)
            rhs.append(a.unit[p] * c.counit[i])
    system = Matrix.from_rows(ctx, rows)
    x = solve(system, rhs)
    if x is None:
        raise NoAntipodeError("antipode convolution system is inconsistent")
    if kernel_basis(system).dim != 0:
        raise NoAntipodeError("antipode is not unique; convolution system is degenerate")
    entries = [x[l * dim + j] for l in range(dim) for j in range(dim)]
    s = Matrix(ctx, dim, dim, entries)
    ok, witness = convolution_identity_holds(a, c, s, "right")
    if not ok:
        raise NoAntipodeError(f"solved antipode fails right convolution identity: {witness}")
    return s


def check_hopf(h: FinDimHopf, report: VerificationReport | None = None, prefix: str = "hopf") -> VerificationReport:
    rep = report if report is not None else VerificationReport()
    check_bialgebra(h.algebra, h.coalgebra, rep, prefix=f"{prefix}/bialgebra")
    for side in ("left", "right"):
        t0 = time.perf_counter()
        ok, witness = convolution_identity_holds(h.algebra, h.coalgebra, h.antipode, side)
        rep.add(f"{prefix}/antipode-{side}", ok, witness, (time.perf_counter() - t0) * 1e3)
    return rep


def tensor_algebra(a: FinDimAlgebra, b: FinDimAlgebra) -> FinDimAlgebra:
    """Componentwise product on basis e_i x f_j with kron indexing."""
    if a.ctx.conductor != b.ctx.conductor:
        raise ValueError("mixed field contexts")
    ctx = a.ctx
    dim = a.dim * b.dim
    mult = [[None] * dim for _ in range(dim)]
    for i in range(a.dim):
        for j in range(b.dim):
            for k in range(a.dim):
                for l in range(b.dim):
                    va = a.mult[i][k]
                    vb = b.mult[j][l]
                    vec = _zeros(ctx, dim)
                    for p, ca in enumerate(va):
                        if ca.is_zero():
                            continue
                        for q, cb in enumerate(vb):
                            if not cb.is_zero():
                                vec[p * b.dim + q] = ca * cb
                    mult[i * b.dim + j][k * b.dim + l] = vec
    unit = _zeros(ctx, dim)
    for p, ca in enumerate(a.unit):
        if ca.is_zero():
            continue
        for q, cb in enumerate(b.unit):
            if not cb.is_zero():
                unit[p * b.dim + q] = ca * cb
    return FinDimAlgebra(ctx, dim, mult, unit)


def dual_algebra(c: FinDimCoalgebra) -> FinDimAlgebra:
    """Convolution algebra on the dual basis; the unit is the counit."""
    ctx = c.ctx
    dim = c.dim
    mult = [[None] * dim for _ in range(dim)]
    for i in range(dim):
        for j in range(dim):
            vec = _zeros(ctx, dim)
            for k in range(dim):
                vec[k] = c.comult[k][i][j]
            mult[i][j] = vec
    return FinDimAlgebra(ctx, dim, mult, list(c.counit))
