"""Solver for the invariant-map algebra attached to a comodule algebra
K over a bosonization: the space of linear maps alpha: (H#T) x K -> P
cut out by the module/comodule/right-multiplicativity conditions, with
its product, action and coaction, plus every structural verification
used by the acceptance suite.

Conditions (all imposed over full basis ranges, exactly):
  ad1  alpha(k(-1) x, k(0) l) = k alpha(x, l)
  ad2  the map x -> alpha(x, 1) intertwines the R-matrix coaction on
       H#T with the projected coaction on P
  ad3  alpha(x, k) = alpha(x, 1) k

Two pipelines produce bit-identical bases: the full Hom-space kernel
and a reduced one parametrised by alpha(-, 1).
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import FieldContext, Scalar, zeta_power
from .hopf import FinDimHopf
from .braiding import ComoduleAlgebra, ModuleRep, RMatrix, check_comodule, check_module, check_yd, ComoduleRep
from .constructions import ComoduleAlgebraK, TaftModel, taft_model, comodule_algebra_K
from .linalg import Matrix, SubspaceBasis, coords_in_basis, kernel_basis
from .reports import VerificationReport


class ClosureFailure(Exception):
    """A structure map left the computed solution subspace."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class AdjointProblem:
    """All data feeding one solver run.  `t_embed` lifts the base Hopf
    algebra into the bosonization (columns = images of base elements);
    `rbar` flips the R-matrix convention of the comodule condition to
    the mirrored one."""

    hopf: FinDimHopf
    base: FinDimHopf
    pi: Matrix
    t_embed: Matrix
    rmatrix: RMatrix
    comod_alg: ComoduleAlgebra
    conditions: frozenset[str]
    rbar: bool = False

    @property
    def ctx(self) -> FieldContext:
        return self.hopf.ctx

    def describe(self) -> dict:
        return {
            "hopf_dim": self.hopf.dim,
            "comodule_algebra": self.comod_alg.name,
            "conditions": sorted(self.conditions),
            "rbar": self.rbar,
        }


def problem_for(model: TaftModel, k: ComoduleAlgebra, conditions, rbar: bool = False,
                rmatrix: RMatrix | None = None) -> AdjointProblem:
    """Problem over one Taft model; the embedding of the group algebra
    sends g^b to x^0 # g^b."""
    ctx = model.ctx
    n = model.n
    embed = Matrix.zero(ctx, model.taft.dim, n)
    for b in range(n):
        embed.entries[model.x_index(0, b) * n + b] = ctx.one()
    conds = frozenset(c.lower() for c in conditions)
    if not conds <= {"ad1", "ad2", "ad3"}:
        raise ValueError(f"unknown conditions: {sorted(conds - {'ad1', 'ad2', 'ad3'})}")
    return AdjointProblem(model.taft, model.t_hopf, model.pi, embed,
                          rmatrix if rmatrix is not None else model.rmatrix,
                          k, conds, rbar)


def _ad2_leg_terms(p: AdjointProblem) -> list[tuple[int, int, Scalar]]:
    """(base_leg, embedded_leg, coeff) triples for the comodule
    condition: base_leg stays in T, embedded_leg multiplies the H#T
    argument.  Default reads the problem's R as legs (R2, R1); the rbar
    flag uses the mirrored inverse instead."""
    if p.rbar:
        return [(i, j, c) for (i, j, c) in p.rmatrix.inverse_terms()]
    return [(j, i, c) for (i, j, c) in p.rmatrix.terms()]


# ---------------------------------------------------------------------------
# condition systems


def _embedded_mult(p: AdjointProblem, t_index: int, x_index: int) -> list[tuple[int, Scalar]]:
    """Sparse expansion of (embed g^t) * e_x inside H#T."""
    alg = p.hopf.algebra
    col = [p.t_embed[r, t_index] for r in range(p.hopf.dim)]
    out: dict[int, Scalar] = {}
    z = p.ctx.zero()
    for y, cy in enumerate(col):
        if cy.is_zero():
            continue
        for zz, m in alg.mult_sparse(y, x_index):
            out[zz] = out.get(zz, z) + cy * m
    return sorted((k, v) for k, v in out.items() if not v.is_zero())


def _pi_terms(p: AdjointProblem, y: int) -> list[tuple[int, Scalar]]:
    return [(t, p.pi[t, y]) for t in range(p.base.dim) if not p.pi[t, y].is_zero()]


def condition_system(p: AdjointProblem) -> Matrix:
    """Full pipeline: unknowns alpha[pp][(x, k)] flattened at
    (x*NK + k)*NP + pp; one row block per active condition, indexed over
    all basis tuples (the comodule condition is anchored at k = 1)."""
    ctx = p.ctx
    K = p.comod_alg
    NH, NK = p.hopf.dim, K.dim
    NP = NK  # coefficients in K itself
    ncols = NH * NK * NP
    z = ctx.zero()
    kalg = K.algebra

    def u(x: int, k: int, pp: int) -> int:
        return (x * NK + k) * NP + pp

    rows: list[list[Scalar]] = []

    if "ad1" in p.conditions:
        left_mats = [kalg.left_mult_matrix(kalg.basis_vec(k)) for k in range(NK)]
        for k in range(NK):
            lam_k = K.coaction_terms(k)
            lk = left_mats[k]
            for x in range(NH):
                for l in range(NK):
                    coeffs: dict[tuple[int, int], Scalar] = {}
                    for y, k0, c in lam_k:
                        for zz, m1 in p.hopf.algebra.mult_sparse(y, x):
                            for j, m2 in kalg.mult_sparse(k0, l):
                                key = (zz, j)
                                coeffs[key] = coeffs.get(key, z) + c * m1 * m2
                    for pp in range(NP):
                        row = [z] * ncols
                        for (zz, j), c in coeffs.items():
                            row[u(zz, j, pp)] = row[u(zz, j, pp)] + c
                        for p2 in range(NP):
                            e = lk[pp, p2]
                            if not e.is_zero():
                                row[u(x, l, p2)] = row[u(x, l, p2)] - e
                        rows.append(row)

    if "ad2" in p.conditions:
        legs = _ad2_leg_terms(p)
        unit_terms = [(k, c) for k, c in enumerate(kalg.unit) if not c.is_zero()]
        for x in range(NH):
            lhs: dict[tuple[int, int, int], Scalar] = {}  # (t, zz, k) -> coeff
            for t_leg, e_leg, c in legs:
                for zz, m in _embedded_mult(p, e_leg, x):
                    for k, ck in unit_terms:
                        key = (t_leg, zz, k)
                        lhs[key] = lhs.get(key, z) + c * m * ck
            rhs: dict[tuple[int, int, int], Scalar] = {}  # (t, pp, p2) -> coeff
            for p2 in range(NK):
                for y, p0, c in K.coaction_terms(p2):
                    for t, cpi in _pi_terms(p, y):
                        key = (t, p0, p2)
                        rhs[key] = rhs.get(key, z) + c * cpi
            for t in range(p.base.dim):
                for pp in range(NP):
                    row = [z] * ncols
                    for (tt, zz, k), c in lhs.items():
                        if tt == t:
                            row[u(zz, k, pp)] = row[u(zz, k, pp)] + c
                    for (tt, p0, p2), c in rhs.items():
                        if tt == t and p0 == pp:
                            for k, ck in unit_terms:
                                row[u(x, k, p2)] = row[u(x, k, p2)] - c * ck
                    rows.append(row)

    if "ad3" in p.conditions:
        right_mats = [kalg.right_mult_matrix(kalg.basis_vec(k)) for k in range(NK)]
        unit_terms = [(k, c) for k, c in enumerate(kalg.unit) if not c.is_zero()]
        for x in range(NH):
            for k in range(NK):
                rk = right_mats[k]
                for pp in range(NP):
                    row = [z] * ncols
                    row[u(x, k, pp)] = row[u(x, k, pp)] + ctx.one()
                    for p2 in range(NP):
                        e = rk[pp, p2]
                        if e.is_zero():
                            continue
                        for kk, ck in unit_terms:
                            row[u(x, kk, p2)] = row[u(x, kk, p2)] - e * ck
                    rows.append(row)

    if not rows:
        return Matrix.zero(ctx, 0, ncols)
    return Matrix.from_rows(ctx, rows)


def condition_system_reduced(p: AdjointProblem, generators_only: bool = False) -> Matrix:
    """Reduced pipeline: unknowns abar[pp][x] at x*NK + pp, where
    alpha(x, k) = abar(x) k is substituted into the other conditions.

    With generators_only the module condition runs over the algebra
    generators of K instead of its whole basis; the conditions at
    products of generators follow by multiplicativity, so the kernel is
    unchanged (and the exhaustive path re-checks that in tests)."""
    if "ad3" not in p.conditions:
        raise ValueError("reduced pipeline needs the right-multiplicativity condition")
    ctx = p.ctx
    K = p.comod_alg
    NH, NK = p.hopf.dim, K.dim
    ncols = NH * NK
    z = ctx.zero()
    kalg = K.algebra

    def u(x: int, pp: int) -> int:
        return x * NK + pp

    rows: list[list[Scalar]] = []

    if "ad1" in p.conditions:
        k_range = list(K.generators) if generators_only else list(range(NK))
        left_mats = {k: kalg.left_mult_matrix(kalg.basis_vec(k)) for k in k_range}
        right_mats = [kalg.right_mult_matrix(kalg.basis_vec(k)) for k in range(NK)]
        for k in k_range:
            lam_k = K.coaction_terms(k)
            lk = left_mats[k]
            for x in range(NH):
                coeffs: dict[tuple[int, int, int], Scalar] = {}  # (zz, p_out, p2)
                for y, k0, c in lam_k:
                    rmat = right_mats[k0]
                    for zz, m1 in p.hopf.algebra.mult_sparse(y, x):
                        for pp in range(NK):
                            for p2 in range(NK):
                                e = rmat[pp, p2]
                                if not e.is_zero():
                                    key = (zz, pp, p2)
                                    coeffs[key] = coeffs.get(key, z) + c * m1 * e
                for pp in range(NK):
                    row = [z] * ncols
                    for (zz, p_out, p2), c in coeffs.items():
                        if p_out == pp:
                            row[u(zz, p2)] = row[u(zz, p2)] + c
                    for p2 in range(NK):
                        e = lk[pp, p2]
                        if not e.is_zero():
                            row[u(x, p2)] = row[u(x, p2)] - e
                    rows.append(row)

    if "ad2" in p.conditions:
        legs = _ad2_leg_terms(p)
        for x in range(NH):
            lhs: dict[tuple[int, int], Scalar] = {}  # (t, zz)
            for t_leg, e_leg, c in legs:
                for zz, m in _embedded_mult(p, e_leg, x):
                    key = (t_leg, zz)
                    lhs[key] = lhs.get(key, z) + c * m
            rhs: dict[tuple[int, int, int], Scalar] = {}  # (t, p0, p2)
            for p2 in range(NK):
                for y, p0, c in K.coaction_terms(p2):
                    for t, cpi in _pi_terms(p, y):
                        key = (t, p0, p2)
                        rhs[key] = rhs.get(key, z) + c * cpi
            for t in range(p.base.dim):
                for pp in range(NK):
                    row = [z] * ncols
                    for (tt, zz), c in lhs.items():
                        if tt == t:
                            row[u(zz, pp)] = row[u(zz, pp)] + c
                    for (tt, p0, p2), c in rhs.items():
                        if tt == t and p0 == pp:
                            row[u(x, p2)] = row[u(x, p2)] - c
                    rows.append(row)

    if not rows:
        return Matrix.zero(ctx, 0, ncols)
    return Matrix.from_rows(ctx, rows)


# ---------------------------------------------------------------------------
# the solved algebra


class AdjointElement:
    """One solution map, stored as its columns: cols[x*NK + k] is the
    value alpha(e_x, e_k) in K."""

    __slots__ = ("cols", "NH", "NK")

    def __init__(self, cols: list[list[Scalar]], NH: int, NK: int):
        self.cols = cols
        self.NH = NH
        self.NK = NK

    @classmethod
    def from_flat(cls, flat: list[Scalar], NH: int, NK: int) -> "AdjointElement":
        NP = NK
        cols = [flat[i * NP : (i + 1) * NP] for i in range(NH * NK)]
        return cls(cols, NH, NK)

    def flat(self) -> list[Scalar]:
        out: list[Scalar] = []
        for col in self.cols:
            out.extend(col)
        return out

    def col(self, x: int, k: int) -> list[Scalar]:
        return self.cols[x * self.NK + k]

    def eval_kvec(self, ctx: FieldContext, x: int, kvec: list[Scalar]) -> list[Scalar]:
        out = [ctx.zero()] * len(self.cols[0])
        for k, ck in enumerate(kvec):
            if ck.is_zero():
                continue
            col = self.col(x, k)
            for i, e in enumerate(col):
                if not e.is_zero():
                    out[i] = out[i] + ck * e
        return out

    def to_matrix(self, ctx: FieldContext) -> Matrix:
        NP = len(self.cols[0])
        ncols = len(self.cols)
        entries = [self.cols[c][r] for r in range(NP) for c in range(ncols)]
        return Matrix(ctx, NP, ncols, entries)


class AdjointAlgebra:
    """Solution space with product, unit, action and coaction expressed
    in its echelon basis; every structure map is closure-checked."""

    def __init__(self, problem: AdjointProblem, basis: SubspaceBasis):
        self.problem = problem
        self.basis = basis
        K = problem.comod_alg
        self.NH, self.NK = problem.hopf.dim, K.dim
        self.elements = [AdjointElement.from_flat(v, self.NH, self.NK) for v in basis.vectors]
        self.dim = basis.dim
        self._bar_cache: dict[tuple[int, int], list[Scalar]] = {}
        self.product: list[list[list[Scalar]]] | None = None
        self.unit_coords: list[Scalar] | None = None
        self.action: list[Matrix] | None = None
        self.coaction: Matrix | None = None

    @property
    def ctx(self) -> FieldContext:
        return self.problem.ctx

    def bar(self, i: int, x: int) -> list[Scalar]:
        """alpha_i(e_x, 1)."""
        key = (i, x)
        v = self._bar_cache.get(key)
        if v is None:
            v = self.elements[i].eval_kvec(self.ctx, x, self.problem.comod_alg.algebra.unit)
            self._bar_cache[key] = v
        return v

    def element_coords(self, e: AdjointElement) -> list[Scalar] | None:
        return coords_in_basis(e.flat(), self.basis)

    def eval_combo(self, coords: list[Scalar], x: int, kvec: list[Scalar]) -> list[Scalar]:
        out = [self.ctx.zero()] * self.NK
        for i, ci in enumerate(coords):
            if ci.is_zero():
                continue
            v = self.elements[i].eval_kvec(self.ctx, x, kvec)
            for r in range(self.NK):
                if not v[r].is_zero():
                    out[r] = out[r] + ci * v[r]
        return out

    def product_element(self, a: AdjointElement, b: AdjointElement) -> AdjointElement:
        """(a.b)(x, k) = a(x1, b(x2, k))."""
        ctx = self.ctx
        hopf = self.problem.hopf
        NK = self.NK
        cols = [[ctx.zero()] * NK for _ in range(self.NH * NK)]
        for x in range(self.NH):
            terms = hopf.coalgebra.delta_terms(x)
            for k in range(NK):
                acc = cols[x * NK + k]
                for x1, x2, c in terms:
                    w = b.col(x2, k)
                    v = a.eval_kvec(ctx, x1, w)
                    for r in range(NK):
                        if not v[r].is_zero():
                            acc[r] = acc[r] + c * v[r]
        return AdjointElement(cols, self.NH, NK)

    def unit_element(self) -> AdjointElement:
        """u(x, k) = eps(x) k."""
        ctx = self.ctx
        NK = self.NK
        eps = self.problem.hopf.coalgebra.counit
        cols = []
        for x in range(self.NH):
            for k in range(NK):
                col = [ctx.zero()] * NK
                col[k] = eps[x]
                cols.append(col)
        return AdjointElement(cols, self.NH, NK)

    def action_element(self, h: int, a: AdjointElement) -> AdjointElement:
        """(h.a)(x, k) = a(xh, k)."""
        ctx = self.ctx
        alg = self.problem.hopf.algebra
        NK = self.NK
        cols = [[ctx.zero()] * NK for _ in range(self.NH * NK)]
        for x in range(self.NH):
            for zz, m in alg.mult_sparse(x, h):
                for k in range(NK):
                    src = a.col(zz, k)
                    acc = cols[x * NK + k]
                    for r in range(NK):
                        if not src[r].is_zero():
                            acc[r] = acc[r] + m * src[r]
        return AdjointElement(cols, self.NH, NK)

    def coaction_components(self, a: AdjointElement) -> dict[int, AdjointElement]:
        """delta(a) = sum_y  e_y x component_y, where
        component_y(x, k) = coefficient of e_y in S(x1) lam(a(x2,1))(-1) x3,
        paired with lam(a(x2,1))(0) k."""
        ctx = self.ctx
        hopf = self.problem.hopf
        K = self.problem.comod_alg
        alg = hopf.algebra
        NK = self.NK
        z = ctx.zero()
        comps: dict[int, list[list[Scalar]]] = {}
        for x in range(self.NH):
            for x1, x2, x3, c in hopf.coalgebra.delta2_terms(x):
                v = a.eval_kvec(ctx, x2, K.algebra.unit)
                if all(e.is_zero() for e in v):
                    continue
                lam = K.coaction_vec(v)
                if not lam:
                    continue
                s1 = [hopf.antipode[l, x1] for l in range(self.NH)]
                for (y0, p0), clam in lam.items():
                    left = alg.mult_vec(alg.mult_vec(s1, alg.basis_vec(y0)), alg.basis_vec(x3))
                    for k in range(NK):
                        rvec = K.algebra.mult_sparse(p0, k)
                        for y, cy in enumerate(left):
                            if cy.is_zero():
                                continue
                            comp = comps.get(y)
                            if comp is None:
                                comp = [[z] * NK for _ in range(self.NH * NK)]
                                comps[y] = comp
                            acc = comp[x * NK + k]
                            coeff = c * clam * cy
                            for r, m in rvec:
                                acc[r] = acc[r] + coeff * m
        return {y: AdjointElement(cols, self.NH, NK) for y, cols in comps.items()}

    # -- structure assembly ------------------------------------------------

    def compute_structure(self) -> None:
        ctx = self.ctx
        n = self.dim
        u = self.unit_element()
        uc = self.element_coords(u)
        if uc is None:
            raise ClosureFailure("unit map is not in the solution space",
                                 witness={"map": "x,k -> eps(x) k"})
        self.unit_coords = uc

        prod: list[list[list[Scalar]]] = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                e = self.product_element(self.elements[i], self.elements[j])
                c = self.element_coords(e)
                if c is None:
                    raise ClosureFailure("product left the solution space",
                                         witness={"pair": [i, j]})
                prod[i][j] = c
        self.product = prod

        action: list[Matrix] = []
        for h in range(self.NH):
            cols = []
            for j in range(n):
                e = self.action_element(h, self.elements[j])
                c = self.element_coords(e)
                if c is None:
                    raise ClosureFailure("action left the solution space",
                                         witness={"h": h, "basis": j})
                cols.append(c)
            entries = [cols[j][i] for i in range(n) for j in range(n)]
            action.append(Matrix(ctx, n, n, entries))
        self.action = action

        coact = Matrix.zero(ctx, self.NH * n, n)
        for j in range(n):
            comps = self.coaction_components(self.elements[j])
            for y, e in comps.items():
                c = self.element_coords(e)
                if c is None:
                    raise ClosureFailure("coaction left the solution space",
                                         witness={"basis": j, "hopf_component": y})
                for i in range(n):
                    if not c[i].is_zero():
                        coact.entries[(y * n + i) * n + j] = c[i]
        self.coaction = coact

    # -- views -------------------------------------------------------------

    def module_rep(self) -> ModuleRep:
        return ModuleRep(self.problem.hopf.algebra, self.dim, self.action)

    def comodule_rep(self) -> ComoduleRep:
        return ComoduleRep(self.problem.hopf.coalgebra, self.dim, self.coaction)

    def coaction_terms(self, i: int) -> list[tuple[int, int, Scalar]]:
        return self.comodule_rep().coaction_terms(i)

    def product_coords(self, ci: list[Scalar], cj: list[Scalar]) -> list[Scalar]:
        out = [self.ctx.zero()] * self.dim
        for i, a in enumerate(ci):
            if a.is_zero():
                continue
            for j, b in enumerate(cj):
                if b.is_zero():
                    continue
                c = a * b
                for k, e in enumerate(self.product[i][j]):
                    if not e.is_zero():
                        out[k] = out[k] + c * e
        return out

    def to_jsonable(self):
        return {
            "problem": self.problem.describe(),
            "dim": self.dim,
            "basis": [e.to_matrix(self.ctx) for e in self.elements],
            "product": self.product,
            "unit": self.unit_coords,
            "action": self.action,
            "coaction": self.coaction,
        }


def solve_adjoint(p: AdjointProblem, pipeline: str = "reduced",
                  with_structure: bool = True,
                  generators_only: bool = False) -> AdjointAlgebra:
    """Kernel of the active conditions, inflated to full Hom-space
    coordinates and echelonised (so both pipelines agree bit-for-bit),
    then equipped with its verified structure maps."""
    ctx = p.ctx
    K = p.comod_alg
    NH, NK = p.hopf.dim, K.dim
    if pipeline == "reduced":
        system = condition_system_reduced(p, generators_only=generators_only)
        kern = kernel_basis(system)
        flats = []
        for v in kern.vectors:
            cols = []
            for x in range(NH):
                vbar = v[x * NK : (x + 1) * NK]
                for k in range(NK):
                    cols.append(K.algebra.mult_vec(vbar, K.algebra.basis_vec(k)))
            flat: list[Scalar] = []
            for col in cols:
                flat.extend(col)
            flats.append(flat)
        basis = SubspaceBasis.from_spanning(ctx, NH * NK * NK, flats)
    elif pipeline == "full":
        system = condition_system(p)
        basis = kernel_basis(system)
    else:
        raise ValueError(f"unknown pipeline {pipeline!r}")
    alg = AdjointAlgebra(p, basis)
    if with_structure:
        alg.compute_structure()
    return alg


# ---------------------------------------------------------------------------
# direct re-verification of the conditions (independent of the kernel solver)


def verify_conditions_direct(a: AdjointAlgebra,
                             report: VerificationReport | None = None,
                             prefix: str = "conditions") -> VerificationReport:
    rep = report if report is not None else VerificationReport()
    p = a.problem
    ctx = a.ctx
    K = p.comod_alg
    kalg = K.algebra
    NH, NK = a.NH, a.NK
    z = ctx.zero()

    if "ad1" in p.conditions:
        t0 = time.perf_counter()
        bad = None
        for idx, e in enumerate(a.elements):
            for k in range(NK):
                lam_k = K.coaction_terms(k)
                for x in range(NH):
                    for l in range(NK):
                        lhs = [z] * NK
                        for y, k0, c in lam_k:
                            for zz, m1 in p.hopf.algebra.mult_sparse(y, x):
                                kl = kalg.mult[k0][l]
                                v = e.eval_kvec(ctx, zz, kl)
                                for r in range(NK):
                                    if not v[r].is_zero():
                                        lhs[r] = lhs[r] + c * m1 * v[r]
                        rhs = kalg.mult_vec(kalg.basis_vec(k), e.col(x, l))
                        if not all((u - w).is_zero() for u, w in zip(lhs, rhs)):
                            bad = {"basis": idx, "tuple": [k, x, l]}
                            break
                    if bad:
                        break
                if bad:
                    break
            if bad:
                break
        rep.add(f"{prefix}/ad1-residual-zero", bad is None, bad, (time.perf_counter() - t0) * 1e3)

    if "ad2" in p.conditions:
        t0 = time.perf_counter()
        legs = _ad2_leg_terms(p)
        bad = None
        for idx in range(a.dim):
            for x in range(NH):
                lhs: dict[tuple[int, int], Scalar] = {}
                for t_leg, e_leg, c in legs:
                    for zz, m in _embedded_mult(p, e_leg, x):
                        v = a.bar(idx, zz)
                        for r in range(NK):
                            if not v[r].is_zero():
                                key = (t_leg, r)
                                lhs[key] = lhs.get(key, z) + c * m * v[r]
                rhs: dict[tuple[int, int], Scalar] = {}
                vbar = a.bar(idx, x)
                lam = K.coaction_vec(vbar)
                for (y, p0), c in lam.items():
                    for t, cpi in _pi_terms(p, y):
                        key = (t, p0)
                        rhs[key] = rhs.get(key, z) + c * cpi
                for key in set(lhs) | set(rhs):
                    if not (lhs.get(key, z) - rhs.get(key, z)).is_zero():
                        bad = {"basis": idx, "x": x}
                        break
                if bad:
                    break
            if bad:
                break
        rep.add(f"{prefix}/ad2-residual-zero", bad is None, bad, (time.perf_counter() - t0) * 1e3)

    if "ad3" in p.conditions:
        t0 = time.perf_counter()
        bad = None
        for idx, e in enumerate(a.elements):
            for x in range(NH):
                vbar = a.bar(idx, x)
                for k in range(NK):
                    rhs = kalg.mult_vec(vbar, kalg.basis_vec(k))
                    if not all((u - w).is_zero() for u, w in zip(e.col(x, k), rhs)):
                        bad = {"basis": idx, "tuple": [x, k]}
                        break
                if bad:
                    break
            if bad:
                break
        rep.add(f"{prefix}/ad3-residual-zero", bad is None, bad, (time.perf_counter() - t0) * 1e3)
    return rep


# ---------------------------------------------------------------------------
# structural verifications


def verify_yd(a: AdjointAlgebra, report: VerificationReport | None = None,
              prefix: str = "adjoint-yd") -> VerificationReport:
    """The computed action and coaction form a Yetter-Drinfeld module."""
    rep = report if report is not None else VerificationReport()
    mod = a.module_rep()
    com = a.comodule_rep()
    check_module(mod, rep, prefix=f"{prefix}/module")
    check_comodule(com, rep, prefix=f"{prefix}/comodule")
    check_yd(a.problem.hopf, mod, com, rep, prefix=f"{prefix}/compat")
    return rep


def verify_center_algebra(a: AdjointAlgebra, report: VerificationReport | None = None,
                          prefix: str = "adjoint-center") -> VerificationReport:
    """Associativity, unit, and the product being a module and comodule
    morphism for the tensor structures."""
    rep = report if report is not None else VerificationReport()
    ctx = a.ctx
    n = a.dim
    z = ctx.zero()
    hopf = a.problem.hopf

    t0 = time.perf_counter()
    bad = None
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = a.product_coords(a.product[i][j], _unitv(ctx, n, k))
                rhs = a.product_coords(_unitv(ctx, n, i), a.product[j][k])
                if not _eqv(lhs, rhs):
                    bad = {"triple": [i, j, k]}
                    break
            if bad:
                break
        if bad:
            break
    rep.add(f"{prefix}/associative", bad is None, bad, (time.perf_counter() - t0) * 1e3)

    t0 = time.perf_counter()
    bad = None
    for i in range(n):
        ei = _unitv(ctx, n, i)
        if not _eqv(a.product_coords(a.unit_coords, ei), ei) or \
           not _eqv(a.product_coords(ei, a.unit_coords), ei):
            bad = {"basis": i}
            break
    rep.add(f"{prefix}/unit-two-sided", bad is None, bad, (time.perf_counter() - t0) * 1e3)

    t0 = time.perf_counter()
    bad = None
    eps = hopf.coalgebra.counit
    for h in range(hopf.dim):
        img = a.action[h].apply(a.unit_coords)
        expect = [eps[h] * c for c in a.unit_coords]
        if not _eqv(img, expect):
            bad = {"h": h}
            break
    rep.add(f"{prefix}/unit-invariant", bad is None, bad, (time.perf_counter() - t0) * 1e3)

    t0 = time.perf_counter()
    bad = None
    for h in range(hopf.dim):
        if bad:
            break
        terms = hopf.coalgebra.delta_terms(h)
        for i in range(n):
            for j in range(n):
                lhs = a.action[h].apply(a.product[i][j])
                rhs = [z] * n
                for h1, h2, c in terms:
                    vi = a.action[h1].col(i)
                    vj = a.action[h2].col(j)
                    w = a.product_coords(vi, vj)
                    for r in range(n):
                        if not w[r].is_zero():
                            rhs[r] = rhs[r] + c * w[r]
                if not _eqv(lhs, rhs):
                    bad = {"h": h, "pair": [i, j]}
                    break
            if bad:
                break
    rep.add(f"{prefix}/product-module-morphism", bad is None, bad, (time.perf_counter() - t0) * 1e3)

    t0 = time.perf_counter()
    bad = None
    com = a.comodule_rep()
    for i in range(n):
        if bad:
            break
        ti = com.coaction_terms(i)
        for j in range(n):
            tj = com.coaction_terms(j)
            lhs: dict[tuple[int, int], Scalar] = {}
            pij = a.product[i][j]
            for k, ck in enumerate(pij):
                if ck.is_zero():
                    continue
                for y, l, c in com.coaction_terms(k):
                    key = (y, l)
                    lhs[key] = lhs.get(key, z) + ck * c
            rhs: dict[tuple[int, int], Scalar] = {}
            for y1, i0, c1 in ti:
                for y2, j0, c2 in tj:
                    c12 = c1 * c2
                    pr = a.product[i0][j0]
                    for y, m in hopf.algebra.mult_sparse(y1, y2):
                        cm = c12 * m
                        for l, e in enumerate(pr):
                            if not e.is_zero():
                                key = (y, l)
                                rhs[key] = rhs.get(key, z) + cm * e
            for key in set(lhs) | set(rhs):
                if not (lhs.get(key, z) - rhs.get(key, z)).is_zero():
                    bad = {"pair": [i, j]}
                    break
            if bad:
                break
    rep.add(f"{prefix}/product-comodule-morphism", bad is None, bad, (time.perf_counter() - t0) * 1e3)
    return rep


def verify_braided_commutative(a: AdjointAlgebra, report: VerificationReport | None = None,
                               prefix: str = "adjoint-braided") -> VerificationReport:
    """m o c = m with c the Yetter-Drinfeld braiding; also records
    whether plain (unbraided) commutativity happens to hold."""
    rep = report if report is not None else VerificationReport()
    ctx = a.ctx
    n = a.dim
    z = ctx.zero()
    com = a.comodule_rep()
    t0 = time.perf_counter()
    bad = None
    for i in range(n):
        if bad:
            break
        for j in range(n):
            # c(alpha_i x alpha_j) = alpha_i(-1).alpha_j x alpha_i(0)
            rhs = [z] * n
            for y, i0, c in com.coaction_terms(i):
                w = a.action[y].col(j)
                v = a.product_coords(w, _unitv(ctx, n, i0))
                for r in range(n):
                    if not v[r].is_zero():
                        rhs[r] = rhs[r] + c * v[r]
            if not _eqv(a.product[i][j], rhs):
                bad = {"pair": [i, j]}
                break
    rep.add(f"{prefix}/braided-commutative", bad is None, bad, (time.perf_counter() - t0) * 1e3)

    plain = all(_eqv(a.product[i][j], a.product[j][i]) for i in range(n) for j in range(n))
    rep.add(f"{prefix}/plain-commutative-info", True, {"plain_commutative": plain})
    return rep


def g_module_via_pi(p: AdjointProblem, v: ModuleRep) -> ModuleRep:
    """A base-algebra module viewed as a module over the bosonization
    through the projection."""
    mats = []
    for i in range(p.hopf.dim):
        col = [p.pi[t, i] for t in range(p.base.dim)]
        mats.append(v.act_elem(col))
    return ModuleRep(p.hopf.algebra, v.dim, mats)


def verify_relative_center(a: AdjointAlgebra, v: ModuleRep,
                           report: VerificationReport | None = None,
                           prefix: str = "relative-center") -> VerificationReport:
    """The double braiding against the lifted module is the identity."""
    if "ad2" not in a.problem.conditions:
        raise ValueError("relative-center check requires the comodule condition (ad2)")
    rep = report if report is not None else VerificationReport()
    p = a.problem
    ctx = a.ctx
    n = a.dim
    dv = v.dim
    z = ctx.zero()
    gv = g_module_via_pi(p, v)
    com = a.comodule_rep()
    embed_action: dict[int, Matrix] = {}
    for t in range(p.base.dim):
        colv = [p.t_embed[r, t] for r in range(p.hopf.dim)]
        m = Matrix.zero(ctx, n, n)
        for y, cy in enumerate(colv):
            if cy.is_zero():
                continue
            for idx, e in enumerate(a.action[y].entries):
                if not e.is_zero():
                    m.entries[idx] = m.entries[idx] + cy * e
        embed_action[t] = m

    t0 = time.perf_counter()
    bad = None
    rinv = a.problem.rmatrix.inverse_terms()
    for i in range(n):
        if bad:
            break
        for vv in range(dv):
            # first A x V -> V x A by the Yetter-Drinfeld half-braiding
            mid: dict[tuple[int, int], Scalar] = {}
            for y, i0, c in com.coaction_terms(i):
                col = [gv.action[y][r, vv] for r in range(dv)]
                for r, e in enumerate(col):
                    if not e.is_zero():
                        key = (r, i0)
                        mid[key] = mid.get(key, z) + c * e
            # then V x A -> A x V by the lifted inverse-R half-braiding
            out: dict[tuple[int, int], Scalar] = {}
            for (w, j), c in mid.items():
                for t1, t2, cr in rinv:
                    acol = [embed_action[t1][r, j] for r in range(n)]
                    wcol = [v.action[t2][r, w] for r in range(dv)]
                    for r1, e1 in enumerate(acol):
                        if e1.is_zero():
                            continue
                        for r2, e2 in enumerate(wcol):
                            if not e2.is_zero():
                                key = (r1, r2)
                                out[key] = out.get(key, z) + c * cr * e1 * e2
            expect = {(i, vv): ctx.one()}
            for key in set(out) | set(expect):
                if not (out.get(key, z) - expect.get(key, z)).is_zero():
                    bad = {"basis": i, "module_index": vv}
                    break
            if bad:
                break
    rep.add(f"{prefix}/double-braiding-identity", bad is None, bad, (time.perf_counter() - t0) * 1e3)
    return rep


def invariant_coinvariant_dim(hopf: FinDimHopf, action: list[Matrix], coaction: Matrix) -> int:
    """dim of { a : h.a = eps(h) a for all h, and delta(a) = 1 x a }."""
    ctx = hopf.ctx
    n = action[0].rows
    eps = hopf.coalgebra.counit
    unit = hopf.algebra.unit
    rows: list[list[Scalar]] = []
    for h in range(hopf.dim):
        m = action[h]
        for r in range(n):
            row = [m[r, c] for c in range(n)]
            row[r] = row[r] - eps[h]
            rows.append(row)
    for y in range(hopf.dim):
        for r in range(n):
            row = [coaction[(y * n + r), c] for c in range(n)]
            row[r] = row[r] - unit[y]
            rows.append(row)
    return kernel_basis(Matrix.from_rows(ctx, rows)).dim


def connectedness(a: AdjointAlgebra) -> int:
    return invariant_coinvariant_dim(a.problem.hopf, a.action, a.coaction)


def _unitv(ctx: FieldContext, n: int, i: int) -> list[Scalar]:
    v = [ctx.zero()] * n
    v[i] = ctx.one()
    return v


def _eqv(u: list[Scalar], v: list[Scalar]) -> bool:
    return all((a - b).is_zero() for a, b in zip(u, v))


# ---------------------------------------------------------------------------
# transport onto the tuple picture for K(d, xi)


def phi_structure_transport(a: AdjointAlgebra, report: VerificationReport | None = None,
                            prefix: str = "transport") -> VerificationReport:
    """Transport the solved structure through phi(alpha) =
    (alpha(g^i, 1))_{i<m} onto the m-tuple picture over K(d, xi) and
    check the componentwise product, the shift action of g, both index
    conventions for the action of x, and the conjugated coaction."""
    rep = report if report is not None else VerificationReport()
    p = a.problem
    K = p.comod_alg
    if not isinstance(K, ComoduleAlgebraK):
        raise ValueError("structure transport needs a K(d, xi) comodule algebra")
    if p.conditions != {"ad1", "ad3"}:
        raise ValueError("structure transport is defined for the module+right-mult variant")
    ctx = a.ctx
    n, d, m = K.n, K.d, K.m
    NK = K.dim
    kalg = K.algebra
    z = ctx.zero()

    ok = a.dim == n * n
    rep.add(f"{prefix}/dimension", ok, None if ok else {"dim": a.dim, "expected": n * n})

    def g_index(j: int) -> list[Scalar]:
        return [p.t_embed[r, j % n] for r in range(p.hopf.dim)]

    def bar_at(i: int, hvec: list[Scalar]) -> list[Scalar]:
        out = [z] * NK
        for y, cy in enumerate(hvec):
            if cy.is_zero():
                continue
            v = a.bar(i, y)
            for r in range(NK):
                if not v[r].is_zero():
                    out[r] = out[r] + cy * v[r]
        return out

    tvals = [[bar_at(s, g_index(j)) for j in range(n + 1)] for s in range(a.dim)]

    phi_rows = []
    for i in range(m):
        for pp in range(NK):
            phi_rows.append([tvals[s][i][pp] for s in range(a.dim)])
    phi = Matrix.from_rows(ctx, phi_rows)
    ok = kernel_basis(phi).dim == 0 and phi.rows == a.dim
    rep.add(f"{prefix}/phi-bijective", ok,
            None if ok else {"rows": phi.rows, "dim": a.dim,
                             "kernel": kernel_basis(phi).dim})

    hvec = kalg.basis_vec(K.index(1, 0)) if d > 1 else kalg.unit
    h_pows = [kalg.unit]
    for _ in range(d):
        h_pows.append(kalg.mult_vec(h_pows[-1], hvec))

    def conj(qt: int, vec: list[Scalar]) -> list[Scalar]:
        qt = qt % d
        return kalg.mult_vec(kalg.mult_vec(h_pows[qt], vec), h_pows[(d - qt) % d])

    def transported(s: int, act: Matrix, comp: int) -> list[Scalar]:
        coords = act.col(s)
        out = [z] * NK
        for l, cl in enumerate(coords):
            if cl.is_zero():
                continue
            v = tvals[l][comp]
            for r in range(NK):
                if not v[r].is_zero():
                    out[r] = out[r] + cl * v[r]
        return out

    def embedded_action(hvec_ht: list[Scalar]) -> Matrix:
        mat = Matrix.zero(ctx, a.dim, a.dim)
        for y, cy in enumerate(hvec_ht):
            if cy.is_zero():
                continue
            for idx, e in enumerate(a.action[y].entries):
                if not e.is_zero():
                    mat.entries[idx] = mat.entries[idx] + cy * e
        return mat

    t0 = time.perf_counter()
    bad = None
    for r in range(1, m):
        act = embedded_action(g_index(r))
        for s in range(a.dim):
            for i in range(m - r):
                if not _eqv(transported(s, act, i), tvals[s][i + r]):
                    bad = {"shift": r, "component": i, "basis": s}
                    break
            if bad:
                break
        if bad:
            break
    rep.add(f"{prefix}/g-shift", bad is None, bad, (time.perf_counter() - t0) * 1e3)

    t0 = time.perf_counter()
    bad = None
    for shift in range(n):
        act = embedded_action(g_index(shift))
        for s in range(a.dim):
            for i in range(m):
                qt, j = divmod(i + shift, m)
                expect = conj(qt, tvals[s][j])
                if not _eqv(transported(s, act, i), expect):
                    bad = {"shift": shift, "component": i, "basis": s}
                    break
            if bad:
                break
        if bad:
            break
    rep.add(f"{prefix}/g-conjugation-rule", bad is None, bad, (time.perf_counter() - t0) * 1e3)

    if n > 1:
        wvec = kalg.basis_vec(K.index(0, 1))
        x_ht = p.hopf.algebra.basis_vec(n)  # x # 1 sits at index 1*n + 0
        act_x = embedded_action(x_ht)
        t0 = time.perf_counter()
        bad_shifted = None
        bad_unshifted = None
        for s in range(a.dim):
            for i in range(m):
                qi = zeta_power(ctx, i)
                got = transported(s, act_x, i)
                w_ti = kalg.mult_vec(wvec, tvals[s][i])
                ti1_w = kalg.mult_vec(tvals[s][i + 1], wvec)
                ti_w = kalg.mult_vec(tvals[s][i], wvec)
                shifted = [qi * (u - v) for u, v in zip(w_ti, ti1_w)]
                unshifted = [qi * (u - v) for u, v in zip(w_ti, ti_w)]
                if bad_shifted is None and not _eqv(got, shifted):
                    bad_shifted = {"basis": s, "component": i}
                if bad_unshifted is None and not _eqv(got, unshifted):
                    bad_unshifted = {"basis": s, "component": i}
            if bad_shifted and bad_unshifted:
                break
        rep.add(f"{prefix}/x-action", bad_shifted is None, bad_shifted,
                (time.perf_counter() - t0) * 1e3)
        rep.add(f"{prefix}/x-action-index-convention", True,
                {"shifted_holds": bad_shifted is None,
                 "unshifted_holds": bad_unshifted is None})

        if m >= 3:
            t0 = time.perf_counter()
            bad = None
            for aexp in range(2, m):
                xa = embedded_action(p.hopf.algebra.basis_vec(aexp * n))
                xa1 = embedded_action(p.hopf.algebra.basis_vec((aexp - 1) * n))
                for s in range(a.dim):
                    lhs = transported(s, xa, 0)
                    prev0 = transported(s, xa1, 0)
                    prev1 = transported(s, xa1, 1)
                    rhs = [u - v for u, v in zip(kalg.mult_vec(wvec, prev0),
                                                 kalg.mult_vec(prev1, wvec))]
                    if not _eqv(lhs, rhs):
                        bad = {"power": aexp, "basis": s}
                        break
                if bad:
                    break
            rep.add(f"{prefix}/x-power-extension", bad is None, bad,
                    (time.perf_counter() - t0) * 1e3)
        else:
            rep.add_skipped(f"{prefix}/x-power-extension", "no components with 2 <= a <= m-1")
    else:
        rep.add_skipped(f"{prefix}/x-action", "no x generator at n = 1")
        rep.add_skipped(f"{prefix}/x-action-index-convention", "no x generator at n = 1")
        rep.add_skipped(f"{prefix}/x-power-extension", "no x generator at n = 1")

    t0 = time.perf_counter()
    bad = None
    com = a.comodule_rep()
    for s in range(a.dim):
        lhs: dict[tuple[int, int, int], Scalar] = {}
        for y, l, c in com.coaction_terms(s):
            for i in range(m):
                v = tvals[l][i]
                for pp in range(NK):
                    if not v[pp].is_zero():
                        key = (y, i, pp)
                        lhs[key] = lhs.get(key, z) + c * v[pp]
        rhs: dict[tuple[int, int, int], Scalar] = {}
        for i in range(m):
            gi = g_index(i)
            gmi = g_index((n - i) % n)
            lam = K.coaction_vec(tvals[s][i])
            for (y, pp), c in lam.items():
                yv = p.hopf.algebra.mult_vec(p.hopf.algebra.mult_vec(gmi, p.hopf.algebra.basis_vec(y)), gi)
                for yy, cy in enumerate(yv):
                    if not cy.is_zero():
                        key = (yy, i, pp)
                        rhs[key] = rhs.get(key, z) + c * cy
        for key in set(lhs) | set(rhs):
            if not (lhs.get(key, z) - rhs.get(key, z)).is_zero():
                bad = {"basis": s, "key": list(key)}
                break
        if bad:
            break
    rep.add(f"{prefix}/coaction-conjugated", bad is None, bad, (time.perf_counter() - t0) * 1e3)

    t0 = time.perf_counter()
    bad = None
    for s in range(a.dim):
        for t in range(a.dim):
            coords = a.product[s][t]
            for i in range(m):
                lhs = [z] * NK
                for l, cl in enumerate(coords):
                    if cl.is_zero():
                        continue
                    v = tvals[l][i]
                    for r in range(NK):
                        if not v[r].is_zero():
                            lhs[r] = lhs[r] + cl * v[r]
                rhs = kalg.mult_vec(tvals[s][i], tvals[t][i])
                if not _eqv(lhs, rhs):
                    bad = {"pair": [s, t], "component": i}
                    break
            if bad:
                break
        if bad:
            break
    rep.add(f"{prefix}/componentwise-product", bad is None, bad, (time.perf_counter() - t0) * 1e3)
    return rep


# ---------------------------------------------------------------------------
# isotypic cross-check


def _grading_twist(model: TaftModel, K: ComoduleAlgebra) -> Matrix:
    """Operator multiplying the degree-t component of the projected
    grading by q^t."""
    ctx = model.ctx
    NK = K.dim
    tw = Matrix.zero(ctx, NK, NK)
    for k in range(NK):
        for y, k0, c in K.coaction_terms(k):
            for t, cpi in ((t, model.pi[t, y]) for t in range(model.n)):
                if cpi.is_zero():
                    continue
                tw.entries[k0 * NK + k] = tw.entries[k0 * NK + k] + c * cpi * zeta_power(ctx, t)
    return tw


def _isotypic_zero_dim(ctx: FieldContext, twist: Matrix, n: int) -> int:
    """Rank of the averaging projector (1/n) sum twist^j."""
    dim = twist.rows
    acc = Matrix.identity(ctx, dim)
    power = Matrix.identity(ctx, dim)
    for _ in range(n - 1):
        power = power * twist
        acc = acc + power
    inv_n = Fraction(1, n)
    proj = Matrix(ctx, dim, dim, [e.scale(inv_n) for e in acc.entries])
    if (proj * proj) != proj:
        raise ArithmeticError("averaging operator is not idempotent")
    from .linalg import rank
    return rank(proj)


def chi0_crosscheck(n: int, d: int, xi, report: VerificationReport | None = None,
                    prefix: str = "chi0") -> VerificationReport:
    """Compare the dimension of the fully-constrained solution space
    with the trivial-isotypic subspaces of K(d, xi) and of the m-tuple
    algebra built on it, computed by an independent averaging projector."""
    rep = report if report is not None else VerificationReport()
    model = taft_model(n)
    ctx = model.ctx
    K = comodule_algebra_K(n, d, xi)
    m = n // d
    NK = K.dim

    rel = solve_adjoint(problem_for(model, K, {"ad1", "ad2", "ad3"}), with_structure=False)
    rel_dim = rel.dim

    tw_k = _grading_twist(model, K)
    dim_k0 = _isotypic_zero_dim(ctx, tw_k, n)

    # twist on the m-tuple carrier: component i is conjugated by g^i,
    # which leaves the projected degree unchanged; verified honestly by
    # building the conjugated coaction and projecting.
    z = ctx.zero()
    big = m * NK
    tw_t = Matrix.zero(ctx, big, big)
    halg = model.taft.algebra
    for i in range(m):
        gi = halg.basis_vec(model.x_index(0, i % n))
        gmi = halg.basis_vec(model.x_index(0, (n - i) % n))
        for k in range(NK):
            for y, k0, c in K.coaction_terms(k):
                yv = halg.mult_vec(halg.mult_vec(gmi, halg.basis_vec(y)), gi)
                for yy, cy in enumerate(yv):
                    if cy.is_zero():
                        continue
                    for t in range(model.n):
                        cpi = model.pi[t, yy]
                        if cpi.is_zero():
                            continue
                        row = i * NK + k0
                        col = i * NK + k
                        tw_t.entries[row * big + col] = tw_t.entries[row * big + col] + c * cy * cpi * zeta_power(ctx, t)
    dim_t0 = _isotypic_zero_dim(ctx, tw_t, n)

    rep.add(f"{prefix}/dims", True,
            {"relative_dim": rel_dim, "isotypic_K": dim_k0, "isotypic_tuple": dim_t0,
             "n": n, "d": d, "xi": str(Fraction(xi))})
    matches = []
    if rel_dim == dim_k0:
        matches.append("K(d,xi)")
    if rel_dim == dim_t0:
        matches.append("tuple-algebra")
    rep.add(f"{prefix}/dimension-isomorphism", bool(matches), {"matches": matches})
    return rep


# ---------------------------------------------------------------------------
# dinaturality sampling


def dinaturality_element_check(p: AdjointProblem, elem: AdjointElement,
                               m_mod: ModuleRep, v: ModuleRep) -> tuple[bool, dict | None]:
    """Both sides of the wedge identity for one map, evaluated on all
    basis tuples; values land in the module m collapsed along K."""
    ctx = p.ctx
    K = p.comod_alg
    kalg = K.algebra
    NH, NK = p.hopf.dim, K.dim
    dv, dm = v.dim, m_mod.dim
    z = ctx.zero()
    base = p.base

    def bar(x: int) -> list[Scalar]:
        return elem.eval_kvec(ctx, x, kalg.unit)

    s_t = base.antipode

    for h in range(NH):
        for jdual in range(dv):
            for vv in range(dv):
                for mm in range(dm):
                    lhs = [z] * dm
                    if jdual == vv:
                        lhs = m_mod.act_vec(bar(h), _unitv(ctx, dm, mm))
                    rhs = [z] * dm
                    for i2, j2, cr in p.rmatrix.inverse_terms():
                        for zz, memb in _embedded_mult(p, j2, h):
                            pvec = bar(zz)
                            if all(e.is_zero() for e in pvec):
                                continue
                            lam = K.coaction_vec(pvec)
                            for (y, p0), lc in lam.items():
                                w1 = [z] * dv
                                for t, cpi in _pi_terms(p, y):
                                    col = [v.action[t][r, vv] for r in range(dv)]
                                    for r in range(dv):
                                        if not col[r].is_zero():
                                            w1[r] = w1[r] + cpi * col[r]
                                scol = [s_t[l, i2] for l in range(base.dim)]
                                w2 = v.act_vec(scol, w1)
                                s = w2[jdual]
                                if s.is_zero():
                                    continue
                                coeff = cr * memb * lc * s
                                mv = m_mod.act_vec(kalg.basis_vec(p0), _unitv(ctx, dm, mm))
                                for r in range(dm):
                                    if not mv[r].is_zero():
                                        rhs[r] = rhs[r] + coeff * mv[r]
                    if not _eqv(lhs, rhs):
                        return False, {"tuple": [h, jdual, vv, mm]}
    return True, None


def dinaturality_sample(p: AdjointProblem, m_mod: ModuleRep, v: ModuleRep,
                        report: VerificationReport | None = None,
                        prefix: str = "dinaturality") -> VerificationReport:
    """Wedge identity for every basis solution, sampled at the module m
    over K and the base-algebra module v."""
    rep = report if report is not None else VerificationReport()
    alg = solve_adjoint(p, with_structure=False)
    t0 = time.perf_counter()
    bad = None
    for idx, e in enumerate(alg.elements):
        ok, witness = dinaturality_element_check(p, e, m_mod, v)
        if not ok:
            bad = {"basis": idx, **(witness or {})}
            break
    rep.add(f"{prefix}/wedge-identity", bad is None, bad, (time.perf_counter() - t0) * 1e3)
    return rep
