"""Derivation algebras and automorphism certificates.

Derivations of a structure-constant algebra are the kernel of one exact
linear system (the Leibniz identity over all basis pairs, dim * C(dim, 2)
equations in dim^2 unknowns, matrices flattened row-major).  Everything else
here: stabilizer algebras, shear spaces, abelianization factors, exact
exponentials, eigenline tests, and the seeded H-element sampler.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .liecore import LieAlgebra, bracket, derived_subalgebra
from .models import SL2Element, group_action_on_V, sym2_embed
from .qlinalg import (
    Matrix,
    QuotientMap,
    Subspace,
    char_poly,
    count_real_roots,
    kernel_basis,
    rank,
    strip_rational_roots,
    vector,
)
from .wedgerep import GeneratorSet, induced_algebra_action, wedge_vector

_ZERO = Fraction(0)
_ONE = Fraction(1)


class IrrationalEigenvalueError(ValueError):
    """A real eigenvalue outside Q was detected; the caller must pick a
    different sample element."""


@dataclass(frozen=True)
class DerivationSpace:
    algebra: LieAlgebra
    space: Subspace  # subspace of the dim^2 matrix space, row-major

    @property
    def dim(self) -> int:
        return self.space.dim

    def basis_matrices(self) -> tuple[Matrix, ...]:
        n = self.algebra.dim
        return tuple(Matrix.from_flat(n, row)
                     for row in self.space.basis_vectors())

    def contains(self, m: Matrix) -> bool:
        return self.space.contains(m.flatten())


@dataclass(frozen=True)
class StabilizerAlgebra:
    n: int  # acts on Q^n
    space: Subspace  # subspace of the n^2 matrix space, row-major

    @property
    def dim(self) -> int:
        return self.space.dim

    def basis_matrices(self) -> tuple[Matrix, ...]:
        return tuple(Matrix.from_flat(self.n, row)
                     for row in self.space.basis_vectors())


def _leibniz_rows(L: LieAlgebra) -> list[list[Fraction]]:
    """One row per (pair i<j, output coordinate m) of
    D[bi,bj] - [D bi, bj] - [bi, D bj] = 0, unknowns D[r,c] at r*dim+c."""
    d = L.dim
    sc = L.sc
    rows = []
    for i, j in itertools.combinations(range(d), 2):
        cij = sc[i][j]
        for m in range(d):
            row = [_ZERO] * (d * d)
            nonzero = False
            for k in range(d):
                if cij[k]:
                    row[m * d + k] += cij[k]
                    nonzero = True
                ckj_m = sc[k][j][m]
                if ckj_m:
                    row[k * d + i] -= ckj_m
                    nonzero = True
                cik_m = sc[i][k][m]
                if cik_m:
                    row[k * d + j] -= cik_m
                    nonzero = True
            if nonzero:
                rows.append(row)
    return rows


def derivation_algebra(L: LieAlgebra) -> DerivationSpace:
    """All D with D[x,y] = [Dx,y] + [x,Dy], as one exact kernel."""
    rows = _leibniz_rows(L)
    d = L.dim
    if not rows:
        return DerivationSpace(L, Subspace.full(d * d))
    return DerivationSpace(L, kernel_basis(Matrix.from_rows(rows)))


def _membership_rows(d: int, c: Subspace) -> list[list[Fraction]]:
    """Rows forcing every column of D into the subspace c of Q^d."""
    qmap = QuotientMap(c)
    pivots = c.pivot_columns()
    rows = []
    for col in range(d):
        for t in qmap.reps:
            row = [_ZERO] * (d * d)
            row[t * d + col] += _ONE
            for r, pc in enumerate(pivots):
                val = c.basis[r, t]
                if val:
                    row[pc * d + col] -= val
            rows.append(row)
    return rows


def shear_space(L: LieAlgebra, c: Subspace) -> Subspace:
    """Derivations whose image lies inside c (for central c these are the
    shear derivations: they kill the derived subalgebra)."""
    if c.ambient_dim != L.dim:
        raise ValueError("subspace ambient dimension does not match the algebra")
    rows = _leibniz_rows(L) + _membership_rows(L.dim, c)
    if not rows:
        return Subspace.full(L.dim * L.dim)
    return kernel_basis(Matrix.from_rows(rows))


def stabilizer_algebra(w: Subspace) -> StabilizerAlgebra:
    """{x in gl(n) : the induced derivation action on wedge^2 preserves w},
    computed as one kernel over the n^2 matrix coordinates."""
    # ambient of w must be a wedge-square dimension n(n-1)/2
    amb = w.ambient_dim
    n = next((k for k in range(2, 40) if k * (k - 1) // 2 == amb), None)
    if n is None:
        raise ValueError(f"ambient dim {amb} is not of the form n(n-1)/2")
    qmap = QuotientMap(w)
    basis_images = []  # for each E_rc: the induced action applied to w's basis
    rows_out = []
    wbasis = w.basis_vectors()
    for r in range(n):
        for cc in range(n):
            e = Matrix(n, n, (_ONE if (a, b) == (r, cc) else _ZERO
                              for a in range(n) for b in range(n)))
            ind = induced_algebra_action(e)
            basis_images.append([qmap.project(ind.apply(bv)) for bv in wbasis])
    for bidx in range(len(wbasis)):
        for t in range(qmap.dim):
            rows_out.append([basis_images[var][bidx][t]
                             for var in range(n * n)])
    if not rows_out:  # w is everything: no constraint at all
        return StabilizerAlgebra(n, Subspace.full(n * n))
    return StabilizerAlgebra(n, kernel_basis(Matrix.from_rows(rows_out)))


def factor_on_abelianization(L: LieAlgebra, d_mat: Matrix) -> Matrix:
    """Factor of a derivation (or automorphism) on L / [L, L].

    Requires the derived subalgebra to be preserved; for derivations and
    automorphisms that is automatic, but it is checked and reported.
    """
    if d_mat.rows != L.dim or d_mat.cols != L.dim:
        raise ValueError("matrix size does not match the algebra")
    derived = derived_subalgebra(L)
    for bv in derived.basis_vectors():
        if not derived.contains(d_mat.apply(bv)):
            raise ValueError("derived subalgebra is not preserved")
    qmap = QuotientMap(derived)
    k = qmap.dim
    cols = [qmap.project(d_mat.apply(qmap.lift(t))) for t in range(k)]
    return Matrix(k, k, (cols[j][i] for i in range(k) for j in range(k)))


def is_automorphism(L: LieAlgebra, t_mat: Matrix) -> bool:
    """T[x,y] = [Tx,Ty] on all basis pairs, and T invertible."""
    if t_mat.rows != L.dim or t_mat.cols != L.dim:
        return False
    d = L.dim
    cols = [t_mat.col(j) for j in range(d)]
    for i, j in itertools.combinations(range(d), 2):
        lhs = t_mat.apply(L.sc[i][j])
        rhs = bracket(L, cols[i], cols[j])
        if lhs != rhs:
            return False
    return rank(t_mat) == d


def exp_nilpotent(m: Matrix) -> Matrix:
    """Exact exp of a nilpotent matrix (the finite sum of m^k / k!)."""
    if not m.is_square:
        raise ValueError("exponential of a non-square matrix")
    n = m.rows
    term = Matrix.identity(n)
    total = term
    for k in range(1, n + 1):
        term = (term * m).scale(Fraction(1, k))
        if term.is_zero():
            return total
        total = total + term
    raise ValueError("matrix is not nilpotent")


#: the six basis-index pairs whose wedges span W; the exponent relations of
#: the stabilizer certificate are l_i + l_j = 0 over exactly these pairs.
EIGEN_RELATION_PAIRS = ((1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4))


def eigen_relation_kernel() -> Subspace:
    """Kernel of the 6x5 system {l_i + l_j : (i,j) in the W pairs}.

    Zero kernel certifies that a diagonal element fixing W's spanning wedges
    pointwise has all five eigenvalues equal to 1 (taking logs turns the
    multiplicative relations into this additive system)."""
    rows = [[_ONE if (t + 1) in pair else _ZERO for t in range(5)]
            for pair in EIGEN_RELATION_PAIRS]
    return kernel_basis(Matrix.from_rows(rows))


def fixed_space(g: Matrix) -> Subspace:
    """ker(g - I)."""
    if not g.is_square:
        raise ValueError("fixed space of a non-square matrix")
    return kernel_basis(g - Matrix.identity(g.rows))


def line_fixed_by(p: Sequence[Fraction], g: Matrix) -> bool:
    """Does g map the line through p to itself?  Exact test: g p ^ p = 0."""
    pv = vector(p)
    if all(x == 0 for x in pv):
        raise ValueError("p must be nonzero")
    return all(x == 0 for x in wedge_vector(g.apply(pv), pv))


def infinitesimal_line_stabilizer(p: Sequence[Fraction],
                                  gens: GeneratorSet) -> Subspace:
    """{coefficient vectors a : (sum_i a_i g_i) p ^ p = 0}.

    The map xi -> (xi p) ^ p is linear in xi, so this is one kernel over the
    generator-coefficient space (for the shipped generators: coordinates over
    the sl2 triple (h, e, f)).  Zero kernel is the infinitesimal part of the
    "p spans a line fixed by no nontrivial element" certificate.
    """
    pv = vector(p)
    if all(x == 0 for x in pv):
        raise ValueError("p must be nonzero")
    cols = [wedge_vector(g.apply(pv), pv) for g in gens]
    nrows = len(cols[0])
    return kernel_basis(Matrix(nrows, len(cols),
                               (cols[j][i] for i in range(nrows)
                                for j in range(len(cols)))))


def max_eigenspace_dim(m: Matrix) -> int:
    """max over rational eigenvalues c of dim ker(m - c I).

    Precondition (checked): every real eigenvalue is rational.  The rational
    roots of the characteristic polynomial are found exactly; a Sturm count
    on the cofactor then certifies that no irrational real eigenvalue was
    missed, and IrrationalEigenvalueError is raised if one was.
    """
    cp = char_poly(m)
    roots, cofactor = strip_rational_roots(cp)
    if cofactor.degree >= 1 and count_real_roots(cofactor) > 0:
        raise IrrationalEigenvalueError(
            "matrix has an irrational real eigenvalue; pick a different sample")
    best = 0
    ident = Matrix.identity(m.rows)
    for lam in roots:
        dim = kernel_basis(m - ident.scale(lam)).dim
        best = max(best, dim)
    return best


# ---------------------------------------------------------------------------
# seeded sampling of H-elements and derivations
# ---------------------------------------------------------------------------
#
# Counter-based: sample k of a stream is a pure function of (seed, k), so
# parallel evaluation orders cannot change any report.

_M64 = (1 << 64) - 1


def _mix(z: int) -> int:
    z = (z + 0x9E3779B97F4A7C15) & _M64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
    return z ^ (z >> 31)


class SampleStream:
    """Deterministic value source fully determined by (seed, index)."""

    def __init__(self, seed: int, index: int):
        self._base = _mix((seed & _M64) ^ _mix(index & _M64) ^ 0xA5A5A5A5)
        self._count = 0

    def int_in(self, lo: int, hi: int) -> int:
        self._count += 1
        return lo + _mix(self._base + self._count) % (hi - lo + 1)

    def nonzero_int(self, bound: int) -> int:
        v = self.int_in(1, bound)
        return v if self.int_in(0, 1) else -v

    def fraction(self, bound: int = 3) -> Fraction:
        return Fraction(self.nonzero_int(bound), self.int_in(1, bound))


SAMPLE_KINDS = ("hyperbolic", "unipotent", "elliptic")


def sample_h_element(seed: int, index: int) -> tuple[str, SL2Element]:
    """The index-th sampled element of H, with its conjugacy kind.

    Samples 0..2 are the fixed representatives: the hyperbolic diag(2, 1/2),
    the unit upper shear, and the (3/5, 4/5) rational rotation.  Later
    samples draw a rational primitive of the cycling kind and conjugate it by
    an integer shear product, which scatters the eigenlines while keeping the
    spectrum (and hence exact eigenvalue arithmetic) tame.
    """
    if index == 0:
        return "hyperbolic", SL2Element.hyperbolic(2)
    if index == 1:
        return "unipotent", SL2Element.upper(1)
    if index == 2:
        return "elliptic", SL2Element.elliptic(1, 2)
    stream = SampleStream(seed, index)
    kind = SAMPLE_KINDS[index % 3]
    if kind == "hyperbolic":
        t = Fraction(stream.int_in(2, 5), stream.int_in(1, 3))
        while t == 1:
            t = Fraction(stream.int_in(2, 5), stream.int_in(1, 3))
        prim = SL2Element.hyperbolic(t)
    elif kind == "unipotent":
        s = stream.fraction(4)
        prim = SL2Element.upper(s) if stream.int_in(0, 1) else SL2Element.lower(s)
    else:
        num = stream.int_in(1, 4)
        den = stream.int_in(num + 1, num + 4)
        prim = SL2Element.elliptic(num, den)
    conj = (SL2Element.upper(stream.nonzero_int(3))
            * SL2Element.lower(stream.nonzero_int(3)))
    return kind, prim.conjugate_by(conj)


def sample_action_on_V(seed: int, index: int) -> tuple[str, Matrix]:
    kind, g = sample_h_element(seed, index)
    return kind, group_action_on_V(sym2_embed(g))


def sample_in_subspace(space: Subspace, seed: int, index: int,
                       bound: int = 2) -> tuple[Fraction, ...]:
    """Small-coefficient random combination of a subspace basis; nonzero
    whenever the subspace is."""
    stream = SampleStream(seed, index)
    out = [_ZERO] * space.ambient_dim
    picked_nonzero = False
    for row in space.basis_vectors():
        c = Fraction(stream.int_in(-bound, bound))
        if c:
            picked_nonzero = True
            for k, val in enumerate(row):
                if val:
                    out[k] += c * val
    if not picked_nonzero and space.dim:
        for k, val in enumerate(space.basis.row(0)):
            out[k] = val
    return tuple(out)
