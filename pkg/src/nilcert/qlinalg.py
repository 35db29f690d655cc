"""Exact linear algebra over the rationals.

Scalars are ``fractions.Fraction`` throughout; nothing in this package ever
touches floating point.  Matrices act on column vectors, so the composite map
"apply h, then g" is the product ``g * h``.  Subspaces are stored as reduced
row-echelon bases with the zero rows dropped, which makes subspace equality a
plain data comparison.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Q = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def qf(value) -> Fraction:
    """Coerce ints, strings like ``"3/5"``, and Fractions to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not allowed; use Fraction or a string")
    return Fraction(value)


def vector(values: Iterable) -> tuple[Fraction, ...]:
    return tuple(qf(v) for v in values)


def unit_vector(n: int, i: int) -> tuple[Fraction, ...]:
    return tuple(_ONE if k == i else _ZERO for k in range(n))


def vec_add(u: Sequence[Fraction], v: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_scale(c: Fraction, v: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(c * a for a in v)


def is_zero_vector(v: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in v)


class Matrix:
    """Dense rational matrix, immutable once built."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        self.rows = rows
        self.cols = cols
        self.entries = tuple(qf(e) for e in entries)
        if len(self.entries) != rows * cols:
            raise ValueError(
                f"expected {rows * cols} entries, got {len(self.entries)}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        flat = [e for row in rows for e in row]
        return cls(nrows, ncols, flat)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, (_ONE if i == j else _ZERO
                          for i in range(n) for j in range(n)))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, itertools.repeat(_ZERO, rows * cols))

    @classmethod
    def diagonal(cls, values: Sequence) -> "Matrix":
        vals = [qf(v) for v in values]
        n = len(vals)
        return cls(n, n, (vals[i] if i == j else _ZERO
                          for i in range(n) for j in range(n)))

    @classmethod
    def from_flat(cls, n: int, flat: Sequence) -> "Matrix":
        """Rebuild an n-by-n matrix from a row-major flattening."""
        return cls(n, n, flat)

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return self.entries[j::self.cols]

    def row_list(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other) -> bool:
        return (isinstance(other, Matrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols,
                      (a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols,
                      (a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, (-a for a in self.entries))

    def scale(self, c) -> "Matrix":
        c = qf(c)
        return Matrix(self.rows, self.cols, (c * a for a in self.entries))

    def __mul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(
                f"shape mismatch: {self.rows}x{self.cols} * {other.rows}x{other.cols}")
        n, m, p = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = [_ZERO] * (n * p)
        for i in range(n):
            arow = a[i * m:(i + 1) * m]
            orow = i * p
            for k in range(m):
                aik = arow[k]
                if aik:
                    brow = b[k * p:(k + 1) * p]
                    for j in range(p):
                        if brow[j]:
                            out[orow + j] += aik * brow[j]
        return Matrix(n, p, out)

    def __pow__(self, k: int) -> "Matrix":
        if not self.is_square:
            raise ValueError("power of a non-square matrix")
        if k < 0:
            raise ValueError("negative powers not supported")
        result = Matrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def apply(self, v: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Matrix-vector product (column vector convention)."""
        if len(v) != self.cols:
            raise ValueError(f"vector length {len(v)} != cols {self.cols}")
        e = self.entries
        out = []
        for i in range(self.rows):
            s = _ZERO
            base = i * self.cols
            for j, vj in enumerate(v):
                if vj:
                    s += e[base + j] * vj
            out.append(s)
        return tuple(out)

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      (self.entries[j * self.cols + i]
                       for i in range(self.cols) for j in range(self.rows)))

    def trace(self) -> Fraction:
        if not self.is_square:
            raise ValueError("trace of a non-square matrix")
        return sum((self[i, i] for i in range(self.rows)), _ZERO)

    def flatten(self) -> tuple[Fraction, ...]:
        """Row-major flattening; the convention used for matrix-space subspaces."""
        return self.entries

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)

    def __repr__(self) -> str:
        rows = [" ".join(str(e) for e in self.row(i)) for i in range(self.rows)]
        return "Matrix[" + "; ".join(rows) + "]"

    def _same_shape(self, other: "Matrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError(
                f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}")


def _rref_in_place(rows: list[list[Fraction]], ncols: int) -> list[int]:
    """Full reduced row echelon form; returns the pivot columns."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        prow = rows[r]
        inv = prow[c]
        if inv != 1:
            for k in range(c, ncols):
                if prow[k]:
                    prow[k] /= inv
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if f:
                ri = rows[i]
                for k in range(c, ncols):
                    if prow[k]:
                        ri[k] -= f * prow[k]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


@dataclass(frozen=True)
class RrefResult:
    matrix: Matrix
    rank: int
    pivots: tuple[int, ...]


def rref(m: Matrix) -> RrefResult:
    """Unique reduced row echelon form of m, with rank and pivot columns."""
    rows = m.row_list()
    pivots = _rref_in_place(rows, m.cols)
    return RrefResult(Matrix.from_rows(rows) if rows else m,
                      len(pivots), tuple(pivots))


def rank(m: Matrix) -> int:
    return rref(m).rank


def det(m: Matrix) -> Fraction:
    """Determinant by fraction-exact elimination with sign tracking."""
    if not m.is_square:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    rows = m.row_list()
    sign = 1
    result = _ONE
    for c in range(n):
        pivot_row = next((i for i in range(c, n) if rows[i][c]), None)
        if pivot_row is None:
            return _ZERO
        if pivot_row != c:
            rows[c], rows[pivot_row] = rows[pivot_row], rows[c]
            sign = -sign
        prow = rows[c]
        result *= prow[c]
        for i in range(c + 1, n):
            f = rows[i][c]
            if f:
                f /= prow[c]
                ri = rows[i]
                for k in range(c, n):
                    if prow[k]:
                        ri[k] -= f * prow[k]
    return result if sign > 0 else -result


class Subspace:
    """Subspace of Q^n, canonically represented.

    The basis is the RREF of any spanning set with zero rows removed, so two
    Subspace values describe the same subspace exactly when their fields are
    equal.
    """

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, basis: Matrix):
        self.ambient_dim = ambient_dim
        self.basis = basis

    @classmethod
    def span(cls, ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        rows = []
        for v in vectors:
            row = [qf(x) for x in v]
            if len(row) != ambient_dim:
                raise ValueError(
                    f"vector length {len(row)} != ambient dim {ambient_dim}")
            rows.append(row)
        pivots = _rref_in_place(rows, ambient_dim)
        basis_rows = rows[:len(pivots)]
        return cls(ambient_dim, Matrix.from_rows(basis_rows)
                   if basis_rows else Matrix.zero(0, ambient_dim))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.zero(0, ambient_dim))

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.identity(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def basis_vectors(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(self.basis.row(i) for i in range(self.basis.rows))

    def pivot_columns(self) -> tuple[int, ...]:
        cols = []
        for i in range(self.basis.rows):
            row = self.basis.row(i)
            cols.append(next(j for j, x in enumerate(row) if x))
        return tuple(cols)

    def reduce(self, v: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Canonical representative of v modulo this subspace."""
        if len(v) != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        out = list(v)
        for i, pc in enumerate(self.pivot_columns()):
            f = out[pc]
            if f:
                brow = self.basis.row(i)
                for k in range(pc, self.ambient_dim):
                    if brow[k]:
                        out[k] -= f * brow[k]
        return tuple(out)

    def contains(self, v: Sequence[Fraction]) -> bool:
        return is_zero_vector(self.reduce(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        self._same_ambient(other)
        return all(self.contains(b) for b in other.basis_vectors())

    def sum(self, other: "Subspace") -> "Subspace":
        self._same_ambient(other)
        return Subspace.span(self.ambient_dim,
                             self.basis_vectors() + other.basis_vectors())

    def intersect(self, other: "Subspace") -> "Subspace":
        """Intersection via the kernel of the stacked-bases system."""
        self._same_ambient(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient_dim)
        # columns: coefficients on self's basis, then on other's basis;
        # rows: one linear condition per ambient coordinate.
        scols, ocols = self.dim, other.dim
        rows = []
        for coord in range(self.ambient_dim):
            row = ([self.basis[i, coord] for i in range(scols)]
                   + [-other.basis[j, coord] for j in range(ocols)])
            rows.append(row)
        ker = kernel_basis(Matrix.from_rows(rows))
        vectors = []
        for coeffs in ker.basis_vectors():
            v = [_ZERO] * self.ambient_dim
            for i in range(scols):
                if coeffs[i]:
                    brow = self.basis.row(i)
                    for k in range(self.ambient_dim):
                        if brow[k]:
                            v[k] += coeffs[i] * brow[k]
            vectors.append(v)
        return Subspace.span(self.ambient_dim, vectors)

    def __add__(self, other: "Subspace") -> "Subspace":
        return self.sum(other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return self.intersect(other)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subspace)
                and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim {self.dim} of Q^{self.ambient_dim})"

    def _same_ambient(self, other: "Subspace") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise ValueError(
                f"ambient dimension mismatch: {self.ambient_dim} vs {other.ambient_dim}")


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    return a.sum(b)


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    return a.intersect(b)


def subspace_contains(a: Subspace, v: Sequence[Fraction]) -> bool:
    return a.contains(v)


def kernel_basis(m: Matrix) -> Subspace:
    """Canonical basis of {x : m x = 0}."""
    rows = m.row_list()
    pivots = _rref_in_place(rows, m.cols)
    pivot_set = set(pivots)
    free_cols = [c for c in range(m.cols) if c not in pivot_set]
    vectors = []
    for f in free_cols:
        v = [_ZERO] * m.cols
        v[f] = _ONE
        for i, pc in enumerate(pivots):
            if rows[i][f]:
                v[pc] = -rows[i][f]
        vectors.append(v)
    return Subspace.span(m.cols, vectors)


class QuotientMap:
    """Coordinates on Q^n / S.

    Representatives are the classes of the standard basis vectors at the
    non-pivot columns of S's echelon basis, in increasing column order.
    """

    __slots__ = ("subspace", "reps")

    def __init__(self, subspace: Subspace):
        self.subspace = subspace
        pivot_set = set(subspace.pivot_columns())
        self.reps = tuple(c for c in range(subspace.ambient_dim)
                          if c not in pivot_set)

    @property
    def dim(self) -> int:
        return len(self.reps)

    def project(self, v: Sequence[Fraction]) -> tuple[Fraction, ...]:
        reduced = self.subspace.reduce(v)
        return tuple(reduced[c] for c in self.reps)

    def lift(self, k: int) -> tuple[Fraction, ...]:
        """Ambient representative of the k-th quotient basis vector."""
        return unit_vector(self.subspace.ambient_dim, self.reps[k])


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

class Polynomial:
    """Univariate rational polynomial, coefficients lowest-degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = [qf(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @classmethod
    def x_power(cls, n: int, c=1) -> "Polynomial":
        return cls([0] * n + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + Polynomial(tuple(-c for c in other.coeffs))

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero or other.is_zero:
            return Polynomial.zero()
        out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return Polynomial(out)

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dcoeffs = other.coeffs
        dn = len(dcoeffs) - 1
        lead = dcoeffs[-1]
        quo = [_ZERO] * max(len(rem) - dn, 0)
        for i in range(len(rem) - dn - 1, -1, -1):
            c = rem[i + dn]
            if c:
                f = c / lead
                quo[i] = f
                for j, d in enumerate(dcoeffs):
                    if d:
                        rem[i + j] -= f * d
        return Polynomial(quo), Polynomial(rem)

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        lead = self.leading()
        if lead == 1:
            return self
        return Polynomial(tuple(c / lead for c in self.coeffs))

    def derivative(self) -> "Polynomial":
        return Polynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def eval(self, x) -> Fraction:
        x = qf(x)
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        if self.is_zero:
            return "Polynomial(0)"
        terms = [f"{c}*x^{i}" for i, c in enumerate(self.coeffs) if c]
        return "Polynomial(" + " + ".join(terms) + ")"


def char_poly(m: Matrix) -> Polynomial:
    """Monic characteristic polynomial det(xI - m).

    Uses the Faddeev-LeVerrier recurrence: every division is by an integer
    step count, which keeps intermediate values tame without any factoring.
    """
    if not m.is_square:
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = m.rows
    coeffs = [_ZERO] * (n + 1)
    coeffs[n] = _ONE
    mk = Matrix.zero(n, n)
    ident = Matrix.identity(n)
    for k in range(1, n + 1):
        mk = m * mk + ident.scale(coeffs[n - k + 1])
        coeffs[n - k] = -(m * mk).trace() / k
    return Polynomial(coeffs)


def is_nilpotent(m: Matrix) -> bool:
    """True iff the characteristic polynomial is x^n."""
    if not m.is_square:
        raise ValueError("nilpotence test on a non-square matrix")
    cp = char_poly(m)
    return cp == Polynomial.x_power(m.rows)


def is_unipotent(m: Matrix) -> bool:
    if not m.is_square:
        raise ValueError("unipotence test on a non-square matrix")
    return is_nilpotent(m - Matrix.identity(m.rows))


# ---------------------------------------------------------------------------
# rational roots and real-root counting
# ---------------------------------------------------------------------------

def _factor_smooth(n: int, limit: int = 1_000_000) -> dict[int, int]:
    """Factor n by trial division; raises if a factor above limit remains."""
    n = abs(n)
    factors: dict[int, int] = {}
    for p in itertools.chain((2, 3, 5), itertools.count(7, 2)):
        if p * p > n:
            break
        if p > limit:
            raise ValueError(f"integer {n} has no small factorization")
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    if n > 1:
        if n > limit * limit:
            raise ValueError(f"integer {n} has no small factorization")
        factors[n] = factors.get(n, 0) + 1
    return factors


def _divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in _factor_smooth(n).items():
        divs = [d * p ** k for d in divs for k in range(e + 1)]
    return divs


def rational_roots(p: Polynomial) -> dict[Fraction, int]:
    """All rational roots with multiplicities."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    roots: dict[Fraction, int] = {}
    # strip powers of x
    coeffs = list(p.coeffs)
    zero_mult = 0
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        zero_mult += 1
    if zero_mult:
        roots[_ZERO] = zero_mult
    if len(coeffs) <= 1:
        return roots
    work = Polynomial(coeffs)
    lcm = 1
    for c in work.coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in work.coeffs]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    ints = [c // g for c in ints]
    candidates: set[Fraction] = set()
    for num in _divisors(ints[0]):
        for den in _divisors(ints[-1]):
            candidates.add(Fraction(num, den))
            candidates.add(Fraction(-num, den))
    for cand in sorted(candidates):
        mult = 0
        while work.degree >= 1 and work.eval(cand) == 0:
            work, rem = divmod(work, Polynomial([-cand, 1]))
            assert rem.is_zero
            mult += 1
        if mult:
            roots[cand] = mult
    return roots


def strip_rational_roots(p: Polynomial) -> tuple[dict[Fraction, int], Polynomial]:
    """(rational roots with multiplicity, cofactor with no rational roots)."""
    roots = rational_roots(p)
    work = p
    for root, mult in roots.items():
        lin = Polynomial([-root, 1])
        for _ in range(mult):
            work, rem = divmod(work, lin)
            assert rem.is_zero
    return roots, work


def count_real_roots(p: Polynomial) -> int:
    """Number of distinct real roots, by a Sturm chain."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return 0
    # square-free part
    g = _poly_gcd(p, p.derivative())
    sqfree, rem = divmod(p, g)
    assert rem.is_zero
    chain = [sqfree, sqfree.derivative()]
    while not chain[-1].is_zero:
        _, r = divmod(chain[-2], chain[-1])
        chain.append(-r)
    chain.pop()

    def variations(at_infinity: int) -> int:
        signs = []
        for q in chain:
            if q.is_zero:
                continue
            lead = q.leading()
            s = 1 if lead > 0 else -1
            if at_infinity < 0 and q.degree % 2 == 1:
                s = -s
            signs.append(s)
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    return variations(-1) - variations(+1)


def _poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    while not b.is_zero:
        _, r = divmod(a, b)
        a, b = b, r
    return a.monic() if not a.is_zero else a
