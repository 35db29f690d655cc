"""The concrete models: V inside 3x3 symmetric matrices, the sl2 triple
acting on it, the invariant subspace W of wedge^2 V, and the two nilpotent
algebras G (2-step) and N (3-step) built on V + wedge^2(V)/W.

Basis conventions, fixed once:
  * V has basis s1..s5 (3x3 symmetric matrices with m22 = 2*m13);
  * wedge^2 V uses lexicographic pairs of the s-basis;
  * V' = wedge^2(V)/W uses the class representatives
    p12, p13, p14, p15, p25, p35, p45 in that order (the identifications
    p14 = p23, p15 = p24, p25 = p34 hold in the quotient);
  * G and N have ordered basis (s1..s5, p12, p13, p14, p15, p25, p35, p45).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .liecore import LieAlgebra, check_jacobi, make_lie_algebra
from .qlinalg import Matrix, QuotientMap, Subspace, qf, unit_vector, vector
from .wedgerep import (
    GeneratorSet,
    NotInvariantError,
    induced_algebra_action,
    invariant_closure,
    quotient_action,
    wedge_vector,
)

_ZERO = Fraction(0)
_ONE = Fraction(1)

V_LABELS = ("s1", "s2", "s3", "s4", "s5")
VPRIME_LABELS = ("p12", "p13", "p14", "p15", "p25", "p35", "p45")
ALGEBRA_LABELS = V_LABELS + VPRIME_LABELS

#: default central target of the 3-step bracket hook: p13 + p45 in V' coords.
DEFAULT_P = (_ZERO, _ONE, _ZERO, _ZERO, _ZERO, _ZERO, _ONE)

CARTAN = Matrix.from_rows([(2, 0, 0), (0, 0, 0), (0, 0, -2)])
RAISING = Matrix.from_rows([(0, 1, 0), (0, 0, 1), (0, 0, 0)])
LOWERING = Matrix.from_rows([(0, 0, 0), (1, 0, 0), (0, 1, 0)])


def v_basis() -> tuple[Matrix, ...]:
    """The five symmetric 3x3 matrices spanning V."""
    s1 = Matrix.from_rows([(2, 0, 0), (0, 0, 0), (0, 0, 0)])
    s2 = Matrix.from_rows([(0, 1, 0), (1, 0, 0), (0, 0, 0)])
    s3 = Matrix.from_rows([(0, 0, 1), (0, 2, 0), (1, 0, 0)])
    s4 = Matrix.from_rows([(0, 0, 0), (0, 0, 1), (0, 1, 0)])
    s5 = Matrix.from_rows([(0, 0, 0), (0, 0, 0), (0, 0, 2)])
    return (s1, s2, s3, s4, s5)


def in_V(m: Matrix) -> bool:
    """Membership in V: symmetric with m22 = 2*m13."""
    if m.rows != 3 or m.cols != 3:
        return False
    return (m == m.transpose()) and m[1, 1] == 2 * m[0, 2]


def v_coordinates(m: Matrix) -> tuple[Fraction, ...]:
    """Coordinates of a member of V in the s-basis."""
    if not in_V(m):
        raise ValueError("matrix does not lie in V")
    return (m[0, 0] / 2, m[0, 1], m[0, 2], m[1, 2], m[2, 2] / 2)


def algebra_action_on_V(xi: Matrix) -> Matrix:
    """The 5x5 matrix of s -> xi s + s xi^t on V, in the s-basis.

    Raises NotInvariantError naming the first basis matrix whose image
    leaves V: preserving V is itself one of the certified claims.
    """
    if xi.rows != 3 or xi.cols != 3:
        raise ValueError("expected a 3x3 matrix")
    xit = xi.transpose()
    cols = []
    for idx, s in enumerate(v_basis()):
        image = xi * s + s * xit
        if not in_V(image):
            raise NotInvariantError(
                f"xi s + s xi^t leaves V on basis matrix s{idx + 1}", s)
        cols.append(v_coordinates(image))
    return Matrix(5, 5, (cols[j][i] for i in range(5) for j in range(5)))


@lru_cache(maxsize=1)
def sl2_actions_on_V() -> GeneratorSet:
    """Actions of the sl2 triple (h, e, f) on V, the generators used everywhere."""
    return GeneratorSet(("h", "e", "f"),
                        (algebra_action_on_V(CARTAN),
                         algebra_action_on_V(RAISING),
                         algebra_action_on_V(LOWERING)))


@dataclass(frozen=True)
class SL2Element:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, qf(getattr(self, name)))
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError("determinant must be exactly 1")

    @classmethod
    def identity(cls) -> "SL2Element":
        return cls(1, 0, 0, 1)

    @classmethod
    def hyperbolic(cls, t) -> "SL2Element":
        t = qf(t)
        if t == 0:
            raise ValueError("hyperbolic parameter must be nonzero")
        return cls(t, 0, 0, 1 / t)

    @classmethod
    def upper(cls, s) -> "SL2Element":
        return cls(1, qf(s), 0, 1)

    @classmethod
    def lower(cls, s) -> "SL2Element":
        return cls(1, 0, qf(s), 1)

    @classmethod
    def elliptic(cls, num: int, den: int) -> "SL2Element":
        """Rational rotation from the Pythagorean pair of t = num/den:
        (a, b) = ((den^2 - num^2)/(den^2 + num^2), 2 num den/(den^2 + num^2))."""
        num, den = int(num), int(den)
        if den == 0:
            raise ValueError("denominator must be nonzero")
        q = num * num + den * den
        a = Fraction(den * den - num * num, q)
        b = Fraction(2 * num * den, q)
        return cls(a, b, -b, a)

    def __mul__(self, other: "SL2Element") -> "SL2Element":
        return SL2Element(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d)

    def inverse(self) -> "SL2Element":
        return SL2Element(self.d, -self.b, -self.c, self.a)

    def conjugate_by(self, g: "SL2Element") -> "SL2Element":
        return g * self * g.inverse()


def sym2_embed(g: SL2Element) -> Matrix:
    """Symmetric-square homomorphism SL(2) -> SL(3).

    Written on the basis (2*E11, E12+E21, E22) of symmetric 2x2 matrices,
    scaled so that the derivative carries the sl2 triple (e, h, f) to
    (RAISING, CARTAN, 2*LOWERING) exactly; then sym2_embed of the unit
    upper shear equals exp(RAISING) on the nose and all exp-compatibility
    checks are exact.
    """
    a, b, c, d = g.a, g.b, g.c, g.d
    return Matrix.from_rows([
        (a * a, a * b, b * b / 2),
        (2 * a * c, a * d + b * c, b * d),
        (2 * c * c, 2 * c * d, d * d),
    ])


def group_action_on_V(h: Matrix) -> Matrix:
    """The 5x5 matrix of s -> h s h^t on V in the s-basis.

    Raises NotInvariantError with the offending basis matrix if h does not
    preserve V (generic elements of SL(3) do not).
    """
    if h.rows != 3 or h.cols != 3:
        raise ValueError("expected a 3x3 matrix")
    ht = h.transpose()
    cols = []
    for idx, s in enumerate(v_basis()):
        image = h * s * ht
        if not in_V(image):
            raise NotInvariantError(
                f"h s h^t leaves V on basis matrix s{idx + 1}", s)
        cols.append(v_coordinates(image))
    return Matrix(5, 5, (cols[j][i] for i in range(5) for j in range(5)))


def build_W() -> Subspace:
    """Span of s1^s4 - s2^s3, s1^s5 - s2^s4, s2^s5 - s3^s4 in wedge^2 V."""
    e = [unit_vector(5, i) for i in range(5)]

    def w(i, j, k, l):
        return tuple(x - y for x, y in zip(wedge_vector(e[i], e[j]),
                                           wedge_vector(e[k], e[l])))

    return Subspace.span(10, [w(0, 3, 1, 2), w(0, 4, 1, 3), w(1, 4, 2, 3)])


@lru_cache(maxsize=1)
def induced_sl2_on_wedge() -> GeneratorSet:
    gens = sl2_actions_on_V()
    return GeneratorSet(gens.labels,
                        tuple(induced_algebra_action(m) for m in gens))


def build_Wprime() -> Subspace:
    """Closure of s1^s2 under the induced algebra generators (dimension 7)."""
    e = [unit_vector(5, i) for i in range(5)]
    seed = wedge_vector(e[0], e[1])
    return invariant_closure([seed], induced_sl2_on_wedge())


@lru_cache(maxsize=1)
def vprime_quotient() -> QuotientMap:
    """Quotient map wedge^2 V -> V' in the p-class coordinates."""
    return QuotientMap(build_W())


@lru_cache(maxsize=1)
def sl2_actions_on_Vprime() -> GeneratorSet:
    """Factors of the induced algebra actions on V' (7x7 matrices)."""
    w = build_W()
    gens = induced_sl2_on_wedge()
    return GeneratorSet(gens.labels,
                        tuple(quotient_action(m, w) for m in gens))


def vprime_to_algebra(v: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Embed V'-coordinates into the 12-dim algebra coordinates."""
    if len(v) != 7:
        raise ValueError("expected 7 coordinates")
    return tuple([_ZERO] * 5) + tuple(qf(x) for x in v)


def subspace_in_algebra(s: Subspace) -> Subspace:
    """Embed a subspace of V' into the algebra coordinate space."""
    return Subspace.span(12, [vprime_to_algebra(b) for b in s.basis_vectors()])


def L_subspace() -> Subspace:
    """L = span(p13, p14, p15, p25, p35, p45) inside V'."""
    return Subspace.span(7, [unit_vector(7, k) for k in range(1, 7)])


def Lprime_subspace() -> Subspace:
    """L' = span(p14, p15, p25, p35, p45) inside V'."""
    return Subspace.span(7, [unit_vector(7, k) for k in range(2, 7)])


def _two_step_brackets() -> dict[tuple[int, int], tuple[Fraction, ...]]:
    qmap = vprime_quotient()
    e = [unit_vector(5, i) for i in range(5)]
    brackets = {}
    for i in range(5):
        for j in range(i + 1, 5):
            cls = qmap.project(wedge_vector(e[i], e[j]))
            brackets[(i, j)] = vprime_to_algebra(cls)
    return brackets


def build_two_step() -> LieAlgebra:
    """The 12-dim 2-step algebra G: [u, v] = u^v mod W, V' central."""
    L = make_lie_algebra(12, _two_step_brackets(), ALGEBRA_LABELS)
    if check_jacobi(L):
        raise AssertionError("2-step model failed the Jacobi identity")
    return L


def validate_p(p: Sequence) -> tuple[Fraction, ...]:
    """A usable hook target: 7 rationals, nonzero, lying in L (so the p12
    coordinate vanishes, which is what makes it central and keeps Jacobi)."""
    vec = vector(p)
    if len(vec) != 7:
        raise ValueError("p needs 7 coordinates in the V' basis "
                         + "(" + ", ".join(VPRIME_LABELS) + ")")
    if all(x == 0 for x in vec):
        raise ValueError("p must be nonzero")
    if vec[0] != 0:
        raise ValueError("p must lie in L: its p12 coordinate must be zero "
                         "(otherwise p is not central and the bracket is not Lie)")
    return vec


def build_three_step(p: Sequence | None = None) -> LieAlgebra:
    """The 12-dim 3-step algebra N: the 2-step brackets plus [s1, p12] = p."""
    pvec = validate_p(DEFAULT_P if p is None else p)
    brackets = _two_step_brackets()
    brackets[(0, 5)] = vprime_to_algebra(pvec)
    L = make_lie_algebra(12, brackets, ALGEBRA_LABELS)
    violations = check_jacobi(L)
    if violations:
        raise AssertionError(
            f"3-step model failed the Jacobi identity on {violations}")
    return L


@dataclass(frozen=True)
class ModelData:
    """Everything the verification suite consumes, built once and shared."""

    basis: tuple[Matrix, ...]
    cartan_action: Matrix
    raising_action: Matrix
    lowering_action: Matrix
    W: Subspace
    Wprime: Subspace
    qmap: QuotientMap
    vprime_labels: tuple[str, ...]
    vprime_actions: GeneratorSet
    L: Subspace
    Lprime: Subspace
    p: tuple[Fraction, ...]
    G: LieAlgebra
    N: LieAlgebra

    @property
    def actions_on_V(self) -> GeneratorSet:
        return GeneratorSet(("h", "e", "f"),
                            (self.cartan_action, self.raising_action,
                             self.lowering_action))


@lru_cache(maxsize=4)
def _model_data_cached(p: tuple[Fraction, ...]) -> ModelData:
    gens = sl2_actions_on_V()
    return ModelData(
        basis=v_basis(),
        cartan_action=gens.matrices[0],
        raising_action=gens.matrices[1],
        lowering_action=gens.matrices[2],
        W=build_W(),
        Wprime=build_Wprime(),
        qmap=vprime_quotient(),
        vprime_labels=VPRIME_LABELS,
        vprime_actions=sl2_actions_on_Vprime(),
        L=L_subspace(),
        Lprime=Lprime_subspace(),
        p=p,
        G=build_two_step(),
        N=build_three_step(p),
    )


def model_data(p: Sequence | None = None) -> ModelData:
    pvec = validate_p(DEFAULT_P if p is None else p)
    return _model_data_cached(pvec)
