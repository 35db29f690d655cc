"""Named check suites and the ``nilcert`` command line tool.

Every check states the claim it certifies, the expected value, and the
exactly computed actual value.  A check FAILS when exact computation refutes
the claim; warnings mark certificates that pass their trials but are known
to be incomplete.  Reports are emitted in registry order and the JSON form
is byte-identical across runs with the same configuration (timings are kept
out of it for that reason; the text form shows them).

Exit codes: 0 all pass (warnings allowed), 1 some check failed, 2 usage or
configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Sequence

from . import __version__
from .liecore import (
    abelian_lie_algebra,
    ad_matrix,
    bracket,
    center,
    check_jacobi,
    heisenberg3,
    lower_central_series,
    nilpotency_class,
)
from .models import (
    DEFAULT_P,
    ModelData,
    VPRIME_LABELS,
    group_action_on_V,
    model_data,
    subspace_in_algebra,
    sym2_embed,
    validate_p,
)
from .qlinalg import Matrix, Subspace, is_unipotent, qf, unit_vector
from .wedgerep import (
    commutant,
    induced_group_action,
    quotient_action,
    weight_decomposition,
)
from .autos import (
    EIGEN_RELATION_PAIRS,
    IrrationalEigenvalueError,
    derivation_algebra,
    eigen_relation_kernel,
    exp_nilpotent,
    factor_on_abelianization,
    fixed_space,
    infinitesimal_line_stabilizer,
    line_fixed_by,
    max_eigenspace_dim,
    sample_action_on_V,
    sample_in_subspace,
    shear_space,
    stabilizer_algebra,
)

PASS = "pass"
FAIL = "fail"
WARN = "warn"


@dataclass(frozen=True)
class Config:
    p: tuple[Fraction, ...] = DEFAULT_P
    seed: int = 0
    trials: int = 100

    def as_dict(self) -> dict:
        return {"p": [str(x) for x in self.p],
                "seed": self.seed, "trials": self.trials}


@dataclass(frozen=True)
class CheckResult:
    id: str
    status: str
    expected: str
    actual: str
    claim: str
    duration_ms: int = 0

    def as_dict(self) -> dict:
        # durations are measurements, not results; leaving them out keeps
        # reports byte-identical across runs of the same configuration
        return {"id": self.id, "status": self.status,
                "expected": self.expected, "actual": self.actual,
                "claim": self.claim}


@dataclass(frozen=True)
class Report:
    version: str
    config: Config
    results: tuple[CheckResult, ...]

    @property
    def counts(self) -> dict[str, int]:
        c = {PASS: 0, FAIL: 0, WARN: 0}
        for r in self.results:
            c[r.status] += 1
        c["total"] = len(self.results)
        return c

    def as_dict(self) -> dict:
        return {"version": self.version,
                "config": self.config.as_dict(),
                "checks": [r.as_dict() for r in self.results],
                "summary": self.counts}

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Report":
        data = json.loads(text)
        cfg = Config(p=tuple(qf(x) for x in data["config"]["p"]),
                     seed=int(data["config"]["seed"]),
                     trials=int(data["config"]["trials"]))
        results = tuple(CheckResult(id=c["id"], status=c["status"],
                                    expected=c["expected"], actual=c["actual"],
                                    claim=c["claim"])
                        for c in data["checks"])
        return cls(version=data["version"], config=cfg, results=results)

    def to_text(self) -> str:
        lines = [f"nilcert {self.version}  "
                 f"(p = {', '.join(str(x) for x in self.config.p)}; "
                 f"seed = {self.config.seed}; trials = {self.config.trials})"]
        for r in self.results:
            tag = r.status.upper().ljust(4)
            lines.append(f"[{tag}] {r.id}: expected {r.expected}; "
                         f"got {r.actual}  ({r.duration_ms} ms)")
            if r.status != PASS:
                lines.append(f"       claim: {r.claim}")
        c = self.counts
        lines.append(f"{c['total']} checks: {c[PASS]} passed, "
                     f"{c[FAIL]} failed, {c[WARN]} warnings")
        return "\n".join(lines) + "\n"


class Context:
    """Shared, lazily computed artifacts for one configuration."""

    def __init__(self, config: Config):
        self.config = config

    @cached_property
    def data(self) -> ModelData:
        return model_data(self.config.p)

    @cached_property
    def der_G(self):
        return derivation_algebra(self.data.G)

    @cached_property
    def der_N(self):
        return derivation_algebra(self.data.N)

    @cached_property
    def stab_W(self):
        return stabilizer_algebra(self.data.W)

    @cached_property
    def stab_Wprime(self):
        return stabilizer_algebra(self.data.Wprime)

    @cached_property
    def induced_on_wedge(self):
        from .models import induced_sl2_on_wedge
        return induced_sl2_on_wedge()

    def action_on_Vprime(self, g5: Matrix) -> Matrix:
        return quotient_action(induced_group_action(g5), self.data.W)


@dataclass(frozen=True)
class Check:
    id: str
    description: str
    claim: str
    fn: Callable[[Context], tuple[str, str, str]]


_REGISTRY: list[Check] = []


def _check(id: str, description: str, claim: str):
    def wrap(fn):
        _REGISTRY.append(Check(id, description, claim, fn))
        return fn
    return wrap


def _status(ok: bool) -> str:
    return PASS if ok else FAIL


def _dims(spaces) -> str:
    return "(" + ", ".join(str(s.dim) for s in spaces) + ")"


# --------------------------------------------------------------------------
# registry
# --------------------------------------------------------------------------

@_check("jacobi.G",
        "Jacobi identity for the 2-step model G",
        "the bracket [u, v] = u^v mod W with central V' is a Lie bracket")
def _jacobi_g(ctx):
    bad = check_jacobi(ctx.data.G)
    return _status(not bad), "no violating triples", f"{bad or 'none'}"


@_check("jacobi.N",
        "Jacobi identity for the 3-step model N",
        "adding [s1, p12] = p with p in the central subspace L keeps Jacobi")
def _jacobi_n(ctx):
    bad = check_jacobi(ctx.data.N)
    return _status(not bad), "no violating triples", f"{bad or 'none'}"


@_check("lcs.G-12-7-0",
        "lower central series dimensions of G",
        "G is 2-step: the series dimensions are 12, 7, 0")
def _lcs_g(ctx):
    dims = _dims(lower_central_series(ctx.data.G))
    return _status(dims == "(12, 7, 0)"), "(12, 7, 0)", dims


@_check("lcs.N-12-7-1-0",
        "lower central series dimensions of N",
        "N is 3-step: the hook target p spans the last nonzero term")
def _lcs_n(ctx):
    dims = _dims(lower_central_series(ctx.data.N))
    return _status(dims == "(12, 7, 1, 0)"), "(12, 7, 1, 0)", dims


@_check("nilclass.G-2", "nilpotency class of G", "G is 2-step nilpotent")
def _class_g(ctx):
    k = nilpotency_class(ctx.data.G)
    return _status(k == 2), "2", str(k)


@_check("nilclass.N-3", "nilpotency class of N", "N is 3-step nilpotent")
def _class_n(ctx):
    k = nilpotency_class(ctx.data.N)
    return _status(k == 3), "3", str(k)


@_check("weights.V",
        "weight decomposition of the Cartan action on V",
        "s1..s5 are weight vectors of the Cartan action with weights "
        "4, 2, 0, -2, -4, "
        "each one-dimensional")
def _weights_v(ctx):
    wd = weight_decomposition(ctx.data.cartan_action, (4, 2, 0, -2, -4))
    expected_lines = all(
        wd.spaces[qf(w)] == Subspace.span(5, [unit_vector(5, i)])
        for i, w in enumerate((4, 2, 0, -2, -4)))
    ok = wd.complete and expected_lines
    actual = ("five coordinate lines, direct sum is V" if ok else
              f"dims {[s.dim for s in wd.spaces.values()]}, complete={wd.complete}")
    return _status(ok), "five coordinate lines, direct sum is V", actual


@_check("weights.Vprime",
        "weight decomposition of the Cartan action on V'",
        "the quotient Cartan action on V' is diagonal with weights "
        "6, 4, 2, 0, -2, -4, -6")
def _weights_vprime(ctx):
    m = quotient_action(ctx.induced_on_wedge.matrices[0], ctx.data.W)
    expected = Matrix.diagonal((6, 4, 2, 0, -2, -4, -6))
    wd = weight_decomposition(m, (6, 4, 2, 0, -2, -4, -6))
    ok = m == expected and wd.complete
    return (_status(ok), "diag(6, 4, 2, 0, -2, -4, -6)",
            "exact diagonal match" if ok else repr(m))


@_check("ident.G",
        "wedge identifications inside G",
        "modulo W: [s1,s4] = [s2,s3], [s1,s5] = [s2,s4], [s2,s5] = [s3,s4]")
def _ident_g(ctx):
    G = ctx.data.G
    e = [G.basis_vector(i) for i in range(5)]
    same = [bracket(G, e[0], e[3]) == bracket(G, e[1], e[2]),
            bracket(G, e[0], e[4]) == bracket(G, e[1], e[3]),
            bracket(G, e[1], e[4]) == bracket(G, e[2], e[3])]
    return _status(all(same)), "three equalities", f"{sum(same)} of 3 hold"


@_check("w.invariant",
        "invariance of W under the induced algebra actions",
        "W (dimension 3) is carried into itself by the induced actions of "
        "the full sl2 triple")
def _w_invariant(ctx):
    w = ctx.data.W
    ok = w.dim == 3
    for m in ctx.induced_on_wedge:
        for bv in w.basis_vectors():
            ok = ok and w.contains(m.apply(bv))
    return _status(ok), "dim 3, invariant under all three", \
        "invariant" if ok else "not invariant"


@_check("irred.V-commutant-1",
        "irreducibility certificate on V",
        "the commutant of the sl2 actions on V is the "
        "scalars; with complete reducibility this certifies irreducibility")
def _commutant_v(ctx):
    d = commutant(ctx.data.actions_on_V).dim
    return _status(d == 1), "1", str(d)


@_check("wedge.commutant-2",
        "commutant on the exterior square",
        "the induced action on wedge^2 V has a 2-dimensional commutant: "
        "exactly two irreducible summands")
def _commutant_wedge(ctx):
    d = commutant(ctx.induced_on_wedge).dim
    return _status(d == 2), "2", str(d)


@_check("wedge.W-Wprime-decomp",
        "decomposition wedge^2 V = W + W'",
        "W' (the closure of s1^s2, dimension 7) meets W trivially and "
        "together they fill the 10-dimensional exterior square")
def _w_wprime(ctx):
    w, wp = ctx.data.W, ctx.data.Wprime
    inter = w.intersect(wp)
    total = w.sum(wp)
    ok = (w.dim, wp.dim, inter.dim, total.dim) == (3, 7, 0, 10)
    return (_status(ok), "dims (3, 7, 0, 10)",
            f"dims ({w.dim}, {wp.dim}, {inter.dim}, {total.dim})")


@_check("thm.stabilizer-dim4",
        "the stabilizer algebra of W",
        "matrices on V whose induced derivation action preserves W form "
        "exactly the span of the identity and the three sl2 actions, "
        "dimension 4")
def _stab_dim4(ctx):
    stab = ctx.stab_W
    d = ctx.data
    expected_span = Subspace.span(25, [
        Matrix.identity(5).flatten(), d.cartan_action.flatten(),
        d.raising_action.flatten(), d.lowering_action.flatten()])
    ok = stab.dim == 4 and stab.space == expected_span
    return (_status(ok), "dim 4, equal to the named span",
            f"dim {stab.dim}, span equality: {stab.space == expected_span}")


@_check("thm.no-open-orbit",
        "dimension gap behind the no-open-orbit conclusion",
        "the stabilizer algebra has dimension 4 < 5 = dim V, so an algebraic "
        "group with finitely many components acting through it has no open "
        "orbit on V")
def _no_open_orbit(ctx):
    d = ctx.stab_W.dim
    return _status(d == 4 and d < 5), "4 < 5", f"{d} < 5: {d < 5}"


@_check("thm.stabilizer-Wprime",
        "the stabilizer algebra of W'",
        "the stabilizer algebra of W' also has dimension 4 and coincides "
        "with the stabilizer algebra of W")
def _stab_wprime(ctx):
    sp = ctx.stab_Wprime
    ok = sp.dim == 4 and ctx.stab_W.space.contains_subspace(sp.space)
    return (_status(ok), "dim 4, contained in stab(W)",
            f"dim {sp.dim}, contained: {ctx.stab_W.space.contains_subspace(sp.space)}")


@_check("thm.eigen-relations",
        "eigenvalue relation system",
        "the six pairs spanning W give exponent relations l_i + l_j = 0 "
        "whose only solution is zero, forcing all five eigenvalues to 1")
def _eigen_relations(ctx):
    ker = eigen_relation_kernel()
    pairs_in_w = set()
    for bv in ctx.data.W.basis_vectors():
        from .wedgerep import WedgeBasis
        wb = WedgeBasis(5)
        for idx, val in enumerate(bv):
            if val:
                i, j = wb.pairs[idx]
                pairs_in_w.add((i + 1, j + 1))
    ok = ker.dim == 0 and pairs_in_w == set(EIGEN_RELATION_PAIRS)
    return (_status(ok), "kernel 0, pairs match W's support",
            f"kernel {ker.dim}, pairs match: {pairs_in_w == set(EIGEN_RELATION_PAIRS)}")


@_check("der.G-dim-39",
        "derivation algebra dimension of G",
        "the Leibniz kernel for G has dimension 39 = 4 + 35")
def _der_g_dim(ctx):
    d = ctx.der_G.dim
    return _status(d == 39), "39", str(d)


@_check("der.G-decomposition",
        "derivation decomposition of G",
        "der(G) splits as lifts of the stabilizer algebra (acting on V and, "
        "through the quotient of the induced action, on V') plus all of "
        "Hom(V, V'): 39 = 4 + 35, an exact subspace equality")
def _der_g_decomp(ctx):
    d = ctx.data
    lift_rows = []
    for x in ctx.stab_W.basis_matrices():
        from .wedgerep import induced_algebra_action
        xq = quotient_action(induced_algebra_action(x), d.W)
        big = [[Fraction(0)] * 12 for _ in range(12)]
        for i in range(5):
            for j in range(5):
                big[i][j] = x[i, j]
        for i in range(7):
            for j in range(7):
                big[5 + i][5 + j] = xq[i, j]
        lift_rows.append([v for row in big for v in row])
    hom_rows = []
    for r in range(5, 12):
        for c in range(5):
            row = [Fraction(0)] * 144
            row[r * 12 + c] = Fraction(1)
            hom_rows.append(row)
    lift = Subspace.span(144, lift_rows)
    hom = Subspace.span(144, hom_rows)
    total = lift.sum(hom)
    ok = (total == ctx.der_G.space and lift.dim == 4 and hom.dim == 35
          and total.dim == 39)
    return (_status(ok), "lift(4) + Hom(35) = der(G), direct",
            f"dims {lift.dim}+{hom.dim}={total.dim}, equality: {total == ctx.der_G.space}")


@_check("n.der-dim-32",
        "derivation algebra dimension of N",
        "claimed: every derivation of N is a shear derivation plus an inner "
        "one, so the Leibniz kernel has dimension 32 = 30 + 2")
def _der_n_dim(ctx):
    d = ctx.der_N.dim
    return _status(d == 32), "32", str(d)


@_check("n.der-decomposition",
        "derivation decomposition of N",
        "claimed: der(N) = {derivations with image in L} + span(ad s1, ad s2) "
        "as an exact subspace equality")
def _der_n_decomp(ctx):
    d = ctx.data
    shear = shear_space(d.N, subspace_in_algebra(d.L))
    ads = Subspace.span(144, [
        ad_matrix(d.N, d.N.basis_vector(0)).flatten(),
        ad_matrix(d.N, d.N.basis_vector(1)).flatten()])
    total = shear.sum(ads)
    ok = total == ctx.der_N.space and shear.dim == 30 and ads.dim == 2
    return (_status(ok), "shear(30) + inner(2) = der(N)",
            f"dims {shear.dim}+{ads.dim}={total.dim} vs der(N) dim "
            f"{ctx.der_N.dim}; equality: {total == ctx.der_N.space}")


@_check("n.derivations-nilpotent",
        "universal nilpotence of der(N)",
        "claimed: every derivation of N kills the abelianization and cubes "
        "to zero, so the identity component of Aut(N) is unipotent")
def _der_n_nilpotent(ctx):
    bad_factor = []
    bad_cube = []
    for idx, dm in enumerate(ctx.der_N.basis_matrices()):
        f = factor_on_abelianization(ctx.data.N, dm)
        if not f.is_zero():
            bad_factor.append(idx)
        if not (dm * dm * dm).is_zero():
            bad_cube.append(idx)
    ok = not bad_factor and not bad_cube
    actual = ("all factors zero, all cubes zero" if ok else
              f"nonzero factors at basis {bad_factor}, nonzero cubes at {bad_cube}")
    return _status(ok), "all factors zero, all cubes zero", actual


@_check("n.exp-unipotent",
        "unipotence of exponentials of derivations of N",
        "claimed: exponentials of derivations of N are unipotent "
        "automorphisms (50 seeded samples)")
def _exp_unipotent(ctx):
    failures = []
    for i in range(50):
        v = sample_in_subspace(ctx.der_N.space, ctx.config.seed, 10_000 + i)
        dm = Matrix.from_flat(12, v)
        try:
            t = exp_nilpotent(dm)
        except ValueError as exc:
            failures.append(f"sample {i}: {exc}")
            continue
        if not is_unipotent(t):
            failures.append(f"sample {i}: exponential not unipotent")
    ok = not failures
    return (_status(ok), "50 unipotent automorphisms",
            "all unipotent" if ok else f"{len(failures)} failures; first: {failures[0]}")


@_check("p.line-stabilizer-zero",
        "infinitesimal stabilizer of the line through p",
        "no nonzero element of the acting algebra moves p along itself: "
        "the kernel of xi -> (xi p) ^ p is zero")
def _line_stab(ctx):
    ker = infinitesimal_line_stabilizer(ctx.config.p, ctx.data.vprime_actions)
    return _status(ker.dim == 0), "0", str(ker.dim)


@_check("p.sampled-nonfixing",
        "sampled group elements do not fix the line through p",
        "seeded hyperbolic, unipotent and elliptic elements all move the "
        "line through p; finite-order elliptic elements are not exhausted "
        "by sampling, so a clean run is reported as a warning, not a pass")
def _sampled_nonfixing(ctx):
    fixing = []
    for i in range(ctx.config.trials):
        kind, g5 = sample_action_on_V(ctx.config.seed, i)
        if g5 == Matrix.identity(5):
            continue
        g7 = ctx.action_on_Vprime(g5)
        if line_fixed_by(ctx.config.p, g7):
            fixing.append((i, kind))
    if fixing:
        return FAIL, "no sampled element fixes the line", f"fixed by {fixing}"
    return (WARN, "no sampled element fixes the line",
            f"none of {ctx.config.trials} samples fixes it (sampling cannot "
            "exhaust finite-order elliptic elements)")


@_check("bound.eigenspace-max3",
        "eigenspace dimension bound on V'",
        "for sampled elements acting on the 7-dimensional V', every rational "
        "eigenvalue has eigenspace dimension at most 3 (= floor(7/2))")
def _eigenspace_bound(ctx):
    worst = 0
    details = []
    for i in range(9):
        kind, g5 = sample_action_on_V(ctx.config.seed, i)
        g7 = ctx.action_on_Vprime(g5)
        try:
            d = max_eigenspace_dim(g7)
        except IrrationalEigenvalueError:
            return FAIL, "rational spectra for shipped samples", \
                f"sample {i} ({kind}) has an irrational real eigenvalue"
        worst = max(worst, d)
        details.append(f"{kind}:{d}")
    ok = worst <= 3
    return _status(ok), "max eigenspace dim <= 3", \
        f"max {worst} ({', '.join(details)})"


@_check("fixed.sampled-nonzero",
        "nonzero fixed vectors on V",
        "every sampled determinant-one element acting on V fixes a nonzero "
        "vector (weights for hyperbolic, unipotence for parabolic, odd "
        "dimension for elliptic)")
def _coran_fixed(ctx):
    bad = []
    for i in range(25):
        kind, g5 = sample_action_on_V(ctx.config.seed, i)
        if fixed_space(g5).dim == 0:
            bad.append((i, kind))
    return (_status(not bad), "all 25 sampled elements fix a nonzero vector",
            "all fixed" if not bad else f"no fixed vector for {bad}")


@_check("fixed.specific-lines",
        "specific fixed lines",
        "the hyperbolic representative fixes exactly the line of s3; the "
        "exponential of the raising action fixes exactly the line of s1")
def _coran_specific(ctx):
    from .models import SL2Element
    hyp = group_action_on_V(sym2_embed(SL2Element.hyperbolic(2)))
    fs_h = fixed_space(hyp)
    uni = group_action_on_V(exp_nilpotent(
        Matrix.from_rows([(0, 1, 0), (0, 0, 1), (0, 0, 0)])))
    fs_u = fixed_space(uni)
    ok = (fs_h == Subspace.span(5, [unit_vector(5, 2)])
          and fs_u == Subspace.span(5, [unit_vector(5, 0)]))
    return (_status(ok), "span(s3) and span(s1)",
            f"hyperbolic: dim {fs_h.dim}; unipotent: dim {fs_u.dim}; exact: {ok}")


@_check("oracle.heisenberg-der6",
        "derivation oracle: Heisenberg algebra",
        "the generic Leibniz kernel gives the classical dimension 6 for the "
        "3-dimensional Heisenberg algebra")
def _oracle_heis(ctx):
    d = derivation_algebra(heisenberg3()).dim
    return _status(d == 6), "6", str(d)


@_check("oracle.abelian-der-n2",
        "derivation oracle: abelian algebras",
        "the Leibniz system is vacuous for abelian algebras, so derivations "
        "are all of gl(n): dimension n^2")
def _oracle_abelian(ctx):
    d2 = derivation_algebra(abelian_lie_algebra(2)).dim
    d3 = derivation_algebra(abelian_lie_algebra(3)).dim
    ok = d2 == 4 and d3 == 9
    return _status(ok), "4 and 9", f"{d2} and {d3}"


# --------------------------------------------------------------------------
# running
# --------------------------------------------------------------------------

def list_checks() -> list[tuple[str, str, str]]:
    return [(c.id, c.description, c.claim) for c in _REGISTRY]


def run(suite: Sequence[str] | None, config: Config) -> Report:
    """Execute the named checks (None or empty = all) in registry order."""
    by_id = {c.id: c for c in _REGISTRY}
    if suite:
        unknown = [s for s in suite if s not in by_id]
        if unknown:
            raise KeyError(f"unknown check ids: {', '.join(unknown)}")
        wanted = set(suite)
        checks = [c for c in _REGISTRY if c.id in wanted]
    else:
        checks = list(_REGISTRY)
    ctx = Context(config)
    results = []
    for c in checks:
        t0 = time.perf_counter()
        try:
            status, expected, actual = c.fn(ctx)
        except Exception as exc:  # a crashed check is a failed check
            status, expected, actual = FAIL, "check to complete", f"error: {exc}"
        ms = int((time.perf_counter() - t0) * 1000)
        results.append(CheckResult(c.id, status, expected, actual, c.claim, ms))
    return Report(__version__, config, tuple(results))


def _parse_p(text: str) -> tuple[Fraction, ...]:
    parts = [s.strip() for s in text.split(",")]
    return validate_p(parts)


def _show_model(name: str, config: Config) -> str:
    data = model_data(config.p)
    L = {"G": data.G, "N": data.N}[name]
    lines = [f"{name}: dimension {L.dim}, basis " + ", ".join(L.labels)]
    lines.append("nonzero brackets:")
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            v = L.sc[i][j]
            if any(x != 0 for x in v):
                terms = " + ".join(
                    (f"{c}*{L.labels[k]}" if c != 1 else L.labels[k])
                    for k, c in enumerate(v) if c)
                lines.append(f"  [{L.labels[i]}, {L.labels[j]}] = {terms}")
    series = lower_central_series(L)
    lines.append("lower central series dims: "
                 + ", ".join(str(s.dim) for s in series))
    lines.append(f"center dimension: {center(L).dim}")
    lines.append("W basis rows (wedge coordinates over s-pairs):")
    for bv in data.W.basis_vectors():
        lines.append("  " + " ".join(str(x) for x in bv))
    lines.append("W' basis rows:")
    for bv in data.Wprime.basis_vectors():
        lines.append("  " + " ".join(str(x) for x in bv))
    if name == "N":
        lines.append("hook target p = "
                     + " + ".join(f"{c}*{lbl}" if c != 1 else lbl
                                  for c, lbl in zip(data.p, VPRIME_LABELS)
                                  if c))
    return "\n".join(lines) + "\n"


def main(argv: Sequence[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="nilcert",
        description="exact certificates for the shipped nilpotent Lie algebra models")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run checks and print a report")
    p_verify.add_argument("--suite", default="all",
                          help="'all' or a comma-separated list of check ids")
    p_verify.add_argument("--json", action="store_true",
                          help="emit the report as deterministic JSON")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--trials", type=int, default=100)
    p_verify.add_argument("--p", default=None,
                          help="7 comma-separated rationals over "
                               + ",".join(VPRIME_LABELS)
                               + " (the p12 coordinate must be 0)")

    sub.add_parser("list", help="list check ids with their claims")

    p_show = sub.add_parser("show", help="print a model's structure constants")
    p_show.add_argument("model", choices=("G", "N"))
    p_show.add_argument("--p", default=None)

    args = parser.parse_args(argv)

    if args.command == "list":
        for cid, desc, claim in list_checks():
            print(f"{cid}: {desc}")
            print(f"    {claim}")
        return 0

    try:
        p = _parse_p(args.p) if getattr(args, "p", None) else DEFAULT_P
    except (ValueError, ZeroDivisionError) as exc:
        print(f"invalid --p: {exc}", file=sys.stderr)
        return 2

    if args.command == "show":
        print(_show_model(args.model, Config(p=p)), end="")
        return 0

    suite = None if args.suite == "all" else [
        s.strip() for s in args.suite.split(",") if s.strip()]
    config = Config(p=p, seed=args.seed, trials=args.trials)
    try:
        report = run(suite, config)
    except KeyError as exc:
        print(str(exc.args[0]), file=sys.stderr)
        return 2
    if args.json:
        sys.stdout.write(report.to_json())
    else:
        sys.stdout.write(report.to_text())
    return 1 if report.counts[FAIL] else 0


if __name__ == "__main__":
    sys.exit(main())
