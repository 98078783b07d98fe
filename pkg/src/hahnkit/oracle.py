"""Independent verification plane for the two-variable family.

Instead of evaluating explicit polynomials, this module builds the two
difference operators as exact matrices over the simplex grid, pulls joint
eigenvectors out of stacked nullspaces at the known eigenvalues, and checks
that they reproduce the evaluation route up to scale.  The overlap matrix is
factored through the intermediate (cylindrical) basis, and the underlying
algebra is realized as truncated su(1,1) actions in a square-root-free basis.

The operator coefficient tables are written out here on purpose, not
imported from the evaluation module: the whole point of the oracle is that
the two routes share nothing but the grid ordering.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .hahn_bi import BiParams, degree_pairs, grid_points, overlap2, p2_eval
from .hahn_uni import UniParams, hahn_eval, hahn_norm, hahn_weight
from .numeric import Rat, RationalMatrix, format_rational
from .reports import CheckResult, VerificationReport

FLOAT_TOL = 1e-10

OPERATOR_LABELS = ("L1", "L2")


@dataclass(frozen=True)
class GridOperator:
    """One difference operator as an exact matrix in the grid_points order."""

    label: str
    params: BiParams
    points: tuple
    matrix: RationalMatrix


def _shift_coeffs(label: str, i, k, a1, a2, a3, N):
    """Off-diagonal coefficients keyed by grid displacement.

    The diagonal is minus their sum, so constants are annihilated by
    construction; every factor vanishes exactly where its shift would
    leave the simplex.
    """
    if label == "L1":
        return {
            (-1, 1): i * (k + a2 + 1),
            (1, -1): k * (i + a1 + 1),
        }
    return {
        (1, 0): (i + a1 + 1) * (N - i - k),
        (0, 1): (k + a2 + 1) * (N - i - k),
        (-1, 0): i * (N - i - k + a3 + 1),
        (0, -1): k * (N - i - k + a3 + 1),
        (1, -1): k * (i + a1 + 1),
        (-1, 1): i * (k + a2 + 1),
    }


def build_operator(label: str, p: BiParams) -> GridOperator:
    if label not in OPERATOR_LABELS:
        raise ValueError(f"unknown operator label {label!r}")
    points = tuple(grid_points(p.N))
    index = {g: t for t, g in enumerate(points)}
    rows = []
    for i, k in points:
        row = [Rat(0)] * len(points)
        diag = Rat(0)
        coeffs = _shift_coeffs(label, Rat(i), Rat(k), p.alpha1, p.alpha2, p.alpha3, p.N)
        for (di, dk), c in coeffs.items():
            diag -= c
            target = (i + di, k + dk)
            if target in index:
                row[index[target]] += c
            elif c != 0:
                raise ArithmeticError(
                    f"{label} coefficient {format_rational(c)} leaks off the "
                    f"simplex at {(i, k)} toward {target}"
                )
        row[index[(i, k)]] += diag
        rows.append(row)
    return GridOperator(label=label, params=p, points=points, matrix=RationalMatrix(rows))


def eigenvalue(label: str, d, p: BiParams):
    """Known spectrum: -m(m+a12+1) for L1, -(m+n)(m+n+a123+2) for L2."""
    m, n = d
    if label == "L1":
        return -Rat(m) * (m + p.a12 + 1)
    if label == "L2":
        return -Rat(m + n) * (m + n + p.a123 + 2)
    raise ValueError(f"unknown operator label {label!r}")


def joint_eigenvectors(p: BiParams) -> dict:
    """Generator of each joint (L1, L2) eigenspace, first nonzero entry 1.

    Raises ArithmeticError if the joint spectrum degenerates or any
    eigenspace fails to be one-dimensional; for valid parameters neither
    can happen (the L1 eigenvalues are strictly separated in m).
    """
    degs = tuple(degree_pairs(p.N))
    spectrum = {}
    for d in degs:
        key = (eigenvalue("L1", d, p), eigenvalue("L2", d, p))
        if key in spectrum:
            raise ArithmeticError(f"degenerate joint spectrum: {spectrum[key]} vs {d}")
        spectrum[key] = d
    l1 = build_operator("L1", p).matrix
    l2 = build_operator("L2", p).matrix
    out = {}
    for d in degs:
        shifted1 = l1.add_scaled_identity(-eigenvalue("L1", d, p))
        shifted2 = l2.add_scaled_identity(-eigenvalue("L2", d, p))
        basis = shifted1.stack(shifted2).nullspace()
        if len(basis) != 1:
            raise ArithmeticError(
                f"joint eigenspace at {d} has dimension {len(basis)}, expected 1"
            )
        out[d] = basis[0]
    return out


# ---------------------------------------------------------------------------
# cylindrical chain


def cylindrical_pairs(N: int):
    """Intermediate-basis labels (p, q) with 0 <= p <= q <= N, q major."""
    for q in range(N + 1):
        for p in range(q + 1):
            yield (p, q)


@dataclass(frozen=True)
class ChainMatrix:
    """Float change-of-basis matrix with labeled rows and columns."""

    params: BiParams
    rows: tuple
    cols: tuple
    entries: tuple

    @property
    def side(self) -> int:
        return len(self.rows)


def _uni_column(n: int, x: int, u: UniParams) -> float:
    return float(hahn_eval(n, x, u)) * math.sqrt(float(hahn_weight(x, u) / hahn_norm(n, u)))


def chain_matrices(p: BiParams) -> tuple[ChainMatrix, ChainMatrix]:
    """(cartesian -> cylindrical, cylindrical -> spherical) overlap factors.

    The first is block diagonal in q = i + k, the second in m = p; their
    product is the full overlap matrix.  Both are orthogonal because each
    block is a univariate orthonormal system.
    """
    grid = tuple(grid_points(p.N))
    cyl = tuple(cylindrical_pairs(p.N))
    degs = tuple(degree_pairs(p.N))

    first = []
    for i, k in grid:
        u = UniParams(p.alpha1, p.alpha2, i + k)
        first.append(
            tuple(_uni_column(pp, i, u) if q == i + k else 0.0 for pp, q in cyl)
        )

    second = []
    for pp, q in cyl:
        u = UniParams(2 * pp + p.a12 + 1, p.alpha3, p.N - pp)
        second.append(
            tuple(_uni_column(n, q - pp, u) if m == pp else 0.0 for m, n in degs)
        )

    return (
        ChainMatrix(params=p, rows=grid, cols=cyl, entries=tuple(first)),
        ChainMatrix(params=p, rows=cyl, cols=degs, entries=tuple(second)),
    )


# ---------------------------------------------------------------------------
# truncated su(1,1)


@dataclass(frozen=True)
class Su11Module:
    """Positive-discrete-series actions on span(f_0 .. f_nmax).

    Basis without square roots: K+ f_n = f_{n+1}, K- f_n = n(n+2nu-1) f_{n-1},
    K0 f_n = (n+nu) f_n.  Related to the orthonormal convention by the
    diagonal rescaling f_n = sqrt(n! (2nu)_n) e_n, which leaves commutation
    relations and the Casimir untouched.
    """

    nu: object
    nmax: int
    k0: RationalMatrix
    kplus: RationalMatrix
    kminus: RationalMatrix

    def casimir(self) -> RationalMatrix:
        return self.k0.matmul(self.k0) - self.kplus.matmul(self.kminus) - self.k0


def su11_build(nu, nmax: int) -> Su11Module:
    nu = Rat(nu)
    if nu <= 0:
        raise ValueError("weight nu must be positive")
    if not isinstance(nmax, int) or nmax < 1:
        raise ValueError("truncation nmax must be a positive integer")
    size = nmax + 1
    k0 = [[Rat(n) + nu if r == n else Rat(0) for n in range(size)] for r in range(size)]
    kplus = [[Rat(1) if r == n + 1 else Rat(0) for n in range(size)] for r in range(size)]
    kminus = [
        [Rat(n) * (n + 2 * nu - 1) if r == n - 1 else Rat(0) for n in range(size)]
        for r in range(size)
    ]
    return Su11Module(
        nu=nu,
        nmax=nmax,
        k0=RationalMatrix(k0),
        kplus=RationalMatrix(kplus),
        kminus=RationalMatrix(kminus),
    )


# ---------------------------------------------------------------------------
# verification suite


def _check_annihilate_constants(p: BiParams) -> CheckResult:
    name = "annihilate-constants"
    for label in OPERATOR_LABELS:
        op = build_operator(label, p)
        image = op.matrix.mul_vec([Rat(1)] * len(op.points))
        for g, value in zip(op.points, image):
            if value != 0:
                return CheckResult.failure(
                    name, format_rational(value), {"label": label, "point": list(g)},
                    format_rational(value), "0",
                )
    return CheckResult.exact_pass(name)


def _check_commutation(p: BiParams) -> CheckResult:
    name = "commutation"
    l1 = build_operator("L1", p).matrix
    l2 = build_operator("L2", p).matrix
    left = l1.matmul(l2)
    right = l2.matmul(l1)
    if left == right:
        return CheckResult.exact_pass(name)
    diff = left - right
    bad = next(
        (r, c)
        for r in range(diff.rows)
        for c in range(diff.cols)
        if diff.entry(r, c) != 0
    )
    return CheckResult.failure(
        name,
        format_rational(diff.entry(*bad)),
        {"row": bad[0], "col": bad[1]},
        format_rational(left.entry(*bad)),
        format_rational(right.entry(*bad)),
    )


def _normalized_p_vector(d, p: BiParams) -> tuple:
    vals = [p2_eval(d, g, p) for g in grid_points(p.N)]
    lead = next(v for v in vals if v != 0)
    return tuple(v / lead for v in vals)


def _check_joint_eigenvectors(p: BiParams) -> CheckResult:
    name = "joint-eigenvectors"
    vecs = joint_eigenvectors(p)
    for d, vec in vecs.items():
        expected = _normalized_p_vector(d, p)
        if vec != expected:
            g = next(t for t, (a, b) in enumerate(zip(vec, expected)) if a != b)
            return CheckResult.failure(
                name,
                format_rational(vec[g] - expected[g]),
                {"degree": list(d), "entry": g},
                format_rational(vec[g]),
                format_rational(expected[g]),
            )
    return CheckResult.exact_pass(name)


def _max_abs(rows) -> float:
    return max((abs(x) for row in rows for x in row), default=0.0)


def _identity_defect(entries) -> float:
    side = len(entries[0]) if entries else 0
    worst = 0.0
    for a in range(side):
        for b in range(a, side):
            acc = sum(row[a] * row[b] for row in entries)
            worst = max(worst, abs(acc - (1.0 if a == b else 0.0)))
    return worst


def _check_chain_orthogonality(p: BiParams) -> CheckResult:
    name = "chain-orthogonality"
    worst = max(_identity_defect(f.entries) for f in chain_matrices(p))
    if worst <= FLOAT_TOL:
        return CheckResult.float_pass(name, worst)
    return CheckResult.failure(name, f"{worst:.17g}", {}, f"{worst:.17g}", "0")


def _check_chain_composition(p: BiParams) -> CheckResult:
    name = "chain-composition"
    first, second = chain_matrices(p)
    target = overlap2(p, mode="float").entries
    worst = 0.0
    cols = list(zip(*second.entries))
    for r, row in enumerate(first.entries):
        for c, col in enumerate(cols):
            acc = sum(a * b for a, b in zip(row, col))
            worst = max(worst, abs(acc - target[r][c]))
    if worst <= FLOAT_TOL:
        return CheckResult.float_pass(name, worst)
    return CheckResult.failure(name, f"{worst:.17g}", {}, f"{worst:.17g}", "0")


def _check_su11_casimir(p: BiParams) -> CheckResult:
    """Module actions built from the parameter weights nu_i = (alpha_i+1)/2."""
    name = "su11-casimir"
    nmax = max(p.N, 1) + 1
    for alpha in (p.alpha1, p.alpha2, p.alpha3):
        mod = su11_build((alpha + 1) / 2, nmax)
        value = mod.nu * (mod.nu - 1)
        cas = mod.casimir()
        if cas != RationalMatrix.identity(nmax + 1).scale(value):
            return CheckResult.failure(
                name, "1", {"nu": format_rational(mod.nu)},
                format_rational(cas.entry(0, 0)), format_rational(value),
            )
        height = mod.k0.matmul(mod.kplus) - mod.kplus.matmul(mod.k0)
        if height != mod.kplus:
            return CheckResult.failure(
                name, "1", {"nu": format_rational(mod.nu), "relation": "[K0,K+]"},
                "defect", "K+",
            )
        ladder = mod.kminus.matmul(mod.kplus) - mod.kplus.matmul(mod.kminus)
        two_k0 = mod.k0.scale(2)
        for r in range(nmax):
            for c in range(nmax + 1):
                if ladder.entry(r, c) != two_k0.entry(r, c):
                    return CheckResult.failure(
                        name, "1",
                        {"nu": format_rational(mod.nu), "relation": "[K-,K+]", "row": r},
                        format_rational(ladder.entry(r, c)),
                        format_rational(two_k0.entry(r, c)),
                    )
    return CheckResult.exact_pass(name)


def su11_spectrum_check(p: BiParams) -> VerificationReport:
    """Exact match of the grid-operator spectra with the Casimir predictions.

    The first operator eigenvalue at (m, n) equals the two-factor Casimir
    value nu12(nu12-1) minus a12(a12+2)/4 with nu12 = m + nu1 + nu2; the
    second equals the three-factor value shifted by (s+1)(s+3)/4 with
    nu = m + n + nu1 + nu2 + nu3 and s = a123.  Checked as rational
    identities degree by degree after confirming the joint eigenspaces.
    """
    checks = []
    try:
        joint_eigenvectors(p)
        checks.append(CheckResult.exact_pass("joint-diagonalization"))
    except ArithmeticError as err:
        checks.append(
            CheckResult.failure("joint-diagonalization", "inf", {}, str(err), "")
        )

    nu1 = (p.alpha1 + 1) / 2
    nu2 = (p.alpha2 + 1) / 2
    nu3 = (p.alpha3 + 1) / 2
    first = CheckResult.exact_pass("casimir-first")
    second = CheckResult.exact_pass("casimir-second")
    for m, n in degree_pairs(p.N):
        nu12 = m + nu1 + nu2
        lhs = nu12 * (nu12 - 1) - p.a12 * (p.a12 + 2) / 4
        rhs = -eigenvalue("L1", (m, n), p)
        if lhs != rhs and first.passed:
            first = CheckResult.failure(
                "casimir-first", format_rational(lhs - rhs), {"degree": [m, n]},
                format_rational(lhs), format_rational(rhs),
            )
        nu = m + n + nu1 + nu2 + nu3
        lhs = nu * (nu - 1) - (p.a123 + 1) * (p.a123 + 3) / 4
        rhs = -eigenvalue("L2", (m, n), p)
        if lhs != rhs and second.passed:
            second = CheckResult.failure(
                "casimir-second", format_rational(lhs - rhs), {"degree": [m, n]},
                format_rational(lhs), format_rational(rhs),
            )
    checks.extend([first, second])
    return VerificationReport(suite="su11", params=p.echo(), checks=tuple(checks))


_ORACLE_CHECKS = {
    "annihilate-constants": _check_annihilate_constants,
    "commutation": _check_commutation,
    "joint-eigenvectors": _check_joint_eigenvectors,
    "chain-orthogonality": _check_chain_orthogonality,
    "chain-composition": _check_chain_composition,
    "su11-casimir": _check_su11_casimir,
}

ORACLE_CHECK_NAMES = tuple(_ORACLE_CHECKS) + ("su11-spectrum",)


def verify_oracle(check: str, p: BiParams) -> VerificationReport:
    if check == "su11-spectrum":
        report = su11_spectrum_check(p)
        return VerificationReport(suite="oracle", params=p.echo(), checks=report.checks)
    if check not in _ORACLE_CHECKS:
        raise ValueError(f"unknown check: {check}")
    try:
        result = _ORACLE_CHECKS[check](p)
    except ArithmeticError as err:
        result = CheckResult.failure(check, "inf", {}, str(err), "")
    return VerificationReport(suite="oracle", params=p.echo(), checks=(result,))
