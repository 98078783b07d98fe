"""Univariate Hahn polynomials on the grid {0, ..., N}.

Evaluation, hypergeometric-distribution weight, norm, and mechanical checks
of orthogonality and the two generating functions, all in exact arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .classical import jacobi_coeffs
from .numeric import (
    Rat,
    _poly_mul,
    _poly_trim,
    factorial,
    format_rational,
    multinomial,
    pochhammer,
)
from .reports import CheckResult, VerificationReport


@dataclass(frozen=True)
class UniParams:
    alpha: object
    beta: object
    N: int

    def __post_init__(self):
        object.__setattr__(self, "alpha", Rat(self.alpha))
        object.__setattr__(self, "beta", Rat(self.beta))
        if not isinstance(self.N, int) or self.N < 0:
            raise ValueError("N must be a nonnegative integer")
        if self.alpha <= -1 or self.beta <= -1:
            raise ValueError("parameters must exceed -1")

    def echo(self) -> dict:
        return {
            "alpha": format_rational(self.alpha),
            "beta": format_rational(self.beta),
            "N": self.N,
        }


def _poch_generic(a, n: int):
    """Rising factorial over any ring element supporting + and * with ints."""
    out = None
    for j in range(n):
        out = (a + j) if out is None else out * (a + j)
    return out if out is not None else Rat(1)


def eval_total(n: int, x, alpha, beta, M):
    """Hahn value as a division-free sum; total in x, both parameters, and M.

    sum_j (-n)_j (n+a+b+1)_j (-x)_j (a+j+1)_{n-j} (-M+j)_{n-j} / j!

    Equivalent to the prefactored 3F2 form wherever that one is defined (the
    parameter Pochhammers in the denominator are absorbed via the splits
    (a+1)_n = (a+1)_j (a+j+1)_{n-j} and (-M)_n = (-M)_j (-M+j)_{n-j}), but
    stays meaningful for n > M and for level shifts below zero, which the
    bivariate chain needs.  Works over rationals and over the infinitesimal
    fractions used for removable-singularity limits.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    total = None
    for j in range(n + 1):
        term = (
            pochhammer(-n, j)
            / factorial(j)
            * _poch_generic(x - j + 1, j)  # (-x)_j = (-1)^j x(x-1)...(x-j+1)
            * (Rat(-1) ** j)
        )
        term = term * _poch_generic(n + alpha + beta + 1, j)
        term = term * _poch_generic(alpha + j + 1, n - j)
        term = term * _poch_generic(-M + j, n - j)
        total = term if total is None else total + term
    return total


@lru_cache(maxsize=200_000)
def _eval_cached(n: int, x, alpha, beta, M: int):
    return eval_total(n, x, alpha, beta, M)


def hahn_eval(n: int, x, p: UniParams):
    """h_n(x) for 0 <= n <= N; x may sit off the grid (polynomial extension)."""
    if not 0 <= n <= p.N:
        raise ValueError(f"degree {n} outside 0..{p.N}")
    return _eval_cached(n, Rat(x), p.alpha, p.beta, p.N)


def hahn_weight(x: int, p: UniParams):
    if not 0 <= x <= p.N:
        raise ValueError(f"grid point {x} outside 0..{p.N}")
    return (
        multinomial(p.N, [x])
        * pochhammer(p.alpha + 1, x)
        * pochhammer(p.beta + 1, p.N - x)
        / pochhammer(p.alpha + p.beta + 2, p.N)
    )


def hahn_norm(n: int, p: UniParams):
    """Norm of h_n under the weight, in the cancellation-safe arrangement.

    The textbook prefactor (a+b+1)/(a+b+1)_n is 0/0 at a+b+1 = 0; for n >= 1
    it equals 1/(a+b+2)_{n-1}, which is what gets evaluated here.
    """
    if not 0 <= n <= p.N:
        raise ValueError(f"degree {n} outside 0..{p.N}")
    if n == 0:
        return Rat(1)
    a, b, N = p.alpha, p.beta, p.N
    return (
        factorial(N)
        * factorial(n)
        / factorial(N - n)
        * pochhammer(a + 1, n)
        * pochhammer(b + 1, n)
        * pochhammer(N + a + b + 2, n)
        / ((2 * n + a + b + 1) * pochhammer(a + b + 2, n - 1))
    )


def _pad(p, length):
    return tuple(p) + (Rat(0),) * (length - len(p))


def _check_orthogonality(p: UniParams) -> CheckResult:
    N = p.N
    weights = [hahn_weight(x, p) for x in range(N + 1)]
    values = [[hahn_eval(n, x, p) for x in range(N + 1)] for n in range(N + 1)]
    for n in range(N + 1):
        for m in range(n + 1):
            got = sum(
                (weights[x] * values[n][x] * values[m][x] for x in range(N + 1)), Rat(0)
            )
            want = hahn_norm(n, p) if n == m else Rat(0)
            if got != want:
                return CheckResult.failure(
                    "orthogonality",
                    residual=f"{abs(float(got - want)):.17g}",
                    indices=[n, m],
                    lhs=format_rational(got),
                    rhs=format_rational(want),
                )
    return CheckResult.exact_pass("orthogonality")


def _check_genfun(p: UniParams) -> CheckResult:
    """1F1(-x; a+1; -t) 1F1(x-N; b+1; t) against sum_n h_n t^n / ((a+1)_n (b+1)_n n!)."""
    a, b, N = p.alpha, p.beta, p.N
    for x in range(N + 1):
        left_one = tuple(
            pochhammer(-x, j) * Rat(-1) ** j / (pochhammer(a + 1, j) * factorial(j))
            for j in range(x + 1)
        )
        left_two = tuple(
            pochhammer(x - N, j) / (pochhammer(b + 1, j) * factorial(j))
            for j in range(N - x + 1)
        )
        lhs = _pad(_poly_mul(left_one, left_two), N + 1)
        rhs = tuple(
            hahn_eval(n, x, p) / (pochhammer(a + 1, n) * pochhammer(b + 1, n) * factorial(n))
            for n in range(N + 1)
        )
        for n in range(N + 1):
            if lhs[n] != rhs[n]:
                return CheckResult.failure(
                    "genfun",
                    residual=f"{abs(float(lhs[n] - rhs[n])):.17g}",
                    indices=[x, n],
                    lhs=format_rational(lhs[n]),
                    rhs=format_rational(rhs[n]),
                )
    return CheckResult.exact_pass("genfun")


def _check_dual_genfun(p: UniParams) -> CheckResult:
    """(-N)_n n! (1+t)^N P_n((1-t)/(1+t)) against sum_x C(N,x) h_n(x) t^x.

    The Jacobi argument is cleared exactly: each z^i becomes (1-t)^i (1+t)^(N-i).
    """
    a, b, N = p.alpha, p.beta, p.N
    plus = [(Rat(1),)]
    minus = [(Rat(1),)]
    for _ in range(N):
        plus.append(_poly_mul(plus[-1], (Rat(1), Rat(1))))
        minus.append(_poly_mul(minus[-1], (Rat(1), Rat(-1))))
    for n in range(N + 1):
        coeffs = jacobi_coeffs(n, a, b)
        lhs = (Rat(0),)
        for i, c in enumerate(coeffs):
            if c != 0:
                term = _poly_mul(minus[i], plus[N - i])
                lhs = _poly_trim(
                    tuple(
                        (lhs[k] if k < len(lhs) else Rat(0)) + c * term[k]
                        for k in range(max(len(lhs), len(term)))
                    )
                )
        scale = pochhammer(-N, n) * factorial(n)
        lhs = _pad(tuple(scale * c for c in lhs), N + 1)
        rhs = tuple(multinomial(N, [x]) * hahn_eval(n, x, p) for x in range(N + 1))
        for x in range(N + 1):
            if lhs[x] != rhs[x]:
                return CheckResult.failure(
                    "dual-genfun",
                    residual=f"{abs(float(lhs[x] - rhs[x])):.17g}",
                    indices=[n, x],
                    lhs=format_rational(lhs[x]),
                    rhs=format_rational(rhs[x]),
                )
    return CheckResult.exact_pass("dual-genfun")


_CHECKS = {
    "orthogonality": _check_orthogonality,
    "genfun": _check_genfun,
    "dual-genfun": _check_dual_genfun,
}

UNI_CHECK_NAMES = tuple(_CHECKS)


def verify_uni(check: str, p: UniParams) -> VerificationReport:
    if check not in _CHECKS:
        raise ValueError(f"unknown check: {check}")
    return VerificationReport(suite="uni", params=p.echo(), checks=(_CHECKS[check](p),))
