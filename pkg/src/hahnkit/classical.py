"""Exact Jacobi and Laguerre polynomials and their structure relations.

Polynomials are ascending tuples of rational coefficients.  Relations are
checked as coefficient identities, never pointwise: both sides are expanded
exactly and subtracted, and the residual must be identically zero.
"""
from __future__ import annotations

from typing import Sequence

from .numeric import (
    BiPoly,
    Rat,
    _poly_add,
    _poly_mul,
    _poly_trim,
    factorial,
    format_rational,
    pochhammer,
)
from .reports import CheckResult, VerificationReport

PolyCoeffs = tuple

_POLY_ZERO = (Rat(0),)


def poly_deriv(p: Sequence) -> PolyCoeffs:
    if len(p) <= 1:
        return _POLY_ZERO
    return _poly_trim(tuple(Rat(i) * p[i] for i in range(1, len(p))))


def poly_equal(p: Sequence, q: Sequence) -> bool:
    n = max(len(p), len(q))
    return all(
        (p[i] if i < len(p) else 0) == (q[i] if i < len(q) else 0) for i in range(n)
    )


def jacobi_coeffs(n: int, alpha, beta) -> PolyCoeffs:
    """Coefficients of the degree-n Jacobi polynomial in z.

    Expanded from a form polynomial in both parameters, so the raising
    relations may shift alpha or beta down to -1 and below without hitting a
    division: sum_j (-n)_j (n+a+b+1)_j (a+j+1)_{n-j} / (n! j!) ((1-z)/2)^j.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    alpha = Rat(alpha)
    beta = Rat(beta)
    half_base = (Rat(1, 2), Rat(-1, 2))  # (1-z)/2
    power: PolyCoeffs = (Rat(1),)
    total: PolyCoeffs = _POLY_ZERO
    for j in range(n + 1):
        c = (
            pochhammer(-n, j)
            * pochhammer(n + alpha + beta + 1, j)
            * pochhammer(alpha + j + 1, n - j)
            / (factorial(n) * factorial(j))
        )
        total = _poly_add(total, tuple(c * p for p in power))
        power = _poly_mul(power, half_base)
    return total


def laguerre_coeffs(n: int, alpha) -> PolyCoeffs:
    if n < 0:
        raise ValueError("degree must be nonnegative")
    alpha = Rat(alpha)
    return _poly_trim(
        tuple(
            Rat(-1) ** j * pochhammer(alpha + j + 1, n - j) / (factorial(n - j) * factorial(j))
            for j in range(n + 1)
        )
    )


def _uni_as_bipoly(p: Sequence, axis: int) -> BiPoly:
    out = BiPoly.zero()
    for i, c in enumerate(p):
        if c != 0:
            out = out + BiPoly.monomial(i if axis == 0 else 0, i if axis == 1 else 0, c)
    return out


def _compose_sum(p: Sequence) -> BiPoly:
    """p(x + y) as an exact bivariate polynomial."""
    s = BiPoly.monomial(1, 0) + BiPoly.monomial(0, 1)
    out = BiPoly.zero()
    power = BiPoly.constant(1)
    for c in p:
        if c != 0:
            out = out + power * c
        power = power * s
    return out


def _jacobi_relation_sides(relation: str, n: int, alpha, beta):
    a, b = Rat(alpha), Rat(beta)
    p = jacobi_coeffs(n, a, b)
    dp = poly_deriv(p)
    ddp = poly_deriv(dp)
    if relation == "jacobi-lower-1":
        lhs = dp
        rhs = jacobi_coeffs(n - 1, a + 1, b + 1) if n >= 1 else _POLY_ZERO
        rhs = tuple((n + a + b + 1) / 2 * c for c in rhs)
    elif relation == "jacobi-lower-2":
        lhs = _poly_add(_poly_mul((Rat(-1), Rat(1)), ddp), tuple((a + 1) * c for c in dp))
        rhs = jacobi_coeffs(n - 1, a, b + 2) if n >= 1 else _POLY_ZERO
        rhs = tuple((n + a) * (n + a + b + 1) / 2 * c for c in rhs)
    elif relation == "jacobi-raise-1":
        lhs = _poly_add(
            _poly_mul((Rat(1), Rat(0), Rat(-1)), dp),
            _poly_mul((b - a, -(a + b)), p),
        )
        rhs = tuple(Rat(-2) * (n + 1) * c for c in jacobi_coeffs(n + 1, a - 1, b - 1))
    elif relation == "jacobi-raise-2":
        lhs = _poly_add(
            _poly_add(
                _poly_mul(_poly_mul((Rat(1), Rat(1)), (Rat(-1), Rat(0), Rat(1))), ddp),
                _poly_mul(_poly_mul((Rat(1), Rat(1)), (1 + a - 2 * b, 1 + a + 2 * b)), dp),
            ),
            _poly_mul((b * (2 + a - b), b * (a + b)), p),
        )
        rhs = tuple(Rat(2) * (n + 1) * (n + b) * c for c in jacobi_coeffs(n + 1, a, b - 2))
    else:
        raise ValueError(f"unknown relation: {relation}")
    return _poly_trim(lhs), _poly_trim(rhs)


def _laguerre_relation_sides(relation: str, n: int, alpha):
    a = Rat(alpha)
    p = laguerre_coeffs(n, a)
    dp = poly_deriv(p)
    if relation == "laguerre-lower":
        lhs = dp
        rhs = laguerre_coeffs(n - 1, a + 1) if n >= 1 else _POLY_ZERO
        rhs = tuple(-c for c in rhs)
    elif relation == "laguerre-raise":
        lhs = _poly_add(_poly_mul((Rat(0), Rat(1)), dp), _poly_mul((a, Rat(-1)), p))
        rhs = tuple(Rat(n + 1) * c for c in laguerre_coeffs(n + 1, a - 1))
    else:
        raise ValueError(f"unknown relation: {relation}")
    return _poly_trim(lhs), _poly_trim(rhs)


_RELATIONS = (
    "jacobi-lower-1",
    "jacobi-lower-2",
    "jacobi-raise-1",
    "jacobi-raise-2",
    "laguerre-lower",
    "laguerre-raise",
    "laguerre-addition",
)

RELATION_NAMES = _RELATIONS


def verify_classical(relation: str, n: int, alpha, beta=0) -> VerificationReport:
    """Check one structure relation as an exact coefficient identity.

    laguerre-addition expands L_n^(a+b+1)(x+y) against the convolution
    sum_{l+k=n} L_l^(a)(x) L_k^(b)(y) as bivariate polynomials.
    """
    if relation not in _RELATIONS:
        raise ValueError(f"unknown relation: {relation}")
    params = {
        "relation": relation,
        "n": n,
        "alpha": format_rational(alpha),
        "beta": format_rational(beta),
    }

    if relation == "laguerre-addition":
        a, b = Rat(alpha), Rat(beta)
        lhs = _compose_sum(laguerre_coeffs(n, a + b + 1))
        rhs = BiPoly.zero()
        for ell in range(n + 1):
            rhs = rhs + _uni_as_bipoly(laguerre_coeffs(ell, a), 0) * _uni_as_bipoly(
                laguerre_coeffs(n - ell, b), 1
            )
        diff = lhs - rhs
        if diff.is_zero():
            check = CheckResult.exact_pass(relation)
        else:
            bad = next(
                (i, k)
                for i in range(diff.deg1 + 1)
                for k in range(diff.deg2 + 1)
                if diff.coeff(i, k) != 0
            )
            check = CheckResult.failure(
                relation,
                residual=f"{abs(float(diff.coeff(*bad))):.17g}",
                indices=list(bad),
                lhs=format_rational(lhs.coeff(*bad)),
                rhs=format_rational(rhs.coeff(*bad)),
            )
        return VerificationReport(suite="classical", params=params, checks=(check,))

    if relation.startswith("jacobi"):
        lhs, rhs = _jacobi_relation_sides(relation, n, alpha, beta)
    else:
        lhs, rhs = _laguerre_relation_sides(relation, n, alpha)

    if poly_equal(lhs, rhs):
        check = CheckResult.exact_pass(relation)
    else:
        top = max(len(lhs), len(rhs))
        get = lambda p, i: p[i] if i < len(p) else Rat(0)
        bad = next(i for i in range(top) if get(lhs, i) != get(rhs, i))
        check = CheckResult.failure(
            relation,
            residual=f"{abs(float(get(lhs, bad) - get(rhs, bad))):.17g}",
            indices=[bad],
            lhs=format_rational(get(lhs, bad)),
            rhs=format_rational(get(rhs, bad)),
        )
    return VerificationReport(suite="classical", params=params, checks=(check,))
