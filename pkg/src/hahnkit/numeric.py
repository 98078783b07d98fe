"""Exact arithmetic substrate.

Rationals, radical scalars r*sqrt(s), combinatorial factors, terminating
hypergeometric sums, dense bivariate polynomial algebra, fraction-free
kernels, and a one-infinitesimal rational-function type used to evaluate
coefficient formulas through removable 0/0 points.

Everything in this module is pure and immutable.  The rational backend is
gmpy2.mpq when importable and fractions.Fraction otherwise; both keep
fractions reduced with a positive denominator, which is all the rest of the
package assumes.
"""
from __future__ import annotations

import math
import re
from typing import Iterable, Sequence, Union

try:
    from gmpy2 import mpq as _rat_backend
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as _rat_backend

RatLike = Union[int, str, "Rational"]


def Rat(numerator: RatLike = 0, denominator: int | None = None):
    """Build a reduced rational from an int, a 'p/q' string, or a rational."""
    if denominator is None:
        return _rat_backend(numerator)
    return _rat_backend(numerator, denominator)


# Concrete backend class, usable in isinstance checks and annotations.
Rational = type(_rat_backend(0))

_ZERO = Rat(0)
_ONE = Rat(1)

_RATIONAL_TEXT = re.compile(r"^-?\d+(?:/[1-9]\d*)?$")


def parse_rational(text: str) -> Rational:
    """Parse 'p' or 'p/q' (q > 0, sign on the numerator only).

    Decimal notation is rejected on purpose: accepting floats would silently
    break the exactness contract of every caller.
    """
    text = text.strip()
    if not _RATIONAL_TEXT.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    return Rat(text)


def format_rational(value) -> str:
    value = Rat(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def rat_is_integer(value) -> bool:
    return Rat(value).denominator == 1


def rat_to_int(value) -> int:
    value = Rat(value)
    if value.denominator != 1:
        raise ValueError(f"not an integer: {value}")
    return int(value.numerator)


def pochhammer(a, n: int):
    """Rising factorial a(a+1)...(a+n-1); empty product is 1."""
    if n < 0:
        raise ValueError("pochhammer needs a nonnegative length")
    a = Rat(a)
    out = _ONE
    for j in range(n):
        out = out * (a + j)
    return out


def factorial(n: int):
    if n < 0:
        raise ValueError("negative factorial")
    return Rat(math.factorial(n))


def multinomial(N: int, parts: Sequence[int]):
    """N! / (parts! * residual!) with the residual N - sum(parts) implicit."""
    parts = list(parts)
    if N < 0 or any(p < 0 for p in parts):
        raise ValueError("multinomial arguments must be nonnegative")
    residual = N - sum(parts)
    if residual < 0:
        raise ValueError("parts exceed N")
    out = math.factorial(N)
    for p in parts:
        out //= math.factorial(p)
    out //= math.factorial(residual)
    return Rat(out)


def binomial_general(a, k: int):
    """C(a, k) for rational a and integer k >= 0, as (a-k+1)_k / k!."""
    if k < 0:
        raise ValueError("negative lower index")
    return pochhammer(Rat(a) - k + 1, k) / factorial(k)


def _nonpos_int(value) -> int | None:
    """Return x >= 0 when value is the nonpositive integer -x, else None."""
    if value.denominator != 1 or value.numerator > 0:
        return None
    return -int(value.numerator)


def pfq_terminating(numerators: Iterable, denominators: Iterable, arg):
    """Terminating generalized hypergeometric sum sum_j prod(num)_j / prod(den)_j * arg^j / j!.

    Truncates at the smallest x with a numerator equal to -x.  A nonpositive
    integer denominator -N is cancelled against an unused nonpositive integer
    numerator -x with x <= N: the pair enters each term as the telescoping
    ratio prod_{r<j} (x-r)/(N-r), which equals the written Pochhammer ratio
    wherever the latter is defined and is 0 once j > x.  A denominator whose
    Pochhammer vanishes inside the truncated range with no such partner makes
    the sum undefined and is rejected.
    """
    nums = [Rat(a) for a in numerators]
    dens = [Rat(b) for b in denominators]
    arg = Rat(arg)

    stops = [x for a in nums if (x := _nonpos_int(a)) is not None]
    if not stops:
        raise ValueError("series does not terminate: no nonpositive integer numerator")
    top = min(stops)

    # Pair integer denominators with cancelling numerators.  Deterministic
    # choice: largest eligible x first, so the ratio stays nonzero longest.
    num_pool = sorted(
        (i for i, a in enumerate(nums) if _nonpos_int(a) is not None),
        key=lambda i: -(_nonpos_int(nums[i]) or 0),
    )
    pairs: list[tuple[int, int]] = []  # (x, N) with x <= N
    free_nums = list(nums)
    free_dens = []
    for b in dens:
        N_b = _nonpos_int(b)
        partner = None
        if N_b is not None:
            for i in num_pool:
                if free_nums[i] is not None and (_nonpos_int(nums[i]) or 0) <= N_b:
                    partner = i
                    break
        if partner is not None:
            pairs.append(((_nonpos_int(nums[partner]) or 0), N_b))
            free_nums[partner] = None
        elif N_b is not None and N_b < top:
            raise ZeroDivisionError(
                "denominator Pochhammer vanishes inside the sum with no cancelling numerator"
            )
        else:
            free_dens.append(b)
    free_nums = [a for a in free_nums if a is not None]

    total = _ZERO
    term = _ONE
    j = 0
    while True:
        total = total + term
        if j == top:
            break
        for a in free_nums:
            term = term * (a + j)
        for b in free_dens:
            term = term / (b + j)
        for x, N_b in pairs:
            if j >= x:
                term = _ZERO
            else:
                term = term * Rat(x - j, N_b - j)
        term = term * arg / (j + 1)
        if term == 0:
            break  # a vanished factor propagates through every later term
        j += 1
    return total


class RadicalScalar:
    """Exact value coeff*sqrt(radicand) with rational parts, radicand >= 0.

    Radicands are not reduced to squarefree form; equality is the sign test
    plus equality of the squared values.  Closed under multiplication only.
    """

    __slots__ = ("coeff", "radicand")

    def __init__(self, coeff, radicand):
        coeff = Rat(coeff)
        radicand = Rat(radicand)
        if radicand < 0:
            raise ValueError("negative radicand")
        if coeff == 0 or radicand == 0:
            coeff = _ZERO
            radicand = _ZERO
        object.__setattr__(self, "coeff", coeff)
        object.__setattr__(self, "radicand", radicand)

    def __setattr__(self, name, value):
        raise AttributeError("RadicalScalar is immutable")

    @classmethod
    def of_rational(cls, value) -> "RadicalScalar":
        return cls(value, _ONE)

    @classmethod
    def sqrt(cls, radicand) -> "RadicalScalar":
        return cls(_ONE, radicand)

    def sign(self) -> int:
        if self.coeff > 0:
            return 1
        if self.coeff < 0:
            return -1
        return 0

    def squared(self):
        return self.coeff * self.coeff * self.radicand

    def signed_square(self):
        """The square carrying the sign of the value; injective on values."""
        return self.sign() * self.squared()

    def __mul__(self, other):
        if isinstance(other, RadicalScalar):
            return RadicalScalar(self.coeff * other.coeff, self.radicand * other.radicand)
        return RadicalScalar(self.coeff * Rat(other), self.radicand)

    __rmul__ = __mul__

    def __neg__(self):
        return RadicalScalar(-self.coeff, self.radicand)

    def __eq__(self, other):
        if not isinstance(other, RadicalScalar):
            if Rat(other) == 0:
                return self.coeff == 0
            other = RadicalScalar.of_rational(other)
        return self.sign() == other.sign() and self.squared() == other.squared()

    def __hash__(self):
        return hash((self.sign(), self.squared()))

    def __float__(self):
        return float(self.coeff) * math.sqrt(float(self.radicand))

    def __repr__(self):
        return f"RadicalScalar({format_rational(self.coeff)}, {format_rational(self.radicand)})"


def _as_rat_grid(grid) -> tuple[tuple, ...]:
    return tuple(tuple(Rat(c) for c in row) for row in grid)


class BiPoly:
    """Dense rational coefficient grid for a polynomial in two variables.

    grid[a][b] is the coefficient of x^a y^b.  Coefficient extraction is
    total: indices outside the stored box read as zero.
    """

    __slots__ = ("grid",)

    def __init__(self, grid):
        grid = _as_rat_grid(grid)
        if not grid or any(len(row) != len(grid[0]) for row in grid):
            raise ValueError("grid must be rectangular and nonempty")
        object.__setattr__(self, "grid", grid)

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    @classmethod
    def constant(cls, value) -> "BiPoly":
        return cls(((Rat(value),),))

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls.constant(0)

    @classmethod
    def monomial(cls, a: int, b: int, coeff=1) -> "BiPoly":
        grid = [[_ZERO] * (b + 1) for _ in range(a + 1)]
        grid[a][b] = Rat(coeff)
        return cls(grid)

    @property
    def deg1(self) -> int:
        return len(self.grid) - 1

    @property
    def deg2(self) -> int:
        return len(self.grid[0]) - 1

    def coeff(self, a: int, b: int):
        if a < 0 or b < 0:
            raise ValueError("negative exponent")
        if a <= self.deg1 and b <= self.deg2:
            return self.grid[a][b]
        return _ZERO

    def __add__(self, other):
        if not isinstance(other, BiPoly):
            other = BiPoly.constant(other)
        A = max(self.deg1, other.deg1)
        B = max(self.deg2, other.deg2)
        return BiPoly(
            [[self.coeff(a, b) + other.coeff(a, b) for b in range(B + 1)] for a in range(A + 1)]
        )

    __radd__ = __add__

    def __neg__(self):
        return BiPoly([[-c for c in row] for row in self.grid])

    def __sub__(self, other):
        if not isinstance(other, BiPoly):
            other = BiPoly.constant(other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, BiPoly):
            scale = Rat(other)
            return BiPoly([[c * scale for c in row] for row in self.grid])
        A = self.deg1 + other.deg1
        B = self.deg2 + other.deg2
        out = [[_ZERO] * (B + 1) for _ in range(A + 1)]
        for a1, row in enumerate(self.grid):
            for b1, c1 in enumerate(row):
                if c1 == 0:
                    continue
                orow = other.grid
                for a2, row2 in enumerate(orow):
                    for b2, c2 in enumerate(row2):
                        if c2 != 0:
                            out[a1 + a2][b1 + b2] += c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = BiPoly.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        A = max(self.deg1, other.deg1)
        B = max(self.deg2, other.deg2)
        return all(
            self.coeff(a, b) == other.coeff(a, b) for a in range(A + 1) for b in range(B + 1)
        )

    def __hash__(self):
        raise TypeError("BiPoly is not hashable")

    def is_zero(self) -> bool:
        return all(c == 0 for row in self.grid for c in row)

    def __repr__(self):
        terms = []
        for a, row in enumerate(self.grid):
            for b, c in enumerate(row):
                if c != 0:
                    terms.append(f"{format_rational(c)}*x^{a}*y^{b}")
        return "BiPoly(" + (" + ".join(terms) if terms else "0") + ")"


class RationalMatrix:
    """Immutable rectangular matrix over the rationals."""

    __slots__ = ("data",)

    def __init__(self, rows):
        data = _as_rat_grid(rows)
        if not data or any(len(r) != len(data[0]) for r in data):
            raise ValueError("rows must be rectangular and nonempty")
        object.__setattr__(self, "data", data)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls([[_ZERO] * cols for _ in range(rows)])

    @property
    def rows(self) -> int:
        return len(self.data)

    @property
    def cols(self) -> int:
        return len(self.data[0])

    def entry(self, i: int, j: int):
        return self.data[i][j]

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.data == other.data

    def __hash__(self):
        raise TypeError("RationalMatrix is not hashable")

    def __add__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")
        return RationalMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ]
        )

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, factor) -> "RationalMatrix":
        factor = Rat(factor)
        return RationalMatrix([[factor * a for a in row] for row in self.data])

    def add_scaled_identity(self, factor) -> "RationalMatrix":
        if self.rows != self.cols:
            raise ValueError("square matrix required")
        factor = Rat(factor)
        return RationalMatrix(
            [
                [a + factor if i == j else a for j, a in enumerate(row)]
                for i, row in enumerate(self.data)
            ]
        )

    def matmul(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        cols = list(zip(*other.data))
        return RationalMatrix(
            [[sum((a * b for a, b in zip(row, col)), _ZERO) for col in cols] for row in self.data]
        )

    def mul_vec(self, vec: Sequence) -> tuple:
        if len(vec) != self.cols:
            raise ValueError("shape mismatch")
        vec = [Rat(v) for v in vec]
        return tuple(sum((a * v for a, v in zip(row, vec)), _ZERO) for row in self.data)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(list(zip(*self.data)))

    def stack(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.cols:
            raise ValueError("shape mismatch")
        return RationalMatrix(list(self.data) + list(other.data))

    def nullspace(self) -> list[tuple]:
        """Exact kernel basis, each vector scaled to first nonzero entry 1.

        Rows are scaled integer, then reduced by one-step Bareiss elimination
        so intermediate entries stay integer and bounded.
        """
        rows, cols = self.rows, self.cols
        A: list[list[int]] = []
        for row in self.data:
            scale = math.lcm(*(int(x.denominator) for x in row)) if row else 1
            A.append([int(x.numerator) * (scale // int(x.denominator)) for x in row])

        piv_cols: list[int] = []
        r = 0
        prev = 1
        for c in range(cols):
            p = next((i for i in range(r, rows) if A[i][c] != 0), None)
            if p is None:
                continue
            A[r], A[p] = A[p], A[r]
            pivot = A[r][c]
            # update every lower row, zero factors included: the Bareiss
            # divisibility invariant needs the pivot/prev rescaling everywhere
            for i in range(r + 1, rows):
                factor = A[i][c]
                for j in range(c + 1, cols):
                    A[i][j] = (pivot * A[i][j] - factor * A[r][j]) // prev
                A[i][c] = 0
            prev = pivot
            piv_cols.append(c)
            r += 1
            if r == rows:
                break

        free_cols = [c for c in range(cols) if c not in piv_cols]
        basis: list[tuple] = []
        for f in free_cols:
            v = [_ZERO] * cols
            v[f] = _ONE
            for t in reversed(range(len(piv_cols))):
                pc = piv_cols[t]
                s = sum((Rat(A[t][j]) * v[j] for j in range(pc + 1, cols)), _ZERO)
                v[pc] = -s / A[t][pc]
            lead = next(x for x in v if x != 0)
            basis.append(tuple(x / lead for x in v))
        return basis


def _poly_trim(coeffs: tuple) -> tuple:
    i = len(coeffs)
    while i > 1 and coeffs[i - 1] == 0:
        i -= 1
    return coeffs[:i]


def _poly_add(p: tuple, q: tuple) -> tuple:
    n = max(len(p), len(q))
    return _poly_trim(
        tuple(
            (p[i] if i < len(p) else _ZERO) + (q[i] if i < len(q) else _ZERO) for i in range(n)
        )
    )


def _poly_mul(p: tuple, q: tuple) -> tuple:
    out = [_ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            if b != 0:
                out[i + j] += a * b
    return _poly_trim(tuple(out))


class EpsFrac:
    """Rational function of one formal infinitesimal.

    Coefficient formulas in this package can hit removable 0/0 at special
    parameter points.  Substituting alpha -> alpha + c*eps turns each such
    formula into an exact rational function of eps; limit() reads off the
    value at eps = 0 and raises if the point is a genuine pole instead.
    Polynomials are stored as ascending rational coefficient tuples, never
    reduced: order bookkeeping at 0 is all limit() needs.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=(Rat(1),)):
        num = _poly_trim(tuple(Rat(c) for c in num))
        den = _poly_trim(tuple(Rat(c) for c in den))
        if all(c == 0 for c in den):
            raise ZeroDivisionError("denominator is the zero polynomial")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("EpsFrac is immutable")

    @classmethod
    def const(cls, value) -> "EpsFrac":
        return cls((Rat(value),))

    @classmethod
    def linear(cls, value, slope) -> "EpsFrac":
        return cls((Rat(value), Rat(slope)))

    @staticmethod
    def _coerce(value) -> "EpsFrac":
        if isinstance(value, EpsFrac):
            return value
        return EpsFrac.const(value)

    def __add__(self, other):
        other = self._coerce(other)
        return EpsFrac(
            _poly_add(_poly_mul(self.num, other.den), _poly_mul(other.num, self.den)),
            _poly_mul(self.den, other.den),
        )

    __radd__ = __add__

    def __neg__(self):
        return EpsFrac(tuple(-c for c in self.num), self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        return EpsFrac(_poly_mul(self.num, other.num), _poly_mul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        return EpsFrac(_poly_mul(self.num, other.den), _poly_mul(self.den, other.num))

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("nonnegative integer powers only")
        out = EpsFrac.const(1)
        for _ in range(n):
            out = out * self
        return out

    @staticmethod
    def _order(coeffs: tuple) -> int | None:
        for i, c in enumerate(coeffs):
            if c != 0:
                return i
        return None

    def limit(self):
        """Value at the infinitesimal -> 0; raises on a genuine pole."""
        n_ord = self._order(self.num)
        if n_ord is None:
            return _ZERO
        d_ord = self._order(self.den)
        assert d_ord is not None
        if n_ord > d_ord:
            return _ZERO
        if n_ord == d_ord:
            return self.num[n_ord] / self.den[d_ord]
        raise ArithmeticError("pole at the evaluation point; identity is ill-formed here")

    def sign_at_zero(self) -> int:
        """Sign of the value for a small positive infinitesimal.

        Well-defined even when limit() is 0 or a pole: the lowest-order
        coefficients decide.  Needed where a vanishing factor carries the
        sign of a product whose magnitude survives the limit.
        """
        n_ord = self._order(self.num)
        if n_ord is None:
            return 0
        sign = 1 if self.num[n_ord] > 0 else -1
        if self.den[self._order(self.den)] < 0:
            sign = -sign
        return sign

    def __repr__(self):
        return f"EpsFrac(num={self.num}, den={self.den})"
