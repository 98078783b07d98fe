import pytest

from hahnkit.hahn_uni import (
    UniParams,
    eval_total,
    hahn_eval,
    hahn_norm,
    hahn_weight,
    verify_uni,
)
from hahnkit.numeric import EpsFrac, Rat, factorial, pfq_terminating, pochhammer

PARAM_SAMPLE = [Rat(-1, 2), Rat(0), Rat(1, 2), Rat(3), Rat(7, 3)]


def hahn_via_prefactored_series(n, x, p):
    """Independent route: prefactor times the 3F2 with pair cancellation."""
    pre = pochhammer(p.alpha + 1, n) * pochhammer(-p.N, n)
    return pre * pfq_terminating(
        [-n, n + p.alpha + p.beta + 1, -x], [p.alpha + 1, -p.N], 1
    )


def norm_verbatim(n, p):
    """Textbook norm formula; only defined away from alpha+beta+1 = 0."""
    a, b, N = p.alpha, p.beta, p.N
    return (
        (a + b + 1)
        / (2 * n + a + b + 1)
        * factorial(N)
        * factorial(n)
        / factorial(N - n)
        * pochhammer(a + 1, n)
        * pochhammer(b + 1, n)
        * pochhammer(N + a + b + 2, n)
        / pochhammer(a + b + 1, n)
    )


def lagrange_extend(points, values, x):
    total = Rat(0)
    for i, (xi, yi) in enumerate(zip(points, values)):
        term = yi
        for j, xj in enumerate(points):
            if j != i:
                term = term * Rat(x - xj) / Rat(xi - xj)
        total += term
    return total


class TestParams:
    def test_validation(self):
        with pytest.raises(ValueError):
            UniParams(-1, 0, 3)
        with pytest.raises(ValueError):
            UniParams(0, Rat(-3, 2), 3)
        with pytest.raises(ValueError):
            UniParams(0, 0, -1)

    def test_echo(self):
        assert UniParams(Rat(1, 2), 0, 4).echo() == {"alpha": "1/2", "beta": "0", "N": 4}


class TestEval:
    def test_degree_zero_is_one(self):
        p = UniParams(Rat(1, 2), Rat(7, 3), 5)
        for x in range(-2, 8):
            assert hahn_eval(0, x, p) == 1

    def test_degree_one_closed_form(self):
        for alpha in PARAM_SAMPLE:
            for beta in PARAM_SAMPLE:
                p = UniParams(alpha, beta, 4)
                for x in range(-2, 7):
                    assert hahn_eval(1, x, p) == (alpha + beta + 2) * x - 4 * (alpha + 1)

    def test_frozen_values(self):
        p = UniParams(0, 0, 2)
        assert hahn_eval(1, 2, p) == 2
        assert hahn_eval(2, 1, p) == -8

    def test_degree_above_N_rejected(self):
        with pytest.raises(ValueError):
            hahn_eval(3, 0, UniParams(0, 0, 2))

    @pytest.mark.parametrize("N", [1, 2, 5])
    def test_matches_prefactored_series(self, N):
        for alpha in PARAM_SAMPLE:
            p = UniParams(alpha, Rat(7, 3), N)
            for n in range(N + 1):
                for x in range(-2, N + 3):
                    assert hahn_eval(n, x, p) == hahn_via_prefactored_series(n, x, p)

    def test_total_form_handles_degree_above_level(self):
        # the prefactored route is undefined here; the total form is not
        assert eval_total(3, Rat(1), Rat(0), Rat(0), Rat(2)) is not None

    def test_total_form_over_infinitesimals(self):
        a = EpsFrac.linear(0, 1)
        got = eval_total(1, Rat(2), a, EpsFrac.const(0), Rat(2))
        assert got.limit() == hahn_eval(1, 2, UniParams(0, 0, 2))

    @pytest.mark.parametrize("n", range(5))
    def test_degree_by_interpolation(self, n):
        # degree n: values at n+1 points determine the whole grid
        p = UniParams(Rat(1, 2), Rat(7, 3), 6)
        pts = list(range(n + 1))
        vals = [hahn_eval(n, x, p) for x in pts]
        for x in range(7):
            assert lagrange_extend(pts, vals, x) == hahn_eval(n, x, p)


class TestWeight:
    def test_flat_case(self):
        p = UniParams(0, 0, 2)
        assert [hahn_weight(x, p) for x in range(3)] == [Rat(1, 3)] * 3

    def test_left_edge_closed_form(self):
        for alpha in PARAM_SAMPLE:
            for beta in PARAM_SAMPLE:
                p = UniParams(alpha, beta, 5)
                expected = pochhammer(beta + 1, 5) / pochhammer(alpha + beta + 2, 5)
                assert hahn_weight(0, p) == expected

    def test_normalization(self):
        p = UniParams(Rat(1, 2), Rat(7, 3), 5)
        assert sum((hahn_weight(x, p) for x in range(6)), Rat(0)) == 1

    def test_positive(self):
        p = UniParams(Rat(-1, 2), Rat(-1, 2), 6)
        assert all(hahn_weight(x, p) > 0 for x in range(7))

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            hahn_weight(3, UniParams(0, 0, 2))
        with pytest.raises(ValueError):
            hahn_weight(-1, UniParams(0, 0, 2))


class TestNorm:
    def test_frozen_values(self):
        p = UniParams(0, 0, 2)
        assert hahn_norm(0, p) == 1
        assert hahn_norm(1, p) == Rat(8, 3)
        assert hahn_norm(2, p) == 32

    def test_degree_zero_is_total_weight(self):
        for alpha in PARAM_SAMPLE:
            p = UniParams(alpha, Rat(1, 2), 4)
            assert hahn_norm(0, p) == 1

    def test_matches_verbatim_formula_when_defined(self):
        for alpha in [Rat(0), Rat(1, 2), Rat(3)]:
            for beta in [Rat(0), Rat(7, 3)]:
                p = UniParams(alpha, beta, 6)
                for n in range(7):
                    assert hahn_norm(n, p) == norm_verbatim(n, p)

    def test_survives_removable_singularity(self):
        # alpha+beta+1 = 0: the verbatim prefactor is 0/0, the safe form is not
        p = UniParams(Rat(-1, 2), Rat(-1, 2), 5)
        for n in range(6):
            direct = sum(
                (
                    hahn_weight(x, p) * hahn_eval(n, x, p) ** 2
                    for x in range(6)
                ),
                Rat(0),
            )
            assert hahn_norm(n, p) == direct

    @pytest.mark.parametrize("N", [3, 8, 12])
    def test_equals_weighted_square_sum(self, N):
        p = UniParams(Rat(7, 3), Rat(-1, 2), N)
        for n in range(N + 1):
            direct = sum(
                (hahn_weight(x, p) * hahn_eval(n, x, p) ** 2 for x in range(N + 1)),
                Rat(0),
            )
            assert hahn_norm(n, p) == direct

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            hahn_norm(3, UniParams(0, 0, 2))


class TestVerify:
    def test_orthogonality_small_grid(self):
        report = verify_uni("orthogonality", UniParams(0, 0, 2))
        assert report.passed
        assert report.checks[0].max_residual == "0"

    def test_genfun_linear_case(self):
        # x=0, N=1: both sides are 1 - t
        p = UniParams(0, 0, 1)
        assert hahn_eval(1, 0, p) == -1
        assert verify_uni("genfun", p).passed

    def test_dual_genfun_reduces_to_binomial(self):
        assert verify_uni("dual-genfun", UniParams(Rat(1, 2), Rat(7, 3), 4)).passed

    @pytest.mark.parametrize("check", ["orthogonality", "genfun", "dual-genfun"])
    def test_all_checks_on_sample(self, check):
        for alpha in [Rat(-1, 2), Rat(7, 3)]:
            for N in [0, 1, 4]:
                assert verify_uni(check, UniParams(alpha, Rat(1, 2), N)).passed

    def test_unknown_check(self):
        with pytest.raises(ValueError):
            verify_uni("recurrence", UniParams(0, 0, 2))
