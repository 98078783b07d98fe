import math

import pytest

from hahnkit.hahn_bi import (
    BI_CHECK_NAMES,
    BiParams,
    amplitude,
    bigLambda,
    degree_pairs,
    grid_points,
    h2_eval,
    lambda2,
    overlap2,
    p2_eval,
    q2_eval,
    verify_bi,
    weight2,
)
from hahnkit.numeric import (
    EpsFrac,
    Rat,
    binomial_general,
    factorial,
    pochhammer,
)

PARAM_TRIPLES = [
    (Rat(0), Rat(0), Rat(0)),
    (Rat(1, 2), Rat(-1, 2), Rat(3)),
    (Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)),
    (Rat(7, 3), Rat(1), Rat(1, 2)),
]


def weight_via_binomials(g, p):
    """Independent route: ratio of generalized binomial coefficients."""
    i, k = g
    return (
        binomial_general(i + p.alpha1, i)
        * binomial_general(k + p.alpha2, k)
        * binomial_general(p.N - i - k + p.alpha3, p.N - i - k)
        / binomial_general(p.N + p.a123 + 2, p.N)
    )


def norm_verbatim(d, p):
    """Textbook norm with the raw Pochhammer ratios; fails at the removable
    points the shipped form is arranged to avoid."""
    m, n = d
    s, sig, N = p.a12, p.a123, p.N
    return (
        factorial(m)
        * factorial(n)
        * factorial(N - m - n)
        / factorial(N)
        * pochhammer(p.alpha1 + 1, m)
        * pochhammer(p.alpha2 + 1, m)
        * pochhammer(p.alpha3 + 1, n)
        * pochhammer(s + 1, 2 * m)
        / pochhammer(s + 1, m)
        * pochhammer(2 * m + s + 2, n)
        * pochhammer(2 * m + sig + 2, 2 * n)
        / pochhammer(2 * m + sig + 2, n)
        * pochhammer(m + n + sig + 3, N)
        / pochhammer(m + n + sig + 3, m + n)
        / pochhammer(sig + 3, N)
    )


class TestBiParams:
    def test_coerces_and_caches_sums(self):
        p = BiParams("1/2", 0, 3, 4)
        assert p.alpha1 == Rat(1, 2)
        assert p.a12 == Rat(1, 2)
        assert p.a123 == Rat(7, 2)

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            BiParams(-1, 0, 0, 2)
        with pytest.raises(ValueError):
            BiParams(0, 0, 0, -1)
        with pytest.raises(ValueError):
            BiParams(0, 0, 0, Rat(5, 2))

    def test_echo_round_trips(self):
        assert BiParams(Rat(1, 2), 0, 3, 2).echo() == {
            "alpha1": "1/2",
            "alpha2": "0",
            "alpha3": "3",
            "N": 2,
        }


class TestOrderings:
    def test_grid_colex(self):
        assert list(grid_points(2)) == [(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (0, 2)]

    def test_degrees_mirror_grid(self):
        assert list(degree_pairs(3)) == [
            (m, n) for (m, n) in ((0, 0), (1, 0), (2, 0), (3, 0), (0, 1), (1, 1), (2, 1), (0, 2), (1, 2), (0, 3))
        ]

    @pytest.mark.parametrize("N", [0, 1, 5, 9])
    def test_counts(self, N):
        want = (N + 1) * (N + 2) // 2
        assert len(list(grid_points(N))) == want
        assert len(list(degree_pairs(N))) == want

    def test_off_simplex_rejected(self):
        p = BiParams(0, 0, 0, 2)
        with pytest.raises(ValueError):
            p2_eval((1, 2), (0, 0), p)
        with pytest.raises(ValueError):
            weight2((3, 0), p)
        with pytest.raises(ValueError):
            q2_eval((0, 0), (-1, 1), p)


class TestWeight:
    def test_uniform_at_unit_zero_params(self):
        p = BiParams(0, 0, 0, 1)
        assert [weight2(g, p) for g in grid_points(1)] == [Rat(1, 3)] * 3

    def test_point_mass_at_level_zero(self):
        assert weight2((0, 0), BiParams(2, 3, Rat(1, 2), 0)) == 1

    @pytest.mark.parametrize("triple", PARAM_TRIPLES)
    @pytest.mark.parametrize("N", [1, 4])
    def test_sums_to_one(self, triple, N):
        p = BiParams(*triple, N)
        assert sum(weight2(g, p) for g in grid_points(N)) == 1

    @pytest.mark.parametrize("triple", PARAM_TRIPLES)
    def test_matches_binomial_route(self, triple):
        p = BiParams(*triple, 5)
        for g in grid_points(5):
            assert weight2(g, p) == weight_via_binomials(g, p)

    def test_amplitude_squares_exactly(self):
        p = BiParams(Rat(1, 2), Rat(7, 3), 1, 4)
        for g in grid_points(4):
            a = amplitude(g, p)
            assert a.squared() == weight2(g, p)
            assert float(a) > 0


class TestEvaluation:
    def test_constant_member(self):
        p = BiParams(Rat(1, 2), 3, Rat(7, 3), 3)
        assert all(p2_eval((0, 0), g, p) == 1 for g in grid_points(3))

    def test_frozen_first_degree_values(self):
        p = BiParams(0, 0, 0, 1)
        assert [p2_eval((1, 0), g, p) for g in grid_points(1)] == [0, -1, 1]
        assert [p2_eval((0, 1), g, p) for g in grid_points(1)] == [2, -1, -1]

    def test_factorial_normalization_is_plain_rescale(self):
        p = BiParams(Rat(1, 2), 0, 2, 4)
        for d in degree_pairs(4):
            scale = factorial(d[0]) * factorial(d[1])
            for g in grid_points(4):
                assert h2_eval(d, g, p) * scale == p2_eval(d, g, p)

    def test_swap_symmetry(self):
        p = BiParams(Rat(1, 2), Rat(7, 3), 1, 4)
        q = BiParams(Rat(7, 3), Rat(1, 2), 1, 4)
        for m, n in degree_pairs(4):
            for i, k in grid_points(4):
                assert p2_eval((m, n), (i, k), p) == Rat(-1) ** m * p2_eval((m, n), (k, i), q)

    @pytest.mark.parametrize("d", [(1, 0), (0, 1), (1, 1), (2, 1), (0, 3)])
    def test_total_degree(self, d):
        # mixed forward differences: order m+n+1 all vanish, order m+n not all
        p = BiParams(Rat(1, 2), Rat(-1, 2), Rat(7, 3), 6)
        m, n = d
        vals = {g: p2_eval(d, g, p) for g in grid_points(6)}

        def diff(a, b):
            total = Rat(0)
            for r in range(a + 1):
                for s in range(b + 1):
                    c = (
                        Rat(-1) ** (a - r + b - s)
                        * factorial(a) // (factorial(r) * factorial(a - r))
                        * factorial(b) // (factorial(s) * factorial(b - s))
                    )
                    total += c * vals[(r, s)]
            return total

        order = m + n
        assert all(diff(a, order + 1 - a) == 0 for a in range(order + 2))
        assert any(diff(a, order - a) != 0 for a in range(order + 1))


class TestNorms:
    def test_frozen_small_norms(self):
        p = BiParams(0, 0, 0, 1)
        assert lambda2((0, 0), p) == 1
        assert lambda2((1, 0), p) == Rat(2, 3)
        assert lambda2((0, 1), p) == 2

    def test_matches_verbatim_route_at_generic_params(self):
        p = BiParams(Rat(1, 2), Rat(7, 3), 1, 5)
        for d in degree_pairs(5):
            assert lambda2(d, p) == norm_verbatim(d, p)

    def test_survives_vanishing_pochhammer_base(self):
        # alpha1 + alpha2 + 1 = 0 breaks the raw ratio form
        p = BiParams(Rat(-1, 2), Rat(-1, 2), 2, 4)
        for d in degree_pairs(4):
            assert lambda2(d, p) > 0

    @pytest.mark.parametrize("triple", PARAM_TRIPLES)
    @pytest.mark.parametrize("N", [0, 1, 3, 5])
    def test_chain_norm_ratio(self, triple, N):
        p = BiParams(*triple, N)
        for m, n in degree_pairs(N):
            assert bigLambda((m, n), p) == lambda2((m, n), p) * pochhammer(-N, m + n) ** 2

    def test_direct_orthogonality_small(self):
        p = BiParams(Rat(1, 2), Rat(-1, 2), 3, 3)
        degs = list(degree_pairs(3))
        for a, d in enumerate(degs):
            for d2 in degs[a:]:
                acc = sum(
                    weight2(g, p) * p2_eval(d, g, p) * p2_eval(d2, g, p)
                    for g in grid_points(3)
                )
                assert acc == (lambda2(d, p) if d == d2 else 0)


class TestOrthonormal:
    def test_ground_state_is_one(self):
        p = BiParams(Rat(1, 2), 3, Rat(7, 3), 4)
        for g in grid_points(4):
            assert float(q2_eval((0, 0), g, p)) == 1.0

    def test_frozen_sign_anchor(self):
        value = q2_eval((1, 0), (0, 1), BiParams(0, 0, 0, 1))
        assert value.signed_square() == Rat(-3, 2)
        assert float(value) == pytest.approx(-math.sqrt(1.5), rel=1e-15)

    def test_square_recovers_chain_product(self):
        p = BiParams(Rat(1, 2), Rat(-1, 2), 1, 4)
        for d in degree_pairs(4):
            lam = bigLambda(d, p)
            pref = pochhammer(-4, d[0] + d[1])
            for g in grid_points(4):
                hh = p2_eval(d, g, p) * pref
                sq = q2_eval(d, g, p).signed_square()
                assert abs(sq) * lam == hh * hh
                assert (sq < 0) == (hh < 0)


class TestOverlap:
    def test_level_zero_is_unit(self):
        O = overlap2(BiParams(1, 2, 3, 0))
        assert O.entries == ((1.0,),)

    def test_frozen_columns(self):
        O = overlap2(BiParams(0, 0, 0, 1))
        assert O.rows == ((0, 0), (1, 0), (0, 1))
        assert O.cols == ((0, 0), (1, 0), (0, 1))
        got = [[O.entries[r][c] for r in range(3)] for c in range(3)]
        r3, r2, r6 = math.sqrt(3), math.sqrt(2), math.sqrt(6)
        expect = [
            [1 / r3, 1 / r3, 1 / r3],
            [0.0, 1 / r2, -1 / r2],
            [-2 / r6, 1 / r6, 1 / r6],
        ]
        for gcol, ecol in zip(got, expect):
            assert gcol == pytest.approx(ecol, abs=1e-14)

    @pytest.mark.parametrize("triple", PARAM_TRIPLES)
    def test_float_unitarity(self, triple):
        numpy = pytest.importorskip("numpy")
        O = numpy.array(overlap2(BiParams(*triple, 4)).entries)
        eye = numpy.eye(O.shape[0])
        assert numpy.abs(O.T @ O - eye).max() < 1e-12
        assert numpy.abs(O @ O.T - eye).max() < 1e-12

    def test_radical_mode_matches_float(self):
        p = BiParams(Rat(1, 2), Rat(7, 3), 1, 3)
        Of = overlap2(p, mode="float")
        Orad = overlap2(p, mode="radical")
        for rf, rr in zip(Of.entries, Orad.entries):
            for vf, vr in zip(rf, rr):
                assert vf == float(vr)

    def test_squared_mode_column_sums_exactly_one(self):
        p = BiParams(Rat(-1, 2), Rat(-1, 2), 3, 4)
        Osq = overlap2(p, mode="squared")
        side = Osq.side
        for c in range(side):
            assert sum(abs(Osq.entries[r][c]) for r in range(side)) == 1

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            overlap2(BiParams(0, 0, 0, 1), mode="decimal")


class TestVerifyBi:
    @pytest.mark.parametrize("check", BI_CHECK_NAMES)
    def test_all_checks_pass_small(self, check):
        rep = verify_bi(check, BiParams(Rat(1, 2), Rat(-1, 2), 3, 3))
        assert rep.passed, [c.to_dict() for c in rep.checks if not c.passed]

    @pytest.mark.parametrize("check", BI_CHECK_NAMES)
    def test_level_zero_vacuous(self, check):
        assert verify_bi(check, BiParams(Rat(7, 3), Rat(1, 2), 1, 0)).passed

    def test_half_integer_corner(self):
        p = BiParams(Rat(-1, 2), Rat(-1, 2), Rat(-1, 2), 2)
        for check in BI_CHECK_NAMES:
            assert verify_bi(check, p).passed, check

    def test_unknown_identifier(self):
        with pytest.raises(ValueError):
            verify_bi("orthogonality-typo", BiParams(0, 0, 0, 1))

    def test_report_shape(self):
        rep = verify_bi("structure", BiParams(0, 0, 0, 2))
        names = [c.name for c in rep.checks]
        assert names == [
            "structure[raise-i]",
            "structure[raise-k]",
            "structure[lower-i]",
            "structure[lower-k]",
        ]
        d = rep.to_dict()
        assert d["suite"] == "bi"
        assert d["params"]["N"] == 2

    def test_float_residuals_reported(self):
        rep = verify_bi("normalized-recurrence-float", BiParams(0, 0, 0, 3))
        for c in rep.checks:
            assert c.passed
            assert float(c.max_residual) < 1e-12


class TestOperatorHandValues:
    def test_first_operator_eigenvalues_level_one(self):
        # acting on P_{1,0} at unit level the first operator returns -2 P_{1,0}
        p = BiParams(0, 0, 0, 1)
        vals = {g: p2_eval((1, 0), g, p) for g in grid_points(1)}
        for (i, k), v in vals.items():
            y1 = i * (k + 1)
            y2 = k * (i + 1)
            acc = -(y1 + y2) * v
            if i:
                acc += y1 * vals[(i - 1, k + 1)]
            if k:
                acc += y2 * vals[(i + 1, k - 1)]
            assert acc == -2 * v

    def test_second_operator_spectrum_level_one(self):
        p = BiParams(0, 0, 0, 1)
        spectrum = sorted(
            -(m + n) * (m + n + p.a123 + 2) for (m, n) in degree_pairs(1)
        )
        assert spectrum == [-3, -3, 0]

    @pytest.mark.parametrize("triple", PARAM_TRIPLES)
    def test_eigenvalue_pairs_separate_degrees(self, triple):
        p = BiParams(*triple, 6)
        seen = set()
        for m, n in degree_pairs(6):
            pair = (-m * (m + p.a12 + 1), -(m + n) * (m + n + p.a123 + 2))
            assert pair not in seen
            seen.add(pair)


class TestLadderCoefficientConsistency:
    """The grouped nine-point coefficients are products of the four level
    transition amplitudes; the explicit displays must agree with them."""

    @staticmethod
    def _amps(N, a1, a2, a3):
        from hahnkit.hahn_bi import _coef_alpha, _coef_beta, _coef_delta, _coef_gamma

        args = (EpsFrac.linear(a1, 1), EpsFrac.linear(a2, 3), EpsFrac.linear(a3, 5))

        def ev(fn, mm, nn):
            sign, sq = fn(mm, nn, N, *args)
            return sign * math.sqrt(float(sq))

        return (
            lambda mm, nn: ev(_coef_alpha, mm, nn),
            lambda mm, nn: ev(_coef_beta, mm, nn),
            lambda mm, nn: ev(_coef_gamma, mm, nn),
            lambda mm, nn: ev(_coef_delta, mm, nn),
        )

    @staticmethod
    def _explicit(fn, m, n, N, a1, a2, a3):
        args = (EpsFrac.linear(a1, 1), EpsFrac.linear(a2, 3), EpsFrac.linear(a3, 5))
        out = fn(m, n, N, *args)
        if isinstance(out, tuple):
            return out[0] * math.sqrt(float(out[1]))
        return out

    @pytest.mark.parametrize("mn", [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1)])
    def test_grouped_products_match_explicit(self, mn):
        from hahnkit.hahn_bi import (
            _coef_rec_a,
            _coef_rec_b,
            _coef_rec_c,
            _coef_rec_d,
            _coef_rec_e,
        )

        m, n = mn
        N, a1, a2, a3 = 6, Rat(1, 2), Rat(3), Rat(7, 3)
        al, be, ga, de = self._amps(N, a1, a2, a3)

        def explicit(fn, mm, nn):
            return self._explicit(fn, mm, nn, N, a1, a2, a3)

        assert al(m, n) * be(m + 1, n) == pytest.approx(explicit(_coef_rec_a, m + 1, n), rel=1e-12)
        assert al(m - 1, n) * be(m, n) == pytest.approx(explicit(_coef_rec_a, m, n), rel=1e-12)
        assert al(m, n) * ga(m, n + 1) + be(m, n + 1) * de(m, n + 1) == pytest.approx(
            explicit(_coef_rec_b, m, n + 1), rel=1e-12
        )
        assert al(m, n - 1) * ga(m, n) + be(m, n) * de(m, n) == pytest.approx(
            explicit(_coef_rec_b, m, n), rel=1e-12
        )
        assert ga(m - 1, n + 2) * de(m, n + 1) == pytest.approx(
            explicit(_coef_rec_c, m, n + 2), rel=1e-12
        )
        assert ga(m, n) * de(m + 1, n - 1) == pytest.approx(
            explicit(_coef_rec_c, m + 1, n), rel=1e-12
        )
        assert al(m, n) * de(m + 1, n) + be(m + 1, n - 1) * ga(m, n) == pytest.approx(
            explicit(_coef_rec_d, m + 1, n), rel=1e-12
        )
        assert al(m - 1, n + 1) * de(m, n + 1) + be(m, n) * ga(m - 1, n + 1) == pytest.approx(
            explicit(_coef_rec_d, m, n + 1), rel=1e-12
        )
        assert al(m, n) ** 2 + be(m, n) ** 2 + ga(m, n) ** 2 + de(m, n + 1) ** 2 == pytest.approx(
            explicit(_coef_rec_e, m, n), rel=1e-12
        )
