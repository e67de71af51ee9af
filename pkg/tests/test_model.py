"""Algebraic layer: frozen point values and the structural invariants."""

import math

import pytest
from hypothesis import given, settings, strategies as st

from sigmak import (DomainError, PhasePoint, RegionLabel, SigmaParams,
                    SingularityError, UndefinedCurvatureError, binomial,
                    classify_region, critical_k, d2alpha_dk2, dl_dk, l_of_k,
                    main_term_pi, nullcline_alpha, sigma_of, vector_field)

P214 = SigmaParams(2, 1, 4.0)
P226 = SigmaParams(2, 2, 6.0)
P231 = SigmaParams(2, 3, 1.0)


def test_params_validation():
    with pytest.raises(DomainError):
        SigmaParams(1, 1, 1.0)
    with pytest.raises(DomainError):
        SigmaParams(2, 0, 1.0)
    with pytest.raises(DomainError):
        SigmaParams(2, 4, 1.0)  # i > 2n-1
    with pytest.raises(DomainError):
        SigmaParams(2, 1, math.inf)
    with pytest.raises(DomainError):
        PhasePoint(math.nan, 0.0)


def test_binomial_values():
    assert binomial(2, 0) == 1
    assert binomial(4, 2) == 6
    assert binomial(4, 1) == 4
    with pytest.raises(DomainError):
        binomial(3, 4)
    with pytest.raises(DomainError):
        binomial(65, 1)
    with pytest.raises(DomainError):
        binomial(4, -1)


def test_l_of_k_values():
    assert l_of_k(P214, 1.0) == pytest.approx(2.0, abs=1e-15)
    assert l_of_k(P231, 1.0) == pytest.approx(1.0, abs=1e-15)
    assert l_of_k(SigmaParams(2, 2, 0.0), 5.0) == pytest.approx(-2.5, abs=1e-15)
    with pytest.raises(SingularityError):
        l_of_k(P231, 0.0)
    # c = 0 reduced form is defined at k = 0
    assert l_of_k(SigmaParams(2, 2, 0.0), 0.0) == 0.0


def test_l_of_k_recovers_sigma():
    for params in (P214, P226, P231, SigmaParams(3, 4, -1.0), SigmaParams(4, 5, 0.7)):
        for k in (0.3, 1.1, -0.7, 2.5, -2.2):
            l = l_of_k(params, k)
            sig = sigma_of(params.n, params.i, l, k)
            scale = max(1.0, abs(params.c), params.weight * abs(l) * abs(k) ** (params.i - 1))
            assert abs(sig - params.c) <= 1e-12 * scale


def test_dl_dk_values():
    assert dl_dk(P214, 1.0) == pytest.approx(-2.0, abs=1e-15)
    assert dl_dk(P231, 1.0) == pytest.approx(-2.0, abs=1e-15)
    assert dl_dk(SigmaParams(2, 2, 0.0), 1.0) == pytest.approx(-0.5, abs=1e-15)


def test_dl_dk_matches_central_difference():
    for params in (P214, P226, P231):
        for k in (0.5, 1.3, 2.4, -1.7):
            h = 1e-6 * abs(k)
            num = (l_of_k(params, k + h) - l_of_k(params, k - h)) / (2 * h)
            assert dl_dk(params, k) == pytest.approx(num, rel=1e-5)


def test_sigma_of_values():
    assert sigma_of(2, 1, 2.0, 1.0) == pytest.approx(4.0)
    assert sigma_of(2, 3, 1.0, 1.0) == pytest.approx(1.0)
    assert sigma_of(2, 2, 123.0, 0.0) == 0.0
    assert sigma_of(3, 5, 7.0, 0.0) == 0.0


def test_critical_values_c_positive():
    cv = critical_k(P214)
    assert cv.k_c2_pos == pytest.approx(1.0, abs=1e-14)
    assert cv.k_c1_pos == pytest.approx(4.0 / 3.0, abs=1e-14)
    assert cv.k_c1_neg is None and cv.k_c2_neg is None

    cv = critical_k(P226)
    assert cv.k_c2_pos == pytest.approx(math.sqrt(1.2), rel=1e-14)
    assert cv.k_c1_pos == pytest.approx(math.sqrt(2.0), rel=1e-14)
    assert cv.k_c2_neg == pytest.approx(-math.sqrt(1.2), rel=1e-14)
    assert cv.k_c1_neg == pytest.approx(-math.sqrt(2.0), rel=1e-14)
    assert 0.0 < cv.k_c2_pos < cv.k_c1_pos


def test_critical_values_absent():
    cv = critical_k(SigmaParams(2, 2, -1.0))
    assert cv == critical_k(SigmaParams(2, 2, 0.0))
    assert cv.k_c1_pos is None and cv.k_c2_pos is None
    assert cv.k_c1_neg is None and cv.k_c2_neg is None


def test_critical_values_odd_negative_c():
    # real negative roots exist for odd i with c < 0 (alpha-axis mirror)
    cv = critical_k(SigmaParams(2, 3, -1.0))
    assert cv.k_c2_pos is None and cv.k_c1_pos is None
    assert cv.k_c2_neg == pytest.approx(-0.5 ** (1.0 / 3.0), rel=1e-14)
    assert abs(l_of_k(SigmaParams(2, 3, -1.0), cv.k_c2_neg) - 2 * cv.k_c2_neg) < 1e-10
    assert abs(l_of_k(SigmaParams(2, 3, -1.0), cv.k_c1_neg) - cv.k_c1_neg) < 1e-10


def test_critical_values_bisection_oracle():
    for params in (P214, P226, P231, SigmaParams(3, 2, 2.0)):
        cv = critical_k(params)
        for r, mult in [(v, 2.0) for v in cv.k_c2_lines()] + \
                       [(v, 1.0) for v in cv.k_c1_points()]:
            lo, hi = 0.8 * r, 1.2 * r
            if lo > hi:
                lo, hi = hi, lo
            f = lambda k: l_of_k(params, k) - mult * k
            assert f(lo) * f(hi) < 0
            for _ in range(100):
                mid = 0.5 * (lo + hi)
                if f(lo) * f(mid) <= 0:
                    hi = mid
                else:
                    lo = mid
            assert 0.5 * (lo + hi) == pytest.approx(r, abs=1e-12, rel=1e-12)


def test_vector_field_values():
    assert vector_field(P214, PhasePoint(0.0, 0.0)) == (0.0, 0.0)
    dk, da = vector_field(P214, PhasePoint(0.0, 4.0 / 3.0))
    assert abs(dk) < 1e-12 and abs(da) < 1e-12
    assert vector_field(P214, PhasePoint(1.0, 2.0)) == (-4.0, 3.0)


def test_nullcline_values():
    assert nullcline_alpha(P214, 4.0 / 3.0) == pytest.approx(0.0, abs=1e-7)
    assert nullcline_alpha(P214, 4.0) == pytest.approx(math.sqrt(32.0), rel=1e-14)
    assert nullcline_alpha(P214, 1.0) is None
    # returned point kills the alpha-component of the field
    for k in (1.5, 2.0, 3.7, 9.0):
        a = nullcline_alpha(P214, k)
        _, da = vector_field(P214, PhasePoint(a, k))
        assert abs(da) < 1e-9 * (1 + k * k)


def test_main_term_values():
    assert main_term_pi(P214, PhasePoint(0.5, 1.0)) > 0.0
    assert main_term_pi(SigmaParams(2, 1, 0.0), PhasePoint(1.0, 1.0)) == pytest.approx(24.0, rel=1e-14)
    k0 = 1.7
    l = l_of_k(P214, k0)
    assert main_term_pi(P214, PhasePoint(0.0, k0)) == pytest.approx(
        (k0 * k0 - k0 * l) ** 2, rel=1e-13)


def test_d2alpha_signs_and_errors():
    # even i: always convex (negative for alpha > 0)
    for a, k in ((0.5, 1.7), (2.0, 0.4), (1.0, -0.8), (0.3, -2.0)):
        assert d2alpha_dk2(P226, PhasePoint(a, k)) < 0.0
    # odd i >= 3: sign is -sign(alpha) in the k > 0 half plane
    assert d2alpha_dk2(P231, PhasePoint(0.7, 1.4)) < 0.0
    assert d2alpha_dk2(P231, PhasePoint(-0.7, 1.4)) > 0.0
    with pytest.raises(UndefinedCurvatureError):
        d2alpha_dk2(P214, PhasePoint(1.0, critical_k(P214).k_c2_pos))
    with pytest.raises(UndefinedCurvatureError):
        d2alpha_dk2(P214, PhasePoint(0.0, 2.0))


def test_classify_region_examples():
    assert classify_region(P214, PhasePoint(0.5, 2.0)) is RegionLabel.BAND_ABOVE_KC1
    assert classify_region(P214, PhasePoint(0.5, 1.0)) is RegionLabel.CONSTANT_K_LINE
    assert classify_region(P214, PhasePoint(0.5, -1.0)) is RegionLabel.LOWER_HALF
    assert classify_region(P214, PhasePoint(0.0, 0.0)) is RegionLabel.STATIONARY_ORIGIN
    assert classify_region(P214, PhasePoint(0.0, 4.0 / 3.0)) is RegionLabel.STATIONARY_KC1
    assert classify_region(P214, PhasePoint(0.5, 1.2)) is RegionLabel.BAND_KC2_TO_KC1
    assert classify_region(P214, PhasePoint(0.5, 0.5)) is RegionLabel.BAND_ZERO_TO_KC2
    assert classify_region(P226, PhasePoint(0.5, -0.5)) is RegionLabel.MIRROR_OF_ABOVE
    # boundary ties go to the band closed toward the stationary structure
    assert classify_region(P214, PhasePoint(0.5, 4.0 / 3.0)) is RegionLabel.BAND_ABOVE_KC1


_PARAMS_POOL = [
    SigmaParams(2, 1, 4.0),
    SigmaParams(2, 2, 6.0),
    SigmaParams(2, 3, 1.0),
    SigmaParams(3, 2, 2.0),
    SigmaParams(3, 4, -1.0),
    SigmaParams(2, 3, -1.0),
    SigmaParams(2, 2, 0.0),
    SigmaParams(4, 5, 0.7),
]

_k_values = st.floats(min_value=-4.0, max_value=4.0,
                      allow_nan=False, allow_infinity=False)
_a_values = st.floats(min_value=-4.0, max_value=4.0,
                      allow_nan=False, allow_infinity=False)


def _valid_k(params, k):
    return abs(k) > 1e-3 or params.i == 1 or params.c == 0.0


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(_PARAMS_POOL), _k_values)
def test_property_constraint_closure(params, k):
    if not _valid_k(params, k):
        return
    l = l_of_k(params, k)
    sig = sigma_of(params.n, params.i, l, k)
    scale = max(1.0, abs(params.c),
                params.weight * abs(l) * abs(k) ** (params.i - 1))
    assert abs(sig - params.c) <= 1e-12 * scale


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(_PARAMS_POOL), _a_values, _k_values)
def test_property_reversibility(params, a, k):
    if not _valid_k(params, k):
        return
    dk, da = vector_field(params, PhasePoint(a, k))
    dk_m, da_m = vector_field(params, PhasePoint(-a, k))
    assert dk_m == -dk
    assert da_m == da


@settings(max_examples=300, deadline=None)
@given(st.sampled_from([p for p in _PARAMS_POOL if p.i % 2 == 0]),
       _a_values, _k_values)
def test_property_even_i_mirror(params, a, k):
    if not _valid_k(params, k) or k == 0.0:
        return
    dk, da = vector_field(params, PhasePoint(a, k))
    dk_m, da_m = vector_field(params, PhasePoint(a, -k))
    assert dk_m == pytest.approx(-dk, rel=1e-12, abs=1e-12)
    assert da_m == pytest.approx(da, rel=1e-12, abs=1e-12)


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(_PARAMS_POOL), _a_values, _k_values)
def test_property_sign_law(params, l, k):
    sig_pos = sigma_of(params.n, params.i, l, k)
    sig_neg = sigma_of(params.n, params.i, -l, -k)
    expect = sig_pos if params.i % 2 == 0 else -sig_pos
    assert sig_neg == pytest.approx(expect, rel=1e-12, abs=1e-12)


@settings(max_examples=300, deadline=None)
@given(st.sampled_from([p for p in _PARAMS_POOL if p.i % 2 == 1 and p.c != 0.0]),
       _a_values, _k_values)
def test_property_odd_i_c_flip(params, a, k):
    if not _valid_k(params, k) or k == 0.0:
        return
    flipped = SigmaParams(params.n, params.i, -params.c)
    dk, da = vector_field(params, PhasePoint(a, k))
    dk_f, da_f = vector_field(flipped, PhasePoint(a, -k))
    assert dk_f == pytest.approx(-dk, rel=1e-12, abs=1e-12)
    assert da_f == pytest.approx(da, rel=1e-12, abs=1e-12)


@settings(max_examples=300, deadline=None)
@given(st.sampled_from([p for p in _PARAMS_POOL if p.c != 0.0]), _k_values)
def test_property_l_minus_2k_identity(params, k):
    if not _valid_k(params, k) or k == 0.0:
        return
    n, i = params.n, params.i
    lhs = l_of_k(params, k) - 2.0 * k
    rhs = params.c_tilde * k ** (1 - i) - (2 * n + i - 1) / i * k
    assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-12)


def test_nullcline_convexity_and_asymptote():
    # second difference negative over k > k_c1; alpha/k -> sqrt((2n-1)/i)
    for params in (P214, P231):
        k_c1 = critical_k(params).k_c1_pos
        ks = [k_c1 + 0.2 + 0.05 * j for j in range(200)]
        vals = [nullcline_alpha(params, k) for k in ks]
        for j in range(1, len(ks) - 1):
            second = vals[j + 1] - 2 * vals[j] + vals[j - 1]
            assert second < 0.0
        limit = math.sqrt((2 * params.n - 1) / params.i)
        big = 1e6
        assert nullcline_alpha(params, big) / big == pytest.approx(limit, rel=1e-5)
