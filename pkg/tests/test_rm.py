"""Reed-Muller construction: dimensions, distances, weight polynomials."""

import numpy as np
import pytest

import rmbetti as rb
from rmbetti import (ExponentPoly, ParameterError, PreconditionError,
                     RankDeficientFormsError, WitnessParameterError, field)
from rmbetti import linalg
from rmbetti.rm import binom, validate_params


def test_binomial_convention():
    assert binom(5, 2) == 10
    assert binom(2, 4) == 0
    assert binom(-1, 0) == 0
    assert binom(3, -1) == 0


def test_monomial_basis_examples():
    assert rb.monomial_basis(2, 0, 3) == [(0, 0, 0)]
    assert len(rb.monomial_basis(2, 2, 4)) == 11
    assert len(rb.monomial_basis(3, 2, 2)) == 6
    # brute-force count cross-check for a sample
    count = sum(1 for a in range(3) for b in range(3) if a + b <= 2)
    assert count == 6


def test_monomial_basis_is_graded_prefix():
    for r in range(4):
        small = rb.monomial_basis(3, r, 2)
        big = rb.monomial_basis(3, r + 1, 2)
        assert big[: len(small)] == small
        assert all(sum(v) <= r for v in small)


def test_monomial_basis_validation():
    with pytest.raises(ParameterError):
        rb.monomial_basis(3, 5, 2)  # r > m(q-1)
    with pytest.raises(ParameterError):
        rb.monomial_basis(3, -1, 2)
    with pytest.raises(ParameterError):
        validate_params(3, 0, 0)


def test_dimension_formulas_examples():
    assert rb.dim_assmus_key(2, 2, 4) == 11
    assert rb.dim_inclusion_exclusion(2, 2, 4) == 15 - 4 * 1
    for q, m in [(2, 3), (5, 2)]:
        assert rb.dim_assmus_key(q, 0, m) == 1
    assert rb.dim_assmus_key(3, 4, 2) == 9  # full space
    assert rb.dim_inclusion_exclusion(3, 2, 2) == 6
    assert rb.dim_inclusion_exclusion(4, 4, 2) == 13


def test_dimension_simplifies_below_q():
    for q in (3, 4, 5, 7):
        for m in (1, 2, 3):
            for r in range(min(q, m * (q - 1) + 1)):
                assert rb.dim_inclusion_exclusion(q, r, m) == binom(m + r, m)


def test_dimension_full_space():
    for q, m in [(2, 3), (3, 2), (4, 2), (5, 1)]:
        r = m * (q - 1)
        assert rb.dim_inclusion_exclusion(q, r, m) == q ** m
        assert rb.dim_assmus_key(q, r, m) == q ** m


def test_full_space_binomial_identity_by_hand():
    # q=3, m=2: C(6,2) - 2*C(3,2) + C(0,2) = 15 - 6 + 0 = 9
    assert binom(6, 2) - 2 * binom(3, 2) + binom(0, 2) == 9
    assert rb.full_space_binomial_identity(3, 2)
    # q=2, m=1: C(2,1) - C(0,1) = 2
    assert rb.full_space_binomial_identity(2, 1)
    assert rb.full_space_binomial_identity(5, 4)


def test_ts_split():
    assert rb.ts_split(4, 4) == (1, 1)
    assert rb.ts_split(3, 2) == (1, 0)
    assert rb.ts_split(2, 3) == (3, 0)
    for q in (2, 3, 4, 5, 9):
        for r in range(3 * (q - 1) + 1):
            t, s = rb.ts_split(q, r)
            assert r == t * (q - 1) + s and 0 <= s <= q - 2


def test_min_distance_formula_examples():
    assert rb.min_distance_formula(3, 2, 2) == 3
    assert rb.min_distance_formula(2, 2, 4) == 4
    for q, m in [(2, 2), (3, 2), (4, 2), (5, 1)]:
        assert rb.min_distance_formula(q, m * (q - 1), m) == 1


def test_point_order_origin_first_and_lexicographic():
    order = rb.point_order(2, 2)
    assert [tuple(p) for p in order.points] == [(0, 0), (0, 1), (1, 0), (1, 1)]
    order9 = rb.point_order(3, 2)
    pts = [tuple(int(x) for x in p) for p in order9.points]
    assert pts[0] == (0, 0)
    assert len(set(pts)) == 9
    assert pts == sorted(pts)


def test_evaluate_examples():
    gf = field(2)
    ones = ExponentPoly.constant(gf, 2, 1)
    assert np.array_equal(ones.evaluate(), [1, 1, 1, 1])
    x1 = ExponentPoly.variable(gf, 2, 0)
    assert np.array_equal(x1.evaluate(), [0, 0, 1, 1])


def test_exponent_poly_reduction_and_arithmetic():
    gf = field(3)
    x = ExponentPoly.variable(gf, 1, 0)
    assert (x ** 3).terms == x.terms  # X^3 = X on values
    assert (x ** 5).terms == (x ** 3 * x ** 2 * ExponentPoly.constant(gf, 1, 1)).terms
    cube = x ** 2 * x
    assert np.array_equal(cube.evaluate(), x.evaluate())
    zero = x - x
    assert zero.terms == {} and zero.total_degree() == -1
    with pytest.raises(ParameterError):
        ExponentPoly(gf, 2, {(3, 0): 1})  # exponent not reduced


def test_build_code_examples():
    code = rb.build_code(2, 1, 2)
    assert (code.n, code.k, code.d) == (4, 3, 2)
    rep = rb.build_code(3, 0, 2)
    assert (rep.n, rep.k) == (9, 1)
    full = rb.build_code(2, 2, 2)
    assert (full.n, full.k) == (4, 4)
    assert full.H.shape == (0, 4)
    assert not np.any(linalg.matmul(code.gf, code.G, code.H.T))
    assert linalg.rank(code.gf, code.G) == code.k
    with pytest.raises(ParameterError):
        rb.build_code(3, 9, 2)


def test_every_generator_row_annihilated_by_parity_check():
    for (q, r, m) in [(2, 1, 3), (3, 2, 2), (4, 2, 2), (5, 3, 1)]:
        code = rb.build_code(q, r, m)
        assert not np.any(linalg.matmul(code.gf, code.G, code.H.T))
        assert linalg.rank(code.gf, code.H) == code.n - code.k


def test_dimension_monotone_and_distance_antitone():
    for q in (2, 3, 4):
        for m in (1, 2, 3):
            dims = [rb.dim_inclusion_exclusion(q, r, m)
                    for r in range(m * (q - 1) + 1)]
            dists = [rb.min_distance_formula(q, r, m)
                     for r in range(m * (q - 1) + 1)]
            assert dims == sorted(dims)
            assert dists == sorted(dists, reverse=True)


# -- minimum-weight polynomials ------------------------------------------------


def test_min_weight_poly_support_pins_first_coordinates():
    f = rb.min_weight_poly(3, 2, 2)  # t=1, s=0, pinned value 0
    vals = f.evaluate()
    order = rb.point_order(3, 2)
    supp = rb.support(vals)
    assert len(supp) == 3 == rb.min_distance_formula(3, 2, 2)
    assert all(order.points[i][0] == 0 for i in supp)


def test_min_weight_poly_gf2_is_affine_coordinate():
    # q=2, r=1: pinning X_1 = 1 gives exactly the polynomial X_1
    f = rb.min_weight_poly(2, 1, 2, pinned=[1])
    assert f.terms == {(1, 0): 1}
    assert rb.weight(f.evaluate()) == 2


def test_min_weight_poly_q4_mixed_split():
    f = rb.min_weight_poly(4, 4, 2)  # t=1, s=1
    vals = f.evaluate()
    assert rb.weight(vals) == 3 == rb.min_distance_formula(4, 4, 2)
    assert rb.build_code(4, 4, 2).contains(vals)


def test_min_weight_poly_validation():
    with pytest.raises(WitnessParameterError):
        rb.min_weight_poly(4, 4, 2, scale=0)
    with pytest.raises(WitnessParameterError):
        rb.min_weight_poly(5, 2, 2, excluded=[1, 1])
    with pytest.raises(WitnessParameterError):
        rb.min_weight_poly(3, 2, 2, pinned=[0, 0])  # t = 1, not 2


def test_min_weight_poly_randomized_parameters():
    rng = np.random.default_rng(55)
    for (q, r, m) in [(3, 3, 2), (4, 2, 2), (5, 5, 2), (8, 3, 2), (9, 9, 2)]:
        code = rb.build_code(q, r, m)
        t, s = rb.ts_split(q, r)
        for _ in range(5):
            pinned = rng.integers(0, q, size=t).tolist()
            excluded = rng.permutation(q)[:s].tolist()
            scale = int(rng.integers(1, q))
            f = rb.min_weight_poly(q, r, m, scale=scale, pinned=pinned,
                                   excluded=excluded)
            vals = f.evaluate(code.order)
            assert rb.weight(vals) == code.d
            assert code.contains(vals)


def test_substitute_linear_forms_examples():
    gf = field(2)
    f = ExponentPoly.variable(gf, 2, 0)
    ident = linalg.identity(gf, 2)
    assert np.array_equal(rb.substitute_linear_forms(f, ident[:1]), f.evaluate())
    mixed = np.array([[1, 1]], dtype=gf.dtype)
    assert np.array_equal(rb.substitute_linear_forms(f, mixed), [0, 1, 1, 0])
    with pytest.raises(RankDeficientFormsError):
        rb.substitute_linear_forms(f, np.zeros((1, 2), dtype=gf.dtype))


def test_substitute_linear_forms_preserves_weight_and_membership():
    rng = np.random.default_rng(77)
    for (q, r, m) in [(3, 2, 2), (4, 4, 2), (2, 2, 3)]:
        code = rb.build_code(q, r, m)
        f = rb.min_weight_poly(q, r, m)
        t, _ = rb.ts_split(q, r)
        w = t + 1
        for trial in range(8):
            while True:
                forms = rng.integers(0, q, size=(w, m)).astype(code.gf.dtype)
                if linalg.rank(code.gf, forms) == w:
                    break
            shifts = rng.integers(0, q, size=w).tolist() if trial % 2 else None
            word = rb.substitute_linear_forms(f, forms, shifts)
            assert rb.weight(word) == code.d
            assert code.contains(word)


def test_interpolation_basis_identity_and_unity():
    for (q, m) in [(2, 1), (2, 2), (3, 2)]:
        gf = field(q)
        basis = rb.interpolation_basis(q, m)
        stacked = np.stack([f.evaluate() for f in basis])
        assert np.array_equal(stacked, linalg.identity(gf, q ** m))
        total = basis[0]
        for f in basis[1:]:
            total = total + f
        assert np.array_equal(total.evaluate(), np.ones(q ** m, dtype=gf.dtype))


def test_interpolation_basis_gf2_m1_explicit():
    one_plus_x, x = rb.interpolation_basis(2, 1)
    assert one_plus_x.terms == {(0,): 1, (1,): 1}
    assert x.terms == {(1,): 1}


def test_interpolate_inverts_evaluate():
    rng = np.random.default_rng(123)
    for (q, m) in [(2, 3), (3, 2), (4, 2), (5, 1)]:
        gf = field(q)
        order = rb.point_order(q, m)
        for _ in range(5):
            terms = {}
            for _ in range(4):
                exps = tuple(int(x) for x in rng.integers(0, q, size=m))
                coef = int(rng.integers(1, q))
                terms[exps] = coef
            f = ExponentPoly(gf, m, terms)
            assert rb.interpolate(order, f.evaluate(order)) == f
        # degree detection: membership in the order-r code
        for r in range(m * (q - 1) + 1):
            word = rb.min_weight_poly(q, r, m).evaluate(order)
            assert rb.codeword_degree(order, word) <= r


def test_interpolation_degree_agrees_with_parity_membership():
    # two independent membership routes: H @ c = 0 versus the total degree
    # of the interpolating polynomial
    rng = np.random.default_rng(31)
    code = rb.build_code(3, 2, 2)
    words = [rb.min_weight_poly(3, 2, 2, pinned=[p]).evaluate() for p in range(3)]
    words.append(np.zeros(9, dtype=code.gf.dtype))
    for _ in range(30):
        words.append(rng.integers(0, 3, size=9).astype(code.gf.dtype))
    for w in words:
        by_parity = code.contains(w)
        by_degree = rb.codeword_degree(code.order, w) <= code.r
        assert by_parity == by_degree


def test_sum_zero_code_equality():
    for (q, m) in [(2, 2), (3, 2), (2, 3)]:
        assert rb.sum_zero_code_equal(q, m)
        assert rb.sum_zero_code_equal(q, m, check_generators=False)
    # dimension check: [q^m, q^m - 1, 2]
    code = rb.build_code(3, 3, 2)
    assert (code.n, code.k, code.d) == (9, 8, 2)


# -- witness polynomials -------------------------------------------------------


def test_witness_large_field_examples():
    for (q, m, r, wt, d) in [(4, 2, 4, 4, 3), (5, 2, 5, 6, 4), (4, 3, 4, 16, 12)]:
        poly = rb.witness_poly_large_field(q, m, r)
        assert poly.total_degree() == r
        vals = poly.evaluate()
        assert rb.weight(vals) == wt
        assert rb.min_distance_formula(q, r, m) == d
        assert wt > d
        assert rb.build_code(q, r, m).contains(vals)


def test_witness_large_field_deeper_split():
    # t = 2: q=4, r=7 = 2*3+1, m=3
    poly = rb.witness_poly_large_field(4, 3, 7)
    assert poly.total_degree() == 7
    t = 2
    assert rb.weight(poly.evaluate()) == 2 * (4 - 2) * 4 ** (3 - t - 1)


def test_witness_large_field_preconditions():
    with pytest.raises(PreconditionError):
        rb.witness_poly_large_field(3, 3, 3)  # q must exceed 3
    with pytest.raises(PreconditionError):
        rb.witness_poly_large_field(4, 2, 3)  # s = 0
    with pytest.raises(PreconditionError):
        rb.witness_poly_large_field(4, 1, 1)  # m too small (s = 1 but m = 1)
    with pytest.raises(PreconditionError):
        rb.witness_poly_large_field(4, 2, 1)  # r too small
    with pytest.raises(ParameterError):
        rb.witness_poly_large_field(4, 1, 4)  # r out of range altogether


def test_witness_ternary_examples():
    # weights 8 > 6 (m=3) and 24 > 18 (m=4) occur at r = 3, where s = 1
    for (m, r, wt, d) in [(3, 3, 8, 6), (4, 3, 24, 18), (4, 5, 8, 6)]:
        poly = rb.witness_poly_ternary(m, r)
        assert poly.total_degree() == r
        vals = poly.evaluate()
        assert rb.weight(vals) == wt
        assert rb.min_distance_formula(3, r, m) == d
        assert wt > d
        assert rb.build_code(3, r, m).contains(vals)


def test_witness_ternary_preconditions():
    with pytest.raises(PreconditionError):
        rb.witness_poly_ternary(2, 3)  # t = 1 > m - 2 = 0
    with pytest.raises(PreconditionError):
        rb.witness_poly_ternary(3, 4)  # s = 0: no witness of this shape
    with pytest.raises(PreconditionError):
        rb.witness_poly_ternary(4, 4)  # s = 0 here as well
