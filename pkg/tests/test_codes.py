import pytest

from cycenum import (
    build_ext_field,
    codeword_from_trace,
    coset_count_formula,
    cosets_full,
    factor_xn_minus_1,
    generator_matrix,
    irreducible_cyclic_code,
    minimal_polynomial,
)
from cycenum import poly
from cycenum.errors import InvalidParameters, NotCoprime, OrderMismatch
from gf_utils import enumerate_span, gf_rank


def eval_in_field(p, x, F):
    """Horner evaluation of a base-field polynomial at a field element."""
    acc = 0
    for c in reversed(p):
        acc = F.add(F.mul(acc, x), c)
    return acc


# ---------------------------------------------------------------------------
# minimal polynomials


def test_minimal_polynomial_of_coset_zero():
    part = cosets_full(15, 2)
    F = build_ext_field(2, 4)
    assert minimal_polynomial(0, part, F) == [1, 1]  # X - 1 over GF(2)


def test_minimal_polynomial_c5_is_the_quadratic():
    part = cosets_full(15, 2)
    F = build_ext_field(2, 4)
    m5 = minimal_polynomial(5, part, F)
    assert m5 == [1, 1, 1]
    # roots alpha^5 and alpha^10 (the two elements of order 3)
    for eta in (5, 10):
        assert eval_in_field(m5, F.alpha_pow(eta), F) == 0


def test_minimal_polynomial_degrees_match_coset_sizes():
    part = cosets_full(15, 2)
    F = build_ext_field(2, 4)
    degs = [poly.degree(minimal_polynomial(c.leader, part, F)) for c in part.cosets]
    assert degs == [c.size for c in part.cosets]
    assert sorted(degs) == [1, 2, 4, 4, 4]


def test_minimal_polynomial_order_mismatch():
    part = cosets_full(7, 2)
    F = build_ext_field(2, 4)  # 7 does not divide 15
    with pytest.raises(OrderMismatch):
        minimal_polynomial(1, part, F)


def test_minimal_polynomial_wrong_multiplier():
    part = cosets_full(16, 3)
    F = build_ext_field(2, 4)
    with pytest.raises(InvalidParameters):
        minimal_polynomial(1, part, F)


# ---------------------------------------------------------------------------
# factorization of x^n - 1


def test_factor_n1():
    assert factor_xn_minus_1(1, 2) == [[1, 1]]
    assert factor_xn_minus_1(1, 3) == [[2, 1]]


def test_factor_x5_minus_1_gf2():
    # oracle: exhaustive irreducibility of the quartic by trial division
    quartic = [1, 1, 1, 1, 1]
    assert all(poly.poly_mod(quartic, g, 2)
               for d in (1, 2) for g in poly.all_monic(2, d))
    assert factor_xn_minus_1(5, 2) == [[1, 1], quartic]


def test_factor_x15_minus_1_gf2():
    factors = factor_xn_minus_1(15, 2)
    assert len(factors) == 5 == coset_count_formula(15, 2)
    prod = [1]
    for f in factors:
        prod = poly.poly_mul(prod, f, 2)
    assert prod == poly.x_pow_n_minus_1(15, 2)
    assert all(poly.is_irreducible(f, 2) for f in factors)
    part = cosets_full(15, 2)
    assert [poly.degree(f) for f in factors] == [c.size for c in part.cosets]


@pytest.mark.parametrize("n,q", [(8, 3), (12, 5), (11, 3), (20, 3), (13, 5)])
def test_factor_product_and_count(n, q):
    factors = factor_xn_minus_1(n, q)
    prod = [1]
    for f in factors:
        prod = poly.poly_mul(prod, f, q)
    assert prod == poly.x_pow_n_minus_1(n, q)
    assert len(factors) == coset_count_formula(n, q)
    assert all(poly.is_irreducible(f, q) for f in factors)


def test_factor_large_order_splitting_case():
    # ord_2(113) = 28: splitting happens in GF(2^28), far beyond table scale
    factors = factor_xn_minus_1(113, 2)
    assert sorted(poly.degree(f) for f in factors) == [1] + [28] * 4
    assert all(poly.is_irreducible(f, 2) for f in factors)


def test_factor_rejects_common_divisor():
    with pytest.raises(NotCoprime):
        factor_xn_minus_1(6, 3)


# ---------------------------------------------------------------------------
# code construction


def test_simplex_code_15_4():
    spec = irreducible_cyclic_code(2, 4, 1)
    assert (spec.n, spec.k) == (15, 4)
    assert poly.degree(spec.generator) == 11
    assert poly.degree(spec.check) == 4
    assert poly.is_irreducible(spec.check, 2)


def test_code_5_4():
    spec = irreducible_cyclic_code(2, 4, 3)
    assert (spec.n, spec.k) == (5, 4)
    assert spec.generator == [1, 1]


def test_code_rejects_bad_order():
    # N = 5 gives n = 3 but ord_3(2) = 2 != 4
    with pytest.raises(InvalidParameters):
        irreducible_cyclic_code(2, 4, 5)
    with pytest.raises(InvalidParameters):
        irreducible_cyclic_code(2, 4, 7)  # 7 does not divide 15


def test_check_divides_xn_minus_1():
    for q, k, N in ((2, 4, 1), (2, 4, 3), (3, 2, 2), (5, 2, 3)):
        spec = irreducible_cyclic_code(q, k, N)
        assert spec.n * N == q**k - 1
        _, rem = poly.poly_divmod(poly.x_pow_n_minus_1(spec.n, q), spec.generator, q)
        assert rem == []
        prod = poly.poly_mul(spec.generator, spec.check, q)
        assert prod == poly.x_pow_n_minus_1(spec.n, q)


def test_generator_matrix_band_structure():
    spec = irreducible_cyclic_code(2, 4, 3)
    assert generator_matrix(spec) == [
        [1, 1, 0, 0, 0],
        [0, 1, 1, 0, 0],
        [0, 0, 1, 1, 0],
        [0, 0, 0, 1, 1],
    ]


@pytest.mark.parametrize("q,k,N", [(2, 4, 1), (2, 4, 3), (3, 2, 2), (5, 2, 3), (2, 6, 7)])
def test_generator_matrix_rank(q, k, N):
    spec = irreducible_cyclic_code(q, k, N)
    assert gf_rank(generator_matrix(spec), q) == k


@pytest.mark.parametrize("q,k,N", [(2, 4, 3), (2, 4, 1), (3, 2, 2), (5, 2, 3)])
def test_trace_words_equal_row_space(q, k, N):
    spec = irreducible_cyclic_code(q, k, N)
    rows = generator_matrix(spec)
    span = set(enumerate_span(rows, q))
    words = {tuple(codeword_from_trace(tau, spec)) for tau in spec.field.elements()}
    assert len(words) == q**k  # injectivity
    assert words == span


def test_codeword_zero_and_simplex_weights():
    spec = irreducible_cyclic_code(2, 4, 1)
    assert codeword_from_trace(0, spec) == [0] * 15
    for tau in range(1, 16):
        assert sum(codeword_from_trace(tau, spec)) == 8


def test_cyclic_closure():
    for q, k, N in ((2, 4, 3), (3, 2, 2)):
        spec = irreducible_cyclic_code(q, k, N)
        for tau in spec.field.elements():
            w = codeword_from_trace(tau, spec)
            rotated = [w[-1]] + w[:-1]
            _, rem = poly.poly_divmod(poly.trim(rotated), spec.generator, q)
            assert rem == []


def test_codespec_to_dict():
    spec = irreducible_cyclic_code(2, 4, 3)
    d = spec.to_dict()
    assert d["generator"] == [1, 1]
    assert d["field"]["modulus"] == [1, 1, 0, 0, 1]
    rebuilt = irreducible_cyclic_code(d["q"], d["k"], d["N"])
    assert rebuilt.to_dict() == d
