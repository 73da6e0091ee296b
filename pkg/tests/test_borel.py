"""Hopf-layer tests: coproduct, counit, antipode, subalgebra, sectors."""

import itertools
import random

import pytest

from qborel.algebra import Monomial, apply_on_slot, tensor_multiply
from qborel.borel import (
    HopfData,
    ParameterError,
    SubalgebraBasis,
    build_borel,
    build_group_algebra_T,
    build_subalgebra,
    sector_action_data,
    sector_correction_exponent,
    sector_element,
    sector_presentation_check,
)


@pytest.fixture(scope="module")
def h13():
    return build_borel("A1", 3)


@pytest.fixture(scope="module")
def h25():
    return build_borel("A2", 5)


def test_parameter_gate():
    with pytest.raises(ParameterError):
        build_borel("A1", 4)
    with pytest.raises(ParameterError):
        build_borel("A2", 3)
    with pytest.raises(ParameterError):
        build_borel("A1", 1)


def test_dimension_a1(h13):
    assert h13.algebra.dimension == 81
    assert len(list(h13.algebra.basis())) == 81


def test_dimension_a2_formula(h25):
    A = h25.algebra
    assert A.dimension == 5**10
    # spot check: random exponent tuples are valid normal forms
    rng = random.Random(2)
    for _ in range(20):
        mono = A.monomial(
            tuple(rng.randrange(25) for _ in range(2)),
            tuple(rng.randrange(25) for _ in range(3)),
        )
        x = A.element({mono: A.field.one})
        assert A.one * x == x


def test_K_is_g_squared_a1(h13):
    g = h13.algebra.generator_g(0)
    assert h13.K(0) == g * g


def test_coproduct_of_e(h13):
    A = h13.algebra
    e = A.generator_e(0)
    expect = A.tensor_of_elements(e, h13.K(0)) + A.tensor_of_elements(A.one, e)
    assert h13.coproduct(e) == expect


def test_coproduct_is_algebra_map(h13):
    A = h13.algebra
    e = A.generator_e(0)
    assert h13.coproduct(e * e) == tensor_multiply(h13.coproduct(e), h13.coproduct(e))
    rng = random.Random(9)
    for _ in range(10):
        x = A.monomial_element((rng.randrange(9),), (rng.randrange(9),))
        y = A.monomial_element((rng.randrange(9),), (rng.randrange(9),))
        assert h13.check_coproduct_multiplicative(x, y)


def test_coproduct_is_algebra_map_a2(h25):
    A = h25.algebra
    rng = random.Random(10)
    for _ in range(4):
        x = A.monomial_element(
            tuple(rng.randrange(25) for _ in range(2)),
            tuple(rng.randrange(4) for _ in range(3)),
        )
        y = A.monomial_element(
            tuple(rng.randrange(25) for _ in range(2)),
            tuple(rng.randrange(4) for _ in range(3)),
        )
        assert h25.check_coproduct_multiplicative(x, y)


def test_composite_letter_coproduct_shape(h25):
    # Delta(e_12) = e_12 x K_1K_2 + (1 - q^(-2)) e_2 x e_1K_2 + 1 x e_12
    A = h25.algebra
    q = A.field.zeta_pow(1)
    e12 = A.monomial_element((0, 0), (0, 1, 0))
    e1, e2 = A.generator_e(0), A.generator_e(1)
    K12 = h25.K(0) * h25.K(1)
    expect = (
        A.tensor_of_elements(e12, K12)
        + A.tensor_of_elements(e2, e1 * h25.K(1)).scale(1 - q.inv() * q.inv())
        + A.tensor_of_elements(A.one, e12)
    )
    assert h25._letter_cop[1] == expect


def test_coassociativity(h13, h25):
    A = h13.algebra
    for x in A.generators():
        assert h13.check_coassociativity(x)
    rng = random.Random(31)
    for _ in range(10):
        x = A.monomial_element((rng.randrange(9),), (rng.randrange(9),))
        assert h13.check_coassociativity(x)
    for x in h25.algebra.generators():
        assert h25.check_coassociativity(x)
    for _ in range(3):
        x = h25.algebra.monomial_element(
            tuple(rng.randrange(25) for _ in range(2)),
            tuple(rng.randrange(3) for _ in range(3)),
        )
        assert h25.check_coassociativity(x)


def test_counit_laws_exhaustive_a1(h13):
    A = h13.algebra
    for mono in A.basis():
        assert h13.check_counit_laws(A.element({mono: A.field.one}))


def test_counit_laws_sampled_a2(h25):
    A = h25.algebra
    rng = random.Random(12)
    for _ in range(6):
        x = A.monomial_element(
            tuple(rng.randrange(25) for _ in range(2)),
            tuple(rng.randrange(3) for _ in range(3)),
        )
        assert h25.check_counit_laws(x)


def test_antipode_formula(h13):
    A = h13.algebra
    g, e = A.generator_g(0), A.generator_e(0)
    assert h13.antipode(g) == A.monomial_element((-1,), (0,))
    assert h13.antipode(e) == -(e * h13.K_inv(0))


def test_antipode_axiom(h13, h25):
    for x in h13.algebra.generators():
        assert h13.check_antipode_axiom(x)
    rng = random.Random(8)
    for _ in range(8):
        x = h13.algebra.monomial_element((rng.randrange(9),), (rng.randrange(9),))
        assert h13.check_antipode_axiom(x)
    for x in h25.algebra.generators():
        assert h25.check_antipode_axiom(x)


def test_antipode_inverse(h13):
    A = h13.algebra
    rng = random.Random(14)
    for _ in range(10):
        x = A.monomial_element((rng.randrange(9),), (rng.randrange(9),))
        assert h13.antipode(h13.antipode_inv(x)) == x
        assert h13.antipode_inv(h13.antipode(x)) == x


def test_subalgebra_a1(h13):
    sub = build_subalgebra(h13)
    assert sub.count == 27
    assert len(list(sub.monomials())) == 27
    # g e has group exponent 1, not divisible by 3
    A = h13.algebra
    ge = A.generator_g(0) * A.generator_e(0)
    assert not sub.contains(ge)
    assert sub.contains(A.generator_e(0))


def test_subalgebra_closure_exhaustive_a1(h13):
    sub = SubalgebraBasis(h13)
    assert sub.closure_counterexample() is None


def test_subalgebra_a2_count(h25):
    sub = build_subalgebra(h25)
    assert sub.count == 5**8 == 390625


def test_group_algebra_T():
    T = build_group_algebra_T(1, 3)
    A = T.algebra
    assert A.dimension == 9
    Kp = A.generator_g(0)
    assert T.coproduct(Kp) == A.tensor_of_elements(Kp, Kp)
    p = A.one
    for _ in range(9):
        p = p * Kp
    assert p == A.one
    assert T.counit(Kp) == A.field.one
    T2 = build_group_algebra_T(2, 3)
    assert T2.algebra.dimension == 81


def test_sector_composition_example(h13):
    # j1 = j2 = 2 at n = 3: (2+2)' = 1 and the correction is g^3
    A = h13.algebra
    p2 = sector_element(h13, 0, 2)
    p1 = sector_element(h13, 0, 1)
    g3 = A.monomial_element((3,), (0,))
    assert p2 * p2 == p1 * g3
    assert sector_correction_exponent(2, 2, 3) == 1
    assert sector_correction_exponent(0, 2, 3) == 0
    assert sector_correction_exponent(1, 1, 3) == 0


def test_sector_action_data(h13):
    A = h13.algebra
    conj, corr = sector_action_data(h13, 0, 2)
    assert conj == A.monomial_element((2,), (0,))
    # (1,2,2) at n=3: correction exponent -1, element g^(-3) = g^6
    assert corr(2, 2) == A.monomial_element((6,), (0,))
    assert corr(1, 1) == A.one
    conj0, _ = sector_action_data(h13, 0, 0)
    assert conj0 == A.one


def test_sector_presentation_a1(h13):
    assert sector_presentation_check(h13) is None


def test_sector_correction_coherence(h13):
    # additive 2-cocycle identity of the correction exponents, as elements
    A = h13.algebra
    n = A.n
    _, corr = sector_action_data(h13, 0, 0)
    for j1, j2, j3 in itertools.product(range(n), repeat=3):
        left = corr(j1, j2) * corr((j1 + j2) % n, j3)
        right = corr(j2, j3) * corr(j1, (j2 + j3) % n)
        assert left == right


def test_sector_presentation_catches_bad_rule(h13):
    # sanity: a wrong correction exponent would break the composition law
    A = h13.algebra
    p2 = sector_element(h13, 0, 2)
    p1 = sector_element(h13, 0, 1)
    assert p2 * p2 != p1  # without the g^3 correction the law fails
