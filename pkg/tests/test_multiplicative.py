from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from mockchar import (
    ArithmeticFunction,
    MINUS_ONE,
    ONE,
    PAPERFOLDING,
    UnitValue,
    ZERO,
    build_structured,
    character_from_symbols,
    character_from_table,
    decompose_structured,
    kronecker,
    kronecker_character,
    kronecker_function,
    paperfolding,
    pointwise_product,
    reduce_periodic_cm,
)
from mockchar.multiplicative import (
    AllZeroError,
    NoCharacterFoundError,
    NotMultiplicativeError,
    WrongZeroSetError,
)

from conftest import characters_mod_prime_power

CHI4 = character_from_symbols(4, [0, 1, 0, -1])


angles = st.builds(
    UnitValue.root, st.integers(min_value=-40, max_value=40), st.integers(min_value=1, max_value=24)
)
units = st.one_of(st.just(ZERO), angles)


class TestUnitValue:
    def test_constants(self):
        assert ONE.symbol() == 1 and MINUS_ONE.symbol() == -1 and ZERO.symbol() == 0
        assert str(UnitValue.root(1, 3)) == "e(1/3)"

    @given(angles, angles)
    def test_roots_multiply_by_adding_angles(self, u, v):
        w = u * v
        assert not w.is_zero
        assert w.angle == (u.angle + v.angle) % 1

    @given(angles)
    def test_angles_stored_reduced(self, u):
        from math import gcd

        k, m = u.angle.numerator, u.angle.denominator
        assert m >= 1 and 0 <= k < m
        assert k == 0 or gcd(k, m) == 1

    @given(units)
    def test_zero_absorbs(self, u):
        assert (u * ZERO) is ZERO
        assert (ZERO * u) is ZERO

    @given(angles)
    def test_conjugate_inverts(self, u):
        assert u * u.conjugate() == ONE

    @given(angles, st.integers(min_value=-6, max_value=6))
    def test_powers(self, u, e):
        expected = ONE
        for _ in range(abs(e)):
            expected = expected * (u if e > 0 else u.conjugate())
        assert u**e == expected

    def test_reduced_invariant(self):
        u = UnitValue.root(4, 8)
        assert (u.angle.numerator, u.angle.denominator) == (1, 2)
        assert u == MINUS_ONE

    def test_symbol_rejects_other_roots(self):
        with pytest.raises(ValueError):
            UnitValue.root(1, 3).symbol()

    def test_real_exact_small_orders(self):
        assert UnitValue.root(1, 4).real_exact() == 0
        assert UnitValue.root(1, 6).real_exact() == Fraction(1, 2)
        assert UnitValue.root(1, 5).real_exact() is None
        assert ZERO.real_exact() == 0


class TestPaperfolding:
    def test_prefix(self):
        want = [1, 1, -1, 1, 1, -1, -1, 1, 1, 1, -1, -1, 1, -1, -1]
        assert [paperfolding(n).symbol() for n in range(1, 16)] == want

    def test_zero_and_odd_extension(self):
        assert paperfolding(0) is ZERO
        assert paperfolding(-3).symbol() == 1
        for n in range(1, 300):
            assert paperfolding(-n).symbol() == -paperfolding(n).symbol()

    def test_powers_of_two(self):
        for k in range(21):
            assert paperfolding(2**k).symbol() == 1

    def test_recursion(self):
        for n in range(1, 5000):
            assert paperfolding(2 * n) == paperfolding(n)
        for n in range(0, 5000):
            assert paperfolding(2 * n + 1).symbol() == (1 if n % 2 == 0 else -1)

    def test_equals_kronecker_minus_one(self):
        for n in range(-100_000, 100_001):
            assert paperfolding(n).symbol() == kronecker(-1, n)


class TestCharacters:
    def test_trivial(self):
        chi = character_from_table(1, [ONE])
        assert chi.modulus == 1 and chi(17) == ONE

    def test_chi_minus_four(self):
        assert CHI4(1) == ONE and CHI4(3) == MINUS_ONE and CHI4(2) is ZERO
        assert CHI4(-1) == MINUS_ONE  # -1 = 3 mod 4

    def test_wrong_zero_set_rejected(self):
        with pytest.raises(WrongZeroSetError):
            character_from_symbols(4, [0, 1, 1, -1])

    def test_not_multiplicative_rejected(self):
        # zero set is fine (5 is prime) but the values do not multiply
        with pytest.raises(NotMultiplicativeError) as exc:
            character_from_table(
                5, [ZERO, ONE, MINUS_ONE, ONE, ONE]
            )  # chi(4) should be chi(2)^2 = 1; chi(2)*chi(3) = -1 != chi(6 mod 5)=1
        assert exc.value.witness is not None

    def test_table_multiplicativity_exhaustive(self):
        for chi in characters_mod_prime_power(3, 2) + characters_mod_prime_power(5, 1):
            q = chi.modulus
            for a in range(q):
                for b in range(q):
                    assert chi(a * b) == chi(a) * chi(b)
            assert chi(1) == ONE


class TestReducePeriodicCm:
    def test_chi4_under_period_12(self):
        red = reduce_periodic_cm(12, [CHI4(n) for n in range(12)])
        assert red.modulus == 4 and red.table == CHI4.table

    def test_chi4_under_period_8(self):
        red = reduce_periodic_cm(8, [CHI4(n) for n in range(8)])
        assert red.modulus == 4

    def test_all_ones(self):
        for q in (1, 2, 6, 12):
            assert reduce_periodic_cm(q, [ONE] * q).modulus == 1

    def test_reduction_reproduces_input(self):
        for q, chi in [(12, CHI4), (15, characters_mod_prime_power(5, 1)[2])]:
            table = [chi(n) for n in range(q)]
            red = reduce_periodic_cm(q, table)
            assert q % red.modulus == 0
            for n in range(q):
                assert red(n) == table[n]

    def test_all_zero_rejected(self):
        with pytest.raises(AllZeroError):
            reduce_periodic_cm(4, [ZERO, ZERO, ZERO, ZERO])

    def test_non_multiplicative_rejected(self):
        with pytest.raises(NotMultiplicativeError):
            reduce_periodic_cm(4, [ZERO, ONE, ONE, ONE])

    def test_kronecker_characters(self):
        assert kronecker_character(2).modulus == 8   # primitive
        assert kronecker_character(4).modulus == 2   # (4|odd) = 1: principal mod 2
        assert kronecker_character(-4).modulus == 4
        assert kronecker_character(1).modulus == 1
        assert kronecker_character(5).modulus == 5
        with pytest.raises(ValueError):
            kronecker_character(3)


class TestStructured:
    def test_constant_one(self):
        triv2 = characters_mod_prime_power(2, 1)[0]
        f = build_structured(ONE, 2, triv2)
        assert all(f(n) == ONE for n in range(1, 200))

    def test_paperfolding_form(self):
        f = build_structured(ONE, 2, CHI4)
        for n in range(1, 10_000):
            assert f(n) == paperfolding(n)
        assert paperfolding(2).symbol() == 1  # the xi = f(2) slot

    def test_exponent_arithmetic(self):
        xi = UnitValue.root(1, 3)
        f = build_structured(xi, 2, CHI4)
        assert f(8) == ONE  # xi^3
        assert f(3) == MINUS_ONE

    def test_rejects_wrong_modulus(self):
        with pytest.raises(ValueError):
            build_structured(ONE, 3, CHI4)

    def test_complete_multiplicativity(self):
        f = build_structured(UnitValue.root(1, 4), 3, characters_mod_prime_power(3, 1)[1])
        for m in range(1, 300):
            for n in range(1, 300 // m + 1):
                assert f(m * n) == f(m) * f(n)

    def test_negative_argument_convention(self):
        f = build_structured(ONE, 2, CHI4, value_at_minus_one=MINUS_ONE)
        for n in range(1, 100):
            assert f(-n) == MINUS_ONE * f(n)
        assert f(0) is ZERO

    def test_decompose_paperfolding(self):
        xi, chi = decompose_structured(PAPERFOLDING, 2, 3)
        assert xi == ONE
        assert chi.modulus == 4 and chi.table == CHI4.table

    def test_decompose_constant(self):
        ones = ArithmeticFunction(lambda n: ONE if n else ZERO, "1")
        xi, chi = decompose_structured(ones, 2, 2)
        assert xi == ONE and chi.modulus == 2

    def test_decompose_roundtrip(self):
        triv3 = characters_mod_prime_power(3, 1)[0]
        f = build_structured(MINUS_ONE, 3, triv3)
        xi, chi = decompose_structured(f, 3, 3)
        assert xi == MINUS_ONE and chi.modulus == 3

    def test_decompose_failure(self):
        # kappa_3 vanishes at 3, so no nonvanishing structured form at p = 2
        with pytest.raises(NoCharacterFoundError):
            decompose_structured(kronecker_function(3), 2, 3)


class TestPointwiseProduct:
    def test_kron_decomposition(self):
        prod = pointwise_product(kronecker_function(-3), kronecker_function(-1))
        k3 = kronecker_function(3)
        for n in range(1, 10_000):
            assert prod(n) == k3(n)

    def test_identity_element(self):
        ones = ArithmeticFunction(lambda n: ONE, "1")
        f = kronecker_function(7)
        prod = pointwise_product(f, ones)
        for n in range(-50, 50):
            assert prod(n) == f(n)

    def test_square_is_nonzero_indicator(self):
        sq = pointwise_product(PAPERFOLDING, PAPERFOLDING)
        for n in range(-500, 500):
            assert sq(n) == (ZERO if n == 0 else ONE)
