# app/tests/test_linform.py
"""
Unit tests for exact linear forms and weight vectors.
"""
import random
from fractions import Fraction

import pytest

from app.exceptions import ArityMismatchError
from app.models.linform import LinForm, Ordering, WeightVec


def m(index, arity=6):
    return LinForm.indeterminate(index, arity)


def random_forms(rng, count, arity=6):
    return [
        LinForm(rng.randint(-5, 5), [Fraction(rng.randint(-6, 6), rng.choice([1, 2])) for _ in range(arity)])
        for _ in range(count)
    ]


class TestArithmetic:
    """Tests for LinForm arithmetic."""

    def test_add_and_subtract(self):
        """Sums and differences act entry-wise."""
        f = m(1) + m(2) * 2
        assert f.coeffs == (1, 2, 0, 0, 0, 0)
        assert (f - m(1)).coeffs == (0, 2, 0, 0, 0, 0)

    def test_negate_and_scale(self):
        """Negation and rational scaling."""
        f = (m(5) + m(6)) / 2
        assert (-f).coeffs[4:] == (Fraction(-1, 2), Fraction(-1, 2))
        assert f.scale(4) == m(5) * 2 + m(6) * 2

    def test_arity_mismatch_raises(self):
        """Forms of different arity cannot be combined."""
        with pytest.raises(ArityMismatchError):
            m(1, 6) + m(1, 4)

    def test_indeterminate_out_of_range(self):
        """m7 does not exist at arity 6."""
        with pytest.raises(ValueError):
            LinForm.indeterminate(7, 6)

    def test_eval_is_additive(self):
        """eval_at(a+b) = eval_at(a) + eval_at(b) on random inputs."""
        rng = random.Random(7)
        for a, b in zip(random_forms(rng, 50), random_forms(rng, 50)):
            labels = [rng.randint(1, 20) for _ in range(6)]
            assert (a + b).eval_at(labels) == a.eval_at(labels) + b.eval_at(labels)

    def test_eval_wrong_arity(self):
        """Label count must match the arity."""
        with pytest.raises(ArityMismatchError):
            m(1).eval_at([1, 2, 3])

    def test_eval_rejects_zero_labels(self):
        """Labels start at 1."""
        with pytest.raises(ValueError):
            m(1).eval_at([0, 1, 1, 1, 1, 1])


class TestGenericComparison:
    """Tests for cmp_generic."""

    def test_half_sums(self):
        """(m5+m6)/2 exceeds (m6-m5)/2 by m5."""
        assert ((m(5) + m(6)) / 2).cmp_generic((m(6) - m(5)) / 2) is Ordering.GREATER

    def test_equal_and_incomparable(self):
        """Identical forms are EQUAL; m1 against m2 is undecided."""
        assert m(3).cmp_generic(m(3)) is Ordering.EQUAL
        assert m(1).cmp_generic(m(2)) is Ordering.INCOMPARABLE

    def test_antisymmetry(self):
        """Swapping the arguments mirrors the outcome."""
        rng = random.Random(11)
        mirror = {
            Ordering.LESS: Ordering.GREATER,
            Ordering.GREATER: Ordering.LESS,
            Ordering.EQUAL: Ordering.EQUAL,
            Ordering.INCOMPARABLE: Ordering.INCOMPARABLE,
        }
        for a, b in zip(random_forms(rng, 100), random_forms(rng, 100)):
            assert b.cmp_generic(a) is mirror[a.cmp_generic(b)]

    def test_soundness(self):
        """A decided comparison holds at 100 random label vectors."""
        rng = random.Random(2014)
        pairs = [(m(1) + m(2), m(2)), (m(4) + m(6), (m(6) - m(5)) / 2), (LinForm.constant_form(3, 6), m(1) * 0)]
        pairs += list(zip(random_forms(rng, 200), random_forms(rng, 200)))
        for a, b in pairs:
            order = a.cmp_generic(b)
            for _ in range(100):
                labels = [rng.randint(1, 20) for _ in range(6)]
                if order is Ordering.GREATER:
                    assert a.eval_at(labels) > b.eval_at(labels)
                elif order is Ordering.LESS:
                    assert a.eval_at(labels) < b.eval_at(labels)

    def test_soundness_of_dominated_pairs(self):
        """Adding a nonnegative form always gives a generically greater one."""
        rng = random.Random(7)
        for b in random_forms(rng, 200):
            delta = LinForm(rng.randint(0, 3), [Fraction(rng.randint(0, 4), rng.choice([1, 2])) for _ in range(6)])
            if not any(delta.entries):
                continue
            a = b + delta
            assert a.cmp_generic(b) is Ordering.GREATER
            assert b.cmp_generic(a) is Ordering.LESS
            for _ in range(20):
                labels = [rng.randint(1, 20) for _ in range(6)]
                assert a.eval_at(labels) > b.eval_at(labels)


class TestPositiveIntegerValued:
    """Tests for is_positive_integer_valued."""

    @pytest.mark.parametrize(
        "form,expected",
        [
            (m(6), True),
            (LinForm(1, [1, 0, 0, 0, 0, 0]), True),
            ((m(5) + m(6)) / 2, False),
            (m(6) - m(5), False),
            (LinForm.zero(6), False),
            (LinForm.constant_form(3, 6), True),
            (LinForm.constant_form(-2, 6), False),
            (LinForm.constant_form(Fraction(5, 2), 6), False),
        ],
    )
    def test_cases(self, form, expected):
        """Integer, nonnegative and nonzero entries only."""
        assert form.is_positive_integer_valued() is expected

    def test_values_are_positive_integers(self):
        """Accepted forms evaluate into {1, 2, ...}."""
        rng = random.Random(3)
        form = m(2) + m(3) * 2 + LinForm.constant_form(1, 6)
        for _ in range(50):
            value = form.eval_at([rng.randint(1, 9) for _ in range(6)])
            assert value.denominator == 1 and value >= 1


class TestRendering:
    """Tests for the canonical text form."""

    def test_c_of_chi_zero(self):
        """c at chi_0^- factors out -1/2."""
        form = LinForm(0, [1, 2, 3, 4, 2, 3]) * Fraction(-1, 2)
        assert str(form) == "-1/2*(m1+2*m2+3*m3+4*m4+2*m5+3*m6)"

    def test_constant_goes_last(self):
        """d at chi_0^+ carries its constant inside the bracket."""
        form = LinForm(Fraction(15, 2), [Fraction(1, 2), 1, Fraction(3, 2), 2, 1, Fraction(3, 2)])
        assert str(form) == "1/2*(m1+2*m2+3*m3+4*m4+2*m5+3*m6+15)"

    def test_simple_forms(self):
        """Single terms and zero print bare."""
        assert str(m(4) + m(6)) == "m4+m6"
        assert str(-m(2)) == "-m2"
        assert str(LinForm.zero(6)) == "0"
        assert str(LinForm.constant_form(Fraction(-15, 2), 6)) == "-15/2"

    def test_coeff_strings_round_trip(self):
        """Serialized entries rebuild the same form."""
        form = (m(1) - m(3)) / 3 + LinForm.constant_form(2, 6)
        assert LinForm.from_coeff_strings(form.to_coeff_strings()) == form

    def test_single_indeterminate(self):
        """Only exactly m_i qualifies."""
        assert m(4).single_indeterminate() == 4
        assert (m(4) * 2).single_indeterminate() is None
        assert (m(4) + m(5)).single_indeterminate() is None


class TestWeightVec:
    """Tests for WeightVec."""

    def test_total_and_eval(self):
        """total sums coordinates; eval_at substitutes each one."""
        x = WeightVec([m(1), m(2), LinForm.zero(6)])
        assert x.total() == m(1) + m(2)
        assert x.eval_at([3, 4, 1, 1, 1, 1]) == (3, 4, 0)

    def test_mixed_arity_rejected(self):
        """Coordinates share one arity."""
        with pytest.raises(ArityMismatchError):
            WeightVec([m(1, 6), m(1, 4)])

    def test_rank_mismatch(self):
        """Weights of different rank do not add."""
        with pytest.raises(ArityMismatchError):
            WeightVec([m(1)]) + WeightVec([m(1), m(2)])
