import gc
import weakref

import pytest

from adherence import (
    MINUS,
    PLUS,
    NotRelatedError,
    check_epsilon,
    class_witness,
    in_second_middle_set,
    is_vanilla,
    leq,
    leq_fast_in_class,
    leq_minus,
    leq_plus,
    leq_plus_vanilla,
    middle_bounds,
    middle_set,
    opposite_system,
    product_set,
    sandwich,
    side_element,
    vanilla_form,
    witness,
)
from coxeter import symmetric_group
from greens import class_of, classes
from parabolic import GeneratorSubset
from renner import from_vector
from verification import brute_vanilla_forms, subword_bruhat_leq


@pytest.fixture(scope='module')
def pair(rook3):
    return from_vector(rook3, (3, 2, 0)), from_vector(rook3, (3, 2, 1))


class TestOrders:
    def test_counterexample_pair(self, pair):
        r, s = pair
        assert leq(r, s, PLUS)
        assert witness(r, s, PLUS) is not None
        assert not leq(s, r, PLUS)
        assert not leq(s, r, MINUS)

    def test_reflexive(self, rook3):
        for r in rook3.enumerate_monoid():
            assert leq_plus(r, r) and leq_minus(r, r)

    def test_units_follow_bruhat_order(self, rook3):
        units = rook3.group.enumerate()
        for u in units:
            for v in units:
                expected = subword_bruhat_leq(u, v)
                assert leq(rook3.unit(u), rook3.unit(v), PLUS) == expected
                assert leq(rook3.unit(u), rook3.unit(v), MINUS) == expected

    def test_idempotents_follow_natural_order(self, rook3):
        idempotents = rook3.idempotents()
        assert len(idempotents) == 8
        for p in idempotents:
            for q in idempotents:
                expected = rook3.idempotent_leq(p, q)
                assert leq(p, q, PLUS) == expected
                assert leq(p, q, MINUS) == expected

    def test_zero_and_longest_bound_everything(self, rook3):
        zero, w0 = rook3.idempotent('e0'), rook3.longest_unit()
        for r in rook3.enumerate_monoid():
            assert leq_plus(zero, r) and leq_plus(r, w0)

    def test_star_swaps_the_orders(self, rook3):
        elements = rook3.enumerate_monoid()
        for r in elements:
            for s in elements:
                assert leq_plus(r, s) == leq_minus(r.star(), s.star())

    def test_minus_order_is_plus_order_of_the_opposite(self, rook3):
        opposite = opposite_system(rook3)
        elements = rook3.enumerate_monoid()
        for r in elements:
            for s in elements:
                assert leq_minus(r, s, opposite) == leq_plus(r, s)

    def test_bad_epsilon(self, pair):
        with pytest.raises(ValueError):
            check_epsilon('*')
        with pytest.raises(ValueError):
            leq(*pair, epsilon='0')

    def test_product_set(self, s3):
        assert len(product_set(s3, GeneratorSubset.of(2, [1]), GeneratorSubset.of(2, [2]))) == 4
        assert len(product_set(s3, GeneratorSubset.full(2), GeneratorSubset.empty(2))) == 6

    def test_product_set_is_memoized_on_the_group(self):
        group = symmetric_group(3)
        first, second = GeneratorSubset.of(2, [1]), GeneratorSubset.of(2, [2])
        assert product_set(group, first, second) is product_set(group, first, second)
        assert (first, second) in group.product_cache

        released = weakref.ref(group)
        del group
        gc.collect()
        assert released() is None


class TestVanillaForm:
    def test_rank_two_idempotent(self, rook3):
        form = vanilla_form(rook3.idempotent('e2'))
        group = rook3.group
        assert group.format(form.sigma_minus) == '[3,1,2]'
        assert group.format(form.sigma_zero) == '[2,3,1]'
        assert form.sigma_plus.is_identity()
        assert form.e_minus == form.e_plus == 'e2'
        assert form.assemble() == rook3.idempotent('e2')

    def test_bounds(self, rook3):
        lower, upper = middle_bounds(rook3, 'e2', 'e2')
        assert rook3.group.format(lower) == '[2,3,1]'
        assert upper == rook3.group.longest_element()
        assert rook3.group.format(side_element(rook3, 'e2', 'e2')) == '[3,1,2]'
        assert len(middle_set(rook3, 'e2', 'e2')) == 2

    def test_forms_are_unique_and_standard(self, rook3):
        for r in rook3.enumerate_monoid():
            form = vanilla_form(r)
            assert form.assemble() == r
            assert is_vanilla(form) and in_second_middle_set(form)
            assert brute_vanilla_forms(r) == [(form.sigma_minus, form.sigma_zero, form.sigma_plus)]

    def test_replace_keeps_idempotents(self, rook3):
        form = vanilla_form(from_vector(rook3, (3, 2, 0)))
        moved = form.replace(sigma_plus=rook3.group.identity)
        assert moved.e_plus == form.e_plus and moved.sigma_minus == form.sigma_minus
        assert moved.sigma_plus.is_identity()

    def test_vanilla_criterion(self, rook2, rook3):
        for system in (rook2, rook3):
            elements = system.enumerate_monoid()
            for r in elements:
                for s in elements:
                    assert leq_plus_vanilla(r, s) == leq_plus(r, s)


class TestClassComparisons:
    @pytest.mark.parametrize('epsilon', [PLUS, MINUS])
    @pytest.mark.parametrize('relation', ['J', 'L', 'R', 'H'])
    def test_fast_comparison(self, rook3, relation, epsilon):
        for members in classes(rook3, relation):
            for r in members:
                for s in members:
                    assert leq_fast_in_class(r, s, relation, epsilon) == leq(r, s, epsilon)

    def test_unrelated_elements(self, rook3, pair):
        r, s = pair
        with pytest.raises(NotRelatedError):
            leq_fast_in_class(r, s, 'J')
        with pytest.raises(NotRelatedError):
            class_witness(r, s)

    def test_sandwich(self, rook3):
        r, s = from_vector(rook3, (0, 1, 2)), from_vector(rook3, (3, 2, 0))
        assert r in class_of(s, 'J')
        t, u = sandwich(r, s)
        for middle in (t, u):
            assert leq_plus(r, middle) and leq_plus(middle, s)
        assert rook3.green_key(r, 'R') == rook3.green_key(t, 'R')
        assert rook3.green_key(t, 'L') == rook3.green_key(s, 'L')
        assert rook3.green_key(r, 'L') == rook3.green_key(u, 'L')
        assert rook3.green_key(u, 'R') == rook3.green_key(s, 'R')
        with pytest.raises(NotRelatedError):
            sandwich(s, r)
