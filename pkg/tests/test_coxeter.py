import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxeter import (
    BudgetExceededError,
    CoxeterError,
    CoxeterMatrix,
    GroupMismatchError,
    UnsupportedMatrixError,
    group_from_name,
    load_group,
    new_group,
    symmetric_group,
)
from adherence import is_partial_order, order_matrix
from verification import subword_bruhat_leq

S4 = symmetric_group(4)
B2 = group_from_name('B2')
B3 = group_from_name('B3')

GROUPS = pytest.mark.parametrize('group', [S4, B2], ids=['S4', 'B2'])


def comparable(group):
    elements = group.enumerate()
    return [(u, v) for u in elements for v in elements if group.bruhat_leq(u, v)]


def ideals(group):
    """Elements below and above each element"""
    below = {w: [] for w in group.enumerate()}
    above = {w: [] for w in group.enumerate()}
    for u, v in comparable(group):
        below[v].append(u)
        above[u].append(v)
    return below, above


class TestCoxeterMatrix:
    def test_named_families(self):
        assert CoxeterMatrix.from_name('A3').entries == ((1, 3, 2), (3, 1, 3), (2, 3, 1))
        assert CoxeterMatrix.from_name('B2').m(1, 2) == 4
        assert CoxeterMatrix.from_name('I2(5)').m(2, 1) == 5
        assert CoxeterMatrix.from_name('A1xA1').m(1, 2) == 2

    def test_describe(self):
        assert CoxeterMatrix.type_b(3).describe() == 'B3'
        assert CoxeterMatrix.from_name('A1xA1').describe() == 'A1xA1'
        assert CoxeterMatrix.direct_sum(CoxeterMatrix.type_b(2), CoxeterMatrix.type_a(1)).describe() == 'B2xA1'

    def test_parse_text(self):
        matrix = CoxeterMatrix.parse('# B3\nrank 3\n1 2 4\n2 3 3\n')
        assert matrix == CoxeterMatrix.type_b(3)
        assert CoxeterMatrix.parse(matrix.to_text()) == matrix

    def test_infinite_entry_is_unsupported(self):
        with pytest.raises(UnsupportedMatrixError):
            CoxeterMatrix.parse('rank 2\n1 2 inf\n')

    @pytest.mark.parametrize('entries', [
        ((1, 3), (2, 1)),
        ((2, 3), (3, 1)),
        ((1, 1), (1, 1)),
        ((1, 3, 2), (3, 1)),
    ])
    def test_invalid_matrices(self, entries):
        with pytest.raises(CoxeterError):
            CoxeterMatrix(entries)

    def test_conflicting_pairs(self):
        with pytest.raises(CoxeterError):
            CoxeterMatrix.parse('rank 2\n1 2 3\n2 1 4\n')

    def test_missing_header(self):
        with pytest.raises(CoxeterError):
            CoxeterMatrix.parse('1 2 3\n')

    @pytest.mark.parametrize('pairs', [
        {(1, 2): 3, (2, 3): 3, (2, 4): 3},  # D4
        {(1, 2): 3, (2, 3): 4, (3, 4): 3},  # F4
        {(1, 2): 5, (2, 3): 3},  # H3
    ])
    def test_unmodelled_types(self, pairs):
        rank = max(max(pair) for pair in pairs)
        with pytest.raises(UnsupportedMatrixError):
            new_group(CoxeterMatrix.from_pairs(rank, pairs))


class TestCoxeterGroup:
    @pytest.mark.parametrize('name, order, longest_length', [
        ('A1', 2, 1),
        ('A2', 6, 3),
        ('A3', 24, 6),
        ('B2', 8, 4),
        ('B3', 48, 9),
        ('I2(5)', 10, 5),
        ('I2(6)', 12, 6),
        ('A1xA1', 4, 2),
        ('B2xA1', 16, 5),
    ])
    def test_orders_and_longest_elements(self, name, order, longest_length):
        group = group_from_name(name)
        w0 = group.longest_element()
        assert group.order() == order
        assert w0.length() == longest_length
        assert (w0 * w0).is_identity()

    def test_symmetric_group(self, s3):
        w0 = s3.longest_element()
        assert s3.name == 'S3'
        assert s3.format(w0) == '[3,2,1]'
        assert w0.reduced_word() == (1, 2, 1)
        assert s3.parse_element('2 1') == s3.parse_element('3,1,2')
        assert s3.parse_element('e') == s3.identity == s3.parse_element('id')

    def test_signed_permutations(self, b2):
        assert b2.format(b2.longest_element()) == '[-1,-2]'
        assert b2.parse_element('[-1,2]') == b2.generator(1)

    def test_trivial_group(self):
        group = symmetric_group(1)
        assert group.rank == 0
        assert group.order() == 1
        assert group.longest_element().is_identity()

    def test_descents(self, s3):
        s1, s2 = s3.generators
        w = s1 * s2
        assert s3.right_descents(w) == frozenset({2})
        assert s3.left_descents(w) == frozenset({1})

    def test_bruhat_order(self, s3):
        s1, s2 = s3.generators
        w0 = s3.longest_element()
        assert s3.bruhat_leq(s1, w0)
        assert not s3.bruhat_leq(s1, s2)
        assert len(s3.bruhat_interval(s3.identity, w0)) == 6
        assert set(s3.bruhat_interval(s1, w0)) == {s1, s1 * s2, s2 * s1, w0}

    def test_weak_orders(self, s3):
        s1, s2 = s3.generators
        assert s3.weak_leq_right(s1, s1 * s2)
        assert not s3.weak_leq_left(s1, s1 * s2)
        assert s3.weak_leq_left(s2, s1 * s2)

    def test_conjugation_by_longest(self, s3, b2):
        assert s3.conjugate_by_longest(1) == 2
        assert b2.conjugate_by_longest(1) == 1

    def test_mixing_groups_fails(self, s3, b2):
        with pytest.raises(GroupMismatchError):
            s3.generator(1) * b2.generator(1)

    def test_bad_literals(self, s3):
        with pytest.raises(CoxeterError):
            s3.parse_element('1,1,2')
        with pytest.raises(CoxeterError):
            s3.parse_element('one two')
        with pytest.raises(CoxeterError):
            s3.generator(3)

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            symmetric_group(4, budget=10).enumerate()

    def test_load_group(self, tmp_path):
        path = tmp_path / 'b2.txt'
        path.write_text('rank 2\n1 2 4\n')
        assert load_group(str(path)).order() == 8


@settings(max_examples=60, deadline=None)
@given(w=st.sampled_from(B3.enumerate()))
def test_bruhat_intervals_are_bounded(w):
    assert len(B3.bruhat_interval(B3.identity, w)) <= 2 ** w.length()


@settings(max_examples=60, deadline=None)
@given(w=st.sampled_from(B3.enumerate()))
def test_reduced_words(w):
    word = w.reduced_word()
    assert len(word) == w.length() == w.inverse().length()
    assert B3.from_word(word) == w
    assert (w * B3.longest_element()).length() == B3.longest_element().length() - w.length()


class TestBruhatProperties:
    @GROUPS
    def test_matches_subwords(self, group):
        elements = group.enumerate()
        for u in elements:
            for v in elements:
                assert group.bruhat_leq(u, v) == subword_bruhat_leq(u, v), (u, v)

    @GROUPS
    def test_is_a_partial_order(self, group):
        assert is_partial_order(order_matrix(group.enumerate(), group.bruhat_leq))
        assert all(group.bruhat_leq(w, w) for w in group.enumerate())

    @GROUPS
    def test_bounds_length_and_commutes_with_inversion(self, group):
        for u, v in comparable(group):
            assert u.length() <= v.length()
            assert group.bruhat_leq(u.inverse(), v.inverse())

    @GROUPS
    def test_w0_reverses_the_order(self, group):
        w0 = group.longest_element()
        elements = group.enumerate()
        for u in elements:
            for v in elements:
                assert group.bruhat_leq(u, v) == group.bruhat_leq(w0 * v, w0 * u)

    @GROUPS
    def test_longest_element_on_both_sides(self, group):
        w0 = group.longest_element()
        for w in group.enumerate():
            assert (w0 * w).length() == w0.length() - w.length() == (w * w0).length()

    @GROUPS
    def test_lifting(self, group):
        for u, v in comparable(group):
            for s in group.generators:
                left = max(v, s * v, key=lambda w: w.length())
                right = max(v, v * s, key=lambda w: w.length())
                assert group.bruhat_leq(s * u, left)
                assert group.bruhat_leq(u * s, right)

    def test_length_additive_products_are_monotone(self):
        below, _ = ideals(S4)
        for v in S4.enumerate():
            for y in S4.enumerate():
                if (v * y).length() != v.length() + y.length():
                    continue
                for u in below[v]:
                    for x in below[y]:
                        assert S4.bruhat_leq(u * x, v * y)

    @GROUPS
    def test_weakly_absorbed_factors_multiply_monotonically(self, group):
        below, above = ideals(group)
        elements = group.enumerate()
        for u in elements:
            for x in elements:
                if group.weak_leq_left(x.inverse(), u):
                    for v in above[u]:
                        for y in below[x]:
                            assert group.bruhat_leq(u * x, v * y)
                if group.weak_leq_right(u.inverse(), x):
                    for v in below[u]:
                        for y in above[x]:
                            assert group.bruhat_leq(u * x, v * y)
