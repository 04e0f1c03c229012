import pytest

from adherence import product_set
from coxeter import CoxeterError, GroupMismatchError, group_from_name
from parabolic import (
    GeneratorSubset,
    OverlappingSubsetsError,
    all_subsets,
    circ,
    conjugate_subset,
    double_coset_decompose,
    is_in_parabolic,
    is_min_double_coset_rep,
    longest_in_parabolic,
    minimal_left_representatives,
    minimal_right_representatives,
    parabolic_elements,
    parabolics_commute,
    project_double,
    project_left,
    project_right,
    split_commuting,
)
from verification import (
    brute_double_minimum,
    brute_left_minimum,
    brute_right_minimum,
    circ_candidates,
)


def subset(rank, *generators):
    return GeneratorSubset.of(rank, generators)


def pairs_of_subsets(group):
    subsets = all_subsets(group.rank)
    return [(left, right) for left in subsets for right in subsets]


def lengths_add(u, v):
    return (u * v).length() == u.length() + v.length()


class TestGeneratorSubset:
    def test_parse_and_format(self):
        assert str(GeneratorSubset.parse(3, '1,3')) == '1,3'
        assert len(GeneratorSubset.parse(3, '-')) == 0
        assert str(GeneratorSubset.empty(2)) == '-'
        assert list(GeneratorSubset.full(3)) == [1, 2, 3]

    def test_set_operations(self):
        a, b = subset(3, 1, 2), subset(3, 2, 3)
        assert list(a | b) == [1, 2, 3]
        assert list(a & b) == [2]
        assert list(a - b) == [1]
        assert subset(3, 2).issubset(a)
        assert not a.isdisjoint(b)

    def test_out_of_range(self):
        with pytest.raises(CoxeterError):
            GeneratorSubset.of(2, [3])
        with pytest.raises(CoxeterError):
            GeneratorSubset.parse(2, '1,x')

    def test_all_subsets(self):
        assert len(all_subsets(3)) == 8


class TestProjections:
    def test_right_projection(self, s3):
        w0 = s3.longest_element()
        minimal, parabolic = project_right(w0, subset(2, 1))
        assert s3.format(minimal) == '[2,3,1]'
        assert parabolic == s3.generator(1)
        assert minimal * parabolic == w0

    def test_left_projection(self, s3):
        w0 = s3.longest_element()
        parabolic, minimal = project_left(subset(2, 1), w0)
        assert s3.format(minimal) == '[3,1,2]'
        assert parabolic * minimal == w0

    def test_double_coset_minimum(self, s3):
        w0 = s3.longest_element()
        one = subset(2, 1)
        assert project_double(one, w0, one) == s3.generator(2)
        prefix, middle, tail = double_coset_decompose(one, w0, one)
        assert prefix * middle * tail == w0
        assert prefix.length() + middle.length() + tail.length() == w0.length()
        assert is_min_double_coset_rep(middle, one, one)

    def test_projections_match_brute_force(self, s4):
        for part in all_subsets(s4.rank):
            for w in s4.enumerate():
                assert project_right(w, part)[0] == brute_right_minimum(w, part)
                assert project_left(part, w)[1] == brute_left_minimum(part, w)

    def test_double_minima_match_brute_force(self, b2):
        for left in all_subsets(b2.rank):
            for right in all_subsets(b2.rank):
                for w in b2.enumerate():
                    assert project_double(left, w, right) == brute_double_minimum(left, w, right)

    def test_representatives(self, s3):
        one = subset(2, 1)
        assert len(minimal_right_representatives(s3, one)) == 3
        assert len(minimal_left_representatives(s3, one)) == 3
        assert all(not s3.is_right_descent(w, 1) for w in minimal_right_representatives(s3, one))


class TestParabolicSubgroups:
    def test_elements_and_longest(self, s3, b2):
        assert len(parabolic_elements(s3, GeneratorSubset.full(2))) == 6
        assert len(parabolic_elements(s3, subset(2, 2))) == 2
        assert longest_in_parabolic(s3, GeneratorSubset.full(2)) == s3.longest_element()
        assert longest_in_parabolic(b2, subset(2, 1)) == b2.generator(1)

    def test_membership_uses_support(self, s3):
        s1, s2 = s3.generators
        assert is_in_parabolic(s1, subset(2, 1))
        assert not is_in_parabolic(s1 * s2, subset(2, 1))
        assert is_in_parabolic(s3.identity, GeneratorSubset.empty(2))

    def test_commuting_parabolics(self, s3):
        product = group_from_name('A1xA1')
        assert parabolics_commute(product, subset(2, 1), subset(2, 2))
        assert not parabolics_commute(s3, subset(2, 1), subset(2, 2))
        with pytest.raises(OverlappingSubsetsError):
            parabolics_commute(s3, subset(2, 1), subset(2, 1, 2))

    def test_split_commuting(self):
        product = group_from_name('A1xA1')
        s1, s2 = product.generators
        assert split_commuting(s1 * s2, subset(2, 1), subset(2, 2)) == (s1, s2)
        with pytest.raises(CoxeterError):
            split_commuting(s1, GeneratorSubset.empty(2), subset(2, 2))

    def test_conjugate_subset(self, s3):
        assert conjugate_subset(s3, subset(2, 1)) == subset(2, 2)
        product = group_from_name('A1xA1')
        assert conjugate_subset(product, subset(2, 1)) == subset(2, 1)


class TestCirc:
    def test_small_cases(self, s3):
        s1, s2 = s3.generators
        assert circ(s3.identity, s2) == s2
        assert circ(s1, s1) == s1
        assert circ(s1, s2) == s1 * s2
        assert circ(s1 * s2, s2 * s1) == s3.longest_element()

    @pytest.mark.slow
    def test_matches_all_descriptions_on_s4(self, s4):
        for u in s4.enumerate():
            for v in s4.enumerate():
                value = circ(u, v)
                assert circ_candidates(u, v) == [value, value, value]
                assert (value == u * v) == lengths_add(u, v)

    def test_matches_all_descriptions_on_b2(self, b2):
        for u in b2.enumerate():
            for v in b2.enumerate():
                value = circ(u, v)
                assert circ_candidates(u, v) == [value, value, value]

    def test_is_the_product_exactly_when_lengths_add(self, s4):
        for u in s4.enumerate():
            for v in s4.enumerate():
                assert (circ(u, v) == u * v) == lengths_add(u, v)

    def test_mixed_groups_name_both_elements_in_order(self, s3, b2):
        with pytest.raises(GroupMismatchError) as excinfo:
            circ(s3.generator(1), b2.generator(1))
        assert str(excinfo.value).startswith(repr(s3.generator(1)))


class TestFactorizations:
    def test_right_cosets_factor_uniquely(self, s4):
        for part in all_subsets(s4.rank):
            products = [a * b for a in minimal_right_representatives(s4, part)
                        for b in parabolic_elements(s4, part)]
            assert len(set(products)) == len(products) == s4.order()
            for a in minimal_right_representatives(s4, part):
                for b in parabolic_elements(s4, part):
                    assert lengths_add(a, b)
                    assert project_right(a * b, part) == (a, b)

    def test_commuting_parabolics_factor_their_span(self, s4):
        for whole in all_subsets(s4.rank):
            span = set(parabolic_elements(s4, whole))
            for part in all_subsets(s4.rank):
                if not part.issubset(whole):
                    continue
                rest = whole - part
                products = product_set(s4, rest, part)
                direct = set(products) == span and len(products) == (
                    len(parabolic_elements(s4, rest)) * len(parabolic_elements(s4, part)))
                assert parabolics_commute(s4, part, rest) == direct, (whole, part)

    def test_a3_middle_generator_does_not_split_off(self, s4):
        whole, part = subset(3, 1, 2, 3), subset(3, 2)
        assert not parabolics_commute(s4, part, whole - part)
        assert len(product_set(s4, whole - part, part)) == 8


class TestDoubleCosets:
    @pytest.mark.parametrize('name', ['A3', 'B2'])
    def test_minima_are_monotone(self, name):
        group = group_from_name(name)
        elements = group.enumerate()
        for left, right in pairs_of_subsets(group):
            for u in elements:
                for v in elements:
                    if group.bruhat_leq(u, v):
                        assert group.bruhat_leq(project_double(left, u, right), project_double(left, v, right))

    def test_minima_are_the_one_sided_intersection(self, s4):
        for left, right in pairs_of_subsets(s4):
            both = set(minimal_left_representatives(s4, left)) & set(minimal_right_representatives(s4, right))
            assert {project_double(left, w, right) for w in s4.enumerate()} == both
            assert {w for w in s4.enumerate() if is_min_double_coset_rep(w, left, right)} == both

    def test_inversion_swaps_sides(self, s4):
        for left, right in pairs_of_subsets(s4):
            for u in s4.enumerate():
                assert project_double(left, u, right).inverse() == project_double(right, u.inverse(), left)

    def test_minimum_is_below_all_or_none_of_a_coset(self, b2):
        for left, right in pairs_of_subsets(b2):
            cosets = {}
            for w in b2.enumerate():
                cosets.setdefault(project_double(left, w, right), []).append(w)
            for u in cosets:
                for members in cosets.values():
                    assert len({b2.bruhat_leq(u, w) for w in members}) == 1


class TestParabolicOrder:
    def test_multiplying_by_the_parabolic_keeps_the_order(self, s4):
        elements = s4.enumerate()
        for part in all_subsets(s4.rank):
            parabolic = parabolic_elements(s4, part)
            for v in minimal_right_representatives(s4, part):
                for u in (u for u in elements if s4.bruhat_leq(u, v)):
                    assert all(s4.bruhat_leq(u * w, v * w) for w in parabolic)
            for v in minimal_left_representatives(s4, part):
                for u in (u for u in elements if s4.bruhat_leq(u, v)):
                    assert all(s4.bruhat_leq(w * u, w * v) for w in parabolic)

    @pytest.mark.parametrize('name', ['A2', 'B2'])
    def test_comparisons_across_representatives_split(self, name):
        group = group_from_name(name)
        leq = group.bruhat_leq
        for part in all_subsets(group.rank):
            parabolic = parabolic_elements(group, part)
            splits = {x: [(p, p.inverse() * x) for p in parabolic if lengths_add(p, p.inverse() * x)]
                      for x in parabolic}
            right_reps = minimal_right_representatives(group, part)
            left_reps = minimal_left_representatives(group, part)
            for x in parabolic:
                for y in parabolic:
                    for a in right_reps:
                        for b in right_reps:
                            if leq(a * x, b * y):
                                assert any(leq(a * u, b) and leq(v, y) for u, v in splits[x])
                    for a in left_reps:
                        for b in left_reps:
                            if leq(x * a, y * b):
                                assert any(leq(u * a, b) and leq(v, y) for v, u in splits[x])

    @pytest.mark.parametrize('name', ['A2', 'B2', 'A3'])
    def test_representatives_are_weakly_below_w0_cosets(self, name):
        group = group_from_name(name)
        w0 = group.longest_element()
        for part in all_subsets(group.rank):
            flipped = conjugate_subset(group, part)
            lefts = {a * w0 * b for a in parabolic_elements(group, flipped) for b in parabolic_elements(group, part)}
            rights = {a * w0 * b for a in parabolic_elements(group, part) for b in parabolic_elements(group, flipped)}
            for u in minimal_right_representatives(group, part):
                assert all(group.weak_leq_left(u, v) for v in lefts)
            for u in minimal_left_representatives(group, part):
                assert all(group.weak_leq_right(u, v) for v in rights)
