import pytest

from adherence import MINUS, PLUS, leq
from greens import (
    RELATIONS,
    SUBMONOIDS,
    all_extrema,
    check_relation,
    class_leq,
    class_of,
    classes,
    exists_criterion_leq,
    extremum,
    min_criterion_leq,
    related,
    special_submonoid,
)
from renner import RennerError, from_vector
from verification import brute_class, brute_extremum


@pytest.fixture(scope='module')
def e2(rook3):
    return rook3.idempotent('e2')


class TestClasses:
    @pytest.mark.parametrize('relation, count', [('J', 4), ('L', 8), ('R', 8), ('H', 20)])
    def test_class_counts(self, rook3, relation, count):
        assert len(classes(rook3, relation)) == count

    def test_class_sizes(self, rook3, e2):
        r = from_vector(rook3, (3, 2, 0))
        assert len(class_of(e2, 'J')) == 18
        assert len(class_of(r, 'H')) == 2
        assert len(class_of(r, 'L')) == len(class_of(r, 'R')) == 6

    @pytest.mark.parametrize('relation', RELATIONS)
    def test_classes_match_principal_ideals(self, rook3, relation):
        for r in rook3.enumerate_monoid():
            assert set(class_of(r, relation)) == set(brute_class(r, relation))

    def test_related(self, rook3, e2):
        r = from_vector(rook3, (3, 2, 0))
        assert related(r, e2, 'J')
        assert not related(r, rook3.one(), 'J')
        assert related(r, from_vector(rook3, (2, 3, 0)), 'H')

    def test_unknown_relation(self, e2):
        with pytest.raises(RennerError):
            check_relation('D')
        with pytest.raises(RennerError):
            class_of(e2, 'D')


class TestExtrema:
    def test_rank_two_class(self, rook3, e2):
        assert str(extremum(e2, 'J', PLUS, 'min')) == '0,1,2'
        assert str(extremum(e2, 'J', PLUS, 'max')) == '3,2,0'
        assert str(extremum(e2, 'J', MINUS, 'max')) == '0,2,1'
        assert extremum(e2, 'L', PLUS, 'min') == e2
        assert str(extremum(e2, 'R', PLUS, 'min')) == '0,1,2'

    def test_h_class_minima(self, rook3):
        r = from_vector(rook3, (3, 2, 0))
        s = from_vector(rook3, (3, 2, 1))
        assert str(extremum(r, 'H', PLUS, 'min')) == '2,3,0'
        assert str(extremum(s, 'H', PLUS, 'min')) == '1,2,3'
        assert str(extremum(s, 'H', PLUS, 'max')) == '3,2,1'

    @pytest.mark.parametrize('epsilon', [PLUS, MINUS])
    @pytest.mark.parametrize('relation', RELATIONS)
    def test_extrema_match_class_scan(self, rook3, relation, epsilon):
        below = lambda r, s: leq(r, s, epsilon)  # noqa: E731
        for members in classes(rook3, relation):
            for which in ('min', 'max'):
                assert extremum(members[0], relation, epsilon, which) == brute_extremum(members, below, which)

    @pytest.mark.parametrize('epsilon', [PLUS, MINUS])
    @pytest.mark.parametrize('smaller, larger', [('H', 'L'), ('H', 'R'), ('L', 'J'), ('R', 'J')])
    def test_extrema_follow_class_inclusion(self, rook3, smaller, larger, epsilon):
        for members in classes(rook3, smaller):
            r = members[0]
            assert leq(extremum(r, smaller, epsilon, 'max'), extremum(r, larger, epsilon, 'max'), epsilon)
            assert leq(extremum(r, larger, epsilon, 'min'), extremum(r, smaller, epsilon, 'min'), epsilon)

    def test_extrema_table(self, rook3):
        table = all_extrema(rook3, 'J')
        assert len(table) == 4
        entry = table[0].to_dict()
        assert set(entry) == {'relation', 'epsilon', 'min', 'max', 'members'}
        assert sum(len(row.members) for row in table) == 34

    def test_bad_extremum(self, e2):
        with pytest.raises(ValueError):
            extremum(e2, 'J', PLUS, 'middle')


class TestSubmonoids:
    @pytest.mark.parametrize('which, size', [('GJ', 8), ('JG', 8), ('N', 4), ('O', 20)])
    @pytest.mark.parametrize('epsilon', [PLUS, MINUS])
    def test_sizes(self, rook3, which, size, epsilon):
        assert len(special_submonoid(rook3, which, epsilon)) == size

    @pytest.mark.parametrize('which', list(SUBMONOIDS))
    def test_closed_under_products(self, rook3, which):
        members = special_submonoid(rook3, which, PLUS)
        contained = set(members)
        assert all(r * s in contained for r in members for s in members)

    def test_lattice_placement(self, rook3):
        lattice = {rook3.idempotent(e) for e in rook3.lattice.idems}
        assert lattice <= set(special_submonoid(rook3, 'GJ', PLUS))
        assert lattice <= set(special_submonoid(rook3, 'O', PLUS))
        assert not lattice <= set(special_submonoid(rook3, 'JG', PLUS))
        assert not lattice <= set(special_submonoid(rook3, 'N', PLUS))

    def test_o_is_star_closed(self, rook3):
        members = set(special_submonoid(rook3, 'O', PLUS))
        assert {r.star() for r in members} == members
        assert members == set(special_submonoid(rook3, 'O', MINUS))

    def test_unknown_submonoid(self, rook3):
        with pytest.raises(ValueError):
            special_submonoid(rook3, 'GG')


class TestClassOrder:
    def test_h_classes_break_the_minimum_criterion(self, rook3):
        r = from_vector(rook3, (3, 2, 0))
        s = from_vector(rook3, (3, 2, 1))
        assert class_leq(r, s, 'H') and exists_criterion_leq(r, s, 'H')
        assert not leq(extremum(r, 'H', PLUS, 'min'), extremum(s, 'H', PLUS, 'min'))
        with pytest.raises(ValueError):
            min_criterion_leq(r, s, 'H')

    @pytest.mark.parametrize('relation', ['J', 'L', 'R'])
    def test_criteria_agree(self, rook3, relation):
        representatives = [members[0] for members in classes(rook3, relation)]
        for r in representatives:
            for s in representatives:
                expected = exists_criterion_leq(r, s, relation)
                assert class_leq(r, s, relation) == expected
                assert min_criterion_leq(r, s, relation) == expected
