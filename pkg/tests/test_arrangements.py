import pytest
from sympy import npartitions

from src import env
from src.arrangements.catalog import catalog, catalog_basis, catalog_names
from src.arrangements.normal_form import (NormalFormD2, arrangement_depth, bottom_components_d2, count_d2_classes,
                                          depth2_normal_form, enumerate_normal_forms, expected_lengths,
                                          normal_form_basis, sigma_lists)
from src.arrangements.permutations import (blocks, cable_perm, contract_blocks, decable_perm, inverse_perm,
                                           linking_equivalent, linking_matrix, mirror_perm, parse_perm, perm_depth,
                                           reversed_lines, top_move)
from src.arrangements.spec import Cable, Catalog, Horizontal, XiWord, parse_spec
from src.braids.braid_word import PureBraidWord
from src.braids.free_word import FreeWord
from src.errors import DomainError, ParseError
from src.invariants.subtorus import Subtorus
from src.utils.math_utils import format_multiset, parse_multiset, partition_number


def perm(text: str) -> tuple[int, ...]:
    return tuple(int(char) for char in text)


def components(texts: list[str], nvars: int) -> set[frozenset]:
    return {frozenset(Subtorus.parse(text, nvars).equations) for text in texts}


class TestPermutations:

    def test_parse(self):
        assert parse_perm('341256') == (3, 4, 1, 2, 5, 6)
        assert parse_perm('(3,1,2)') == (3, 1, 2)
        assert parse_perm('10,1,2,3,4,5,6,7,8,9')[0] == 10
        with pytest.raises(ParseError) as error:
            parse_perm('31a2')
        assert error.value.position == 2
        with pytest.raises(ParseError):
            parse_perm('1134')

    def test_inverse_and_mirror(self):
        assert inverse_perm((3, 1, 2)) == (2, 3, 1)
        assert mirror_perm((2, 1, 3, 4)) == (3, 4, 2, 1)

    def test_linking_matrix(self):
        matrix = linking_matrix((3, 4, 1, 2, 5, 6))
        negative = {(i + 1, j + 1) for i in range(6) for j in range(i + 1, 6) if matrix[i][j] < 0}
        assert negative == {(1, 3), (1, 4), (2, 3), (2, 4)}
        assert all(matrix[i][j] == matrix[j][i] for i in range(6) for j in range(6))
        assert linking_matrix((1, 2, 3)) == [[0, 1, 1], [1, 0, 1], [1, 1, 0]]

    def test_mirror_negates_linking(self):
        original = linking_matrix((3, 1, 4, 2, 5))
        mirrored = linking_matrix(mirror_perm((3, 1, 4, 2, 5)))
        assert linking_equivalent(original, mirrored) is not None

    @pytest.mark.parametrize('text', ['231', '31425', '241536', '2413', '3412'])
    def test_top_move_reorients_the_wrapped_lines(self, text):
        original = perm(text)
        n = len(original)
        wrapped = set(reversed_lines(original))
        before, after = linking_matrix(original), linking_matrix(top_move(original))
        assert top_move(original)[-1] == n
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                flip = -1 if (a in wrapped) != (b in wrapped) else 1
                assert after[a - 1][b - 1] == flip * before[a - 1][b - 1]

    def test_linking_equivalence_of_k_and_l(self):
        relabeling = linking_equivalent(catalog('K').linking(), catalog('L').linking())
        assert relabeling is not None
        assert relabeling.order == (1, 2, 4, 5, 3, 6)
        assert not relabeling.mirrored
        assert linking_equivalent(linking_matrix((1, 2, 3)), linking_matrix((2, 1, 3))) is None

    def test_linking_search_limit(self, monkeypatch):
        monkeypatch.setattr(env, 'LINKING_SEARCH_LIMIT', 3)
        identity = linking_matrix((1, 2, 3, 4))
        with pytest.raises(DomainError):
            linking_equivalent(identity, identity)

    def test_cable_and_decable(self):
        assert cable_perm((1, 2), 2, -1, 1) == (1, 3, 2)
        assert cable_perm((2, 1, 3), 1, 1, 2) == (4, 1, 2, 3, 5)
        assert decable_perm((4, 1, 2, 3, 5), 1, 2) == (2, 1, 3)
        assert decable_perm(cable_perm((3, 1, 4, 2, 5), 4, -1, 3), 4, 3) == (3, 1, 4, 2, 5)
        with pytest.raises(DomainError):
            decable_perm((1, 3, 2, 4), 2, 2)
        with pytest.raises(DomainError):
            cable_perm((1, 2), 3, 1, 1)

    def test_blocks(self):
        assert blocks((2, 1, 4, 3, 5)) == [(2, 1), (4, 3), (5,)]
        assert contract_blocks((2, 1, 4, 3, 5)) == (1, 2, 3)
        assert contract_blocks((3, 1, 4, 2, 5)) == (3, 1, 4, 2, 5)

    @pytest.mark.parametrize('text, depth', [('1', 0), ('12', 1), ('21435', 2), ('312546', 3), ('341256', 3),
                                             ('31425', None), ('314256', None), ('241536', None)])
    def test_depth(self, text, depth):
        assert perm_depth(perm(text)) == depth


class TestNormalForms:

    @pytest.mark.parametrize('spec, depth', [(row['spec'], row['depth']) for row in env.TABLE1
                                             if row['spec'].startswith('perm:') or row['spec'] == 'cat:K'])
    def test_depths_of_the_table(self, spec, depth):
        target = parse_spec(spec)
        if isinstance(target, Catalog):
            target = target.target
        computed = arrangement_depth(target.perm)
        assert computed == (None if depth == '-' else depth)

    @pytest.mark.parametrize('text, sigma', [(row['spec'][5:], str(row['sigma'])) for row in env.TABLE1
                                             if row['spec'].startswith('perm:') and row['depth'] in (0, 1, 2)])
    def test_sigma_lists_of_the_table(self, text, sigma):
        assert sigma_lists(depth2_normal_form(perm(text))).format() == sigma

    @pytest.mark.parametrize('text, negative, positive', [
        ('1234', (), 4), ('2134', (2,), 2), ('21435', (2, 2), 1), ('215436', (2, 3), 1), ('321456', (3,), 3),
        ('1243', (2,), 2), ('4321', (), 4),
    ])
    def test_normal_form(self, text, negative, positive):
        nf = depth2_normal_form(perm(text))
        assert (nf.negative, nf.positive) == (negative, positive)

    def test_format_and_permutation(self):
        nf = NormalFormD2((2, 2), 2)
        assert nf.format() == 'S={2,2}, |J|=2'
        assert nf.permutation == (2, 1, 4, 3, 5, 6)
        assert nf.negative_blocks() == [(1, 2), (3, 4)]
        assert nf.positive_block() == (5, 6)
        assert (nf.n, nf.r, nf.depth) == (6, 2, 2)
        assert depth2_normal_form(nf.permutation) == nf

    @pytest.mark.parametrize('negative, positive', [((3,), 2), ((), 0), ((3, 2), 1), ((1,), 3)])
    def test_invalid_normal_forms(self, negative, positive):
        with pytest.raises(DomainError):
            NormalFormD2(negative, positive)

    def test_above_depth_two(self):
        with pytest.raises(DomainError):
            depth2_normal_form((3, 4, 1, 2, 5, 6))

    def test_sigma_lengths(self):
        for n in range(3, 9):
            for nf in enumerate_normal_forms(n):
                lists = sigma_lists(nf)
                assert (len(lists.sigma1), len(lists.sigma)) == expected_lengths(nf)
                assert set(lists.sigma1) <= set(lists.sigma)

    def test_bottom_components_of_the_negative_arrangement(self):
        nf = depth2_normal_form((2, 1, 3, 4))
        found = {frozenset(torus.equations) for torus in bottom_components_d2(nf)}
        assert found == components(['t4=1 & t2=-1', 't4=t2=t1=1', 't4=t2=t3=1'], 4)
        assert normal_form_basis(nf) == tuple(FreeWord.parse(word, 3) for word in ('x1', 'x1 x2', 'x3'))

    def test_bottom_components_of_a_two_block_arrangement(self):
        nf = depth2_normal_form((2, 1, 4, 3, 5, 6))
        tori = bottom_components_d2(nf)
        assert [torus.codimension for torus in tori] == [5, 5, 5, 4, 4, 3]
        expected = ['t6=1 & t4=-1 & t2=-1', 't6=1 & t4=-1 & t2=t1=1', 't6=t4=t3=1 & t2=-1',
                    't6=t5=t4=t3=t2=1', 't6=t5=t4=t2=t1=1', 't6=t4=t3=t2=t1=1']
        assert {frozenset(torus.equations) for torus in tori} == components(expected, 6)
        assert sorted(torus.codimension for torus in tori) == list(sigma_lists(nf).sigma)

    def test_small_arrangements_have_no_bottom_components(self):
        assert bottom_components_d2(NormalFormD2((), 2)) == []
        assert sigma_lists(NormalFormD2((), 1)).format() == '0'


class TestClassCount:

    @pytest.mark.parametrize('n', range(1, 15))
    def test_enumeration_agrees_with_closed_form(self, n):
        forms = enumerate_normal_forms(n)
        assert len(forms) == len(set(forms)) == count_d2_classes(n)

    def test_values(self):
        assert [count_d2_classes(n) for n in range(1, 8)] == [1, 1, 1, 2, 3, 5, 8]
        with pytest.raises(DomainError):
            count_d2_classes(0)

    def test_partition_numbers(self):
        assert [partition_number(n) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
        assert all(partition_number(n) == npartitions(n) for n in range(60))

    def test_multisets(self):
        assert format_multiset([4, 3, 4, 4, 4]) == '3,4_4'
        assert parse_multiset('3,4_2,5_3') == [3, 4, 4, 5, 5, 5]
        assert parse_multiset(format_multiset([6] * 16)) == [6] * 16


class TestSpecs:

    @pytest.mark.parametrize('text', ['perm:21435', 'cat:K', 'cat:A5', 'xi:n=6;A(1,3)A(2,3)A(4,5)',
                                      'cable(cat:K,k=6,sign=-,r=2)'])
    def test_text_round_trip(self, text):
        assert parse_spec(text).text() == text

    def test_kinds(self):
        assert parse_spec('perm:21435') == Horizontal((2, 1, 4, 3, 5))
        assert isinstance(parse_spec('xi:n=4;A(1,2)'), XiWord)
        cable = parse_spec('cable(cat:K,r=2)')
        assert cable == Cable(Catalog('K'), 6, 1, 2)
        assert cable.n == 8

    def test_horizontal_resolves_to_the_combed_braid(self):
        n, xi = parse_spec('perm:312546').resolve()
        assert n == 6
        assert xi == PureBraidWord.parse('A(1,3) A(2,3) A(4,5)', 5)

    @pytest.mark.parametrize('text, position', [
        ('foo:1', 0), ('perm:2x3', 6), ('xi:n=3;A(1,4)', 9), ('  perm:12a', 9),
    ])
    def test_parse_errors(self, text, position):
        with pytest.raises(ParseError) as error:
            parse_spec(text)
        assert error.value.position == position

    @pytest.mark.parametrize('text', ['cat:Q', 'cable(cat:K', 'cable(cat:K,r=0)', 'cable(cat:K,sign=x)',
                                      'xi:A(1,2)', 'cable(cat:K,r=1,r=2)'])
    def test_invalid_specs(self, text):
        with pytest.raises(ParseError):
            parse_spec(text)

    def test_cable_linking_matches_the_cabled_permutation(self):
        for base, sign, r in [((1, 2), -1, 1), ((2, 1, 3), 1, 2), ((3, 1, 4, 2, 5), -1, 2)]:
            n = len(base)
            cabled = Cable(Horizontal(base), n, sign, r)
            assert cabled.linking() == linking_matrix(cable_perm(base, n, sign, r))

    def test_component_linking(self):
        xi = XiWord(PureBraidWord.parse('A(1,2)', 3), 4)
        assert xi.component_linking(4) == (1, 1, 1)
        with pytest.raises(DomainError):
            xi.component_linking(2)
        assert Horizontal((2, 1, 3)).component_linking(1) == (-1, 1)


class TestCatalog:

    def test_names(self):
        assert {'Z+', 'Z-', 'K', 'L', 'M'} <= set(catalog_names())

    def test_complex_arrangements(self):
        assert catalog('A5') == Horizontal((1, 2, 3, 4, 5))
        assert catalog('A_3') == Horizontal((1, 2, 3))
        assert catalog_basis('A4') is None

    def test_entries(self):
        assert catalog('K') == Horizontal((3, 4, 1, 2, 5, 6))
        assert catalog('M').n == 6
        assert catalog('M').linking() is None
        assert len(catalog_basis('K')) == 5
        assert catalog_basis('M') is None
        with pytest.raises(DomainError):
            catalog('Q')
