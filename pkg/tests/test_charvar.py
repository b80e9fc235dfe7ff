import random

import pytest

from src import env
from src.algebra.laurent import LaurentPoly, equal_up_to_unit
from src.arrangements.catalog import catalog_basis
from src.arrangements.normal_form import (bottom_components_d2, depth2_alexander_poly, depth2_normal_form, depth2_tors,
                                          normal_form_basis)
from src.arrangements.spec import Cable, Horizontal, XiWord, parse_spec
from src.braids.braid_word import PureBraidWord
from src.braids.constructions import xi_braid
from src.errors import DomainError
from src.invariants.alexander import alexander_poly, delta, link_alexander_poly
from src.invariants.lattice import count_union_points, intersection_lattice, row_reduce, subtori_tors
from src.invariants.links import cable_link_poly, iterated_cable, torres_specialize
from src.invariants.subtorus import Subtorus
from src.invariants.torsion import minor_check, tors2_recursion, tors_count, torsion_grid, torsion_zeros, verify_subtorus
from src.report import horizontal_perm

SLOW = {'cat:L', 'cat:M'}


def table_rows(*fields: str) -> list:
    return [pytest.param(*(row[field] for field in fields), id=row['spec'],
                         marks=[pytest.mark.slow] if row['spec'] in SLOW else [])
            for row in env.TABLE1]


def horizontal_rows(smallest: int = 2) -> list:
    rows = []
    for row in env.TABLE1:
        perm = horizontal_perm(parse_spec(row['spec']))
        if perm is not None and len(perm) >= smallest:
            rows.append(pytest.param(perm, id=row['spec'], marks=[pytest.mark.slow] if len(perm) > 5 else []))
    return rows


def delete_line(perm: tuple[int, ...], label: int) -> tuple[int, ...]:
    return tuple(value - (value > label) for value in perm if value != label)


def tori(texts: list[str], nvars: int) -> list[Subtorus]:
    return [Subtorus.parse(text, nvars) for text in texts]


K_BOTTOM = [
    't6=1 & t4=-1 & t3=-1 & t2=1',
    't6=1 & t4=-1 & t3=1 & t1=1',
    't6=t5=t4=1 & t3=-1',
    't6=t5=t4=t3=t1=1',
    't6=t5=t4=t3=t2=1',
    't6=t4=t3=t2=t1=1',
]


class TestTorsionCounts:

    @pytest.mark.parametrize('spec, tors2, tors3', table_rows('spec', 'tors2', 'tors3'))
    def test_invariants_table(self, spec, tors2, tors3):
        arrangement = parse_spec(spec)
        assert tors_count(arrangement, 2, 1).count == tors2
        assert tors_count(arrangement, 3, 1).count == tors3

    def test_bottom_variety_of_m(self):
        assert tors_count(parse_spec('cat:M'), 2, 4).count == 16

    @pytest.mark.parametrize('perm', horizontal_rows())
    def test_decreasing_in_k(self, perm):
        arrangement = Horizontal(perm)
        for p in (2, 3):
            counts = [tors_count(arrangement, p, k).count for k in range(1, arrangement.n + 1)]
            assert counts == sorted(counts, reverse=True)
            assert counts[-1] == 0

    @pytest.mark.parametrize('spec', table_rows('spec'))
    def test_two_torsion_bounds(self, spec):
        arrangement = parse_spec(spec)
        n = arrangement.n
        assert 2 ** (n - 1) - 1 <= tors_count(arrangement, 2, 1).count <= 2 ** (n - 1)

    @pytest.mark.parametrize('perm', [(2, 1, 3, 4), (2, 1, 4, 3, 5), (2, 1, 5, 4, 3, 6)])
    def test_bottom_components_account_for_every_point(self, perm):
        nf = depth2_normal_form(perm)
        components = bottom_components_d2(nf)
        for p in (2, 3):
            assert count_union_points(components, p) == tors_count(Horizontal(nf.permutation), p, nf.n - 2).count

    def test_conjugate_braid_gives_the_same_count(self):
        other = PureBraidWord(4, (((1, 3), 1), ((2, 4), -1)))
        assert tors_count(XiWord(xi_braid((3, 1, 4, 2, 5)).conjugate(other), 5), 3, 1).count == 141

    def test_invalid_arguments(self):
        arrangement = parse_spec('perm:2134')
        with pytest.raises(DomainError):
            tors_count(arrangement, 4, 1)
        with pytest.raises(DomainError):
            tors_count(arrangement, 3, 0)
        with pytest.raises(DomainError):
            tors_count(parse_spec('cable(cat:A3)'), 3, 2)

    def test_zero_set_on_the_grid(self):
        poly = LaurentPoly.parse('t1*t2 - 1', 2)
        zeros = torsion_zeros(poly, 5)
        assert len(zeros) == 5
        assert all((a + b) % 5 == 0 for a, b in zeros)
        assert len(torsion_grid(3, 4)) == 81
        assert len(torsion_zeros(LaurentPoly.zero(3), 2)) == 8

    def test_threads_give_the_same_count(self, monkeypatch):
        monkeypatch.setattr(env, 'CHUNK_SIZE', 7)
        monkeypatch.setattr(env, 'THREADS', 3)
        assert tors_count(parse_spec('perm:214356'), 3, 1).count == 513


class TestRecursion:

    @pytest.mark.parametrize('spec, tors2, gamma', table_rows('spec', 'tors2', 'gamma'))
    def test_invariants_table(self, spec, tors2, gamma):
        arrangement = parse_spec(spec)
        if arrangement.n < 2:
            pytest.skip('the recursion starts at two planes')
        assert tors2_recursion(arrangement.n, delta(arrangement), gamma) == tors2

    def test_values(self):
        assert tors2_recursion(6, 1, [0]) == 32
        assert tors2_recursion(6, 0, []) == 31
        assert tors2_recursion(5, 0, [1]) == 17
        with pytest.raises(DomainError):
            tors2_recursion(1, 0, [])


class TestSubtori:

    def test_parse(self):
        torus = Subtorus.parse('t6=t5=t4=1 & t3=-1', 6)
        assert torus.codimension == 4
        assert torus.is_translated
        assert Subtorus.parse('t6=t4^2*t3^-2', 6).equations == (((0, 0, 2, -2, 0, 1), 1),)

    def test_dependent_equations(self):
        with pytest.raises(DomainError):
            Subtorus.parse('t1=1 & t1^2=1', 2)

    def test_contains(self):
        torus = Subtorus.parse('t2=-1 & t1*t3=1', 3)
        assert torus.contains((1, 1, 1), 2)
        assert not torus.contains((0, 1, 1), 2)
        assert not torus.contains((1, 1, 2), 3)

    def test_parametrization_lands_on_the_torus(self):
        torus = Subtorus.parse('t6=t4^2*t3^-2 & t5=-1', 6)
        sub = torus.parametrization()
        assert sub.nvars_out == 4
        images = [LaurentPoly.monomial(image, image_sign) for image_sign, image in sub.images]
        for exps, sign in torus.equations:
            value = LaurentPoly.one(4)
            for image, e in zip(images, exps):
                value = value * image ** e
            assert value == sign

    def test_alexander_variety_of_k(self):
        components = tori(['t6=1', 't6=t3^2', 't6=t4^2', 't6=t4^2*t3^-2'], 6)
        assert subtori_tors(components, 2) == 32
        assert subtori_tors(components, 3) == 567

    def test_alexander_variety_of_the_depth_three_example(self):
        components = tori(['t6=1', 't6=t5^2', 't6=t3^2', 't6=t3^2*t2^-2'], 6)
        assert subtori_tors(components, 2) == 32
        assert subtori_tors(components, 3) == 585

    def test_moebius_count_agrees_with_enumeration(self):
        rng = random.Random(43)
        checked = 0
        while checked < 40:
            n = rng.randint(2, 4)
            components = []
            for _ in range(rng.randint(1, 4)):
                rows = [tuple(rng.randint(-2, 2) for _ in range(n)) for _ in range(rng.randint(1, n))]
                try:
                    components.append(Subtorus(n, tuple((row, 1) for row in rows)))
                except DomainError:
                    continue
            if not components:
                continue
            for p in (2, 3, 5):
                assert subtori_tors(components, p) == count_union_points(components, p)
            checked += 1

    def test_translated_tori(self):
        translated = tori(['t2=-1'], 2)
        with pytest.raises(DomainError):
            subtori_tors(translated, 2)
        assert count_union_points(translated, 2) == 2
        assert count_union_points(translated, 3) == 0

    def test_lattice(self):
        graph = intersection_lattice(tori(['t1=1', 't2=1', 't1*t2=1'], 2), 3)
        assert graph.number_of_nodes() == 5
        assert row_reduce([[2, 4], [1, 2]], 3) == ((1, 2),)


class TestVerification:

    @pytest.mark.parametrize('text', K_BOTTOM)
    def test_bottom_variety_of_k(self, text):
        spec = parse_spec('cat:K')
        assert verify_subtorus(spec, Subtorus.parse(text, 6), 4, catalog_basis('K'))

    def test_full_torus_is_not_contained(self):
        spec = parse_spec('cat:K')
        results = minor_check(spec, Subtorus(6), 4, catalog_basis('K'))
        assert not all(results)
        assert not verify_subtorus(spec, Subtorus(6), 1, catalog_basis('K'))

    @pytest.mark.parametrize('text', ['t4=1 & t2=-1', 't4=t2=t1=1', 't4=t2=t3=1'])
    def test_bottom_variety_of_the_negative_arrangement(self, text):
        assert verify_subtorus(parse_spec('cat:Z-'), Subtorus.parse(text, 4), 2, catalog_basis('Z-'))

    def test_alexander_variety_is_contained_in_v1(self):
        for text in ['t6=1', 't6=t3^2', 't6=t4^2', 't6=t4^2*t3^-2']:
            assert verify_subtorus(parse_spec('cat:K'), Subtorus.parse(text, 6), 1, catalog_basis('K'))

    @pytest.mark.slow
    @pytest.mark.parametrize('text', K_BOTTOM)
    def test_l_shares_the_bottom_variety_of_k(self, text):
        assert verify_subtorus(parse_spec('cat:L'), Subtorus.parse(text, 6), 4, catalog_basis('L'))

    @pytest.mark.slow
    @pytest.mark.parametrize('p, count', [(2, 16), (3, 7)])
    def test_bottom_torsion_of_k_and_l(self, p, count):
        assert tors_count(parse_spec('cat:K'), p, 4).count == count
        assert tors_count(parse_spec('cat:L'), p, 4).count == count

    def test_wrong_dimension(self):
        with pytest.raises(DomainError):
            minor_check(parse_spec('cat:K'), Subtorus(5), 4)


class TestLinks:

    def test_cables_of_the_unknot(self):
        unknot = LaurentPoly.one(1)
        assert cable_link_poly(unknot, 1, 1, 1, []) == 1
        assert equal_up_to_unit(cable_link_poly(unknot, 1, 1, 2, []), LaurentPoly.parse('t1*t2 + 1', 2))
        with pytest.raises(DomainError):
            cable_link_poly(unknot, 1, 2, 4, [])

    @pytest.mark.parametrize('n, r', [(2, 1), (3, 1), (3, 2), (4, 2)])
    def test_positive_cables_of_complex_arrangements(self, n, r):
        cabled = link_alexander_poly(Cable(Horizontal(tuple(range(1, n + 1))), n, 1, r))
        assert equal_up_to_unit(cabled, link_alexander_poly(Horizontal(tuple(range(1, n + r + 1)))))

    def test_iterated_cable_linking(self):
        _, vector = iterated_cable(LaurentPoly.one(2), 2, -1, 3, [1])
        assert vector == (1, -1, -1, -1)
        with pytest.raises(DomainError):
            iterated_cable(LaurentPoly.one(2), 2, 2, 1, [1])

    def test_torres_specialization(self):
        a3 = link_alexander_poly(parse_spec('cat:A3'))
        a4 = link_alexander_poly(parse_spec('cat:A4'))
        assert torres_specialize(a3, 3, [1, 1]) == 1
        assert equal_up_to_unit(torres_specialize(a4, 4, [1, 1, 1]), a3)
        assert torres_specialize(LaurentPoly.one(2), 2, [1]) == 1
        with pytest.raises(DomainError):
            torres_specialize(LaurentPoly.one(2), 2, [0])

    @pytest.mark.parametrize('perm', horizontal_rows(smallest=3))
    def test_torres_on_every_line(self, perm):
        spec = Horizontal(perm)
        poly = link_alexander_poly(spec)
        for label in range(1, spec.n + 1):
            sublink = link_alexander_poly(Horizontal(delete_line(perm, label)))
            assert equal_up_to_unit(torres_specialize(poly, label, spec.component_linking(label)), sublink)

    def test_torres_when_the_top_plane_moves(self):
        for perm in [(2, 1, 4, 3, 5), (3, 1, 4, 2, 5), (2, 1, 5, 4, 3, 6)]:
            spec = Horizontal(perm)
            top = torres_specialize(link_alexander_poly(spec), spec.n, spec.component_linking(spec.n))
            assert equal_up_to_unit(top, link_alexander_poly(Horizontal(perm[:-1])))

    def test_torres_on_an_arrangement(self):
        spec = parse_spec('perm:2134')
        top = torres_specialize(link_alexander_poly(spec), 4, spec.component_linking(4))
        assert equal_up_to_unit(top, link_alexander_poly(parse_spec('perm:213')))

    @pytest.mark.parametrize('spec, tors3', [('cable(cat:K)', 1701), ('cable(cat:K,r=2)', 5103)])
    def test_cables_of_k(self, spec, tors3):
        assert tors_count(parse_spec(spec), 3, 1).count == tors3

    @pytest.mark.parametrize('spec', [
        'cable(cat:K)', 'cable(cat:K,r=2)',
        pytest.param('cable(cat:L)', marks=pytest.mark.slow), pytest.param('cable(cat:L,r=2)', marks=pytest.mark.slow),
    ])
    def test_cable_two_torsion(self, spec):
        cable = parse_spec(spec)
        assert tors_count(cable, 2, 1).count == 2 ** (cable.r + 5)

    @pytest.mark.slow
    @pytest.mark.parametrize('r, tors3', [(1, 1647), (2, 4941)])
    def test_cables_of_l(self, r, tors3):
        assert tors_count(parse_spec(f'cable(cat:L,r={r})'), 3, 1).count == tors3


class TestDepthTwoClosedForms:

    @pytest.mark.parametrize('perm', ['2134', '21345', '21435', '213456', '321456', '215436', '214356'])
    def test_alexander_polynomial(self, perm):
        nf = depth2_normal_form(tuple(int(c) for c in perm))
        target = Horizontal(nf.permutation)
        assert equal_up_to_unit(alexander_poly(target, normal_form_basis(nf)), depth2_alexander_poly(nf))

    @pytest.mark.parametrize('spec, tors2, tors3', table_rows('spec', 'tors2', 'tors3'))
    def test_torsion(self, spec, tors2, tors3):
        arrangement = parse_spec(spec)
        if not isinstance(arrangement, Horizontal):
            pytest.skip('not a horizontal arrangement')
        try:
            nf = depth2_normal_form(arrangement.perm)
        except DomainError:
            pytest.skip('depth above two')
        assert depth2_tors(nf, 2) == tors2
        assert depth2_tors(nf, 3) == tors3
