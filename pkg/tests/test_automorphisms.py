"""
Otomorfizma Etkisi Test Modülü
"""

import pytest
from sympy import totient

from src.automorphisms import (
    Automorphism,
    absolute_centralizer,
    aut_centralizer_of_subgroup,
    autocommutator,
    autocommutator_set,
    autocommutator_subgroup,
    automorphism_group,
    automorphisms_by_bijection_scan,
    conjugacy_class,
    fixed_points,
    inner_automorphism_group,
    orbit,
    orbit_partition,
    stabilizer,
    t_set,
)
from src.errors import NotContained, SizeLimitExceeded
from src.group import subgroup_generated, trivial, whole
from src.named_groups import make_named, parse_group_spec


def _labels(G, elements):
    return {G.labels[x] for x in elements}


class TestAutomorphismGroup:
    """Aut(K) sayımı"""

    @pytest.mark.parametrize("n", range(1, 17))
    def test_cyclic_orders_match_totient(self, n):
        assert automorphism_group(make_named(f"C{n}")).order == totient(n)

    @pytest.mark.parametrize("spec,order", [
        ('D4', 8), ('Q8', 24), ('S3', 6), ('S4', 24), ('A4', 24),
        ('C2xC2', 6), ('C2xC2xC2', 168), ('C3xC3', 48), ('C2xC4', 8),
    ])
    def test_orders(self, spec, order):
        assert automorphism_group(parse_group_spec(spec)).order == order

    def test_identity_first_and_closed(self, aut_d4):
        assert aut_d4[0].is_identity
        assert aut_d4.is_closed()
        assert (aut_d4.composition_table >= 0).all()

    @pytest.mark.parametrize("spec", ['C1', 'C5', 'C6', 'C2xC2', 'D4', 'Q8', 'C2xC4'])
    def test_bijection_scan_agrees(self, spec):
        K = parse_group_spec(spec)
        scanned = automorphisms_by_bijection_scan(K)
        assert [a.map for a in scanned] == [a.map for a in automorphism_group(K)]

    def test_bijection_scan_limit(self, s4):
        with pytest.raises(SizeLimitExceeded):
            automorphisms_by_bijection_scan(s4)

    def test_order_cap(self):
        with pytest.raises(SizeLimitExceeded):
            automorphism_group(make_named('C49'))

    def test_inner_automorphisms(self, d4, s3, aut_d4):
        inn = inner_automorphism_group(d4)
        assert inn.order == 4
        assert aut_d4.contains_group(inn)
        # S3 için her otomorfizma içtir
        assert inner_automorphism_group(s3).order == automorphism_group(s3).order


class TestAutomorphism:
    def test_rejects_non_homomorphism(self, c4):
        with pytest.raises(ValueError):
            Automorphism(c4, (0, 2, 1, 3))

    def test_rejects_moved_identity(self, c3):
        with pytest.raises(ValueError):
            Automorphism(c3, (1, 0, 2))

    def test_compose_is_right_to_left(self, aut_d4):
        for alpha in aut_d4:
            for beta in aut_d4:
                composed = alpha.compose(beta)
                assert all(composed(x) == alpha(beta(x)) for x in range(8))

    def test_inverse(self, aut_d4):
        for alpha in aut_d4:
            assert alpha.compose(alpha.inverse()).is_identity

    def test_label_map(self, c3, aut_c3):
        assert aut_c3[1].label_map() == {'e': 'e', 'a': 'a^2', 'a^2': 'a'}


class TestOrbitsAndStabilizers:
    def test_orbits_of_d4(self, d4, aut_d4):
        assert _labels(d4, orbit(aut_d4, d4.label_index['r'])) == {'r', 'r^3'}
        assert _labels(d4, orbit(aut_d4, d4.label_index['s'])) == {'s', 'rs', 'r^2s', 'r^3s'}

    def test_orbit_stabilizer(self, d4, aut_d4):
        for x in range(d4.order):
            assert len(orbit(aut_d4, x)) * stabilizer(aut_d4, x).order == aut_d4.order

    def test_stabilizer_is_closed(self, d4, aut_d4):
        stab = stabilizer(aut_d4, d4.label_index['r'])
        assert stab.order == 4
        assert stab.is_closed()

    def test_orbit_partition_of_klein(self, klein):
        aut = automorphism_group(klein)
        parts = orbit_partition(aut, whole(klein))
        assert [len(p) for p in parts] == [1, 3]

    def test_orbits_may_leave_subgroup(self, d4, aut_d4):
        H = subgroup_generated(d4, [d4.label_index['s']])
        parts = orbit_partition(aut_d4, H)
        assert len(parts) == 2
        assert not parts[1] <= set(H.members)

    def test_foreign_subgroup(self, c3, aut_d4):
        with pytest.raises(NotContained):
            orbit_partition(aut_d4, whole(c3))

    def test_centralizer_of_subgroup(self, d4, aut_d4):
        rotations = subgroup_generated(d4, [d4.label_index['r']])
        assert aut_centralizer_of_subgroup(aut_d4, rotations).order == 4
        assert aut_centralizer_of_subgroup(aut_d4, whole(d4)).order == 1
        assert aut_centralizer_of_subgroup(aut_d4, trivial(d4)).order == 8


class TestCentralizersAndCommutators:
    def test_absolute_centralizer_of_d4(self, d4, aut_d4):
        assert _labels(d4, absolute_centralizer(whole(d4), aut_d4).members) == {'e', 'r^2'}

    def test_absolute_centralizer_is_intersection(self, d4, aut_d4):
        H = subgroup_generated(d4, [d4.label_index['r']])
        common = set(H.members)
        for alpha in aut_d4:
            common &= set(fixed_points(H, alpha).members)
        assert set(absolute_centralizer(H, aut_d4).members) == common

    def test_fixed_points(self, d4, aut_d4):
        H = subgroup_generated(d4, [d4.label_index['r']])
        r = d4.label_index['r']
        alpha = next(a for a in aut_d4 if a(r) == d4.label_index['r^3'])
        assert _labels(d4, fixed_points(H, alpha).members) == {'e', 'r^2'}

    def test_autocommutator(self, c3, aut_c3):
        a = c3.label_index['a']
        assert autocommutator(a, aut_c3[0]) == 0
        assert autocommutator(a, aut_c3[1]) == a

    def test_autocommutator_set_of_rotations(self, d4, aut_d4):
        H = subgroup_generated(d4, [d4.label_index['r']])
        assert _labels(d4, autocommutator_set(H, aut_d4)) == {'e', 'r^2'}

    def test_autocommutator_subgroup(self, d4, aut_d4):
        generated = autocommutator_subgroup(whole(d4), aut_d4)
        assert _labels(d4, generated.members) == {'e', 'r', 'r^2', 'r^3'}

    def test_trivial_aut_group(self):
        C2 = make_named('C2')
        aut = automorphism_group(C2)
        assert aut.order == 1
        assert autocommutator_set(whole(C2), aut) == frozenset({0})
        assert absolute_centralizer(whole(C2), aut).is_whole


class TestTSet:
    def test_coset_size(self, d4, aut_d4):
        r, r2 = d4.label_index['r'], d4.label_index['r^2']
        members = t_set(r, r2, aut_d4)
        assert len(members) == stabilizer(aut_d4, r).order
        assert all(autocommutator(r, alpha) == r2 for alpha in members)

    def test_empty_when_outside_orbit(self, d4, aut_d4):
        assert t_set(d4.label_index['r'], d4.label_index['s'], aut_d4) == ()

    def test_all_pairs(self, q8):
        aut = automorphism_group(q8)
        total = sum(len(t_set(x, g, aut)) for x in range(8) for g in range(8))
        assert total == 8 * aut.order


class TestConjugacyClasses:
    def test_classes_inside_orbits(self, d4, aut_d4):
        for x in range(d4.order):
            assert conjugacy_class(d4, x, aut_d4) <= orbit(aut_d4, x)

    def test_reflection_class(self, d4):
        assert _labels(d4, conjugacy_class(d4, d4.label_index['s'])) == {'s', 'r^2s'}


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
