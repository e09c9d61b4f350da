"""
Grup Çekirdeği Test Modülü

Cayley tablosu doğrulama, alt gruplar, bölümler ve direkt çarpım testleri.
"""

from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings as hypothesis_settings, strategies as st

from src.errors import (
    NoIdentity,
    NoInverse,
    NotASubgroup,
    NotAssociative,
    NotClosed,
    NotContained,
    NotNormal,
    ParseError,
)
from src.group import (
    Subgroup,
    all_subgroups,
    center,
    coset_decomposition,
    direct_product,
    from_cayley_table,
    is_normal,
    load_cayley_file,
    minimal_generating_set,
    quotient_group,
    subgroup_generated,
    trivial,
    whole,
)
from src.isomorphism import find_isomorphism
from src.named_groups import make_named, parse_group_spec

# Her elemanın mertebesi 2 olan 5 elemanlı döngü; grup olamaz
NON_ASSOCIATIVE_LOOP = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 4, 0, 1, 3],
    [3, 2, 4, 0, 1],
    [4, 3, 1, 2, 0],
]

S4_X_C2 = parse_group_spec('S4xC2')


class TestFromCayleyTable:
    """Tablo doğrulama testleri"""

    def test_cyclic_table(self):
        G = from_cayley_table([[0, 1, 2], [1, 2, 0], [2, 0, 1]])
        assert G.order == 3
        assert G.labels == ('e', 'g1', 'g2')
        assert G.is_abelian

    def test_identity_is_relocated(self):
        G = from_cayley_table([[1, 0], [0, 1]], labels=['x', 'y'])
        assert G.labels == ('e', 'x')
        assert G.mul(1, 1) == 0

    def test_out_of_range_entry(self):
        with pytest.raises(NotClosed) as exc:
            from_cayley_table([[0, 1], [1, 2]])
        assert exc.value.cell == (1, 1)

    def test_not_square(self):
        with pytest.raises(NotClosed):
            from_cayley_table([[0, 1, 2], [1, 0, 2]])

    def test_no_identity(self):
        with pytest.raises(NoIdentity):
            from_cayley_table([[0, 0], [0, 0]])

    def test_no_inverse(self):
        with pytest.raises(NoInverse) as exc:
            from_cayley_table([[0, 1, 2], [1, 2, 2], [2, 2, 2]])
        assert exc.value.element == 1

    def test_not_associative(self):
        with pytest.raises(NotAssociative) as exc:
            from_cayley_table(NON_ASSOCIATIVE_LOOP)
        a, b, c = exc.value.triple
        t = NON_ASSOCIATIVE_LOOP
        assert t[t[a][b]][c] != t[a][t[b][c]]

    def test_duplicate_labels(self):
        with pytest.raises(ValueError):
            from_cayley_table([[0, 1], [1, 0]], labels=['e', 'e'])

    def test_table_is_read_only(self, c3):
        with pytest.raises(ValueError):
            c3.table[0, 0] = 1


class TestLargeGroupAssociativity:
    """Sağ üreteçlerle yapılan kontrolün rastgele üçlülerle doğrulanması"""

    @hypothesis_settings(max_examples=200, deadline=None)
    @given(st.integers(0, 47), st.integers(0, 47), st.integers(0, 47))
    def test_random_triples(self, a, b, c):
        G = S4_X_C2
        assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))

    def test_broken_large_table_detected(self):
        # C5 x döngü: 25 elemanlı, Light testi yolu
        loop = np.array(NON_ASSOCIATIVE_LOOP)
        cyc = (np.arange(5)[:, None] + np.arange(5)[None, :]) % 5
        table = (cyc[:, None, :, None] * 5 + loop[None, :, None, :]).reshape(25, 25)
        with pytest.raises(NotAssociative):
            from_cayley_table(table)


class TestElements:
    """Eleman mertebeleri ve tersler"""

    def test_inverses(self, d4):
        for x in range(d4.order):
            assert d4.mul(x, d4.inv(x)) == 0
            assert d4.mul(d4.inv(x), x) == 0

    def test_element_orders(self, q8):
        orders = dict(zip(q8.labels, q8.element_orders.tolist()))
        assert orders['e'] == 1
        assert orders['-e'] == 2
        assert all(orders[label] == 4 for label in ['i', '-i', 'j', '-j', 'k', '-k'])

    def test_power(self, c4):
        a = c4.label_index['a']
        assert c4.power(a, 2) == c4.label_index['a^2']
        assert c4.power(a, -1) == c4.label_index['a^3']
        assert c4.power(a, 4) == 0


class TestSubgroup:
    """Alt grup doğrulama ve özellikleri"""

    def test_valid_subgroup(self, d4):
        r2 = d4.label_index['r^2']
        H = Subgroup(d4, (0, r2))
        assert H.order == 2
        assert r2 in H

    def test_missing_identity(self, d4):
        with pytest.raises(NotASubgroup):
            Subgroup(d4, (d4.label_index['r^2'],))

    def test_not_closed(self, d4):
        with pytest.raises(NotASubgroup):
            Subgroup(d4, (0, d4.label_index['r']))

    def test_labels(self, d4):
        r = d4.label_index['r']
        assert subgroup_generated(d4, [r]).label == '<r>'
        assert whole(d4).label == 'D4'
        assert trivial(d4).label == '1'

    def test_index_and_containment(self, d4):
        r = d4.label_index['r']
        H = subgroup_generated(d4, [r])
        assert H.index_in(whole(d4)) == 2
        s = subgroup_generated(d4, [d4.label_index['s']])
        with pytest.raises(NotContained):
            s.index_in(H)

    def test_as_group(self, d4):
        H = subgroup_generated(d4, [d4.label_index['r']])
        assert find_isomorphism(H.as_group, make_named('C4')) is not None


class TestSubgroupLattice:
    """all_subgroups sayıları"""

    @pytest.mark.parametrize("spec,count", [
        ('D4', 10), ('Q8', 6), ('S3', 6), ('A4', 10), ('S4', 30), ('C2xC2xC2', 16), ('E2^4', 67),
    ])
    def test_subgroup_counts(self, spec, count):
        assert len(all_subgroups(parse_group_spec(spec))) == count

    def test_cyclic_subgroups_match_divisors(self):
        from sympy import divisor_count
        for n in range(1, 17):
            assert len(all_subgroups(make_named(f"C{n}"))) == divisor_count(n)

    @pytest.mark.parametrize("spec", ['S3', 'C6', 'D4', 'Q8', 'C2xC4', 'C2xC2xC2', 'A4'])
    def test_matches_closed_subset_scan(self, spec):
        """Birim elemanı içeren ve çarpıma kapalı her alt küme bir alt gruptur"""
        G = parse_group_spec(spec)
        others = range(1, G.order)
        closed = set()
        for size in range(G.order):
            for rest in combinations(others, size):
                members = np.array((0,) + rest)
                products = G.table[np.ix_(members, members)]
                if np.isin(products, members).all():
                    closed.add(frozenset(members.tolist()))
        assert {frozenset(H.members) for H in all_subgroups(G)} == closed

    def test_sorted_and_unique(self, s4):
        subgroups = all_subgroups(s4)
        keys = [(H.order, H.members) for H in subgroups]
        assert keys == sorted(keys)
        assert len({H.members for H in subgroups}) == len(subgroups)


class TestGenerators:
    @pytest.mark.parametrize("spec,size", [
        ('C1', 0), ('C12', 1), ('C2xC2', 2), ('D4', 2), ('Q8', 2), ('C2xC2xC2', 3), ('E2^4', 4),
    ])
    def test_minimal_generating_set_size(self, spec, size):
        G = parse_group_spec(spec)
        gens = minimal_generating_set(G)
        assert len(gens) == size
        assert subgroup_generated(G, gens).order == G.order


class TestCenterAndQuotients:
    def test_center_of_d4(self, d4):
        assert [d4.labels[z] for z in center(d4).members] == ['e', 'r^2']

    def test_center_of_s3_is_trivial(self, s3):
        assert center(s3).is_trivial

    def test_normality(self, d4):
        s = subgroup_generated(d4, [d4.label_index['s']])
        r = subgroup_generated(d4, [d4.label_index['r']])
        assert not is_normal(s, whole(d4))
        assert is_normal(r, whole(d4))

    def test_quotient_by_center(self, d4, klein):
        Q = quotient_group(whole(d4), center(d4))
        assert Q.order == 4
        assert find_isomorphism(Q, klein) is not None

    def test_quotient_needs_normal_subgroup(self, d4):
        s = subgroup_generated(d4, [d4.label_index['s']])
        with pytest.raises(NotNormal):
            quotient_group(whole(d4), s)

    def test_coset_representatives(self, d4):
        reps, coset_of = coset_decomposition(whole(d4), center(d4))
        assert len(reps) == 4
        assert reps == tuple(sorted(reps))
        assert all(coset_of[r] == i for i, r in enumerate(reps))


class TestDirectProduct:
    def test_product_of_coprime_cyclics_is_cyclic(self):
        product, first, second = direct_product(make_named('C3'), make_named('C4'))
        assert product.order == 12
        assert find_isomorphism(product, make_named('C12')) is not None
        assert first.order == 3 and second.order == 4

    def test_labels(self):
        product, _, _ = direct_product(make_named('C2'), make_named('C2'))
        assert product.labels == ('e', '(e,a)', '(a,e)', '(a,a)')


class TestLoadCayleyFile:
    def test_load(self, tmp_path):
        path = tmp_path / "c3.txt"
        path.write_text("3\n0 1 2\n1 2 0\n2 0 1\ne,x,y\n", encoding='utf-8')
        G = load_cayley_file(path)
        assert G.order == 3
        assert G.labels == ('e', 'x', 'y')
        assert G.name == 'c3'

    def test_bad_row_reports_line(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("2\n0 1\n1\n", encoding='utf-8')
        with pytest.raises(ParseError) as exc:
            load_cayley_file(path)
        assert exc.value.position == 3


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
