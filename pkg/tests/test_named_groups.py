"""
İsimli Grup Test Modülü
"""

import pytest

from src.errors import ParseError, SizeLimitExceeded, UnknownSpec
from src.isomorphism import classify, find_isomorphism
from src.named_groups import make_named, parse_group_spec


class TestMakeNamed:
    """Kurucu testleri"""

    @pytest.mark.parametrize("spec,order", [
        ('C1', 1), ('C7', 7), ('D3', 6), ('D4', 8), ('Q8', 8),
        ('S3', 6), ('S4', 24), ('A4', 12), ('A5', 60), ('E2^3', 8), ('E3^2', 9),
    ])
    def test_orders(self, spec, order):
        assert make_named(spec).order == order

    def test_dihedral_labels(self, d4):
        assert d4.labels == ('e', 'r', 'r^2', 'r^3', 's', 'rs', 'r^2s', 'r^3s')

    def test_dihedral_relation(self, d4):
        r, s = d4.label_index['r'], d4.label_index['s']
        # s r s = r⁻¹
        assert d4.mul(d4.mul(s, r), s) == d4.inv(r)

    def test_quaternion_relations(self, q8):
        i, j, k = (q8.label_index[x] for x in ('i', 'j', 'k'))
        minus_e = q8.label_index['-e']
        assert q8.mul(i, i) == minus_e
        assert q8.mul(i, j) == k
        assert q8.mul(j, i) == q8.label_index['-k']

    def test_symmetric_cycle_labels(self, s3):
        assert set(s3.labels) == {'e', '(12)', '(13)', '(23)', '(123)', '(132)'}

    def test_d3_is_s3(self, s3):
        assert find_isomorphism(make_named('D3'), s3) is not None

    def test_elementary_abelian(self):
        structure = classify(make_named('E3^2'))
        assert structure.is_elementary_square(3)

    @pytest.mark.parametrize("spec", ['Z4', 'C', 'S6', 'E4^2', 'C0', 'q8'])
    def test_unknown_specs(self, spec):
        with pytest.raises(UnknownSpec):
            make_named(spec)

    def test_size_limit(self):
        with pytest.raises(SizeLimitExceeded):
            make_named('C20000')


class TestParseGroupSpec:
    """`isim ("x" isim)*` dilbilgisi testleri"""

    def test_product(self):
        G = parse_group_spec('C3xC4')
        assert G.order == 12
        assert G.name == 'C3xC4'
        assert classify(G).is_cyclic_of_order(12)

    def test_triple_product(self):
        assert parse_group_spec('C2xC2xC2').order == 8

    def test_unknown_factor_position(self):
        with pytest.raises(ParseError) as exc:
            parse_group_spec('C3xZ5')
        assert exc.value.position == 3

    def test_empty_factor(self):
        with pytest.raises(ParseError):
            parse_group_spec('C3xxC4')

    def test_empty_spec(self):
        with pytest.raises(ParseError):
            parse_group_spec('  ')


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
