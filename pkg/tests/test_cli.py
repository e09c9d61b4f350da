"""
Komut Satırı Test Modülü

main() çağrıları geçici dizinde çalıştırılır; log ve rapor dosyaları
oraya yazılır.
"""

import json

import pytest

from src.cli import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, main, normalize_label


@pytest.fixture(autouse=True)
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


class TestNormalizeLabel:
    @pytest.mark.parametrize("raw,expected", [
        ('r2', 'r^2'), ('r^1', 'r'), (' r ^2 ', 'r^2'), ('r2s', 'r^2s'), ('e', 'e'), ('a^12', 'a^12'),
    ])
    def test_normalize(self, raw, expected):
        assert normalize_label(raw) == expected


class TestCompute:
    def test_text(self, capsys):
        """Pr_{r^2}(<r>, Aut(D4)) = 1/4"""
        assert main(['compute', '--group', 'D4', '--subgroup', 'r', '--g', 'r^2']) == EXIT_OK
        assert capsys.readouterr().out == '1/4 (0.250000)\n'

    def test_short_label(self, capsys):
        assert main(['compute', '--group', 'D4', '--subgroup', 'r', '--g', 'r2']) == EXIT_OK
        assert capsys.readouterr().out == '1/4 (0.250000)\n'

    def test_json(self, capsys):
        assert main(['compute', '--group', 'C3', '--format', 'json']) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert (data['num'], data['den']) == (2, 3)

    def test_csv(self, capsys):
        assert main(['compute', '--group', 'D4', '--subgroup', 'r', '--g', 'r^2', '--format', 'csv']) == EXIT_OK
        assert capsys.readouterr().out.splitlines() == ['group,subgroup,g_label,num,den', 'D4,<r>,r^2,1,4']

    def test_log(self, workdir):
        assert main(['compute', '--group', 'C3', '--log']) == EXIT_OK
        text = (workdir / 'logs' / 'autocomm_results.log').read_text(encoding='utf-8')
        assert 'Pr_e(C3, Aut(C3)) = 2/3' in text

    def test_unknown_label(self, capsys):
        """Bilinmeyen etiket kullanım hatasıdır"""
        assert main(['compute', '--group', 'D4', '--g', 'b']) == EXIT_USAGE
        assert 'error:' in capsys.readouterr().err

    def test_unknown_group(self):
        assert main(['compute', '--group', 'Z9']) == EXIT_USAGE

    def test_malformed_group(self):
        assert main(['compute', '--group', 'C3 x']) == EXIT_USAGE

    def test_missing_command(self):
        assert main([]) == EXIT_USAGE

    def test_table_file(self, workdir, capsys):
        path = workdir / 'c3.txt'
        path.write_text("3\n0 1 2\n1 2 0\n2 0 1\n", encoding='utf-8')
        assert main(['compute', '--group', str(path)]) == EXIT_OK
        assert capsys.readouterr().out.startswith('2/3')


class TestDistribution:
    def test_text(self, capsys):
        assert main(['distribution', '--group', 'C3']) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == 'Pr_g(C3, Aut(C3)), |Aut| = 2'
        assert lines[2].split() == ['e', '2/3', '0.666667', '4']

    def test_out_file(self, workdir):
        assert main(['distribution', '--group', 'C4', '--format', 'json', '--out', 'p.json']) == EXIT_OK
        data = json.loads((workdir / 'p.json').read_text(encoding='utf-8'))
        assert len(data['values']) == 4


class TestVerify:
    def test_small_catalog(self, workdir, capsys):
        assert main(['verify', '--max-order', '4', '--out', 'r.json']) == EXIT_OK
        out = capsys.readouterr().out
        assert 'counterexamples: 0' in out
        data = json.loads((workdir / 'r.json').read_text(encoding='utf-8'))
        assert data['catalog'] == ['C1', 'C2', 'C3', 'C4', 'C2xC2']

    def test_log_summary(self, workdir):
        assert main(['verify', '--max-order', '2', '--log']) == EXIT_OK
        text = (workdir / 'logs' / 'autocomm_results.log').read_text(encoding='utf-8')
        assert 'SUMMARY:' in text
        assert '0 counterexamples' in text

    def test_max_order_cap(self):
        assert main(['verify', '--max-order', '49']) == EXIT_USAGE


class TestAut:
    def test_q8(self, capsys):
        assert main(['aut', '--group', 'Q8']) == EXIT_OK
        assert capsys.readouterr().out == '|Aut(Q8)| = 24\n|Inn(Q8)| = 4\n'

    def test_json_lists_images(self, capsys):
        assert main(['aut', '--group', 'C2xC2', '--format', 'json']) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert (data['order'], data['inn_order']) == (6, 1)
        assert len(data['automorphisms']) == 6
        assert all(sorted(a['images']) == [0, 1, 2, 3] for a in data['automorphisms'])

    def test_list(self, capsys):
        assert main(['aut', '--group', 'C3', '--list']) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[2].strip() == '0: id'
        assert lines[3].strip() == '1: a->a^2, a^2->a'


class TestAutoiso:
    def test_found(self, capsys):
        assert main(['autoiso', '--group', 'C3', '--pair2-group', 'C6']) == EXIT_OK
        assert capsys.readouterr().out.startswith('autoisoclinism (C3, C3) -> (C6, C6)')

    def test_none(self, capsys):
        """Farklı invaryantlar: tanık yok"""
        assert main(['autoiso', '--group', 'D4', '--subgroup', 'r', '--pair2-group', 'C3']) == EXIT_FAILURE
        assert capsys.readouterr().out == 'none\n'

    def test_budget(self, capsys):
        assert main(['autoiso', '--group', 'S4']) == EXIT_FAILURE
        assert capsys.readouterr().out.startswith('budget exceeded')


class TestCatalog:
    def test_json(self, capsys):
        assert main(['catalog', '--max-order', '4', '--format', 'json']) == EXIT_OK
        entries = json.loads(capsys.readouterr().out)
        assert [e['group'] for e in entries] == ['C1', 'C2', 'C3', 'C4', 'C2xC2']
        assert entries[-1]['aut_order'] == 6


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
