"""
Komut Satırı Arayüzü

Alt komutlar:
    compute       Pr_g(H, Aut(K)) değeri
    distribution  tüm g ∈ K için profil tablosu
    verify        katalog doğrulaması ve rapor
    aut           |Aut(K)| ve isteğe bağlı otomorfizma listesi
    autoiso       iki (H, K) çifti arasında otoizoklinizm tanığı
    catalog       varsayılan katalog özeti

Çıkış kodları: 0 başarılı, 1 karşı örnek ya da istenen tanık yok,
2 kullanım/ayrıştırma hatası.
"""

import argparse
import json
import logging
import re
import sys
from pathlib import Path
from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, ValidationError, field_validator

from config.settings import settings
from src.autoisoclinism import SubgroupPair, find_autoisoclinism
from src.automorphisms import automorphism_group, inner_automorphism_group
from src.errors import AutocommError, NotASubgroupSpec, SearchBudgetExceeded, UnknownLabel
from src.export import (
    automorphism_group_to_json,
    profile_to_csv,
    profile_to_json,
    report_to_csv,
    report_to_json,
    witness_to_json,
    write_text,
)
from src.group import Group, Subgroup, all_subgroups, load_cayley_file, subgroup_generated, whole
from src.logger import LogManager, setup_logging
from src.named_groups import parse_group_spec
from src.probability import distribution
from src.utils import format_rational
from src.verifier import run_catalog

logger = logging.getLogger('autocomm.cli')

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

_SPEC_PATTERN = re.compile(r'^[A-Za-z0-9^]+(x[A-Za-z0-9^]+)*$')
_POWER_PATTERN = re.compile(r'([A-Za-z])(\d+)')


class CommandRequest(BaseModel):
    """Tek bir CLI çağrısı"""
    command: Literal['compute', 'distribution', 'verify', 'autoiso', 'catalog', 'aut']
    group: Optional[str] = None
    subgroup: Optional[str] = None
    g: Optional[str] = None
    format: Literal['text', 'json', 'csv'] = 'text'
    out: Optional[str] = None
    max_order: Optional[int] = None
    pair2_group: Optional[str] = None
    pair2_subgroup: Optional[str] = None
    list_automorphisms: bool = False
    log: bool = False

    @field_validator('group', 'pair2_group')
    @classmethod
    def validate_group(cls, v):
        if v is None:
            return v
        v = v.strip()
        if not (_SPEC_PATTERN.match(v) or Path(v).is_file()):
            raise ValueError(f'{v!r} is neither a group spec nor a Cayley table file')
        return v

    @field_validator('max_order')
    @classmethod
    def validate_max_order(cls, v):
        if v is None:
            return v
        if not 1 <= v <= settings.catalog.hard_max_order:
            raise ValueError(f'max_order must be between 1 and {settings.catalog.hard_max_order}')
        return v


def _build_group(spec: str) -> Group:
    if Path(spec).is_file():
        return load_cayley_file(spec)
    return parse_group_spec(spec)


def normalize_label(label: str) -> str:
    """`r2` -> `r^2`, `r^1` -> `r`, boşluklar atılır."""
    text = ''.join(label.split())
    text = _POWER_PATTERN.sub(r'\1^\2', text)
    return re.sub(r'\^1(?!\d)', '', text)


def resolve_label(K: Group, label: str) -> int:
    """
    Etiketi eleman indeksine çevirir; önce aynen, sonra normalize edilmiş hali aranır.

    Raises:
        UnknownLabel: etiket K'da yoksa
    """
    index = K.label_index
    for candidate in (label.strip(), normalize_label(label)):
        if candidate in index:
            return index[candidate]
    raise UnknownLabel(f"{label!r} is not an element label of {K.name}")


def _resolve_subgroup(K: Group, spec: Optional[str]) -> Subgroup:
    if spec is None or not spec.strip():
        return whole(K)
    pieces = spec.split(',')
    if any(not piece.strip() for piece in pieces):
        raise NotASubgroupSpec(f"empty generator in subgroup spec {spec!r}")
    return subgroup_generated(K, [resolve_label(K, piece) for piece in pieces])


def parse_specs(request: CommandRequest) -> Tuple[Group, Subgroup, int]:
    """
    İstekten (K, H, g) üretir; H varsayılan olarak K, g varsayılan olarak e.

    Raises:
        ParseError, UnknownLabel, NotASubgroupSpec
    """
    if request.group is None:
        raise NotASubgroupSpec(f"{request.command} needs --group")
    K = _build_group(request.group)
    H = _resolve_subgroup(K, request.subgroup)
    g = resolve_label(K, request.g) if request.g is not None else 0
    return K, H, g


def _emit(request: CommandRequest, text: str) -> None:
    if request.out:
        write_text(request.out, text)
    else:
        sys.stdout.write(text)


def _table(rows: List[Tuple[str, ...]]) -> str:
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = ['  '.join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    return '\n'.join(lines) + '\n'


# --- Alt komutlar ---

def _compute(request: CommandRequest) -> int:
    K, H, g = parse_specs(request)
    aut = automorphism_group(K)
    value = distribution(H, aut)[g]
    if request.format == 'text':
        text = format_rational(value, with_decimal=True) + '\n'
    else:
        payload = {
            'group': K.name,
            'subgroup': H.label,
            'g_label': K.labels[g],
            'num': value.numerator,
            'den': value.denominator,
        }
        if request.format == 'json':
            text = json.dumps(payload, indent=2) + '\n'
        else:
            text = ','.join(payload) + '\n' + ','.join(str(v) for v in payload.values()) + '\n'
    _emit(request, text)
    if request.log:
        LogManager().log_result(K.name, H.label, K.labels[g], value)
    return EXIT_OK


def _distribution(request: CommandRequest) -> int:
    K, H, _ = parse_specs(request)
    profile = distribution(H, automorphism_group(K))
    if request.format == 'json':
        text = profile_to_json(profile) + '\n'
    elif request.format == 'csv':
        text = profile_to_csv(profile)
    else:
        rows = [('g', 'Pr_g', 'decimal', 'pairs')]
        for g, value in enumerate(profile.values):
            rows.append((
                K.labels[g],
                format_rational(value),
                f"{float(value):.{settings.output.decimal_places}f}",
                str(profile.pair_counts[g]),
            ))
        text = f"Pr_g({H.label}, Aut({K.name})), |Aut| = {profile.aut_order}\n" + _table(rows)
    _emit(request, text)
    return EXIT_OK


def _verify(request: CommandRequest) -> int:
    report = run_catalog(max_order=request.max_order)
    text = report_to_csv(report) if request.format == 'csv' else report_to_json(report) + '\n'
    path = write_text(request.out or settings.output.default_report_path, text)
    summary = report.summary()
    sys.stdout.write(
        f"groups: {summary['groups']}\n"
        f"checks: {summary['checks']} (applicable {summary['applicable']}, passed {summary['passed']})\n"
        f"counterexamples: {summary['counterexamples']}\n"
        f"observations: {summary['observations']}\n"
        f"report: {path}\n"
    )
    for check in report.counterexamples:
        sys.stdout.write(f"COUNTEREXAMPLE {check.name} {check.instance}: {check.lhs} {check.relation} {check.rhs}\n")
    if request.log:
        LogManager().log_summary(summary['checks'], summary['counterexamples'])
    return EXIT_OK if report.ok else EXIT_FAILURE


def _aut(request: CommandRequest) -> int:
    K, _, _ = parse_specs(request)
    aut = automorphism_group(K)
    inner = inner_automorphism_group(K)
    if request.format == 'json':
        # JSON her zaman tam görüntü listesini taşır
        text = automorphism_group_to_json(aut, inn_order=inner.order) + '\n'
    else:
        text = f"|Aut({K.name})| = {aut.order}\n|Inn({K.name})| = {inner.order}\n"
        if request.list_automorphisms:
            for i, alpha in enumerate(aut):
                mapping = ', '.join(f"{x}->{y}" for x, y in alpha.label_map().items() if x != y)
                text += f"{i:>3}: {mapping or 'id'}\n"
    _emit(request, text)
    return EXIT_OK


def _autoiso(request: CommandRequest) -> int:
    K1, H1, _ = parse_specs(request)
    if request.pair2_group is not None:
        K2 = _build_group(request.pair2_group)
    else:
        K2 = K1
    H2 = _resolve_subgroup(K2, request.pair2_subgroup)
    pair1 = SubgroupPair(H1, automorphism_group(K1))
    pair2 = SubgroupPair(H2, automorphism_group(K2))
    try:
        witness = find_autoisoclinism(pair1, pair2)
    except SearchBudgetExceeded as exc:
        sys.stdout.write(f"budget exceeded: {exc}\n")
        return EXIT_FAILURE
    if witness is None:
        sys.stdout.write("none\n")
        return EXIT_FAILURE
    if request.format == 'json':
        text = witness_to_json(witness) + '\n'
    else:
        lines = [f"autoisoclinism ({H1.label}, {K1.name}) -> ({H2.label}, {K2.name})"]
        lines.append('psi:   ' + ', '.join(f"{x}->{y}" for x, y in witness.psi.label_map().items()))
        lines.append('gamma: ' + ', '.join(f"{x}->{y}" for x, y in witness.gamma.label_map().items()))
        beta = [
            f"{K1.labels[g]}->{K2.labels[witness.beta_on_parent(g)]}"
            for g in pair1.commutator_subgroup.members
        ]
        lines.append('beta:  ' + ', '.join(beta))
        text = '\n'.join(lines) + '\n'
    _emit(request, text)
    return EXIT_OK


def _catalog(request: CommandRequest) -> int:
    max_order = request.max_order or settings.catalog.default_max_order
    rows = [('group', 'order', 'aut_order', 'subgroups')]
    for spec in settings.catalog.default_catalog:
        K = parse_group_spec(spec)
        if K.order > max_order:
            continue
        rows.append((K.name, str(K.order), str(automorphism_group(K).order), str(len(all_subgroups(K)))))
    if request.format == 'csv':
        text = '\n'.join(','.join(row) for row in rows) + '\n'
    elif request.format == 'json':
        header = rows[0]
        entries = [dict(zip(header, (r[0],) + tuple(int(v) for v in r[1:]))) for r in rows[1:]]
        text = json.dumps(entries, indent=2) + '\n'
    else:
        text = _table(rows)
    _emit(request, text)
    return EXIT_OK


_HANDLERS = {
    'compute': _compute,
    'distribution': _distribution,
    'verify': _verify,
    'aut': _aut,
    'autoiso': _autoiso,
    'catalog': _catalog,
}


def run(request: CommandRequest) -> int:
    """İsteği çalıştırır ve çıkış kodunu döndürür."""
    try:
        return _HANDLERS[request.command](request)
    except AutocommError as exc:
        logger.error(f"{request.command} failed: {exc}")
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Generalized autocommuting probability toolkit")
    commands = parser.add_subparsers(dest='command', required=True)

    def common(sub: argparse.ArgumentParser, group_required: bool = True) -> None:
        sub.add_argument('--group', required=group_required, help="Group spec (C4, D4, C3xC4, ...) or table file")
        sub.add_argument('--subgroup', help="Comma-separated generator labels (default: whole group)")
        sub.add_argument('--format', choices=['text', 'json', 'csv'], default='text')
        sub.add_argument('--out', help="Write output to this file")

    compute = commands.add_parser('compute', help="Pr_g(H, Aut(K))")
    common(compute)
    compute.add_argument('--g', help="Element label (default: identity)")
    compute.add_argument('-l', '--log', action='store_true', help="Append the value to the results log")

    common(commands.add_parser('distribution', help="Full Pr_g profile"))

    verify = commands.add_parser('verify', help="Run the catalog verification suite")
    verify.add_argument('--format', choices=['json', 'csv'], default='json')
    verify.add_argument('--out', help=f"Report path (default: {settings.output.default_report_path})")
    verify.add_argument('--max-order', type=int, dest='max_order')
    verify.add_argument('-l', '--log', action='store_true', help="Append a summary to the results log")

    aut = commands.add_parser('aut', help="|Aut(K)| and optional listing")
    common(aut)
    aut.add_argument('--list', action='store_true', dest='list_automorphisms')

    autoiso = commands.add_parser('autoiso', help="Autoisoclinism between two pairs")
    common(autoiso)
    autoiso.add_argument('--pair2-group', dest='pair2_group')
    autoiso.add_argument('--pair2-subgroup', dest='pair2_subgroup')

    catalog = commands.add_parser('catalog', help="Summary of the default catalog")
    catalog.add_argument('--format', choices=['text', 'json', 'csv'], default='text')
    catalog.add_argument('--out')
    catalog.add_argument('--max-order', type=int, dest='max_order')
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        request = CommandRequest(**{k: v for k, v in vars(args).items() if v is not None})
    except ValidationError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    setup_logging()
    return run(request)
