"""
Dışa Aktarım

Olasılık profilleri, otomorfizma listeleri, doğrulama raporları ve
otoizoklinizm tanıkları için JSON ve CSV çıktıları. JSON şekilleri
pydantic modelleri ile tanımlıdır; alan sırası sabittir ve çıktı zaman
damgası içermez, böylece aynı girdi bayt bayt aynı çıktıyı üretir.
"""

import csv
import io
import logging
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional

from pydantic import BaseModel

from src.autoisoclinism import AutoisoclinismWitness
from src.automorphisms import Automorphism, AutomorphismGroup
from src.checks import BoundCheck, VerificationReport
from src.group import Group
from src.probability import ProbabilityProfile, distribution
from src.utils import ensure_directory_exists

logger = logging.getLogger('autocomm.export')


# Yanıt modelleri
class ProfileValue(BaseModel):
    g_label: str
    num: int
    den: int
    pairs: int


class ProfileExport(BaseModel):
    """Pr_g(H, Aut(K)) profili"""
    group: str
    subgroup: str
    aut_order: int
    values: List[ProfileValue]
    support: List[str]


class CheckRow(BaseModel):
    name: str
    subgroup: str
    group: str
    g_label: str
    relation: str
    lhs_num: Optional[int] = None
    lhs_den: Optional[int] = None
    rhs_num: Optional[int] = None
    rhs_den: Optional[int] = None
    holds: bool
    equality: bool
    equality_condition_holds: Optional[bool] = None
    condition_mode: str
    applicable: bool
    skip_reason: Optional[str] = None
    informational: bool
    passed: bool


class ReportSummary(BaseModel):
    groups: int
    checks: int
    applicable: int
    passed: int
    counterexamples: int
    observations: int
    skipped: Dict[str, int]


class ReportExport(BaseModel):
    """Doğrulama raporu; sürüm alanı zaman damgası yerine geçer."""
    version: str
    catalog: List[str]
    max_order: int
    summary: ReportSummary
    counterexamples: List[CheckRow]
    observations: List[CheckRow]
    checks: List[CheckRow]


class TransportedValue(BaseModel):
    g_label: str
    image_label: str
    num: int
    den: int
    image_num: int
    image_den: int


class WitnessExport(BaseModel):
    """(ψ, γ, β) eşlemeleri etiketten etikete"""
    pair1: Dict[str, str]
    pair2: Dict[str, str]
    psi: Dict[str, str]
    gamma: Dict[str, str]
    automorphisms1: Dict[str, Dict[str, str]]
    automorphisms2: Dict[str, Dict[str, str]]
    beta: Dict[str, str]
    profile: List[TransportedValue]


class AutomorphismExport(BaseModel):
    """images[x] = α(x), eleman indeksleri"""
    images: List[int]


class AutomorphismGroupExport(BaseModel):
    """Aut(K) regresyon fikstürü"""
    group: str
    group_order: int
    labels: List[str]
    order: int
    inn_order: Optional[int] = None
    automorphisms: List[AutomorphismExport]


def _split(value: Optional[Fraction]):
    if value is None:
        return None, None
    return value.numerator, value.denominator


# --- Profil ---

def profile_model(profile: ProbabilityProfile) -> ProfileExport:
    labels = profile.group.labels
    return ProfileExport(
        group=profile.group.name,
        subgroup=profile.subgroup.label,
        aut_order=profile.aut_order,
        values=[
            ProfileValue(g_label=labels[g], num=v.numerator, den=v.denominator, pairs=profile.pair_counts[g])
            for g, v in enumerate(profile.values)
        ],
        support=[labels[g] for g in sorted(profile.support)],
    )


def profile_to_json(profile: ProbabilityProfile) -> str:
    return profile_model(profile).model_dump_json(indent=2)


def profile_to_csv(profile: ProbabilityProfile) -> str:
    model = profile_model(profile)
    support = set(model.support)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(['group', 'subgroup', 'aut_order', 'g_label', 'num', 'den', 'in_support'])
    for row in model.values:
        writer.writerow([
            model.group, model.subgroup, model.aut_order,
            row.g_label, row.num, row.den, int(row.g_label in support),
        ])
    return buffer.getvalue()


# --- Otomorfizmalar ---

def automorphism_to_json(alpha: Automorphism) -> str:
    return AutomorphismExport(images=list(alpha.map)).model_dump_json()


def automorphism_from_json(K: Group, text: str) -> Automorphism:
    """
    Görüntü dizisinden otomorfizma kurar.

    Raises:
        ValueError: dizi K üzerinde otomorfizma değilse
    """
    return Automorphism(K, tuple(AutomorphismExport.model_validate_json(text).images))


def automorphism_group_model(aut: AutomorphismGroup, inn_order: Optional[int] = None) -> AutomorphismGroupExport:
    return AutomorphismGroupExport(
        group=aut.group.name,
        group_order=aut.group.order,
        labels=list(aut.group.labels),
        order=aut.order,
        inn_order=inn_order,
        automorphisms=[AutomorphismExport(images=list(alpha.map)) for alpha in aut],
    )


def automorphism_group_to_json(aut: AutomorphismGroup, inn_order: Optional[int] = None) -> str:
    return automorphism_group_model(aut, inn_order).model_dump_json(indent=2)


def automorphism_group_from_json(K: Group, text: str) -> AutomorphismGroup:
    """
    Dışa aktarılmış listeyi K üzerinde yeniden kurar.

    Raises:
        ValueError: mertebe ya da eleman sayısı tutmuyorsa
    """
    model = AutomorphismGroupExport.model_validate_json(text)
    if not model.automorphisms:
        raise ValueError("fixture lists no automorphisms")
    if model.group_order != K.order:
        raise ValueError(f"fixture is for a group of order {model.group_order}, not {K.order}")
    aut = AutomorphismGroup(K, [Automorphism(K, tuple(a.images)) for a in model.automorphisms])
    if aut.order != model.order:
        raise ValueError(f"fixture lists {aut.order} distinct automorphisms, header says {model.order}")
    return aut


# --- Rapor ---

def check_row(check: BoundCheck) -> CheckRow:
    subgroup, group, g_label = check.instance
    lhs_num, lhs_den = _split(check.lhs)
    rhs_num, rhs_den = _split(check.rhs)
    return CheckRow(
        name=check.name,
        subgroup=subgroup,
        group=group,
        g_label=g_label,
        relation=check.relation,
        lhs_num=lhs_num,
        lhs_den=lhs_den,
        rhs_num=rhs_num,
        rhs_den=rhs_den,
        holds=check.holds,
        equality=check.equality,
        equality_condition_holds=check.equality_condition_holds,
        condition_mode=check.condition_mode,
        applicable=check.applicable,
        skip_reason=check.skip_reason,
        informational=check.informational,
        passed=check.passed,
    )


def report_model(report: VerificationReport) -> ReportExport:
    return ReportExport(
        version=report.version,
        catalog=list(report.catalog),
        max_order=report.max_order,
        summary=ReportSummary(**report.summary()),
        counterexamples=[check_row(c) for c in report.counterexamples],
        observations=[check_row(c) for c in report.observations],
        checks=[check_row(c) for c in report.checks],
    )


def report_to_json(report: VerificationReport) -> str:
    return report_model(report).model_dump_json(indent=2)


def report_to_csv(report: VerificationReport) -> str:
    buffer = io.StringIO()
    fields = list(CheckRow.model_fields)
    writer = csv.DictWriter(buffer, fieldnames=fields, lineterminator='\n')
    writer.writeheader()
    for check in report.checks:
        row = check_row(check).model_dump()
        writer.writerow({k: '' if v is None else v for k, v in row.items()})
    return buffer.getvalue()


# --- Tanık ---

def witness_model(witness: AutoisoclinismWitness) -> WitnessExport:
    pair1, pair2 = witness.pair1, witness.pair2
    profile1 = distribution(pair1.subgroup, pair1.aut)
    profile2 = distribution(pair2.subgroup, pair2.aut)
    labels1, labels2 = pair1.group.labels, pair2.group.labels

    beta = {}
    transported = []
    for g in pair1.commutator_subgroup.members:
        image = witness.beta_on_parent(g)
        beta[labels1[g]] = labels2[image]
        transported.append(TransportedValue(
            g_label=labels1[g],
            image_label=labels2[image],
            num=profile1[g].numerator,
            den=profile1[g].denominator,
            image_num=profile2[image].numerator,
            image_den=profile2[image].denominator,
        ))
    return WitnessExport(
        pair1={'group': pair1.group.name, 'subgroup': pair1.subgroup.label},
        pair2={'group': pair2.group.name, 'subgroup': pair2.subgroup.label},
        psi=witness.psi.label_map(),
        gamma=witness.gamma.label_map(),
        automorphisms1={pair1.abstract_aut.labels[i]: a.label_map() for i, a in enumerate(pair1.aut)},
        automorphisms2={pair2.abstract_aut.labels[i]: a.label_map() for i, a in enumerate(pair2.aut)},
        beta=beta,
        profile=transported,
    )


def witness_to_json(witness: AutoisoclinismWitness) -> str:
    return witness_model(witness).model_dump_json(indent=2)


def write_text(path: str, text: str) -> Path:
    """Metni dosyaya yazar, üst dizini gerekirse oluşturur."""
    target = Path(path)
    ensure_directory_exists(str(target.parent))
    target.write_text(text, encoding='utf-8')
    logger.info(f"Wrote {target}")
    return target
