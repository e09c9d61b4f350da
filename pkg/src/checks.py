"""
Kontrol Kayıtları

Her sınır, eşitlik koşulu ve karakterizasyon bir BoundCheck olarak kaydedilir;
yön, uygulanabilirlik ve eşitlik koşulu kaydın içindedir, böylece rapor kendi
kendini açıklar. VerificationReport bu kayıtların deterministik sıralı
toplamıdır.
"""

import operator
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from config.settings import settings

_RELATIONS = {
    '<=': operator.le,
    '<': operator.lt,
    '>=': operator.ge,
    '>': operator.gt,
    '==': operator.eq,
}

CONDITION_MODES = ('none', 'iff', 'implies')


@dataclass(frozen=True)
class BoundCheck:
    """
    Tek bir sayısal kontrol.

    Attributes:
        name: kontrol adı, örn. "smallest_prime_bound"
        instance: (H etiketi, K adı, g etiketi); g yoksa boş metin
        relation: lhs ile rhs arasındaki ilişki
        equality_condition_holds: teoremin eşitlik koşulu (varsa)
        condition_mode: 'iff' ise eşitlik ile koşul aynı olmalı, 'implies'
            ise eşitlik koşulu gerektirir
        informational: geçmemesi karşı örnek sayılmaz, gözlem olarak raporlanır
    """
    name: str
    instance: Tuple[str, str, str]
    relation: str
    lhs: Optional[Fraction]
    rhs: Optional[Fraction]
    holds: bool
    equality: bool
    equality_condition_holds: Optional[bool] = None
    condition_mode: str = 'none'
    applicable: bool = True
    skip_reason: Optional[str] = None
    informational: bool = False

    def __post_init__(self):
        if self.relation not in _RELATIONS:
            raise ValueError(f"unknown relation {self.relation!r}")
        if self.condition_mode not in CONDITION_MODES:
            raise ValueError(f"unknown condition mode {self.condition_mode!r}")

    @property
    def condition_agrees(self) -> bool:
        if self.equality_condition_holds is None or self.condition_mode == 'none':
            return True
        if self.condition_mode == 'iff':
            return self.equality == self.equality_condition_holds
        return (not self.equality) or self.equality_condition_holds

    @property
    def passed(self) -> bool:
        if not self.applicable:
            return True
        return self.holds and self.condition_agrees

    @property
    def is_counterexample(self) -> bool:
        return self.applicable and not self.informational and not self.passed

    @property
    def is_observation(self) -> bool:
        return self.applicable and self.informational and not self.passed


def bound(
    name: str,
    instance: Tuple[str, str, str],
    relation: str,
    lhs: Fraction,
    rhs: Fraction,
    condition: Optional[bool] = None,
    mode: str = 'none',
    informational: bool = False,
    holds: Optional[bool] = None,
) -> BoundCheck:
    """lhs relation rhs karşılaştırmasından BoundCheck üretir; holds verilirse o kullanılır."""
    lhs, rhs = Fraction(lhs), Fraction(rhs)
    return BoundCheck(
        name=name,
        instance=instance,
        relation=relation,
        lhs=lhs,
        rhs=rhs,
        holds=_RELATIONS[relation](lhs, rhs) if holds is None else holds,
        equality=lhs == rhs,
        equality_condition_holds=condition,
        condition_mode=mode if condition is not None else 'none',
        informational=informational,
    )


def skipped(name: str, instance: Tuple[str, str, str], reason: str) -> BoundCheck:
    return BoundCheck(
        name=name,
        instance=instance,
        relation='==',
        lhs=None,
        rhs=None,
        holds=True,
        equality=False,
        applicable=False,
        skip_reason=reason,
    )


@dataclass
class VerificationReport:
    """Katalog çalıştırmasının sonucu; zaman damgası içermez."""
    catalog: Tuple[str, ...]
    max_order: int
    checks: List[BoundCheck] = field(default_factory=list)
    version: str = field(default_factory=lambda: settings.output.report_version)

    @property
    def counterexamples(self) -> List[BoundCheck]:
        return [c for c in self.checks if c.is_counterexample]

    @property
    def observations(self) -> List[BoundCheck]:
        return [c for c in self.checks if c.is_observation]

    @property
    def skipped(self) -> Dict[str, int]:
        counts = Counter(c.skip_reason for c in self.checks if not c.applicable)
        return dict(sorted(counts.items()))

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def summary(self) -> Dict[str, object]:
        applicable = [c for c in self.checks if c.applicable]
        return {
            'groups': len(self.catalog),
            'checks': len(self.checks),
            'applicable': len(applicable),
            'passed': sum(1 for c in applicable if c.passed),
            'counterexamples': len(self.counterexamples),
            'observations': len(self.observations),
            'skipped': self.skipped,
        }
