"""
Otokomütasyon Olasılıkları

Pr_g(H, Aut(K)) = |{(x, α) ∈ H × Aut(K) : [x, α] = g}| / (|H| |Aut(K)|)
değerinin kesin rasyonel hesabı. Aynı değer kaba kuvvet sayımı, yörünge
toplamı ve sabitleyici toplamı ile hesaplanır; formlar birbirine karşı
kontrol edilir. İç otomorfizma karşılığı Pr_g(H, K) de buradadır.

Tüm değerler fractions.Fraction; kayan nokta yalnızca ekran çıktısında
kullanılır.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, Tuple

import numpy as np

from src.automorphisms import (
    AutomorphismGroup,
    autocommutator_matrix,
    autocommutator_set,
    conjugacy_class,
    orbit_partition,
)
from src.errors import HypothesisViolated, NotContained
from src.group import Subgroup

logger = logging.getLogger('autocomm.probability')

Rational = Fraction


def _check_element(aut: AutomorphismGroup, g: int) -> None:
    if not 0 <= g < aut.group.order:
        raise NotContained(f"element index {g} is not in {aut.group.name}")


def pair_count(H: Subgroup, aut: AutomorphismGroup, g: int) -> int:
    """|{(x, α) : [x, α] = g}|"""
    _check_element(aut, g)
    return int((autocommutator_matrix(H, aut) == g).sum())


def pr_g_bruteforce(H: Subgroup, aut: AutomorphismGroup, g: int) -> Rational:
    """H × Aut(K) ızgarasının tamamı üzerinden sayım."""
    return Fraction(pair_count(H, aut, g), H.order * aut.order)


def pr_g_formula(H: Subgroup, aut: AutomorphismGroup, g: int) -> Rational:
    """
    Yörünge formu ve sabitleyici formu.

    (1/|H|) Σ 1/|orb(x)| ile (1/(|H||Aut(K)|)) Σ |C_Aut(K)(x)|, toplamlar
    xg ∈ orb(x) koşulunu sağlayan x ∈ H üzerindedir. İki form eşit olmalıdır.
    """
    _check_element(aut, g)
    K = aut.group
    orbit_form = Fraction(0)
    stabilizer_total = 0
    for x in H.members:
        if K.mul(x, g) in aut.orbits[x]:
            orbit_form += Fraction(1, int(aut.orbit_sizes[x]))
            stabilizer_total += int(aut.stabilizer_sizes[x])
    orbit_form /= H.order
    stabilizer_form = Fraction(stabilizer_total, H.order * aut.order)
    assert orbit_form == stabilizer_form, "orbit and stabilizer forms disagree"
    return orbit_form


@dataclass(frozen=True)
class AutocommutingForms:
    """Pr(H, Aut(K)) için hesaplanan tüm formlar."""
    stabilizer_sum: Rational
    fixed_point_sum: Rational
    orbit_count: Rational
    # Her yörünge H içinde kalıyorsa True; yörünge sayısı formu ancak o zaman geçerli
    orbit_count_valid: bool

    @property
    def value(self) -> Rational:
        return self.stabilizer_sum

    @property
    def orbit_count_agrees(self) -> bool:
        return self.orbit_count == self.stabilizer_sum


def autocommuting_forms(H: Subgroup, aut: AutomorphismGroup) -> AutocommutingForms:
    total = H.order * aut.order
    members = H.member_array
    stabilizer_sum = Fraction(int(aut.stabilizer_sizes[members].sum()), total)
    fixed_counts = (aut.images[:, members] == members[None, :]).sum(axis=1)
    fixed_point_sum = Fraction(int(fixed_counts.sum()), total)
    assert stabilizer_sum == fixed_point_sum, "Σ|C_Aut(K)(x)| and Σ|C_H(α)| disagree"
    assert stabilizer_sum == pr_g_formula(H, aut, 0)

    orbits = orbit_partition(aut, H)
    valid = all(orb <= set(H.members) for orb in orbits)
    forms = AutocommutingForms(
        stabilizer_sum=stabilizer_sum,
        fixed_point_sum=fixed_point_sum,
        orbit_count=Fraction(len(orbits), H.order),
        orbit_count_valid=valid,
    )
    if not forms.orbit_count_agrees:
        logger.debug(
            f"Orbit-count form {forms.orbit_count} differs from {stabilizer_sum} "
            f"for {H.label} in {aut.group.name} (valid={valid})"
        )
    return forms


def pr_autocommuting(H: Subgroup, aut: AutomorphismGroup) -> Rational:
    """Pr(H, Aut(K)) = Pr_e(H, Aut(K))"""
    return autocommuting_forms(H, aut).value


def pr_special_trivial_stabilizers(H: Subgroup, aut: AutomorphismGroup) -> Rational:
    """
    Birim dışındaki her x ∈ H için C_Aut(K)(x) = {I} ise
    Pr(H, Aut(K)) = 1/|H| + 1/|Aut(K)| - 1/(|H||Aut(K)|).

    Raises:
        HypothesisViolated: sabitleyicisi aşikar olmayan ilk eleman
    """
    K = aut.group
    for x in H.members:
        if x != 0 and aut.stabilizer_sizes[x] > 1:
            raise HypothesisViolated(
                f"{K.labels[x]} has a stabilizer of order {int(aut.stabilizer_sizes[x])}",
                element=x,
            )
    h, m = H.order, aut.order
    value = Fraction(1, h) + Fraction(1, m) - Fraction(1, h * m)
    assert value == pr_autocommuting(H, aut)
    return value


def pr_g_inner(H: Subgroup, g: int) -> Rational:
    """
    Pr_g(H, K) = |{(x, y) ∈ H × K : x⁻¹y⁻¹xy = g}| / (|H||K|).

    g = e için (1/|H|) Σ 1/|cl_K(x)| ile de hesaplanır.
    """
    K = H.parent
    if not 0 <= g < K.order:
        raise NotContained(f"element index {g} is not in {K.name}")
    table, inverses = K.table, K.inverses
    xs = H.member_array[:, None]
    ys = np.arange(K.order)[None, :]
    commutators = table[table[inverses[xs], inverses[ys]], table[xs, ys]]
    value = Fraction(int((commutators == g).sum()), H.order * K.order)
    if g == 0:
        by_classes = sum(Fraction(1, len(conjugacy_class(K, x))) for x in H.members) / H.order
        assert by_classes == value, "class-size form of the commuting probability disagrees"
    return value


@dataclass(frozen=True)
class ProbabilityProfile:
    """
    Tüm g ∈ K için Pr_g(H, Aut(K)).

    values ve pair_counts eleman indeksi sırasındadır.
    """
    subgroup: Subgroup
    aut_order: int
    pair_counts: Tuple[int, ...]
    values: Tuple[Rational, ...]
    support: FrozenSet[int]

    @property
    def group(self):
        return self.subgroup.parent

    def __getitem__(self, g: int) -> Rational:
        return self.values[g]

    def by_label(self) -> Dict[str, Rational]:
        labels = self.group.labels
        return {labels[g]: value for g, value in enumerate(self.values)}


@lru_cache(maxsize=1024)
def distribution(H: Subgroup, aut: AutomorphismGroup) -> ProbabilityProfile:
    K = aut.group
    counts = np.bincount(autocommutator_matrix(H, aut).ravel(), minlength=K.order).tolist()
    total = H.order * aut.order
    values = tuple(Fraction(c, total) for c in counts)
    support = autocommutator_set(H, aut)

    assert sum(values) == 1, "profile does not sum to 1"
    assert {g for g, c in enumerate(counts) if c > 0} == support, "profile support differs from S(H,Aut(K))"
    assert all(values[g] == values[K.inv(g)] for g in range(K.order)), "Pr_g and Pr_{g^-1} differ"
    logger.debug(f"Profile of {H.label} in {K.name}: support size {len(support)}")
    return ProbabilityProfile(
        subgroup=H,
        aut_order=aut.order,
        pair_counts=tuple(int(c) for c in counts),
        values=values,
        support=support,
    )
