"""
Otoizoklinizm

(H1, K1) ve (H2, K2) çiftleri arasında (ψ, γ, β) üçlüsü araması:
    ψ : H1/L1 -> H2/L2
    γ : Aut(K1) -> Aut(K2)   (bileşke tablolarından kurulan soyut gruplar)
    β : [H1, Aut(K1)] -> [H2, Aut(K2)]
öyle ki β([x, α]) = [ψ(xL1), γ(α)].

β ayrıca aranmaz: her (ψ, γ) için S(H1, Aut(K1)) üzerinde diyagramdan
zorlanır ve çarpımsal olarak genişletilir.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Tuple

import numpy as np

from config.settings import settings
from src.automorphisms import (
    AutomorphismGroup,
    absolute_centralizer,
    autocommutator_matrix,
    autocommutator_set,
    autocommutator_subgroup,
    automorphism_group,
)
from src.checks import BoundCheck, bound
from src.errors import IllDefinedMap, SearchBudgetExceeded
from src.group import Group, Subgroup, coset_decomposition, from_cayley_table, quotient_group
from src.isomorphism import Isomorphism, partial_homomorphism, iter_isomorphisms
from src.probability import distribution, pair_count

logger = logging.getLogger('autocomm.autoisoclinism')


def aut_group_as_abstract_group(aut: AutomorphismGroup) -> Group:
    """
    Aut(K)'nın bileşke tablosu.

    Soyut gruptaki i indeksi aut.elements[i] otomorfizmasıdır.
    """
    labels = ['e'] + [f"a{i}" for i in range(1, aut.order)]
    return from_cayley_table(aut.composition_table, labels, name=aut.name)


@dataclass(frozen=True)
class CosetMap:
    """a(xL, α) = [x, α]; values[c, i] c. koset ve α_i için."""
    representatives: Tuple[int, ...]
    coset_of: Dict[int, int]
    values: np.ndarray

    def __getitem__(self, key: Tuple[int, int]) -> int:
        x, alpha_index = key
        return int(self.values[self.coset_of[x], alpha_index])


def coset_autocommutator_map(H: Subgroup, aut: AutomorphismGroup) -> CosetMap:
    """
    Koset otokomütatör eşlemesi; temsilciden bağımsızlık kontrol edilir.

    Raises:
        IllDefinedMap: [x, α] != [xl, α] olan bir l ∈ L bulunursa
    """
    L = absolute_centralizer(H, aut)
    reps, coset_of = coset_decomposition(H, L)
    matrix = autocommutator_matrix(H, aut)
    position = {x: j for j, x in enumerate(H.members)}
    values = np.stack([matrix[:, position[r]] for r in reps])
    for x in H.members:
        expected = values[coset_of[x]]
        if not np.array_equal(matrix[:, position[x]], expected):
            raise IllDefinedMap(
                f"autocommutator of {H.parent.labels[x]} differs from its coset representative"
            )
    values.setflags(write=False)
    return CosetMap(reps, coset_of, values)


class SubgroupPair:
    """(H, Aut(K)) çifti ve otoizoklinizm için türetilmiş nesneleri."""

    def __init__(self, subgroup: Subgroup, aut: AutomorphismGroup):
        self.subgroup = subgroup
        self.aut = aut

    @property
    def group(self) -> Group:
        return self.subgroup.parent

    def __repr__(self) -> str:
        return f"SubgroupPair({self.subgroup.label}, {self.group.name})"

    @cached_property
    def absolute_centralizer(self) -> Subgroup:
        return absolute_centralizer(self.subgroup, self.aut)

    @cached_property
    def quotient(self) -> Group:
        return quotient_group(self.subgroup, self.absolute_centralizer)

    @cached_property
    def commutator_subgroup(self) -> Subgroup:
        return autocommutator_subgroup(self.subgroup, self.aut)

    @cached_property
    def autocommutators(self):
        return autocommutator_set(self.subgroup, self.aut)

    @cached_property
    def abstract_aut(self) -> Group:
        return aut_group_as_abstract_group(self.aut)

    @cached_property
    def coset_map(self) -> CosetMap:
        return coset_autocommutator_map(self.subgroup, self.aut)

    def invariants(self) -> Tuple[int, int, int]:
        return self.quotient.order, self.aut.order, self.commutator_subgroup.order


def subgroup_pair(H: Subgroup) -> SubgroupPair:
    return SubgroupPair(H, automorphism_group(H.parent))


@dataclass(frozen=True)
class AutoisoclinismWitness:
    pair1: SubgroupPair
    pair2: SubgroupPair
    psi: Isomorphism
    gamma: Isomorphism
    beta: Isomorphism

    def beta_on_parent(self, g: int) -> int:
        """β'yı K1 indeksinden K2 indeksine uygular; g ∈ [H1, Aut(K1)] olmalı."""
        c1 = self.pair1.commutator_subgroup
        c2 = self.pair2.commutator_subgroup
        return c2.members[self.beta(c1.members.index(g))]

    def verify_diagram(self) -> bool:
        """β([x, α]) = [ψ(xL1), γ(α)] tüm koset ve otomorfizmalar için."""
        a1 = self.pair1.coset_map.values
        a2 = self.pair2.coset_map.values
        for c in range(a1.shape[0]):
            for i in range(a1.shape[1]):
                if self.beta_on_parent(int(a1[c, i])) != int(a2[self.psi(c), self.gamma(i)]):
                    return False
        return True

    def inverse(self) -> 'AutoisoclinismWitness':
        return AutoisoclinismWitness(
            pair1=self.pair2,
            pair2=self.pair1,
            psi=self.psi.inverse(),
            gamma=self.gamma.inverse(),
            beta=self.beta.inverse(),
        )


def _derive_beta(
    pair1: SubgroupPair,
    pair2: SubgroupPair,
    psi: Isomorphism,
    gamma: Isomorphism,
) -> Optional[Isomorphism]:
    a1 = pair1.coset_map.values
    a2 = pair2.coset_map.values
    c1, c2 = pair1.commutator_subgroup, pair2.commutator_subgroup
    forced: Dict[int, int] = {}
    for c in range(a1.shape[0]):
        target_row = a2[psi(c)]
        for i in range(a1.shape[1]):
            s, t = int(a1[c, i]), int(target_row[gamma(i)])
            if forced.setdefault(s, t) != t:
                return None
    if len(set(forced.values())) != len(forced):
        return None

    g1, g2 = c1.as_group, c2.as_group
    gens = [c1.members.index(s) for s in sorted(forced)]
    images = [c2.members.index(forced[s]) for s in sorted(forced)]
    mapping = partial_homomorphism(g1.rows, g2.rows, gens, images)
    if mapping is None or len(mapping) != g1.order or g1.order != g2.order:
        return None
    return Isomorphism(g1, g2, tuple(mapping[x] for x in range(g1.order)))


def find_autoisoclinism(pair1: SubgroupPair, pair2: SubgroupPair) -> Optional[AutoisoclinismWitness]:
    """
    İlk otoizoklinizm tanığı; yoksa None.

    Mertebe invaryantları farklıysa arama yapılmadan None döner.

    Raises:
        SearchBudgetExceeded: bölüm ya da Aut mertebesi bütçeyi aşarsa
    """
    if pair1.invariants() != pair2.invariants():
        logger.debug(f"{pair1} and {pair2} differ in (|H/L|, |Aut|, |[H,Aut]|)")
        return None

    budget = settings.autoiso
    quotient_order, aut_order, _ = pair1.invariants()
    if quotient_order > budget.max_quotient_order or aut_order > budget.max_aut_order:
        raise SearchBudgetExceeded(
            f"autoisoclinism search limited to |H/L| <= {budget.max_quotient_order} "
            f"and |Aut| <= {budget.max_aut_order}, got {quotient_order} and {aut_order}"
        )

    gammas: Optional[List[Isomorphism]] = None
    tried = 0
    for psi in iter_isomorphisms(pair1.quotient, pair2.quotient):
        if gammas is None:
            gammas = list(iter_isomorphisms(pair1.abstract_aut, pair2.abstract_aut))
        for gamma in gammas:
            tried += 1
            beta = _derive_beta(pair1, pair2, psi, gamma)
            if beta is None:
                continue
            witness = AutoisoclinismWitness(pair1, pair2, psi, gamma, beta)
            assert witness.verify_diagram(), "derived beta does not make the diagram commute"
            logger.debug(f"Autoisoclinism {pair1} -> {pair2} found after {tried} candidates")
            return witness
    logger.debug(f"No autoisoclinism {pair1} -> {pair2} after {tried} candidates")
    return None


def _instance(pair: SubgroupPair, g: Optional[int] = None) -> Tuple[str, str, str]:
    label = pair.group.labels[g] if g is not None else ''
    return pair.subgroup.label, pair.group.name, label


def _counting_checks(pair: SubgroupPair) -> List[BoundCheck]:
    """|{(x, α) : [x, α] = g}| = |L| · |{(xL, α) : a(xL, α) = g}|"""
    l_order = pair.absolute_centralizer.order
    counts = np.bincount(pair.coset_map.values.ravel(), minlength=pair.group.order)
    return [
        bound(
            'autoisoclinism_counting',
            _instance(pair, g),
            '==',
            pair_count(pair.subgroup, pair.aut, g),
            l_order * int(counts[g]),
        )
        for g in sorted(pair.autocommutators)
    ]


def verify_invariance(witness: AutoisoclinismWitness) -> List[BoundCheck]:
    """
    Pr_g(H1, Aut(K1)) = Pr_β(g)(H2, Aut(K2)) her g ∈ [H1, Aut(K1)] için.

    Destek boyutları ve sayım özdeşliği her iki tarafta ayrıca kontrol edilir.
    """
    pair1, pair2 = witness.pair1, witness.pair2
    assert pair1.invariants() == pair2.invariants()
    profile1 = distribution(pair1.subgroup, pair1.aut)
    profile2 = distribution(pair2.subgroup, pair2.aut)

    checks = [
        bound('autoisoclinism_diagram', _instance(pair1), '==', 1, 1,
              holds=witness.verify_diagram() and witness.inverse().verify_diagram()),
    ]
    for g in pair1.commutator_subgroup.members:
        checks.append(bound(
            'autoisoclinism_invariance',
            _instance(pair1, g),
            '==',
            profile1[g],
            profile2[witness.beta_on_parent(g)],
        ))
    checks.append(bound(
        'autoisoclinism_support',
        _instance(pair1),
        '==',
        len(profile1.support),
        len(profile2.support),
    ))
    checks.extend(_counting_checks(pair1))
    checks.extend(_counting_checks(pair2))
    return checks
