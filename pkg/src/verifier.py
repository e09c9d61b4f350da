"""
Sınır Doğrulayıcı

Alt grup otokomütasyon olasılığı için alt/üst sınırlar, eşitlik koşulları,
bölüm karakterizasyonları ve hesaplama formüllerinin katalog üzerinde
kontrolü. Her kontrol bir BoundCheck üretir; run_catalog bunları
deterministik sırada bir VerificationReport'ta toplar.

Standart varsayımı (H != L ya da g ∈ S) ihlal eden örnekler "degenerate"
nedeniyle atlanır, başarısızlık sayılmaz.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from config.settings import settings
from src.autoisoclinism import SubgroupPair, find_autoisoclinism, verify_invariance
from src.automorphisms import (
    AutomorphismGroup,
    absolute_centralizer,
    aut_centralizer_of_subgroup,
    autocommutator_set,
    autocommutator_subgroup,
    automorphism_group,
    t_set,
)
from src.checks import BoundCheck, VerificationReport, bound, skipped
from src.errors import (
    DegenerateInstance,
    HypothesisViolated,
    NotAChain,
    SearchBudgetExceeded,
    SizeLimitExceeded,
    TrivialAutGroup,
)
from src.group import Group, Subgroup, all_subgroups, direct_product, quotient_group, whole
from src.isomorphism import classify, find_isomorphism
from src.named_groups import cyclic, elementary_abelian, parse_group_spec
from src.probability import (
    autocommuting_forms,
    distribution,
    pr_autocommuting,
    pr_g_formula,
    pr_g_inner,
)
from src.utils import smallest_prime_divisor

logger = logging.getLogger('autocomm.verifier')

Instance = Tuple[str, str, str]


def _instance(H: Subgroup, g: Optional[int] = None) -> Instance:
    label = H.parent.labels[g] if g is not None else ''
    return H.label, H.parent.name, label


def _require_aut_prime(aut: AutomorphismGroup) -> int:
    p = smallest_prime_divisor(aut.order)
    if p is None:
        raise TrivialAutGroup(f"{aut.name} is trivial; no prime divides its order")
    return p


# --- Temel sınırlar ---

def check_lower_bounds_basic(
    H: Subgroup, aut: AutomorphismGroup, g: int
) -> Tuple[BoundCheck, Optional[BoundCheck]]:
    """
    (a) Pr ≥ |L|/|H| + |C_Aut(K)(H)|(|H| - |L|)/(|H||Aut(K)|)
    (b) g != e için Pr_g ≥ |L||C_Aut(K)(H)|/(|H||Aut(K)|)

    Returns:
        (a, b); g = e ise b None

    Raises:
        DegenerateInstance: g != e ve g ∉ S(H, Aut(K))
    """
    h, m = H.order, aut.order
    l_order = absolute_centralizer(H, aut).order
    c_order = aut_centralizer_of_subgroup(aut, H).order
    part_a = bound(
        'lower_bound_basic_a', _instance(H), '>=',
        pr_autocommuting(H, aut),
        Fraction(l_order, h) + Fraction(c_order * (h - l_order), h * m),
    )
    if g == 0:
        return part_a, None
    if g not in autocommutator_set(H, aut):
        raise DegenerateInstance(f"{H.parent.labels[g]} is not an autocommutator of {H.label}")
    part_b = bound(
        'lower_bound_basic_b', _instance(H, g), '>=',
        pr_g_formula(H, aut, g),
        Fraction(l_order * c_order, h * m),
    )
    return part_a, part_b


def check_pr_g_le_pr(H: Subgroup, aut: AutomorphismGroup, g: int) -> BoundCheck:
    """Pr_g ≤ Pr; eşitlik ancak ve ancak g = e."""
    return bound(
        'pr_g_le_pr', _instance(H, g), '<=',
        pr_g_formula(H, aut, g), pr_autocommuting(H, aut),
        condition=(g == 0), mode='iff',
    )


def check_smallest_prime_bound(
    H: Subgroup, aut: AutomorphismGroup, g: int
) -> Tuple[BoundCheck, BoundCheck]:
    """
    g != e için Pr_g ≤ (|H| - |L|)/(p|H|) < 1/p, p = |Aut(K)|'nın en küçük asal böleni.

    Raises:
        TrivialAutGroup: |Aut(K)| = 1
        DegenerateInstance: g = e
    """
    p = _require_aut_prime(aut)
    if g == 0:
        raise DegenerateInstance("smallest-prime bound needs g != e")
    h = H.order
    l_order = absolute_centralizer(H, aut).order
    value = pr_g_formula(H, aut, g)
    middle = Fraction(h - l_order, p * h)
    return (
        bound('smallest_prime_bound', _instance(H, g), '<=', value, middle),
        bound('smallest_prime_strict', _instance(H, g), '<', middle, Fraction(1, p)),
    )


def check_subgroup_monotonicity(
    H1: Subgroup, H2: Subgroup, aut: AutomorphismGroup, g: int
) -> BoundCheck:
    """
    Pr_g(H1) ≤ |H2:H1| Pr_g(H2); eşitlik ancak ve ancak her x ∈ H2∖H1 için
    xg ∉ orb(x).

    Raises:
        NotAChain: H1 ⊆ H2 ⊆ K sağlanmıyorsa
    """
    if H1.parent is not aut.group or not H1.issubset(H2):
        raise NotAChain(f"{H1.label} <= {H2.label} <= {aut.group.name} is not a chain")
    K = aut.group
    outside = [x for x in H2.members if x not in H1]
    condition = all(K.mul(x, g) not in aut.orbits[x] for x in outside)
    return bound(
        'subgroup_monotonicity', (f"{H1.label}<{H2.label}", K.name, K.labels[g]), '<=',
        pr_g_formula(H1, aut, g),
        H1.index_in(H2) * pr_g_formula(H2, aut, g),
        condition=condition, mode='iff',
    )


def check_index_bound(H: Subgroup, aut: AutomorphismGroup, g: int) -> BoundCheck:
    """Pr_g(H) ≤ |K:H| Pr(K); eşitlik ancak ve ancak g = e ve H = K."""
    K = whole(aut.group)
    return bound(
        'index_bound', _instance(H, g), '<=',
        pr_g_formula(H, aut, g),
        H.index_in(K) * pr_autocommuting(K, aut),
        condition=(g == 0 and H.is_whole), mode='iff',
    )


def check_inn_bound(H: Subgroup, aut: AutomorphismGroup) -> BoundCheck:
    """Pr(H, Aut(K)) ≤ Pr(H, K)"""
    return bound('inn_bound', _instance(H), '<=', pr_autocommuting(H, aut), pr_g_inner(H, 0))


# --- Yapısal sınırlar ---

def check_structural_bounds(H: Subgroup, aut: AutomorphismGroup) -> List[BoundCheck]:
    """
    X_H = {x ∈ H : C_Aut(K)(x) = {I}} ile iki taraflı sınır ve
    (p + q - 1)/pq, değişmeli olmayan H için (q² + p - 1)/pq² tavanları.
    p = q ise 3/4 ve 5/8 tavanları ayrı kontroller olarak eklenir.

    Raises:
        DegenerateInstance: H = L(H, Aut(K))
    """
    L = absolute_centralizer(H, aut)
    if L.order == H.order:
        raise DegenerateInstance(f"{H.label} equals its absolute centralizer")
    p = _require_aut_prime(aut)
    q = smallest_prime_divisor(H.order)
    h, m, l_order = H.order, aut.order, L.order
    x_order = sum(1 for x in H.members if aut.stabilizer_sizes[x] == 1)
    value = pr_autocommuting(H, aut)
    instance = _instance(H)

    checks = [
        bound(
            'x_h_lower_bound', instance, '>=', value,
            Fraction(l_order, h) + Fraction(p * (h - x_order - l_order) + x_order, h * m),
        ),
        bound(
            'x_h_upper_bound', instance, '<=', value,
            Fraction((p - 1) * l_order + h, p * h) - Fraction(x_order * (m - p), p * h * m),
        ),
        bound('prime_pair_cap', instance, '<=', value, Fraction(p + q - 1, p * q)),
    ]
    if p == q:
        checks.append(bound('prime_pair_cap_three_quarters', instance, '<=', value, Fraction(3, 4)))
    if not H.is_abelian:
        checks.append(bound(
            'nonabelian_cap', instance, '<=', value, Fraction(q * q + p - 1, p * q * q),
        ))
        if p == q:
            checks.append(bound('nonabelian_cap_five_eighths', instance, '<=', value, Fraction(5, 8)))
    return checks


def _s_bound(size: int, index: int) -> Fraction:
    return Fraction(1, size) * (1 + Fraction(size - 1, index))


def check_s_lower_bound(H: Subgroup, aut: AutomorphismGroup) -> List[BoundCheck]:
    """
    Pr ≥ (1/|S|)(1 + (|S| - 1)/|H:L|), eşitlik ancak ve ancak H∖L üzerinde
    orb(x) = xS; aynısı |[H, Aut(K)]| ile. Ayrıca paydada monotonluk ve
    iki sınırın sıralaması.
    """
    K = aut.group
    rows = K.rows
    L = absolute_centralizer(H, aut)
    S = autocommutator_set(H, aut)
    C = autocommutator_subgroup(H, aut)
    index = L.index_in(H)
    value = pr_autocommuting(H, aut)
    instance = _instance(H)
    outside = [x for x in H.members if x not in L]

    s_bound = _s_bound(len(S), index)
    c_bound = _s_bound(C.order, index)
    s_condition = all(aut.orbits[x] == {rows[x][s] for s in S} for x in outside)
    c_condition = C.order == len(S) and all(
        aut.orbits[x] == {rows[x][c] for c in C.members} for x in outside
    )
    checks = [
        bound('s_lower_bound', instance, '>=', value, s_bound, condition=s_condition, mode='iff'),
        bound(
            'commutator_lower_bound', instance, '>=', value, c_bound,
            condition=c_condition if outside else None, mode='iff',
        ),
        bound(
            'lower_bound_monotonicity', instance, '>=', s_bound, c_bound,
            condition=(C.order == len(S)) if outside else None, mode='iff',
        ),
    ]
    # [H,Aut(K)] sınırı X_H alt sınırını her zaman aşmaz (C3'te 5/9 < 2/3)
    p = smallest_prime_divisor(aut.order)
    if p is not None and outside:
        h, m, l_order = H.order, aut.order, L.order
        x_order = sum(1 for x in H.members if aut.stabilizer_sizes[x] == 1)
        x_h_lower = Fraction(l_order, h) + Fraction(p * (h - x_order - l_order) + x_order, h * m)
        checks.append(bound(
            'commutator_bound_vs_x_h_lower_bound', instance, '>=', c_bound, x_h_lower,
            informational=True,
        ))
    return checks


# --- Karakterizasyonlar ---

def _quotient_shape(H: Subgroup, L: Subgroup, q: int, square: bool) -> bool:
    quotient = quotient_group(H, L)
    structure = classify(quotient)
    if square:
        target = elementary_abelian(q, 2)
        shaped = structure.is_elementary_square(q)
    else:
        target = cyclic(q)
        shaped = structure.is_cyclic_of_order(q)
    witnessed = find_isomorphism(quotient, target) is not None
    assert shaped == witnessed, "classify and isomorphism search disagree"
    return shaped


def characterize_quotients(H: Subgroup, aut: AutomorphismGroup) -> List[BoundCheck]:
    """
    Pr = (p + q - 1)/pq ise pq | |H||Aut(K)| ve H/L ≅ Z_q; değişmeli olmayan
    H için Pr = (q² + p - 1)/pq² ise H/L ≅ Z_q × Z_q. Karşıt yön: H∖L'nin
    her elemanı için |Aut(K) : C_Aut(K)(x)| = p ve bölüm biçimi tutuyorsa
    Pr değeri tahmin edilir.
    """
    instance = _instance(H)
    p = smallest_prime_divisor(aut.order)
    q = smallest_prime_divisor(H.order)
    names = ('characterization_cyclic', 'characterization_square',
             'converse_cyclic', 'converse_square')
    if p is None or q is None:
        return [skipped(name, instance, 'trivial') for name in names]

    L = absolute_centralizer(H, aut)
    value = pr_autocommuting(H, aut)
    divisible = (H.order * aut.order) % (p * q) == 0
    cyclic_value = Fraction(p + q - 1, p * q)
    square_value = Fraction(q * q + p - 1, p * q * q)
    checks: List[BoundCheck] = []

    if value == cyclic_value:
        shaped = divisible and _quotient_shape(H, L, q, square=False)
        checks.append(bound(names[0], instance, '==', value, cyclic_value,
                            condition=shaped, mode='implies'))
    else:
        checks.append(skipped(names[0], instance, 'not_applicable'))

    if not H.is_abelian and value == square_value:
        shaped = divisible and _quotient_shape(H, L, q, square=True)
        checks.append(bound(names[1], instance, '==', value, square_value,
                            condition=shaped, mode='implies'))
    else:
        checks.append(skipped(names[1], instance, 'not_applicable'))

    outside = [x for x in H.members if x not in L]
    hypothesis = bool(outside) and all(aut.orbit_sizes[x] == p for x in outside)
    if hypothesis and _quotient_shape(H, L, q, square=False):
        checks.append(bound(names[2], instance, '==', value, cyclic_value))
    else:
        checks.append(skipped(names[2], instance, 'not_applicable'))
    if hypothesis and L.index_in(H) == q * q and _quotient_shape(H, L, q, square=True):
        checks.append(bound(names[3], instance, '==', value, square_value))
    else:
        checks.append(skipped(names[3], instance, 'not_applicable'))
    return checks


# --- Hesaplama formülleri ---

def check_computing_formulae(H: Subgroup, aut: AutomorphismGroup) -> List[BoundCheck]:
    """Kaba kuvvet ve formül biçimleri, normalizasyon, simetri, destek ve T_{x,g} koset yasası."""
    K = aut.group
    profile = distribution(H, aut)
    forms = autocommuting_forms(H, aut)
    L = absolute_centralizer(H, aut)
    checks: List[BoundCheck] = []

    for g in range(K.order):
        checks.append(bound(
            'computing_formula', _instance(H, g), '==', profile[g], pr_g_formula(H, aut, g),
        ))
        g_inv = K.inv(g)
        if g < g_inv:
            checks.append(bound('inverse_symmetry', _instance(H, g), '==', profile[g], profile[g_inv]))

    instance = _instance(H)
    checks.append(bound('fixed_point_form', instance, '==', forms.fixed_point_sum, forms.stabilizer_sum))
    checks.append(bound(
        'orbit_count_form', instance, '==', forms.orbit_count, forms.stabilizer_sum,
        informational=not forms.orbit_count_valid,
    ))
    checks.append(bound('normalization', instance, '==', sum(profile.values), 1))
    positive = {g for g, value in enumerate(profile.values) if value > 0}
    checks.append(bound(
        'support', instance, '==', len(positive), len(profile.support),
        holds=positive == set(profile.support),
    ))
    checks.append(bound(
        'full_commuting', instance, '<=', profile[0], 1,
        condition=L.order == H.order, mode='iff',
    ))

    for x in range(K.order):
        checks.append(bound(
            'orbit_stabilizer', (H.label, K.name, K.labels[x]), '==',
            len(aut.orbits[x]) * int(aut.stabilizer_sizes[x]), aut.order,
        ))
    for x in H.members:
        targets = sorted(aut.orbits[x])
        sizes = [len(t_set(x, K.mul(K.inv(x), y), aut)) for y in targets]
        checks.append(bound(
            't_set_coset_law', (H.label, K.name, K.labels[x]), '==',
            sum(sizes), aut.order,
            holds=all(size == aut.stabilizer_sizes[x] for size in sizes),
        ))
    return checks


def check_coprime_product(K1: Group, K2: Group) -> List[BoundCheck]:
    """
    gcd(|K1|, |K2|) = 1 için Pr_(g1,g2)(H1 × H2, Aut(K1 × K2)) çarpım formülü
    ve |Aut(K1 × K2)| = |Aut(K1)||Aut(K2)|.

    Raises:
        HypothesisViolated: mertebeler aralarında asal değilse
    """
    n1, n2 = K1.order, K2.order
    if math.gcd(n1, n2) != 1:
        raise HypothesisViolated(f"|{K1.name}| and |{K2.name}| are not coprime")
    product, _, _ = direct_product(K1, K2)
    aut1, aut2, aut12 = automorphism_group(K1), automorphism_group(K2), automorphism_group(product)
    checks = [bound(
        'coprime_aut_order', ('', product.name, ''), '==', aut12.order, aut1.order * aut2.order,
    )]
    for H1 in all_subgroups(K1):
        for H2 in all_subgroups(K2):
            H12 = Subgroup(product, tuple(i * n2 + j for i in H1.members for j in H2.members))
            p1, p2, p12 = distribution(H1, aut1), distribution(H2, aut2), distribution(H12, aut12)
            deviation = sum(
                abs(p12[g1 * n2 + g2] - p1[g1] * p2[g2]) for g1 in range(n1) for g2 in range(n2)
            )
            checks.append(bound(
                'coprime_product', (f"{H1.label}x{H2.label}", product.name, ''), '==', deviation, 0,
            ))
    return checks


def check_autoisoclinism_reflexive(H: Subgroup, aut: AutomorphismGroup) -> List[BoundCheck]:
    """(H, K) ile kendisi arasında tanık araması ve Pr değişmezliği."""
    pair = SubgroupPair(H, aut)
    instance = _instance(H)
    try:
        witness = find_autoisoclinism(pair, pair)
    except SearchBudgetExceeded as exc:
        logger.debug(f"Autoisoclinism skipped for {H.label} in {aut.group.name}: {exc}")
        return [skipped('autoisoclinism_reflexive', instance, 'budget')]
    found = bound('autoisoclinism_reflexive', instance, '==', 1, 1, holds=witness is not None)
    if witness is None:
        return [found]
    return [found] + verify_invariance(witness)


# --- Katalog ---

def check_instance(H: Subgroup, aut: AutomorphismGroup) -> List[BoundCheck]:
    """Tek bir (H, K) için tüm kontroller, sabit sırada."""
    K = aut.group
    checks: List[BoundCheck] = []
    checks.extend(check_computing_formulae(H, aut))

    support = autocommutator_set(H, aut)
    for g in range(K.order):
        if g == 0 or g in support:
            part_a, part_b = check_lower_bounds_basic(H, aut, g)
            checks.append(part_a if part_b is None else part_b)
        else:
            checks.append(skipped('lower_bound_basic_b', _instance(H, g), 'degenerate'))
        checks.append(check_pr_g_le_pr(H, aut, g))
        checks.append(check_index_bound(H, aut, g))
        if g != 0:
            try:
                checks.extend(check_smallest_prime_bound(H, aut, g))
            except TrivialAutGroup:
                checks.append(skipped('smallest_prime_bound', _instance(H, g), 'trivial_aut'))
    checks.append(check_inn_bound(H, aut))

    try:
        checks.extend(check_structural_bounds(H, aut))
    except DegenerateInstance:
        checks.append(skipped('x_h_bounds', _instance(H), 'degenerate'))
    checks.extend(check_s_lower_bound(H, aut))
    checks.extend(characterize_quotients(H, aut))
    checks.extend(check_autoisoclinism_reflexive(H, aut))
    return checks


def _check_group(K: Group) -> List[BoundCheck]:
    logger.info(f"Verifying {K.name} (order {K.order})")
    aut = automorphism_group(K)
    subgroups = all_subgroups(K)
    checks: List[BoundCheck] = []
    for H in subgroups:
        checks.extend(check_instance(H, aut))
    for H1 in subgroups:
        for H2 in subgroups:
            if H1.issubset(H2):
                for g in range(K.order):
                    checks.append(check_subgroup_monotonicity(H1, H2, aut, g))
    failures = sum(1 for c in checks if c.is_counterexample)
    logger.info(f"{K.name}: {len(checks)} checks, {failures} counterexamples")
    return checks


def run_catalog(
    catalog: Optional[Sequence[str]] = None,
    max_order: Optional[int] = None,
    threads: Optional[int] = None,
) -> VerificationReport:
    """
    Katalogdaki her K, her H ≤ K ve her g için tüm kontroller.

    Args:
        catalog: grup tanımları (varsayılan: settings.catalog.default_catalog)
        max_order: bu mertebeyi aşan gruplar atlanır
        threads: paralel grup sayısı (varsayılan: settings.runtime.threads)

    Raises:
        SizeLimitExceeded: max_order sabit üst sınırı aşarsa
    """
    catalog = tuple(settings.catalog.default_catalog if catalog is None else catalog)
    max_order = settings.catalog.default_max_order if max_order is None else max_order
    if max_order > settings.catalog.hard_max_order:
        raise SizeLimitExceeded(
            f"max order {max_order} exceeds the hard cap {settings.catalog.hard_max_order}"
        )
    threads = threads or settings.runtime.threads

    groups = [parse_group_spec(spec) for spec in catalog]
    groups = [K for K in groups if K.order <= max_order]
    report = VerificationReport(catalog=tuple(K.name for K in groups), max_order=max_order)

    with ThreadPoolExecutor(max_workers=max(1, threads)) as executor:
        for checks in executor.map(_check_group, groups):
            report.checks.extend(checks)

    # çarpanlar max_order'a, çarpım sabit üst sınıra tabi
    orders = {K.name: K.order for K in groups}
    for spec1, spec2 in settings.catalog.coprime_pairs:
        if spec1 in orders and spec2 in orders and orders[spec1] * orders[spec2] <= settings.catalog.hard_max_order:
            report.checks.extend(check_coprime_product(parse_group_spec(spec1), parse_group_spec(spec2)))

    summary = report.summary()
    logger.info(
        f"Catalog verified: {summary['checks']} checks, "
        f"{summary['counterexamples']} counterexamples, {summary['observations']} observations"
    )
    return report
