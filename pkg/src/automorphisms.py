"""
Otomorfizma Etkisi

Aut(K) ve Inn(K) sayımı, Aut(K)'nın K üzerindeki etkisi ve bu etkiden
türeyen kümeler: yörüngeler, sabitleyiciler, C_Aut(K)(H), C_H(α),
L(H, Aut(K)), S(H, Aut(K)), [H, Aut(K)], T_{x,g} ve eşlenik sınıfları.

Bileşke kuralı: (α∘β)(x) = α(β(x)).
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import permutations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

import numpy as np

from config.settings import settings
from src.errors import NotContained, SizeLimitExceeded
from src.group import Group, Subgroup, center, is_normal, subgroup_generated
from src.isomorphism import iter_isomorphisms

logger = logging.getLogger('autocomm.automorphisms')


@dataclass(frozen=True)
class Automorphism:
    """K üzerinde otomorfizma; map tüm elemanların görüntü vektörü."""
    group: Group = field(compare=False, repr=False)
    map: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.map)
        object.__setattr__(self, 'map', images)
        n = self.group.order
        if len(images) != n or sorted(images) != list(range(n)) or images[0] != 0:
            raise ValueError("automorphism must be a bijection fixing the identity")
        arr = np.array(images, dtype=np.int64)
        if not np.array_equal(self.group.table[arr[:, None], arr[None, :]], arr[self.group.table]):
            raise ValueError("map does not preserve the group operation")

    def __call__(self, x: int) -> int:
        return self.map[x]

    @property
    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.map))

    def compose(self, other: 'Automorphism') -> 'Automorphism':
        """self ∘ other"""
        return Automorphism(self.group, tuple(self.map[y] for y in other.map))

    def inverse(self) -> 'Automorphism':
        inv = [0] * len(self.map)
        for x, y in enumerate(self.map):
            inv[y] = x
        return Automorphism(self.group, tuple(inv))

    def label_map(self) -> Dict[str, str]:
        labels = self.group.labels
        return {labels[x]: labels[y] for x, y in enumerate(self.map)}


class AutomorphismGroup:
    """
    Tekilleştirilmiş otomorfizma topluluğu.

    Elemanlar görüntü vektörüne göre sıralıdır; birim otomorfizma en küçük
    vektör olduğundan 0. konumdadır.
    """

    def __init__(self, group: Group, elements: Iterable[Automorphism], name: str = ''):
        unique = {alpha.map: alpha for alpha in elements}
        self.group = group
        self.elements: Tuple[Automorphism, ...] = tuple(unique[key] for key in sorted(unique))
        self.index: Dict[Tuple[int, ...], int] = {a.map: i for i, a in enumerate(self.elements)}
        self.name = name or f"Aut({group.name})"
        assert self.elements and self.elements[0].is_identity, "identity automorphism must come first"

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Automorphism]:
        return iter(self.elements)

    def __getitem__(self, i: int) -> Automorphism:
        return self.elements[i]

    def __contains__(self, alpha: Automorphism) -> bool:
        return alpha.map in self.index

    def __repr__(self) -> str:
        return f"AutomorphismGroup({self.name}, order={self.order})"

    @cached_property
    def images(self) -> np.ndarray:
        """images[i, x] = α_i(x)"""
        arr = np.array([a.map for a in self.elements], dtype=np.int64)
        arr.setflags(write=False)
        return arr

    @cached_property
    def stabilizer_sizes(self) -> np.ndarray:
        sizes = (self.images == np.arange(self.group.order)[None, :]).sum(axis=0)
        sizes.setflags(write=False)
        return sizes

    @cached_property
    def orbit_sizes(self) -> np.ndarray:
        sizes = self.order // self.stabilizer_sizes
        sizes.setflags(write=False)
        return sizes

    @cached_property
    def orbits(self) -> Tuple[FrozenSet[int], ...]:
        return tuple(frozenset(self.images[:, x].tolist()) for x in range(self.group.order))

    @cached_property
    def composition_table(self) -> np.ndarray:
        """table[i, j] = (α_i ∘ α_j) indeksi; kapalı değilse -1."""
        m = self.order
        table = np.full((m, m), -1, dtype=np.int64)
        images = self.images
        for i in range(m):
            composed = images[i][images]
            for j in range(m):
                table[i, j] = self.index.get(tuple(composed[j].tolist()), -1)
        table.setflags(write=False)
        return table

    def is_closed(self) -> bool:
        """Bileşke ve ters alma altında kapalılık."""
        if (self.composition_table < 0).any():
            return False
        return all(alpha.inverse().map in self.index for alpha in self.elements)

    def contains_group(self, other: 'AutomorphismGroup') -> bool:
        return other.group is self.group and all(alpha.map in self.index for alpha in other)

    def restrict(self, mask: np.ndarray, name: str) -> 'AutomorphismGroup':
        return AutomorphismGroup(self.group, [a for a, keep in zip(self.elements, mask) if keep], name)


def _require_within(H: Subgroup, aut: AutomorphismGroup) -> None:
    if H.parent is not aut.group:
        raise NotContained(f"{H.label} is not a subgroup of {aut.group.name}")


@lru_cache(maxsize=128)
def automorphism_group(K: Group) -> AutomorphismGroup:
    """
    Aut(K) tam sayımı.

    K -> K izomorfizma araması (minimal üreteçlerin görüntüleri üzerinde
    geri izleme) kullanılır; sonucun kapalılığı kontrol edilir.
    """
    cap = settings.group.aut_order_cap
    if K.order > cap:
        raise SizeLimitExceeded(f"automorphism_group supports |K| <= {cap}, got {K.order}")
    aut = AutomorphismGroup(K, (Automorphism(K, iso.map) for iso in iter_isomorphisms(K, K)))
    assert aut.is_closed(), f"{aut.name} is not closed under composition"
    logger.info(f"|Aut({K.name})| = {aut.order}")
    return aut


def automorphisms_by_bijection_scan(K: Group) -> AutomorphismGroup:
    """Birimi sabitleyen tüm bijeksiyonların taranması (çapraz kontrol)."""
    limit = settings.group.bijection_scan_limit
    if K.order > limit:
        raise SizeLimitExceeded(f"bijection scan supports |K| <= {limit}, got {K.order}")
    table = K.table
    found = []
    for rest in permutations(range(1, K.order)):
        arr = np.array((0,) + rest, dtype=np.int64)
        if np.array_equal(table[arr[:, None], arr[None, :]], arr[table]):
            found.append(Automorphism(K, tuple(arr.tolist())))
    return AutomorphismGroup(K, found, name=f"Aut({K.name})")


def inner_automorphism_group(K: Group) -> AutomorphismGroup:
    """Inn(K) = {x ↦ y⁻¹xy : y ∈ K}"""
    table = K.table
    maps = [table[K.inverses[y]][table[:, y]] for y in range(K.order)]
    inn = AutomorphismGroup(K, (Automorphism(K, tuple(m.tolist())) for m in maps), name=f"Inn({K.name})")
    assert inn.order * center(K).order == K.order, "|Inn(K)| must equal |K|/|Z(K)|"
    return inn


def autocommutator(x: int, alpha: Automorphism) -> int:
    """[x, α] = x⁻¹ α(x)"""
    K = alpha.group
    return K.mul(K.inv(x), alpha(x))


def orbit(aut: AutomorphismGroup, x: int) -> FrozenSet[int]:
    return aut.orbits[x]


def orbit_partition(aut: AutomorphismGroup, H: Subgroup) -> List[FrozenSet[int]]:
    """
    H elemanlarının farklı yörüngeleri.

    Yörüngeler H ile kesiştirilmez; H dışına taşabilirler.
    """
    _require_within(H, aut)
    distinct = {aut.orbits[x] for x in H.members}
    return sorted(distinct, key=min)


def stabilizer(aut: AutomorphismGroup, x: int) -> AutomorphismGroup:
    """C_Aut(K)(x)"""
    stab = aut.restrict(aut.images[:, x] == x, name=f"C_{aut.name}({aut.group.labels[x]})")
    assert len(aut.orbits[x]) * stab.order == aut.order, "orbit-stabilizer count mismatch"
    return stab


def aut_centralizer_of_subgroup(aut: AutomorphismGroup, H: Subgroup) -> AutomorphismGroup:
    """C_Aut(K)(H): H'yi noktasal sabitleyen otomorfizmalar."""
    _require_within(H, aut)
    members = H.member_array
    mask = (aut.images[:, members] == members[None, :]).all(axis=1)
    return aut.restrict(mask, name=f"C_{aut.name}({H.label})")


def fixed_points(H: Subgroup, alpha: Automorphism) -> Subgroup:
    """C_H(α) = {x ∈ H : [x, α] = 1}"""
    if H.parent is not alpha.group:
        raise NotContained(f"{H.label} is not a subgroup of the automorphism's group")
    return Subgroup(H.parent, tuple(x for x in H.members if alpha(x) == x))


def absolute_centralizer(H: Subgroup, aut: AutomorphismGroup) -> Subgroup:
    """L(H, Aut(K)): her otomorfizmanın sabitlediği H elemanları."""
    _require_within(H, aut)
    members = [x for x in H.members if aut.orbit_sizes[x] == 1]
    L = Subgroup(H.parent, tuple(members))
    assert is_normal(L, H), "L(H,Aut(K)) must be normal in H"
    assert center(H.parent).mask[L.member_array].all(), "L(H,Aut(K)) must lie in Z(K)"
    return L


@lru_cache(maxsize=1024)
def autocommutator_matrix(H: Subgroup, aut: AutomorphismGroup) -> np.ndarray:
    """matrix[i, j] = [h_j, α_i]"""
    _require_within(H, aut)
    K = H.parent
    members = H.member_array
    matrix = K.table[K.inverses[members][None, :], aut.images[:, members]]
    matrix.setflags(write=False)
    return matrix


def autocommutator_set(H: Subgroup, aut: AutomorphismGroup) -> FrozenSet[int]:
    """S(H, Aut(K))"""
    return frozenset(np.unique(autocommutator_matrix(H, aut)).tolist())


def autocommutator_subgroup(H: Subgroup, aut: AutomorphismGroup) -> Subgroup:
    """[H, Aut(K)] = ⟨S(H, Aut(K))⟩"""
    S = autocommutator_set(H, aut)
    generated = subgroup_generated(H.parent, S)
    assert all(s in generated for s in S)
    return generated


def t_set(x: int, g: int, aut: AutomorphismGroup) -> Tuple[Automorphism, ...]:
    """
    T_{x,g} = {α : [x, α] = g}.

    Boş değilse herhangi bir σ ∈ T için σ∘C_Aut(K)(x) sol kosetine eşittir.
    """
    K = aut.group
    target = K.mul(x, g)
    members = tuple(a for a in aut if a(x) == target)
    assert bool(members) == (target in aut.orbits[x]), "T_{x,g} is nonempty iff xg is in orb(x)"
    if members:
        sigma = members[0]
        coset = {sigma.compose(beta).map for beta in stabilizer(aut, x)}
        assert coset == {a.map for a in members}, "T_{x,g} is not a left coset of the stabilizer"
    return members


def conjugacy_class(K: Group, x: int, aut: Optional[AutomorphismGroup] = None) -> FrozenSet[int]:
    """cl_K(x) = {y⁻¹xy}; aut verilirse cl_K(x) ⊆ orb_K(x) kontrol edilir."""
    table = K.table
    conjugates = table[K.inverses, table[x]]
    cls = frozenset(conjugates.tolist())
    if aut is not None:
        assert cls <= aut.orbits[x], "conjugacy class must lie inside the Aut(K)-orbit"
    return cls
