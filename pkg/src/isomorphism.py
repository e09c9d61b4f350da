"""
İzomorfizma Arama ve Sınıflandırma

Kaynak grubun minimal üreteç kümesinin görüntüleri üzerinde geri izlemeli
arama: adaylar aynı mertebeli elemanlardır, kısmi homomorfizma tutarlılığı
her adımda kontrol edilir. Arama sırası deterministiktir.
"""

import logging
import math
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from src.group import Group, from_cayley_table
from src.utils import is_prime

logger = logging.getLogger('autocomm.isomorphism')


@dataclass(frozen=True)
class Isomorphism:
    """source -> target bijektif homomorfizma; map[i] = i'nin görüntüsü."""
    source: Group
    target: Group
    map: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.map)
        object.__setattr__(self, 'map', images)
        n = self.source.order
        if self.target.order != n or len(images) != n:
            raise ValueError("isomorphism needs groups of equal order and one image per element")
        if sorted(images) != list(range(n)) or images[0] != 0:
            raise ValueError("map is not a bijection fixing the identity")
        arr = np.array(images, dtype=np.int64)
        if not np.array_equal(self.target.table[arr[:, None], arr[None, :]], arr[self.source.table]):
            raise ValueError("map does not preserve the group operation")

    def __call__(self, x: int) -> int:
        return self.map[x]

    def inverse(self) -> 'Isomorphism':
        inv = [0] * len(self.map)
        for x, y in enumerate(self.map):
            inv[y] = x
        return Isomorphism(self.target, self.source, tuple(inv))

    def compose(self, other: 'Isomorphism') -> 'Isomorphism':
        """self ∘ other (önce other uygulanır)."""
        return Isomorphism(other.source, self.target, tuple(self.map[y] for y in other.map))

    def label_map(self) -> Dict[str, str]:
        return {
            self.source.labels[x]: self.target.labels[y]
            for x, y in enumerate(self.map)
        }


def partial_homomorphism(
    rows1: List[List[int]],
    rows2: List[List[int]],
    gens: Sequence[int],
    images: Sequence[int],
) -> Optional[Dict[int, int]]:
    """
    ⟨gens⟩ üzerinde gens -> images ile belirlenen kısmi eşleme.

    Returns:
        Eleman -> görüntü sözlüğü; tutarsızlık ya da çakışma varsa None
    """
    mapping = {0: 0}
    used = {0}
    frontier = [0]
    pairs = list(zip(gens, images))
    while frontier:
        new = []
        for x in frontier:
            fx = mapping[x]
            for g, image in pairs:
                y = rows1[x][g]
                fy = rows2[fx][image]
                seen = mapping.get(y)
                if seen is not None:
                    if seen != fy:
                        return None
                elif fy in used:
                    return None
                else:
                    mapping[y] = fy
                    used.add(fy)
                    new.append(y)
        frontier = new
    return mapping


def iter_isomorphisms(G1: Group, G2: Group) -> Iterator[Isomorphism]:
    """G1 -> G2 tüm izomorfizmalar, deterministik sırada."""
    if G1.order != G2.order or G1.is_abelian != G2.is_abelian:
        return
    if Counter(G1.element_orders.tolist()) != Counter(G2.element_orders.tolist()):
        return
    n = G1.order
    gens = G1.generators
    if not gens:
        yield Isomorphism(G1, G2, (0,))
        return

    by_order: Dict[int, List[int]] = {}
    for y, order in enumerate(G2.element_orders.tolist()):
        by_order.setdefault(order, []).append(y)
    candidates = [by_order[G1.element_order(g)] for g in gens]
    rows1, rows2 = G1.rows, G2.rows

    def search(images: List[int]) -> Iterator[Isomorphism]:
        depth = len(images)
        for candidate in candidates[depth]:
            extended = images + [candidate]
            partial = partial_homomorphism(rows1, rows2, gens[:depth + 1], extended)
            if partial is None:
                continue
            if depth + 1 < len(gens):
                yield from search(extended)
            elif len(partial) == n:
                yield Isomorphism(G1, G2, tuple(partial[x] for x in range(n)))

    yield from search([])


def find_isomorphism(G1: Group, G2: Group) -> Optional[Isomorphism]:
    """İlk izomorfizma tanığı; yoksa None."""
    return next(iter_isomorphisms(G1, G2), None)


def relabeled_copy(G: Group, permutation: Sequence[int]) -> Tuple[Group, Isomorphism]:
    """
    Eleman indeksleri permütasyonla değiştirilmiş izomorf kopya.

    Args:
        G: kaynak grup
        permutation: eski indeks -> yeni indeks, permutation[0] = 0

    Returns:
        (kopya, G -> kopya izomorfizması)
    """
    perm = np.array(permutation, dtype=np.int64)
    n = G.order
    if sorted(perm.tolist()) != list(range(n)) or perm[0] != 0:
        raise ValueError("permutation must be a bijection of 0..n-1 fixing 0")
    table = np.empty((n, n), dtype=np.int64)
    table[perm[:, None], perm[None, :]] = perm[G.table]
    labels = [''] * n
    for old, new in enumerate(perm.tolist()):
        labels[new] = G.labels[old]
    copy = from_cayley_table(table, labels, name=f"{G.name}'")
    return copy, Isomorphism(G, copy, tuple(perm.tolist()))


@dataclass(frozen=True)
class GroupStructure:
    """classify çıktısı"""
    order: int
    is_abelian: bool
    is_cyclic: bool
    exponent: int
    order_histogram: Tuple[Tuple[int, int], ...]
    shape: Optional[str]

    def is_cyclic_of_order(self, q: int) -> bool:
        return self.shape == f"Z_{q}"

    def is_elementary_square(self, q: int) -> bool:
        return self.shape == f"Z_{q}xZ_{q}"


def classify(G: Group) -> GroupStructure:
    """
    Değişmelilik, döngüsellik, üs ve mertebe histogramı.

    Z_n ve Z_q x Z_q (q asal) biçimleri tam olarak tanınır; diğer gruplar
    için shape None'dır.
    """
    orders = G.element_orders.tolist()
    n = G.order
    exponent = math.lcm(*orders)
    is_cyclic = n in orders
    shape = None
    if n == 1:
        shape = '1'
    elif is_cyclic:
        shape = f"Z_{n}"
    elif G.is_abelian and is_prime(exponent) and n == exponent ** 2:
        shape = f"Z_{exponent}xZ_{exponent}"
    return GroupStructure(
        order=n,
        is_abelian=G.is_abelian,
        is_cyclic=is_cyclic,
        exponent=exponent,
        order_histogram=tuple(sorted(Counter(orders).items())),
        shape=shape,
    )
