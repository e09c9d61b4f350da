"""
Grup Çekirdeği

Cayley tablosu olarak verilen sonlu grupların inşası ve doğrulanması;
alt gruplar, merkez, normal alt grup kontrolü, bölüm grupları ve direkt
çarpım. Elemanlar 0..n-1 indeksleridir ve 0 daima birim elemandır.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from pathlib import Path
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from config.settings import settings
from src.errors import (
    NoIdentity,
    NoInverse,
    NotASubgroup,
    NotAssociative,
    NotClosed,
    NotContained,
    NotNormal,
    ParseError,
    SizeLimitExceeded,
)

logger = logging.getLogger('autocomm.group')


class Group:
    """
    Doğrulanmış Cayley tablosu üzerinde sonlu grup.

    Doğrudan kurulmaz; from_cayley_table ya da named_groups kullanılır.
    """

    identity = 0

    def __init__(self, table: np.ndarray, labels: Sequence[str], name: str = ''):
        self.table = table
        self.labels = tuple(labels)
        self.name = name or f"G{len(self.labels)}"

    @property
    def order(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"Group({self.name}, order={self.order})"

    @cached_property
    def rows(self) -> List[List[int]]:
        """Skaler döngüler için tablonun Python listesi hali."""
        return self.table.tolist()

    def mul(self, a: int, b: int) -> int:
        return self.rows[a][b]

    @cached_property
    def inverses(self) -> np.ndarray:
        inv = np.argmax(self.table == 0, axis=1)
        inv.setflags(write=False)
        return inv

    def inv(self, a: int) -> int:
        return int(self.inverses[a])

    @cached_property
    def element_orders(self) -> np.ndarray:
        n = self.order
        orders = np.zeros(n, dtype=np.int64)
        everything = np.arange(n)
        current = everything.copy()
        for k in range(1, n + 1):
            orders[(current == 0) & (orders == 0)] = k
            if orders.all():
                break
            current = self.table[current, everything]
        orders.setflags(write=False)
        return orders

    def element_order(self, a: int) -> int:
        return int(self.element_orders[a])

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        k %= self.element_order(a)
        result = 0
        for _ in range(k):
            result = self.rows[result][a]
        return result

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    @cached_property
    def label_index(self) -> Dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    @cached_property
    def generators(self) -> Tuple[int, ...]:
        return minimal_generating_set(self)


# --- Tablo doğrulama ---

def _find_identity(table: np.ndarray) -> int:
    everything = np.arange(table.shape[0])
    left = (table == everything[None, :]).all(axis=1)
    right = (table == everything[:, None]).all(axis=0)
    candidates = np.flatnonzero(left & right)
    if candidates.size == 0:
        raise NoIdentity("table has no two-sided identity element")
    return int(candidates[0])


def _check_inverses(table: np.ndarray, labels: Sequence[str]) -> None:
    has_right = (table == 0).any(axis=1)
    missing = np.flatnonzero(~has_right)
    if missing.size:
        a = int(missing[0])
        raise NoInverse(a, labels[a])
    right = np.argmax(table == 0, axis=1)
    # Sağ ters aynı zamanda sol ters olmalı
    bad = np.flatnonzero(table[right, np.arange(table.shape[0])] != 0)
    if bad.size:
        a = int(bad[0])
        raise NoInverse(a, labels[a])


def _right_generators(table: np.ndarray) -> List[int]:
    """Birimden sağdan çarpımla tüm tabloyu üreten eleman listesi."""
    n = table.shape[0]
    reached = np.zeros(n, dtype=bool)
    reached[0] = True
    gens: List[int] = []
    while not reached.all():
        gens.append(int(np.argmin(reached)))
        frontier = np.flatnonzero(reached)
        while frontier.size:
            products = table[np.ix_(frontier, gens)].ravel()
            new = np.unique(products[~reached[products]])
            reached[new] = True
            frontier = new
    return gens


def _check_associative(table: np.ndarray) -> None:
    n = table.shape[0]
    if n <= settings.group.exhaustive_associativity_limit:
        # left[a,b,c] = (ab)c, right[a,b,c] = a(bc)
        left = table[table]
        right = table[:, table]
        bad = np.argwhere(left != right)
        if bad.size:
            raise NotAssociative(tuple(int(v) for v in bad[0]))
        return
    # Light testi: üreteç g için (xg)y = x(gy) yeterli
    for g in _right_generators(table):
        left = table[table[:, g]]
        right = table[:, table[g]]
        bad = np.argwhere(left != right)
        if bad.size:
            x, y = (int(v) for v in bad[0])
            raise NotAssociative((x, g, y))


def from_cayley_table(
    table: Union[np.ndarray, Sequence[Sequence[int]]],
    labels: Optional[Sequence[str]] = None,
    name: str = '',
) -> Group:
    """
    Cayley tablosunu doğrulayıp Group döndürür.

    Birim eleman 0 indeksinde değilse elemanlar yeniden sıralanır.

    Args:
        table: n×n indeks matrisi
        labels: n farklı etiket (varsayılan: e, g1, g2, ...)
        name: grup adı

    Returns:
        Doğrulanmış Group

    Raises:
        NotClosed, NoIdentity, NoInverse, NotAssociative, SizeLimitExceeded
    """
    try:
        arr = np.array(table, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise NotClosed(f"table is not a rectangular integer matrix: {exc}") from exc
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise NotClosed(f"table must be a non-empty square matrix, got shape {arr.shape}")
    n = arr.shape[0]
    if n > settings.group.size_limit:
        raise SizeLimitExceeded(f"order {n} exceeds size limit {settings.group.size_limit}")

    out_of_range = np.argwhere((arr < 0) | (arr >= n))
    if out_of_range.size:
        i, j = (int(v) for v in out_of_range[0])
        raise NotClosed(f"entry ({i},{j}) = {arr[i, j]} is outside 0..{n - 1}", (i, j))

    if labels is None:
        labels = ['e'] + [f"g{i}" for i in range(1, n)]
        relabel_identity = False
    else:
        labels = list(labels)
        if len(labels) != n:
            raise ValueError(f"expected {n} labels, got {len(labels)}")
        relabel_identity = True

    e = _find_identity(arr)
    if e != 0:
        perm = [e] + [i for i in range(n) if i != e]
        position = np.empty(n, dtype=np.int64)
        position[perm] = np.arange(n)
        arr = position[arr[np.ix_(perm, perm)]]
        labels = [labels[i] for i in perm]
        logger.debug(f"Identity relocated from index {e} to 0")

    if relabel_identity and labels[0] != 'e':
        if 'e' in labels[1:]:
            raise ValueError("label 'e' is reserved for the identity element")
        labels[0] = 'e'
    if len(set(labels)) != n:
        raise ValueError("labels must be unique")

    _check_inverses(arr, labels)
    _check_associative(arr)
    arr.setflags(write=False)
    return Group(arr, labels, name)


def load_cayley_file(path: Union[str, Path]) -> Group:
    """
    Cayley tablosu dosyasını okur.

    Format: 1. satır n; sonraki n satır boşlukla ayrılmış 0 tabanlı
    indeksler; isteğe bağlı son satır virgülle ayrılmış n etiket.
    """
    path = Path(path)
    lines = [line.strip() for line in path.read_text(encoding='utf-8').splitlines()]
    lines = [line for line in lines if line]
    if not lines:
        raise ParseError(f"{path}: empty file", 1)
    try:
        n = int(lines[0])
    except ValueError:
        raise ParseError(f"{path}: first line must be the group order", 1)
    if len(lines) < n + 1:
        raise ParseError(f"{path}: expected {n} table rows, found {len(lines) - 1}", len(lines))

    rows = []
    for lineno, line in enumerate(lines[1:n + 1], start=2):
        try:
            row = [int(v) for v in line.split()]
        except ValueError:
            raise ParseError(f"{path}: non-integer entry in table row", lineno)
        if len(row) != n:
            raise ParseError(f"{path}: row has {len(row)} entries, expected {n}", lineno)
        rows.append(row)

    labels = None
    if len(lines) > n + 1:
        labels = [label.strip() for label in lines[n + 1].split(',')]
        if len(labels) != n:
            raise ParseError(f"{path}: expected {n} labels, found {len(labels)}", n + 2)
    return from_cayley_table(rows, labels, name=path.stem)


# --- Alt gruplar ---

@dataclass(frozen=True)
class Subgroup:
    """Ebeveyn grubun işlemine göre kapalı eleman kümesi."""
    parent: Group
    members: Tuple[int, ...]

    def __post_init__(self):
        members = tuple(sorted({int(m) for m in self.members}))
        object.__setattr__(self, 'members', members)
        n = self.parent.order
        if not members or members[0] != 0:
            raise NotASubgroup("subgroup must contain the identity")
        if members[-1] >= n:
            raise NotASubgroup(f"element {members[-1]} is not in {self.parent.name}")
        index = np.array(members)
        mask = np.zeros(n, dtype=bool)
        mask[index] = True
        products = self.parent.table[np.ix_(index, index)]
        if not mask[products].all():
            a, b = np.argwhere(~mask[products])[0]
            raise NotASubgroup(
                f"not closed: {self.parent.labels[members[a]]}*{self.parent.labels[members[b]]} "
                f"leaves the set"
            )
        if not mask[self.parent.inverses[index]].all():
            raise NotASubgroup("not closed under inversion")
        # Lagrange
        assert n % len(members) == 0, f"|H|={len(members)} does not divide |G|={n}"

    @property
    def order(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, x: int) -> bool:
        return bool(self.mask[x])

    def __repr__(self) -> str:
        return f"Subgroup({self.label} <= {self.parent.name}, order={self.order})"

    @cached_property
    def mask(self) -> np.ndarray:
        mask = np.zeros(self.parent.order, dtype=bool)
        mask[list(self.members)] = True
        mask.setflags(write=False)
        return mask

    @cached_property
    def member_array(self) -> np.ndarray:
        arr = np.array(self.members, dtype=np.int64)
        arr.setflags(write=False)
        return arr

    @property
    def is_whole(self) -> bool:
        return self.order == self.parent.order

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    def issubset(self, other: 'Subgroup') -> bool:
        return self.parent is other.parent and bool(other.mask[self.member_array].all())

    def index_in(self, other: 'Subgroup') -> int:
        if not self.issubset(other):
            raise NotContained(f"{self.label} is not contained in {other.label}")
        return other.order // self.order

    @cached_property
    def is_abelian(self) -> bool:
        t = self.parent.table[np.ix_(self.member_array, self.member_array)]
        return bool(np.array_equal(t, t.T))

    @cached_property
    def as_group(self) -> Group:
        """Kısıtlanmış tablo; i indeksi members[i] elemanına karşılık gelir."""
        position = np.full(self.parent.order, -1, dtype=np.int64)
        position[self.member_array] = np.arange(self.order)
        table = position[self.parent.table[np.ix_(self.member_array, self.member_array)]]
        labels = [self.parent.labels[m] for m in self.members]
        return from_cayley_table(table, labels, name=f"{self.parent.name}[{self.order}]")

    @cached_property
    def generators(self) -> Tuple[int, ...]:
        return tuple(self.members[i] for i in self.as_group.generators)

    @cached_property
    def label(self) -> str:
        if self.is_whole:
            return self.parent.name
        if self.is_trivial:
            return '1'
        return '<' + ','.join(self.parent.labels[g] for g in self.generators) + '>'


def whole(G: Group) -> Subgroup:
    return Subgroup(G, tuple(range(G.order)))


def trivial(G: Group) -> Subgroup:
    return Subgroup(G, (0,))


def _closure(rows: List[List[int]], gens: Iterable[int]) -> List[int]:
    gens = [g for g in dict.fromkeys(gens) if g != 0]
    reached = {0}
    frontier = [0]
    while frontier:
        new = []
        for x in frontier:
            row = rows[x]
            for g in gens:
                y = row[g]
                if y not in reached:
                    reached.add(y)
                    new.append(y)
        frontier = new
    return sorted(reached)


def subgroup_generated(G: Group, gens: Iterable[int]) -> Subgroup:
    """Üreteçleri içeren en küçük alt grup (genişlik öncelikli kapanış)."""
    gens = [int(g) for g in gens]
    for g in gens:
        if not 0 <= g < G.order:
            raise NotContained(f"generator {g} is not an element of {G.name}")
    return Subgroup(G, tuple(_closure(G.rows, gens)))


def minimal_generating_set(G: Group) -> Tuple[int, ...]:
    """
    En küçük üreteç kümesi; eşitlikte küçük indeks tercih edilir.

    max_generators boyutuna kadar kapsamlı arama yapılır, daha büyük rank
    için en yüksek mertebeli elemanla açgözlü genişletilir.
    """
    n = G.order
    if n == 1:
        return ()
    rows = G.rows
    orders = G.element_orders
    cyclic = np.flatnonzero(orders == n)
    if cyclic.size:
        return (int(cyclic[0]),)
    cap = settings.group.max_generators
    for k in range(2, cap + 1):
        for combo in combinations(range(1, n), k):
            if len(_closure(rows, combo)) == n:
                return combo

    gens: List[int] = []
    reached = set(_closure(rows, gens))
    while len(reached) < n:
        outside = [x for x in range(1, n) if x not in reached]
        best = max(outside, key=lambda x: (orders[x], -x))
        gens.append(best)
        reached = set(_closure(rows, gens))
    logger.debug(f"{G.name}: greedy generating set of size {len(gens)}")
    return tuple(gens)


def all_subgroups(K: Group) -> List[Subgroup]:
    """
    Tüm alt gruplar, her biri bir kez, (mertebe, eleman kümesi) sırasında.

    Döngüsel alt gruplardan başlanır; bulunan her alt grup, yeni alt grup
    çıkmayana kadar her döngüsel alt grupla birleştirilir.
    """
    cap = settings.group.subgroup_order_cap
    if K.order > cap:
        raise SizeLimitExceeded(f"all_subgroups supports |K| <= {cap}, got {K.order}")
    rows = K.rows
    cyclic: Dict[FrozenSet[int], int] = {}
    for x in range(K.order):
        cyclic.setdefault(frozenset(_closure(rows, [x])), x)

    found: Dict[FrozenSet[int], Tuple[int, ...]] = {c: (x,) for c, x in cyclic.items()}
    queue = list(found)
    while queue:
        current = queue.pop()
        gens = found[current]
        for x in cyclic.values():
            if x in current:
                continue
            joined = frozenset(_closure(rows, gens + (x,)))
            if joined not in found:
                found[joined] = gens + (x,)
                queue.append(joined)

    ordered = sorted(found, key=lambda m: (len(m), sorted(m)))
    logger.debug(f"{K.name}: {len(ordered)} subgroups")
    return [Subgroup(K, tuple(sorted(m))) for m in ordered]


def center(G: Group) -> Subgroup:
    commuting = (G.table == G.table.T).all(axis=1)
    return Subgroup(G, tuple(int(z) for z in np.flatnonzero(commuting)))


def is_normal(N: Subgroup, H: Subgroup) -> bool:
    """N, H içinde normal mi (h⁻¹ n h ∈ N)."""
    if not N.issubset(H):
        raise NotContained(f"{N.label} is not contained in {H.label}")
    table = H.parent.table
    hs = H.member_array
    ns = N.member_array
    conjugates = table[H.parent.inverses[hs][:, None], table[ns[None, :], hs[:, None]]]
    return bool(N.mask[conjugates].all())


def coset_decomposition(H: Subgroup, N: Subgroup) -> Tuple[Tuple[int, ...], Dict[int, int]]:
    """
    H içindeki sol xN kosetleri.

    Returns:
        (temsilciler, eleman -> koset indeksi); temsilci kosetin en küçük
        indeksli elemanıdır, kosetler temsilciye göre sıralıdır
    """
    if not N.issubset(H):
        raise NotContained(f"{N.label} is not contained in {H.label}")
    rows = H.parent.rows
    reps: List[int] = []
    coset_of: Dict[int, int] = {}
    for x in H.members:
        if x in coset_of:
            continue
        idx = len(reps)
        reps.append(x)
        for n in N.members:
            coset_of[rows[x][n]] = idx
    return tuple(reps), coset_of


def quotient_group(H: Subgroup, N: Subgroup) -> Group:
    """H/N; etiketler koset temsilcilerinin etiketleridir."""
    if H.parent is not N.parent or not N.issubset(H):
        raise NotContained(f"{N.label} is not contained in {H.label}")
    if not is_normal(N, H):
        raise NotNormal(f"{N.label} is not normal in {H.label}")
    reps, coset_of = coset_decomposition(H, N)
    rows = H.parent.rows
    table = [[coset_of[rows[a][b]] for b in reps] for a in reps]
    labels = [H.parent.labels[r] for r in reps]
    return from_cayley_table(table, labels, name=f"{H.label}/{N.label}")


def direct_product(G1: Group, G2: Group) -> Tuple[Group, Subgroup, Subgroup]:
    """
    G1 × G2 bileşen bazlı tablo ile.

    (x, y) elemanı x * |G2| + y indeksindedir.

    Returns:
        (çarpım grubu, G1 gömmesi, G2 gömmesi)
    """
    n1, n2 = G1.order, G2.order
    if n1 * n2 > settings.group.size_limit:
        raise SizeLimitExceeded(
            f"|{G1.name}|*|{G2.name}| = {n1 * n2} exceeds size limit {settings.group.size_limit}"
        )
    t1, t2 = G1.table, G2.table
    table = (t1[:, None, :, None] * n2 + t2[None, :, None, :]).reshape(n1 * n2, n1 * n2)
    labels = ['e'] + [
        f"({G1.labels[i]},{G2.labels[j]})"
        for i in range(n1) for j in range(n2)
    ][1:]
    product = from_cayley_table(table, labels, name=f"{G1.name}x{G2.name}")
    first = Subgroup(product, tuple(i * n2 for i in range(n1)))
    second = Subgroup(product, tuple(range(n2)))
    return product, first, second
