"""
İsimli Grup Kurucuları

C<n>, D<n> (mertebe 2n), Q8, S<n>, A<n> (n <= 5), E<p>^<k> ve
`isim ( "x" isim )*` grup tanım dilbilgisi.

Kanonik etiketler:
    döngüsel:  e, a, a^2, ...
    dihedral:  e, r, ..., r^(n-1), s, rs, r^2s, ...
    kuaterniyon: e, -e, i, -i, j, -j, k, -k
    simetrik/alterne: 1 tabanlı devir gösterimi, örn. (12)(34)
"""

import logging
import re
from functools import reduce
from typing import List

import numpy as np
from sympy.combinatorics import Permutation
from sympy.combinatorics.named_groups import AlternatingGroup, SymmetricGroup

from config.settings import settings
from src.errors import ParseError, SizeLimitExceeded, UnknownSpec
from src.group import Group, direct_product, from_cayley_table
from src.utils import is_prime

logger = logging.getLogger('autocomm.named')

_NAME_PATTERN = re.compile(r'^(?:(?P<family>[CDSA])(?P<n>\d+)|(?P<q8>Q8)|E(?P<p>\d+)\^(?P<k>\d+))$')

# Birim kuaterniyonlar 1, i, j, k için çarpım: (işaret, sonuç)
_QUATERNION_UNITS = {
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
    (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
}


def _power_label(symbol: str, k: int) -> str:
    if k == 0:
        return ''
    return symbol if k == 1 else f"{symbol}^{k}"


def cyclic(n: int) -> Group:
    everything = np.arange(n)
    table = (everything[:, None] + everything[None, :]) % n
    labels = ['e'] + [_power_label('a', k) for k in range(1, n)]
    return from_cayley_table(table, labels, name=f"C{n}")


def dihedral(n: int) -> Group:
    """r^i s^j elemanı j*n + i indeksinde; r^n = s^2 = e, srs = r⁻¹."""
    size = 2 * n
    table = np.empty((size, size), dtype=np.int64)
    for x in range(size):
        i, a = x % n, x // n
        for y in range(size):
            k, b = y % n, y // n
            rotation = (i + (k if a == 0 else -k)) % n
            table[x, y] = ((a + b) % 2) * n + rotation
    labels = ['e'] + [_power_label('r', i) for i in range(1, n)]
    labels += [_power_label('r', i) + 's' for i in range(n)]
    return from_cayley_table(table, labels, name=f"D{n}")


def quaternion() -> Group:
    """±1, ±i, ±j, ±k; işaretli birim 2*birim + (eksi ise 1) indeksinde."""
    table = np.empty((8, 8), dtype=np.int64)
    for x in range(8):
        for y in range(8):
            sign, unit = _QUATERNION_UNITS[(x // 2, y // 2)]
            if (x % 2) ^ (y % 2):
                sign = -sign
            table[x, y] = 2 * unit + (1 if sign < 0 else 0)
    labels = ['e', '-e', 'i', '-i', 'j', '-j', 'k', '-k']
    return from_cayley_table(table, labels, name='Q8')


def _cycle_label(perm: Permutation) -> str:
    if perm.is_Identity:
        return 'e'
    return ''.join('(' + ''.join(str(v + 1) for v in cycle) + ')' for cycle in perm.cyclic_form)


def _permutation_group(perms: List[Permutation], name: str) -> Group:
    perms = sorted(perms, key=lambda p: (p.order(), p.array_form))
    index = {tuple(p.array_form): i for i, p in enumerate(perms)}
    table = [[index[tuple((p * q).array_form)] for q in perms] for p in perms]
    return from_cayley_table(table, [_cycle_label(p) for p in perms], name=name)


def symmetric(n: int) -> Group:
    return _permutation_group(list(SymmetricGroup(n).generate()), f"S{n}")


def alternating(n: int) -> Group:
    return _permutation_group(list(AlternatingGroup(n).generate()), f"A{n}")


def elementary_abelian(p: int, k: int) -> Group:
    """Z_p^k; vektör (v_0, ..., v_{k-1}) indeksi Σ v_i p^i."""
    n = p ** k
    digits = np.array([[(x // p ** i) % p for i in range(k)] for x in range(n)], dtype=np.int64)
    weights = p ** np.arange(k, dtype=np.int64)
    table = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
    labels = ['e'] + ['(' + ','.join(str(v) for v in row) + ')' for row in digits[1:]]
    return from_cayley_table(table, labels, name=f"E{p}^{k}")


def make_named(spec: str) -> Group:
    """
    İsimli grubu kurar.

    Args:
        spec: C<n>, D<n>, Q8, S<n>, A<n> ya da E<p>^<k>

    Raises:
        UnknownSpec: tanınmayan isim
        SizeLimitExceeded: mertebe size_limit üstünde
    """
    spec = spec.strip()
    match = _NAME_PATTERN.match(spec)
    if match is None:
        raise UnknownSpec(f"unknown group name: {spec!r}")

    limit = settings.group.size_limit
    if match.group('q8'):
        return quaternion()

    if match.group('family'):
        family, n = match.group('family'), int(match.group('n'))
        if n < 1:
            raise UnknownSpec(f"{spec}: index must be positive")
        if family in 'SA' and n > 5:
            raise UnknownSpec(f"{spec}: symmetric and alternating groups are supported for n <= 5")
        order = {'C': n, 'D': 2 * n, 'S': 1, 'A': 1}[family]
        if order > limit:
            raise SizeLimitExceeded(f"{spec} has order {order} > {limit}")
        builder = {'C': cyclic, 'D': dihedral, 'S': symmetric, 'A': alternating}[family]
        return builder(n)

    p, k = int(match.group('p')), int(match.group('k'))
    if not is_prime(p) or k < 1:
        raise UnknownSpec(f"{spec}: E<p>^<k> needs a prime p and k >= 1")
    if p ** k > limit:
        raise SizeLimitExceeded(f"{spec} has order {p ** k} > {limit}")
    return elementary_abelian(p, k)


def parse_group_spec(spec: str) -> Group:
    """`C3xC4` gibi tanımları direkt çarpım olarak kurar (soldan katlanır)."""
    text = spec.strip()
    if not text:
        raise ParseError("empty group spec", 0)
    parts = []
    position = 0
    for part in text.split('x'):
        if not part:
            raise ParseError(f"empty factor in group spec {spec!r}", position)
        try:
            parts.append(make_named(part))
        except UnknownSpec as exc:
            raise ParseError(str(exc), position) from exc
        position += len(part) + 1
    group = reduce(lambda left, right: direct_product(left, right)[0], parts)
    group.name = text
    logger.debug(f"Parsed group spec {text} -> order {group.order}")
    return group
