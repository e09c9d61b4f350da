"""
Alt Grup Otokomütasyon Olasılığı Modülü
"""

from .automorphisms import automorphism_group
from .group import Group, Subgroup, from_cayley_table
from .named_groups import parse_group_spec
from .probability import distribution, pr_g_bruteforce, pr_g_formula

__all__ = [
    'Group',
    'Subgroup',
    'from_cayley_table',
    'parse_group_spec',
    'automorphism_group',
    'distribution',
    'pr_g_bruteforce',
    'pr_g_formula',
]
