"""Conjugacy classes and irreducible characters of S_n via Murnaghan-Nakayama."""

import os
from functools import lru_cache
from math import factorial

from .chartable import CharacterTable, block_partition
from .partitions import (centralizer_order_sym, enumerate_partitions,
                         k_hook_removals)

DEFAULT_MAX_N = 14


def max_table_n():
    return int(os.environ.get("GENBLOCKS_MAX_N", DEFAULT_MAX_N))


def is_ell_regular_class(rho, ell):
    """True iff no cycle length of rho is divisible by ell."""
    if ell < 2:
        raise ValueError("ell must be >= 2")
    return all(part % ell for part in rho)


@lru_cache(maxsize=None)
def mn_char_value(lam, rho):
    """Integer character value of phi_lam at cycle type rho, by hook recursion.

    Consumes the largest remaining cycle first; memoized on (lam, remaining
    cycle multiset), which the sorted tuple rho encodes.
    """
    if sum(lam) != sum(rho):
        raise ValueError("size mismatch: |%r| != |%r|" % (lam, rho))
    if not rho:
        return 1
    k, rest = rho[0], rho[1:]
    total = 0
    for mu, leg in k_hook_removals(lam, k):
        total += (-1) ** leg * mn_char_value(mu, rest)
    return total


def sn_class_size(rho):
    return factorial(sum(rho)) // centralizer_order_sym(rho)


def sn_character_table(n, max_n=None):
    """Full character table of S_n, rows and columns in reverse-lex partition order."""
    bound = max_table_n() if max_n is None else max_n
    if n > bound:
        raise ValueError(
            "n = %d exceeds the table bound %d; raise GENBLOCKS_MAX_N to override" % (n, bound))
    labels = list(enumerate_partitions(n))
    values = [[mn_char_value(lam, rho) for rho in labels] for lam in labels]
    return CharacterTable(
        order=factorial(n),
        class_labels=labels,
        class_sizes=[sn_class_size(rho) for rho in labels],
        centralizer_orders=[centralizer_order_sym(rho) for rho in labels],
        row_labels=labels,
        values=values,
        trivial_index=0,
    )


def sn_blocks(n, ell):
    """ell-blocks of S_n: linking across the ell-regular classes."""
    table = sn_character_table(n)
    subset = [c for c, rho in enumerate(table.class_labels)
              if is_ell_regular_class(rho, ell)]
    return table, block_partition(table, subset)


def sn_regular_class_data(n, ell):
    """Labels and sizes of the ell-regular classes of S_n."""
    classes = [rho for rho in enumerate_partitions(n) if is_ell_regular_class(rho, ell)]
    return classes, [sn_class_size(rho) for rho in classes]
