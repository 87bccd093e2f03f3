"""Partition combinatorics.

Partitions are plain tuples of weakly decreasing positive integers; the empty
tuple is the unique partition of 0.  Multipartitions are tuples of partitions.

Hook removal and core/quotient extraction both go through beta-sets (first
column hook lengths), which makes rim hooks one-step bead moves and gives leg
lengths for free as bead counts.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

# Exact arithmetic stays comfortable well past anything the verification needs.
MAX_PARTITION_SIZE = 60


def check_partition(parts):
    """Validate and return a partition as a tuple; reject anything malformed."""
    parts = tuple(int(p) for p in parts)
    for i, p in enumerate(parts):
        if p < 1:
            raise ValueError("partition parts must be positive: %r" % (parts,))
        if i > 0 and parts[i - 1] < p:
            raise ValueError("partition parts must be weakly decreasing: %r" % (parts,))
    if sum(parts) > MAX_PARTITION_SIZE:
        raise ValueError("partition size %d exceeds guard %d" % (sum(parts), MAX_PARTITION_SIZE))
    return parts


@lru_cache(maxsize=None)
def enumerate_partitions(n):
    """All partitions of n in reverse lexicographic order, (n) first, (1^n) last."""
    if n < 0:
        raise ValueError("n must be >= 0")

    def gen(remaining, max_part):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, max_part), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def conjugate(lam):
    """Transpose of the Young diagram."""
    if not lam:
        return ()
    cols = [0] * lam[0]
    for part in lam:
        for j in range(part):
            cols[j] += 1
    return tuple(cols)


@dataclass(frozen=True)
class HookCell:
    """A cell of a Young diagram (1-based row/col) with its hook and leg length."""
    row: int
    col: int
    hook_length: int
    leg_length: int


def hook_data(lam):
    """One HookCell per diagram cell, rows top to bottom, cells left to right."""
    conj = conjugate(lam)
    cells = []
    for i, part in enumerate(lam, start=1):
        for j in range(1, part + 1):
            arm = part - j
            leg = conj[j - 1] - i
            cells.append(HookCell(i, j, arm + leg + 1, leg))
    return cells


def beta_set(lam, beads):
    """First-column hook lengths of lam padded to `beads` beta-numbers."""
    if beads < len(lam):
        raise ValueError("need at least %d beads" % len(lam))
    parts = lam + (0,) * (beads - len(lam))
    return tuple(parts[i] + beads - 1 - i for i in range(beads))


def partition_from_beta(beta):
    """Recover the partition from any set of distinct non-negative beta-numbers."""
    ordered = sorted(beta)
    parts = [b - i for i, b in enumerate(ordered)]
    return tuple(p for p in reversed(parts) if p > 0)


def k_hook_removals(lam, k):
    """All ways to remove a rim k-hook from lam, as (smaller partition, leg length).

    A k-hook is a bead b with b-k free; its leg length is the number of beads
    strictly between b-k and b.
    """
    if k < 1:
        raise ValueError("hook length must be positive")
    beads = len(lam)
    beta = beta_set(lam, beads)
    present = set(beta)
    out = []
    for b in beta:
        if b >= k and (b - k) not in present:
            leg = sum(1 for c in beta if b - k < c < b)
            new_beta = present - {b} | {b - k}
            out.append((partition_from_beta(new_beta), leg))
    return out


def remove_hook(lam, cell):
    """Remove the rim hook anchored at `cell`; return (partition, leg length)."""
    if cell.row < 1 or cell.row > len(lam) or cell.col < 1 or cell.col > lam[cell.row - 1]:
        raise ValueError("cell (%d,%d) is not in the diagram of %r" % (cell.row, cell.col, lam))
    conj = conjugate(lam)
    arm = lam[cell.row - 1] - cell.col
    leg = conj[cell.col - 1] - cell.row
    hook = arm + leg + 1
    if cell.hook_length != hook or cell.leg_length != leg:
        raise ValueError("cell data %r inconsistent with diagram of %r" % (cell, lam))
    beads = len(lam)
    beta = set(beta_set(lam, beads))
    b = lam[cell.row - 1] + beads - cell.row
    if (b - hook) in beta:
        raise ValueError("invalid hook removal at %r" % (cell,))
    return partition_from_beta(beta - {b} | {b - hook}), leg


def ell_core_quotient(lam, ell):
    """Abacus ell-core, ell-quotient, and hook-stripping sign of lam.

    The beta-set is padded to the least multiple of ell that is >= the number
    of parts; runner j holds the beta-numbers congruent to j mod ell and yields
    quotient component j+1; the core is read off after sliding all beads down.
    The sign is (-1)^(sum of leg lengths over a complete ell-hook stripping).
    """
    if ell < 2:
        raise ValueError("ell must be >= 2, got %r" % (ell,))
    beads = ((len(lam) + ell - 1) // ell) * ell
    beta = beta_set(lam, beads)
    runners = [sorted(b // ell for b in beta if b % ell == j) for j in range(ell)]
    quotient = tuple(partition_from_beta(runner) for runner in runners)
    core_beta = [q * ell + j for j, runner in enumerate(runners) for q in range(len(runner))]
    core = partition_from_beta(core_beta)

    legs = 0
    mu = lam
    while True:
        removals = k_hook_removals(mu, ell)
        if not removals:
            break
        mu, leg = removals[0]
        legs += leg
    if mu != core:
        raise AssertionError("hook stripping of %r disagrees with abacus core" % (lam,))
    return core, quotient, (-1) ** legs


def from_core_quotient(core, quotient, ell):
    """Inverse of ell_core_quotient: rebuild lam from its core and quotient."""
    if ell < 2:
        raise ValueError("ell must be >= 2")
    if len(quotient) != ell:
        raise ValueError("quotient must have exactly ell components")
    depth = max([len(c) for c in quotient] + [0])
    beads = ell * (((len(core) + ell - 1) // ell) + depth + 1)
    core_beta = beta_set(core, beads)
    runners = [sorted(b // ell for b in core_beta if b % ell == j) for j in range(ell)]
    beta = []
    for j, runner in enumerate(runners):
        count = len(runner)
        if runner != list(range(count)):
            raise ValueError("core has an ell-hook; not a valid ell-core")
        comp = quotient[j] + (0,) * (count - len(quotient[j]))
        beta.extend((comp[i] + count - 1 - i) * ell + j for i in range(count))
    return partition_from_beta(beta)


def centralizer_order_sym(rho):
    """Centralizer order in S_n of a permutation of cycle type rho."""
    mult = {}
    for part in rho:
        mult[part] = mult.get(part, 0) + 1
    result = 1
    for k, a in mult.items():
        result *= factorial(a) * k ** a
    return result


@lru_cache(maxsize=None)
def enumerate_multipartitions(w, r):
    """All r-tuples of partitions of total size w; first component size descends."""
    if w < 0 or r < 1:
        raise ValueError("need w >= 0 and r >= 1")
    if r == 1:
        return tuple((lam,) for lam in enumerate_partitions(w))
    out = []
    for first_size in range(w, -1, -1):
        for first in enumerate_partitions(first_size):
            for rest in enumerate_multipartitions(w - first_size, r - 1):
                out.append((first,) + rest)
    return tuple(out)


def multipartition_size(alpha):
    return sum(sum(component) for component in alpha)
