"""The normalizer N of a regular cyclic subgroup of the full symmetric group
on its points: explicit elements, classes, Clifford-theoretic character table,
singular classes, and its blocks.

Elements are pairs (a, k): a shift a mod ell and a unit twist k, multiplying
as (a, k)(b, m) = (a + k*b, k*m).  The cyclic normal subgroup is the a-axis,
generated by omega = (1, 1); the twists form the automorphism group.
"""

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .chartable import (BlockPartition, CharacterTable, ConsistencyError,
                        block_partition, check_orthogonality)
from .cyclotomic import Cyclotomic, root_of_unity
from .numtheory import divisors, euler_phi, mobius

DEFAULT_MAX_ELL = 30


def max_ell():
    return int(os.environ.get("GENBLOCKS_MAX_ELL", DEFAULT_MAX_ELL))


@dataclass(frozen=True)
class CliffordLabel:
    """Row label: a divisor d of ell and an index into Irr of the stabilizer of d."""
    d: int
    theta: int


@dataclass
class NormalizerGroup:
    ell: int
    elements: list
    classes: list           # list of tuples of elements
    class_reps: list
    class_sizes: list
    centralizer_orders: list
    identity_class: int
    omega_class: int

    def mul(self, x, y):
        a, k = x
        b, m = y
        return ((a + k * b) % self.ell, (k * m) % self.ell)

    def inv(self, x):
        a, k = x
        kinv = pow(k, -1, self.ell)
        return ((-kinv * a) % self.ell, kinv)

    def conj(self, g, x):
        """g x g^-1."""
        return self.mul(self.mul(g, x), self.inv(g))


@lru_cache(maxsize=None)
def build_normalizer(ell):
    """Group data for N of order ell*phi(ell), classes by brute-force conjugation."""
    if ell < 2:
        raise ValueError("ell must be >= 2")
    if ell > max_ell():
        raise ValueError("ell = %d exceeds bound %d (set GENBLOCKS_MAX_ELL)" % (ell, max_ell()))
    units = [k for k in range(1, ell) if gcd(k, ell) == 1] or [1]
    elements = [(a, k) for a in range(ell) for k in units]
    group = NormalizerGroup(ell, elements, [], [], [], [], -1, -1)
    seen = set()
    for x in sorted(elements):
        if x in seen:
            continue
        orbit = sorted({group.conj(g, x) for g in elements})
        seen.update(orbit)
        group.classes.append(tuple(orbit))
    group.classes.sort(key=lambda cl: cl[0])
    group.class_reps = [cl[0] for cl in group.classes]
    group.class_sizes = [len(cl) for cl in group.classes]
    order = len(elements)
    group.centralizer_orders = [order // s for s in group.class_sizes]
    group.identity_class = group.class_reps.index((0, 1))
    group.omega_class = next(i for i, cl in enumerate(group.classes) if (1, 1) in cl)
    return group


def class_of(group, x):
    for i, cl in enumerate(group.classes):
        if x in cl:
            return i
    raise KeyError(x)


def abelian_characters(elems, modulus):
    """All characters of a multiplicative subgroup of units mod `modulus`.

    Returns (M, chars) with M the group exponent and each character a dict
    mapping an element to its value's exponent e, the value being the e-th
    power of a fixed primitive M-th root of unity.  The trivial character
    comes first; the rest follow in lexicographic order of their values on a
    fixed generating set.
    """
    elems = sorted(elems)
    if 1 not in elems:
        raise ValueError("subgroup must contain 1")

    def elem_order(k):
        o, x = 1, k
        while x != 1:
            x = x * k % modulus
            o += 1
        return o

    orders = {k: elem_order(k) for k in elems}
    exponent = 1
    for o in orders.values():
        exponent = lcm(exponent, o)

    generated = {1}
    gens = []
    for k in elems:
        if k not in generated:
            gens.append(k)
            grown = set(generated)
            for base in generated:
                x = base
                for _ in range(orders[k]):
                    x = x * k % modulus
                    grown.add(x)
            generated = grown
    if len(generated) != len(elems):
        raise AssertionError("generating set does not span the subgroup")

    def try_assignment(exps):
        # exps[i] is the exponent (times M/order) assigned to gens[i]
        table = {1: 0}
        frontier = [1]
        while frontier:
            nxt = []
            for x in frontier:
                for g, e in zip(gens, exps):
                    y = x * g % modulus
                    v = (table[x] + e) % exponent
                    if y in table:
                        if table[y] != v:
                            return None
                    else:
                        table[y] = v
                        nxt.append(y)
            frontier = nxt
        return table

    def assignments(i):
        if i == len(gens):
            yield ()
            return
        step = exponent // orders[gens[i]]
        for e in range(0, exponent, step):
            for rest in assignments(i + 1):
                yield (e,) + rest

    chars = []
    for exps in assignments(0):
        table = try_assignment(exps)
        if table is not None:
            chars.append((exps, table))
    if len(chars) != len(elems):
        raise AssertionError("expected %d characters, found %d" % (len(elems), len(chars)))
    chars.sort(key=lambda pair: pair[0])
    return exponent, [table for _, table in chars]


def stabilizer_subgroup(ell, d):
    """Twists fixing the d-indexed character of the cyclic subgroup: k = 1 mod ell/d."""
    step = ell // d
    return sorted(k for k in range(1, ell) if gcd(k, ell) == 1 and k % step == 1 % step)


def orbit_partition(ell):
    """Orbits of the ell characters of the cyclic subgroup under twisting, keyed by d."""
    build_normalizer(ell)
    units = [k for k in range(1, ell + 1) if gcd(k, ell) == 1]
    orbits = {}
    covered = set()
    for d in divisors(ell):
        orbit = sorted({(k * d - 1) % ell + 1 for k in units})
        if len(orbit) != euler_phi(ell // d):
            raise ConsistencyError("orbit of d=%d has wrong size" % d)
        if covered & set(orbit):
            raise ConsistencyError("orbits are not disjoint")
        covered.update(orbit)
        orbits[d] = tuple(orbit)
    if len(covered) != ell:
        raise ConsistencyError("orbits do not cover all characters")
    return orbits


def _check_extension_is_homomorphism(group, d, stab):
    ell = group.ell
    inertia = [(a, k) for a in range(ell) for k in stab]
    for x in inertia:
        for y in inertia:
            a, _ = x
            b, _ = y
            c, _ = group.mul(x, y)
            if (d * c - d * a - d * b) % ell:
                raise ConsistencyError("extension is not a homomorphism for d=%d" % d)
        # k*d = d mod ell is the algebraic form of the same condition
        if (x[1] * d - d) % ell:
            raise ConsistencyError("stabilizer element %r does not fix d=%d" % (x, d))


@lru_cache(maxsize=None)
def clifford_irr(ell):
    """Character table of N with rows labeled by CliffordLabel(d, theta).

    Each row is the induction from the inertia subgroup of the product of the
    canonical extension (a, k) -> zeta_ell^(d*a) with a character theta of the
    stabilizer.  Orthogonality and restriction to the cyclic subgroup are
    verified exactly; any failure is a hard error.
    """
    group = build_normalizer(ell)
    labels = []
    values = []
    trivial_index = None
    for d in divisors(ell):
        stab = stabilizer_subgroup(ell, d)
        _check_extension_is_homomorphism(group, d, stab)
        stab_set = set(stab)
        inertia_order = ell * len(stab)
        theta_mod, thetas = abelian_characters(stab, ell)
        for t_idx, theta in enumerate(thetas):
            order = lcm(ell, theta_mod)
            row = []
            for rep in group.class_reps:
                weights = {}
                for g in group.elements:
                    a, k = group.conj(g, rep)
                    if k in stab_set:
                        e = (d * a * (order // ell) + theta[k] * (order // theta_mod)) % order
                        weights[e] = weights.get(e, 0) + 1
                val = Cyclotomic.from_exponents(order, weights) * Fraction(1, inertia_order)
                if val.is_rational():
                    val = Cyclotomic.from_rational(val.as_rational())
                row.append(val)
            if d == ell and t_idx == 0:
                trivial_index = len(labels)
            labels.append(CliffordLabel(d, t_idx))
            values.append(row)

    table = CharacterTable(
        order=len(group.elements),
        class_labels=list(group.class_reps),
        class_sizes=list(group.class_sizes),
        centralizer_orders=list(group.centralizer_orders),
        row_labels=labels,
        values=values,
        trivial_index=trivial_index,
        marked_class_index=group.omega_class,
        singular_classes=normalizer_singular_classes(ell),
    )
    if table.num_chars() != table.num_classes():
        raise ConsistencyError("character count differs from class count")
    check_orthogonality(table)
    _check_restrictions(group, table)
    table.validate(orthogonality=False)
    return table


def _check_restrictions(group, table):
    """Restriction to the cyclic subgroup must be the sum over one twist orbit."""
    ell = group.ell
    cyclic_classes = [(c, rep) for c, rep in enumerate(group.class_reps) if rep[1] == 1]
    for row, label in enumerate(table.row_labels):
        ns = [n for n in range(1, ell + 1) if gcd(n, ell) == gcd(label.d, ell)]
        for c, (a, _) in cyclic_classes:
            weights = {}
            for n in ns:
                e = n * a % ell
                weights[e] = weights.get(e, 0) + 1
            want = Cyclotomic.from_exponents(ell, weights)
            if not (table.values[row][c] - want).is_zero():
                raise ConsistencyError(
                    "restriction of %r to the cyclic subgroup is wrong" % (label,))


def normalizer_singular_classes(ell):
    """Indices of classes consisting of full-length cycles of the cyclic subgroup."""
    group = build_normalizer(ell)
    singular = tuple(
        i for i, cl in enumerate(group.classes)
        if any(k == 1 and gcd(a, ell) == 1 for a, k in cl))
    count = sum(group.class_sizes[i] for i in singular)
    if count != euler_phi(ell):
        raise ConsistencyError("singular classes hold %d elements, expected phi(ell)" % count)
    return singular


def normalizer_blocks(ell):
    """Blocks of N across its singular classes; must match the mu-pattern prediction."""
    table = clifford_irr(ell)
    computed = block_partition(table, table.singular_classes)
    principal = tuple(sorted(
        i for i, lab in enumerate(table.row_labels) if mobius(ell // lab.d) != 0))
    predicted = [principal] + [
        (i,) for i, lab in enumerate(table.row_labels) if mobius(ell // lab.d) == 0]
    if sorted(computed.blocks) != sorted(predicted):
        raise ConsistencyError(
            "computed blocks %r differ from predicted %r" % (computed.blocks, predicted))
    if len(computed.principal()) != ell:
        raise ConsistencyError("principal block has size %d, expected ell" % (
            len(computed.principal()),))
    return computed


def irr_ordering(ell):
    """Row order psi_1..psi_r: value -1 at omega first, then +1 with the trivial
    character in position ell, then value 0; ties broken by (d, theta index).

    Returns (row permutation, m) with m the size of the -1 band.
    """
    table = clifford_irr(ell)
    omega = table.marked_class_index
    minus, plus, zero = [], [], []
    for i, label in enumerate(table.row_labels):
        v = table.values[i][omega]
        v = v.as_rational() if isinstance(v, Cyclotomic) else Fraction(v)
        if v == -1:
            minus.append(i)
        elif v == 1:
            plus.append(i)
        elif v == 0:
            zero.append(i)
        else:
            raise ConsistencyError("value at omega is %s, expected -1/0/1" % v)
    key = lambda i: (table.row_labels[i].d, table.row_labels[i].theta)
    minus.sort(key=key)
    plus.sort(key=key)
    plus.remove(table.trivial_index)
    plus.append(table.trivial_index)
    zero.sort(key=key)
    if len(minus) + len(plus) != ell:
        raise ConsistencyError("principal-block band sizes do not sum to ell")
    return minus + plus + zero, len(minus)


@lru_cache(maxsize=None)
def normalizer_group_data(ell):
    """N's table with rows in psi_1..psi_r order, ready to serve as a wreath base."""
    table = clifford_irr(ell)
    perm, _ = irr_ordering(ell)
    return CharacterTable(
        order=table.order,
        class_labels=list(table.class_labels),
        class_sizes=list(table.class_sizes),
        centralizer_orders=list(table.centralizer_orders),
        row_labels=[table.row_labels[i] for i in perm],
        values=[table.values[i] for i in perm],
        trivial_index=ell - 1,
        marked_class_index=table.marked_class_index,
        singular_classes=table.singular_classes,
    )


@lru_cache(maxsize=None)
def cyclic_group_data(ell):
    """The cyclic group of order ell with classes g_i = omega^i and rows chi_[m].

    The marked class is the identity g_ell, matching the regular/singular split
    of its wreath products; singular classes are the full-length cycles.
    """
    if ell < 2:
        raise ValueError("ell must be >= 2")
    reps = list(range(1, ell + 1))          # g_i = omega^i, g_ell = identity
    values = [[root_of_unity(ell, m * i) for i in reps] for m in reps]
    return CharacterTable(
        order=ell,
        class_labels=reps,
        class_sizes=[1] * ell,
        centralizer_orders=[ell] * ell,
        row_labels=reps,
        values=values,
        trivial_index=ell - 1,
        marked_class_index=ell - 1,
        singular_classes=tuple(i for i, g in enumerate(reps) if gcd(g, ell) == 1),
    )
