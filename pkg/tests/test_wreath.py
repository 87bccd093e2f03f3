from itertools import permutations, product
from math import factorial, gcd

import pytest

from genblocks.chartable import check_orthogonality
from genblocks.cyclotomic import value_is_zero
from genblocks.normalizer import irr_ordering, normalizer_group_data
from genblocks.partitions import enumerate_multipartitions
from genblocks.wreath import (WreathGroup, brute_force_wreath_oracle,
                              chi0_value, cyclic_wreath, cycle_product,
                              embed_in_symmetric, eta_sign, explicit_cyclic,
                              explicit_normalizer, normalizer_wreath,
                              perm_cycles, perm_sign, star_transform,
                              wreath_centralizer_order, _wreath_mul)

ORACLE_BASES = [explicit_cyclic(2), explicit_cyclic(3), explicit_normalizer(2)]


def _tables_equal(a, b):
    assert a.class_labels == b.class_labels
    assert a.class_sizes == b.class_sizes
    assert a.centralizer_orders == b.centralizer_orders
    assert sorted(a.row_labels) == sorted(b.row_labels)
    for lab in a.row_labels:
        ra, rb = a.row_index(lab), b.row_index(lab)
        for c in range(a.num_classes()):
            assert value_is_zero(a.values[ra][c] - b.values[rb][c]), (lab, c)
    assert a.singular_classes == b.singular_classes
    assert a.row_labels[a.trivial_index] == b.row_labels[b.trivial_index]


@pytest.mark.parametrize("H", ORACLE_BASES, ids=["Z2", "Z3", "N2"])
def test_oracle_equivalence_w2(H):
    oracle = brute_force_wreath_oracle(H, 2)
    table = WreathGroup(H.table, 2).character_table()
    check_orthogonality(oracle)
    _tables_equal(table, oracle)


def test_oracle_equivalence_n3_and_n4():
    # dihedral bases exercise irrational and degree-2 character values
    for ell in (3, 4):
        H = explicit_normalizer(ell)
        _tables_equal(WreathGroup(H.table, 2).character_table(),
                      brute_force_wreath_oracle(H, 2))


def test_oracle_w1_is_base_table():
    H = explicit_cyclic(3)
    oracle = brute_force_wreath_oracle(H, 1)
    table = WreathGroup(H.table, 1).character_table()
    _tables_equal(table, oracle)


def test_class_count_and_sizes():
    for ell, w in [(2, 3), (3, 2), (4, 2)]:
        g = cyclic_wreath(ell, w)
        assert len(g.class_labels) == len(enumerate_multipartitions(w, ell))
        assert sum(g.class_sizes) == g.order
        for lab, cent in zip(g.class_labels, g.centralizer_orders):
            assert cent == wreath_centralizer_order(g.base, lab)


def test_column_orthogonality_mn_tables():
    bases = [explicit_cyclic(k).table for k in (2, 3, 4)]
    bases += [normalizer_group_data(k) for k in (2, 3, 4)]
    for base in bases:
        for w in (2, 3):
            check_orthogonality(WreathGroup(base, w).character_table())


def test_prop_sign_equals_cycle_count_parity():
    for n in range(1, 8):
        for gamma in permutations(range(n)):
            c = len(perm_cycles(gamma))
            assert (-1) ** c == (-1) ** n * perm_sign(gamma)


def test_cycle_product_paths():
    H = explicit_normalizer(3)
    comps = ((1, 1), (2, 2), (0, 1))
    gamma = (1, 2, 0)
    base = cycle_product(H, comps, gamma, (0, 1, 2))
    rotated = cycle_product(H, comps, gamma, (1, 2, 0))
    # rotating the starting point conjugates the product, preserving its class
    assert H.class_of(base) == H.class_of(rotated)
    with pytest.raises(ValueError):
        cycle_product(H, comps, gamma, (0, 1))


def test_imbedding_cycle_structure():
    """Each m-cycle of a cycle product sitting on a k-cycle of blocks becomes a
    single cycle of length k*m in the big symmetric group (equivalently
    gcd(m,k) cycles of length lcm(m,k) only when gcd(m,k) = 1; the 4-cycles of
    the dihedral group of order 8 inside S4 already rule out the gcd/lcm
    count, since they arise from a 2-cycle of blocks with 2-point product)."""
    for make, ell in [(explicit_cyclic, 2), (explicit_cyclic, 3),
                      (explicit_cyclic, 4), (explicit_normalizer, 3),
                      (explicit_normalizer, 4)]:
        H = make(ell)
        for comps in product(H.elements, repeat=2):
            for gamma in permutations(range(2)):
                x = (tuple(comps), tuple(gamma))
                big = embed_in_symmetric(H, x, ell)
                expect = []
                for cyc in perm_cycles(x[1]):
                    prod = cycle_product(H, x[0], x[1], cyc)
                    for pc in perm_cycles(H.as_permutation(prod)):
                        expect.append(len(cyc) * len(pc))
                assert sorted(len(c) for c in perm_cycles(big)) == sorted(expect)


def test_imbedding_is_homomorphism():
    H = explicit_normalizer(4)
    elems = [(tuple(c), tuple(g)) for c in product(H.elements[::3], repeat=2)
             for g in permutations(range(2))]
    for x in elems[::5]:
        for y in elems[::7]:
            px, py = embed_in_symmetric(H, x, 4), embed_in_symmetric(H, y, 4)
            assert tuple(px[py[i]] for i in range(8)) == \
                embed_in_symmetric(H, _wreath_mul(H, x, y), 4)


def test_star_transform():
    a = ((2,), (1,), ())
    assert star_transform(a, 1) == ((1, 1), (1,), ())
    assert star_transform(star_transform(a, 2), 2) == a
    assert star_transform(a, 0) == a
    assert eta_sign(a, 0) == 1
    assert eta_sign(a, 1) == 1
    assert eta_sign(a, 2) == -1


def test_mn_analogue_small():
    """Removing a marker-colored cycle from the signed virtual character
    expands over same-length hooks of the first ell coordinates, with no
    base-character factor."""
    ell, w = 2, 2
    group = normalizer_wreath(ell, w)
    _, m = irr_ordering(ell)
    rbase = group.r
    from genblocks.partitions import k_hook_removals
    for alpha in enumerate_multipartitions(w, ell):
        alpha_r = alpha + ((),) * (rbase - ell)
        for cls in group.class_labels:
            if not cls[group.marker]:
                continue
            k = cls[group.marker][0]
            rho = tuple(p if t != group.marker else p[1:]
                        for t, p in enumerate(cls))
            want = 0
            for s in range(ell):
                for mu, leg in k_hook_removals(alpha_r[s], k):
                    smaller = alpha_r[:s] + (mu,) + alpha_r[s + 1:]
                    want = want + (-1) ** leg * chi0_value(group, smaller, rho, m)
            got = chi0_value(group, alpha_r, cls, m)
            assert value_is_zero(got - want), (alpha, cls)


def test_singular_split():
    g = normalizer_wreath(3, 1)
    regular, singular = g.singular_split()
    assert len(singular) == 1
    assert len(regular) == g.r - 1
    for ell, w in [(2, 2), (3, 2)]:
        g = cyclic_wreath(ell, w)
        regular, singular = g.singular_split()
        assert sorted(regular + singular) == list(range(len(g.class_labels)))


def test_oracle_guard():
    with pytest.raises(ValueError):
        brute_force_wreath_oracle(explicit_cyclic(2), 3)
    with pytest.raises(ValueError):
        brute_force_wreath_oracle(explicit_normalizer(15), 2)
