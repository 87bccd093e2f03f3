"""End-to-end acceptance gate.

Each test covers one headline guarantee of the package and prints a single
CRITERION nn ...: PASS/FAIL line.  Criterion 06 is expected to fail honestly:
its singleton sub-claim is false for ell = 4, w = 2, where four characters
mixing a principal coordinate with a zero-column coordinate link into one
block (see check_normalizer_wreath_blocks and tests/test_isometry.py)."""

from fractions import Fraction
from math import gcd

from genblocks.chartable import block_partition, check_orthogonality, contribution
from genblocks.cyclotomic import Cyclotomic, root_of_unity, value_is_zero
from genblocks.isometry import (_normalizer_signed_gram,
                                check_normalizer_wreath_blocks,
                                verify_main_isometry)
from genblocks.normalizer import clifford_irr, irr_ordering, normalizer_blocks
from genblocks.numtheory import mobius, ramanujan_sum
from genblocks.partitions import (ell_core_quotient, enumerate_multipartitions,
                                  enumerate_partitions, from_core_quotient,
                                  k_hook_removals)
from genblocks.symgroup import is_ell_regular_class, sn_blocks, sn_character_table
from genblocks.wreath import (WreathGroup, brute_force_wreath_oracle,
                              chi0_value, cyclic_wreath, explicit_cyclic,
                              explicit_normalizer, normalizer_wreath)


def _report(num, name, ok, detail=""):
    line = "CRITERION %02d %s: %s" % (num, name, "PASS" if ok else "FAIL")
    if detail and not ok:
        line += " [" + detail + "]"
    print(line)
    assert ok, line


def test_criterion_01_blocks_match_cores():
    ok = True
    for n in range(1, 11):
        for ell in (2, 3, 4, 5, 6):
            table, bp = sn_blocks(n, ell)
            cores = {}
            for i, lam in enumerate(table.row_labels):
                cores.setdefault(ell_core_quotient(lam, ell)[0], []).append(i)
            ok = ok and sorted(bp.blocks) == sorted(tuple(v) for v in cores.values())
    _report(1, "symmetric group blocks equal the core partition", ok)


def test_criterion_02_normalizer_block_structure():
    ok = True
    for ell in range(2, 25):
        t = clifford_irr(ell)
        bp = normalizer_blocks(ell)
        ok = ok and len(bp.principal()) == ell
        singles = {t.row_labels[b[0]] for b in bp.blocks if len(b) == 1}
        want = {lab for lab in t.row_labels if mobius(ell // lab.d) == 0}
        ok = ok and singles == want
        ok = ok and (len(bp.blocks) == 1) == (mobius(ell) != 0)
    _report(2, "normalizer block structure for ell <= 24", ok)


def test_criterion_03_singular_contribution_formula():
    ok = True
    for ell in range(2, 25):
        t = clifford_irr(ell)
        sing = t.singular_classes
        for i, li in enumerate(t.row_labels):
            for j, lj in enumerate(t.row_labels):
                want = Fraction(mobius(ell // li.d) * mobius(ell // lj.d), ell)
                ok = ok and value_is_zero(contribution(t, i, j, sing) - want)
        if not ok:
            break
    _report(3, "singular contributions follow the Mobius product rule", ok)


def test_criterion_04_ramanujan_sums():
    ok = True
    for q in range(1, 25):
        ok = ok and ramanujan_sum(q, 1) == mobius(q)
        for m in range(0, 25):
            direct = Cyclotomic.from_rational(0)
            for k in range(1, q + 1):
                if gcd(k, q) == 1:
                    direct = direct + root_of_unity(q, k * m)
            ok = ok and direct.as_rational() == ramanujan_sum(q, m)
    _report(4, "ramanujan sums match direct cyclotomic summation", ok)


def test_criterion_05_wreath_oracle_equivalence():
    ok = True
    for H in (explicit_cyclic(2), explicit_cyclic(3), explicit_normalizer(2)):
        oracle = brute_force_wreath_oracle(H, 2)
        table = WreathGroup(H.table, 2).character_table()
        ok = ok and table.class_labels == oracle.class_labels
        ok = ok and table.class_sizes == oracle.class_sizes
        for lab in table.row_labels:
            ra, rb = table.row_index(lab), oracle.row_index(lab)
            for c in range(table.num_classes()):
                ok = ok and value_is_zero(table.values[ra][c] - oracle.values[rb][c])
    _report(5, "wreath tables match brute-force enumeration", ok)


def test_criterion_06_normalizer_wreath_block_shape():
    """Expected to fail: the singleton sub-claim breaks at ell = 4, w = 2."""
    ok = True
    detail = ""
    for ell, w in [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2)]:
        principal_ok, singletons_ok, bp = check_normalizer_wreath_blocks(ell, w)
        ok = ok and principal_ok
        if not singletons_ok:
            ok = False
            bad = [b for b in bp.blocks if len(b) > 1 and b != bp.principal()]
            detail = ("ell=%d w=%d: non-principal characters are not all "
                      "singletons, linked blocks %r" % (ell, w, bad))
    _report(6, "principal block shape and singleton claim", ok, detail)


def test_criterion_07_signed_gram_equals_cyclic_gram():
    ok = True
    for ell in (2, 3, 4):
        for w in (1, 2, 3):
            alphas = enumerate_multipartitions(w, ell)
            gram_n = _normalizer_signed_gram(ell, w, alphas)
            table = cyclic_wreath(ell, w).character_table()
            regular = table.regular_classes()
            rows = [table.row_index(a) for a in alphas]
            for i in range(len(alphas)):
                for j in range(len(alphas)):
                    want = contribution(table, rows[i], rows[j], regular)
                    ok = ok and value_is_zero(gram_n[i][j] - want)
    _report(7, "signed normalizer grams equal cyclic wreath grams", ok)


def test_criterion_08_main_isometry_end_to_end():
    ok = True
    for ell, w, r in [(2, 1, 0), (2, 1, 1), (3, 1, 2), (3, 2, 1),
                      (4, 2, 1), (4, 3, 2)]:
        ok = ok and verify_main_isometry(ell, w, r).passed
    _report(8, "end-to-end signed isometry for all six parameter sets", ok)


def test_criterion_09_signed_recursion_identity():
    ok = True
    for ell in (2, 3, 4):
        _, m = irr_ordering(ell)
        for w in (1, 2, 3):
            group = normalizer_wreath(ell, w)
            rbase = group.r
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
                            want = want + (-1) ** leg * chi0_value(
                                group, smaller, rho, m)
                    got = chi0_value(group, alpha_r, cls, m)
                    ok = ok and value_is_zero(got - want)
    _report(9, "marker-cycle recursion for the signed virtual characters", ok)


def _all_strip_signs(lam, ell):
    removals = k_hook_removals(lam, ell)
    if not removals:
        return {(lam, 1)}
    out = set()
    for mu, leg in removals:
        for core, sign in _all_strip_signs(mu, ell):
            out.add((core, (-1) ** leg * sign))
    return out


def test_criterion_10_property_suites():
    ok = True
    # orthogonality of constructed tables
    tables = [sn_character_table(n) for n in range(1, 8)]
    tables += [clifford_irr(ell) for ell in range(2, 13)]
    tables += [cyclic_wreath(ell, w).character_table()
               for ell, w in [(2, 2), (3, 2), (4, 2)]]
    tables += [normalizer_wreath(ell, 2).character_table() for ell in (2, 3)]
    for t in tables:
        try:
            check_orthogonality(t)
        except Exception:
            ok = False
    # complementarity across any subset of classes
    for t in (sn_character_table(5), clifford_irr(8)):
        sub = tuple(range(0, t.num_classes(), 2))
        comp = tuple(c for c in range(t.num_classes()) if c not in sub)
        for i in range(t.num_chars()):
            for j in range(t.num_chars()):
                total = contribution(t, i, j, sub) + contribution(t, i, j, comp)
                ok = ok and value_is_zero(total - (1 if i == j else 0))
    # strip sign independent of removal order
    for n in range(9):
        for lam in enumerate_partitions(n):
            for ell in (2, 3, 4, 5):
                results = _all_strip_signs(lam, ell)
                core, _, sign = ell_core_quotient(lam, ell)
                ok = ok and results == {(core, sign)}
    # abacus round trip is a bijection
    for n in range(9):
        for ell in (2, 3, 4, 5):
            seen = set()
            for lam in enumerate_partitions(n):
                core, quot, _ = ell_core_quotient(lam, ell)
                seen.add((core, quot))
                ok = ok and from_core_quotient(core, quot, ell) == lam
            ok = ok and len(seen) == len(enumerate_partitions(n))
    _report(10, "orthogonality, complementarity, signs, abacus round trips", ok)
