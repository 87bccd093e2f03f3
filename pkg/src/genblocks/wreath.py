"""Wreath products H wr S_w from class/character data of H.

The main path never enumerates elements: classes are labeled by r-tuples of
partitions of w (r = number of classes of H), centralizer orders come from the
product formula, and character values come from the hook-removal recursion.
A brute-force oracle (explicit elements, conjugation, and the classical
extend-then-induce construction) covers small cases for cross-checking.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from math import factorial

from .chartable import CharacterTable
from .cyclotomic import value_is_zero
from .normalizer import build_normalizer, cyclic_group_data, normalizer_group_data
from .partitions import conjugate, enumerate_multipartitions, k_hook_removals

ORACLE_SIZE_LIMIT = 10 ** 4


def _part_multiplicities(pi):
    mult = {}
    for part in pi:
        mult[part] = mult.get(part, 0) + 1
    return mult


def wreath_centralizer_order(base, label):
    """Centralizer order of a class of H wr S_w from the per-cycle product formula."""
    result = 1
    for i, pi in enumerate(label):
        for k, a in _part_multiplicities(pi).items():
            result *= factorial(a) * (k * base.centralizer_orders[i]) ** a
    return result


class WreathGroup:
    """H wr S_w driven by a CharacterTable of H (its marked class defines the
    regular/singular split of the wreath product)."""

    def __init__(self, base, w):
        if w < 0:
            raise ValueError("w must be >= 0")
        self.base = base
        self.w = w
        self.r = base.num_classes()
        if base.num_chars() != self.r:
            raise ValueError("base table must be square")
        self.order = base.order ** w * factorial(w)
        self.class_labels = list(enumerate_multipartitions(w, self.r))
        self.centralizer_orders = [
            wreath_centralizer_order(base, lab) for lab in self.class_labels]
        self.class_sizes = [self.order // c for c in self.centralizer_orders]
        self.marker = base.marked_class_index
        self._memo = {}

    def singular_split(self):
        """(regular, singular) class index sets: regular has empty marker part."""
        regular = tuple(i for i, lab in enumerate(self.class_labels)
                        if not lab[self.marker])
        singular = tuple(i for i, lab in enumerate(self.class_labels)
                         if lab[self.marker])
        return regular, singular

    def char_value(self, alpha, cls):
        """Value of the character labeled alpha at the class labeled cls.

        Recursion removes one cycle at a time, marker-colored cycles first,
        largest cycles first, trading it for a same-length hook in any
        coordinate of alpha weighted by the base character value.
        """
        if sum(sum(p) for p in alpha) != sum(sum(p) for p in cls):
            raise ValueError("label sizes differ: %r vs %r" % (alpha, cls))
        return self._char_value(tuple(alpha), tuple(cls))

    def _char_value(self, alpha, cls):
        key = (alpha, cls)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        if all(not p for p in cls):
            value = 1
        else:
            if cls[self.marker]:
                t = self.marker
            else:
                t = next(i for i, p in enumerate(cls) if p)
            k = cls[t][0]
            rho = cls[:t] + (cls[t][1:],) + cls[t + 1:]
            value = 0
            for s in range(self.r):
                psi = self.base.values[s][t]
                if value_is_zero(psi):
                    continue
                inner = 0
                for mu, leg in k_hook_removals(alpha[s], k):
                    sub = self._char_value(alpha[:s] + (mu,) + alpha[s + 1:], rho)
                    inner = inner + (-1) ** leg * sub
                if not value_is_zero(inner):
                    value = psi * inner + value
        self._memo[key] = value
        return value

    def trivial_label(self):
        lab = [()] * self.r
        if self.w:
            lab[self.base.trivial_index] = (self.w,)
        return tuple(lab)

    def character_table(self):
        """Full table; rows and columns both run over the r-multipartitions of w."""
        labels = self.class_labels
        values = [[self.char_value(alpha, cls) for cls in labels] for alpha in labels]
        _, singular = self.singular_split()
        return CharacterTable(
            order=self.order,
            class_labels=list(labels),
            class_sizes=list(self.class_sizes),
            centralizer_orders=list(self.centralizer_orders),
            row_labels=list(labels),
            values=values,
            trivial_index=labels.index(self.trivial_label()),
            marked_class_index=None,
            singular_classes=singular,
        )


@lru_cache(maxsize=None)
def cyclic_wreath(ell, w):
    return WreathGroup(cyclic_group_data(ell), w)


@lru_cache(maxsize=None)
def normalizer_wreath(ell, w):
    return WreathGroup(normalizer_group_data(ell), w)


# -- star transform and the signed virtual characters --------------------------

def star_transform(alpha, m):
    """Conjugate the first m coordinates of alpha; an involution."""
    if not 0 <= m <= len(alpha):
        raise ValueError("m out of range")
    return tuple(conjugate(p) if i < m else p for i, p in enumerate(alpha))


def eta_sign(alpha, m):
    """(-1) to the total size of the first m coordinates."""
    return (-1) ** sum(sum(p) for p in alpha[:m])


def chi0_value(group, alpha, cls, m):
    """Value at cls of the signed virtual character attached to alpha."""
    return eta_sign(alpha, m) * group.char_value(star_transform(alpha, m), cls)


def wreath_singular_split(class_labels, marker):
    regular = tuple(i for i, lab in enumerate(class_labels) if not lab[marker])
    singular = tuple(i for i, lab in enumerate(class_labels) if lab[marker])
    return regular, singular


# -- permutation helpers --------------------------------------------------------

def perm_cycles(gamma):
    """Cycles of a permutation given as a tuple of images (0-based), fixed
    points included, each cycle starting at its smallest point."""
    seen = [False] * len(gamma)
    cycles = []
    for start in range(len(gamma)):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        nxt = gamma[start]
        while nxt != start:
            cyc.append(nxt)
            seen[nxt] = True
            nxt = gamma[nxt]
        cycles.append(tuple(cyc))
    return cycles


def perm_sign(gamma):
    return (-1) ** sum(len(c) - 1 for c in perm_cycles(gamma))


def cycle_product(group, components, gamma, cycle):
    """Ordered product of the H-components along one cycle of gamma.

    The cycle must be an orbit (j, gamma(j), ...) of gamma; the product runs
    against the cycle direction, matching the natural embedding into the
    symmetric group on blocks x points.
    """
    if tuple(cycle) not in {tuple(c[i:] + c[:i]) for c in perm_cycles(gamma) for i in range(len(c))}:
        raise ValueError("%r is not a cycle of %r" % (cycle, gamma))
    prod = components[cycle[0]]
    for j in reversed(cycle[1:]):
        prod = group.mul(prod, components[j])
    return prod


# -- explicit groups for the oracle ---------------------------------------------

@dataclass
class ExplicitGroup:
    """A small concrete group aligned with a CharacterTable: `class_of` maps an
    element to its class column and `as_permutation` embeds it into the
    symmetric group on its natural points (used for the imbedding check)."""
    elements: list
    identity: object
    mul: callable
    class_of: callable
    table: CharacterTable
    as_permutation: callable = None


def explicit_cyclic(ell):
    table = cyclic_group_data(ell)

    def class_of(e):
        return (e - 1) % ell                    # class labels are g_i = omega^i

    def as_perm(e):
        return tuple((x + e) % ell for x in range(ell))

    return ExplicitGroup(
        elements=list(range(ell)),
        identity=0,
        mul=lambda x, y: (x + y) % ell,
        class_of=class_of,
        table=table,
        as_permutation=as_perm,
    )


def explicit_normalizer(ell):
    group = build_normalizer(ell)
    table = normalizer_group_data(ell)
    index = {x: i for i, cl in enumerate(group.classes) for x in cl}

    def as_perm(e):
        a, k = e
        return tuple((k * x + a) % ell for x in range(ell))

    return ExplicitGroup(
        elements=list(group.elements),
        identity=(0, 1),
        mul=group.mul,
        class_of=lambda x: index[x],
        table=table,
        as_permutation=as_perm,
    )


def _wreath_mul(H, x, y):
    (f, sigma), (g, tau) = x, y
    sigma_inv = [0] * len(sigma)
    for i, v in enumerate(sigma):
        sigma_inv[v] = i
    comps = tuple(H.mul(f[i], g[sigma_inv[i]]) for i in range(len(f)))
    perm = tuple(sigma[tau[i]] for i in range(len(tau)))
    return (comps, perm)


def wreath_class_label(H, element, r):
    """Cycle structure of an explicit wreath element: one part per cycle, placed
    on the coordinate of the class of its cycle product."""
    comps, gamma = element
    parts = [[] for _ in range(r)]
    for cyc in perm_cycles(gamma):
        prod = cycle_product(H, comps, gamma, cyc)
        parts[H.class_of(prod)].append(len(cyc))
    return tuple(tuple(sorted(p, reverse=True)) for p in parts)


def embed_in_symmetric(H, element, points):
    """Natural permutation of blocks x points induced by a wreath element."""
    comps, gamma = element
    w = len(gamma)
    image = [0] * (w * points)
    for i in range(w):
        hperm = H.as_permutation(comps[gamma[i]])
        for x in range(points):
            image[i * points + x] = gamma[i] * points + hperm[x]
    return tuple(image)


def brute_force_wreath_oracle(H, w):
    """Independent table of H wr S_w (w <= 2): explicit classes by conjugation,
    characters by extension/induction from the base group."""
    n = len(H.elements)
    size = n ** w * factorial(w)
    if size > ORACLE_SIZE_LIMIT:
        raise ValueError("oracle limited to groups of order <= %d" % ORACLE_SIZE_LIMIT)
    if w > 2:
        raise ValueError("oracle characters are implemented for w <= 2 only")
    r = H.table.num_classes()
    base = H.table

    if w == 0:
        return WreathGroup(base, 0).character_table()

    elements = [(comps, perm)
                for comps in product(H.elements, repeat=w)
                for perm in permutations(range(w))]
    elements = [(tuple(c), tuple(p)) for c, p in elements]

    # inverse via exhaustive search is fine at this size
    identity = (tuple([H.identity] * w), tuple(range(w)))
    inverse = {}
    emap = set(elements)
    for x in elements:
        if x in inverse:
            continue
        for y in elements:
            if _wreath_mul(H, x, y) == identity:
                inverse[x] = y
                inverse[y] = x
                break

    # conjugacy classes, checked against cycle-structure labels
    seen = set()
    classes = []
    for x in elements:
        if x in seen:
            continue
        orbit = {_wreath_mul(H, _wreath_mul(H, g, x), inverse[g]) for g in elements}
        seen.update(orbit)
        classes.append(orbit)
    labels = []
    for orbit in classes:
        orbit_labels = {wreath_class_label(H, y, r) for y in orbit}
        if len(orbit_labels) != 1:
            raise AssertionError("cycle structure is not a class invariant")
        labels.append(orbit_labels.pop())
    if len(set(labels)) != len(labels):
        raise AssertionError("distinct classes share a cycle structure")

    expected = list(enumerate_multipartitions(w, r))
    order_map = {lab: expected.index(lab) for lab in labels}
    ordering = sorted(range(len(classes)), key=lambda i: order_map[labels[i]])
    classes = [classes[i] for i in ordering]
    labels = [labels[i] for i in ordering]
    reps = [min(cl) for cl in classes]

    def psi(i, h):
        return base.values[i][H.class_of(h)]

    rows = {}
    if w == 1:
        for i in range(r):
            lab = tuple((1,) if j == i else () for j in range(r))
            rows[lab] = [psi(i, comps[0]) for comps, _ in reps]
    else:
        swap = (1, 0)
        for i in range(r):
            for j in range(i + 1, r):
                lab = tuple((1,) if t in (i, j) else () for t in range(r))
                vals = []
                for comps, gamma in reps:
                    if gamma == swap:
                        vals.append(0)
                    else:
                        vals.append(psi(i, comps[0]) * psi(j, comps[1])
                                    + psi(i, comps[1]) * psi(j, comps[0]))
                rows[lab] = vals
        for i in range(r):
            for pi, sign in (((2,), 1), ((1, 1), -1)):
                lab = tuple(pi if t == i else () for t in range(r))
                vals = []
                for comps, gamma in reps:
                    if gamma == swap:
                        vals.append(sign * psi(i, H.mul(comps[0], comps[1])))
                    else:
                        vals.append(psi(i, comps[0]) * psi(i, comps[1]))
                rows[lab] = vals

    row_labels = [lab for lab in expected if lab in rows]
    if set(row_labels) != set(rows):
        raise AssertionError("oracle produced unexpected row labels")
    trivial = tuple((w,) if t == base.trivial_index else () for t in range(r))
    marker = base.marked_class_index
    return CharacterTable(
        order=size,
        class_labels=labels,
        class_sizes=[len(cl) for cl in classes],
        centralizer_orders=[size // len(cl) for cl in classes],
        row_labels=row_labels,
        values=[rows[lab] for lab in row_labels],
        trivial_index=row_labels.index(trivial),
        marked_class_index=None,
        singular_classes=tuple(i for i, lab in enumerate(labels) if lab[marker]),
    )
