"""Group-agnostic character table packaging, contributions, and block partitions."""

from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import value_conjugate, value_is_zero


class ConsistencyError(RuntimeError):
    """A constructed table failed an internal exactness check (never silent)."""


@dataclass
class CharacterTable:
    """Class data plus a matrix of exact character values (rows = characters).

    Values may be int, Fraction, or Cyclotomic.  `marked_class_index`
    designates the distinguished class used by wreath-product regular/singular
    splits; `singular_classes` is the designated singular column subset.
    """
    order: int
    class_labels: list
    class_sizes: list
    centralizer_orders: list
    row_labels: list
    values: list
    trivial_index: int
    marked_class_index: int = None
    singular_classes: tuple = None

    def num_classes(self):
        return len(self.class_labels)

    def num_chars(self):
        return len(self.row_labels)

    def class_index(self, label):
        return self.class_labels.index(label)

    def row_index(self, label):
        return self.row_labels.index(label)

    def regular_classes(self):
        sing = set(self.singular_classes or ())
        return tuple(c for c in range(self.num_classes()) if c not in sing)

    def validate(self, orthogonality=True):
        if sum(self.class_sizes) != self.order:
            raise ConsistencyError("class sizes sum to %d, not |G| = %d"
                                   % (sum(self.class_sizes), self.order))
        for size, cent in zip(self.class_sizes, self.centralizer_orders):
            if size * cent != self.order:
                raise ConsistencyError("class size * centralizer != |G|")
        if any(v != 1 for v in self.values[self.trivial_index]):
            raise ConsistencyError("designated trivial row is not all ones")
        if orthogonality:
            check_orthogonality(self)
        return self


def contribution(table, i, j, subset):
    """Exact partial inner product of rows i and j over the class subset."""
    total = Fraction(0)
    for c in subset:
        total = total + table.class_sizes[c] * (
            table.values[i][c] * value_conjugate(table.values[j][c]))
    return total * Fraction(1, table.order)


def contribution_matrix(table, subset):
    n = table.num_chars()
    mat = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            mat[i][j] = contribution(table, i, j, subset)
            if i != j:
                mat[j][i] = value_conjugate(mat[i][j])
    return mat


def check_orthogonality(table):
    """Both orthogonality relations, exactly; raises ConsistencyError on failure."""
    all_classes = range(table.num_classes())
    for i in range(table.num_chars()):
        for j in range(i, table.num_chars()):
            got = contribution(table, i, j, all_classes)
            want = 1 if i == j else 0
            if not value_is_zero(got - want):
                raise ConsistencyError(
                    "row orthogonality fails for rows %d,%d: got %s" % (i, j, got))
    for c in range(table.num_classes()):
        for d in range(c, table.num_classes()):
            total = 0
            for i in range(table.num_chars()):
                total = table.values[i][c] * value_conjugate(table.values[i][d]) + total
            want = table.centralizer_orders[c] if c == d else 0
            if not value_is_zero(total - want):
                raise ConsistencyError(
                    "column orthogonality fails for classes %d,%d" % (c, d))


class UnionFind:
    """Disjoint-set union over 0..n-1 with path compression."""

    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


@dataclass(frozen=True)
class BlockPartition:
    """Disjoint character-index blocks covering all rows; principal block flagged."""
    blocks: tuple
    principal_index: int

    def block_of(self, row):
        for i, block in enumerate(self.blocks):
            if row in block:
                return i
        raise KeyError(row)

    def principal(self):
        return self.blocks[self.principal_index]


def block_partition(table, subset):
    """C-blocks: connected components of the nonzero-contribution graph on `subset`."""
    n = table.num_chars()
    uf = UnionFind(n)
    for i in range(n):
        for j in range(i + 1, n):
            if not value_is_zero(contribution(table, i, j, subset)):
                uf.union(i, j)
    groups = {}
    for i in range(n):
        groups.setdefault(uf.find(i), []).append(i)
    blocks = tuple(tuple(groups[root]) for root in sorted(groups))
    principal = next(k for k, block in enumerate(blocks) if table.trivial_index in block)
    return BlockPartition(blocks, principal)
