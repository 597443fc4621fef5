"""Inequivalent binary rooted trees in canonical form.

A tree is either a leaf or an ordered pair of trees.  Two trees are
equivalent when one can be turned into the other by swapping children at
internal vertices; we work with one canonical representative per class,
the one in which every left subtree compares >= the right subtree.
Isomorphism testing is then string equality of the canonical
serialization: "." for a leaf, "(" + left + right + ")" for an internal
vertex, so the 3-leaf tree prints as "((..).)".

Leaves are implicitly numbered 1..n by depth-first traversal that visits
the left (greater or equal) subtree first; all permutation work in
perm.py and sample.py uses that labeling.
"""

from functools import lru_cache

_intern = {}


class Tree:
    __slots__ = ("left", "right", "leaves", "key")

    def __init__(self, left, right, leaves, key):
        self.left = left
        self.right = right
        self.leaves = leaves
        self.key = key

    @property
    def is_leaf(self):
        return self.left is None

    def __eq__(self, other):
        return isinstance(other, Tree) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return self.key


LEAF = _intern.setdefault(".", Tree(None, None, 1, "."))


def node(left, right):
    """Internal vertex with children in canonical order (left >= right).
    The caller may pass the children either way around."""
    if compare(left, right) < 0:
        left, right = right, left
    key = "(" + left.key + right.key + ")"
    cached = _intern.get(key)
    if cached is not None:
        return cached
    return _intern.setdefault(key, Tree(left, right, left.leaves + right.leaves, key))


def parse(s):
    """Inverse of the canonical serialization."""
    pos = 0

    def rec():
        nonlocal pos
        if s[pos] == ".":
            pos += 1
            return LEAF
        assert s[pos] == "(", "malformed tree string"
        pos += 1
        left = rec()
        right = rec()
        assert s[pos] == ")", "malformed tree string"
        pos += 1
        return node(left, right)

    out = rec()
    assert pos == len(s), "trailing characters in tree string"
    return out


def compare(a, b):
    """Total order: more leaves first, ties broken by (left, right)
    lexicographically under the same order.  Returns -1, 0 or 1."""
    if a.key == b.key:
        return 0
    if a.leaves != b.leaves:
        return -1 if a.leaves < b.leaves else 1
    c = compare(a.left, b.left)
    if c:
        return c
    return compare(a.right, b.right)


DEFAULT_CAP = 20


@lru_cache(maxsize=None)
def _all_trees(n):
    if n == 1:
        return (LEAF,)
    out = []
    for k in range(n - 1, (n - 1) // 2, -1):
        lefts = _all_trees(k)
        if 2 * k > n:
            rights = _all_trees(n - k)
            for a in lefts:
                for b in rights:
                    out.append(node(a, b))
        else:
            for i, a in enumerate(lefts):
                for b in lefts[i:]:
                    out.append(node(a, b))
    return tuple(out)


def enumerate_trees(n, cap=DEFAULT_CAP):
    """All inequivalent binary trees with n leaves, in decreasing order
    under compare.  Enumeration is restricted to small n (default cap
    20); counts past the cap come from formulas, not listings."""
    if n < 1:
        raise ValueError("need n >= 1")
    if n > cap:
        raise ValueError("enumeration capped at %d leaves (asked for %d)" % (cap, n))
    return _all_trees(n)


@lru_cache(maxsize=None)
def aut_size(t):
    """Order of the automorphism group: product over children, doubled
    whenever the two child subtrees coincide."""
    if t.is_leaf:
        return 1
    a = aut_size(t.left) * aut_size(t.right)
    return 2 * a if t.left == t.right else a


def _merge(mu, nu):
    return tuple(sorted(mu + nu, reverse=True))


@lru_cache(maxsize=None)
def cycle_type_table(t):
    """dict mapping each binary partition lam of leaves(t) to the number
    of automorphisms of t whose induced leaf permutation has cycle type
    lam.  Missing keys mean zero.

    At a vertex with distinct children the type is the multiset union of
    the two child types; at a vertex with equal children it is either a
    union of two child types (no swap) or the double 2*mu of a single
    child type mu (swap), each swap appearing aut_size(child) times.
    """
    if t.is_leaf:
        return {(1,): 1}
    ta = cycle_type_table(t.left)
    tb = cycle_type_table(t.right)
    out = {}
    for mu, cm in ta.items():
        for nu, cn in tb.items():
            key = _merge(mu, nu)
            out[key] = out.get(key, 0) + cm * cn
    if t.left == t.right:
        a = aut_size(t.left)
        for mu, cm in ta.items():
            key = tuple(sorted((2 * p for p in mu), reverse=True))
            out[key] = out.get(key, 0) + a * cm
    assert sum(out.values()) == aut_size(t)
    return out


def cherries(t):
    """Number of internal vertices whose both children are leaves."""
    if t.is_leaf:
        return 0
    if t.left.is_leaf and t.right.is_leaf:
        return 1
    return cherries(t.left) + cherries(t.right)


def count_occurrences(pattern, t):
    """Number of vertices of t whose full rooted subtree is isomorphic
    to pattern."""
    hit = 1 if t == pattern else 0
    if t.is_leaf:
        return hit
    return hit + count_occurrences(pattern, t.left) + count_occurrences(pattern, t.right)


def symmetry_count(t):
    """Number of internal vertices whose two child subtrees coincide."""
    if t.is_leaf:
        return 0
    own = 1 if t.left == t.right else 0
    return own + symmetry_count(t.left) + symmetry_count(t.right)
