"""Uniform random generation of tanglegrams, trees, and tangled chains.

The sampling route is the same for all three objects.  A binary
partition lam of n is drawn with exact rational weights (z*q^2 for
tanglegrams, q for trees, z^(k-1)*q^k for chains), then each tree is
built together with an automorphism of cycle type lam by a recursive
procedure whose output probability is exactly 1/(|A(T)|*q(lam)), and
finally matchings between neighboring trees are filled in by sampling a
uniform conjugator.  All weights are exact integers over a common
denominator; a single rng.randrange drives each categorical draw, so
there is no floating-point bias anywhere.

Identical seeds give identical samples.  The rng argument everywhere is
an owned random.Random-like object with randrange and shuffle.
"""

import bisect
import itertools
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .partition import binary_partitions, halve, q_of, split_pairs, z_of
from .perm import compose, flip, identity, interleave, inverse, sample_conjugator
from .tree import LEAF, compare, node


class Tanglegram:
    """A pair of trees with a matching: leaf i of the left tree is tied
    to leaf matching(i) of the right tree, leaves numbered by DFS."""

    __slots__ = ("left", "right", "matching")

    def __init__(self, left, right, matching):
        if left.leaves != right.leaves or left.leaves != len(matching):
            raise ValueError("leaf counts and matching size must agree")
        if sorted(matching) != list(range(1, left.leaves + 1)):
            raise ValueError("matching must be a permutation of 1..n")
        self.left = left
        self.right = right
        self.matching = tuple(matching)

    @property
    def n(self):
        return self.left.leaves

    def __eq__(self, other):
        return (isinstance(other, Tanglegram)
                and self.left == other.left
                and self.right == other.right
                and self.matching == other.matching)

    def __hash__(self):
        return hash((self.left, self.right, self.matching))

    def __repr__(self):
        return "Tanglegram(%s, %s, %r)" % (self.left.key, self.right.key, list(self.matching))

    def to_json(self):
        return {"n": self.n, "left": self.left.key, "right": self.right.key,
                "matching": list(self.matching)}


class TangledChain:
    """k trees in a row with a matching between each neighboring pair."""

    __slots__ = ("trees", "matchings")

    def __init__(self, trees, matchings):
        trees = tuple(trees)
        matchings = tuple(tuple(m) for m in matchings)
        if not trees:
            raise ValueError("need at least one tree")
        n = trees[0].leaves
        if any(t.leaves != n for t in trees) or len(matchings) != len(trees) - 1:
            raise ValueError("leaf counts and matching count must agree")
        if any(sorted(m) != list(range(1, n + 1)) for m in matchings):
            raise ValueError("every matching must be a permutation of 1..n")
        self.trees = trees
        self.matchings = matchings

    @property
    def n(self):
        return self.trees[0].leaves

    @property
    def k(self):
        return len(self.trees)

    def __eq__(self, other):
        return (isinstance(other, TangledChain)
                and self.trees == other.trees
                and self.matchings == other.matchings)

    def __hash__(self):
        return hash((self.trees, self.matchings))

    def __repr__(self):
        return "TangledChain(%r, %r)" % ([t.key for t in self.trees],
                                         [list(m) for m in self.matchings])

    def to_json(self):
        return {"n": self.n, "trees": [t.key for t in self.trees],
                "matchings": [list(m) for m in self.matchings]}


def random_automorphism(t, rng):
    """Uniform element of A(t), as a leaf permutation.

    Children are sampled recursively and concatenated; at a vertex whose
    two child subtrees coincide the result is pre-composed with the flip
    of the two halves with probability 1/2.
    """
    if t.is_leaf:
        return (1,)
    k = t.left.leaves
    w1 = random_automorphism(t.left, rng)
    w2 = random_automorphism(t.right, rng)
    w = w1 + tuple(v + k for v in w2)
    if t.left == t.right and rng.randrange(2):
        w = compose(flip(k), w)
    return w


# Categorical draws.  Weights are Fractions; putting them over their
# lcm denominator turns the draw into one randrange over an integer
# total plus a bisect, which is exact.

def _int_weights(weights):
    den = lcm(*(w.denominator for w in weights)) if weights else 1
    ints = [w.numerator * (den // w.denominator) for w in weights]
    return ints, den


_split_cache = {}


def _split_dist(parts):
    """Cached option table for the tree-with-permutation sampler at
    partition `parts`: all ordered splits into two nonempty halves,
    weighted q(half1)*q(half2), plus (when every part is even) the
    halved partition, weighted q(parts/2).  The total weight is exactly
    2*q(parts); that identity is what makes the output probability come
    out to 1/(|A(T)|*q(lam)), so it is asserted here."""
    d = _split_cache.get(parts)
    if d is None:
        options = []
        weights = []
        for a, b in split_pairs(parts):
            if a and b:
                options.append((a, b))
                weights.append(q_of(a) * q_of(b))
        h = halve(parts)
        if not h.degenerate:
            options.append(None)
            weights.append(q_of(h))
        ints, den = _int_weights(weights)
        assert sum(ints) == 2 * q_of(parts) * den
        cum = list(itertools.accumulate(ints))
        d = (options, cum, h)
        _split_cache[parts] = d
    return d


def random_tree_and_perm(parts, rng):
    """A pair (T, w) with w an automorphism of T of cycle type `parts`,
    hit with probability exactly 1/(|A(T)| * q(parts)).

    A nonempty split (lam1, lam2) builds the two subtrees recursively
    and swaps them into canonical order (carrying the permutations
    along); the halved option builds one subtree T1 with a permutation
    of type parts/2, doubles the tree, and interleaves so the two copies
    are swapped by w.
    """
    if not parts:
        raise ValueError("empty partition")
    n = sum(parts)
    if n == 1:
        return LEAF, (1,)
    options, cum, h = _split_dist(parts)
    i = bisect.bisect_right(cum, rng.randrange(cum[-1]))
    if options[i] is None:
        t1, w2 = random_tree_and_perm(h.parts, rng)
        w1 = random_automorphism(t1, rng)
        k = t1.leaves
        w1e = w1 + identity(2 * k)[k:]
        w2e = identity(k) + tuple(v + k for v in w2)
        return node(t1, t1), interleave(w1e, w2e, k)
    a, b = options[i]
    t1, w1 = random_tree_and_perm(a, rng)
    t2, w2 = random_tree_and_perm(b, rng)
    if compare(t1, t2) < 0:
        t1, t2, w1, w2 = t2, t1, w2, w1
    k = t1.leaves
    return node(t1, t2), w1 + tuple(v + k for v in w2)


_lam_cache = {}


def _lam_dist(n, k):
    """Cached distribution over binary partitions of n with weight
    z^(k-1) * q^k; k=1 serves trees, k=2 tanglegrams."""
    key = (n, k)
    d = _lam_cache.get(key)
    if d is None:
        lams = list(binary_partitions(n))
        weights = [z_of(l) ** (k - 1) * q_of(l) ** k for l in lams]
        ints, _ = _int_weights(weights)
        cum = list(itertools.accumulate(ints))
        d = (lams, cum)
        _lam_cache[key] = d
    return d


def _draw_lam(n, k, rng):
    lams, cum = _lam_dist(n, k)
    return lams[bisect.bisect_right(cum, rng.randrange(cum[-1]))]


def random_tanglegram(n, rng):
    """Uniform over all tanglegrams of size n."""
    if n < 1:
        raise ValueError("need n >= 1")
    lam = _draw_lam(n, 2, rng)
    left, u = random_tree_and_perm(lam, rng)
    right, v = random_tree_and_perm(lam, rng)
    w = sample_conjugator(u, v, rng)
    return Tanglegram(left, right, w)


def random_tree(n, rng):
    """Uniform over the inequivalent binary trees with n leaves."""
    if n < 1:
        raise ValueError("need n >= 1")
    lam = _draw_lam(n, 1, rng)
    t, _ = random_tree_and_perm(lam, rng)
    return t


def random_chain(k, n, rng):
    """Uniform over ordered tangled chains of length k on n leaves."""
    if k < 1 or n < 1:
        raise ValueError("need k >= 1 and n >= 1")
    lam = _draw_lam(n, k, rng)
    pairs = [random_tree_and_perm(lam, rng) for _ in range(k)]
    matchings = [sample_conjugator(pairs[i][1], pairs[i + 1][1], rng)
                 for i in range(k - 1)]
    return TangledChain([p[0] for p in pairs], matchings)


ORACLE_CAP = 8


@lru_cache(maxsize=None)
def automorphism_group(t):
    """Every element of A(t) as a leaf permutation; exhaustive
    recursion, only sensible for small trees."""
    if t.is_leaf:
        return ((1,),)
    k = t.left.leaves
    lefts = automorphism_group(t.left)
    rights = automorphism_group(t.right)
    out = []
    for w1 in lefts:
        for w2 in rights:
            out.append(w1 + tuple(v + k for v in w2))
    if t.left == t.right:
        pi = flip(k)
        out.extend(compose(pi, w) for w in list(out))
    return tuple(out)


def canonical_rep(tg, cap=ORACLE_CAP):
    """The member of tg's equivalence class whose matching is
    lexicographically minimal over {u o v o w : u in A(left),
    w in A(right)}, by explicit enumeration of both groups.  Two
    tanglegrams are equivalent iff their canonical_rep outputs are
    equal."""
    if tg.n > cap:
        raise ValueError("canonical_rep capped at %d leaves (asked for %d)" % (cap, tg.n))
    best = None
    for u in automorphism_group(tg.left):
        uv = compose(u, tg.matching)
        for w in automorphism_group(tg.right):
            cand = compose(uv, w)
            if best is None or cand < best:
                best = cand
    return Tanglegram(tg.left, tg.right, best)


def canonical_chain_rep(chain, cap=ORACLE_CAP):
    """Chain analogue of canonical_rep: minimize the tuple of matchings
    over the product of the trees' automorphism groups acting by
    m_i -> t_i o m_i o t_{i+1}^{-1}."""
    if chain.n > cap:
        raise ValueError("canonical_chain_rep capped at %d leaves" % (cap,))
    groups = [automorphism_group(t) for t in chain.trees]
    best = None
    for ts in itertools.product(*groups):
        cand = tuple(compose(ts[i], compose(chain.matchings[i], inverse(ts[i + 1])))
                     for i in range(len(chain.matchings)))
        if best is None or cand < best:
            best = cand
    return TangledChain(chain.trees, best)


def cherry_statistics(n, samples, rng, pattern=None):
    """Sample statistics of the left tree of uniform tanglegrams.

    With no pattern, counts cherries; with a pattern tree, counts
    occurrences of that shape.  The reference value is the conjectured
    limit mean n/2^(l+k-1) for a pattern with l leaves and k
    symmetries, which is n/4 for a cherry.
    """
    from .tree import cherries, count_occurrences, symmetry_count

    if pattern is None:
        name = "cherries"
        stat = cherries
        reference = n / 4
    else:
        name = "pattern " + pattern.key
        stat = lambda t: count_occurrences(pattern, t)
        reference = n / 2 ** (pattern.leaves + symmetry_count(pattern) - 1)
    hist = {}
    total = 0
    total_sq = 0
    for _ in range(samples):
        v = stat(random_tanglegram(n, rng).left)
        hist[v] = hist.get(v, 0) + 1
        total += v
        total_sq += v * v
    mean = total / samples
    var = total_sq / samples - mean * mean
    return {
        "n": n,
        "samples": samples,
        "statistic": name,
        "mean": mean,
        "variance": var,
        "reference": reference,
        "histogram": {k: hist[k] for k in sorted(hist)},
    }
