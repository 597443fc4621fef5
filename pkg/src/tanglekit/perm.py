"""Permutations of {1..n} in one-line notation.

A permutation is a tuple p of length n with p[i-1] = p(i), values
1-indexed.  Composition is functional: compose(a, b) applies b first.
"""


def identity(n):
    return tuple(range(1, n + 1))


def compose(a, b):
    """(a o b)(i) = a(b(i))."""
    if len(a) != len(b):
        raise ValueError("size mismatch: %d vs %d" % (len(a), len(b)))
    return tuple(a[b[i] - 1] for i in range(len(b)))


def inverse(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v - 1] = i + 1
    return tuple(out)


def cycles_of(p):
    """Disjoint cycles in canonical form: each cycle starts at its
    minimum element and cycles are listed in order of their minima
    (a first-unseen scan produces exactly this)."""
    n = len(p)
    seen = [False] * (n + 1)
    out = []
    for i in range(1, n + 1):
        if seen[i]:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = p[j - 1]
        out.append(tuple(cyc))
    return out


def cycle_type(p):
    """Multiset of cycle lengths, sorted decreasing."""
    return tuple(sorted((len(c) for c in cycles_of(p)), reverse=True))


def flip(k):
    """The involution on {1..2k} swapping i and i+k for 1 <= i <= k.
    Swapping the two halves of a tree with equal k-leaf subtrees induces
    exactly this leaf permutation."""
    return tuple(range(k + 1, 2 * k + 1)) + tuple(range(1, k + 1))


def interleave(w1, w2, k):
    """pi o w1 o pi o w1^-1 o pi o w2 with pi = flip(k).

    w1 and w2 must be permutations of {1..2k}, w1 fixing [k+1,2k]
    pointwise and w2 fixing [1,k].  The result swaps the two halves
    while threading w1 and w2 through, so its cycle type is twice the
    cycle type of w2 restricted to the upper half.
    """
    if len(w1) != 2 * k or len(w2) != 2 * k:
        raise ValueError("need permutations of {1..%d}" % (2 * k,))
    for i in range(k, 2 * k):
        if w1[i] != i + 1:
            raise ValueError("w1 must fix [k+1,2k] pointwise")
    for i in range(k):
        if w2[i] != i + 1:
            raise ValueError("w2 must fix [1,k] pointwise")
    pi = flip(k)
    return compose(pi, compose(w1, compose(pi, compose(inverse(w1), compose(pi, w2)))))


def sample_conjugator(u, v, rng):
    """Uniform w with u = w o v o w^-1.

    Writing both u and v in canonical cycle form, a conjugator is the
    same thing as a length-preserving matching of v's cycles to u's
    cycles plus a rotation offset per cycle; there are
    prod_c c^{m_c} m_c! of them.  Shuffling the target cycles of each
    length and drawing each offset uniformly hits every conjugator with
    equal probability.
    """
    cu = {}
    for c in cycles_of(u):
        cu.setdefault(len(c), []).append(c)
    cv = {}
    for c in cycles_of(v):
        cv.setdefault(len(c), []).append(c)
    if sorted(cu) != sorted(cv) or any(len(cu[c]) != len(cv[c]) for c in cu):
        raise ValueError("cycle types differ")
    w = [0] * len(u)
    for ln, vcycs in cv.items():
        targets = list(cu[ln])
        rng.shuffle(targets)
        for vc, uc in zip(vcycs, targets):
            r = rng.randrange(ln)
            for idx, a in enumerate(vc):
                w[a - 1] = uc[(idx + r) % ln]
    w = tuple(w)
    assert compose(w, compose(v, inverse(w))) == u
    return w
