"""Exact counts of tanglegrams, inequivalent binary trees, and tangled
chains.

Everything here reduces to one family of sums over binary partitions
lam of n:

    t(k, n) = sum_lam ( prod_{i=2..len} (2*(lam_i+...+lam_len) - 1) )^k / z(lam)

k = 1 counts inequivalent binary trees, k = 2 counts tanglegrams, and
general k counts ordered tangled chains of length k.  Three independent
routes to the same numbers are provided: the direct sum, a recurrence
that never touches partitions explicitly, and (for k = 2) a rearranged
sum with a Catalan prefactor.  Agreement of all three is the strongest
internal consistency check in the package.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .partition import binary_partitions, z_of
from .tree import aut_size, cycle_type_table


def _power_sum(n, k):
    """n! * t(k,n) as one exact integer.

    Walks the tree of binary partitions in decreasing lexicographic
    order, part sizes from the largest power of 2 down, carrying two
    quantities along each branch: W = n!/z(partial) and the running
    numerator product raised to the k-th power.  A trailing run of ones
    is folded in closed form, since over the all-ones tail the numerator
    factors are consecutive odd numbers: the tail of r ones past an
    earlier part contributes ((2r-1)!!)^k / r!, and the all-ones
    partition itself contributes ((2r-3)!!)^k / r! because the product
    skips the largest part.  Every intermediate division is exact
    because partial centralizer orders divide n!.
    """
    if n == 0:
        return 1
    fact = [1] * (n + 1)
    for i in range(1, n + 1):
        fact[i] = fact[i - 1] * i
    oddfact = [1] * (n + 1)
    for m in range(1, n + 1):
        oddfact[m] = oddfact[m - 1] * (2 * m - 1)
    tail = [v ** k for v in oddfact]
    tail_skip = [1] + [oddfact[m - 1] ** k for m in range(1, n + 1)]
    fn = fact[n]
    total = 0

    def rec(r, p, first, W, numer):
        nonlocal total
        if r == 0:
            total += W * numer
            return
        while p > r:
            p //= 2
        if p == 1:
            cap = tail_skip[r] if first else tail[r]
            total += (W // fact[r]) * cap * numer
            return
        steps = []
        rr, WW, nn, m = r, W, numer, 0
        while rr >= p:
            m += 1
            WW //= p * m
            if not (first and m == 1):
                nn = nn * (2 * rr - 1) ** k
            rr -= p
            steps.append((rr, WW, nn))
        for rr, WW, nn in reversed(steps):
            rec(rr, p // 2, False, WW, nn)
        rec(r, p // 2, first, W, numer)

    rec(n, 1 << (n.bit_length() - 1), True, fn, 1)
    return total


def chain_count(k, n):
    """Number of ordered tangled chains of length k on n leaves,
    t(k,n) = sum_lam z(lam)^(k-1) * q(lam)^k over binary partitions."""
    if k < 1 or n < 1:
        raise ValueError("need k >= 1 and n >= 1")
    s = _power_sum(n, k)
    fn = factorial(n)
    assert s % fn == 0, "partition sum failed to clear its denominator"
    return s // fn


def tanglegram_count(n):
    """Number of tanglegrams of size n."""
    return chain_count(2, n)


def tree_count(n):
    """Number of inequivalent binary rooted trees with n leaves."""
    return chain_count(1, n)


def tree_count_oracle(n):
    """b_n by the classical recurrence from B(x) = x + (B(x)^2 + B(x^2))/2:
    2*b_n = sum_{i=1}^{n-1} b_i b_{n-i} + [n even] b_{n/2}."""
    if n < 1:
        raise ValueError("need n >= 1")
    b = _wedderburn(n)
    return b[n]


@lru_cache(maxsize=None)
def _wedderburn(n):
    if n == 1:
        return [0, 1]
    b = list(_wedderburn(n - 1))
    tot = sum(b[i] * b[n - i] for i in range(1, n))
    if n % 2 == 0:
        tot += b[n // 2]
    assert tot % 2 == 0
    b.append(tot // 2)
    return b


def double_coset_count(T, S):
    """Number of tanglegrams with left tree T and right tree S:
    (sum_lam |A(T)_lam| * |A(S)_lam| * z(lam)) / (|A(T)| * |A(S)|)."""
    if T.leaves != S.leaves:
        raise ValueError("leaf counts differ: %d vs %d" % (T.leaves, S.leaves))
    ta = cycle_type_table(T)
    tb = cycle_type_table(S)
    num = 0
    for lam, ca in ta.items():
        cb = tb.get(lam)
        if cb:
            num += ca * cb * z_of(lam)
    den = aut_size(T) * aut_size(S)
    assert num % den == 0, "double coset count came out fractional"
    return num // den


# The recurrence route.  r(h, n, s) counts weighted configurations at
# level h with n nodes left to place and partial weight s; the state
# (h, n, s) plus the chain length k is the memo key.  Base case
# r(h, 0, s) = 1; the step sums over how many parts of size 2^h are
# used, with parity matching n:
#
#   r(h, n, s) = sum_{m = n mod 2, m+2, ..., n}
#                  c(h, m, s) * r(h+1, (n-m)/2, s + m*2^h)
#   c(h, m, s) = prod_{j=1}^{m} (2*(s + j*2^h) - 1)^k / (j*2^h)
#
# and t(k, n) = r(0, n, 0) / (2n-1)^k.

_R_CACHE = {}


def _r(h, n, s, k):
    if n == 0:
        return Fraction(1)
    key = (h, n, s, k)
    hit = _R_CACHE.get(key)
    if hit is not None:
        return hit
    step = 1 << h
    m = n % 2
    if m == 0:
        c = Fraction(1)
    else:
        c = Fraction((2 * (s + step) - 1) ** k, step)
    total = c * _r(h + 1, (n - m) // 2, s + m * step, k)
    while m + 2 <= n:
        c *= Fraction((2 * (s + (m + 1) * step) - 1) ** k, (m + 1) * step)
        c *= Fraction((2 * (s + (m + 2) * step) - 1) ** k, (m + 2) * step)
        m += 2
        total += c * _r(h + 1, (n - m) // 2, s + m * step, k)
    _R_CACHE[key] = total
    return total


def chain_count_rec(k, n):
    """t(k,n) by the level recurrence above; no partition is ever
    materialized, so this route scales to n in the thousands."""
    if k < 1 or n < 1:
        raise ValueError("need k >= 1 and n >= 1")
    val = _r(0, n, 0, k) / Fraction((2 * n - 1) ** k)
    assert val.denominator == 1, "recurrence value failed to clear its denominator"
    return val.numerator


def tanglegram_count_rec(n):
    return chain_count_rec(2, n)


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def tanglegram_count_mu(n):
    """t_n as a Catalan prefactor times a short sum.

    t_n = (c_{n-1}^2 * n! / 4^{n-1}) * sum_mu  n(n-1)...(n-|mu|+1) /
          ( z(mu) * prod_i prod_{j=1}^{mu_i - 1}
                      (2n - 2(mu_1+...+mu_{i-1}) - 2j - 1)^2 )

    where mu runs over binary partitions with every part a positive
    power of 2 (parts >= 2), including mu = (), whose summand is 1.
    Parts >= 2 force |mu| even, so mu is twice a binary partition of
    |mu|/2.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    acc = Fraction(0)
    for m2 in range(0, n + 1, 2):
        for nu in binary_partitions(m2 // 2):
            mu = tuple(2 * p for p in nu)
            falling = 1
            for i in range(m2):
                falling *= n - i
            den = z_of(mu)
            prefix = 0
            for part in mu:
                for j in range(1, part):
                    den *= (2 * n - 2 * prefix - 2 * j - 1) ** 2
                prefix += part
            acc += Fraction(falling, den)
    c = catalan(n - 1)
    val = Fraction(c * c * factorial(n), 4 ** (n - 1)) * acc
    assert val.denominator == 1, "mu-form sum failed to clear its denominator"
    return val.numerator


def r_poly(indices, x):
    """The suffix-sum product r_S(x) for S = {i_1 < ... < i_k}:
    prod_{j=2}^{k} (x_{i_j} + x_{i_{j+1}} + ... + x_{i_k} - 1),
    an empty product (singleton S) being 1.  x is a 1-indexed sequence:
    x[i-1] is the value at index i."""
    s = sorted(indices)
    if not s:
        raise ValueError("need a nonempty index set")
    out = Fraction(1)
    suffix = Fraction(0)
    for i in reversed(s[1:]):
        suffix += x[i - 1]
        out *= suffix - 1
    return out
