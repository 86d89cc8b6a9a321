"""Binary-weight closed forms: O(log n) per term.

Each function here is an explicit formula in wt(n) = popcount(n).  They
are the fast generators; the verify harness holds them against the
engines and recurrences term by term.
"""

from .intutil import binary_weight, binomial, checked_pow, decompose_block, exact_div


def uw_u(n: int) -> int:
    """Cells turned on at stage n of the one-of-four-neighbors automaton.

    u(n) = 4 * 3**(wt(n-1) - 1) for n >= 2.  (The exponent is pinned by
    u(2) = 4; see the cross-checks against the recurrence and the grid
    engine.)
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n <= 1:
        return n
    return 4 * checked_pow(3, binary_weight(n - 1) - 1)


def uw_d(d: int, n: int) -> int:
    """Per-stage counts for the d-dimensional one-of-2d-neighbors automaton."""
    if d < 1:
        raise ValueError("dimension must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    if n <= 1:
        return n
    return 2 * d * checked_pow(2 * d - 1, binary_weight(n - 1) - 1)


def hve_a(gamma: int, delta: int, n: int) -> int:
    """Coefficient of x**n in prod_{k>=0} (1 + gamma*x**(2**k - 1) + delta*x**(2**k)).

    a(n) = sum_m gamma**m * delta**(wt(n+m) - m) * C(wt(n+m), m); the
    binomial vanishes for m > wt(n+m), so the exponent of delta is never
    negative on a contributing term.  Terms vanish for all
    m > bit_length(n) + 2 (validated against a longer cutoff in tests).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    total = 0
    for m in range(n.bit_length() + 3):
        w = binary_weight(n + m)
        c = binomial(w, m)
        if c:
            total += gamma**m * delta ** (w - m) * c
    return total


def f_explicit(i: int) -> int:
    """F(i) = 2 * sum_m 2**(wt(i+m) - m) * C(wt(i+m), m) (A147646)."""
    return 2 * hve_a(1, 2, i)


def t_explicit(n: int) -> int:
    """Toothpicks added at stage n, by explicit formula (A139251).

    For n >= 2 write n = 2**k + 1 + i with 0 <= i <= 2**k - 1; the count
    is F(i) except at the block end i = 2**k - 1, where it is 2**(k+1).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n <= 1:
        return n
    k, i = decompose_block(n - 1)
    if i == (1 << k) - 1:
        return 1 << (k + 1)
    return f_explicit(i)


def leftist_l(n: int) -> int:
    """Leftist toothpicks added at stage n: l(2m-1) = l(2m) = 2**wt(m-1) (A151565)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 0
    return checked_pow(2, binary_weight((n + 1) // 2 - 1))


def gould(n: int) -> int:
    """Gould's sequence 2**wt(n): odd entries in row n of Pascal's triangle (A001316)."""
    return checked_pow(2, binary_weight(n))


def ttp_tau(n: int) -> int:
    """T-toothpicks added at stage n (A160173).

    tau(n) = (2/3) * (3**wt(n-1) + 3**wt(n-2)) + 1 for n >= 3, with the
    division checked exact.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n <= 2:
        return (0, 1, 3)[n]
    s = checked_pow(3, binary_weight(n - 1)) + checked_pow(3, binary_weight(n - 2))
    return exact_div(2 * s, 3) + 1


def maltese_m(n: int) -> int:
    """Cells labeled n in the Maltese-cross structure (A151906).

    m(3t) = m(3t+1) = 4 * 3**(wt(t)-1) and m(3t+2) = 4 * 3**wt(t) for
    t >= 1, with m(0..2) = 0, 1, 4.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n <= 2:
        return (0, 1, 4)[n]
    t, r = divmod(n, 3)
    if r == 2:
        return 4 * checked_pow(3, binary_weight(t))
    return 4 * checked_pow(3, binary_weight(t) - 1)


def r942_delta(n: int) -> int:
    """The quarter-excess sequence of the one-or-four-neighbors automaton.

    For n >= 3 write n = 2**k + j with 1 <= j <= 2**k and j = 2**m * (2l+1):
    delta(n) = 4 * (3**(m+1) - 2**(m+1)) * 3**wt(l), except that j = 2**k
    gives 4*3**(k+1) - 3*2**(k+1).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n <= 2:
        return (0, 1, 6)[n]
    k = (n - 1).bit_length() - 1
    j = n - (1 << k)
    if j == 1 << k:
        return 4 * checked_pow(3, k + 1) - 3 * (1 << (k + 1))
    m = (j & -j).bit_length() - 1
    l = (j >> m) // 2
    return 4 * (checked_pow(3, m + 1) - (1 << (m + 1))) * checked_pow(3, binary_weight(l))


def r942_w(n: int) -> int:
    """Cells turned on at stage n under the one-or-four-neighbors rule.

    w(n) = u(n) except at n = 4m + 1 >= 5, where w(n) = u(n) + 4*delta(m).
    """
    base = uw_u(n)
    if n >= 5 and n % 4 == 1:
        return base + 4 * r942_delta((n - 1) // 4)
    return base


def a048883(n: int) -> int:
    """3**wt(n): the corner-growth weights of the one-of-four automaton (A048883)."""
    return checked_pow(3, binary_weight(n))


def hve_nonzero_terms(n: int) -> int:
    """Number of contributing terms in the hve_a sum at index n (A100661)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return sum(1 for m in range(n.bit_length() + 3) if m <= binary_weight(n + m))
