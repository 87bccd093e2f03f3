"""Elementary number theory: factorization, divisors, Mobius, totient, Ramanujan sums."""

from functools import lru_cache


@lru_cache(maxsize=None)
def factorize(n):
    """Return the prime factorization of n >= 1 as a tuple of (prime, exponent) pairs."""
    if n < 1:
        raise ValueError("factorize requires n >= 1, got %r" % (n,))
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@lru_cache(maxsize=None)
def divisors(n):
    """All positive divisors of n, in ascending order."""
    if n < 1:
        raise ValueError("divisors requires n >= 1, got %r" % (n,))
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p ** i for d in divs for i in range(e + 1)]
    return tuple(sorted(divs))


def mobius(n):
    """Mobius function: 0 if n has a square factor, else (-1)^(number of prime factors)."""
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def euler_phi(n):
    """Euler totient of n >= 1."""
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def ramanujan_sum(q, m):
    """Sum of the m-th powers of the primitive q-th roots of unity.

    Computed as sum over common divisors n of m and q of mu(q/n)*n; the
    case m = 0 sums over all divisors of q and equals phi(q).
    """
    if q < 1:
        raise ValueError("ramanujan_sum requires q >= 1")
    if m < 0:
        raise ValueError("ramanujan_sum requires m >= 0")
    total = 0
    for n in divisors(q):
        if m == 0 or m % n == 0:
            total += mobius(q // n) * n
    return total
