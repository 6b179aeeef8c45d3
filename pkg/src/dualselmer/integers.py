"""Integer-side number theory helpers: deterministic primality, trial-division
factoring, valuations, bounded divisor enumeration, multiplicative orders."""
from __future__ import annotations

from .errors import FactoringIncomplete, NotPrime, SamePrime, ZeroInput

TRIAL_DIVISION_BOUND = 10 ** 6

# Sufficient witness set for n < 3.3 * 10^24 (covers the documented
# deterministic range q < 3.3 * 10^14 with a wide margin).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int, bound: int = TRIAL_DIVISION_BOUND) -> dict[int, int]:
    """Factor |n| by trial division up to `bound`, certifying any residual
    with Miller-Rabin.  Raises FactoringIncomplete on a composite residual."""
    if n == 0:
        raise ZeroInput("cannot factor 0")
    n = abs(n)
    fac: dict[int, int] = {}
    for d in (2, 3):
        while n % d == 0:
            fac[d] = fac.get(d, 0) + 1
            n //= d
    d = 5
    while d * d <= n and d <= bound:
        for step in (d, d + 2):
            while n % step == 0:
                fac[step] = fac.get(step, 0) + 1
                n //= step
        d += 6
    if n > 1:
        if not is_prime(n):
            raise FactoringIncomplete(f"composite residual {n} above trial bound")
        fac[n] = fac.get(n, 0) + 1
    return fac


def prime_factors(n: int) -> list[int]:
    """Sorted prime divisors of |n|."""
    return sorted(factorize(n))


def valuation(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ZeroInput("valuation of 0 is undefined")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def divisors_up_to(factorization: dict[int, int], bound: int) -> list[int]:
    """All positive divisors <= bound of the factored integer, sorted."""
    divs = [1]
    for p, e in factorization.items():
        cur = []
        for d in divs:
            pe = 1
            for _ in range(e + 1):
                v = d * pe
                if v > bound:
                    break
                cur.append(v)
                pe *= p
        divs = cur
    return sorted(divs)


def multiplicative_order(a: int, m: int) -> int:
    """Order of a in (Z/m)^*; a must be a unit mod m."""
    a %= m
    if a == 0:
        raise ZeroInput("0 is not a unit")
    acc = a
    order = 1
    while acc != 1:
        acc = acc * a % m
        order += 1
        if order > m:
            raise ValueError(f"{a} is not a unit modulo {m}")
    return order


def check_distinct_primes(q: int, p: int) -> None:
    """Validate that q and p are distinct primes."""
    for n in (q, p):
        if not is_prime(n):
            raise NotPrime(f"{n} is not prime")
    if q == p:
        raise SamePrime(f"q = p = {p}")
