"""Integer utilities: primality, factorization, divisors, perfect powers.

Primality is deterministic Miller-Rabin over the first 13 prime witnesses,
which is exact for all n < 3_317_044_064_679_887_385_961_981 (Sorenson and
Webster); larger inputs are rejected rather than answered probabilistically.
Factorization combines wheel trial division with Brent's variant of Pollard
rho, deterministic for the word-sized cofactors this library encounters.
"""

from __future__ import annotations

import math
from functools import reduce

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_LIMIT = 3_317_044_064_679_887_385_961_981


def is_prime(n: int) -> bool:
    """Deterministic primality for n < _MR_LIMIT; ValueError past the bound."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    if n >= _MR_LIMIT:
        raise ValueError(f"{n} exceeds the deterministic Miller-Rabin bound")
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
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


def _brent_rho(n: int) -> int:
    """A nontrivial factor of composite odd n, via Brent's cycle finding."""
    if n % 2 == 0:
        return 2
    # Deterministic seed sweep: each (y0, c) pair is tried in turn, and for
    # word-sized composites one of the early pairs always succeeds.
    for c in range(1, 100):
        y, r, q, g = 2, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ValueError(f"rho failed to split {n}")


_TRIAL_BOUND = 1_000_000


def factorize(n: int) -> dict[int, int]:
    """Prime factorization as {prime: exponent}; factorize(1) == {}.

    >>> factorize(2**6 - 1)
    {3: 2, 7: 1}
    """
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    # 2/3/5 wheel
    p, wheel = 7, (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while p <= _TRIAL_BOUND and p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += wheel[i]
        i = (i + 1) % 8
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _brent_rho(m)
        stack.append(d)
        stack.append(m // d)
    return dict(sorted(out.items()))


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending.

    >>> divisors(63)
    [1, 3, 7, 9, 21, 63]
    """
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def iroot(n: int, k: int) -> int:
    """Floor of the k-th root of n >= 0, exact integer arithmetic."""
    if n < 0:
        raise ValueError(f"expected a non-negative integer, got {n}")
    if k < 1:
        raise ValueError(f"root index must be >= 1, got {k}")
    if k == 1 or n < 2:
        return n
    if k == 2:
        return math.isqrt(n)
    x = 1 << (n.bit_length() + k - 1) // k  # upper start for Newton descent
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def perfect_power(n: int) -> tuple[int, int] | None:
    """Maximal decomposition n = m**k with k >= 2, else None.

    >>> perfect_power(512)
    (2, 9)
    >>> perfect_power(12) is None
    True
    """
    if n < 2:
        return None
    best: tuple[int, int] | None = None
    for k in range(2, n.bit_length() + 1):
        if not is_prime(k):
            continue
        r = iroot(n, k)
        if r**k == n:
            inner = perfect_power(r)
            best = (inner[0], inner[1] * k) if inner else (r, k)
            break
    if best is None:
        return None
    # Recursion on the root already maximized the exponent.
    return best


def prime_power(n: int) -> tuple[int, int] | None:
    """(p, e) with n = p**e and p prime (e >= 1 allowed), else None."""
    if n < 2:
        return None
    if is_prime(n):
        return (n, 1)
    pp = perfect_power(n)
    if pp and is_prime(pp[0]):
        return pp
    return None


def multiplicity(n: int, p: int) -> int:
    """Exponent of p in n: the largest e with p**e | n."""
    if p < 2:
        raise ValueError(f"base must be >= 2, got {p}")
    if n == 0:
        raise ValueError("multiplicity of 0 is undefined")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def product(values) -> int:
    return reduce(lambda a, b: a * b, values, 1)
