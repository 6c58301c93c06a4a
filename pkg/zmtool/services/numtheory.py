"""
Number Theory Kernels

Exact integer helpers shared by every other service: gcd/lcm with the gcd(k, 0) = k
convention, factorization, Euler's phi, the divisor-count function, multiplicative
orders and geometric sums evaluated modulo small integers.
"""

import logging
import math
from functools import lru_cache
from typing import List, Tuple

import numpy as np
import sympy

from zmtool.exceptions import CapacityError, NoOrderError

logger = logging.getLogger(__name__)

# Operands and results are kept below 2**63; Python never wraps, so we refuse instead.
INT_LIMIT = 2 ** 63

Factorization = List[Tuple[int, int]]


def check_width(*values: int) -> None:
    """Raise CapacityError if any value leaves the supported integer width."""
    for value in values:
        if abs(value) >= INT_LIMIT:
            raise CapacityError(
                f"integer {value} exceeds the supported width of 2**63")


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def gcd3(a: int, b: int, c: int) -> int:
    return math.gcd(math.gcd(a, b), c)


def lcm(a: int, b: int) -> int:
    """Least common multiple of two positive integers."""
    if a < 1 or b < 1:
        raise ValueError(f"lcm expects positive integers, got {a} and {b}")
    result = a // math.gcd(a, b) * b
    check_width(result)
    return result


@lru_cache(maxsize=None)
def _factor_tuple(n: int) -> Tuple[Tuple[int, int], ...]:
    return tuple(sorted(sympy.factorint(n).items()))


def factorize(n: int) -> Factorization:
    """Prime factorization as (prime, exponent) pairs, primes ascending; [] for 1."""
    if n < 1:
        raise ValueError(f"factorize expects a positive integer, got {n}")
    return list(_factor_tuple(n))


@lru_cache(maxsize=None)
def divisors(n: int) -> Tuple[int, ...]:
    """All positive divisors of n in ascending order."""
    if n < 1:
        raise ValueError(f"divisors expects a positive integer, got {n}")
    return tuple(sympy.divisors(n))


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError(f"euler_phi expects a positive integer, got {n}")
    result = n
    for prime, _ in _factor_tuple(n):
        result = result // prime * (prime - 1)
    return result


def tau(n: int) -> int:
    if n < 1:
        raise ValueError(f"tau expects a positive integer, got {n}")
    return math.prod(exponent + 1 for _, exponent in _factor_tuple(n))


def is_prime(n: int) -> bool:
    return n >= 2 and bool(sympy.isprime(n))


def smallest_prime_factor(n: int) -> int:
    """Smallest prime dividing n (n >= 2)."""
    if n < 2:
        raise ValueError(f"{n} has no prime divisor")
    return _factor_tuple(n)[0][0]


def pow_mod(base: int, exp: int, modulus: int) -> int:
    if modulus < 1:
        raise ValueError(f"modulus must be positive, got {modulus}")
    return pow(base, exp, modulus)


@lru_cache(maxsize=None)
def mult_order(r: int, k: int) -> int:
    """Least t >= 1 with r**t = 1 (mod k); always 1 for k = 1."""
    if k < 1:
        raise ValueError(f"modulus must be positive, got {k}")
    if k == 1:
        return 1
    residue = r % k
    if math.gcd(residue, k) != 1:
        raise NoOrderError(f"{r} has no multiplicative order modulo {k}")
    return int(sympy.n_order(residue, k))


def geom_sum_mod(r: int, u: int, modulus: int) -> int:
    """[u]_r = 1 + r + ... + r**(u-1) reduced mod modulus, by halving on u."""
    if modulus < 1:
        raise ValueError(f"modulus must be positive, got {modulus}")
    if u < 0:
        raise ValueError(f"u must be nonnegative, got {u}")
    if u == 0 or modulus == 1:
        return 0
    if u % 2:
        return (geom_sum_mod(r, u - 1, modulus) * r + 1) % modulus
    half = u // 2
    # [2t]_r = [t]_r * (1 + r**t)
    return geom_sum_mod(r, half, modulus) * (1 + pow(r, half, modulus)) % modulus


def menon_sum(m: int) -> int:
    """Sum of gcd(x - 1, m) over the units x of Z/mZ; equals phi(m) * tau(m)."""
    if m < 1:
        raise ValueError(f"menon_sum expects a positive integer, got {m}")
    residues = np.arange(m, dtype=np.int64)
    units = residues[np.gcd(residues, m) == 1]
    return int(np.gcd((units - 1) % m, m).sum())


def f_direct(alpha: int) -> int:
    """f(alpha) = sum of gcd(alpha, beta) for beta in [0, alpha)."""
    if alpha < 1:
        raise ValueError(f"f expects a positive integer, got {alpha}")
    return int(np.gcd(np.arange(alpha, dtype=np.int64), alpha).sum())


def f_closed(alpha: int) -> int:
    """Closed form alpha * prod(e + 1 - e/p), kept integral as prod p**(e-1) * (p(e+1) - e)."""
    if alpha < 1:
        raise ValueError(f"f expects a positive integer, got {alpha}")
    return math.prod(prime ** (exponent - 1) * (prime * (exponent + 1) - exponent)
                     for prime, exponent in _factor_tuple(alpha))
