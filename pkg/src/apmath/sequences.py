"""Memoized factorials and Bernoulli numbers.

Both tables are process-wide and grow on demand.  Reads of entries that
already exist need no lock; extensions are serialized by a lock per table.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .errors import DomainError

__all__ = [
    "BernoulliCache",
    "FactorialCache",
    "bernoulli",
    "bernoulli_double_sum",
    "factorial",
]


class FactorialCache:
    """``table[n] == n!``, extended by one multiplication per new entry."""

    def __init__(self):
        self.table = [1, 1]
        self._lock = threading.Lock()

    def at(self, n: int) -> int:
        if n < 0:
            raise DomainError(f"factorial of negative integer {n}")
        table = self.table
        if n < len(table):
            return table[n]
        with self._lock:
            while len(table) <= n:
                table.append(table[-1] * len(table))
        return table[n]


def bernoulli_double_sum(n: int) -> Fraction:
    """``B_n = sum_k 1/(k+1) sum_j (-1)^j j^n C(k, j)``, exactly.

    The binomial coefficient is updated in place along the inner loop and
    ``0**0`` is taken as 1.
    """
    powers = [j**n for j in range(n + 1)]
    result = Fraction(0)
    for k in range(n + 1):
        jsum = 0
        binom = 1
        for j in range(k + 1):
            term = binom * powers[j]
            jsum += term if j % 2 == 0 else -term
            binom = binom * (k - j) // (j + 1)
        result += Fraction(jsum, k + 1)
    return result


class BernoulliCache:
    """Even-index Bernoulli numbers: ``table[i] == B_{2i}``."""

    def __init__(self):
        self.table = [Fraction(1), Fraction(1, 6)]
        self._lock = threading.Lock()

    def at(self, n: int) -> Fraction:
        if n < 0:
            raise DomainError(f"Bernoulli number at negative index {n}")
        if n == 1:
            return Fraction(-1, 2)
        if n % 2 == 1:
            return Fraction(0)
        index = n // 2
        table = self.table
        if index >= len(table):
            with self._lock:
                for i in range(2 * len(table), n + 1, 2):
                    table.append(bernoulli_double_sum(i))
        return table[index]


_factorials = FactorialCache()
_bernoullis = BernoulliCache()


def factorial(n: int) -> int:
    return _factorials.at(n)


def bernoulli(n: int) -> Fraction:
    """Bernoulli number ``B_n`` with ``B_1 = -1/2``."""
    return _bernoullis.at(n)
