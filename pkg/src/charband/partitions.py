"""Integer partitions and the symmetric-group combinatorics built on them.

Partitions are plain tuples of positive integers in weakly decreasing order.
The empty tuple is the partition of 0.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd, prod
from typing import Iterable, Iterator

Partition = tuple[int, ...]


def make_partition(parts: Iterable[int]) -> Partition:
    """Validate and normalise a sequence of parts (zeros are dropped)."""
    out = tuple(int(p) for p in parts if p != 0)
    if any(p < 0 for p in out):
        raise ValueError(f"negative part in {out}")
    if any(out[i] < out[i + 1] for i in range(len(out) - 1)):
        raise ValueError(f"parts not weakly decreasing: {out}")
    return out


def sort_key(lam: Partition) -> tuple:
    """Canonical order: by weight, then reverse-lexicographic."""
    return (sum(lam), tuple(-p for p in lam))


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of n in reverse-lexicographic order, (n) first."""
    if n < 0:
        return ()
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(max_part, 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_upto(n: int) -> Iterator[Partition]:
    for m in range(n + 1):
        yield from partitions(m)


def transpose(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def multiplicities(lam: Partition) -> Counter:
    return Counter(lam)


@lru_cache(maxsize=None)
def z(rho: Partition) -> int:
    """Order of the centraliser of a permutation of cycle type rho."""
    return prod(i**m * factorial(m) for i, m in Counter(rho).items())


def class_size(rho: Partition) -> int:
    return factorial(sum(rho)) // z(rho)


def sign(rho: Partition) -> int:
    """Sign of a permutation of cycle type rho."""
    return -1 if (sum(rho) - len(rho)) % 2 else 1


def merge(a: Partition, b: Partition) -> Partition:
    """Union of two partitions as multisets (the p-basis product)."""
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b, reverse=True))


def scale(a: Partition, m: int) -> Partition:
    return tuple(p * m for p in a)


def power_type(rho: Partition, m: int) -> Partition:
    """Cycle type of sigma**m when sigma has cycle type rho."""
    out: list[int] = []
    for part in rho:
        d = gcd(part, m)
        out.extend([part // d] * d)
    return tuple(sorted(out, reverse=True))


def hook_lengths(lam: Partition) -> list[int]:
    lt = transpose(lam)
    return [lam[i] - j + lt[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])]


@lru_cache(maxsize=None)
def dim_specht(lam: Partition) -> int:
    """Dimension of the Specht module S^lam (hook length formula)."""
    return factorial(sum(lam)) // prod(hook_lengths(lam))


def dim_schur(lam: Partition, N: int) -> int:
    """Dimension of the Schur functor S_lam applied to an N-dimensional space."""
    if N < 0:
        raise ValueError("N must be non-negative")
    num = Fraction(1)
    for i, row in enumerate(lam):
        for j in range(row):
            num *= N + j - i
    return int(num / prod(hook_lengths(lam)))


def _beta(lam: Partition, length: int) -> tuple[int, ...]:
    padded = list(lam) + [0] * (length - len(lam))
    return tuple(padded[i] + length - 1 - i for i in range(length))


@lru_cache(maxsize=None)
def _chi_beta(beta: tuple[int, ...], rho: Partition) -> int:
    if not rho:
        return 1
    r, rest = rho[0], rho[1:]
    beads = set(beta)
    total = 0
    for b in beta:
        if b - r >= 0 and (b - r) not in beads:
            between = sum(1 for c in beta if b - r < c < b)
            new = tuple(sorted((c if c != b else b - r) for c in beta))[::-1]
            total += (-1) ** between * _chi_beta(new, rest)
    return total


@lru_cache(maxsize=None)
def character(lam: Partition, rho: Partition) -> int:
    """Irreducible S_k character chi^lam at cycle type rho (Murnaghan-Nakayama)."""
    if sum(lam) != sum(rho):
        raise ValueError(f"weight mismatch: {lam} vs {rho}")
    return _chi_beta(_beta(lam, len(lam)), rho)


@lru_cache(maxsize=None)
def character_table(k: int) -> dict[tuple[Partition, Partition], int]:
    return {(lam, rho): character(lam, rho) for lam in partitions(k) for rho in partitions(k)}


def remove_box(lam: Partition) -> list[Partition]:
    """Partitions obtained by removing one corner box: the branching rule from S_n to S_{n-1}."""
    out = []
    for i, part in enumerate(lam):
        if i + 1 == len(lam) or lam[i + 1] < part:
            out.append(make_partition(lam[:i] + (part - 1,) + lam[i + 1:]))
    return out
