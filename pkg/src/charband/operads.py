"""Characters of the Lie operad, operadic suspension and free Lie algebras."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .series import Series, TruncationError, plethysm
from .symfunc import SymElem, kronecker, omega, to_basis


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius needs n >= 1")
    result, m, q = 1, n, 2
    while q * q <= m:
        if m % q == 0:
            m //= q
            if m % q == 0:
                return 0
            result = -result
        q += 1
    return -result if m > 1 else result


@lru_cache(maxsize=None)
def lie_char(k: int) -> SymElem:
    """Frobenius character of Lie(k), (1/k) sum_{d | k} mu(d) p_d^{k/d}, in the s-basis."""
    if k < 1:
        raise ValueError("lie_char needs k >= 1")
    terms = {}
    for d in range(1, k + 1):
        if k % d == 0 and mobius(d):
            terms[(d,) * (k // d)] = Fraction(mobius(d), k)
    return to_basis(SymElem("p", terms), "s")


@dataclass(frozen=True)
class OperadChar:
    """Arity-indexed characters with a per-arity homological degree shift."""

    entries: dict = field(default_factory=dict)  # k -> (SymElem, shift)

    def __getitem__(self, k: int) -> tuple[SymElem, int]:
        return self.entries[k]

    def arities(self) -> list[int]:
        return sorted(self.entries)


def lie_operad(max_arity: int) -> OperadChar:
    return OperadChar({k: (lie_char(k), 0) for k in range(1, max_arity + 1)})


def suspend(F: OperadChar, m: int) -> OperadChar:
    """Apply the operadic suspension m times: shift m(1-k), sign twist (1^k)^m."""
    out = {}
    for k, (f, shift) in F.entries.items():
        g = omega(f) if m % 2 else f
        out[k] = (g, shift + m * (1 - k))
    return OperadChar(out)


def sign_twist(f: SymElem) -> SymElem:
    """Kronecker product with the sign representation."""
    w = f.weight
    if w is None:
        return omega(f)
    return kronecker(f, SymElem.single("s", (1,) * w))


def free_lie_char(g: Series) -> Series:
    """Character of the free graded Lie algebra on a graded space with character g."""
    if any(k[0] == 0 and g.outer_weight(k) == 0 for k in g.terms):
        raise TruncationError("generators must not have a constant term")
    if not g.terms:
        return g.like()
    minN = min(k[0] for k in g.terms)
    if minN < 1:
        raise TruncationError("free_lie_char needs generators in positive degrees")
    out = g.like()
    for k in range(1, g.trunc // minN + 1):
        out = out + plethysm(lie_char(k), g)
    return out
