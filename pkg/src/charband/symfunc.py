"""Exact arithmetic in the ring of symmetric functions.

A SymElem is a finite rational combination of basis elements indexed by
partitions.  The bases e, h, p, s live here; sp and o are handled by
charband.branching but share the same container and text format.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .partitions import (
    Partition,
    character,
    dim_schur,
    dim_specht,
    make_partition,
    merge,
    partitions,
    sign,
    sort_key,
    transpose,
    z,
)

BASES = ("e", "h", "p", "s", "sp", "o")
GL_BASES = ("e", "h", "p", "s")


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class SymElem:
    """Immutable rational combination of basis elements of Lambda."""

    __slots__ = ("basis", "terms", "_hash")

    def __init__(self, basis: str, terms: Mapping[Partition, object] | None = None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        clean: dict[Partition, Fraction] = {}
        for lam, c in (terms or {}).items():
            c = _frac(c)
            if c:
                clean[tuple(lam)] = c
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("SymElem is immutable")

    # construction helpers
    @classmethod
    def single(cls, basis: str, lam: Iterable[int], coeff=1) -> "SymElem":
        return cls(basis, {make_partition(lam): coeff})

    @classmethod
    def zero(cls, basis: str = "s") -> "SymElem":
        return cls(basis, {})

    @classmethod
    def one(cls, basis: str = "s") -> "SymElem":
        return cls(basis, {(): 1})

    # inspection
    def weights(self) -> set[int]:
        return {sum(lam) for lam in self.terms}

    @property
    def weight(self) -> int | None:
        """Common weight of all terms, or None when inhomogeneous or zero."""
        w = self.weights()
        return w.pop() if len(w) == 1 else None

    @property
    def is_homogeneous(self) -> bool:
        return len(self.weights()) <= 1

    def coeff(self, lam: Iterable[int]) -> Fraction:
        return self.terms.get(tuple(lam), Fraction(0))

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: sort_key(kv[0]))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.terms.values())

    def homogeneous_part(self, w: int) -> "SymElem":
        return SymElem(self.basis, {lam: c for lam, c in self.terms.items() if sum(lam) == w})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, SymElem):
            if self.basis == other.basis:
                return self.terms == other.terms
            if self.basis in GL_BASES and other.basis in GL_BASES:
                return to_basis(self, "s").terms == to_basis(other, "s").terms
            return False
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.basis, frozenset(self.terms.items()))))
        return self._hash

    # linear structure
    def _same_basis(self, other: "SymElem") -> "SymElem":
        if other.basis == self.basis:
            return other
        return to_basis(other, self.basis)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymElem.one(self.basis) * other if self.basis != "p" else SymElem("p", {(): other})
        other = self._same_basis(other)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, 0) + c
        return SymElem(self.basis, out)

    __radd__ = __add__

    def __neg__(self):
        return SymElem(self.basis, {lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, SymElem) else -_frac(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _frac(other)
            return SymElem(self.basis, {lam: c * v for lam, v in self.terms.items()})
        if isinstance(other, SymElem):
            return product(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __repr__(self):
        return f"SymElem({to_text(self)!r})"

    def __str__(self):
        return to_text(self)


# ---------------------------------------------------------------- text form

_TERM = re.compile(r"^\s*(-?\d+(?:/\d+)?)\s+(sp|s|e|h|p|o)\[([0-9,\s]*)\]\s*$")


def to_text(f: SymElem) -> str:
    if not f.terms:
        return "0"
    parts = []
    for lam, c in f.items():
        parts.append(f"{c} {f.basis}[{','.join(map(str, lam))}]")
    return "; ".join(parts)


def from_text(text: str) -> SymElem:
    text = text.strip()
    if text == "0":
        return SymElem.zero("s")
    basis = None
    terms: dict[Partition, Fraction] = {}
    for chunk in text.split(";"):
        m = _TERM.match(chunk)
        if not m:
            raise ValueError(f"cannot parse term {chunk!r}")
        c, b, body = m.groups()
        if basis is None:
            basis = b
        elif b != basis:
            raise ValueError("mixed bases in one SymElem")
        lam = make_partition(int(x) for x in body.split(",") if x.strip())
        terms[lam] = terms.get(lam, 0) + Fraction(c)
    return SymElem(basis, terms)


# ------------------------------------------------------- basis conversions


@lru_cache(maxsize=None)
def _p_of_s(lam: Partition) -> dict[Partition, Fraction]:
    n = sum(lam)
    return {rho: Fraction(character(lam, rho), z(rho)) for rho in partitions(n) if character(lam, rho)}


@lru_cache(maxsize=None)
def _s_of_p(rho: Partition) -> dict[Partition, Fraction]:
    n = sum(rho)
    return {lam: Fraction(character(lam, rho)) for lam in partitions(n) if character(lam, rho)}


@lru_cache(maxsize=None)
def _p_of_h(n: int) -> dict[Partition, Fraction]:
    return {rho: Fraction(1, z(rho)) for rho in partitions(n)}


@lru_cache(maxsize=None)
def _p_of_e(n: int) -> dict[Partition, Fraction]:
    return {rho: Fraction(sign(rho), z(rho)) for rho in partitions(n)}


def _p_product(a: Mapping[Partition, Fraction], b: Mapping[Partition, Fraction]) -> dict[Partition, Fraction]:
    out: dict[Partition, Fraction] = {}
    for x, cx in a.items():
        for y, cy in b.items():
            k = merge(x, y)
            out[k] = out.get(k, 0) + cx * cy
    return out


@lru_cache(maxsize=None)
def _p_of_multiplicative(basis: str, lam: Partition) -> dict[Partition, Fraction]:
    single = _p_of_h if basis == "h" else _p_of_e
    acc: dict[Partition, Fraction] = {(): Fraction(1)}
    for part in lam:
        acc = _p_product(acc, single(part))
    return {k: v for k, v in acc.items() if v}


def _accumulate(out: dict, mapping: Mapping, c: Fraction) -> None:
    for k, v in mapping.items():
        out[k] = out.get(k, 0) + c * v


def to_p(f: SymElem) -> dict[Partition, Fraction]:
    """Coefficients of f in the power-sum basis."""
    if f.basis == "p":
        return dict(f.terms)
    out: dict[Partition, Fraction] = {}
    for lam, c in f.terms.items():
        if f.basis == "s":
            _accumulate(out, _p_of_s(lam), c)
        elif f.basis in ("h", "e"):
            _accumulate(out, _p_of_multiplicative(f.basis, lam), c)
        else:
            raise ValueError(f"basis {f.basis} is not a GL basis; use charband.branching.lift")
    return {k: v for k, v in out.items() if v}


def p_to_s(coeffs: Mapping[Partition, Fraction]) -> dict[Partition, Fraction]:
    out: dict[Partition, Fraction] = {}
    for rho, c in coeffs.items():
        _accumulate(out, _s_of_p(rho), c)
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _s_to_multiplicative_matrix(basis: str, n: int) -> dict[Partition, dict[Partition, Fraction]]:
    """Express each s_lam (|lam| = n) in the h- or e-basis by triangular inversion."""
    parts = partitions(n)
    # h_mu = sum_lam K_{lam,mu} s_lam with K unitriangular when lam >= mu in
    # reverse-lex order; the e-basis is obtained by transposing lam.
    forward: dict[Partition, dict[Partition, Fraction]] = {}
    for mu in parts:
        forward[mu] = p_to_s(_p_of_multiplicative("h", mu))
    result: dict[Partition, dict[Partition, Fraction]] = {}
    # h_mu = s_mu + sum_{nu > mu} K s_nu, so solve in reverse-lex order.
    for mu in parts:
        expr: dict[Partition, Fraction] = {mu: Fraction(1)}
        for nu, k in forward[mu].items():
            if nu != mu:
                if nu not in result:
                    raise RuntimeError("ordering violated in Kostka inversion")
                _accumulate(expr, result[nu], -k)
        result[mu] = {k2: v for k2, v in expr.items() if v}
    if basis == "e":
        return {transpose(lam): dict(row) for lam, row in result.items()}
    return result


def to_basis(f: SymElem, target: str) -> SymElem:
    """Re-express f in one of the GL bases e, h, p, s."""
    if target not in GL_BASES:
        raise ValueError(f"to_basis handles only {GL_BASES}; sp/o live in charband.branching")
    if f.basis not in GL_BASES:
        raise ValueError(f"source basis {f.basis} is not a GL basis; use charband.branching.lift")
    if f.basis == target:
        return f
    if target == "p":
        return SymElem("p", to_p(f))
    if f.basis == "p":
        s_terms = p_to_s(f.terms)
    elif f.basis == "s":
        s_terms = dict(f.terms)
    else:
        s_terms = p_to_s(to_p(f))
    if target == "s":
        return SymElem("s", s_terms)
    out: dict[Partition, Fraction] = {}
    for lam, c in s_terms.items():
        _accumulate(out, _s_to_multiplicative_matrix(target, sum(lam))[lam], c)
    return SymElem(target, out)


def as_s(f: SymElem) -> SymElem:
    return to_basis(f, "s")


# ------------------------------------------------------------- products


@lru_cache(maxsize=None)
def _lr(lam: Partition, mu: Partition) -> tuple[tuple[Partition, int], ...]:
    """Expansion of s_lam * s_mu by counting Littlewood-Richardson tableaux of shape nu/lam."""
    results: dict[Partition, int] = {}
    nlab = len(mu)

    def add_label(shape: tuple[int, ...], counts: tuple[tuple[int, ...], ...], label: int) -> None:
        if label == nlab:
            results[shape] = results.get(shape, 0) + 1
            return
        old = shape + (0,)
        prev = [row[label - 1] if label else 0 for row in counts] + [0]

        def fill(r: int, left: int, placed: list[int], seen_i: int, seen_prev: int) -> None:
            if left == 0 or r == len(old):
                if left:
                    return
                placed = placed + [0] * (len(old) - len(placed))
                new_shape = tuple(x for x in (old[j] + placed[j] for j in range(len(old))) if x)
                rows = [list(c) for c in counts] + [[0] * nlab]
                for j, x in enumerate(placed):
                    rows[j][label] += x
                new_counts = tuple(tuple(rw) for rw in rows[: len(new_shape)])
                add_label(new_shape, new_counts, label + 1)
                return
            room = left if r == 0 else min(left, old[r - 1] - old[r])
            for x in range(room, -1, -1):
                if label and seen_i + x > seen_prev:
                    continue
                fill(r + 1, left - x, placed + [x], seen_i + x, seen_prev + prev[r])

        fill(0, mu[label], [], 0, 0)

    add_label(tuple(lam), tuple(tuple([0] * nlab) for _ in lam), 0)
    return tuple(sorted(results.items(), key=lambda kv: sort_key(kv[0])))


def lr_coefficients(lam: Partition, mu: Partition) -> dict[Partition, int]:
    if len(mu) > len(lam) or (len(mu) == len(lam) and sum(mu) > sum(lam)):
        lam, mu = mu, lam
    return dict(_lr(tuple(lam), tuple(mu)))


def lr_coefficient(nu: Partition, lam: Partition, mu: Partition) -> int:
    return lr_coefficients(lam, mu).get(tuple(nu), 0)


def lr_product(a: SymElem, b: SymElem) -> SymElem:
    """Product in the s-basis via Littlewood-Richardson coefficients."""
    a, b = as_s(a), as_s(b)
    out: dict[Partition, Fraction] = {}
    for lam, ca in a.terms.items():
        for mu, cb in b.terms.items():
            for nu, c in lr_coefficients(lam, mu).items():
                out[nu] = out.get(nu, 0) + ca * cb * c
    return SymElem("s", out)


def product(a: SymElem, b: SymElem) -> SymElem:
    if a.basis == b.basis == "p":
        return SymElem("p", _p_product(a.terms, b.terms))
    if a.basis == b.basis and a.basis in ("e", "h"):
        out: dict[Partition, Fraction] = {}
        for x, cx in a.terms.items():
            for y, cy in b.terms.items():
                k = merge(x, y)
                out[k] = out.get(k, 0) + cx * cy
        return SymElem(a.basis, out)
    if a.basis not in GL_BASES or b.basis not in GL_BASES:
        raise ValueError("products of sp/o elements go through charband.branching")
    res = lr_product(a, b)
    return res if a.basis == "s" else to_basis(res, a.basis)


def omega(f: SymElem) -> SymElem:
    """The involution omega: s_lam -> s_lam', e <-> h, p_rho -> sign(rho) p_rho."""
    if f.basis == "s":
        return SymElem("s", {transpose(lam): c for lam, c in f.terms.items()})
    if f.basis == "e":
        return SymElem("h", f.terms)
    if f.basis == "h":
        return SymElem("e", f.terms)
    if f.basis == "p":
        return SymElem("p", {rho: sign(rho) * c for rho, c in f.terms.items()})
    if f.basis == "sp":
        return SymElem("o", {transpose(lam): c for lam, c in f.terms.items()})
    return SymElem("sp", {transpose(lam): c for lam, c in f.terms.items()})


def kronecker_coefficient(lam: Partition, mu: Partition, nu: Partition) -> Fraction:
    n = sum(lam)
    return sum(
        (Fraction(character(lam, rho) * character(mu, rho) * character(nu, rho), z(rho)) for rho in partitions(n)),
        Fraction(0),
    )


@lru_cache(maxsize=None)
def _kron(lam: Partition, mu: Partition) -> tuple[tuple[Partition, int], ...]:
    n = sum(lam)
    out = []
    for nu in partitions(n):
        c = kronecker_coefficient(lam, mu, nu)
        if c:
            out.append((nu, int(c)))
    return tuple(out)


def kronecker(a: SymElem, b: SymElem) -> SymElem:
    """Internal (Kronecker) product of homogeneous elements of equal weight."""
    a, b = as_s(a), as_s(b)
    wa, wb = a.weights(), b.weights()
    if len(wa) > 1 or len(wb) > 1 or (wa and wb and wa != wb):
        raise ValueError(f"kronecker needs equal homogeneous weights, got {wa} and {wb}")
    out: dict[Partition, Fraction] = {}
    for lam, ca in a.terms.items():
        for mu, cb in b.terms.items():
            for nu, c in _kron(lam, mu):
                out[nu] = out.get(nu, 0) + ca * cb * c
    return SymElem("s", out)


# ----------------------------------------------------------- evaluations


def dim_sn(f: SymElem) -> int | Fraction:
    f = as_s(f)
    if not f.is_homogeneous:
        raise ValueError("dim_sn needs a homogeneous element")
    total = sum((c * dim_specht(lam) for lam, c in f.terms.items()), Fraction(0))
    return int(total) if total.denominator == 1 else total


def dim_gl(f: SymElem, N: int) -> int | Fraction:
    if N < 0:
        raise ValueError("N must be non-negative")
    f = as_s(f)
    total = sum((c * dim_schur(lam, N) for lam, c in f.terms.items()), Fraction(0))
    return int(total) if total.denominator == 1 else total


# ------------------------------------------------------- short constructors


def s(*parts: int) -> SymElem:
    return SymElem.single("s", parts)


def h(n: int) -> SymElem:
    return SymElem.single("h", (n,) if n else ())


def e(n: int) -> SymElem:
    return SymElem.single("e", (n,) if n else ())


def p(*parts: int) -> SymElem:
    return SymElem.single("p", sorted(parts, reverse=True))
