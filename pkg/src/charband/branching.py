"""Stable branching from GL to Sp and O, and the operator D.

In the stable range s_lam restricts as sum_mu (sum_beta c^lam_{mu beta}) V_mu,
where beta runs over partitions whose columns all have even length (Sp) or
whose rows all have even length (O).  The inverse change of basis is obtained
by unitriangular inversion.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .partitions import Partition, partitions, sort_key, transpose
from .symfunc import SymElem, as_s, lr_coefficients

GROUPS = {"Sp": "sp", "O": "o"}


def _check(group: str) -> str:
    if group not in GROUPS:
        raise ValueError(f"group must be 'Sp' or 'O', not {group!r}")
    return GROUPS[group]


def _even_betas(w: int, group: str) -> list[Partition]:
    out = []
    for beta in partitions(w):
        shape = transpose(beta) if group == "Sp" else beta
        if all(x % 2 == 0 for x in shape):
            out.append(beta)
    return out


@lru_cache(maxsize=None)
def _restrict_single(lam: Partition, group: str) -> tuple[tuple[Partition, int], ...]:
    n = sum(lam)
    out: dict[Partition, int] = {}
    for bw in range(0, n + 1, 2):
        for beta in _even_betas(bw, group):
            for mu in partitions(n - bw):
                c = lr_coefficients(mu, beta).get(lam, 0)
                if c:
                    out[mu] = out.get(mu, 0) + c
    return tuple(sorted(out.items(), key=lambda kv: sort_key(kv[0])))


@lru_cache(maxsize=None)
def _lift_single(lam: Partition, group: str) -> tuple[tuple[Partition, Fraction], ...]:
    # s_lam = V_lam + lower terms, so V_lam = s_lam - sum_{mu lower} m_{lam,mu} V_mu
    expr: dict[Partition, Fraction] = {lam: Fraction(1)}
    for mu, c in _restrict_single(lam, group):
        if mu == lam:
            continue
        for nu, d in _lift_single(mu, group):
            expr[nu] = expr.get(nu, 0) - c * d
    return tuple((k, v) for k, v in sorted(expr.items(), key=lambda kv: sort_key(kv[0])) if v)


def restrict(f: SymElem, group: str) -> SymElem:
    """Littlewood restriction of a GL character to Sp or O (stable range)."""
    basis = _check(group)
    f = as_s(f)
    out: dict[Partition, Fraction] = {}
    for lam, c in f.terms.items():
        for mu, m in _restrict_single(lam, group):
            out[mu] = out.get(mu, 0) + c * m
    return SymElem(basis, out)


def lift(f: SymElem) -> SymElem:
    """Inverse of restrict: express an sp- or o-combination in the s-basis."""
    if f.basis not in ("sp", "o"):
        raise ValueError("lift expects an sp or o element")
    group = "Sp" if f.basis == "sp" else "O"
    out: dict[Partition, Fraction] = {}
    for lam, c in f.terms.items():
        for mu, d in _lift_single(lam, group):
            out[mu] = out.get(mu, 0) + c * d
    return SymElem("s", out)


def operator_D(f: SymElem, group: str) -> SymElem:
    """The basis substitution s_lam -> sp_lam (or o_lam)."""
    basis = _check(group)
    f = as_s(f)
    return SymElem(basis, f.terms)


def min_rank(f: SymElem) -> int:
    """Smallest g for which every appearing V_mu is a stable irreducible: max length + 1."""
    return max((len(mu) for mu in f.terms), default=0) + 1


def trivial_multiplicity(f: SymElem, group: str) -> Fraction | int:
    """Multiplicity of the trivial representation in the restriction of f."""
    _check(group)
    f = as_s(f)
    total = Fraction(0)
    for lam, c in f.terms.items():
        shape = transpose(lam) if group == "Sp" else lam
        if all(x % 2 == 0 for x in shape):
            total += c
    return int(total) if total.denominator == 1 else total


def parity(f: SymElem) -> str:
    """'even' or 'odd': the action of -id on a homogeneous tensor construction."""
    w = f.weights()
    if len(w) > 1:
        raise ValueError("parity needs a homogeneous element")
    return "odd" if (w.pop() if w else 0) % 2 else "even"


def group_for_parity(n_parity: str) -> str:
    return "Sp" if n_parity == "odd" else "O"
