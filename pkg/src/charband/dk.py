"""Characters of Kriz-Totaro algebras, their Koszul duals and the derived families.

Degrees are kept in units of (n - 1) plus a defect: a Kriz-Totaro monomial with
j generators x_ij and s labels from H^vee sits in cohomological degree
(2n - 1) j + n s = (n - 1)(2j + s) + (j + s), so it is stored at N = 2j + s
with defect j + s (its weight).  Substituting r -> -r t^{-1} removes the
defect and leaves everything in multiples of (n - 1).

Families are reported as maps (s, k, N) -> {(mu, nu): multiplicity} with mu a
partition of s (first slot, Schur functors of H) and nu a partition of k.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .branching import group_for_parity, lift, operator_D, restrict
from .operads import lie_char
from .partitions import Partition, transpose
from .series import (
    AritySeries,
    BiGradedSeries,
    GradedSym,
    exp_free,
    koszul_substitution,
    log_free,
    negate_variable,
    pair_text,
    parse_pair_text,
    pp_to_ss,
    series_inverse,
)
from .symfunc import SymElem, omega, to_p

PARITIES = ("odd", "even")


class ConsistencyError(ArithmeticError):
    """A character that must be a genuine representation came out negative."""


def _check_parity(n_parity: str) -> None:
    if n_parity not in PARITIES:
        raise ValueError(f"n_parity must be 'odd' or 'even', not {n_parity!r}")


def unit_parity(n_parity: str) -> int:
    """Parity of n - 1."""
    _check_parity(n_parity)
    return 0 if n_parity == "odd" else 1


@dataclass
class CoeffFamily:
    """Bigraded coefficients (s, k, N) -> {(mu, nu): multiplicity}."""

    label: str
    n_parity: str
    entries: dict = field(default_factory=dict)

    def get(self, s: int, k: int, N: int) -> dict:
        return self.entries.get((s, k, N), {})

    def keys(self):
        return sorted(self.entries)

    def transpose_first(self) -> "CoeffFamily":
        """Replace every first-slot partition by its transpose (the parity change of n)."""
        flipped = {}
        for key, pairs in self.entries.items():
            flipped[key] = {(transpose(mu), nu): c for (mu, nu), c in pairs.items()}
        return CoeffFamily(self.label, "even" if self.n_parity == "odd" else "odd", flipped)

    def row(self, lam: Partition, k: int) -> dict[int, dict[Partition, Fraction]]:
        """N -> {nu: multiplicity} for the first-slot irreducible lam."""
        out: dict[int, dict[Partition, Fraction]] = {}
        for (s, kk, N), pairs in self.entries.items():
            if kk != k or s != sum(lam):
                continue
            for (mu, nu), c in pairs.items():
                if mu == tuple(lam):
                    out.setdefault(N, {})[nu] = c
        return out


def _family_from_bigraded(F: BiGradedSeries, label: str, n_parity: str, k: int | None = None) -> CoeffFamily:
    fam = CoeffFamily(label, n_parity)
    buckets: dict[tuple[int, int, int], dict] = {}
    for key, v in F.terms.items():
        N, _, r1, r2 = key
        if k is not None and sum(r2) != k:
            continue
        buckets.setdefault((sum(r1), sum(r2), N), {})[(r1, r2)] = v
    for key, pp in buckets.items():
        ss = pp_to_ss(pp)
        if ss:
            fam.entries[key] = ss
    return fam


def family_to_text(fam: CoeffFamily) -> str:
    """One record per (s, k): a header line, then one line per normalized degree."""
    blocks = []
    by_sk: dict[tuple[int, int], list[int]] = {}
    for s, k, N in fam.keys():
        by_sk.setdefault((s, k), []).append(N)
    for (s, k), Ns in sorted(by_sk.items()):
        lines = [f"family {fam.label} s={s} k={k} parity={fam.n_parity}"]
        for N in sorted(Ns):
            lines.append(f"T^{N} : {pair_text(fam.entries[(s, k, N)])}")
        blocks.append("\n".join(lines))
    return "\n".join(blocks) + "\n" if blocks else ""


_HEADER = re.compile(r"^family (\S+) s=(\d+) k=(\d+) parity=(odd|even)$")


def family_from_text(text: str) -> CoeffFamily:
    fam = None
    s = k = None
    for line in text.splitlines():
        if not line.strip():
            continue
        m = _HEADER.match(line)
        if m:
            label, s, k, par = m.group(1), int(m.group(2)), int(m.group(3)), m.group(4)
            if fam is None:
                fam = CoeffFamily(label, par)
            elif (fam.label, fam.n_parity) != (label, par):
                raise ValueError("mixed families in one text")
            continue
        if fam is None:
            raise ValueError("series line before any family header")
        head, body = line.split(":", 1)
        dm = re.match(r"^T\^(-?\d+)\s*$", head.strip())
        if not dm:
            raise ValueError(f"bad degree {head!r}")
        pairs = parse_pair_text(body)
        if pairs:
            fam.entries[(s, k, int(dm.group(1)))] = pairs
    return fam if fam is not None else CoeffFamily("empty", "odd")


# ------------------------------------------------------------ Kriz-Totaro


def kt_generators(n_parity: str, k_max: int, s_max: int, N_max: int) -> BiGradedSeries:
    """Generators of the free description: H-label count s in {0, 1}, Lie(k) (x) sign in the k slot."""
    up = unit_parity(n_parity)
    raw: dict = {}
    for k in range(1, k_max + 1):
        lie_sign = to_p(omega(lie_char(k)))
        for s in (0, 1):
            if s > s_max:
                continue
            r1 = (1,) if s else ()
            for r2, c in lie_sign.items():
                key = (2 * (k - 1) + s, k - 1 + s, r1, r2)
                raw[key] = raw.get(key, 0) + c
    return BiGradedSeries(trunc=N_max, wmax=(s_max, k_max), unit_parity=up, _raw=raw)


@lru_cache(maxsize=None)
def kt_character(n_parity: str, k_max: int, s_max: int, N_max: int) -> BiGradedSeries:
    """Character of the Kriz-Totaro algebras for all arities up to k_max (free graded-commutative)."""
    return exp_free(kt_generators(n_parity, k_max, s_max, N_max))


def kt_arity(n_parity: str, k: int, s_max: int, N_max: int) -> AritySeries:
    return kt_character(n_parity, k, s_max, N_max).arity_part(k)


def koszul_dual(A: AritySeries) -> AritySeries:
    """Character of the Koszul dual Lie algebra from that of a Koszul algebra in arity k.

    Applies r -> -r t^{-1}, inverts (universal enveloping algebra) and takes
    the plethystic logarithm.  Requires n odd so that the dual is even.
    """
    if A.unit_parity != 0:
        raise ValueError("Koszul inversion is only performed for n odd; use the transpose for n even")
    B = koszul_substitution(A)
    U = series_inverse(B)
    return log_free(U)


@lru_cache(maxsize=None)
def gr_t_series(k: int, s_max: int, N_max: int) -> BiGradedSeries:
    """ch of Sigma^{n-1} gr t(-, k) for n odd, as a bigraded series (second slot Frobenius)."""
    if k == 0:
        return BiGradedSeries(trunc=N_max, wmax=(s_max, None), unit_parity=0)
    L = koszul_dual(kt_arity("odd", k, s_max, N_max))
    return L.to_bigraded()


def gr_t(k: int, s_max: int, N_max: int, n_parity: str = "odd") -> CoeffFamily:
    _check_parity(n_parity)
    fam = _family_from_bigraded(gr_t_series(k, s_max, N_max), "grT", "odd", k)
    return fam if n_parity == "odd" else fam.transpose_first()


@lru_cache(maxsize=None)
def gr_f_series(k: int, s_max: int, N_max: int) -> BiGradedSeries:
    """ch gr f(-, k) = sum_j (-1)^j ch gr t(-, k - j) . s_{1^j} (n odd)."""
    total = BiGradedSeries(trunc=N_max, wmax=(s_max, None), unit_parity=0)
    for j in range(0, k + 1):
        part = gr_t_series(k - j, s_max, N_max)
        if not part.terms:
            continue
        ej = to_p(SymElem.single("e", (j,) if j else ()))
        raw = {}
        for key, v in part.terms.items():
            for rho, c in ej.items():
                nk = (key[0], key[1], key[2], _merge(key[3], rho))
                raw[nk] = raw.get(nk, 0) + v * c * (-1) ** j
        total = total + total.like(raw)
    return total


def _merge(a: Partition, b: Partition) -> Partition:
    return tuple(sorted(a + b, reverse=True))


def gr_f(k: int, s_max: int, N_max: int, n_parity: str = "odd") -> CoeffFamily:
    """Coefficients of gr f(s, k) in normalized degree N = r + s; negative entries raise."""
    _check_parity(n_parity)
    fam = _family_from_bigraded(gr_f_series(k, s_max, N_max), "grF", "odd", k)
    for key, pairs in fam.entries.items():
        bad = {p: c for p, c in pairs.items() if c < 0 or c.denominator != 1}
        if bad:
            raise ConsistencyError(f"gr f entry {key} is not a representation: {bad}")
    return fam if n_parity == "odd" else fam.transpose_first()


def gr_f_family(k: int, s_max: int, N_max: int, n_parity: str = "odd") -> CoeffFamily:
    """gr_f routed through the active on-disk cache, if any."""
    from . import cache

    store = cache.active()
    if store is None:
        return gr_f(k, s_max, N_max, n_parity)
    params = {"k": k, "s_max": s_max, "N_max": N_max, "parity": n_parity}
    text = store.fetch("grF", params, lambda: family_to_text(gr_f(k, s_max, N_max, n_parity)))
    fam = family_from_text(text)
    fam.label, fam.n_parity = "grF", n_parity
    return fam


def conf_family(k: int, n_parity: str = "even") -> CoeffFamily:
    """conf_cohomology routed through the active on-disk cache, if any."""
    from . import cache

    store = cache.active()
    if store is None:
        return conf_cohomology(k, n_parity)
    params = {"k": k, "parity": n_parity}
    text = store.fetch("Dconf", params, lambda: family_to_text(conf_cohomology(k, n_parity)))
    fam = family_from_text(text)
    fam.label, fam.n_parity = "Dconf", n_parity
    return fam


def tab_ff_row(k: int, lam: Partition, N_max: int | None = None) -> dict[int, dict[Partition, Fraction]]:
    """N -> {mu: multiplicity}: the S^lam row of gr f(-, k) as displayed in the tables (n odd)."""
    s = sum(lam)
    if N_max is None:
        N_max = 2 * (k - 1) + 2 * s + 2
    fam = gr_f(k, s, N_max)
    return fam.row(tuple(lam), k)


# ------------------------------------------------------- configuration spaces


@lru_cache(maxsize=None)
def conf_series(n_parity: str, k_max: int) -> BiGradedSeries:
    """Free graded-commutative algebra on H^vee (x) Lie(m) (x) sign, one label per generator.

    A generator of arity m sits in cohomological degree n + m - 1, stored as
    N = 1 (one label) with defect m.
    """
    up = unit_parity(n_parity)
    raw: dict = {}
    for m in range(1, k_max + 1):
        for r2, c in to_p(omega(lie_char(m))).items():
            key = (1, m, (1,), r2)
            raw[key] = raw.get(key, 0) + c
    gens = BiGradedSeries(trunc=k_max, wmax=(k_max, k_max), unit_parity=up, _raw=raw)
    return exp_free(gens)


def conf_cohomology(k: int, n_parity: str = "even") -> CoeffFamily:
    """D(s, k): entries keyed (s, k, s) with the cohomological degree k + s(n - 1).

    The first slot is the Schur functor of H^vee evaluated with the Koszul sign
    of degree n, so the two parities differ by transposing that slot.
    """
    _check_parity(n_parity)
    fam = _family_from_bigraded(conf_series(n_parity, k), "Dconf", n_parity, k)
    return fam


# ---------------------------------------------------------- derivations


def der_char(s: int, variant: str = "plain", n_parity: str = "odd") -> SymElem:
    """Schur-functor decomposition of Der (plain) or Der_omega in degree s(n - 1)."""
    if s < 1:
        raise ValueError("der_char needs s >= 1")
    _check_parity(n_parity)
    plain = SymElem.single("s", (1,)) * lie_char(s + 1)
    if variant == "plain":
        out = plain
    elif variant == "omega":
        out = plain - lie_char(s + 2)
    else:
        raise ValueError("variant must be 'plain' or 'omega'")
    if not out.is_nonnegative():
        raise ConsistencyError(f"negative multiplicity in der_char({s}, {variant})")
    return out if n_parity == "odd" else omega(out)


def bracket_image(s: int, n_parity: str = "odd") -> SymElem:
    """Character of the free Lie algebra piece hit by bracketing: Lie(s + 2)."""
    f = lie_char(s + 2)
    return f if n_parity == "odd" else omega(f)


# ------------------------------------------------------------- X_1 series


@dataclass
class X1Result:
    n_parity: str
    P: dict  # x-degree -> SymElem in sp/o basis
    Q: dict  # x-degree -> SymElem in sp/o basis
    P_pre: dict  # x-degree -> SymElem in s basis, before omega and D
    Qbar: dict  # x-degree -> SymElem in s basis, before restriction
    warning: str | None = None


def x1_series(n_parity: str, truncation: int = 3) -> X1Result:
    """P and Q for the low-degree homotopy of X_1 (x stands for t^{n-1})."""
    _check_parity(n_parity)
    warning = None
    if truncation > 4:
        warning = f"truncation {truncation} exceeds the validated range 4"
    group = group_for_parity(n_parity)
    wmax = 3 * truncation
    inner = {}
    for p_ in range(3, truncation + 3):
        inner[p_ - 2] = SymElem.single("h", (p_,))
    gen = GradedSym(inner, trunc=truncation, wmax=wmax, unit_parity=0)
    pre = exp_free(gen)
    P_pre = {N: pre.coefficient(N) for N, _ in pre.degrees()}
    P = {}
    lifted_terms = {}
    for N, f in P_pre.items():
        g = omega(f) if n_parity == "odd" else f
        P[N] = operator_D(g, group)
        lifted_terms[N] = lift(P[N])
    # x is even for n odd (plain logarithm) and odd for n even (e/h split)
    lifted = GradedSym(lifted_terms, trunc=truncation, wmax=wmax, unit_parity=0 if n_parity == "odd" else 1)
    inv = series_inverse(negate_variable(lifted))
    Qbar = log_free(inv)
    Q, Qbar_terms = {}, {}
    for N, _ in Qbar.degrees():
        Qbar_terms[N] = Qbar.coefficient(N)
        Q[N] = restrict(Qbar_terms[N], group)
    return X1Result(n_parity, P, Q, P_pre, Qbar_terms, warning)
