"""Graded series with symmetric-function coefficients and their lambda-ring operations.

A series is stored sparsely as a map from keys (N, d, *slots) to exact rationals.
N is the degree in a chosen unit, d a defect so that the actual degree is
N * unit + d; only the parity of the actual degree matters for signs, and it
is (N * unit_parity + d) mod 2.  Each slot is either

* an outer slot: a power-sum partition rho, multiplied by multiset union, with
  Adams operations p_j -> p_jm (the usual lambda-ring on Lambda), or
* an inner slot of fixed arity k: a cycle type c of S_k standing for the
  indicator class function delta_c, multiplied pointwise (Kronecker product),
  with Adams operations f -> (sigma -> f(sigma^m)).

GradedSym has one outer slot, BiGradedSeries two, AritySeries an outer slot
followed by an inner slot.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping

from .partitions import (
    Partition,
    character,
    make_partition,
    merge,
    partitions,
    power_type,
    scale,
    sort_key,
    z,
)
from .symfunc import SymElem, p_to_s, to_p

OUTER = "outer"

Key = tuple


class TruncationError(ValueError):
    pass


@lru_cache(maxsize=None)
def _inner_preimages(k: int, m: int) -> dict[Partition, tuple[Partition, ...]]:
    out: dict[Partition, list[Partition]] = {}
    for c in partitions(k):
        out.setdefault(power_type(c, m), []).append(c)
    return {c: tuple(v) for c, v in out.items()}


class Series:
    """Truncated graded series; see the module docstring for the key layout."""

    __slots__ = ("slots", "terms", "trunc", "wmax", "unit_parity")

    def __init__(
        self,
        slots: tuple,
        terms: Mapping[Key, object] | None = None,
        trunc: int = 10,
        wmax: tuple | None = None,
        unit_parity: int = 1,
    ):
        self.slots = tuple(slots)
        self.trunc = trunc
        self.wmax = tuple(wmax) if wmax is not None else tuple(None for _ in self.slots)
        self.unit_parity = unit_parity % 2
        clean: dict[Key, Fraction] = {}
        for key, c in (terms or {}).items():
            c = c if isinstance(c, Fraction) else Fraction(c)
            if c and self._admissible(key):
                clean[key] = clean.get(key, 0) + c
        self.terms = {k: v for k, v in clean.items() if v}

    # -- bookkeeping
    def _admissible(self, key: Key) -> bool:
        if key[0] > self.trunc:
            return False
        for i, kind in enumerate(self.slots):
            bound = self.wmax[i]
            if kind == OUTER and bound is not None and sum(key[2 + i]) > bound:
                return False
        return True

    def like(self, terms: Mapping[Key, object] | None = None) -> "Series":
        """A series with the same shape and the given terms."""
        out = object.__new__(type(self))
        Series.__init__(out, self.slots, terms, self.trunc, self.wmax, self.unit_parity)
        return out

    def parity(self, key: Key) -> int:
        return (key[0] * self.unit_parity + key[1]) % 2

    def outer_weight(self, key: Key) -> int:
        return sum(sum(key[2 + i]) for i, kind in enumerate(self.slots) if kind == OUTER)

    def unit(self) -> "Series":
        slotkeys: list[list] = [[]]
        for kind in self.slots:
            if kind == OUTER:
                slotkeys = [sk + [()] for sk in slotkeys]
            else:
                slotkeys = [sk + [c] for sk in slotkeys for c in partitions(kind)]
        return self.like({(0, 0, *sk): 1 for sk in slotkeys})

    def constant_part(self) -> "Series":
        return self.like({k: v for k, v in self.terms.items() if k[0] == 0 and self.outer_weight(k) == 0})

    def degrees(self) -> list[tuple[int, int]]:
        return sorted({(k[0], k[1]) for k in self.terms})

    def __eq__(self, other):
        if isinstance(other, Series):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"{type(self).__name__}({len(self.terms)} terms, trunc={self.trunc})"

    # -- linear structure
    def __add__(self, other: "Series") -> "Series":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return self.like(out)

    def __neg__(self):
        return self.like({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "Series":
        c = Fraction(c)
        return self.like({k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, Series):
            return self.like(_mul_terms(self, self.terms, other.terms))
        return NotImplemented

    __rmul__ = __mul__

    def shift(self, dN: int, dd: int = 0) -> "Series":
        return self.like({(k[0] + dN, k[1] + dd, *k[2:]): v for k, v in self.terms.items()})

    # -- lambda-ring structure
    def adams(self, m: int, signed: bool = True) -> "Series":
        """m-th Adams operation; a term of odd actual degree picks up (-1)^(m-1) when signed."""
        return self.like(_adams_terms(self, self.terms, m, signed))

    def regrade(self, fn: Callable[[Key], tuple[Key, Fraction] | None], **shape) -> "Series":
        """Re-key every term through fn, which returns (new_key, multiplier) or None to drop."""
        out: dict[Key, Fraction] = {}
        for k, v in self.terms.items():
            res = fn(k)
            if res is None:
                continue
            nk, mult = res
            out[nk] = out.get(nk, 0) + v * mult
        target = self.like() if not shape else Series(
            shape.get("slots", self.slots),
            None,
            shape.get("trunc", self.trunc),
            shape.get("wmax", self.wmax),
            shape.get("unit_parity", self.unit_parity),
        )
        return target.like(out)


# ---------------------------------------------------------------- kernels


def _slot_product(slots: tuple, a: Key, b: Key) -> Key | None:
    out = [a[0] + b[0], a[1] + b[1]]
    for i, kind in enumerate(slots):
        x, y = a[2 + i], b[2 + i]
        if kind == OUTER:
            out.append(merge(x, y))
        else:
            if x != y:
                return None
            out.append(x)
    return tuple(out)


def _mul_terms(shape: Series, A: Mapping[Key, Fraction], B: Mapping[Key, Fraction]) -> dict[Key, Fraction]:
    slots, trunc = shape.slots, shape.trunc
    outer_bounds = [(i, shape.wmax[i]) for i, kind in enumerate(slots) if kind == OUTER and shape.wmax[i] is not None]
    inner = any(kind != OUTER for kind in slots)
    out: dict[Key, Fraction] = {}
    # bucket B by degree and, for inner slots, by class to skip vanishing products
    if inner:
        idx = [i for i, kind in enumerate(slots) if kind != OUTER]
        bucket: dict[tuple, list] = {}
        for kb, vb in B.items():
            bucket.setdefault(tuple(kb[2 + i] for i in idx), []).append((kb, vb))
    for ka, va in A.items():
        room = trunc - ka[0]
        if room < 0:
            continue
        cands = bucket.get(tuple(ka[2 + i] for i in idx), ()) if inner else B.items()
        for kb, vb in cands:
            if kb[0] > room:
                continue
            ok = True
            for i, bound in outer_bounds:
                if sum(ka[2 + i]) + sum(kb[2 + i]) > bound:
                    ok = False
                    break
            if not ok:
                continue
            key = _slot_product(slots, ka, kb)
            if key is None:
                continue
            out[key] = out.get(key, 0) + va * vb
    return {k: v for k, v in out.items() if v}


def _adams_terms(shape: Series, terms: Mapping[Key, Fraction], m: int, signed: bool) -> dict[Key, Fraction]:
    slots = shape.slots
    out: dict[Key, Fraction] = {}
    for key, v in terms.items():
        N = key[0] * m
        if N > shape.trunc:
            continue
        c = v
        if signed and (m - 1) % 2 and shape.parity(key):
            c = -c
        partial: list[list] = [[N, key[1] * m]]
        for i, kind in enumerate(slots):
            x = key[2 + i]
            if kind == OUTER:
                partial = [pk + [scale(x, m)] for pk in partial]
            else:
                pre = _inner_preimages(kind, m).get(x, ())
                partial = [pk + [c2] for pk in partial for c2 in pre]
        for pk in partial:
            nk = tuple(pk)
            out[nk] = out.get(nk, 0) + c
    return out


# ------------------------------------------------------------ grading


def _grading(F: Series) -> tuple[Callable[[Key], int], int]:
    """A positive additive grading for recursive exp/log/inverse and its maximum."""
    nonconst = [k for k in F.terms if not (k[0] == 0 and F.outer_weight(k) == 0)]
    if all(k[0] >= 1 for k in nonconst):
        return (lambda k: k[0]), F.trunc
    bounds = [F.wmax[i] for i, kind in enumerate(F.slots) if kind == OUTER]
    if any(b is None for b in bounds):
        raise TruncationError("degree-zero terms of positive weight need weight bounds on every outer slot")
    if any(k[0] < 0 for k in F.terms):
        raise TruncationError("negative degrees are not supported by the recursive operations")
    return (lambda k: k[0] + F.outer_weight(k)), F.trunc + sum(bounds)


def _by_grade(terms: Mapping[Key, Fraction], grade: Callable[[Key], int]) -> dict[int, dict[Key, Fraction]]:
    out: dict[int, dict[Key, Fraction]] = {}
    for k, v in terms.items():
        out.setdefault(grade(k), {})[k] = v
    return out


def _exp_terms(F: Series, Y: Mapping[Key, Fraction], grade, gmax: int) -> dict[Key, Fraction]:
    """exp(Y) for Y without grade-0 part, via g E_g = sum_j j Y_j E_{g-j}."""
    Yg = _by_grade(Y, grade)
    E: dict[int, dict[Key, Fraction]] = {0: dict(F.unit().terms)}
    for g in range(1, gmax + 1):
        acc: dict[Key, Fraction] = {}
        for j, Yj in Yg.items():
            if j > g or not E.get(g - j):
                continue
            for k, v in _mul_terms(F, Yj, E[g - j]).items():
                acc[k] = acc.get(k, 0) + j * v
        E[g] = {k: v / g for k, v in acc.items() if v}
    out: dict[Key, Fraction] = {}
    for part in E.values():
        out.update(part)
    return out


def _check_no_constant(g: Series) -> None:
    if any(k[0] == 0 and g.outer_weight(k) == 0 for k in g.terms):
        raise TruncationError("argument has a constant term")


def exp_free(g: Series) -> Series:
    """Character of the free graded-commutative algebra on g (signed Adams rule)."""
    _check_no_constant(g)
    if not g.terms:
        return g.unit()
    grade, gmax = _grading(g)
    mingrade = min(grade(k) for k in g.terms)
    Y: dict[Key, Fraction] = {}
    for m in range(1, gmax // max(mingrade, 1) + 1):
        for k, v in _adams_terms(g, g.terms, m, True).items():
            if grade(k) <= gmax:
                Y[k] = Y.get(k, 0) + v / m
    Y = {k: v for k, v in Y.items() if v}
    return g.like(_exp_terms(g, Y, grade, gmax))


def exp_free_split(g: Series) -> Series:
    """Same as exp_free but via (sum h_n) o g_even times (sum e_n) o g_odd with unsigned Adams."""
    _check_no_constant(g)
    even = g.like({k: v for k, v in g.terms.items() if not g.parity(k)})
    odd = g.like({k: v for k, v in g.terms.items() if g.parity(k)})
    return plethysm_exp(even, "h") * plethysm_exp(odd, "e")


def plethysm_exp(g: Series, kind: str) -> Series:
    """(sum_n h_n) o g or (sum_n e_n) o g with unsigned Adams operations."""
    _check_no_constant(g)
    if not g.terms:
        return g.unit()
    grade, gmax = _grading(g)
    mingrade = min(grade(k) for k in g.terms)
    Y: dict[Key, Fraction] = {}
    for m in range(1, gmax // max(mingrade, 1) + 1):
        sgn = -1 if (kind == "e" and m % 2 == 0) else 1
        for k, v in _adams_terms(g, g.terms, m, False).items():
            if grade(k) <= gmax:
                Y[k] = Y.get(k, 0) + sgn * v / m
    Y = {k: v for k, v in Y.items() if v}
    return g.like(_exp_terms(g, Y, grade, gmax))


def _check_unit_constant(F: Series) -> None:
    if F.constant_part().terms != F.unit().terms:
        raise TruncationError("series must have constant term 1")


def series_inverse(F: Series) -> Series:
    """Multiplicative inverse of a series with constant term 1."""
    _check_unit_constant(F)
    grade, gmax = _grading(F)
    unit = F.unit().terms
    G = _by_grade({k: v for k, v in F.terms.items() if k not in unit or grade(k) > 0}, grade)
    G.pop(0, None)
    inv: dict[int, dict[Key, Fraction]] = {0: dict(unit)}
    for g in range(1, gmax + 1):
        acc: dict[Key, Fraction] = {}
        for j, Gj in G.items():
            if j > g or not inv.get(g - j):
                continue
            for k, v in _mul_terms(F, Gj, inv[g - j]).items():
                acc[k] = acc.get(k, 0) - v
        inv[g] = {k: v for k, v in acc.items() if v}
    out: dict[Key, Fraction] = {}
    for part in inv.values():
        out.update(part)
    return F.like(out)


def log_free(F: Series) -> Series:
    """The unique g with exp_free(g) = F, solved one grade at a time."""
    _check_unit_constant(F)
    grade, gmax = _grading(F)
    Fg = _by_grade(F.terms, grade)
    g_terms: dict[Key, Fraction] = {}
    E = F.unit()
    for d in range(1, gmax + 1):
        Ed = {k: v for k, v in E.terms.items() if grade(k) == d}
        gd = dict(Fg.get(d, {}))
        for k, v in Ed.items():
            gd[k] = gd.get(k, 0) - v
        gd = {k: v for k, v in gd.items() if v}
        if not gd:
            continue
        g_terms.update(gd)
        piece = F.like(gd)
        E = E * _exp_with_grading(piece, grade, gmax)
    return F.like(g_terms)


def _exp_with_grading(g: Series, grade, gmax: int) -> Series:
    mingrade = min(grade(k) for k in g.terms)
    Y: dict[Key, Fraction] = {}
    for m in range(1, gmax // mingrade + 1):
        for k, v in _adams_terms(g, g.terms, m, True).items():
            if grade(k) <= gmax:
                Y[k] = Y.get(k, 0) + v / m
    Y = {k: v for k, v in Y.items() if v}
    return g.like(_exp_terms(g, Y, grade, gmax))


def plethysm(f: SymElem, g: Series, signed: bool = True) -> Series:
    """f o g: expand f in power sums and substitute p_m -> adams(m, g)."""
    fp = to_p(f)
    powers: dict[int, Series] = {}
    out = g.like()
    for rho, c in fp.items():
        term = g.unit()
        for part in rho:
            if part not in powers:
                powers[part] = g.adams(part, signed)
            term = term * powers[part]
        out = out + term.scale(c)
    return out


# ------------------------------------------------------- typed front ends


def _outer_key_from_s(lam: Partition) -> dict[Partition, Fraction]:
    return to_p(SymElem("s", {lam: 1}))


def _deg(d) -> tuple[int, int]:
    if isinstance(d, tuple):
        return d
    return (int(d), 0)


class GradedSym(Series):
    """Series in t with coefficients in Lambda."""

    def __init__(self, terms: Mapping | None = None, trunc: int = 10, wmax: int | None = None,
                 unit_parity: int = 1, _raw: Mapping[Key, object] | None = None):
        raw: dict[Key, Fraction] = dict(_raw or {})
        for d, f in (terms or {}).items():
            N, dd = _deg(d)
            for rho, c in to_p(f).items():
                k = (N, dd, rho)
                raw[k] = raw.get(k, 0) + c
        Series.__init__(self, (OUTER,), raw, trunc, (wmax,), unit_parity)

    def coefficient(self, d) -> SymElem:
        N, dd = _deg(d)
        return SymElem("s", p_to_s({k[2]: v for k, v in self.terms.items() if k[0] == N and k[1] == dd}))

    def coefficients(self) -> dict[tuple[int, int], SymElem]:
        return {d: self.coefficient(d) for d in self.degrees()}


class BiGradedSeries(Series):
    """Series in t with coefficients in Lambda (x) Lambda, both slots outer."""

    def __init__(self, terms: Mapping | None = None, trunc: int = 10, wmax: tuple = (None, None),
                 unit_parity: int = 1, _raw: Mapping[Key, object] | None = None):
        raw: dict[Key, Fraction] = dict(_raw or {})
        for d, pairs in (terms or {}).items():
            N, dd = _deg(d)
            for (mu, nu), c in pairs.items():
                for r1, c1 in _outer_key_from_s(tuple(mu)).items():
                    for r2, c2 in _outer_key_from_s(tuple(nu)).items():
                        k = (N, dd, r1, r2)
                        raw[k] = raw.get(k, 0) + Fraction(c) * c1 * c2
        Series.__init__(self, (OUTER, OUTER), raw, trunc, wmax, unit_parity)

    def coefficient(self, d) -> dict[tuple[Partition, Partition], Fraction]:
        N, dd = _deg(d)
        return pp_to_ss({(k[2], k[3]): v for k, v in self.terms.items() if k[0] == N and k[1] == dd})

    def arity_part(self, k: int) -> "AritySeries":
        """Restrict the second slot to weight k, read as class functions of S_k."""
        raw: dict[Key, Fraction] = {}
        for key, v in self.terms.items():
            rho = key[3]
            if sum(rho) != k:
                continue
            nk = (key[0], key[1], key[2], rho)
            raw[nk] = raw.get(nk, 0) + v * z(rho)
        return AritySeries(k, trunc=self.trunc, wmax=self.wmax[0], unit_parity=self.unit_parity, _raw=raw)


class AritySeries(Series):
    """Series with coefficients in Lambda (x) Lambda_k, the second slot carrying the Kronecker product."""

    def __init__(self, k: int, terms: Mapping | None = None, trunc: int = 10, wmax: int | None = None,
                 unit_parity: int = 1, _raw: Mapping[Key, object] | None = None):
        raw: dict[Key, Fraction] = dict(_raw or {})
        for d, pairs in (terms or {}).items():
            N, dd = _deg(d)
            for (mu, nu), c in pairs.items():
                for r1, c1 in _outer_key_from_s(tuple(mu)).items():
                    for cls in partitions(k):
                        val = character(tuple(nu), cls)
                        if val:
                            key = (N, dd, r1, cls)
                            raw[key] = raw.get(key, 0) + Fraction(c) * c1 * val
        Series.__init__(self, (OUTER, k), raw, trunc, (wmax, None), unit_parity)

    @property
    def arity(self) -> int:
        return self.slots[1]

    def coefficient(self, d) -> dict[tuple[Partition, Partition], Fraction]:
        N, dd = _deg(d)
        return pc_to_ss({(k[2], k[3]): v for k, v in self.terms.items() if k[0] == N and k[1] == dd}, self.arity)

    def to_bigraded(self) -> BiGradedSeries:
        """Frobenius characteristic in the second slot."""
        raw: dict[Key, Fraction] = {}
        for key, v in self.terms.items():
            cls = key[3]
            nk = (key[0], key[1], key[2], cls)
            raw[nk] = raw.get(nk, 0) + v / z(cls)
        return BiGradedSeries(trunc=self.trunc, wmax=(self.wmax[0], None), unit_parity=self.unit_parity, _raw=raw)


def pp_to_ss(pp: Mapping[tuple[Partition, Partition], Fraction]) -> dict[tuple[Partition, Partition], Fraction]:
    """Change basis p (x) p -> s (x) s."""
    first: dict[Partition, dict[Partition, Fraction]] = {}
    for (r1, r2), v in pp.items():
        first.setdefault(r2, {})[r1] = v
    out: dict[tuple[Partition, Partition], Fraction] = {}
    for r2, inner in first.items():
        s1 = p_to_s(inner)
        s2 = p_to_s({r2: Fraction(1)})
        for mu, a in s1.items():
            for nu, b in s2.items():
                out[(mu, nu)] = out.get((mu, nu), 0) + a * b
    return {k: v for k, v in out.items() if v}


def pc_to_ss(pc: Mapping[tuple[Partition, Partition], Fraction], k: int) -> dict[tuple[Partition, Partition], Fraction]:
    """Change basis p (x) class-indicator -> s (x) s for an arity-k second slot."""
    by_class: dict[Partition, dict[Partition, Fraction]] = {}
    for (r1, cls), v in pc.items():
        by_class.setdefault(cls, {})[r1] = v
    out: dict[tuple[Partition, Partition], Fraction] = {}
    for cls, inner in by_class.items():
        s1 = p_to_s(inner)
        for nu in partitions(k):
            w = Fraction(character(nu, cls), z(cls))
            if not w:
                continue
            for mu, a in s1.items():
                out[(mu, nu)] = out.get((mu, nu), 0) + a * w
    return {kk: v for kk, v in out.items() if v}


# ------------------------------------------------------------ text form


def _fmt_deg(N: int, dd: int, var: str = "t") -> str:
    return f"{var}^{N}" if dd == 0 else f"{var}^{N},{dd}"


def pair_text(pairs: Mapping[tuple[Partition, Partition], Fraction], left: str = "s", right: str = "s") -> str:
    if not pairs:
        return "0"
    items = sorted(pairs.items(), key=lambda kv: (sort_key(kv[0][0]), sort_key(kv[0][1])))
    return "; ".join(
        f"{c} {left}[{','.join(map(str, mu))}] (x) {right}[{','.join(map(str, nu))}]" for (mu, nu), c in items
    )


def parse_pair_text(text: str) -> dict[tuple[Partition, Partition], Fraction]:
    text = text.strip()
    if text == "0":
        return {}
    out: dict[tuple[Partition, Partition], Fraction] = {}
    pat = re.compile(r"^\s*(-?\d+(?:/\d+)?)\s+\w+\[([0-9,]*)\]\s+\(x\)\s+\w+\[([0-9,]*)\]\s*$")
    for chunk in text.split(";"):
        m = pat.match(chunk)
        if not m:
            raise ValueError(f"cannot parse {chunk!r}")
        c, a, b = m.groups()
        mu = make_partition(int(x) for x in a.split(",") if x)
        nu = make_partition(int(x) for x in b.split(",") if x)
        out[(mu, nu)] = out.get((mu, nu), 0) + Fraction(c)
    return out


def series_text(F: Series) -> str:
    from .symfunc import to_text

    lines = [f"truncation {F.trunc}"]
    for N, dd in F.degrees():
        if isinstance(F, GradedSym):
            body = to_text(F.coefficient((N, dd)))
        else:
            body = pair_text(F.coefficient((N, dd)))
        lines.append(f"{_fmt_deg(N, dd)} : {body}")
    return "\n".join(lines) + "\n"


def parse_series_text(text: str, kind: str = "graded", **shape) -> Series:
    from .symfunc import from_text

    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    m = re.match(r"truncation\s+(-?\d+)", lines[0])
    if not m:
        raise ValueError("missing truncation header")
    trunc = int(m.group(1))
    terms: dict = {}
    for ln in lines[1:]:
        head, body = ln.split(":", 1)
        dm = re.match(r"\s*t\^(-?\d+)(?:,(-?\d+))?\s*$", head)
        if not dm:
            raise ValueError(f"bad degree {head!r}")
        d = (int(dm.group(1)), int(dm.group(2) or 0))
        terms[d] = from_text(body) if kind == "graded" else parse_pair_text(body)
    if kind == "graded":
        return GradedSym(terms, trunc=trunc, **shape)
    return BiGradedSeries(terms, trunc=trunc, **shape)


def substitute_degree(F: Series, a: int = 1, b: int = 0, sign: Callable[[Key], int] | None = None) -> Series:
    """Re-grade N -> a N + b on every term, multiplying by sign(key) when given."""
    def fn(k: Key):
        mult = sign(k) if sign else 1
        return ((a * k[0] + b, k[1], *k[2:]), Fraction(mult))

    return F.regrade(fn)


def koszul_substitution(F: Series) -> Series:
    """(t, r) -> (t, -r t^{-1}) where the defect counts the weight r: drops the defect, sign (-1)^defect."""
    return F.regrade(lambda k: ((k[0], 0, *k[2:]), Fraction(-1 if k[1] % 2 else 1)))


def negate_variable(F: Series) -> Series:
    """x -> -x on the degree variable."""
    return F.regrade(lambda k: (k, Fraction(-1 if k[0] % 2 else 1)))


def series_from_symelems(terms: Mapping[int, SymElem], trunc: int, unit_parity: int = 1,
                         wmax: int | None = None) -> GradedSym:
    return GradedSym(terms, trunc=trunc, wmax=wmax, unit_parity=unit_parity)


def total(parts: Iterable[Series]) -> Series:
    parts = list(parts)
    out = parts[0].like()
    for p_ in parts:
        out = out + p_
    return out
