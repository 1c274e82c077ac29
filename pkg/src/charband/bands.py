"""E^1-page bands of the Bousfield-Kan spectral sequence, and consistency checks.

Row lambda of band r records, for each layer k = s + 1, the multiplicity of
V_lambda in that layer's contribution, as the monomial t^{1-s} l^{s+1}.
Layer 1 is the derivation Lie algebra; layer k >= 2 pairs the cohomology of
the configuration space with gr f over S_k.  Everything is computed for n odd;
n even is obtained by transposing every lambda, and a direct computation is
available for checking that.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .branching import group_for_parity, restrict
from .dk import CoeffFamily, conf_family, der_char, gr_f, gr_f_family, x1_series
from .partitions import Partition, sort_key, transpose
from .symfunc import SymElem, lr_product

MAX_BAND = 4


@dataclass
class FedererEntry:
    k: int
    t: int  # label weight of the configuration-space class
    N: int  # normalized degree of the gr f class
    units: int  # bk degree is units * (n - 1) + defect
    defect: int
    character: SymElem  # GL-level, s basis
    decomposition: SymElem  # sp or o basis
    provenance: list = field(default_factory=list)


@dataclass
class BandReport:
    r: int
    n_parity: str
    rows: dict  # lambda -> {(t_exp, l_exp): multiplicity}
    euler: dict  # lambda -> int
    parity: int  # eigenvalue of the reflection, (-1)^r
    min_g: int
    unchecked: set = field(default_factory=set)

    def row(self, lam: Partition) -> dict[tuple[int, int], int]:
        return self.rows.get(tuple(lam), {})

    def coefficients(self, lam: Partition) -> list[int]:
        """Multiplicities ordered by layer: [t l, l^2, t^-1 l^3, ...], trailing zeros dropped."""
        row = self.row(lam)
        top = max((le for _, le in row), default=0)
        return [row.get((2 - le, le), 0) for le in range(1, top + 1)]


def _pair(D: dict, F: dict) -> SymElem:
    """Sum over S_k-irreducibles nu of Hom(nu, D) (x) Hom(nu, F), multiplied at GL level."""
    by_nu_D: dict[Partition, SymElem] = {}
    for (mu, nu), c in D.items():
        by_nu_D[nu] = by_nu_D.get(nu, SymElem.zero("s")) + SymElem("s", {mu: c})
    out = SymElem.zero("s")
    for (mu, nu), c in F.items():
        if nu in by_nu_D:
            out = out + lr_product(by_nu_D[nu], SymElem("s", {mu: c}))
    return out


def _conf_for(n_parity: str, k: int) -> CoeffFamily:
    return conf_family(k, n_parity)


def _grf_for(k: int, N_max: int, n_parity: str) -> CoeffFamily:
    s_max = max(N_max - 2 * (k - 1), 0)
    return gr_f_family(k, s_max, N_max, n_parity)


def federer_layer(k: int, r: int, n_parity: str = "odd") -> list[FedererEntry]:
    """Contributions of layer k to band r, one entry per label weight t of the configuration class."""
    if k < 2:
        raise ValueError("federer_layer needs k >= 2; layer 1 is the derivation part")
    group = group_for_parity(n_parity)
    D = _conf_for(n_parity, k)
    F = _grf_for(k, r + k, n_parity)
    out = []
    for t in range(1, k + 1):
        Dt = D.get(t, k, t)
        if not Dt:
            continue
        N = r + t
        char = SymElem.zero("s")
        prov = []
        for s in range(0, N + 1):
            Fs = F.get(s, k, N)
            if not Fs:
                continue
            piece = _pair(Dt, Fs)
            if piece:
                char = char + piece
                prov.append(((t, k), (s, k, N)))
        if not char:
            continue
        out.append(FedererEntry(k, t, N, N - t, 2 - k, char, restrict(char, group), prov))
    return out


def _der_column(r: int, n_parity: str) -> SymElem:
    return restrict(der_char(r, "plain", n_parity), group_for_parity(n_parity))


def _compute_rows(r: int, n_parity: str) -> dict[Partition, dict[tuple[int, int], int]]:
    rows: dict[Partition, dict[tuple[int, int], int]] = {}

    def put(lam, key, c):
        if c:
            cell = rows.setdefault(lam, {})
            cell[key] = cell.get(key, 0) + int(c)

    for lam, c in _der_column(r, n_parity).terms.items():
        put(lam, (1, 1), c)
    for k in range(2, r + 3):
        for entry in federer_layer(k, r, n_parity):
            for lam, c in entry.decomposition.terms.items():
                put(lam, (2 - k, k), c)
    return {lam: {kk: v for kk, v in cell.items() if v} for lam, cell in rows.items() if any(cell.values())}


@lru_cache(maxsize=None)
def bk_band(r: int, n_parity: str = "odd", direct: bool = False) -> BandReport:
    """Band r of the E^1-page.  For n even the n-odd rows are transposed unless direct=True."""
    if not 1 <= r <= MAX_BAND:
        raise ValueError(f"band must be between 1 and {MAX_BAND}")
    if n_parity == "even" and not direct:
        base = bk_band(r, "odd")
        rows = {transpose(lam): dict(cell) for lam, cell in base.rows.items()}
        unchecked = {transpose(lam) for lam in base.unchecked}
    else:
        rows = _compute_rows(r, n_parity)
        unchecked = {lam for lam in rows if r == 4 and sum(lam) == 6}
    rows = dict(sorted(rows.items(), key=lambda kv: sort_key(kv[0])))
    euler = {lam: euler_characteristic(cell) for lam, cell in rows.items()}
    min_g = max((len(lam) for lam in rows), default=0) + 1
    return BandReport(r, n_parity, rows, euler, (-1) ** r, min_g, unchecked)


def euler_characteristic(cell: dict[tuple[int, int], int]) -> int:
    return sum(c * (-1) ** (le - 1) for (_, le), c in cell.items())


def suffix_sums(coeffs: list[int]) -> list[int]:
    """S_j = c_j - c_{j+1} + c_{j+2} - ... for every j."""
    out = [0] * len(coeffs)
    acc = 0
    for j in range(len(coeffs) - 1, -1, -1):
        acc = coeffs[j] - acc
        out[j] = acc
    return out


def cancellation_feasible(coeffs: list[int]) -> bool:
    """Can adjacent-column maps kill every entry past the first? True iff all suffix sums are >= 0."""
    return all(x >= 0 for x in suffix_sums(coeffs))


# ---------------------------------------------------------------- checks


@dataclass
class CheckResult:
    name: str
    passed: bool
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)


def _hand_values() -> list[tuple[int, Partition, int, dict]]:
    """Small gr f values that are easy to derive by hand: (k, lambda, N, {nu: mult})."""
    return [
        (2, (), 2, {(2,): 1}),
        (2, (1,), 3, {(1, 1): 1}),
        (2, (2,), 4, {(2,): 1}),
        (2, (1, 1), 4, {(1, 1): 1}),
        (3, (), 4, {(1, 1, 1): 1}),
        (3, (1,), 5, {(2, 1): 1}),
        (4, (), 6, {(2, 2): 1}),
    ]


def check_hand_values() -> CheckResult:
    res = CheckResult("hand computations", True)
    for k, lam, N, expected in _hand_values():
        got = gr_f(k, sum(lam), N).row(lam, k).get(N, {})
        got = {nu: int(c) for nu, c in got.items()}
        if got != expected:
            res.passed = False
            res.failures.append((lam, k, N, got, expected))
    return res


def check_top_degree(max_k: int = 5) -> CheckResult:
    """Lowest piece of gr f(0, k) against the explicit quadratic Lie algebra."""
    from .oracle import quadratic_lie_piece
    from .symfunc import SymElem as _S

    res = CheckResult("top-degree quadratic cross-check", True)
    for k in range(2, max_k + 1):
        N = 2 * (k - 1)
        # alternating sum over the oracle's gr t(0, k - j) pieces
        total: dict[Partition, Fraction] = {}
        for j in range(0, k - 1):
            piece = quadratic_lie_piece(k - j, 0, k - 1)
            left = _S("s", {nu: c for (_, nu), c in piece.items()})
            term = lr_product(left, _S.single("e", (j,) if j else ()))
            for nu, c in term.terms.items():
                total[nu] = total.get(nu, 0) + (-1) ** j * c
        oracle = {nu: c for nu, c in total.items() if c}
        got = gr_f(k, 0, N).row((), k).get(N, {})
        if got != oracle:
            res.passed = False
            res.failures.append(((), k, N, got, oracle))
        else:
            res.notes.append(f"k={k}: {len(oracle)} irreducibles agree")
    return res


def _free_lie_with_points(m: int, s_max: int, N_max: int) -> dict:
    """Frobenius character of the free Lie algebra on H[1] + Q^m[2] as GL x S_m data, keyed by N."""
    from .operads import free_lie_char
    from .partitions import partitions
    from .series import AritySeries

    raw = {}
    for cls in partitions(m):
        if s_max >= 1:
            raw[(1, 0, (1,), cls)] = Fraction(1)
        fixed = cls.count(1)
        if fixed:
            raw[(2, 0, (), cls)] = Fraction(fixed)
    gens = AritySeries(m, trunc=N_max, wmax=s_max, unit_parity=0, _raw=raw)
    free = free_lie_char(gens)
    return {N: free.coefficient((N, 0)) for N, _ in free.degrees()}


def restricted_free_part(k: int, s_max: int, N_max: int) -> dict:
    """The part of the free Lie algebra on H[1] + Q^{k-1}[2] in which every point letter occurs.

    Obtained by inclusion-exclusion: sum_j (-1)^j Ind(F(k - 1 - j) x sign_j).
    """
    out: dict[int, dict] = {}
    for j in range(0, k):
        F = _free_lie_with_points(k - 1 - j, s_max, N_max)
        ej = SymElem.single("e", (j,) if j else ())
        for N, pairs in F.items():
            for (mu, nu), c in pairs.items():
                for nu2, d in lr_product(SymElem("s", {nu: 1}), ej).terms.items():
                    cell = out.setdefault(N, {})
                    cell[(mu, nu2)] = cell.get((mu, nu2), 0) + (-1) ** j * c * d
    return {N: {kk: v for kk, v in cell.items() if v} for N, cell in out.items()}


def check_restriction(max_k: int = 6) -> CheckResult:
    """Restricting gr f(-, k) to S_{k-1} gives the free Lie piece in which every point letter occurs."""
    from .partitions import remove_box

    res = CheckResult("restriction to S_{k-1}", True)
    for k in range(2, max_k + 1):
        N_max = k + 4
        s_max = N_max - 2 * (k - 1)
        expected_all = restricted_free_part(k, s_max, N_max)
        F = gr_f(k, s_max, N_max)
        for N in range(1, N_max + 1):
            expected = {kk: v for kk, v in expected_all.get(N, {}).items() if sum(kk[0]) <= s_max}
            got: dict = {}
            for s in range(0, s_max + 1):
                for (mu, nu), c in F.get(s, k, N).items():
                    for nu2 in remove_box(nu):
                        got[(mu, nu2)] = got.get((mu, nu2), 0) + c
            got = {kk: v for kk, v in got.items() if v}
            if got != expected:
                res.passed = False
                res.failures.append((k, N, got, expected))
    return res


def q_multiplicities(n_parity: str = "odd", truncation: int = 3) -> dict[int, SymElem]:
    return x1_series(n_parity, truncation).Q


def check_cancellation(max_band: int = 4) -> CheckResult:
    """Suffix-sum feasibility for every nontrivial row, and Euler characteristics against Q for r <= 3."""
    res = CheckResult("cancellation and Euler characteristic", True)
    Q = q_multiplicities("odd", 3)
    for r in range(1, max_band + 1):
        band = bk_band(r)
        for lam, cell in band.rows.items():
            coeffs = band.coefficients(lam)
            if lam and not cancellation_feasible(coeffs):
                res.passed = False
                res.failures.append((lam, r, "suffix sums", coeffs))
            if r <= 3:
                want = Q.get(r, SymElem.zero("sp")).coeff(lam)
                if band.euler[lam] != want:
                    res.passed = False
                    res.failures.append((lam, r, "euler", band.euler[lam], want))
        if r <= 3:
            for lam, c in Q.get(r, SymElem.zero("sp")).terms.items():
                if lam not in band.rows and c:
                    res.passed = False
                    res.failures.append((lam, r, "euler", 0, c))
    return res


def verify_suite(max_k: int = 5, max_band: int = 4) -> list[CheckResult]:
    results = [check_hand_values(), check_top_degree(max_k), check_restriction(min(max_k + 1, 6))]
    results.append(check_cancellation(max_band))
    return results


# ----------------------------------------------------------- fourth band


@dataclass
class ChainComplexSummary:
    dims: tuple  # by increasing degree, from 4n - 9 up to 4n - 4
    degrees: tuple  # (units of n, offset) pairs
    euler: int
    eigenvalue: int


def fourth_band_complex(n_parity: str = "odd") -> ChainComplexSummary:
    band = bk_band(4, n_parity)
    coeffs = band.coefficients(())
    dims = tuple(reversed(coeffs))
    degrees = tuple((4, -4 - s) for s in reversed(range(len(coeffs))))
    return ChainComplexSummary(dims, degrees, band.euler.get((), 0), band.parity)
