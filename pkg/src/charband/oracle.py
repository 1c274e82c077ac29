"""Brute-force characters of small quadratic algebras, independent of the plethystic pipeline.

Two explicit computations, both restricted to the part that is multilinear in
s distinct basis vectors e_1..e_s of H, so that permuting those labels gives the
S_s-action whose Frobenius characteristic is the GL(H)-character:

* quadratic_lie_piece: the graded Lie algebra on t_ij (i < j) and a^(v)_e with
  the relations of the associated graded extended Drinfel'd-Kohno algebra,
  computed inside the free associative algebra as span of Lyndon brackets
  modulo the two-sided ideal of the relations.
* kt_piece: the Kriz-Totaro algebra for n odd, an exterior algebra on x_ij and
  alpha^(v)_e modulo the Arnold relations, x_ij alpha^(i) = x_ij alpha^(j) and
  alpha^(v) beta^(v) = 0.

Linear algebra is done with sparse rows modulo a large prime.  Traces are
integers bounded by the dimension, so they are recovered exactly.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations, product

from .partitions import Partition, character, partitions, z

PRIME = (1 << 61) - 1


def _lift(x: int) -> int:
    x %= PRIME
    return x - PRIME if x > PRIME // 2 else x


class _Echelon:
    """Sparse row echelon form; reduce() returns a canonical normal form."""

    def __init__(self):
        self.rows: dict[int, dict[int, int]] = {}

    def reduce(self, v: dict[int, int]) -> dict[int, int]:
        v = {c: x % PRIME for c, x in v.items() if x % PRIME}
        while True:
            hits = [c for c in v if c in self.rows]
            if not hits:
                return v
            c = min(hits)
            f = v[c]
            for cc, x in self.rows[c].items():
                y = (v.get(cc, 0) - f * x) % PRIME
                if y:
                    v[cc] = y
                else:
                    v.pop(cc, None)

    def add(self, v: dict[int, int]) -> int | None:
        v = self.reduce(v)
        if not v:
            return None
        c = min(v)
        inv = pow(v[c], PRIME - 2, PRIME)
        self.rows[c] = {cc: x * inv % PRIME for cc, x in v.items()}
        return c

    def decompose(self, v: dict[int, int]) -> dict[int, int]:
        """Coefficients of v (already reduced modulo any lower echelon) on these rows."""
        v = dict(v)
        coeffs: dict[int, int] = {}
        while True:
            hits = [c for c in v if c in self.rows]
            if not hits:
                break
            c = min(hits)
            f = v[c]
            coeffs[c] = f
            for cc, x in self.rows[c].items():
                y = (v.get(cc, 0) - f * x) % PRIME
                if y:
                    v[cc] = y
                else:
                    v.pop(cc, None)
        return coeffs


def _class_reps(n: int) -> dict[Partition, tuple[int, ...]]:
    """One permutation (as a tuple image) of each cycle type."""
    out = {}
    for rho in partitions(n):
        perm, start = list(range(n)), 0
        for part in rho:
            for i in range(part):
                perm[start + i] = start + (i + 1) % part
            start += part
        out[rho] = tuple(perm)
    return out


def decompose_traces(traces: dict[tuple[Partition, Partition], int], s: int, k: int) -> dict[tuple[Partition, Partition], Fraction]:
    """Turn traces on class pairs into multiplicities of S^mu (x) S^nu."""
    out = {}
    for mu in partitions(s):
        for nu in partitions(k):
            tot = Fraction(0)
            for (r1, r2), tr in traces.items():
                tot += Fraction(tr * character(mu, r1) * character(nu, r2), z(r1) * z(r2))
            if tot:
                out[(mu, nu)] = tot
    return out


# ---------------------------------------------------------------- Lie side


def _lie_letters(k: int, s: int):
    tl = [("t", i, j) for i, j in combinations(range(k), 2)]
    al = [("a", v, e) for e in range(s) for v in range(k)]
    return tl, al


def _t(i: int, j: int):
    return ("t", min(i, j), max(i, j))


def _lie_relations(k: int, s: int):
    rels = []

    def br(x, y):
        return [(1, (x, y)), (-1, (y, x))]

    tl, al = _lie_letters(k, s)
    for x, y in combinations(tl, 2):
        if not {x[1], x[2]} & {y[1], y[2]}:
            rels.append(br(x, y))
    for i, j in combinations(range(k), 2):
        for m in range(k):
            if m in (i, j):
                continue
            rels.append(br(_t(i, j), _t(i, m)) + br(_t(i, j), _t(j, m)))
        for e in range(s):
            for r in range(k):
                if r not in (i, j):
                    rels.append(br(_t(i, j), ("a", r, e)))
            rels.append(br(_t(i, j), ("a", i, e)) + br(_t(i, j), ("a", j, e)))
    for e, f in permutations(range(s), 2):
        for v, w in permutations(range(k), 2):
            if e < f:
                rels.append(br(("a", v, e), ("a", w, f)))
    return rels


def _words(k: int, s: int, j: int) -> list[tuple]:
    tl, _ = _lie_letters(k, s)
    m = j + s
    out = []
    for pos in permutations(range(m), s):
        for verts in product(range(k), repeat=s):
            for ts in product(tl, repeat=j):
                w = [None] * m
                for e in range(s):
                    w[pos[e]] = ("a", verts[e], e)
                it = iter(ts)
                for i in range(m):
                    if w[i] is None:
                        w[i] = next(it)
                out.append(tuple(w))
    return out


def _is_lyndon(w: tuple) -> bool:
    return all(w < w[i:] for i in range(1, len(w)))


def _bracket_poly(w: tuple) -> dict[tuple, int]:
    """Standard bracketing of a Lyndon word, expanded in the free associative algebra."""
    if len(w) == 1:
        return {w: 1}
    for i in range(1, len(w)):
        if _is_lyndon(w[i:]):
            u, v = w[:i], w[i:]
            break
    pu, pv = _bracket_poly(u), _bracket_poly(v)
    out: dict[tuple, int] = {}
    for a, x in pu.items():
        for b, y in pv.items():
            out[a + b] = out.get(a + b, 0) + x * y
            out[b + a] = out.get(b + a, 0) - x * y
    return {kk: v for kk, v in out.items() if v}


def _act_lie(letter, sigma, pi):
    if letter[0] == "t":
        return _t(sigma[letter[1]], sigma[letter[2]])
    return ("a", sigma[letter[1]], pi[letter[2]])


def quadratic_lie_piece(k: int, s: int, j: int) -> dict[tuple[Partition, Partition], Fraction]:
    """S_s x S_k decomposition of the piece with j letters t and labels e_1..e_s once each.

    For n odd this is gr t(s, k) in normalized degree 2j + s.
    """
    words = _words(k, s, j)
    index = {w: i for i, w in enumerate(words)}
    m = j + s
    rels = _lie_relations(k, s)
    lead: dict[tuple, list] = {}
    for r in rels:
        lead.setdefault(r[0][1], []).append(r)
    ideal = _Echelon()
    if m >= 2:
        for w in words:
            for p in range(m - 1):
                for r in lead.get((w[p], w[p + 1]), ()):
                    vec: dict[int, int] = {}
                    for c, pair in r:
                        ww = w[:p] + pair + w[p + 2:]
                        vec[index[ww]] = vec.get(index[ww], 0) + c
                    ideal.add(vec)
    lie = _Echelon()
    for w in words:
        if not _is_lyndon(w):
            continue
        vec = {index[u]: c for u, c in _bracket_poly(w).items()}
        lie.add(ideal.reduce(vec))
    traces = {}
    reps_s, reps_k = _class_reps(s), _class_reps(k)
    for r1, pi in reps_s.items():
        for r2, sigma in reps_k.items():
            tr = 0
            for c, row in lie.rows.items():
                img: dict[int, int] = {}
                for col, x in row.items():
                    ww = tuple(_act_lie(l, sigma, pi) for l in words[col])
                    img[index[ww]] = (img.get(index[ww], 0) + x) % PRIME
                tr += lie.decompose(ideal.reduce(img)).get(c, 0)
            traces[(r1, r2)] = _lift(tr)
    return decompose_traces(traces, s, k)


# ----------------------------------------------------------- Kriz-Totaro side


def _kt_gens(k: int, s: int):
    xs = [("x", i, j) for i, j in combinations(range(k), 2)]
    al = [("a", v, e) for e in range(s) for v in range(k)]
    return xs + al


def _normal(mono: list) -> tuple[int, tuple] | None:
    """Sort a product of odd generators; return (sign, sorted) or None when it vanishes."""
    arr = list(mono)
    if len(set(arr)) < len(arr):
        return None
    sign = 1
    for i in range(len(arr)):
        for jj in range(len(arr) - 1 - i):
            if arr[jj] > arr[jj + 1]:
                arr[jj], arr[jj + 1] = arr[jj + 1], arr[jj]
                sign = -sign
    return sign, tuple(arr)


def _x(i: int, j: int):
    return ("x", min(i, j), max(i, j))


def _kt_monomials(k: int, s: int, j: int) -> list[tuple]:
    xs = [("x", a, b) for a, b in combinations(range(k), 2)]
    out = []
    for xsub in combinations(xs, j):
        for verts in product(range(k), repeat=s):
            mono = list(xsub) + [("a", verts[e], e) for e in range(s)]
            out.append(tuple(sorted(mono)))
    return out


def _kt_relations(k: int, s: int):
    rels = []
    for a, b, c in combinations(range(k), 3):
        rels.append([(1, (_x(a, b), _x(b, c))), (1, (_x(b, c), _x(c, a))), (1, (_x(c, a), _x(a, b)))])
    for a, b in combinations(range(k), 2):
        for e in range(s):
            rels.append([(1, (_x(a, b), ("a", a, e))), (-1, (_x(a, b), ("a", b, e)))])
    for v in range(k):
        for e, f in combinations(range(s), 2):
            rels.append([(1, (("a", v, e), ("a", v, f)))])
    return rels


def kt_piece(k: int, s: int, j: int) -> dict[tuple[Partition, Partition], Fraction]:
    """S_s x S_k decomposition of the Kriz-Totaro piece with j classes x and s labels (n odd)."""
    monos = _kt_monomials(k, s, j)
    index = {mm: i for i, mm in enumerate(monos)}
    ideal = _Echelon()
    rels = _kt_relations(k, s)
    gens = _kt_gens(k, s)
    # multiply each relation by every monomial that completes it to the target multidegree
    for r in rels:
        letters = r[0][1]
        nx = sum(1 for g in letters if g[0] == "x")
        labels = {g[2] for g in letters if g[0] == "a"}
        rest_labels = [e for e in range(s) if e not in labels]
        if nx > j:
            continue
        xs = [g for g in gens if g[0] == "x"]
        for xsub in combinations(xs, j - nx):
            for verts in product(range(k), repeat=len(rest_labels)):
                m = list(xsub) + [("a", verts[i], e) for i, e in enumerate(rest_labels)]
                vec: dict[int, int] = {}
                for c, pair in r:
                    res = _normal(list(pair) + m)
                    if res is None:
                        continue
                    sg, key = res
                    vec[index[key]] = vec.get(index[key], 0) + c * sg
                if vec:
                    ideal.add(vec)
    basis = [i for i in range(len(monos)) if i not in ideal.rows]
    traces = {}
    for r1, pi in _class_reps(s).items():
        for r2, sigma in _class_reps(k).items():
            tr = 0
            for i in basis:
                img = []
                for g in monos[i]:
                    img.append(_x(sigma[g[1]], sigma[g[2]]) if g[0] == "x" else ("a", sigma[g[1]], pi[g[2]]))
                sg, key = _normal(img)
                tr += ideal.reduce({index[key]: sg}).get(i, 0)
            traces[(r1, r2)] = _lift(tr)
    return decompose_traces(traces, s, k)
