"""Text, CSV and JSON renderings of the tables.

Text output keeps one table row per line, with the T- and l-monomials spelled
out, so tables can be diffed line by line.  Row order is always weight first, then reverse
lexicographic.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .bands import BandReport
from .dk import CoeffFamily, X1Result
from .partitions import Partition, make_partition, sort_key
from .symfunc import SymElem

FORMATS = ("text", "csv", "json")


def fmt_partition(lam: Partition) -> str:
    """(2, 1, 1) -> '(2,1^2)'; the empty partition is '(0)'."""
    if not lam:
        return "(0)"
    chunks, i = [], 0
    while i < len(lam):
        j = i
        while j < len(lam) and lam[j] == lam[i]:
            j += 1
        chunks.append(str(lam[i]) if j - i == 1 else f"{lam[i]}^{j - i}")
        i = j
    return "(" + ",".join(chunks) + ")"


def parse_row(text: str) -> Partition:
    """Accept '0', '()', '2,1,1', '(2,1^2)' or '2 1 1'."""
    body = text.strip().strip("()").replace(" ", ",")
    parts: list[int] = []
    for chunk in body.split(","):
        if not chunk:
            continue
        if "^" in chunk:
            a, b = chunk.split("^")
            parts += [int(a)] * int(b)
        else:
            parts.append(int(chunk))
    if any(x < 0 for x in parts):
        raise ValueError(f"bad partition {text!r}")
    return make_partition(parts)


def _num(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _coef(c) -> str:
    return "" if c == 1 else f"{_num(c)} "


# ------------------------------------------------------------ Lie table


def lie_rows(table: dict[int, SymElem]) -> list[dict]:
    return [
        {"s": s, "terms": [{"lambda": list(lam), "mult": _num(c)} for lam, c in f.items()]}
        for s, f in sorted(table.items())
    ]


def lie_text(table: dict[int, SymElem]) -> str:
    lines = []
    for s, f in sorted(table.items()):
        body = " + ".join(f"{'' if c == 1 else _num(c)}{fmt_partition(lam)}" for lam, c in f.items())
        lines.append(f"{s} : {body}")
    return "\n".join(lines) + "\n"


# ------------------------------------------------------- T-series tables


def family_rows(fam: CoeffFamily, k: int, rows: list[Partition], N_max: int | None = None) -> dict:
    out = {}
    for lam in rows:
        cell = {N: v for N, v in fam.row(lam, k).items() if N_max is None or N <= N_max}
        out[lam] = dict(sorted(cell.items()))
    return out


def t_cell_text(cell: dict[int, dict[Partition, Fraction]]) -> str:
    terms = []
    for N in sorted(cell):
        for mu, c in sorted(cell[N].items(), key=lambda kv: sort_key(kv[0])):
            terms.append(f"{_coef(c)}T^{N} s[{','.join(map(str, mu))}]")
    return " + ".join(terms) if terms else "0"


def t_table(rows: dict, fmt: str, k: int) -> str:
    if fmt == "text":
        return "".join(f"{fmt_partition(lam)}: {t_cell_text(cell)}\n" for lam, cell in rows.items())
    records = []
    for lam, cell in rows.items():
        for N in sorted(cell):
            for mu, c in sorted(cell[N].items(), key=lambda kv: sort_key(kv[0])):
                records.append({"lambda": fmt_partition(lam), "k": k, "T_exp": N,
                                "mu": fmt_partition(mu), "mult": _num(c)})
    return _records(records, ["lambda", "k", "T_exp", "mu", "mult"], fmt)


# ----------------------------------------------------------------- bands


def band_cell_text(cell: dict[tuple[int, int], int]) -> str:
    terms = []
    for (te, le), c in sorted(cell.items(), key=lambda kv: kv[0][1]):
        if le == 1:
            mono = "t*l"
        elif te == 0:
            mono = f"l^{le}"
        else:
            mono = f"t^{te} l^{le}"
        terms.append(f"{_coef(c)}{mono}")
    return " + ".join(terms) if terms else "0"


def band_table(band: BandReport, fmt: str, rows: list[Partition] | None = None) -> str:
    keys = rows if rows is not None else list(band.rows)
    if fmt == "text":
        lines = [f"band {band.r} n={band.n_parity} reflection={band.parity:+d} min_g={band.min_g}"]
        for lam in keys:
            flag = " [UNCHECKED]" if lam in band.unchecked else ""
            euler = band.euler.get(lam, 0)
            lines.append(f"{fmt_partition(lam)}: {band_cell_text(band.row(lam))} | euler {euler}{flag}")
        return "\n".join(lines) + "\n"
    records = []
    for lam in keys:
        for (te, le), c in sorted(band.row(lam).items(), key=lambda kv: kv[0][1]):
            records.append({"lambda": fmt_partition(lam), "t_exp": te, "l_exp": le, "dim": c})
    return _records(records, ["lambda", "t_exp", "l_exp", "dim"], fmt)


# ---------------------------------------------------------- misc tables


def sym_text(f: SymElem) -> str:
    letter = f.basis
    terms = [f"{_coef(c)}{letter}[{','.join(map(str, lam))}]" for lam, c in f.items()]
    return " + ".join(terms) if terms else "0"


def haut_table(entries: list[dict], fmt: str) -> str:
    if fmt == "text":
        lines = []
        for e in entries:
            lines.append(
                f"s={e['s']} degree {e['s']}(n-1)+1 plain: {sym_text(e['plain'])} | invariants {e['plain_inv']}"
            )
            lines.append(f"s={e['s']} degree {e['s']}(n-1)+1 omega: {sym_text(e['omega'])} | invariants {e['omega_inv']}")
        return "\n".join(lines) + "\n"
    records = []
    for e in entries:
        for variant in ("plain", "omega"):
            for lam, c in e[variant].items():
                records.append({"s": e["s"], "variant": variant, "lambda": fmt_partition(lam), "mult": _num(c),
                                "invariants": e[f"{variant}_inv"]})
    return _records(records, ["s", "variant", "lambda", "mult", "invariants"], fmt)


def x1_table(res: X1Result, fmt: str) -> str:
    if fmt == "text":
        lines = [f"n={res.n_parity}"]
        if res.warning:
            lines.append(f"warning: {res.warning}")
        for N in sorted(res.P_pre):
            lines.append(f"P x^{N} (before D): {sym_text(res.P_pre[N])}")
        for N in sorted(res.P):
            lines.append(f"P x^{N}: {sym_text(res.P[N])}")
        for N in sorted(res.Q):
            lines.append(f"Q x^{N}: {sym_text(res.Q[N])}")
        return "\n".join(lines) + "\n"
    records = []
    for name, series in (("P", res.P), ("Q", res.Q)):
        for N in sorted(series):
            for lam, c in series[N].items():
                records.append({"series": name, "x_exp": N, "lambda": fmt_partition(lam), "mult": _num(c)})
    return _records(records, ["series", "x_exp", "lambda", "mult"], fmt)


def _records(records: list[dict], columns: list[str], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(records, indent=1) + "\n"
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    writer.writerows(records)
    return buf.getvalue()
