"""Text formats: coloring certificates, DOT export and sweep tables.

Certificate format (``ramsey-coloring v1``)::

    ramsey-coloring v1
    n=<n> t=<t>
    <u> <v> <c>        one line per edge, u < v, lexicographic order

Every edge of ``K_n`` appears exactly once.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .core import Coloring, ColoringError, DerivationTrace, edge_index

HEADER = "ramsey-coloring v1"
_SIZE_RE = re.compile(r"^n=(\d+) t=(\d+)$")
_EDGE_RE = re.compile(r"^(\d+) (\d+) (\d+)$")

# DOT palette, indexed by color - 1; colors past the palette reuse it with a dashed, then dotted style.
PALETTE = ("red", "blue", "green3", "orange", "purple", "brown", "magenta", "cyan", "gray40", "gold")
STYLES = ("solid", "dashed", "dotted")


class CertificateError(ValueError):
    pass


class ParseError(CertificateError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class ValidationError(CertificateError):
    pass


def format_coloring(c: Coloring) -> str:
    lines = [HEADER, f"n={c.n} t={c.t}"]
    lines.extend(f"{u} {v} {col}" for u, v, col in c.edges())
    return "\n".join(lines) + "\n"


def write_coloring(c: Coloring, path: str | Path) -> None:
    Path(path).write_text(format_coloring(c))


def parse_coloring(text: str) -> Coloring:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != HEADER:
        raise ParseError(1, f"expected header {HEADER!r}")
    if len(lines) < 2:
        raise ParseError(2, "missing size line 'n=<n> t=<t>'")
    size = _SIZE_RE.match(lines[1])
    if not size:
        raise ParseError(2, f"malformed size line {lines[1]!r}")
    n, t = int(size.group(1)), int(size.group(2))
    if t < 1:
        raise ValidationError(f"palette size must be >= 1, got t={t}")
    expected = n * (n - 1) // 2
    colors: list[int] = []
    for offset, line in enumerate(lines[2:]):
        lineno = offset + 3
        m = _EDGE_RE.match(line)
        if not m:
            raise ParseError(lineno, f"malformed edge line {line!r}")
        u, v, col = (int(g) for g in m.groups())
        if not (u < v < n):
            raise ValidationError(f"line {lineno}: edge ({u}, {v}) is not a pair u < v < n={n}")
        if not 1 <= col <= t:
            raise ValidationError(f"line {lineno}: color {col} outside 1..{t}")
        idx = edge_index(n, u, v)
        if idx < len(colors):
            raise ParseError(lineno, f"duplicate or out-of-order edge ({u}, {v})")
        if idx > len(colors):
            gap = next((a, b) for a in range(n) for b in range(a + 1, n)
                       if edge_index(n, a, b) == len(colors))
            raise ParseError(lineno, f"missing edge {gap}")
        colors.append(col)
    if len(colors) != expected:
        gap = next((a, b) for a in range(n) for b in range(a + 1, n)
                   if edge_index(n, a, b) == len(colors))
        raise ParseError(len(lines) + 1, f"missing edge {gap}")
    try:
        return Coloring(n, t, tuple(colors))
    except ColoringError as exc:
        raise ValidationError(str(exc)) from exc


def read_coloring(path: str | Path) -> Coloring:
    return parse_coloring(Path(path).read_text())


def export_dot(c: Coloring, name: str = "coloring") -> str:
    """Graphviz text; each edge carries the palette color, style and numeric label of its color."""
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    lines.extend(f"  {v};" for v in range(c.n))
    for u, v, col in c.edges():
        lines.append(f'  {u} -- {v} [color="{dot_color(col)}", style="{dot_style(col)}", '
                     f'label="{col}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def dot_color(col: int) -> str:
    return PALETTE[(col - 1) % len(PALETTE)]


def dot_style(col: int) -> str:
    return STYLES[((col - 1) // len(PALETTE)) % len(STYLES)]


def format_trace(trace: DerivationTrace) -> str:
    return "\n".join(trace.lines()) + "\n"


@dataclass(frozen=True)
class SweepRow:
    t: int
    stars: tuple[int, ...]
    s: int | None
    value: int
    rule: str
    oracle: str = "-"
    oracle_status: str = "-"
    agreement: str = "-"


TABLE_COLUMNS = ("t", "stars", "s", "R", "rule", "oracle", "oracle_status", "agreement")


def emit_table(rows: Sequence[SweepRow]) -> str:
    """Comma-delimited table, no quoting; stars are joined with ``-``."""
    if not rows:
        raise ValueError("sweep produced no rows")
    out = [",".join(TABLE_COLUMNS)]
    for r in rows:
        fields = (r.t, "-".join(map(str, r.stars)), "-" if r.s is None else r.s, r.value, r.rule,
                  r.oracle, r.oracle_status, r.agreement)
        out.append(",".join(str(f) for f in fields))
    return "\n".join(out) + "\n"
