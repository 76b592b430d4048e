"""DOT export of the left-divisibility order on simples."""

from __future__ import annotations

from typing import TextIO

from .table import GarsideTable


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def hasse_dot(table: GarsideTable) -> str:
    lines = [f"digraph {_quote(table.name or 'garside')} {{", "  rankdir=BT;"]
    for s in range(len(table)):
        lines.append(f"  n{s} [label={_quote(table.render(s))}];")
    for u, w in table.covers():
        lines.append(f"  n{u} -> n{w};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_hasse(table: GarsideTable, sink: TextIO) -> str:
    text = hasse_dot(table)
    sink.write(text)
    return text
