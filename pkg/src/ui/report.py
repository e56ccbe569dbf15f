"""
Report documents for the check command. The JSON layout is documented in
docs/report_schema.md; every rational is a "p/q" string.
"""

from __future__ import annotations

import json

from components.verdict import Verdict
from matrix.rational import format_rational
from polytope.label import PolytopeLabel, format_label
from polytope.vertex import SimplexVertexMatrix
from ui.matrix_file import format_vector

REPORT_KEYS = ("verdict", "strict", "order", "witness", "value", "stats")


def build_report(verdict: Verdict, order: int, strict: bool) -> dict:
    return {
        "verdict": verdict.kind.value,
        "strict": strict,
        "order": order,
        "witness": (
            None
            if verdict.witness is None
            else [format_rational(value) for value in verdict.witness]
        ),
        "value": None if verdict.value is None else format_rational(verdict.value),
        "stats": verdict.stats.as_dict(),
    }


def render_json(document: dict) -> str:
    return json.dumps(document, indent=2)


def render_verdict(verdict: Verdict, order: int, with_stats: bool = False) -> str:
    lines = [verdict.kind.value]
    if verdict.witness is not None:
        lines.append(f"witness: {format_vector(verdict.witness)}")
        lines.append(f"value: {format_rational(verdict.value)}")
    if with_stats:
        lines.extend(render_stats(verdict.stats.as_dict(), order))
    return "\n".join(lines)


def render_stats(stats: dict, order: int) -> list[str]:
    return [
        f"matrices processed: {stats['matricesProcessed']} "
        f"(work bound for n={max(order, 3)}: {stats['paperBound']})",
        f"max frontier size: {stats['maxFrontierSize']}",
        f"max depth: {stats['maxDepth']}",
        "level sizes: " + " ".join(str(size) for size in stats["levelSizes"]),
    ]


def subdivision_document(
    label: PolytopeLabel, simplices: list[SimplexVertexMatrix]
) -> dict:
    return {
        "label": format_label(label),
        "count": len(simplices),
        "simplices": [
            [str(vertex) for vertex in simplex.columns] for simplex in simplices
        ],
    }


def render_subdivision(
    label: PolytopeLabel, simplices: list[SimplexVertexMatrix]
) -> str:
    lines = [str(simplex) for simplex in simplices]
    noun = "simplex" if len(simplices) == 1 else "simplices"
    lines.append(f"{len(simplices)} {noun}")
    return "\n".join(lines)
