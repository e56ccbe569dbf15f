from __future__ import annotations

import sys
from math import comb
from typing import TextIO

from core.accessors import get_debugger, get_event_bus
from core.errors import CopositivityError, WorkLimitExceeded
from enums.exit_code import ExitCode
from enums.matrix_kind import MatrixKind
from events.frontier_level_event import FrontierLevelEvent
from factories.matrix_factory import MatrixFactory
from matrix.symmetric_matrix import evaluate_quadratic
from matrix.rational import format_rational
from polytope.label import parse_label
from polytope.subdivision import vmatrix
from systems.copositivity_system import CopositivitySystem
from systems.witness_system import witness_failure_reason
from ui.matrix_file import read_matrix_file, read_vector_file, write_matrix_file
from ui.report import (
    build_report,
    render_json,
    render_stats,
    render_subdivision,
    render_verdict,
    subdivision_document,
)


def report_error(message: str) -> ExitCode:
    get_debugger().error(message)
    print(f"error: {message}", file=sys.stderr)
    return ExitCode.INPUT_ERROR


def _log_level(event: FrontierLevelEvent):
    get_debugger().log(
        f"frontier at depth {event.depth}: {event.frontier_size} matrices "
        f"({event.dropped_nonnegative} settled, "
        f"{event.dropped_duplicates} duplicates)"
    )


def cmd_check(
    path: str,
    strict: bool = False,
    as_json: bool = False,
    stats: bool = False,
    max_work: int | None = None,
    parallel: bool = False,
    dedup: bool = False,
    accept_decimal: bool = False,
    symmetrize: bool = False,
    out: TextIO | None = None,
) -> ExitCode:
    """
    Decide (strict) copositivity of the matrix stored at path.

    Returns:
        ExitCode: POSITIVE, NEGATIVE, INPUT_ERROR or WORK_LIMIT
    """
    out = out or sys.stdout
    try:
        a = read_matrix_file(
            path, accept_decimal=accept_decimal, repair_asymmetry=symmetrize
        )
        system = CopositivitySystem.from_config(
            work_cap=max_work, parallel=parallel or None, dedup=dedup or None
        )
    except CopositivityError as error:
        return report_error(str(error))

    try:
        with get_event_bus().listening(FrontierLevelEvent, _log_level):
            verdict = system.check(a, strict=strict)
    except WorkLimitExceeded as error:
        get_debugger().warning(str(error))
        print(f"error: {error}", file=sys.stderr)
        if as_json:
            document = {
                "verdict": "work limit exceeded",
                "stats": error.stats.as_dict(),
            }
            print(render_json(document), file=out)
        else:
            print("work limit exceeded", file=out)
            if stats:
                lines = render_stats(error.stats.as_dict(), a.order)
                print("\n".join(lines), file=out)
        return ExitCode.WORK_LIMIT

    if as_json:
        print(render_json(build_report(verdict, a.order, strict)), file=out)
    else:
        print(render_verdict(verdict, a.order, with_stats=stats), file=out)
    return ExitCode.NEGATIVE if verdict.kind.is_negative else ExitCode.POSITIVE


def cmd_subdivide(
    label_text: str,
    as_json: bool = False,
    stats: bool = False,
    out: TextIO | None = None,
) -> ExitCode:
    """
    Print the simplices of a label's subdivision in canonical order.
    """
    out = out or sys.stdout
    try:
        label = parse_label(label_text)
    except CopositivityError as error:
        return report_error(str(error))
    simplices = vmatrix(label)
    if as_json:
        print(render_json(subdivision_document(label, simplices)), file=out)
    else:
        print(render_subdivision(label, simplices), file=out)
    if stats:
        expected = comb(label.s + label.t - 1, label.s)
        print(
            f"expected binomial({label.s + label.t - 1},{label.s}) = {expected}",
            file=out,
        )
    return ExitCode.POSITIVE


def cmd_verify_witness(
    matrix_path: str,
    witness_path: str,
    strict: bool = False,
    accept_decimal: bool = False,
    out: TextIO | None = None,
) -> ExitCode:
    """
    Check a witness against a matrix and print its exact quadratic value.

    Returns:
        ExitCode: POSITIVE when the witness is valid, NEGATIVE when it is not,
            INPUT_ERROR on unreadable input or a length mismatch
    """
    out = out or sys.stdout
    try:
        a = read_matrix_file(matrix_path, accept_decimal=accept_decimal)
        x = read_vector_file(witness_path, accept_decimal=accept_decimal)
        reason = witness_failure_reason(a, x, strict)
    except CopositivityError as error:
        return report_error(str(error))
    print(f"value: {format_rational(evaluate_quadratic(a, x))}", file=out)
    if reason is None:
        print("valid witness", file=out)
        return ExitCode.POSITIVE
    print(f"invalid witness: {reason}", file=out)
    return ExitCode.NEGATIVE


def cmd_gen(kind: MatrixKind, n: int, seed: int, out_path: str) -> ExitCode:
    """
    Write a generated matrix file; the same (kind, n, seed) gives the same
    bytes.
    """
    try:
        a = MatrixFactory.create(kind, n, seed)
        write_matrix_file(a, out_path)
    except CopositivityError as error:
        return report_error(str(error))
    get_debugger().log(f"wrote {kind.value} matrix of order {a.order} to {out_path}")
    return ExitCode.POSITIVE
