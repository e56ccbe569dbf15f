from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from components.traced_matrix import LineageStep, TracedMatrix
from core.accessors import get_debugger
from core.errors import DimensionMismatch, WitnessLiftFailure
from enums.branch import Branch
from matrix.rational import ONE, ZERO, to_rational
from matrix.symmetric_matrix import (
    NormalizedForm,
    SymmetricMatrix,
    dot,
    evaluate_quadratic,
    scale_diag_conjugate,
)


def witness_failure_reason(
    a: SymmetricMatrix, x: Sequence, strict: bool = False
) -> str | None:
    """
    Explain why x does not certify a negative verdict for a.

    Raises:
        DimensionMismatch: len(x) differs from the order of a

    Returns:
        str | None: the reason, or None when x is a valid witness
    """
    if len(x) != a.order:
        raise DimensionMismatch(
            f"witness has {len(x)} entries, matrix has order {a.order}"
        )
    vector = tuple(to_rational(value) for value in x)
    if any(value < 0 for value in vector):
        return "not in simplex"
    if sum(vector) != 1:
        return "coordinates do not sum to 1"
    value = evaluate_quadratic(a, vector)
    if value < 0 or (strict and value == 0):
        return None
    if strict:
        return "quadratic value is positive"
    return "quadratic value is not negative"


def verify_witness(a: SymmetricMatrix, x: Sequence, strict: bool = False) -> bool:
    """
    True iff x >= 0, sum(x) = 1 and x^T a x < 0 (<= 0 when strict), all exact.
    A unit-sum nonnegative vector is never zero.
    """
    return witness_failure_reason(a, x, strict) is None


def normalize_to_simplex(x: Sequence[Fraction]) -> tuple[Fraction, ...]:
    total = sum(x, ZERO)
    if total <= 0:
        raise WitnessLiftFailure("cannot rescale a zero or negative vector to unit sum")
    return tuple(value / total for value in x)


def _first_coordinate(form: NormalizedForm, y: Sequence[Fraction]) -> Fraction:
    """
    Pick x1 so that (x1, y) is negative (non-positive for the strict loop) for
    the normalized parent, given y^T B y < 0 (<= 0) and sign_vector . y <= 0.
    """
    alpha11 = form.alpha11
    signed_sum = dot(form.sign_vector, y)
    if alpha11 > 0:
        # alpha11 * Q(x1, y) = (alpha11 * x1 + signed_sum)^2 + y^T B y
        if signed_sum > 0:
            raise WitnessLiftFailure("lifted point lies outside the negative half")
        return -signed_sum / alpha11
    if alpha11 == 0:
        # Q(x1, y) = 2 * x1 * signed_sum + y^T (D A2 D) y, with signed_sum < 0
        if signed_sum >= 0:
            raise WitnessLiftFailure("zero corner but the lifted point is not negative")
        bound = abs(evaluate_quadratic(form.scaled_tail, y)) / (2 * abs(signed_sum))
        return _smallest_power_of_two_above(bound)
    raise WitnessLiftFailure(f"a matrix with corner {alpha11} was projected")


def _smallest_power_of_two_above(bound: Fraction) -> Fraction:
    """
    Smallest 2^k, k any integer, strictly greater than bound; 1 for a zero
    bound, where every positive x1 works.
    """
    x1 = ONE
    if bound > 0:
        while x1 / 2 > bound:
            x1 /= 2
    while x1 <= bound:
        x1 *= 2
    return x1


def _lift_step(step: LineageStep, v: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    form = step.parent_form
    if step.branch is Branch.A2:
        x_hat = (ZERO,) + v
    else:
        y = step.simplex.lift(v)
        x_hat = (_first_coordinate(form, y),) + y
    return (x_hat[0],) + tuple(d * value for d, value in zip(form.d_diag, x_hat[1:]))


def root_of(traced: TracedMatrix) -> SymmetricMatrix:
    """
    The matrix the lineage starts from, recovered by undoing the first
    normalization.
    """
    if not traced.lineage:
        return traced.matrix
    form = traced.lineage[0].parent_form
    undo = (ONE,) + tuple(ONE / d for d in form.d_diag)
    return scale_diag_conjugate(form.a_hat, undo)


def extract_witness(
    failing: TracedMatrix,
    local_witness: Sequence,
    strict: bool = False,
    root: SymmetricMatrix | None = None,
) -> tuple[Fraction, ...]:
    """
    Carry a certificate for a frontier matrix back to the root.

    Args:
        failing (TracedMatrix): frontier matrix with a certified non-positive
            value and its lineage
        local_witness (Sequence): nonnegative nonzero z with z^T K z < 0
            (<= 0 when strict) for K = failing.matrix
        strict (bool, optional): accept a zero value. Defaults to False.
        root (SymmetricMatrix, optional): root matrix, recovered from the
            lineage when omitted

    Raises:
        WitnessLiftFailure: the lifted vector fails exact verification

    Returns:
        tuple[Fraction, ...]: x >= 0 with sum 1 and x^T root x < 0 (<= 0)
    """
    v = tuple(to_rational(value) for value in local_witness)
    for step in reversed(failing.lineage):
        v = _lift_step(step, v)
    witness = normalize_to_simplex(v)
    root_matrix = root if root is not None else root_of(failing)
    reason = witness_failure_reason(root_matrix, witness, strict)
    if reason is not None:
        get_debugger().error(
            f"witness lift from depth {failing.depth} failed: {reason}",
            with_stack=True,
        )
        raise WitnessLiftFailure(f"lifted witness rejected: {reason}")
    return witness
