from core.errors import WrongOrder
from matrix.symmetric_matrix import SymmetricMatrix


def closed_form_2x2(a: SymmetricMatrix) -> tuple[bool, bool]:
    """
    Classical criterion for a 2x2 matrix [[p, q], [q, r]]: copositive iff
    p >= 0, r >= 0 and (q >= 0 or q^2 <= p r); strictly copositive iff p > 0,
    r > 0 and (q >= 0 or q^2 < p r).

    Raises:
        WrongOrder: a is not 2x2

    Returns:
        tuple[bool, bool]: (copositive, strictly copositive)
    """
    if a.order != 2:
        raise WrongOrder(f"closed form needs order 2, got {a.order}")
    p, q, r = a[0, 0], a[0, 1], a[1, 1]
    copositive = p >= 0 and r >= 0 and (q >= 0 or q * q <= p * r)
    strictly = p > 0 and r > 0 and (q >= 0 or q * q < p * r)
    return copositive, strictly
