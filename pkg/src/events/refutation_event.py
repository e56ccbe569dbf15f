from fractions import Fraction

from core.event import Event


class RefutationEvent(Event):
    def __init__(self, depth: int, order: int, local_value: Fraction):
        self.depth: int = depth
        self.order: int = order
        self.local_value: Fraction = local_value
