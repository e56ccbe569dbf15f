from abc import ABC


class Event(ABC):
    """
    Base class for all event types.
    """
