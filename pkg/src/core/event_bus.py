from __future__ import annotations

from collections import defaultdict
from contextlib import contextmanager
from typing import Callable, Iterator

from core.event import Event

Handler = Callable[[Event], None]


class EventBus:
    """
    Publish/subscribe channel for engine progress. Handlers receive every
    event whose exact type they subscribed to, in subscription order.
    """

    def __init__(self):
        self._subscribers: dict[type[Event], list[Handler]] = defaultdict(list)

    def subscribe(self, event_type: type[Event], handler: Handler):
        self._subscribers[event_type].append(handler)

    def unsubscribe(self, event_type: type[Event], handler: Handler):
        if handler in self._subscribers[event_type]:
            self._subscribers[event_type].remove(handler)

    @contextmanager
    def listening(self, event_type: type[Event], handler: Handler) -> Iterator[None]:
        """
        Keep handler subscribed for the duration of a with block.
        """
        self.subscribe(event_type, handler)
        try:
            yield
        finally:
            self.unsubscribe(event_type, handler)

    def handler_count(self, event_type: type[Event]) -> int:
        return len(self._subscribers[event_type])

    def emit(self, event: Event):
        # Handlers may unsubscribe while the event is delivered.
        for handler in list(self._subscribers[type(event)]):
            handler(event)

    @staticmethod
    def get_event_bus() -> "EventBus":
        if not hasattr(EventBus, "_instance"):
            EventBus._instance = EventBus()
        return EventBus._instance
