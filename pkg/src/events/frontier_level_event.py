from core.event import Event


class FrontierLevelEvent(Event):
    def __init__(
        self,
        depth: int,
        frontier_size: int,
        dropped_nonnegative: int = 0,
        dropped_duplicates: int = 0,
    ):
        self.depth: int = depth
        self.frontier_size: int = frontier_size
        self.dropped_nonnegative: int = dropped_nonnegative
        self.dropped_duplicates: int = dropped_duplicates
