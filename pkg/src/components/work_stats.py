from dataclasses import dataclass


@dataclass(frozen=True)
class WorkStats:
    """
    Work done by one run of the decision loop.

    matrices_processed : matrices that went through the (1,1) sign check
    max_frontier_size : largest frontier seen
    max_depth : deepest level reached, the root being depth 0
    worst_case_bound : 2^((n-2)(n-3)/2 + 1) for the root order (order 3 below that)
    level_sizes : frontier size at every depth that was checked
    simplices_generated : simplices produced by all projections
    duplicates_dropped : frontier members removed by deduplication
    """

    matrices_processed: int
    max_frontier_size: int
    max_depth: int
    worst_case_bound: int
    level_sizes: tuple[int, ...] = ()
    simplices_generated: int = 0
    duplicates_dropped: int = 0

    def as_dict(self) -> dict:
        return {
            "matricesProcessed": self.matrices_processed,
            "maxFrontierSize": self.max_frontier_size,
            "maxDepth": self.max_depth,
            "paperBound": self.worst_case_bound,
            "levelSizes": list(self.level_sizes),
            "simplicesGenerated": self.simplices_generated,
            "duplicatesDropped": self.duplicates_dropped,
        }
