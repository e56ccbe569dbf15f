from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

from components.traced_matrix import TracedMatrix
from components.verdict import Verdict
from components.work_stats import WorkStats
from core.accessors import get_config, get_debugger, get_event_bus
from core.errors import OutOfRange, WorkLimitExceeded
from core.event_bus import EventBus
from enums.branch import Branch
from enums.config_key import ConfigKey
from enums.verdict_kind import VerdictKind
from events.frontier_level_event import FrontierLevelEvent
from events.refutation_event import RefutationEvent
from events.verdict_event import VerdictEvent
from matrix.rational import ONE, ZERO
from matrix.symmetric_matrix import (
    SymmetricMatrix,
    evaluate_quadratic,
    is_entrywise_nonnegative,
)
from systems.projection_system import proj, work_bound
from systems.witness_system import extract_witness


def _expand(member: TracedMatrix) -> list[TracedMatrix]:
    # An order-1 member that passed the sign check is settled.
    if member.matrix.order == 1:
        return []
    return proj(member)


class CopositivitySystem:
    """
    Frontier loop deciding (strict) copositivity.

    The frontier starts as the input matrix. Each round checks the corner of
    every member, then replaces the frontier by the projections of its
    members, minus those a sufficient condition already settles. An empty
    frontier means the matrix is copositive; a failing corner yields a
    witness lifted back to the input.

    Attributes:
        work_cap (int | None): cap on matrices_processed, None for no cap
        dedup (bool): drop repeated matrices from each new frontier
        parallel (bool): project frontier members in a process pool
        workers (int | None): pool size, None for the executor default
    """

    def __init__(
        self,
        work_cap: int | None = None,
        dedup: bool = False,
        parallel: bool = False,
        workers: int | None = None,
        event_bus: EventBus | None = None,
    ):
        if work_cap is not None and work_cap < 1:
            raise OutOfRange(f"work cap must be at least 1, got {work_cap}")
        self.work_cap = work_cap
        self.dedup = dedup
        self.parallel = parallel
        self.workers = workers
        self.event_bus = event_bus if event_bus is not None else get_event_bus()

    @classmethod
    def from_config(cls, **overrides) -> "CopositivitySystem":
        """
        Build a system from the loaded configuration; keyword arguments that
        are not None take precedence.
        """
        config = get_config()
        settings = {
            "work_cap": config.max_work(),
            "dedup": bool(config.get(ConfigKey.DEDUP, False)),
            "parallel": bool(config.get(ConfigKey.PARALLEL, False)),
            "workers": config.get(ConfigKey.WORKERS),
        }
        settings.update(
            {key: value for key, value in overrides.items() if value is not None}
        )
        return cls(**settings)

    @staticmethod
    def _settled(matrix: SymmetricMatrix, strict: bool) -> bool:
        if not is_entrywise_nonnegative(matrix):
            return False
        return not strict or all(value > 0 for value in matrix.diagonal())

    @staticmethod
    def _fails(matrix: SymmetricMatrix, strict: bool) -> bool:
        corner = matrix[0, 0]
        return corner < 0 or (strict and corner == 0)

    def _project(self, frontier: list[TracedMatrix]) -> list[TracedMatrix]:
        if self.parallel and len(frontier) > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as executor:
                batches = list(executor.map(_expand, frontier))
        else:
            batches = [_expand(member) for member in frontier]
        return [child for batch in batches for child in batch]

    def check(self, a: SymmetricMatrix, strict: bool = False) -> Verdict:
        """
        Decide whether a is copositive, or strictly copositive when strict.

        Raises:
            WorkLimitExceeded: more than work_cap matrices had to be checked

        Returns:
            Verdict: the decision with its witness and work statistics
        """
        n = a.order
        bound = work_bound(max(n, 3))
        frontier = [TracedMatrix(a)]
        processed = 0
        level_sizes: list[int] = []
        simplices = 0
        duplicates = 0
        depth = 0

        def stats() -> WorkStats:
            return WorkStats(
                matrices_processed=processed,
                max_frontier_size=max(level_sizes, default=0),
                max_depth=len(level_sizes) - 1,
                worst_case_bound=bound,
                level_sizes=tuple(level_sizes),
                simplices_generated=simplices,
                duplicates_dropped=duplicates,
            )

        while frontier:
            level_sizes.append(len(frontier))
            for member in frontier:
                if self.work_cap is not None and processed >= self.work_cap:
                    get_debugger().warning(
                        f"work cap {self.work_cap} reached at depth {depth}"
                    )
                    raise WorkLimitExceeded(
                        f"work cap of {self.work_cap} matrices exceeded", stats()
                    )
                processed += 1
                if self._fails(member.matrix, strict):
                    local = (ONE,) + (ZERO,) * (member.matrix.order - 1)
                    self.event_bus.emit(
                        RefutationEvent(depth, member.matrix.order, member.matrix[0, 0])
                    )
                    witness = extract_witness(member, local, strict, root=a)
                    kind = (
                        VerdictKind.NOT_STRICTLY_COPOSITIVE
                        if strict
                        else VerdictKind.NOT_COPOSITIVE
                    )
                    return self._decide(
                        Verdict(kind, witness, evaluate_quadratic(a, witness), stats())
                    )

            children = self._project(frontier)
            simplices += sum(
                1 for c in children if c.lineage[-1].branch is Branch.SIMPLEX
            )
            kept = [c for c in children if not self._settled(c.matrix, strict)]
            dropped = len(children) - len(kept)
            dropped_duplicates = 0
            if self.dedup:
                seen: set[SymmetricMatrix] = set()
                unique = []
                for child in kept:
                    if child.matrix not in seen:
                        seen.add(child.matrix)
                        unique.append(child)
                dropped_duplicates = len(kept) - len(unique)
                duplicates += dropped_duplicates
                kept = unique
            depth += 1
            get_debugger().log(
                f"depth {depth}: {len(children)} projected, {dropped} settled, "
                f"{len(kept)} kept"
            )
            self.event_bus.emit(
                FrontierLevelEvent(depth, len(kept), dropped, dropped_duplicates)
            )
            frontier = kept

        kind = VerdictKind.STRICTLY_COPOSITIVE if strict else VerdictKind.COPOSITIVE
        return self._decide(Verdict(kind, None, None, stats()))

    def _decide(self, verdict: Verdict) -> Verdict:
        get_debugger().log(
            f"{verdict.kind.value} after {verdict.stats.matrices_processed} matrices"
        )
        self.event_bus.emit(VerdictEvent(verdict))
        return verdict


def check_copositive(
    a: SymmetricMatrix, work_cap: int | None = None, **options
) -> Verdict:
    return CopositivitySystem(work_cap=work_cap, **options).check(a)


def check_strictly_copositive(
    a: SymmetricMatrix, work_cap: int | None = None, **options
) -> Verdict:
    return CopositivitySystem(work_cap=work_cap, **options).check(a, strict=True)
