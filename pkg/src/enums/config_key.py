from enum import Enum


class ConfigKey(Enum):
    MAX_WORK = "max_work"
    GRID_DENOMINATOR = "grid_denominator"
    MAX_NUMERATOR = "generator.max_numerator"
    MAX_DENOMINATOR = "generator.max_denominator"
    PSD_ENTRY_BOUND = "generator.psd_entry_bound"
    DEDUP = "engine.dedup"
    PARALLEL = "engine.parallel"
    WORKERS = "engine.workers"
    DEBUG_LOG = "debug.log"
    DEBUG_WARN = "debug.warn"
    DEBUG_ERROR = "debug.error"
