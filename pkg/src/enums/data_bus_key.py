from enum import Enum


class DataBusKey(Enum):
    DEBUGGER = "DEBUGGER"
    CONFIG = "CONFIG"
    EVENT_BUS = "EVENT_BUS"
