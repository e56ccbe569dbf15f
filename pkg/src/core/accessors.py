from __future__ import annotations
from typing import TYPE_CHECKING, cast
from enums.data_bus_key import DataBusKey
from .data_bus import DATA_BUS

if TYPE_CHECKING:
    from core.config import Config
    from core.debugger import Debugger
    from core.event_bus import EventBus


def get_config() -> "type[Config]":
    if not DATA_BUS.has(DataBusKey.CONFIG):
        from core.config import Config

        DATA_BUS.register(DataBusKey.CONFIG, Config)
    instance = DATA_BUS.get(DataBusKey.CONFIG)
    return cast("type[Config]", instance)


def get_debugger() -> "Debugger":
    instance = DATA_BUS.get(DataBusKey.DEBUGGER)
    return cast("Debugger", instance)


def get_event_bus() -> "EventBus":
    if not DATA_BUS.has(DataBusKey.EVENT_BUS):
        from core.event_bus import EventBus

        DATA_BUS.register(DataBusKey.EVENT_BUS, EventBus.get_event_bus())
    instance = DATA_BUS.get(DataBusKey.EVENT_BUS)
    return cast("EventBus", instance)
