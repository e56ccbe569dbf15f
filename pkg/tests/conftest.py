import pytest

from core.config import MAX_WORK_ENV, Config
from core.data_bus import DATA_BUS
from core.debugger import Debugger
from core.event_bus import EventBus
from enums.data_bus_key import DataBusKey


@pytest.fixture(autouse=True)
def default_config(monkeypatch):
    Config.reset()
    monkeypatch.delenv(MAX_WORK_ENV, raising=False)
    DATA_BUS.replace(DataBusKey.DEBUGGER, Debugger())
    yield
    Config.reset()


@pytest.fixture
def event_bus() -> EventBus:
    return EventBus()
