from components.verdict import Verdict
from core.event import Event


class VerdictEvent(Event):
    def __init__(self, verdict: Verdict):
        self.verdict: Verdict = verdict
