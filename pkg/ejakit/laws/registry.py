from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, List, NamedTuple, Optional

from ejakit.exceptions import DescriptorException

SUITES = ("core", "spectral", "corner_filter", "polar", "exchange", "diamond", "dagger_effectus")
ALL = "all"


class Trial(NamedTuple):
    """One evaluation of a law: a residual already divided by its natural scale, and what produced it."""
    residual: float
    witness: Optional[Dict[str, Any]] = None


LawFunction = Callable[..., Iterable[Trial]]


@dataclass(frozen=True)
class Law:
    suite: str
    law_id: str
    fn: LawFunction
    priority: int = 1
    factor: float = 1.0
    trial_share: float = 1.0

    def trials_for(self, trials: int) -> int:
        return max(1, int(round(trials * self.trial_share)))


class LawRegistry:

    def __init__(self):
        self.laws: Dict[str, List[Law]] = {}

    @staticmethod
    def validate_suite(suite: Any) -> None:
        if suite not in SUITES and suite != ALL:
            raise DescriptorException("suite", f"unknown suite \"{suite}\", expected one of {SUITES + (ALL,)}")

    def on(self, suite: str, /, *, law_id: str, priority: int = 1, factor: float = 1.0,
           trial_share: float = 1.0) -> Callable:
        """
        Decorator registering a law with a suite.
        :param law_id: name reported for the law
        :param priority: higher runs first within its suite
        :param factor: the law passes when its residual is at most tol * factor
        :param trial_share: fraction of the requested trials this law runs
        """
        self.validate_suite(suite)

        def wrapper(fn: LawFunction):
            self.register(Law(suite, law_id, fn, priority, factor, trial_share))
            return fn

        return wrapper

    def register(self, law: Law) -> None:
        entries = self.laws.setdefault(law.suite, [])
        entries.append(law)
        entries.sort(key=lambda x: x.priority, reverse=True)

    def unregister(self, suite: str, law_id: str) -> None:
        if suite not in self.laws:
            return
        self.laws[suite] = [x for x in self.laws[suite] if x.law_id != law_id]

    def laws_for(self, suite: str) -> List[Law]:
        self.validate_suite(suite)
        if suite == ALL:
            return [law for name in SUITES for law in self.laws.get(name, [])]
        return list(self.laws.get(suite, []))


law_registry = LawRegistry()
