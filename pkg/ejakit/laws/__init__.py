from ejakit.laws.registry import ALL, SUITES, Law, LawRegistry, Trial, law_registry
from ejakit.laws.report import LawResult, LawSuiteReport, merge_reports
from ejakit.laws.runner import law_generator, run_law, run_suite
from ejakit.laws import suites

__all__ = [
    "SUITES",
    "ALL",
    "Law",
    "LawRegistry",
    "Trial",
    "law_registry",
    "LawResult",
    "LawSuiteReport",
    "merge_reports",
    "law_generator",
    "run_law",
    "run_suite",
    "suites",
]
