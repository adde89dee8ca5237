"""
Run law suites with reproducible randomness.

Every law draws from its own generator, seeded from the invocation seed and the
law's name, so a law's trials do not depend on which other laws run beside it
or on how the run is sharded over workers.
"""
import math
import zlib
from concurrent.futures import ThreadPoolExecutor
from functools import reduce
from typing import Any, Dict, List, Optional

import numpy as np
from loguru import logger

from ejakit.algebra import Element, JordanAlgebra, LinOp
from ejakit.env import EjaSettings, default_tolerance, get_settings
from ejakit.exceptions import DomainException, NumericalException
from ejakit.laws.registry import Law, LawRegistry, law_registry
from ejakit.laws.report import LawResult, LawSuiteReport, merge_reports
from ejakit.maps import PositiveMap
from ejakit.serialization import AlgebraDescriptor, ElementDescriptor, MapDescriptor


def law_generator(seed: int, law: Law) -> np.random.Generator:
    key = zlib.crc32(f"{law.suite}/{law.law_id}".encode("utf-8"))
    return np.random.default_rng(np.random.SeedSequence([seed, key]))


def _document(value: Any) -> Any:
    if isinstance(value, Element):
        return ElementDescriptor.of(value).model_dump()
    if isinstance(value, PositiveMap):
        return MapDescriptor.of(value.op, value.certificate.kind).model_dump()
    if isinstance(value, LinOp):
        return MapDescriptor.of(value).model_dump()
    if isinstance(value, dict):
        return {k: _document(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_document(v) for v in value]
    return value


def run_law(law: Law, algebra: JordanAlgebra, seed: int, trials: int, tol: float,
            settings: EjaSettings) -> LawResult:
    rng = law_generator(seed, law)
    n = law.trials_for(trials)
    worst, witness, seen = 0.0, None, False
    try:
        for trial in law.fn(algebra, rng, n, settings):
            residual = math.inf if math.isnan(trial.residual) else float(trial.residual)
            if not seen or residual > worst:
                worst, witness, seen = residual, trial.witness, True
            if math.isinf(worst):
                break
    except (DomainException, NumericalException) as e:
        logger.warning("law {}/{} raised {}: {}", law.suite, law.law_id, type(e).__name__, e)
        worst, witness = math.inf, {"error": type(e).__name__, "message": str(e)}
    tolerance = tol * law.factor
    passed = worst <= tolerance
    logger.debug("law {}/{} on {}: residual {:.3e} (tol {:.1e})", law.suite, law.law_id, algebra.label,
                 worst, tolerance)
    return LawResult(
        law_id=law.law_id,
        suite=law.suite,
        trials=n,
        max_residual=worst,
        factor=law.factor,
        tolerance=tolerance,
        passed=passed,
        witness=None if passed else _document(witness),
    )


def _shard(results: List[LawResult], suite: str, descriptor: Dict[str, Any], seed: int, trials: int,
           tol: float) -> LawSuiteReport:
    return LawSuiteReport(
        suite_name=suite,
        algebra_descriptor=descriptor,
        trials=trials,
        seed=seed,
        max_residual=max((r.max_residual for r in results), default=0.0),
        tolerance=tol,
        passed=all(r.passed for r in results),
        per_law=sorted(results, key=lambda r: f"{r.suite}/{r.law_id}"),
    )


def run_suite(algebra: JordanAlgebra, suite: str, seed: int, trials: int, tol: Optional[float] = None,
              workers: int = 1, registry: LawRegistry = None) -> LawSuiteReport:
    """
    :param suite: a registered suite name or "all"
    :param tol: base tolerance; each law passes below tol times its factor
    :param workers: laws are sharded over this many threads
    :raise DescriptorException: on an unknown suite name
    """
    registry = registry or law_registry
    laws = registry.laws_for(suite)
    tol = default_tolerance("law", tol)
    settings = get_settings()
    descriptor = AlgebraDescriptor.of(algebra).model_dump()
    logger.info("running suite {} on {} ({} laws, seed {}, {} trials)", suite, algebra.label, len(laws), seed, trials)

    def shard(law: Law) -> LawSuiteReport:
        return _shard([run_law(law, algebra, seed, trials, tol, settings)], suite, descriptor, seed, trials, tol)

    empty = _shard([], suite, descriptor, seed, trials, tol)
    if workers <= 1:
        shards = [shard(law) for law in laws]
    else:
        with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="eja-law") as executor:
            shards = list(executor.map(shard, laws))
    return reduce(merge_reports, shards, empty)
