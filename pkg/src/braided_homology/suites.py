"""Acceptance suites over the built-in fixture library."""

import time
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

from .complexes.chain import DEFAULT_AB, TESTED_ALPHA_BETAS, chain_complex
from .complexes.conjugation import conjugate_by_guitar
from .complexes.model import birack_family, braided_family, degeneracies_plain
from .complexes.splitting import split, split_complexes
from .core.errors import BraidedHomologyError, InputError
from .core.report import IdentityReport
from .extensions.bridge import bridge_report
from .extensions.extension import count_extension_classes
from .fixtures import braided_fixtures, small_cycle_sets
from .guitar.identities import barJ_identities, check_entwine, check_round_trip, guitar_cocycle_report
from .homology.cohomology import cohomology_groups
from .homology.groups import FiniteAbelianGroup, additivity_report, homology_table
from .multipermutation.nm import nm_table
from .multipermutation.retraction import is_square_free
from .structures.classify import classify
from .structures.modules import adjoint_left_module, adjoint_right_module
from .utils.logging import get_logger

logger = get_logger(__name__)

NM_EXPECTED = {0: 1, 1: 2, 2: 3, 3: 5, 4: 6}


@dataclass
class SuiteResult:
    """Outcome of one acceptance suite."""

    name: str
    passed: bool = True
    reports: List[Dict[str, Any]] = field(default_factory=list)
    elapsed: float = 0.0

    def add(self, fixture: str, report: IdentityReport) -> None:
        self.passed = self.passed and report.passed
        entry = report.to_dict()
        entry["fixture"] = fixture
        self.reports.append(entry)

    def add_check(self, fixture: str, name: str, ok: bool, **details: Any) -> None:
        report = IdentityReport(name)
        report.record(ok, **details)
        report.details.update(details)
        self.add(fixture, report)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "suite": self.name,
            "passed": self.passed,
            "elapsed": round(self.elapsed, 3),
            "reports": self.reports,
        }


def _lnd_fixtures(max_size: int = 3) -> Dict[str, Any]:
    return {name: B for name, B in braided_fixtures(max_size).items() if B.is_left_nondegenerate}


def guitar_suite(result: SuiteResult) -> None:
    for name, B in _lnd_fixtures().items():
        result.add(name, check_round_trip(B, 3))
        result.add(name, check_entwine(B, 3))
        result.add(name, guitar_cocycle_report(B, 2))
        props = classify(B)
        if props.nondegenerate and props.invertible and props.ri_compatible:
            result.add(name, barJ_identities(B))


def homequiv_suite(result: SuiteResult, max_degree: int = 4, homology_degree: int = 2) -> None:
    for name, B in _lnd_fixtures().items():
        coefficients = {
            "trivial": (None, None),
            "adjoint": (adjoint_right_module(B), adjoint_left_module(B)),
        }
        for label, (M, N) in coefficients.items():
            cert = conjugate_by_guitar(B, M, N, max_degree)
            cert.details["coefficients"] = label
            result.add(name, cert)
            if label == "trivial":
                braided = chain_complex(braided_family(B, max_degree=homology_degree))
                birack = chain_complex(birack_family(B, max_degree=homology_degree))
                degrees = range(homology_degree + 1)
                left = [h.to_dict() for h in homology_table(braided, degrees)]
                right = [h.to_dict() for h in homology_table(birack, degrees)]
                result.add_check(name, "homology_agrees", left == right, braided=left, birack=right)


def splitting_suite(result: SuiteResult, top: int = 3) -> None:
    targets = {n: B for n, B in braided_fixtures(3).items() if n == "r3"}
    for n, C in small_cycle_sets(3).items():
        if is_square_free(C):
            targets[n] = braided_fixtures(3)[n]
    for name, B in targets.items():
        model = degeneracies_plain(B, max_degree=top)
        for k in range(1, top + 1):
            try:
                cert = split(model, k, TESTED_ALPHA_BETAS)
                result.add_check(name, "split", True, degree=k, ranks=[cert.degenerate_rank, cert.normalized_rank])
            except BraidedHomologyError as exc:
                result.add_check(name, "split", False, degree=k, error=exc.to_dict())
        whole = chain_complex(model, DEFAULT_AB, top)
        degenerate, normalized = split_complexes(model, DEFAULT_AB, top)
        result.add(name, additivity_report(whole, [degenerate, normalized], range(top)))


def ext_h2_suite(result: SuiteResult) -> None:
    A = FiniteAbelianGroup.cyclic(2)
    for name, C in small_cycle_sets(3).items():
        classes = count_extension_classes(C, A)
        order = cohomology_groups(C, 2, A).order
        result.add_check(name, "ext_classes_equal_h2", classes == order, classes=classes, h2=order)


def bridge_suite(result: SuiteResult) -> None:
    A = FiniteAbelianGroup.cyclic(2)
    for name, B in _lnd_fixtures().items():
        result.add(name, bridge_report(B, A))


def nm_suite(result: SuiteResult, max_m: int = 4) -> None:
    table = nm_table(max_m)
    expected = {m: n for m, n in NM_EXPECTED.items() if m <= max_m}
    result.add_check(
        "square_free",
        "nm_table",
        table.values == expected and not table.doubling_bound_failures(),
        values=table.values,
        expected=expected,
    )


SUITES: Dict[str, Callable[[SuiteResult], None]] = {
    "bridge": bridge_suite,
    "ext-h2": ext_h2_suite,
    "guitar": guitar_suite,
    "homequiv": homequiv_suite,
    "nm": nm_suite,
    "splitting": splitting_suite,
}


def run_suite(name: str, runner: Optional[Callable[[SuiteResult], None]] = None) -> SuiteResult:
    """Run one suite by name.

    Raises:
        InputError: For an unknown suite name
    """
    if runner is None:
        if name not in SUITES:
            raise InputError(f"unknown suite {name!r}", witness={"known": sorted(SUITES)})
        runner = SUITES[name]
    result = SuiteResult(name)
    started = time.perf_counter()
    runner(result)
    result.elapsed = time.perf_counter() - started
    if not result.passed:
        logger.warning("suite failed", suite=name)
    logger.info("suite finished", suite=name, passed=result.passed, elapsed=round(result.elapsed, 3))
    return result
