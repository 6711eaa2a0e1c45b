"""Checks of identities and inequalities for ``D_C K`` over seeded corpora."""
from .classify import Classification, classify, classify_m1, classify_m2
from .fixedpoint import fixed_point_check, iterate_check, nonsurjectivity_demo
from .inequalities import (
    brunn_minkowski_check,
    containment_after_translation,
    containment_check,
    mixed_volume_check_m1,
    quermass_check_m1,
    volume_check_m2,
    width_diameter_check,
)
from .report import Check, Report
from .suites import run_suite, suite_passed

__all__ = [
    "Check",
    "Classification",
    "Report",
    "brunn_minkowski_check",
    "classify",
    "classify_m1",
    "classify_m2",
    "containment_after_translation",
    "containment_check",
    "fixed_point_check",
    "iterate_check",
    "mixed_volume_check_m1",
    "nonsurjectivity_demo",
    "quermass_check_m1",
    "run_suite",
    "suite_passed",
    "volume_check_m2",
    "width_diameter_check",
]
