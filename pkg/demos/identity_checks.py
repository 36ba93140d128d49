"""Run the identity checks on a few hand-picked instances and print reports.

Each check prints its own pass/FAIL line; the script exits nonzero if any
check fails.
"""

import random
import sys
from fractions import Fraction

from latticepaths import (
    DEFAULT_SEED,
    HagenRotheParams,
    NiederhausenQuery,
    complement_check,
    hagen_rothe_check,
    niederhausen_forms_check,
    recurrence_check,
    shift_check,
    upper_negation_check,
)
from latticepaths.identities import random_hagen_rothe


def main() -> int:
    reports = [
        hagen_rothe_check(HagenRotheParams(1, 2, 1, 2)),
        hagen_rothe_check(HagenRotheParams(0, Fraction(1, 2), Fraction(1, 2), 1)),
        upper_negation_check(Fraction(-5, 2), 3),
        complement_check(1, 2, 2, 1),
        complement_check(2, 3, 5, 2),
        recurrence_check(1, 0, 0, 1, 2, 2),
        recurrence_check(2, 1, 1, 4, 3, 7),
        shift_check(1, 1, 0, 1, 2, 3),
        niederhausen_forms_check(NiederhausenQuery(1, 1, 2, 2)),
        niederhausen_forms_check(NiederhausenQuery(2, 1, 1, 2)),
    ]

    rng = random.Random(DEFAULT_SEED)
    for _ in range(5):
        reports.append(hagen_rothe_check(random_hagen_rothe(rng)))

    for report in reports:
        print(report.line())

    failures = sum(1 for report in reports if not report.ok)
    print()
    print(f"{len(reports)} checks, {failures} failures")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
