"""Verify vanishing predictions across all four theorem families.

Each family predicts one residue class of exponents whose coefficients all
vanish.  This script verifies a handful of named instances, then sweeps a
small parameter grid and summarizes the outcome.
"""

from __future__ import annotations

from qvanish import (
    AlladiGordonParams,
    AndrewsBressoudParams,
    ShiftedQuotientParams,
    scan,
    verify_vanishing,
)


def main() -> None:
    instances = [
        AndrewsBressoudParams(4, 3),
        AndrewsBressoudParams(6, 1),
        ShiftedQuotientParams(2, 15, 0, 1),
        ShiftedQuotientParams(10, 3, 0, 1),
        ShiftedQuotientParams(3, 3, 2, 1, "minus"),
        AlladiGordonParams(2, 5, 1),
        AlladiGordonParams(2, 5, 3, "minus"),
    ]
    for params in instances:
        print(verify_vanishing(params, 800).render_text())

    print()
    for family in ("ab", "plus", "minus", "ag"):
        result = scan(range(2, 7), range(2, 7), 400, family)
        verified = sum(1 for report in result.reports if report.verified)
        print(
            f"{family:>5}: {len(result.reports)} tuples checked, "
            f"{verified} verified, {len(result.skipped)} skipped"
        )


if __name__ == "__main__":
    main()
