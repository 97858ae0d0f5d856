"""Reproduce the two partition-identity tables with exact counts.

First table: the signed sum over p_{2,15,1} at shifted triangular arguments
collapses to zero.  Second table: among partitions of 149 into repeatable
parts = +-17 and distinct parts = +-2 (mod 30), exactly six have an even
number of parts and six an odd number, listed side by side.
"""

from __future__ import annotations

from qvanish import (
    RestrictedPartitionSpec,
    count_parity_split,
    enumerate_restricted,
    signed_sum_terms,
    verify_parity_identity,
)


def main() -> None:
    print("signed sum for (m, k, s, t) = (2, 15, 0, 1) at n = 20:")
    print(f"{'j':>4} {'argument':>9} {'signed':>8}")
    terms = signed_sum_terms(2, 15, 0, 1, 20)
    for term in terms:
        print(f"{term.j:>4} {term.argument:>9} {term.signed:>8}")
    print(f"{'sum':>4} {'':>9} {sum(t.signed for t in terms):>8}\n")

    even, odd = count_parity_split(2, 15, 8, 1, 149)
    print(f"parity split at 149 for (2, 15, 8, 1): even={even} odd={odd}")
    spec = RestrictedPartitionSpec(
        30, repeatable_residues={13, 17}, distinct_residues={2, 28}
    )
    listed = enumerate_restricted(spec, 149)
    evens = [p.render() for p in listed if p.num_parts % 2 == 0]
    odds = [p.render() for p in listed if p.num_parts % 2 == 1]
    width = max(len("odd number of parts"), *map(len, odds)) + 2
    print(f"{'odd number of parts':<{width}} even number of parts")
    for left, right in zip(odds, evens):
        print(f"{left:<{width}} {right}")

    report = verify_parity_identity(2, 15, 8, 1, 600)
    print(
        f"\nidentity on class {report.residue_class} up to 600: "
        f"{'holds' if report.ok else 'violated'}"
    )


if __name__ == "__main__":
    main()
