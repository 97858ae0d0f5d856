"""Restricted partition counting, enumeration, and the parity identities.

Partitions here are restricted to parts lying in prescribed residue classes
modulo a fixed modulus, with each class marked repeatable (parts may recur)
or distinct (each part value at most once).  Counting is exact dynamic
programming: unbounded-knapsack transitions for repeatable parts, 0/1
transitions for distinct parts, optionally tracking the parity of the total
number of parts.

Two combinatorial consequences of the vanishing theorems live here:

* a signed sum over a quadratic progression of arguments,
      sum_j (-1)^j p_{m,k,r}(nk - rs - mk j(j+1)/2 - j(tk - r)) = 0,
  where p_{m,k,r} counts partitions into parts = 0, +-r (mod mk), and the
  sum runs over the finitely many j that keep the argument nonnegative; and
* the parity split: among partitions into repeatable parts = +-r and
  distinct parts = +-(r - tk) (mod mk), the counts with an even and an odd
  total number of parts agree on a whole residue class of n mod k.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import NamedTuple

from .errors import InvalidParams, TooLarge
from .vanishing import ResidueClass, ShiftedQuotientParams, zero_class

__all__ = [
    "RestrictedPartitionSpec",
    "ParityCountPair",
    "Partition",
    "SignedTerm",
    "ParityIdentityReport",
    "ENUMERATION_CAP",
    "count_restricted",
    "count_restricted_table",
    "count_restricted_by_parity",
    "signed_sum",
    "signed_sum_terms",
    "count_parity_split",
    "enumerate_restricted",
    "verify_parity_identity",
]

ENUMERATION_CAP = 10**6


@dataclass(frozen=True)
class RestrictedPartitionSpec:
    """Which part sizes are allowed, by residue class mod `modulus`.

    Residue 0 means positive multiples of the modulus and is only meaningful
    for repeatable parts.  The repeatable and distinct sets must be disjoint
    so every allowed part size has an unambiguous rule.
    """

    modulus: int
    repeatable_residues: frozenset[int] = frozenset()
    distinct_residues: frozenset[int] = frozenset()
    max_part: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "repeatable_residues", frozenset(self.repeatable_residues))
        object.__setattr__(self, "distinct_residues", frozenset(self.distinct_residues))
        if self.modulus < 1:
            raise InvalidParams(f"modulus must be >= 1, got {self.modulus}")
        for res in self.repeatable_residues | self.distinct_residues:
            if not 0 <= res < self.modulus:
                raise InvalidParams(f"residue {res} outside [0, {self.modulus})")
        if self.repeatable_residues & self.distinct_residues:
            raise InvalidParams(
                f"residues {sorted(self.repeatable_residues & self.distinct_residues)} "
                "are both repeatable and distinct"
            )
        if 0 in self.distinct_residues:
            raise InvalidParams("residue 0 is only allowed among repeatable residues")
        if self.max_part is not None and self.max_part < 1:
            raise InvalidParams(f"max_part must be >= 1, got {self.max_part}")

    def parts_up_to(self, limit: int) -> tuple[list[int], list[int]]:
        """Allowed (repeatable, distinct) part sizes <= limit, each ascending."""
        if self.max_part is not None:
            limit = min(limit, self.max_part)
        out: list[list[int]] = []
        for residues in (self.repeatable_residues, self.distinct_residues):
            sizes: list[int] = []
            for res in residues:
                start = res if res else self.modulus
                sizes.extend(range(start, limit + 1, self.modulus))
            sizes.sort()
            out.append(sizes)
        return out[0], out[1]


class ParityCountPair(NamedTuple):
    """Partition counts split by parity of the total number of parts."""

    even_count: int
    odd_count: int


@dataclass(frozen=True)
class Partition:
    """A multiset of positive parts, canonically ascending.

    Rendered in multiplicity notation: "2+13+17^6+32" stands for the parts
    2, 13, 17 (six times), 32.  The empty partition renders as "0".
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(sorted(self.parts))
        if parts and parts[0] < 1:
            raise InvalidParams(f"parts must be positive, got {parts[0]}")
        object.__setattr__(self, "parts", parts)

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def num_parts(self) -> int:
        return len(self.parts)

    def render(self) -> str:
        if not self.parts:
            return "0"
        pieces = []
        i = 0
        while i < len(self.parts):
            p = self.parts[i]
            mult = self.parts.count(p)
            pieces.append(str(p) if mult == 1 else f"{p}^{mult}")
            i += mult
        return "+".join(pieces)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if text == "0":
            return cls(())
        parts: list[int] = []
        for token in text.split("+"):
            token = token.strip()
            base, caret, mult = token.partition("^")
            try:
                p = int(base)
                e = int(mult) if caret else 1
            except ValueError:
                raise InvalidParams(f"cannot parse partition term {token!r}") from None
            if p < 1 or e < 1:
                raise InvalidParams(f"invalid partition term {token!r}")
            parts.extend([p] * e)
        return cls(tuple(parts))

    def __str__(self) -> str:
        return self.render()


# -- counting ------------------------------------------------------------------


def count_restricted_table(spec: RestrictedPartitionSpec, n_max: int) -> list[int]:
    """Exact counts for every 0 <= n <= n_max, from one DP pass."""
    if n_max < 0:
        raise InvalidParams(f"n_max must be >= 0, got {n_max}")
    rep, dist = spec.parts_up_to(n_max)
    dp = [0] * (n_max + 1)
    dp[0] = 1
    for p in rep:
        for i in range(p, n_max + 1):
            dp[i] += dp[i - p]
    for p in dist:
        for i in range(n_max, p - 1, -1):
            dp[i] += dp[i - p]
    return dp


def count_restricted(spec: RestrictedPartitionSpec, n: int) -> int:
    """Number of partitions of n obeying the spec."""
    return count_restricted_table(spec, n)[n]


def _parity_tables(spec: RestrictedPartitionSpec, n_max: int) -> tuple[list[int], list[int]]:
    """Counts split by parity of the number of parts, for every n <= n_max."""
    if n_max < 0:
        raise InvalidParams(f"n_max must be >= 0, got {n_max}")
    rep, dist = spec.parts_up_to(n_max)
    even = [0] * (n_max + 1)
    odd = [0] * (n_max + 1)
    even[0] = 1
    # Each added copy of a part flips the parity.  Ascending scan reuses the
    # already-updated state at i-p, which is exactly the unbounded transition.
    for p in rep:
        for i in range(p, n_max + 1):
            even[i], odd[i] = even[i] + odd[i - p], odd[i] + even[i - p]
    # Descending scan sees the pre-part state at i-p: each part used at most once.
    for p in dist:
        for i in range(n_max, p - 1, -1):
            even[i], odd[i] = even[i] + odd[i - p], odd[i] + even[i - p]
    return even, odd


def count_restricted_by_parity(spec: RestrictedPartitionSpec, n: int) -> ParityCountPair:
    """Counts of spec-partitions of n with evenly/oddly many parts."""
    even, odd = _parity_tables(spec, n)
    return ParityCountPair(even[n], odd[n])


# -- the signed-sum identity ------------------------------------------------------


@dataclass(frozen=True)
class SignedTerm:
    """One row of the signed sum: argument nk-rs-mkj(j+1)/2-j(tk-r) at index j."""

    j: int
    argument: int
    count: int
    signed: int


def _count_spec(m: int, k: int, r: int) -> RestrictedPartitionSpec:
    mk = m * k
    return RestrictedPartitionSpec(mk, {0, r % mk, (-r) % mk})


def signed_sum_terms(m: int, k: int, s: int, t: int, n: int) -> list[SignedTerm]:
    """All terms of the signed sum with nonnegative argument, by ascending j.

    The argument is quadratic in j with negative leading coefficient, so the
    admissible j form one window, located from the integer square root of
    the discriminant and then confirmed exactly per j.
    """
    params = ShiftedQuotientParams(m, k, s, t)  # validates ranges and gcd
    r, mk, tk = params.r, m * k, t * k
    target = n * k - r * s
    # nonnegativity of the argument: mk j^2 + (mk + 2(tk-r)) j - 2 target <= 0
    b = mk + 2 * (tk - r)
    disc = b * b + 8 * mk * target
    if disc < 0:
        return []
    root = isqrt(disc)
    lo = (-b - root) // (2 * mk) - 1
    hi = (-b + root) // (2 * mk) + 1
    arguments = {}
    for j in range(lo, hi + 1):
        a = target - mk * j * (j + 1) // 2 - j * (tk - r)
        if a >= 0:
            arguments[j] = a
    if not arguments:
        return []
    table = count_restricted_table(_count_spec(m, k, r), max(arguments.values()))
    return [
        SignedTerm(j, a, table[a], table[a] if j % 2 == 0 else -table[a])
        for j, a in sorted(arguments.items())
    ]


def signed_sum(m: int, k: int, s: int, t: int, n: int) -> int:
    """Value of the signed sum; zero for every valid parameter tuple."""
    return sum(term.signed for term in signed_sum_terms(m, k, s, t, n))


# -- the parity-split identity -----------------------------------------------------


def _parity_spec(m: int, k: int, s: int, t: int) -> RestrictedPartitionSpec:
    params = ShiftedQuotientParams(m, k, s, t, "minus")  # validates, needs odd k
    r, mk, tk = params.r, m * k, t * k
    # The residue pairs never collide: +-r = +-(r-tk) mod mk forces either
    # tk = 0 mod mk (so m | t, impossible for 1 <= t < m) or 2r = tk mod mk
    # (so k | 2r, impossible for gcd(r,k) = 1 and odd k > 1).
    return RestrictedPartitionSpec(
        mk,
        repeatable_residues={r % mk, (-r) % mk},
        distinct_residues={(r - tk) % mk, (tk - r) % mk},
    )


def count_parity_split(m: int, k: int, s: int, t: int, n: int) -> ParityCountPair:
    """Even/odd part-count split for the theorem's repeatable/distinct mix."""
    if n < 0:
        raise InvalidParams(f"n must be >= 0, got {n}")
    return count_restricted_by_parity(_parity_spec(m, k, s, t), n)


@dataclass(frozen=True)
class ParityIdentityReport:
    """Even-equals-odd check over one residue class of targets."""

    params: dict
    residue_class: ResidueClass
    n_max: int
    violations: tuple[tuple[int, int, int], ...]  # (n, even, odd)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def verify_parity_identity(m: int, k: int, s: int, t: int, n_max: int) -> ParityIdentityReport:
    """Check even = odd at every class exponent up to n_max (inclusive).

    The class is kn - rs for r - tk > 0 and kn - r(s+1) for r - tk < 0, the
    latter because normalizing the negative offset shifts the progression.
    """
    if n_max < 0:
        raise InvalidParams(f"n_max must be >= 0, got {n_max}")
    params = ShiftedQuotientParams(m, k, s, t, "minus")
    cls = zero_class(params)
    even, odd = _parity_tables(_parity_spec(m, k, s, t), n_max)
    violations = tuple(
        (e, even[e], odd[e])
        for e in range(cls.residue, n_max + 1, k)
        if even[e] != odd[e]
    )
    return ParityIdentityReport(
        params={"m": m, "k": k, "s": s, "t": t},
        residue_class=cls,
        n_max=n_max,
        violations=violations,
    )


# -- enumeration --------------------------------------------------------------------


def enumerate_restricted(
    spec: RestrictedPartitionSpec, n: int, cap: int = ENUMERATION_CAP
) -> list[Partition]:
    """Every spec-partition of n, in ascending lexicographic part order.

    The count is computed first; if it exceeds the cap the enumeration is
    refused with TooLarge rather than silently truncated.
    """
    if n < 0:
        raise InvalidParams(f"n must be >= 0, got {n}")
    if cap < 1:
        raise InvalidParams(f"cap must be >= 1, got {cap}")
    total = count_restricted(spec, n)
    if total > cap:
        raise TooLarge(f"{total} partitions of {n} exceed the cap of {cap}")
    rep, dist = spec.parts_up_to(n)
    sized = sorted([(p, True) for p in rep] + [(p, False) for p in dist])
    results: list[tuple[int, ...]] = []
    acc: list[int] = []

    def walk(idx: int, remaining: int) -> None:
        if remaining == 0:
            results.append(tuple(acc))
            return
        if idx == len(sized) or remaining < sized[idx][0]:
            return
        p, repeatable = sized[idx]
        walk(idx + 1, remaining)
        added = 0
        while remaining >= p and (repeatable or added < 1):
            acc.append(p)
            added += 1
            remaining -= p
            walk(idx + 1, remaining)
        del acc[len(acc) - added :]

    walk(0, n)
    assert len(results) == total
    return [Partition(parts) for parts in sorted(results)]
