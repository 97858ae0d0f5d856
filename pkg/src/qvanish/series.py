"""Truncated Laurent series over arbitrary-precision integers.

A series is stored densely: a ``valuation`` (lowest represented exponent of
q, possibly negative), a block of integer coefficients, and an exclusive
``order``.  The coefficient of q^e is

* ``coeffs[e - valuation]``  for  valuation <= e < order,
* 0                          for  e < valuation  (zero by construction),
* unknown                    for  e >= order     (requesting it is an error).

Truncation is tracked conservatively through every operation: an exponent
beyond the order is never silently treated as zero, which is what keeps a
"this coefficient vanishes" check honest.  All coefficients are Python ints,
so nothing ever rounds or overflows.

Instances are immutable; operations return new series and are safe to use
from multiple threads.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .errors import NotAUnit, OutOfRange

__all__ = ["LaurentSeries", "NotAUnit", "OutOfRange"]


class LaurentSeries:
    """A truncated Laurent series with exact integer coefficients."""

    __slots__ = ("_valuation", "_coeffs", "_order")

    def __init__(self, valuation: int, coeffs: Sequence[int], order: int | None = None):
        coeffs = tuple(coeffs)
        if order is None:
            order = valuation + len(coeffs)
        if order - valuation != len(coeffs):
            raise ValueError(
                f"coefficient block has length {len(coeffs)}, "
                f"expected order - valuation = {order - valuation}"
            )
        self._valuation = valuation
        self._coeffs = coeffs
        self._order = order

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, order: int, valuation: int = 0) -> "LaurentSeries":
        """The zero series known on [valuation, order)."""
        lo = min(valuation, order)
        return cls(lo, (0,) * (order - lo), order)

    @classmethod
    def one(cls, order: int) -> "LaurentSeries":
        """The constant series 1 known on [0, order)."""
        if order <= 0:
            return cls(order, (), order)
        return cls(0, (1,) + (0,) * (order - 1), order)

    @classmethod
    def monomial(cls, sign: int, exponent: int, order: int) -> "LaurentSeries":
        """The single term sign * q^exponent, known on [exponent, order)."""
        if sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {sign}")
        if order <= exponent:
            return cls(min(exponent, order), (0,) * max(0, order - exponent), order)
        return cls(exponent, (sign,) + (0,) * (order - exponent - 1), order)

    # -- inspection ---------------------------------------------------------

    @property
    def valuation(self) -> int:
        return self._valuation

    @property
    def order(self) -> int:
        """Exclusive upper bound of the known exponent window."""
        return self._order

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    def coeff_at(self, e: int) -> int:
        """Exact coefficient of q^e.

        Below the valuation the coefficient is zero by construction; at or
        above the order it is unknown and asking for it raises OutOfRange.
        """
        if e >= self._order:
            raise OutOfRange(
                f"coefficient of q^{e} is beyond the truncation order {self._order}"
            )
        if e < self._valuation:
            return 0
        return self._coeffs[e - self._valuation]

    def __getitem__(self, e: int) -> int:
        return self.coeff_at(e)

    def items(self) -> Iterator[tuple[int, int]]:
        """Iterate (exponent, coefficient) over the stored window."""
        for i, c in enumerate(self._coeffs):
            yield self._valuation + i, c

    def nonzero_items(self) -> Iterator[tuple[int, int]]:
        for e, c in self.items():
            if c:
                yield e, c

    def is_zero(self) -> bool:
        """True if every known coefficient is zero (says nothing past the order)."""
        return not any(self._coeffs)

    def true_valuation(self) -> int | None:
        """Lowest exponent with a nonzero known coefficient, or None if all zero."""
        for e, c in self.items():
            if c:
                return e
        return None

    # -- arithmetic ---------------------------------------------------------

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries(self._valuation, tuple(-c for c in self._coeffs), self._order)

    def __add__(self, other: "LaurentSeries | int") -> "LaurentSeries":
        if isinstance(other, int):
            other = LaurentSeries(0, (other,) + (0,) * max(0, self._order - 1), max(self._order, 1))
        elif not isinstance(other, LaurentSeries):
            return NotImplemented
        val = min(self._valuation, other._valuation)
        order = min(self._order, other._order)
        out = [0] * (order - val)
        for s in (self, other):
            lo, hi = s._valuation, min(s._order, order)
            if hi > lo:
                block = s._coeffs[: hi - lo]
                out[lo - val : hi - val] = [x + y for x, y in zip(out[lo - val : hi - val], block)]
        return LaurentSeries(val, out, order)

    __radd__ = __add__

    def __sub__(self, other: "LaurentSeries | int") -> "LaurentSeries":
        if isinstance(other, LaurentSeries):
            return self + (-other)
        if isinstance(other, int):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other: "LaurentSeries | int") -> "LaurentSeries":
        return (-self) + other

    def __mul__(self, other: "LaurentSeries | int") -> "LaurentSeries":
        if isinstance(other, int):
            return LaurentSeries(
                self._valuation, tuple(c * other for c in self._coeffs), self._order
            )
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        # Known window of a Cauchy product: error terms of one factor meet the
        # valuation of the other, so only min(len_a, len_b) offsets survive.
        n = min(len(self._coeffs), len(other._coeffs))
        val = self._valuation + other._valuation
        a, b = self._coeffs[:n], other._coeffs[:n]
        # Iterate the sparser block on the outside; theta-like series are
        # mostly zeros and skipping them dominates the cost.
        na = sum(1 for c in a if c)
        nb = sum(1 for c in b if c)
        if nb < na:
            a, b = b, a
        out = [0] * n
        for i, ci in enumerate(a):
            if ci:
                seg = out[i:]
                out[i:] = [x + ci * y for x, y in zip(seg, b)]
        return LaurentSeries(val, out, val + n)

    __rmul__ = __mul__

    def monomial_mul(self, sign: int, exponent: int) -> "LaurentSeries":
        """Multiply by sign * q^exponent: shift every exponent, scale every sign."""
        if sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {sign}")
        coeffs = self._coeffs if sign == 1 else tuple(-c for c in self._coeffs)
        return LaurentSeries(self._valuation + exponent, coeffs, self._order + exponent)

    def invert(self) -> "LaurentSeries":
        """Multiplicative inverse, valid when the lowest nonzero coefficient is +-1.

        mul(self, self.invert()) == 1 on the jointly known window; the
        inverse has valuation -v where v is the true valuation.
        """
        v = self.true_valuation()
        if v is None:
            raise NotAUnit("cannot invert: no nonzero coefficient in the known window")
        u0 = self._coeffs[v - self._valuation]
        if u0 not in (1, -1):
            raise NotAUnit(f"cannot invert: lowest coefficient is {u0}, not +1 or -1")
        a = self._coeffs[v - self._valuation :]
        n = len(a)
        out = [0] * n
        out[0] = u0  # 1/u0 == u0 for a unit +-1
        for e in range(1, n):
            acc = 0
            for j in range(1, e + 1):
                aj = a[j]
                if aj:
                    acc += aj * out[e - j]
            out[e] = -u0 * acc
        return LaurentSeries(-v, out, -v + n)

    def truncate(self, order: int) -> "LaurentSeries":
        """Restrict the known window to exponents < order (never extends it)."""
        if order >= self._order:
            return self
        lo = min(self._valuation, order)
        return LaurentSeries(lo, self._coeffs[: order - lo], order)

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        """Equality on the overlap of the known ranges, up to min(order)."""
        if isinstance(other, int):
            hi = self._order
            lo = min(self._valuation, 0)
            return all(
                self.coeff_at(e) == (other if e == 0 else 0) for e in range(lo, hi)
            )
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        hi = min(self._order, other._order)
        lo = min(self._valuation, other._valuation)
        if hi <= lo:
            return True
        a = self.truncate(hi)
        b = other.truncate(hi)
        return all(a.coeff_at(e) == b.coeff_at(e) for e in range(lo, hi))

    __hash__ = None  # equality is window-relative; hashing would be misleading

    # -- formatting ---------------------------------------------------------

    def q_string(self, max_terms: int = 12) -> str:
        """Human-readable polynomial form, e.g. '1 - q - q^2 + q^5 + O(q^6)'."""
        parts: list[str] = []
        shown = 0
        for e, c in self.nonzero_items():
            if shown == max_terms:
                parts.append("+ ...")
                break
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                term = str(mag)
            else:
                power = "q" if e == 1 else f"q^{e}"
                term = power if mag == 1 else f"{mag}*{power}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"{sign} {term}")
            shown += 1
        if not parts:
            parts.append("0")
        parts.append(f"+ O(q^{self._order})")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.q_string()

    def __repr__(self) -> str:
        return f"<LaurentSeries [{self._valuation}, {self._order}): {self.q_string(6)}>"
