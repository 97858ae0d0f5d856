"""Expand some classical product quotients and watch coefficients vanish.

The quotient (q^3, q^5; q^8)oo / (q, q^7; q^8)oo has zero coefficients at
every exponent 4n+3, and its reciprocal at every 4n+2.  This script expands
both exactly and prints the coefficient grid so the vanishing columns are
visible by eye.
"""

from __future__ import annotations

from qvanish import ProductSpec, expand_product, pochhammer


def show_grid(title: str, num, den, modulus: int, columns: int, order: int = 120) -> None:
    spec = ProductSpec(1, 0, pochhammer(num, modulus), pochhammer(den, modulus))
    series = expand_product(spec, order)
    print(title)
    print("      " + "".join(f"{c:>8}" for c in range(columns)))
    for row in range(0, order // columns):
        cells = [series[row * columns + c] for c in range(columns)]
        print(f"{row * columns:>5} " + "".join(f"{c:>8}" for c in cells))
    zero_columns = [
        c
        for c in range(columns)
        if all(series[e] == 0 for e in range(c, order, columns))
    ]
    print(f"all-zero columns mod {columns}: {zero_columns}\n")


def main() -> None:
    show_grid("F(q) = (q^3,q^5;q^8) / (q,q^7;q^8), rows of 4:", (3, 5), (1, 7), 8, 4)
    show_grid("1/F(q), rows of 4:", (1, 7), (3, 5), 8, 4)
    show_grid("G(q) = (q^5,q^7;q^12) / (q,q^11;q^12), rows of 6:", (5, 7), (1, 11), 12, 6)
    show_grid("1/G(q), rows of 6:", (1, 11), (5, 7), 12, 6)


if __name__ == "__main__":
    main()
