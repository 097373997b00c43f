#!/usr/bin/env python3
"""Print the Poincare-series tables for ternary forms of degrees 3..7.

Each line shows the nonzero per-degree invariant counts computed with
the lattice-counting method (the degree-0 constant is included)."""

from forminv.counts import poincare_series

DEPTHS = {3: 26, 4: 30, 5: 30, 6: 13, 7: 21}


def main() -> None:
    for d, n_max in DEPTHS.items():
        rows = poincare_series(
            "ternary", d, n_max, method="counting", include_zeros=False
        )
        terms = " + ".join(
            f"{v if v != 1 else ''}t^{n}" if n else str(v) for n, v in rows
        )
        print(f"P_{d}(t) = {terms} + ...")


if __name__ == "__main__":
    main()
