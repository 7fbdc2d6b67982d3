"""Largest known minimum weights d(n) of singly even self-dual codes.

Only lengths that appear in the two bound tables are shipped. Values for
n <= 72 come from Conway and Sloane (1990, Table I); 74 <= n <= 100 from
the DGH tables (1997, Table VI).
"""

from __future__ import annotations

D_OF_N: dict[int, tuple[int, str]] = {
    42: (8, "Conway-Sloane Table I"),
    62: (12, "Conway-Sloane Table I"),
    70: (14, "Conway-Sloane Table I"),
    72: (14, "Conway-Sloane Table I"),
    82: (16, "DGH Table VI"),
    90: (16, "DGH Table VI"),
    98: (18, "DGH Table VI"),
    100: (18, "DGH Table VI"),
}


def d_of_n(n: int) -> int | None:
    """d(n) if shipped, else None (unknown)."""
    entry = D_OF_N.get(n)
    return entry[0] if entry else None


def provenance(n: int) -> str | None:
    entry = D_OF_N.get(n)
    return entry[1] if entry else None
