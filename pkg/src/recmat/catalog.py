"""Embedded reference-sequence catalog for cross-checking triangle output.

Finite prefixes only, no network lookup.  The little-Schroder list is
indexed s_0 = 1, s_1 = 3, ... (one step off the raw OEIS offset for
A001003, which starts 1, 1, 3, ...).
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    description: str
    values: tuple


CATALOG = {
    "A000108": CatalogEntry(
        "A000108", "Catalan numbers",
        (1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796)),
    "A001003": CatalogEntry(
        "A001003", "little Schroder numbers, indexed s_0 = 1, s_1 = 3",
        (1, 3, 11, 45, 197, 903, 4279, 20793, 103049)),
    "A039598": CatalogEntry(
        "A039598", "Shapiro Catalan triangle, rows flattened",
        (1,
         2, 1,
         5, 4, 1,
         14, 14, 6, 1,
         42, 48, 27, 8, 1,
         132, 165, 110, 44, 10, 1)),
    "A110440": CatalogEntry(
        "A110440", "little Schroder triangle, rows flattened",
        (1,
         3, 1,
         11, 6, 1,
         45, 31, 9, 1,
         197, 156, 60, 12, 1,
         903, 785, 360, 98, 15, 1)),
    "A033184": CatalogEntry(
        "A033184", "ballot numbers (k+1)/(n+1)*C(2n-k, n), rows flattened",
        (1,
         1, 1,
         2, 2, 1,
         5, 5, 3, 1,
         14, 14, 9, 4, 1,
         42, 42, 28, 14, 5, 1)),
}


def triangle_rows(id: str):
    """Unflatten a triangle catalog entry into rows [row0, row1, ...]."""
    values = list(CATALOG[id].values)
    rows, n = [], 0
    while values:
        rows.append(tuple(values[: n + 1]))
        del values[: n + 1]
        n += 1
    return rows
