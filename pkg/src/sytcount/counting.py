"""Exact per-shape tableau counting.

Three independent routes compute the same number: the hook length formula
(the workhorse), a memoized corner-removal recursion, and explicit
enumeration of the fillings. The two brute-force routes exist to validate
the hook route and each other; no floating point appears anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from math import factorial
from typing import Iterator

from .shapes import ColumnShape

DEFAULT_ENUMERATION_CAP = 16


class HookDivisionError(ArithmeticError):
    """Internal consistency failure: n! was not divisible by the hook product."""


@dataclass(frozen=True)
class StandardTableau:
    """A standard filling of a shape, stored column by column (top to bottom)."""

    columns: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> ColumnShape:
        return ColumnShape(tuple(len(col) for col in self.columns))

    @property
    def cells(self) -> int:
        return sum(len(col) for col in self.columns)

    def is_standard(self) -> bool:
        """Entries are 1..n, strictly increasing down columns and along rows."""
        entries = [x for col in self.columns for x in col]
        if sorted(entries) != list(range(1, len(entries) + 1)):
            return False
        for col in self.columns:
            if any(col[r] >= col[r + 1] for r in range(len(col) - 1)):
                return False
        for k in range(len(self.columns) - 1):
            left, right = self.columns[k], self.columns[k + 1]
            if len(right) > len(left):
                return False
            if any(left[r] >= right[r] for r in range(len(right))):
                return False
        return True


@cache
def _hook_count(cols: tuple[int, ...]) -> int:
    n = sum(cols)
    if n == 0:
        return 1
    # Hooks are taken on the row-form diagram; its column lengths are `cols`.
    rows = tuple(sum(1 for c in cols if c > r) for r in range(cols[0]))
    product = 1
    for r, row_len in enumerate(rows):
        for c in range(row_len):
            product *= (row_len - c) + (cols[c] - r) - 1
    count, remainder = divmod(factorial(n), product)
    if remainder:
        raise HookDivisionError(
            f"hook product {product} does not divide {n}! for columns {cols}")
    return count


def syt_count_hlf(shape: ColumnShape) -> int:
    """Number of standard fillings of `shape`, by the hook length formula."""
    return _hook_count(shape.columns)


@cache
def _removal_count(cols: tuple[int, ...]) -> int:
    if not cols:
        return 1
    total = 0
    for k in range(len(cols)):
        if k + 1 == len(cols) or cols[k] > cols[k + 1]:
            if cols[k] == 1:
                shrunk = cols[:k]  # removable 1-cell column is always the last
            else:
                shrunk = cols[:k] + (cols[k] - 1,) + cols[k + 1:]
            total += _removal_count(shrunk)
    return total


def syt_count_recursive(shape: ColumnShape) -> int:
    """Number of standard fillings, by memoized removal of corner cells."""
    return _removal_count(shape.columns)


def syt_enumerate(shape: ColumnShape,
                  cap: int = DEFAULT_ENUMERATION_CAP) -> Iterator[StandardTableau]:
    """Yield every standard filling of `shape`, deterministically ordered.

    Fillings are produced by placing 1..n at addable corners, trying columns
    left to right. Shapes above `cap` cells are rejected up front: the number
    of fillings grows super-exponentially and this enumeration exists for
    desk-scale validation only.
    """
    if shape.cells > cap:
        raise ValueError(
            f"shape has {shape.cells} cells, above the enumeration cap of {cap}")
    cols = shape.columns
    n = shape.cells
    heights = [0] * len(cols)
    filling: list[list[int]] = [[] for _ in cols]

    def place(symbol: int) -> Iterator[StandardTableau]:
        if symbol > n:
            yield StandardTableau(tuple(tuple(col) for col in filling))
            return
        for k in range(len(cols)):
            if heights[k] < cols[k] and (k == 0 or heights[k] < heights[k - 1]):
                heights[k] += 1
                filling[k].append(symbol)
                yield from place(symbol + 1)
                filling[k].pop()
                heights[k] -= 1

    return place(1)
