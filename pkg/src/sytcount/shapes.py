"""Shapes in the column-length convention, and the constrained shape families.

A shape is stored as the weakly decreasing list of its column lengths; every
family constraint used elsewhere (the second-minus-third column difference,
equal adjacent columns) is a statement about that list, with the convention
that columns beyond the width have length 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from typing import Iterator


@dataclass(frozen=True)
class ColumnShape:
    """A shape given by its column lengths, leftmost column first."""

    columns: tuple[int, ...]

    def __post_init__(self) -> None:
        cols = tuple(self.columns)
        object.__setattr__(self, "columns", cols)
        if any(not isinstance(c, int) or c < 1 for c in cols):
            raise ValueError(f"column lengths must be positive integers: {cols!r}")
        if any(cols[k] < cols[k + 1] for k in range(len(cols) - 1)):
            raise ValueError(f"column lengths must be weakly decreasing: {cols!r}")

    @property
    def cells(self) -> int:
        return sum(self.columns)

    @property
    def width(self) -> int:
        return len(self.columns)

    def column(self, j: int) -> int:
        """Length of the j-th column (1-based); 0 for columns beyond the width."""
        if j < 1:
            raise ValueError("column indices are 1-based")
        return self.columns[j - 1] if j <= len(self.columns) else 0

    @classmethod
    def from_text(cls, text: str) -> "ColumnShape":
        """Parse a comma-separated column list, e.g. "4,2,1"; "" is the empty shape."""
        stripped = text.strip()
        if not stripped:
            return cls(())
        try:
            parts = tuple(int(p) for p in stripped.split(","))
        except ValueError:
            raise ValueError(f"malformed shape text: {text!r}") from None
        return cls(parts)

    def to_text(self) -> str:
        return ",".join(str(c) for c in self.columns)

    def __str__(self) -> str:
        return self.to_text()


def conjugate(shape: ColumnShape) -> ColumnShape:
    """Transpose of a shape: row lengths of the diagram, read as column lengths."""
    cols = shape.columns
    if not cols:
        return shape
    return ColumnShape(tuple(sum(1 for c in cols if c > r) for r in range(cols[0])))


@dataclass(frozen=True)
class ShapeFamilyQuery:
    """Constraints picking out a family of shapes with a fixed cell count.

    ``second_third_diff`` fixes c2 - c3 and ``equal_pair = j`` requires
    c_j = c_{j+1}; both read missing columns as length 0.
    """

    cells: int
    max_width: int
    second_third_diff: int | None = None
    equal_pair: int | None = None

    def __post_init__(self) -> None:
        if self.cells < 0:
            raise ValueError("cells must be >= 0")
        if self.max_width < 1:
            raise ValueError("max_width must be >= 1")
        if self.second_third_diff is not None and self.second_third_diff < 0:
            raise ValueError("second_third_diff must be >= 0")
        if self.equal_pair is not None and self.equal_pair < 1:
            raise ValueError("equal_pair must be >= 1")


@cache
def partitions_at_most(cells: int, width: int) -> tuple[tuple[int, ...], ...]:
    """Weakly decreasing positive tuples with at most `width` parts summing to
    `cells`, in lexicographically decreasing order."""
    if cells < 0 or width < 1:
        raise ValueError("need cells >= 0 and width >= 1")
    out: list[tuple[int, ...]] = []

    def grow(remaining: int, max_part: int, slots: int, prefix: tuple[int, ...]) -> None:
        if remaining == 0:
            out.append(prefix)
            return
        if slots == 0:
            return
        smallest = -(-remaining // slots)  # remaining parts must still fit
        for part in range(min(remaining, max_part), smallest - 1, -1):
            grow(remaining - part, part, slots - 1, prefix + (part,))

    grow(cells, cells, width, ())
    return tuple(out)


def _column(cols: tuple[int, ...], j: int) -> int:
    return cols[j - 1] if j <= len(cols) else 0


def enumerate_family(query: ShapeFamilyQuery) -> Iterator[ColumnShape]:
    """Yield every shape matching `query` exactly once, in lexicographically
    decreasing column-list order."""
    diff = query.second_third_diff
    pair = query.equal_pair
    for cols in partitions_at_most(query.cells, query.max_width):
        if diff is not None and _column(cols, 2) - _column(cols, 3) != diff:
            continue
        if pair is not None and _column(cols, pair) != _column(cols, pair + 1):
            continue
        yield ColumnShape(cols)


def r3_shape(n: int, i: int) -> ColumnShape | None:
    """The unique equal-first-two-columns shape on n-1 cells that the
    three-column recurrence subtracts at position (n, i), if it exists.

    The shape exists exactly when n - 2i is 2 mod 3 and the resulting column
    list is weakly decreasing with positive parts; it then has column lengths
    (a, a, b) with a = (n+i-2)/3 and b = (n-2i+1)/3.
    """
    if n < 1 or i < 0 or i > n // 2:
        raise ValueError(f"need n >= 1 and 0 <= i <= n//2, got {(n, i)!r}")
    if (n - 2 * i) % 3 != 2:
        return None
    tall = (n + i - 2) // 3
    short = (n - 2 * i + 1) // 3
    if short < 1 or tall < short:
        return None
    return ColumnShape((tall, tall, short))
