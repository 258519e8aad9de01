"""Quadratic insertion sort for bounded distributive lattices.

Sorting ``x_1..x_n`` keeps the sorted prefix as a row of cells, padded on
the left by the lattice's bottom and on the right by its top.  Inserting
``x`` into a row of length ``m`` produces a row of length ``m + 1`` whose
k-th cell is ``row[k] meet (row[k-1] join x)``, the same recurrence that
builds Pascal's triangle out of sums.  The result equals the subset
definition exactly when the lattice is distributive.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .lattice import BoundedLattice, Element, OpCounter, lattice_ops

LITERAL = "literal"
OPTIMIZED = "optimized"
MODES = (LITERAL, OPTIMIZED)


class PreconditionViolated(ValueError):
    pass


@dataclass(frozen=True)
class PascalRow:
    """A sorted prefix of length ``m`` together with its virtual bounds."""

    lattice: BoundedLattice
    cells: tuple

    @property
    def m(self) -> int:
        return len(self.cells)

    def __len__(self) -> int:
        return len(self.cells)

    def at(self, k: int) -> Element:
        """Cell ``k`` for ``0 <= k <= m + 1``; the ends are bottom and top."""
        if k == 0:
            return self.lattice.bot
        if k == len(self.cells) + 1:
            return self.lattice.top
        if not 0 < k <= len(self.cells):
            raise IndexError(f"row position {k} outside [0, {len(self.cells) + 1}]")
        return self.cells[k - 1]

    @classmethod
    def empty(cls, lattice: BoundedLattice) -> "PascalRow":
        return cls(lattice, ())

    @classmethod
    def singleton(cls, lattice: BoundedLattice, x: Element) -> "PascalRow":
        return cls(lattice, (x,))


def _next_cells(lattice, cells, x, counter, mode):
    meet, join = lattice_ops(lattice, counter)
    n = len(cells) + 1
    if mode == LITERAL:
        padded = (lattice.bot, *cells, lattice.top)
        return tuple(meet(padded[k], join(padded[k - 1], x)) for k in range(1, n + 1))
    if mode != OPTIMIZED:
        raise ValueError(f"unknown mode {mode!r}, expected one of {MODES}")
    if n == 1:
        return (x,)
    # bot join x == x and top meet y == y need no lattice call
    new = [meet(cells[0], x)]
    new.extend(meet(cells[k], join(cells[k - 1], x)) for k in range(1, n - 1))
    new.append(join(cells[-1], x))
    return tuple(new)


def insert_step(
    lattice: BoundedLattice,
    row: PascalRow,
    x: Element,
    counter: OpCounter | None = None,
    mode: str = LITERAL,
) -> PascalRow:
    """Insert ``x`` into ``row``, giving the sorted row one element longer.

    In literal mode the bound cells go through the lattice like any other,
    so a row of length ``m`` costs ``m + 1`` joins and ``m + 1`` meets.
    Optimized mode skips the two operations involving a bound.
    """
    return PascalRow(lattice, _next_cells(lattice, row.cells, x, counter, mode))


def insert_dominating(lattice: BoundedLattice, row: PascalRow, x: Element) -> PascalRow:
    """Append ``x`` to ``row`` when it is above the row's last cell.

    In a distributive lattice this gives the same row as ``insert_step``
    without any meets or joins beyond the domination check.
    """
    if not lattice.leq(row.at(row.m), x):
        raise PreconditionViolated(
            f"{lattice.format(x)} does not dominate the row maximum {lattice.format(row.at(row.m))}"
        )
    return PascalRow(lattice, (*row.cells, x))


def sort_pascal(
    lattice: BoundedLattice,
    x: Sequence[Element],
    *,
    mode: str = LITERAL,
    counter: OpCounter | None = None,
    fast_path: bool = False,
) -> list:
    """Sort ``x`` in ``lattice`` with ``n(n+1) - 2`` meets and joins in literal mode.

    The lattice must be distributive for the result to agree with
    ``oracle.sort_spec``; this is not checked here (see
    ``analysis.is_distributive_direct``).  With ``fast_path`` an element
    dominating the current maximum is appended directly, at the price of
    one meet per insertion for the check.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}, expected one of {MODES}")
    if not x:
        return []
    cells = (x[0],)
    if fast_path:
        meet = lattice_ops(lattice, counter)[0]
        eq = lattice.eq
    for item in x[1:]:
        if fast_path:
            last = cells[-1]
            if eq(meet(last, item), last):
                cells = (*cells, item)
                continue
        cells = _next_cells(lattice, cells, item, counter, mode)
    return list(cells)


def sort_pascal_counted(
    lattice: BoundedLattice, x: Sequence[Element], mode: str = LITERAL
) -> tuple[list, OpCounter]:
    counter = OpCounter()
    return sort_pascal(lattice, x, mode=mode, counter=counter), counter


def expected_ops(n: int, mode: str = LITERAL) -> int:
    """Combined meet and join count of ``sort_pascal`` on ``n`` elements."""
    if n <= 0:
        return 0
    return n * (n + 1) - 2 if mode == LITERAL else n * (n - 1)
