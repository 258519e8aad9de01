"""Sorting in a lattice straight from the subset definition.

The k-th output element is the meet, over every k-element subset of
positions, of the join of the entries at those positions.  This costs
``n * 2**(n-1)`` joins and is only meant as a reference to check faster
algorithms against.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Sequence

from .lattice import Element, Lattice, OpCounter, lattice_ops


def k_subsets(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Yield the k-element subsets of ``[1, n]`` as increasing tuples, lexicographically.

    ``k == 0`` yields nothing.
    """
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    if k > n:
        raise ValueError(f"cannot choose {k} of {n} elements")
    if k == 0:
        return iter(())
    return combinations(range(1, n + 1), k)


def sort_spec(lattice: Lattice, x: Sequence[Element], counter: OpCounter | None = None) -> list:
    """Sort ``x`` in ``lattice`` by brute force over all nonempty subsets.

    With a ``counter`` the meets, joins and visited subsets are tallied.
    """
    meet, join = lattice_ops(lattice, counter)
    n = len(x)
    out = []
    for k in range(1, n + 1):
        acc = None
        for subset in k_subsets(n, k):
            it = iter(subset)
            j = x[next(it) - 1]
            for i in it:
                j = join(j, x[i - 1])
            acc = j if acc is None else meet(acc, j)
            if counter is not None:
                counter.subsets += 1
        out.append(acc)
    return out


def sort3(lattice: Lattice, x1: Element, x2: Element, x3: Element) -> list:
    """Closed form of ``sort_spec`` for three elements."""
    m, j = lattice.meet, lattice.join
    return [
        m(m(x1, x2), x3),
        m(m(j(x1, x2), j(x1, x3)), j(x2, x3)),
        j(j(x1, x2), x3),
    ]
