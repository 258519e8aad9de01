"""Lattice abstractions and the concrete lattices used by the sorting code.

Every lattice is a plain object exposing ``meet``, ``join``, ``eq`` and
``leq``; bounded lattices additionally carry ``bot`` and ``top``.  Elements
are ordinary Python values (ints, bitmasks, table indices) so that the hot
loops in the sorting code stay cheap.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd
from typing import Any, Callable, Iterable, Sequence

import numpy as np

Element = Any


class LatticeError(Exception):
    """Base class for errors raised while building a lattice."""


class CycleError(LatticeError):
    pass


class NotALattice(LatticeError):
    def __init__(self, pair: tuple[str, str], missing: str):
        self.pair = pair
        self.missing = missing
        super().__init__(f"elements {pair[0]!r} and {pair[1]!r} have no unique {missing}")


class NoBounds(LatticeError):
    pass


class Lattice:
    """A lattice given by its meet and join operations."""

    name = "lattice"

    def meet(self, a: Element, b: Element) -> Element:
        raise NotImplementedError

    def join(self, a: Element, b: Element) -> Element:
        raise NotImplementedError

    def eq(self, a: Element, b: Element) -> bool:
        return a == b

    def leq(self, a: Element, b: Element) -> bool:
        return self.eq(self.meet(a, b), a)

    # token syntax used by the command line
    def parse(self, token: str) -> Element:
        raise NotImplementedError

    def format(self, a: Element) -> str:
        return str(a)


class BoundedLattice(Lattice):
    bot: Element
    top: Element


class DivisibilityLattice(BoundedLattice):
    """Nonnegative integers ordered by divisibility.

    ``1`` is the least element and ``0`` the greatest, since every integer
    divides ``0``.
    """

    name = "div"
    bot = 1
    top = 0

    def meet(self, a: int, b: int) -> int:
        if a == 0:
            return b
        if b == 0:
            return a
        return gcd(a, b)

    def join(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return a // gcd(a, b) * b

    def leq(self, a: int, b: int) -> bool:
        if b == 0:
            return True
        if a == 0:
            return False
        return b % a == 0

    def parse(self, token: str) -> int:
        if not token.isdigit():
            raise ValueError(f"not a natural number: {token!r}")
        return int(token)


class _Marker:
    """A synthetic bound, distinct from every element of the base lattice."""

    __slots__ = ("label",)

    def __init__(self, label: str):
        self.label = label

    def __repr__(self) -> str:
        return self.label


class AdjoinedLattice(BoundedLattice):
    """``base`` with a fresh least and greatest element added."""

    def __init__(self, base: Lattice, bot_label: str = "⊥", top_label: str = "⊤"):
        self.base = base
        self.bot = _Marker(bot_label)
        self.top = _Marker(top_label)
        self.name = f"adjoin({base.name})"

    def meet(self, a, b):
        bot, top = self.bot, self.top
        if a is bot or b is bot:
            return bot
        if a is top:
            return b
        if b is top:
            return a
        return self.base.meet(a, b)

    def join(self, a, b):
        bot, top = self.bot, self.top
        if a is top or b is top:
            return top
        if a is bot:
            return b
        if b is bot:
            return a
        return self.base.join(a, b)

    def eq(self, a, b):
        if isinstance(a, _Marker) or isinstance(b, _Marker):
            return a is b
        return self.base.eq(a, b)

    def leq(self, a, b):
        if a is self.bot or b is self.top:
            return True
        if a is self.top or b is self.bot:
            return False
        return self.base.leq(a, b)

    def parse(self, token):
        if token == self.bot.label:
            return self.bot
        if token == self.top.label:
            return self.top
        return self.base.parse(token)

    def format(self, a):
        if isinstance(a, _Marker):
            return a.label
        return self.base.format(a)


class IntegerChain(Lattice):
    """Unbounded chain of integers under min/max."""

    name = "int"

    def meet(self, a: int, b: int) -> int:
        return a if a <= b else b

    def join(self, a: int, b: int) -> int:
        return b if a <= b else a

    def leq(self, a: int, b: int) -> bool:
        return a <= b

    def parse(self, token: str) -> int:
        return int(token)


INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


class TotalOrderLattice(AdjoinedLattice):
    """64-bit signed integers under min/max, bounded by ``-inf``/``+inf`` markers."""

    def __init__(self):
        super().__init__(IntegerChain(), "-inf", "+inf")
        self.name = "order"

    def parse(self, token: str):
        value = super().parse(token)
        if isinstance(value, int) and not INT64_MIN <= value <= INT64_MAX:
            raise ValueError(f"integer out of 64-bit range: {token!r}")
        return value


class PowersetLattice(BoundedLattice):
    """Subsets of a ``universe``-element set encoded as bitmasks."""

    def __init__(self, universe: int):
        if not 0 <= universe <= 64:
            raise ValueError("universe size must be between 0 and 64")
        self.universe = universe
        self.bot = 0
        self.top = (1 << universe) - 1
        self.name = f"powerset:{universe}"

    def meet(self, a: int, b: int) -> int:
        return a & b

    def join(self, a: int, b: int) -> int:
        return a | b

    def leq(self, a: int, b: int) -> bool:
        return a & ~b == 0

    def contains(self, a: int) -> bool:
        return 0 <= a <= self.top

    def parse(self, token: str) -> int:
        value = int(token, 16)
        if not self.contains(value):
            raise ValueError(f"mask {token!r} exceeds a {self.universe}-element universe")
        return value

    def format(self, a: int) -> str:
        return hex(a)


# -- finite lattices ---------------------------------------------------------


class FiniteLattice(BoundedLattice):
    """An explicitly tabulated lattice; elements are indices into ``names``."""

    def __init__(
        self,
        names: Sequence[str],
        leq_matrix: Sequence[Sequence[bool]],
        meet_table: Sequence[Sequence[int]],
        join_table: Sequence[Sequence[int]],
        bot: int,
        top: int,
        name: str = "finite",
    ):
        self.names = tuple(names)
        self.leq_matrix = tuple(tuple(bool(v) for v in row) for row in leq_matrix)
        self.meet_table = tuple(tuple(row) for row in meet_table)
        self.join_table = tuple(tuple(row) for row in join_table)
        self.bot = bot
        self.top = top
        self.name = name
        self._index = {n: i for i, n in enumerate(self.names)}

    def __len__(self) -> int:
        return len(self.names)

    def __repr__(self) -> str:
        return f"FiniteLattice({self.name!r}, {len(self)} elements)"

    @property
    def elements(self) -> range:
        return range(len(self.names))

    def index(self, name: str) -> int:
        return self._index[name]

    def __getitem__(self, name: str) -> int:
        return self._index[name]

    def meet(self, a: int, b: int) -> int:
        return self.meet_table[a][b]

    def join(self, a: int, b: int) -> int:
        return self.join_table[a][b]

    def leq(self, a: int, b: int) -> bool:
        return self.leq_matrix[a][b]

    def parse(self, token: str) -> int:
        try:
            return self._index[token]
        except KeyError:
            raise ValueError(f"unknown element {token!r}") from None

    def format(self, a: int) -> str:
        return self.names[a]

    def covers(self) -> list[tuple[str, str]]:
        """The Hasse diagram as ``(lower, upper)`` name pairs."""
        n = len(self)
        le = self.leq_matrix
        result = []
        for a in range(n):
            for b in range(n):
                if a == b or not le[a][b]:
                    continue
                if not any(c != a and c != b and le[a][c] and le[c][b] for c in range(n)):
                    result.append((self.names[a], self.names[b]))
        return result

    def same_tables(self, other: "FiniteLattice") -> bool:
        return (
            self.names == other.names
            and self.leq_matrix == other.leq_matrix
            and self.meet_table == other.meet_table
            and self.join_table == other.join_table
            and (self.bot, self.top) == (other.bot, other.top)
        )


def _transitive_closure(adjacency: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure by repeated squaring of the reachability matrix."""
    n = adjacency.shape[0]
    reach = adjacency.astype(bool) | np.eye(n, dtype=bool)
    while True:
        step = (reach.astype(np.int64) @ reach.astype(np.int64)) > 0
        if np.array_equal(step, reach):
            return reach
        reach = step


def _from_order(names: Sequence[str], le: np.ndarray, name: str) -> FiniteLattice:
    n = len(names)
    bots = [a for a in range(n) if le[a].all()]
    tops = [a for a in range(n) if le[:, a].all()]
    if len(bots) != 1 or len(tops) != 1:
        raise NoBounds(
            f"expected a unique bottom and top, found bottoms {[names[a] for a in bots]} "
            f"and tops {[names[a] for a in tops]}"
        )

    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            lower = np.flatnonzero(le[:, a] & le[:, b])
            glb = [c for c in lower if le[lower, c].all()]
            if len(glb) != 1:
                raise NotALattice((names[a], names[b]), "greatest lower bound")
            upper = np.flatnonzero(le[a] & le[b])
            lub = [c for c in upper if le[c, upper].all()]
            if len(lub) != 1:
                raise NotALattice((names[a], names[b]), "least upper bound")
            meet[a][b] = meet[b][a] = int(glb[0])
            join[a][b] = join[b][a] = int(lub[0])
    return FiniteLattice(names, le.tolist(), meet, join, bots[0], tops[0], name)


def from_cover_relation(
    names: Sequence[str],
    covers: Iterable[tuple[str, str]],
    name: str = "finite",
) -> FiniteLattice:
    """Build a finite lattice from its elements and ``(lower, upper)`` cover pairs.

    Raises CycleError when the covers are cyclic, NoBounds when there is no
    unique bottom or top, and NotALattice naming the first pair (in
    declaration order) lacking a unique meet or join.
    """
    names = list(names)
    if not names:
        raise ValueError("a lattice needs at least one element")
    if len(set(names)) != len(names):
        dupes = sorted({n for n in names if names.count(n) > 1})
        raise ValueError(f"duplicate element names: {dupes}")
    index = {n: i for i, n in enumerate(names)}
    adjacency = np.zeros((len(names), len(names)), dtype=bool)
    for lower, upper in covers:
        for end in (lower, upper):
            if end not in index:
                raise ValueError(f"cover {lower}<{upper} references undeclared element {end!r}")
        if lower == upper:
            raise CycleError(f"cover {lower}<{upper} is a self-loop")
        adjacency[index[lower], index[upper]] = True

    le = _transitive_closure(adjacency)
    both = le & le.T
    np.fill_diagonal(both, False)
    if both.any():
        a, b = np.argwhere(both)[0]
        raise CycleError(f"cover relation is cyclic through {names[a]!r} and {names[b]!r}")
    return _from_order(names, le, name)


def from_lattice(
    lattice: Lattice,
    elements: Sequence[Element],
    names: Sequence[str] | None = None,
    name: str | None = None,
) -> FiniteLattice:
    """Tabulate a finite subset of ``lattice`` closed under meet and join."""
    if names is None:
        names = [lattice.format(e) for e in elements]
    n = len(elements)
    le = np.array([[lattice.leq(a, b) for b in elements] for a in elements], dtype=bool)
    if n != len(set(names)):
        raise ValueError("element names must be unique")
    return _from_order(list(names), le, name or lattice.name)


def canonical_n5() -> FiniteLattice:
    """The pentagon: chain a < b < d < e with c sitting beside b and d.

    With this labeling sorting (c, d, b) gives (a, d, e) and sorting (c, d)
    gives (a, e), while the insertion step rebuilds the middle cell as b.
    """
    return from_cover_relation(
        "abcde", [("a", "b"), ("b", "d"), ("d", "e"), ("a", "c"), ("c", "e")], "N5"
    )


def canonical_m3() -> FiniteLattice:
    """The diamond with three atoms b, c, d between a and e."""
    return from_cover_relation(
        "abcde", [("a", "b"), ("a", "c"), ("a", "d"), ("b", "e"), ("c", "e"), ("d", "e")], "M3"
    )


def chain(length: int) -> FiniteLattice:
    names = [f"c{i}" for i in range(length)]
    return from_cover_relation(names, list(zip(names, names[1:])), f"chain{length}")


def adjoin_bounds(lattice: Lattice, bot_label: str = "bot", top_label: str = "top"):
    """Add a fresh least and greatest element to ``lattice``.

    Finite lattices stay finite lattices (the labels become element names and
    are suffixed until unique); anything else is wrapped in an AdjoinedLattice.
    """
    if not isinstance(lattice, FiniteLattice):
        return AdjoinedLattice(lattice, bot_label, top_label)
    taken = set(lattice.names)
    while bot_label in taken:
        bot_label += "'"
    while top_label in taken or top_label == bot_label:
        top_label += "'"
    names = [bot_label, *lattice.names, top_label]
    covers = [
        (bot_label, lattice.names[lattice.bot]),
        *lattice.covers(),
        (lattice.names[lattice.top], top_label),
    ]
    return from_cover_relation(names, covers, f"adjoin({lattice.name})")


# -- law checking -------------------------------------------------------------


@dataclass(frozen=True)
class LawResult:
    law: str
    passed: bool
    witness: tuple | None = None


@dataclass
class LawReport:
    results: dict[str, LawResult] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results.values())

    def __getitem__(self, law: str) -> LawResult:
        return self.results[law]

    def failures(self) -> list[LawResult]:
        return [r for r in self.results.values() if not r.passed]


def _first_failure(law: str, tuples: Iterable[tuple], holds: Callable[..., bool]) -> LawResult:
    for t in tuples:
        if not holds(*t):
            return LawResult(law, False, t)
    return LawResult(law, True)


def verify_lattice_laws(lat: FiniteLattice) -> LawReport:
    """Exhaustively check the lattice and bound laws on ``lat``'s tables.

    Failures are reported with the first witness tuple in declaration order;
    nothing is raised.
    """
    m, j = lat.meet, lat.join
    els = list(lat.elements)
    pairs = list(itertools.product(els, repeat=2))
    triples = itertools.product(els, repeat=3)

    def commutes(a, b):
        return m(a, b) == m(b, a) and j(a, b) == j(b, a)

    def associates(a, b, c):
        return m(m(a, b), c) == m(a, m(b, c)) and j(j(a, b), c) == j(a, j(b, c))

    def idempotent(a):
        return m(a, a) == a and j(a, a) == a

    def absorbs(a, b):
        return m(a, j(a, b)) == a and j(a, m(a, b)) == a

    def bot_neutral(a):
        return j(lat.bot, a) == a and j(a, lat.bot) == a

    def top_neutral(a):
        return m(lat.top, a) == a and m(a, lat.top) == a

    report = LawReport()
    for result in (
        _first_failure("commutativity", pairs, commutes),
        _first_failure("associativity", triples, associates),
        _first_failure("idempotence", [(a,) for a in els], idempotent),
        _first_failure("absorption", pairs, absorbs),
        _first_failure("bot_neutral", [(a,) for a in els], bot_neutral),
        _first_failure("top_neutral", [(a,) for a in els], top_neutral),
    ):
        report.results[result.law] = result
    return report


# -- instrumentation ----------------------------------------------------------


@dataclass
class OpCounter:
    """Tallies of meet/join invocations (and subsets visited by the oracle)."""

    meets: int = 0
    joins: int = 0
    subsets: int = 0

    @property
    def total(self) -> int:
        return self.meets + self.joins

    def wrap(self, lattice: Lattice) -> tuple[Callable, Callable]:
        """Counting versions of ``lattice.meet`` and ``lattice.join``."""
        meet, join = lattice.meet, lattice.join

        def counted_meet(a, b):
            self.meets += 1
            return meet(a, b)

        def counted_join(a, b):
            self.joins += 1
            return join(a, b)

        return counted_meet, counted_join


def lattice_ops(lattice: Lattice, counter: OpCounter | None) -> tuple[Callable, Callable]:
    if counter is None:
        return lattice.meet, lattice.join
    return counter.wrap(lattice)
