"""Two independent distributivity checks for finite lattices.

``is_distributive_direct`` tests the distributive law on every triple.
``pascal_identity_holds`` instead looks for a short sequence on which the
insertion sort disagrees with the subset-based oracle.  A lattice passes one
check exactly when it passes the other; the CLI reports both so any
disagreement surfaces as a bug.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from .lattice import FiniteLattice
from .oracle import sort_spec
from .pascal import sort_pascal


class Verdict(enum.Enum):
    DISTRIBUTIVE = "distributive"
    NOT_DISTRIBUTIVE = "not distributive"


@dataclass(frozen=True)
class IdentityWitness:
    sequence: tuple[int, ...]
    pascal: tuple[int, ...]
    spec: tuple[int, ...]

    @property
    def position(self) -> int:
        """1-based index of the first cell where the two sorts differ."""
        return next(k for k, (p, s) in enumerate(zip(self.pascal, self.spec), 1) if p != s)


@dataclass(frozen=True)
class DistributivityReport:
    verdict: Verdict
    law_witness: tuple[int, int, int] | None = None
    identity_witness: IdentityWitness | None = None

    @property
    def distributive(self) -> bool:
        return self.verdict is Verdict.DISTRIBUTIVE


def violates_distributive_law(lat: FiniteLattice, a: int, b: int, c: int) -> bool:
    m, j = lat.meet, lat.join
    return m(a, j(b, c)) != j(m(a, b), m(a, c))


def is_distributive_direct(lat: FiniteLattice) -> DistributivityReport:
    for a, b, c in itertools.product(lat.elements, repeat=3):
        if violates_distributive_law(lat, a, b, c):
            return DistributivityReport(Verdict.NOT_DISTRIBUTIVE, law_witness=(a, b, c))
    return DistributivityReport(Verdict.DISTRIBUTIVE)


def identity_mismatch(lat: FiniteLattice, seq) -> IdentityWitness | None:
    pascal = tuple(sort_pascal(lat, seq))
    spec = tuple(sort_spec(lat, seq))
    if pascal != spec:
        return IdentityWitness(tuple(seq), pascal, spec)
    return None


def pascal_identity_holds(lat: FiniteLattice, max_len: int = 3) -> DistributivityReport:
    """Search sequences of length 3..max_len for a pascal/oracle mismatch.

    Sequences are tried in lexicographic order of element indices, so the
    reported witness is deterministic.  Length 3 already decides the verdict.
    """
    if max_len < 3:
        raise ValueError("max_len must be at least 3")
    for length in range(3, max_len + 1):
        for seq in itertools.product(lat.elements, repeat=length):
            witness = identity_mismatch(lat, seq)
            if witness is not None:
                return DistributivityReport(Verdict.NOT_DISTRIBUTIVE, identity_witness=witness)
    return DistributivityReport(Verdict.DISTRIBUTIVE)
