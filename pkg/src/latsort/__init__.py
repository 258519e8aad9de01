"""Sorting sequences in bounded lattices."""

from .analysis import (
    DistributivityReport,
    IdentityWitness,
    Verdict,
    is_distributive_direct,
    pascal_identity_holds,
)
from .lattice import (
    AdjoinedLattice,
    BoundedLattice,
    CycleError,
    DivisibilityLattice,
    FiniteLattice,
    IntegerChain,
    Lattice,
    LatticeError,
    NoBounds,
    NotALattice,
    OpCounter,
    PowersetLattice,
    TotalOrderLattice,
    adjoin_bounds,
    canonical_m3,
    canonical_n5,
    chain,
    from_cover_relation,
    from_lattice,
    verify_lattice_laws,
)
from .oracle import k_subsets, sort3, sort_spec
from .pascal import (
    PascalRow,
    PreconditionViolated,
    insert_dominating,
    insert_step,
    sort_pascal,
    sort_pascal_counted,
)

__version__ = "0.1.0"
