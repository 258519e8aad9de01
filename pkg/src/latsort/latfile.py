"""Reading and writing the ``.lat`` finite-lattice text format.

A file holds an ``elements:`` line and a ``covers:`` line::

    # the pentagon
    elements: a b c d e
    covers: a<c c<d d<e a<b b<e

``#`` lines are comments and blank lines are ignored.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .lattice import FiniteLattice, from_cover_relation


class LatticeFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def parse_cover_text(text: str) -> tuple[list[str], list[tuple[str, str]]]:
    """Parse ``.lat`` text into element names and cover pairs, without validating the order."""
    names: list[str] | None = None
    covers: list[tuple[str, str]] | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep or key not in ("elements", "covers"):
            raise LatticeFormatError(f"expected 'elements:' or 'covers:', got {raw!r}", lineno)
        tokens = rest.split()
        if key == "elements":
            if names is not None:
                raise LatticeFormatError("duplicate 'elements:' line", lineno)
            if not tokens:
                raise LatticeFormatError("no elements declared", lineno)
            seen = set()
            for tok in tokens:
                if "<" in tok:
                    raise LatticeFormatError(f"invalid element name {tok!r}", lineno)
                if tok in seen:
                    raise LatticeFormatError(f"duplicate element {tok!r}", lineno)
                seen.add(tok)
            names = tokens
        else:
            if names is None:
                raise LatticeFormatError("'covers:' before 'elements:'", lineno)
            if covers is not None:
                raise LatticeFormatError("duplicate 'covers:' line", lineno)
            covers = []
            for tok in tokens:
                lower, sep, upper = tok.partition("<")
                if not sep or not lower or not upper or "<" in upper:
                    raise LatticeFormatError(f"malformed cover {tok!r}", lineno)
                for end in (lower, upper):
                    if end not in names:
                        raise LatticeFormatError(f"cover {tok!r} names undeclared element {end!r}", lineno)
                covers.append((lower, upper))
    if names is None:
        raise LatticeFormatError("missing 'elements:' line")
    return names, covers or []


def loads(text: str, name: str = "finite") -> FiniteLattice:
    """Parse and validate ``.lat`` text.

    Raises LatticeFormatError for syntax problems and a LatticeError
    subclass when the described order is not a bounded lattice.
    """
    names, covers = parse_cover_text(text)
    return from_cover_relation(names, covers, name)


def load(path: str | Path) -> FiniteLattice:
    path = Path(path)
    return loads(path.read_text(), path.stem)


def dumps(lattice: FiniteLattice, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append("elements: " + " ".join(lattice.names))
    lines.append("covers: " + " ".join(f"{lo}<{hi}" for lo, hi in lattice.covers()))
    return "\n".join(lines) + "\n"


FIXTURES = ("n5", "m3", "chain5", "bool3", "div60")


def fixture_path(name: str) -> Path:
    return Path(str(resources.files("latsort") / "data" / f"{name}.lat"))


def load_fixture(name: str) -> FiniteLattice:
    """Load one of the shipped lattices (see ``FIXTURES``)."""
    text = (resources.files("latsort") / "data" / f"{name}.lat").read_text()
    return loads(text, name)
