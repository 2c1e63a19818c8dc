"""Greedy truck-factor estimation.

Starting from the author -> files map, repeatedly drop the author with the
most authored files; the truck factor is how many drops happen before the
surviving authors cover less than the threshold fraction of the files. The
greedy order is the point: it removes the most damaging developers first,
so the estimate answers "how many people, chosen adversarially, must leave
before the project is in trouble".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .authorship import AuthorFileMap
from .errors import DivisionUndefined, EmptyMap
from .identity import DeveloperId


@dataclass(frozen=True)
class RemovalStep:
    """One greedy removal: who left, with how many authored files, and the
    coverage that remained afterwards."""

    developer: DeveloperId
    files_authored: int
    coverage_after: float


@dataclass
class TruckFactorResult:
    tf: int
    removed: list[RemovalStep]
    initial_coverage: float
    file_universe_size: int


def coverage(universe: Iterable[str], author_map: AuthorFileMap) -> float:
    """Fraction of the universe that still has an author in the map."""
    files = set(universe)
    if not files:
        raise DivisionUndefined("coverage is undefined over an empty file universe")
    return len(author_map.all_files() & files) / len(files)


def top_author(author_map: AuthorFileMap) -> DeveloperId:
    """The author with the most files; ties go to the smallest canonical name."""
    if not author_map.entries:
        raise EmptyMap("the author map has no authors to pick from")
    return min(
        author_map.entries,
        key=lambda dev: (-len(author_map.entries[dev]), dev.canonical_name),
    )


def truck_factor(
    author_map: AuthorFileMap,
    threshold: float = 0.5,
    universe: Iterable[str] | None = None,
) -> TruckFactorResult:
    """Drop top authors while coverage holds at or above the threshold.

    The universe defaults to the union of all authored files; pass an
    explicit one (e.g. every analyzed file) to measure coverage against a
    larger denominator. An empty universe, or an initial coverage already
    below the threshold, yields a truck factor of zero.
    """
    remaining = AuthorFileMap(
        {dev: set(files) for dev, files in author_map.entries.items()}
    )
    files = frozenset(universe) if universe is not None else frozenset(
        remaining.all_files()
    )
    if not files:
        return TruckFactorResult(0, [], 0.0, 0)
    initial = coverage(files, remaining)
    removed: list[RemovalStep] = []
    current = initial
    while remaining.entries:
        if current < threshold:
            break
        departing = top_author(remaining)
        authored = len(remaining.entries[departing])
        del remaining.entries[departing]
        current = coverage(files, remaining)
        removed.append(RemovalStep(departing, authored, current))
    return TruckFactorResult(len(removed), removed, initial, len(files))
