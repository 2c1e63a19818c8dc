"""Per-file authorship scoring.

Each file's change trace is folded into per-developer counts — FA (did this
developer create the file), DL (their own changes), AC (changes by everyone
else) — and the counts feed a degree-of-authorship score:

    doa = 3.293 + 1.098*FA + 0.164*DL - 0.321*ln(1 + AC)

Scores are normalized against the file's maximum, so the top contributor
always sits at 1.0, and a developer authors a file when the normalized
score strictly exceeds ``k`` and the absolute score is at least ``m``.
The defaults for ``k`` and ``m`` are the empirically calibrated values.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping

from .errors import BlameFailed, DivisionUndefined, GitInvocationFailed
from .history import ChangeKind, FileTrace, run_git
from .identity import DeveloperId, RawUser

DOA_INTERCEPT = 3.293
DOA_FIRST_AUTHORSHIP_WEIGHT = 1.098
DOA_DELIVERIES_WEIGHT = 0.164
DOA_ACCEPTANCES_WEIGHT = 0.321


@dataclass
class Thresholds:
    """Author-selection and coverage thresholds.

    ``k`` is the normalized-score cut (strict), ``m`` the absolute floor
    (inclusive) that keeps near-zero-signal files from gaining authors, and
    ``coverage`` the fraction of files that must stay covered during the
    greedy estimation.
    """

    k: float = 0.75
    m: float = DOA_INTERCEPT
    coverage: float = 0.5


@dataclass
class AuthorshipRecord:
    """One developer's standing on one file."""

    developer: DeveloperId
    file: str
    fa: int
    dl: int
    ac: int
    doa_abs: float
    doa_norm: float = 0.0
    is_author: bool = False


@dataclass
class AuthorFileMap:
    """Authors and the files they author; the input to the greedy estimator."""

    entries: dict[DeveloperId, set[str]] = field(default_factory=dict)

    def all_files(self) -> set[str]:
        out: set[str] = set()
        for files in self.entries.values():
            out |= files
        return out


def doa(fa: int, dl: int, ac: int) -> float:
    """Degree-of-authorship score for one developer on one file."""
    return (
        DOA_INTERCEPT
        + DOA_FIRST_AUTHORSHIP_WEIGHT * fa
        + DOA_DELIVERIES_WEIGHT * dl
        - DOA_ACCEPTANCES_WEIGHT * math.log(1 + ac)
    )


def accumulate(
    trace: FileTrace, alias_map: Mapping[RawUser, DeveloperId]
) -> list[tuple[DeveloperId, int, int, int]]:
    """Fold a trace into per-developer (FA, DL, AC) counts.

    Every event in the trace is one delivery for its developer, and one
    acceptance for everyone else who touched the file. First authorship
    goes to whoever made the earliest addition; an incomplete trace (the
    addition predates recorded history) assigns FA to nobody.
    """
    deliveries: dict[DeveloperId, int] = defaultdict(int)
    for event in trace.events:
        deliveries[alias_map[event.author]] += 1
    creator: DeveloperId | None = None
    for event in trace.events:
        if event.kind is ChangeKind.ADDITION:
            creator = alias_map[event.author]
            break
    total = len(trace.events)
    return [
        (dev, int(dev == creator), dl, total - dl)
        for dev, dl in sorted(
            deliveries.items(), key=lambda kv: kv[0].canonical_name
        )
    ]


def normalize(file_records: list[AuthorshipRecord]) -> list[AuthorshipRecord]:
    """Set each record's normalized score: doa_abs over the file's maximum.

    A non-positive maximum leaves nothing meaningful to scale against, so
    every normalized score becomes 0.0 and the file ends up authorless.
    """
    if not file_records:
        raise ValueError("normalize needs at least one record")
    top = max(record.doa_abs for record in file_records)
    for record in file_records:
        record.doa_norm = record.doa_abs / top if top > 0.0 else 0.0
    return file_records


def score_trace(
    trace: FileTrace, alias_map: Mapping[RawUser, DeveloperId]
) -> list[AuthorshipRecord]:
    """Accumulate, score, and normalize one file's trace."""
    records = [
        AuthorshipRecord(dev, trace.current_path, fa, dl, ac, doa(fa, dl, ac))
        for dev, fa, dl, ac in accumulate(trace, alias_map)
    ]
    if records:
        normalize(records)
    return records


def select_authors(
    records: Iterable[AuthorshipRecord], thresholds: Thresholds | None = None
) -> AuthorFileMap:
    """Mark each record's author flag and collect the author -> files map.

    A developer authors a file when doa_norm > k and doa_abs >= m. Files
    whose best score is not positive get no authors at all.
    """
    thresholds = thresholds or Thresholds()
    by_file: dict[str, list[AuthorshipRecord]] = defaultdict(list)
    for record in records:
        by_file[record.file].append(record)
    entries: dict[DeveloperId, set[str]] = defaultdict(set)
    for file, file_records in sorted(by_file.items()):
        top = max(record.doa_abs for record in file_records)
        for record in file_records:
            record.is_author = (
                top > 0.0
                and record.doa_norm > thresholds.k
                and record.doa_abs >= thresholds.m
            )
            if record.is_author:
                entries[record.developer].add(file)
    ordered = sorted(entries.items(), key=lambda kv: kv[0].canonical_name)
    return AuthorFileMap({dev: files for dev, files in ordered})


def blame_rank(
    repo_path: str | Path,
    file: str,
    alias_map: Mapping[RawUser, DeveloperId],
    branch: str | None = None,
) -> list[tuple[DeveloperId, int]]:
    """Developers ranked by how many of the file's lines they last touched.

    This is the independent signal used to sanity-check the change-based
    scores: surviving lines per developer, from ``git blame``. Users that
    blame surfaces but the alias map has never seen (possible: blame can
    reach commits that merge suppression hid) become singleton developers.
    """
    try:
        out = run_git(
            repo_path,
            ["blame", "--line-porcelain", branch or "HEAD", "--", file],
        )
    except GitInvocationFailed as exc:
        raise BlameFailed(f"blame failed for {file}: {exc.stderr or exc}") from exc
    counts: dict[DeveloperId, int] = defaultdict(int)
    name = ""
    for line in out.splitlines():
        if line.startswith("author "):
            name = line[len("author ") :]
        elif line.startswith("author-mail "):
            email = line[len("author-mail ") :].strip().strip("<>")
            user = RawUser(name, email)
            developer = alias_map.get(user) or DeveloperId(
                user.name, frozenset({user})
            )
            counts[developer] += 1
    return sorted(counts.items(), key=lambda kv: (-kv[1], kv[0].canonical_name))


def author_ratio(
    developers: Iterable[DeveloperId], author_map: AuthorFileMap
) -> float:
    """Fraction of developers who author at least one file."""
    population = set(developers)
    if not population:
        raise DivisionUndefined("author ratio is undefined without developers")
    return len(set(author_map.entries)) / len(population)
