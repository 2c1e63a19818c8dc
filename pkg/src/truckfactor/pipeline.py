"""End-to-end orchestration: snapshot -> aliases -> traces -> scores -> TF.

:func:`run` wires the stages together and assembles a :class:`Report`.
Everything it does is also reachable piecemeal through the individual
modules; this is just the one honest path from a repository on disk to a
finished estimate.
"""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass

from . import authorship, estimate, history, identity
from .errors import BlameFailed
from .filters import FilterRules, load_path_file, load_pattern_file
from .report import (
    SCHEMA_VERSION,
    AliasCandidate,
    BlameAgreement,
    MigrationSummary,
    RemovedAuthor,
    Report,
)

BLAME_SAMPLE_SIZE = 120


@dataclass
class AnalysisConfig:
    """Knobs for one analysis run; defaults match the calibrated setup."""

    repo_path: str
    branch: str | None = None
    ignore_file: str | None = None
    patterns_file: str | None = None
    alias_file: str | None = None
    k: float = 0.75
    m: float = 3.293
    coverage: float = 0.5
    universe: str = "authored"  # or "all-files"
    output_format: str = "text"
    blame_compare: bool = False
    seed: int = 0
    alias_report: bool = False
    migration_check: bool = True
    fail_under: int | None = None


def _validate(config: AnalysisConfig) -> None:
    if config.universe not in ("authored", "all-files"):
        raise ValueError(f"unknown universe: {config.universe!r}")
    if config.output_format not in ("text", "json", "csv"):
        raise ValueError(f"unknown output format: {config.output_format!r}")
    if not 0.0 < config.k <= 1.0:
        raise ValueError("k must be in (0, 1]")
    if not 0.0 < config.coverage < 1.0:
        raise ValueError("coverage must be in (0, 1)")


def _build_rules(config: AnalysisConfig) -> FilterRules:
    globs = load_pattern_file(config.patterns_file) if config.patterns_file else []
    paths = load_path_file(config.ignore_file) if config.ignore_file else []
    return FilterRules(ignore_globs=globs, ignore_paths=paths)


def _blame_agreement(
    config: AnalysisConfig,
    targets: list[str],
    records: list[authorship.AuthorshipRecord],
    alias_map: dict[identity.RawUser, identity.DeveloperId],
) -> BlameAgreement:
    """Sample files and compare their authors against blame rankings."""
    authors_by_file: dict[str, set[identity.DeveloperId]] = defaultdict(set)
    for record in records:
        if record.is_author:
            authors_by_file[record.file].add(record.developer)
    pool = sorted(targets)
    if len(pool) > BLAME_SAMPLE_SIZE:
        pool = sorted(random.Random(config.seed).sample(pool, BLAME_SAMPLE_SIZE))
    top1 = top3 = none = pairs = failures = 0
    for file in pool:
        try:
            ranking = authorship.blame_rank(
                config.repo_path, file, alias_map, branch=config.branch
            )
        except BlameFailed:
            failures += 1
            continue
        ranked = [dev for dev, _ in ranking]
        for author in sorted(
            authors_by_file.get(file, ()), key=lambda d: d.canonical_name
        ):
            pairs += 1
            if author in ranked[:1]:
                top1 += 1
            if author in ranked[:3]:
                top3 += 1
            if author not in ranked:
                none += 1

    def pct(n: int) -> float:
        return 100.0 * n / pairs if pairs else 0.0

    return BlameAgreement(
        files_sampled=len(pool),
        pairs_compared=pairs,
        top1_pct=pct(top1),
        top3_pct=pct(top3),
        none_pct=pct(none),
        blame_failures=failures,
        seed=config.seed,
    )


def run(config: AnalysisConfig) -> Report:
    """Analyze one repository and return the full report."""
    _validate(config)
    rules = _build_rules(config)
    targets = history.list_snapshot_files(
        config.repo_path, rules, branch=config.branch
    )
    events = history.collect_history(config.repo_path, branch=config.branch)

    users = {event.author for event in events}
    commits_by_user: dict[identity.RawUser, set[str]] = defaultdict(set)
    for event in events:
        commits_by_user[event.author].add(event.commit_id)
    counts = {user: len(ids) for user, ids in commits_by_user.items()}
    overrides = (
        identity.load_alias_overrides(config.alias_file) if config.alias_file else None
    )
    candidates = None
    if config.alias_report:
        candidates = identity.name_merge_candidates(users) if users else []
    alias_map = (
        identity.resolve_aliases(
            users,
            commit_counts=counts,
            overrides=overrides,
            merge_similar_names=not config.alias_report,
        )
        if users
        else {}
    )

    traces = history.trace_files(events, targets)
    records: list[authorship.AuthorshipRecord] = []
    for trace in traces:
        records.extend(authorship.score_trace(trace, alias_map))
    thresholds = authorship.Thresholds(
        k=config.k, m=config.m, coverage=config.coverage
    )
    author_map = authorship.select_authors(records, thresholds)

    universe = set(targets) if config.universe == "all-files" else None
    result = estimate.truck_factor(
        author_map, threshold=config.coverage, universe=universe
    )
    low_initial = result.tf == 0 and result.initial_coverage < config.coverage

    warnings: list[str] = []
    migration = MigrationSummary(checked=False)
    if config.migration_check:
        verdict = history.check_migration(traces)
        migration = MigrationSummary(
            checked=True,
            suspicious=verdict.suspicious,
            fraction_covered=verdict.fraction_covered,
            adding_commits=verdict.adding_commits,
        )
        if verdict.suspicious:
            warnings.append(
                f"possible history migration: {verdict.fraction_covered:.0%} of "
                f"files were added in only {verdict.adding_commits} commit(s); "
                "authorship may be unreliable"
            )
    if low_initial:
        warnings.append(
            "authored-file coverage starts below the coverage threshold; "
            "the estimate is 0 by construction"
        )

    blame = None
    if config.blame_compare:
        blame = _blame_agreement(config, targets, records, alias_map)

    developers = set(alias_map.values())
    ratio = authorship.author_ratio(developers, author_map) if developers else 0.0
    totals = {
        "developers": len(developers),
        "authors": len(author_map.entries),
        "files": len(targets),
        "commits": len({event.commit_id for event in events}),
    }
    return Report(
        schema_version=SCHEMA_VERSION,
        repository=str(config.repo_path),
        branch=config.branch,
        head_commit=history.resolve_commit(config.repo_path, config.branch),
        thresholds={"k": config.k, "m": config.m, "coverage": config.coverage},
        universe=config.universe,
        truck_factor=result.tf,
        initial_coverage=result.initial_coverage,
        file_universe_size=result.file_universe_size,
        low_initial_coverage=low_initial,
        removed=[
            RemovedAuthor(
                developer=step.developer.canonical_name,
                authored_files=step.files_authored,
                coverage_after=step.coverage_after,
            )
            for step in result.removed
        ],
        author_ratio=ratio,
        totals=totals,
        migration=migration,
        blame_agreement=blame,
        alias_candidates=(
            [
                AliasCandidate(a.name, a.email, b.name, b.email)
                for a, b in candidates
            ]
            if candidates is not None
            else None
        ),
        warnings=warnings,
    )
