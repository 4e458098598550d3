"""Cohort statistics: PPR with small-sample sentinel, trends, regions, media.

The positive public opinion ratio (PPR) of a cohort is the fraction of
documents labelled positive, but cohorts of 10 or fewer documents carry no
sentiment tendency and are pinned at the 0.5 sentinel.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import date, timedelta, timezone
from typing import Iterable, Sequence

from .store import OpinionDocument

PPR_SENTINEL = 0.5
PPR_MIN_COUNT = 11  # "frequency greater than 10"
HISTOGRAM_BINS = 21


@dataclass(frozen=True)
class TrendPoint:
    date: date
    count: int
    ppr: float

    def to_jsonable(self) -> dict:
        return {"date": self.date.isoformat(), "count": self.count, "ppr": self.ppr}


@dataclass(frozen=True)
class RegionStat:
    region: str
    count: int
    ppr: float
    attention: float

    def to_jsonable(self) -> dict:
        return {
            "region": self.region,
            "count": self.count,
            "ppr": self.ppr,
            "attention": self.attention,
        }


@dataclass(frozen=True)
class BoxStats:
    min: float
    q1: float
    median: float
    q3: float
    max: float

    def to_jsonable(self) -> dict:
        return {"min": self.min, "q1": self.q1, "median": self.median, "q3": self.q3, "max": self.max}


def ppr(docs: Sequence[OpinionDocument]) -> float:
    """Positive ratio of a labelled cohort; 0.5 sentinel for count <= 10."""
    for d in docs:
        if d.sentiment_label is None:
            raise ValueError(f"document {d.id} has no sentiment_label")
    if len(docs) < PPR_MIN_COUNT:
        return PPR_SENTINEL
    positives = sum(1 for d in docs if d.sentiment_label == "positive")
    return positives / len(docs)


def _utc_day(doc: OpinionDocument) -> date:
    return doc.published_at.astimezone(timezone.utc).date()


def trend_series(
    docs: Iterable[OpinionDocument], date_from: date, date_to: date
) -> list[TrendPoint]:
    """One point per calendar day in [date_from, date_to], inclusive, UTC.

    Days without documents count 0 and sit at the sentinel PPR.
    """
    if date_from > date_to:
        raise ValueError(f"from {date_from} is after to {date_to}")
    buckets: dict[date, list[OpinionDocument]] = {}
    for doc in docs:
        buckets.setdefault(_utc_day(doc), []).append(doc)
    points = []
    day = date_from
    while day <= date_to:
        cohort = buckets.get(day, [])
        points.append(TrendPoint(date=day, count=len(cohort), ppr=ppr(cohort)))
        day += timedelta(days=1)
    return points


def region_stats(docs: Sequence[OpinionDocument]) -> list[RegionStat]:
    """Per-region counts, PPR (sentinel applies), and relative attention.

    Attention is a region's share of all documents in the cohort; documents
    without a primary region stay in the denominator, so attention values
    sum to at most 1.
    """
    total = len(docs)
    by_region: dict[str, list[OpinionDocument]] = {}
    for doc in docs:
        if doc.primary_region:
            by_region.setdefault(doc.primary_region, []).append(doc)
    stats = [
        RegionStat(
            region=region,
            count=len(cohort),
            ppr=ppr(cohort),
            attention=len(cohort) / total if total else 0.0,
        )
        for region, cohort in by_region.items()
    ]
    stats.sort(key=lambda s: (-s.count, s.region))
    return stats


def box_stats(values: Sequence[float]) -> BoxStats:
    """Five-number summary with median-of-halves (Tukey hinge) quartiles."""
    if not values:
        raise ValueError("box_stats needs at least one value")
    ordered = sorted(values)
    n = len(ordered)

    def median(xs: Sequence[float]) -> float:
        m = len(xs)
        mid = m // 2
        if m % 2:
            return float(xs[mid])
        return (xs[mid - 1] + xs[mid]) / 2.0

    half = n // 2
    lower = ordered[: half + (n % 2)]  # include median in both halves when n is odd
    upper = ordered[half:]
    return BoxStats(
        min=float(ordered[0]),
        q1=median(lower),
        median=median(ordered),
        q3=median(upper),
        max=float(ordered[-1]),
    )


def score_histogram(values: Sequence[float], span: float) -> dict:
    """Counts over HISTOGRAM_BINS uniform bins spanning [-span, +span]."""
    if span <= 0:
        span = 1.0
    width = 2.0 * span / HISTOGRAM_BINS
    edges = [-span + i * width for i in range(HISTOGRAM_BINS + 1)]
    edges[-1] = span  # guard accumulated rounding on the last edge
    counts = [0] * HISTOGRAM_BINS
    for v in values:
        idx = int((v + span) / width)
        if idx < 0:
            idx = 0
        elif idx >= HISTOGRAM_BINS:
            idx = HISTOGRAM_BINS - 1  # right edge inclusive
        counts[idx] += 1
    return {"bin_edges": edges, "counts": counts}


def media_summary(docs: Sequence[OpinionDocument]) -> dict[str, dict]:
    """Per-media-type count, PPR, score histogram, and box stats.

    Histogram bins are shared across media types, spanning the largest
    absolute sentiment score in the whole cohort.
    """
    scored = [d for d in docs if d.sentiment_score is not None]
    span = max((abs(d.sentiment_score) for d in scored), default=0.0)
    by_media: dict[str, list[OpinionDocument]] = {}
    for doc in docs:
        by_media.setdefault(doc.media_type, []).append(doc)
    summary: dict[str, dict] = {}
    for media in sorted(by_media):
        cohort = by_media[media]
        scores = [d.sentiment_score for d in cohort if d.sentiment_score is not None]
        entry = {
            "count": len(cohort),
            "ppr": ppr(cohort),
            "score_histogram": score_histogram(scores, span),
            "box_stats": box_stats(scores).to_jsonable() if scores else None,
        }
        summary[media] = entry
    return summary
