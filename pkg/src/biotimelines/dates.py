"""Day-precision calendar dates and validity intervals.

All dates are proleptic Gregorian at day precision. Year-only source
values are expanded to Jan 1 (start positions) or Dec 31 (end positions)
and carry an ``approx`` marker. Absent interval bounds mean "unbounded"
and compare as -inf / +inf.
"""

from __future__ import annotations

import datetime as dt
import re
from dataclasses import dataclass
from typing import Optional

from .errors import InvalidDate

_FULL_DATE = re.compile(r"^(\d{4})-(\d{2})-(\d{2})$")
_YEAR_ONLY = re.compile(r"^\d{4}$")

EARLIEST = dt.date.min
LATEST = dt.date.max


@dataclass(frozen=True)
class PrecisionDate:
    """A calendar day plus a marker for year-only source precision."""

    day: dt.date
    approx: bool = False

    @property
    def year(self) -> int:
        return self.day.year

    def iso(self) -> str:
        return self.day.isoformat()


def parse_date(text: str, position: str = "start") -> PrecisionDate:
    """Parse ``YYYY-MM-DD`` or ``YYYY`` into a PrecisionDate.

    ``position`` decides how a year-only value is expanded: ``"start"``
    becomes Jan 1, ``"end"`` becomes Dec 31; either way the result is
    flagged approx.
    """
    if _FULL_DATE.match(text):
        year, month, day = (int(part) for part in text.split("-"))
        try:
            return PrecisionDate(dt.date(year, month, day))
        except ValueError:
            raise InvalidDate(text) from None
    if _YEAR_ONLY.match(text):
        year = int(text)
        try:
            expanded = dt.date(year, 1, 1) if position == "start" else dt.date(year, 12, 31)
        except ValueError:
            raise InvalidDate(text) from None
        return PrecisionDate(expanded, approx=True)
    raise InvalidDate(text)


@dataclass(frozen=True)
class DateInterval:
    """A validity span; a point in time has ``start == end``."""

    start: Optional[PrecisionDate] = None
    end: Optional[PrecisionDate] = None

    def __post_init__(self):
        if self.start is not None and self.end is not None and self.start.day > self.end.day:
            raise ValueError(f"interval start {self.start.iso()} after end {self.end.iso()}")

    @classmethod
    def point(cls, date: PrecisionDate) -> "DateInterval":
        return cls(start=date, end=date)

    @property
    def is_point(self) -> bool:
        return self.start is not None and self.start == self.end

    @property
    def has_bound(self) -> bool:
        return self.start is not None or self.end is not None


def start_day(interval: DateInterval) -> dt.date:
    """Start bound for ordering; absent start sorts earliest."""
    return interval.start.day if interval.start is not None else EARLIEST


def end_day(interval: DateInterval) -> dt.date:
    """End bound for ordering; absent end sorts latest."""
    return interval.end.day if interval.end is not None else LATEST


def interval_sort_key(interval: DateInterval) -> tuple[dt.date, dt.date]:
    return (start_day(interval), end_day(interval))


def intersect(a: DateInterval, b: DateInterval) -> Optional[DateInterval]:
    """Intersection of two intervals, treating absent bounds as infinite.

    Returns None when the intervals do not overlap. On equal-day bound
    ties the exact (non-approx) date wins.
    """
    starts = [d for d in (a.start, b.start) if d is not None]
    ends = [d for d in (a.end, b.end) if d is not None]
    start = max(starts, key=lambda d: (d.day, not d.approx)) if starts else None
    end = min(ends, key=lambda d: (d.day, d.approx)) if ends else None
    if start is not None and end is not None and start.day > end.day:
        return None
    return DateInterval(start=start, end=end)
