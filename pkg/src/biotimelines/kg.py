"""Knowledge-graph dump ingestion and the immutable in-memory graph.

Three tab-separated files make up a dump directory:

``entities.tsv``
    ``id  label  kind  type_tags  birth_or_start  death_or_end  lat  lon
    link_count  description`` -- the label column may carry |-separated
    aliases; the first alias is the display label.
``events.tsv``
    ``id  label  start  end  lat  lon  participants  description``
``facts.tsv``
    ``subject  property  property_label  object_kind  object
    validity_start  validity_end``

All files are UTF-8 with a literal header row; empty string encodes an
absent optional; dates are ``YYYY-MM-DD`` or ``YYYY``. Ids are unique
across entities and events. The loaded graph is immutable and safe to
share across concurrent readers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Optional, Union

from .dates import DateInterval, PrecisionDate, parse_date
from .errors import (
    BiotimelinesError,
    DanglingReference,
    DuplicateId,
    InvalidDate,
    MalformedLine,
)

_ID_PATTERN = re.compile(r"^[A-Za-z0-9_]+$")

ENTITY_COLUMNS = [
    "id", "label", "kind", "type_tags", "birth_or_start", "death_or_end",
    "lat", "lon", "link_count", "description",
]
EVENT_COLUMNS = ["id", "label", "start", "end", "lat", "lon", "participants", "description"]
FACT_COLUMNS = [
    "subject", "property", "property_label", "object_kind", "object",
    "validity_start", "validity_end",
]


class EntityKind(str, Enum):
    PERSON = "person"
    OTHER = "other"


@dataclass(frozen=True)
class GeoPoint:
    lat: float
    lon: float

    def __post_init__(self):
        if not (-90.0 <= self.lat <= 90.0):
            raise ValueError(f"latitude out of range: {self.lat}")
        if not (-180.0 <= self.lon <= 180.0):
            raise ValueError(f"longitude out of range: {self.lon}")


@dataclass(frozen=True)
class Entity:
    """A person or other entity; ``aliases`` holds every name variant, display label first."""

    id: str
    label: str
    aliases: tuple[str, ...]
    kind: EntityKind
    type_tags: frozenset[str]
    existence: Optional[DateInterval]
    location: Optional[GeoPoint]
    link_count: int
    description: Optional[str]


@dataclass(frozen=True)
class Event:
    id: str
    label: str
    description: str
    happening: DateInterval
    location: Optional[GeoPoint]
    participants: frozenset[str]


@dataclass(frozen=True)
class Fact:
    """One dump row: the object is an entity id or a parsed temporal literal."""

    subject: str
    property_id: str
    property_label: str
    object: Union[str, PrecisionDate]
    validity: Optional[DateInterval]

    @property
    def object_is_literal(self) -> bool:
        return isinstance(self.object, PrecisionDate)

    @property
    def object_key(self) -> str:
        """Stable string form of the object, for ordering and export."""
        return self.object.iso() if isinstance(self.object, PrecisionDate) else self.object


@dataclass
class TemporalKG:
    """Indexed, immutable-by-convention graph; iteration order is ascending by id."""

    entities: dict[str, Entity]
    events: dict[str, Event]
    facts: tuple[Fact, ...]
    facts_by_subject: dict[str, tuple[Fact, ...]] = field(repr=False, default_factory=dict)
    events_by_participant: dict[str, tuple[str, ...]] = field(repr=False, default_factory=dict)

    def entity(self, id: str) -> Optional[Entity]:
        return self.entities.get(id)

    def event(self, id: str) -> Optional[Event]:
        return self.events.get(id)

    def person(self, id: str) -> Optional[Entity]:
        """The entity for ``id`` iff it exists and is a person."""
        entity = self.entities.get(id)
        if entity is not None and entity.kind is EntityKind.PERSON:
            return entity
        return None

    def search_persons(self, query: str, limit: int) -> list[Entity]:
        """Persons whose name contains ``query`` case-insensitively.

        Ordered by descending link_count, ties by id ascending; an empty
        query matches nothing.
        """
        if not query or limit <= 0:
            return []
        needle = query.casefold()
        hits = [
            entity
            for entity in self.entities.values()
            if entity.kind is EntityKind.PERSON
            and any(needle in alias.casefold() for alias in entity.aliases)
        ]
        hits.sort(key=lambda e: (-e.link_count, e.id))
        return hits[:limit]

    def temporal_extent(self, id: str) -> Optional[DateInterval]:
        """Existence time of an entity or happening time of an event."""
        entity = self.entities.get(id)
        if entity is not None:
            return entity.existence
        event = self.events.get(id)
        if event is not None:
            return event.happening
        return None

    def facts_of(self, subject: str) -> tuple[Fact, ...]:
        return self.facts_by_subject.get(subject, ())

    def events_of(self, participant: str) -> list[Event]:
        return [self.events[eid] for eid in self.events_by_participant.get(participant, ())]

    @property
    def n_persons(self) -> int:
        return sum(1 for e in self.entities.values() if e.kind is EntityKind.PERSON)

    @classmethod
    def from_parts(
        cls,
        entities: dict[str, Entity],
        events: dict[str, Event],
        facts: list[Fact],
    ) -> "TemporalKG":
        """Index parsed parts into a graph; iteration order becomes id-ascending."""
        facts_by_subject: dict[str, list[Fact]] = {}
        for fact in facts:
            facts_by_subject.setdefault(fact.subject, []).append(fact)
        events_by_participant: dict[str, list[str]] = {}
        for event in events.values():
            for pid in event.participants:
                events_by_participant.setdefault(pid, []).append(event.id)
        return cls(
            entities=dict(sorted(entities.items())),
            events=dict(sorted(events.items())),
            facts=tuple(facts),
            facts_by_subject={
                sid: tuple(rows) for sid, rows in sorted(facts_by_subject.items())
            },
            events_by_participant={
                pid: tuple(sorted(eids)) for pid, eids in sorted(events_by_participant.items())
            },
        )


@dataclass
class LoadReport:
    """Outcome of a validating load: the graph (if clean) plus every recorded error."""

    kg: Optional[TemporalKG]
    errors: list[BiotimelinesError]
    counts: dict[str, int]

    @property
    def ok(self) -> bool:
        return not self.errors


def load_kg(dir_path: Union[str, Path]) -> TemporalKG:
    """Load and index a dump directory, raising on the first defect."""
    loader = _Loader(Path(dir_path), collect=False)
    kg = loader.run()
    assert kg is not None
    return kg


def validate_kg(dir_path: Union[str, Path], max_errors: int = 20) -> LoadReport:
    """Load a dump directory, recording defects instead of raising.

    Defective rows and references are dropped; the report carries up to
    ``max_errors`` errors plus the counts of what survived.
    """
    loader = _Loader(Path(dir_path), collect=True, max_errors=max_errors)
    kg = loader.run()
    counts: dict[str, int] = {}
    if kg is not None:
        counts = {
            "persons": kg.n_persons,
            "entities": len(kg.entities),
            "events": len(kg.events),
            "facts": len(kg.facts),
        }
    return LoadReport(kg=kg, errors=loader.errors, counts=counts)


class _Loader:
    """Single-pass TSV loader; ``collect`` switches raise-first into record-and-skip."""

    def __init__(self, root: Path, collect: bool, max_errors: int = 20):
        self.root = root
        self.collect = collect
        self.max_errors = max_errors
        self.errors: list[BiotimelinesError] = []

    def run(self) -> Optional[TemporalKG]:
        entities = self._parse_entities(self.root / "entities.tsv")
        events = self._parse_events(self.root / "events.tsv", entities)
        facts = self._parse_facts(self.root / "facts.tsv", entities, events)
        return TemporalKG.from_parts(entities, events, facts)

    # ---- per-file parsing ------------------------------------------------

    def _parse_entities(self, path: Path) -> dict[str, Entity]:
        entities: dict[str, Entity] = {}
        for line_no, cols in self._rows(path, ENTITY_COLUMNS):
            try:
                (id, label, kind, tags, birth, death, lat, lon, links, desc) = cols
                self._check_id(path.name, line_no, id)
                if id in entities:
                    raise DuplicateId(id)
                aliases = self._split_multi(path.name, line_no, label, what="label")
                if not aliases:
                    raise MalformedLine(path.name, line_no, "empty label")
                if kind not in (EntityKind.PERSON.value, EntityKind.OTHER.value):
                    raise MalformedLine(path.name, line_no, f"unknown kind {kind!r}")
                existence = self._interval(path.name, line_no, birth, death)
                entities[id] = Entity(
                    id=id,
                    label=aliases[0],
                    aliases=tuple(aliases),
                    kind=EntityKind(kind),
                    type_tags=frozenset(self._split_multi(path.name, line_no, tags, what="type_tags")),
                    existence=existence,
                    location=self._geo(path.name, line_no, lat, lon),
                    link_count=self._non_negative_int(path.name, line_no, links),
                    description=desc or None,
                )
            except BiotimelinesError as err:
                self._record(err)
        return entities

    def _parse_events(self, path: Path, entities: dict[str, Entity]) -> dict[str, Event]:
        events: dict[str, Event] = {}
        for line_no, cols in self._rows(path, EVENT_COLUMNS):
            try:
                (id, label, start, end, lat, lon, participants, desc) = cols
                self._check_id(path.name, line_no, id)
                if id in entities or id in events:
                    raise DuplicateId(id)
                if not start:
                    raise MalformedLine(path.name, line_no, "event start is required")
                happening = self._interval(path.name, line_no, start, end or start)
                assert happening is not None
                pids = self._split_multi(path.name, line_no, participants, what="participants")
                for pid in pids:
                    self._check_id(path.name, line_no, pid)
                    if pid not in entities:
                        raise DanglingReference(pid)
                events[id] = Event(
                    id=id,
                    label=label,
                    description=desc,
                    happening=happening,
                    location=self._geo(path.name, line_no, lat, lon),
                    participants=frozenset(pids),
                )
            except BiotimelinesError as err:
                self._record(err)
        return events

    def _parse_facts(
        self, path: Path, entities: dict[str, Entity], events: dict[str, Event]
    ) -> list[Fact]:
        facts: list[Fact] = []
        for line_no, cols in self._rows(path, FACT_COLUMNS):
            try:
                (subject, prop, prop_label, object_kind, obj, vstart, vend) = cols
                self._check_id(path.name, line_no, subject)
                if subject not in entities:
                    raise DanglingReference(subject)
                if not prop:
                    raise MalformedLine(path.name, line_no, "empty property")
                if object_kind == "date":
                    if vstart or vend:
                        raise MalformedLine(
                            path.name, line_no, "temporal-literal facts carry no validity"
                        )
                    object: Union[str, PrecisionDate] = parse_date(obj, position="start")
                    validity = None
                elif object_kind == "entity":
                    self._check_id(path.name, line_no, obj)
                    if obj not in entities and obj not in events:
                        raise DanglingReference(obj)
                    object = obj
                    validity = self._interval(path.name, line_no, vstart, vend)
                else:
                    raise MalformedLine(path.name, line_no, f"unknown object_kind {object_kind!r}")
                facts.append(
                    Fact(
                        subject=subject,
                        property_id=prop,
                        property_label=prop_label or prop,
                        object=object,
                        validity=validity,
                    )
                )
            except BiotimelinesError as err:
                self._record(err)
        return facts

    # ---- field helpers ---------------------------------------------------

    def _rows(self, path: Path, columns: list[str]):
        text = path.read_text(encoding="utf-8")
        lines = text.splitlines()
        if not lines:
            return
        header = "\t".join(columns)
        if lines[0] != header:
            self._record(MalformedLine(path.name, 1, f"bad header, expected {header!r}"))
            return
        for line_no, line in enumerate(lines[1:], start=2):
            cols = line.split("\t")
            if len(cols) != len(columns):
                self._record(
                    MalformedLine(
                        path.name, line_no, f"expected {len(columns)} columns, got {len(cols)}"
                    )
                )
                continue
            yield line_no, cols

    def _check_id(self, file: str, line_no: int, id: str) -> None:
        if not _ID_PATTERN.match(id):
            raise MalformedLine(file, line_no, f"bad id {id!r}")

    def _split_multi(self, file: str, line_no: int, raw: str, what: str) -> list[str]:
        if not raw:
            return []
        parts = raw.split("|")
        if any(not part for part in parts):
            raise MalformedLine(file, line_no, f"empty segment in {what}")
        return parts

    def _interval(self, file: str, line_no: int, start: str, end: str) -> Optional[DateInterval]:
        start_date = parse_date(start, position="start") if start else None
        end_date = parse_date(end, position="end") if end else None
        if start_date is None and end_date is None:
            return None
        try:
            return DateInterval(start=start_date, end=end_date)
        except ValueError as err:
            raise MalformedLine(file, line_no, str(err)) from None

    def _geo(self, file: str, line_no: int, lat: str, lon: str) -> Optional[GeoPoint]:
        if not lat and not lon:
            return None
        if not lat or not lon:
            raise MalformedLine(file, line_no, "lat and lon must both be present or both absent")
        try:
            return GeoPoint(lat=float(lat), lon=float(lon))
        except ValueError as err:
            raise MalformedLine(file, line_no, str(err)) from None

    def _non_negative_int(self, file: str, line_no: int, raw: str) -> int:
        try:
            value = int(raw)
        except ValueError:
            raise MalformedLine(file, line_no, f"bad integer {raw!r}") from None
        if value < 0:
            raise MalformedLine(file, line_no, f"negative count {value}")
        return value

    def _record(self, err: BiotimelinesError) -> None:
        if not self.collect:
            raise err
        if len(self.errors) < self.max_errors:
            self.errors.append(err)
