"""Assemble biography timelines: relevant entries, events, related people.

Every extracted relation lands either in ``entries`` (predicted relevant)
or ``rejected`` (with its score), so the two lists always partition the
extraction output. Entries are grouped by property label, with "Misc."
collecting the properties that occur only once among the entries.
"""

from __future__ import annotations

import datetime as dt
from dataclasses import dataclass, replace
from typing import Optional

from .dates import DateInterval, end_day, start_day
from .errors import SchemaMismatch, UnknownPerson
from .features import FeatureSchema, featurize
from .kg import Event, GeoPoint, TemporalKG
from .model import RelevanceModel, score
from .relations import TemporalRelation, extract_relations

MISC_GROUP = "Misc."


@dataclass(frozen=True)
class TimelineEntry:
    relation: TemporalRelation
    score: float
    group_label: str
    object_label: str
    location: Optional[GeoPoint]


@dataclass
class Timeline:
    person: str
    source_model: str
    entries: list[TimelineEntry]
    events: list[Event]
    related_people: list[tuple[str, int]]
    rejected: list[tuple[TemporalRelation, float]]


def assign_groups(entries: list[TimelineEntry]) -> list[TimelineEntry]:
    """Group label = property label when the property occurs >= 2 times,
    else "Misc."; entry order is unchanged."""
    counts: dict[str, int] = {}
    for entry in entries:
        counts[entry.relation.property_id] = counts.get(entry.relation.property_id, 0) + 1
    return [
        replace(
            entry,
            group_label=entry.relation.property_label
            if counts[entry.relation.property_id] >= 2
            else MISC_GROUP,
        )
        for entry in entries
    ]


def person_events(kg: TemporalKG, person: str) -> list[Event]:
    """Events the person participates in, by happening start, ties by id."""
    if kg.person(person) is None:
        raise UnknownPerson(person)
    events = kg.events_of(person)
    events.sort(key=lambda ev: (start_day(ev.happening), ev.id))
    return events


def related_people(kg: TemporalKG, person: str, limit: int) -> list[tuple[str, int]]:
    """Persons co-occurring as relation objects or event co-participants.

    Ranked by co-occurrence count, then link_count, then id; truncated to
    ``limit``.
    """
    if kg.person(person) is None:
        raise UnknownPerson(person)
    if limit <= 0:
        return []
    counts: dict[str, int] = {}
    for relation in extract_relations(kg, person):
        if relation.object_is_literal:
            continue
        other = kg.person(relation.object)  # type: ignore[arg-type]
        if other is not None and other.id != person:
            counts[other.id] = counts.get(other.id, 0) + 1
    for event in kg.events_of(person):
        for pid in event.participants:
            if pid != person and kg.person(pid) is not None:
                counts[pid] = counts.get(pid, 0) + 1
    ranked = sorted(
        counts.items(), key=lambda item: (-item[1], -kg.entities[item[0]].link_count, item[0])
    )
    return ranked[:limit]


def _object_label(kg: TemporalKG, relation: TemporalRelation) -> str:
    if relation.object_is_literal:
        return relation.object_key
    node = kg.entity(relation.object) or kg.event(relation.object)  # type: ignore[arg-type]
    return node.label if node is not None else relation.object_key


def _overlaps(a: DateInterval, b: DateInterval) -> bool:
    return start_day(a) <= end_day(b) and start_day(b) <= end_day(a)


def _entry_location(
    kg: TemporalKG, relation: TemporalRelation, events: list[Event]
) -> Optional[GeoPoint]:
    """Object location when present, else the nearest-in-time located event
    overlapping the validity interval."""
    if not relation.object_is_literal:
        node = kg.entity(relation.object) or kg.event(relation.object)  # type: ignore[arg-type]
        if node is not None and node.location is not None:
            return node.location
    anchor: dt.date = (
        relation.validity.start.day
        if relation.validity.start is not None
        else end_day(relation.validity)
    )
    candidates = [
        ev for ev in events if ev.location is not None and _overlaps(ev.happening, relation.validity)
    ]
    if not candidates:
        return None
    nearest = min(
        candidates, key=lambda ev: (abs((start_day(ev.happening) - anchor).days), ev.id)
    )
    return nearest.location


def build_timeline(
    kg: TemporalKG,
    person: str,
    model: RelevanceModel,
    schema: FeatureSchema,
    related_limit: int = 10,
) -> Timeline:
    """Extract, score, and split the person's relations into a timeline."""
    if kg.person(person) is None:
        raise UnknownPerson(person)
    if model.schema_hash != schema.schema_hash:
        raise SchemaMismatch("model was trained against a different feature schema")

    relations = extract_relations(kg, person)
    events = person_events(kg, person)

    entries: list[TimelineEntry] = []
    rejected: list[tuple[TemporalRelation, float]] = []
    for relation in relations:
        value = score(model, featurize(relation, kg, schema))
        if value > 0.0:
            entries.append(
                TimelineEntry(
                    relation=relation,
                    score=value,
                    group_label=MISC_GROUP,
                    object_label=_object_label(kg, relation),
                    location=_entry_location(kg, relation, events),
                )
            )
        else:
            rejected.append((relation, value))

    return Timeline(
        person=person,
        source_model=model.source,
        entries=assign_groups(entries),
        events=events,
        related_people=related_people(kg, person, related_limit),
        rejected=rejected,
    )
