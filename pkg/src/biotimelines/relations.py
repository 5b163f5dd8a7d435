"""Candidate temporal relations of a person.

A candidate is one of three kinds: a fact whose object is a temporal
literal (kind 1), a fact carrying an asserted validity span (kind 2), or
an entity-object fact whose validity is inferred from the object's
existence or happening time intersected with the subject's lifespan
(kind 3). A fact qualifying for both 2 and 3 yields only the kind-2
relation; a kind-3 candidate whose inferred validity is empty is dropped.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Union

from .dates import DateInterval, PrecisionDate, end_day, intersect, start_day
from .errors import NotAPerson, UnknownPerson
from .kg import EntityKind, TemporalKG


class RelationKind(IntEnum):
    LITERAL_DATE = 1
    ASSERTED_SPAN = 2
    INDIRECT_EXISTENCE = 3


@dataclass(frozen=True)
class TemporalRelation:
    """A dated binary relation between a person and an object."""

    subject: str
    property_id: str
    property_label: str
    object: Union[str, PrecisionDate]
    validity: DateInterval
    kind: RelationKind

    @property
    def object_is_literal(self) -> bool:
        return isinstance(self.object, PrecisionDate)

    @property
    def object_key(self) -> str:
        return self.object.iso() if isinstance(self.object, PrecisionDate) else self.object

    def sort_key(self):
        return (start_day(self.validity), end_day(self.validity), self.property_id, self.object_key)


def extract_relations(kg: TemporalKG, person: str) -> list[TemporalRelation]:
    """All candidate timeline entries for ``person``, deduplicated and ordered.

    Output order is ascending by (validity start, validity end, property,
    object id) with absent bounds sorting as -inf / +inf.
    """
    subject = kg.entity(person)
    if subject is None:
        raise UnknownPerson(person)
    if subject.kind is not EntityKind.PERSON:
        raise NotAPerson(person)

    lifespan = subject.existence or DateInterval()
    relations: list[TemporalRelation] = []
    for fact in kg.facts_of(person):
        if isinstance(fact.object, PrecisionDate):
            validity = DateInterval.point(fact.object)
            kind = RelationKind.LITERAL_DATE
        elif fact.validity is not None:
            validity = fact.validity
            kind = RelationKind.ASSERTED_SPAN
        else:
            extent = kg.temporal_extent(fact.object)
            if extent is None or not extent.has_bound:
                continue
            clipped = intersect(extent, lifespan)
            if clipped is None or not clipped.has_bound:
                continue
            validity = clipped
            kind = RelationKind.INDIRECT_EXISTENCE
        relations.append(
            TemporalRelation(
                subject=person,
                property_id=fact.property_id,
                property_label=fact.property_label,
                object=fact.object,
                validity=validity,
                kind=kind,
            )
        )

    unique: dict[tuple, TemporalRelation] = {}
    for rel in relations:
        unique.setdefault((rel.property_id, rel.object_key, rel.validity, rel.kind), rel)
    return sorted(unique.values(), key=TemporalRelation.sort_key)
