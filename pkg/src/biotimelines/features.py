"""Fixed-length numeric features for a temporal relation.

Layout: one-hot property block, multi-hot subject type-tag block, then a
9-value numeric block: log1p object link count, relation-kind one-hot
(3), log1p duration in days, start offset from birth in years, end
offset from death in years, starts-before-birth flag, ends-after-death
flag. Unseen properties encode as all zeros; missing temporal anchors
default to 0.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Union

import numpy as np

from .errors import EmptyBenchmark, SchemaMismatch
from .kg import TemporalKG
from .relations import RelationKind, TemporalRelation
from .supervision import LabeledRelation

NUMERIC_BLOCK = 9
DAYS_PER_YEAR = 365.25


@dataclass(frozen=True)
class FeatureSchema:
    """Ordered vocabularies fixing the encoding; immutable once built."""

    property_vocab: tuple[str, ...]
    type_vocab: tuple[str, ...]

    def __post_init__(self):
        for name, vocab in (("property_vocab", self.property_vocab), ("type_vocab", self.type_vocab)):
            if list(vocab) != sorted(set(vocab)):
                raise SchemaMismatch(f"{name} must be deduplicated and sorted")

    @property
    def dimension(self) -> int:
        return len(self.property_vocab) + len(self.type_vocab) + NUMERIC_BLOCK

    @cached_property
    def _property_index(self) -> dict[str, int]:
        return {prop: i for i, prop in enumerate(self.property_vocab)}

    @cached_property
    def _type_index(self) -> dict[str, int]:
        offset = len(self.property_vocab)
        return {tag: offset + i for i, tag in enumerate(self.type_vocab)}

    def to_json(self) -> dict:
        return {
            "property_vocab": list(self.property_vocab),
            "type_vocab": list(self.type_vocab),
            "dimension": self.dimension,
        }

    @classmethod
    def from_json(cls, doc: dict) -> "FeatureSchema":
        schema = cls(
            property_vocab=tuple(doc["property_vocab"]),
            type_vocab=tuple(doc["type_vocab"]),
        )
        if doc.get("dimension") != schema.dimension:
            raise SchemaMismatch(
                f"declared dimension {doc.get('dimension')} != computed {schema.dimension}"
            )
        return schema

    @cached_property
    def schema_hash(self) -> str:
        canonical = json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def build_schema(benchmark: list[LabeledRelation], kg: TemporalKG) -> FeatureSchema:
    """Vocabularies from the benchmark's relations and its subjects' type tags."""
    if not benchmark:
        raise EmptyBenchmark("cannot build a schema from an empty benchmark")
    properties = {record.relation.property_id for record in benchmark}
    tags: set[str] = set()
    for record in benchmark:
        subject = kg.entity(record.relation.subject)
        if subject is not None:
            tags.update(subject.type_tags)
    return FeatureSchema(
        property_vocab=tuple(sorted(properties)),
        type_vocab=tuple(sorted(tags)),
    )


def featurize(rel: TemporalRelation, kg: TemporalKG, schema: FeatureSchema) -> np.ndarray:
    """Encode one relation as a float vector of ``schema.dimension`` values."""
    vec = np.zeros(schema.dimension, dtype=np.float64)

    index = schema._property_index.get(rel.property_id)
    if index is not None:
        vec[index] = 1.0

    subject = kg.entity(rel.subject)
    if subject is not None:
        for tag in subject.type_tags:
            tag_index = schema._type_index.get(tag)
            if tag_index is not None:
                vec[tag_index] = 1.0

    base = len(schema.property_vocab) + len(schema.type_vocab)
    link_count = 0
    if not rel.object_is_literal:
        obj = kg.entity(rel.object)  # type: ignore[arg-type]
        if obj is not None:
            link_count = obj.link_count
    vec[base + 0] = math.log1p(link_count)

    vec[base + int(rel.kind)] = 1.0  # kinds 1..3 -> slots 1..3

    birth = subject.existence.start if subject is not None and subject.existence else None
    death = subject.existence.end if subject is not None and subject.existence else None
    start, end = rel.validity.start, rel.validity.end

    if start is not None and end is not None:
        duration = (end.day - start.day).days
    elif start is not None and death is not None:
        duration = (death.day - start.day).days
    elif end is not None and birth is not None:
        duration = (end.day - birth.day).days
    else:
        duration = 0
    vec[base + 4] = math.log1p(max(duration, 0))

    if start is not None and birth is not None:
        vec[base + 5] = (start.day - birth.day).days / DAYS_PER_YEAR
    if end is not None and death is not None:
        vec[base + 6] = (end.day - death.day).days / DAYS_PER_YEAR
    vec[base + 7] = 1.0 if start is not None and birth is not None and start.day < birth.day else 0.0
    vec[base + 8] = 1.0 if end is not None and death is not None and end.day > death.day else 0.0
    return vec


def featurize_all(
    relations: list[TemporalRelation], kg: TemporalKG, schema: FeatureSchema
) -> np.ndarray:
    if not relations:
        return np.zeros((0, schema.dimension), dtype=np.float64)
    return np.vstack([featurize(rel, kg, schema) for rel in relations])


def save_schema(schema: FeatureSchema, path: Union[str, Path]) -> None:
    Path(path).write_text(json.dumps(schema.to_json(), indent=2) + "\n", encoding="utf-8")


def load_schema(path: Union[str, Path]) -> FeatureSchema:
    return FeatureSchema.from_json(json.loads(Path(path).read_text(encoding="utf-8")))
