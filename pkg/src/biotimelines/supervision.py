"""Distant supervision: align textual biographies with temporal relations.

A relation is labeled relevant when some sentence of the person's
biography mentions the object (entity objects: any alias as a whole-word
token sequence; literal objects: the property label) together with a
4-digit year inside the relation's validity window. Everything else is a
negative; there is no sampling.
"""

from __future__ import annotations

import json
import logging
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

from .dates import DateInterval, parse_date
from .errors import PersonMismatch
from .kg import TemporalKG
from .relations import RelationKind, TemporalRelation, extract_relations

logger = logging.getLogger(__name__)

SOURCES = ("wikipedia", "bio_web")

_TOKEN = re.compile(r"[^\W_]+", re.UNICODE)

BENCHMARK_FIELDS = [
    "person", "source", "property", "object", "object_kind", "start", "end",
    "kind", "relevant", "evidence_sentence", "matched_year",
]


@dataclass(frozen=True)
class BiographyDoc:
    """A pre-split biography: one sentence per line in the source file."""

    person: str
    source: str
    sentences: tuple[str, ...]


@dataclass(frozen=True)
class Evidence:
    sentence_index: int
    matched_label: str
    matched_year: int


@dataclass(frozen=True)
class LabeledRelation:
    relation: TemporalRelation
    source: str
    relevant: bool
    evidence: Optional[Evidence] = None


@dataclass
class BenchmarkResult:
    """Labeled relations for a whole corpus plus summary statistics."""

    records: list[LabeledRelation]
    summary: dict
    skipped: list[str]


def normalize_tokens(text: str) -> list[str]:
    """Lowercase, strip punctuation, collapse whitespace; returns tokens."""
    return _TOKEN.findall(text.casefold())


def _contains_sequence(tokens: list[str], needle: list[str]) -> bool:
    if not needle or len(needle) > len(tokens):
        return False
    first = needle[0]
    for i in range(len(tokens) - len(needle) + 1):
        if tokens[i] == first and tokens[i : i + len(needle)] == needle:
            return True
    return False


def _year_window(validity: DateInterval) -> tuple[int, int]:
    lo = validity.start.year if validity.start is not None else -(10**9)
    hi = validity.end.year if validity.end is not None else 10**9
    return lo, hi


def _match_targets(kg: TemporalKG, relation: TemporalRelation) -> list[str]:
    """The strings whose mention marks the relation: object aliases, or the
    property label for temporal-literal objects."""
    if relation.object_is_literal:
        return [relation.property_label]
    entity = kg.entity(relation.object)  # type: ignore[arg-type]
    if entity is not None:
        return list(entity.aliases)
    event = kg.event(relation.object)  # type: ignore[arg-type]
    if event is not None:
        return [event.label]
    return []


def label_relations(
    kg: TemporalKG, doc: BiographyDoc, relations: list[TemporalRelation]
) -> list[LabeledRelation]:
    """Label each relation against the document, deterministically.

    Evidence records the first matching sentence, the alias that matched
    (normalized), and the first in-window year of that sentence.
    """
    for relation in relations:
        if relation.subject != doc.person:
            raise PersonMismatch(
                f"relation subject {relation.subject} does not match document person {doc.person}"
            )

    sentence_tokens = [normalize_tokens(s) for s in doc.sentences]
    sentence_years = [
        [int(tok) for tok in tokens if len(tok) == 4 and tok.isdigit()]
        for tokens in sentence_tokens
    ]

    labeled: list[LabeledRelation] = []
    for relation in relations:
        targets = [normalize_tokens(t) for t in _match_targets(kg, relation)]
        targets = [t for t in targets if t]
        lo, hi = _year_window(relation.validity)
        evidence: Optional[Evidence] = None
        for idx, tokens in enumerate(sentence_tokens):
            year = next((y for y in sentence_years[idx] if lo <= y <= hi), None)
            if year is None:
                continue
            matched = next((t for t in targets if _contains_sequence(tokens, t)), None)
            if matched is None:
                continue
            evidence = Evidence(sentence_index=idx, matched_label=" ".join(matched), matched_year=year)
            break
        labeled.append(
            LabeledRelation(
                relation=relation,
                source=doc.source,
                relevant=evidence is not None,
                evidence=evidence,
            )
        )
    return labeled


def read_doc(path: Path, person: str, source: str) -> BiographyDoc:
    """One sentence per line; blank lines are dropped."""
    lines = path.read_text(encoding="utf-8").splitlines()
    return BiographyDoc(
        person=person,
        source=source,
        sentences=tuple(line for line in lines if line.strip()),
    )


def build_benchmark(kg: TemporalKG, corpus_dir: Union[str, Path]) -> BenchmarkResult:
    """Label every biography under ``corpus_dir/<source>/<person_id>.txt``.

    Biographies whose person id is not a loaded person are skipped and
    reported. Output is sorted by (person, source), relations keeping
    their extraction order within a document.
    """
    corpus = Path(corpus_dir)
    docs: list[BiographyDoc] = []
    skipped: list[str] = []
    for source in SOURCES:
        source_dir = corpus / source
        if not source_dir.is_dir():
            continue
        for path in sorted(source_dir.glob("*.txt")):
            person = path.stem
            if kg.person(person) is None:
                message = f"skipping {source}/{path.name}: no person {person!r} in graph"
                skipped.append(message)
                logger.warning(message)
                continue
            docs.append(read_doc(path, person=person, source=source))

    docs.sort(key=lambda d: (d.person, d.source))
    relation_cache: dict[str, list[TemporalRelation]] = {}
    records: list[LabeledRelation] = []
    positives = {source: 0 for source in SOURCES}
    persons: set[str] = set()
    for doc in docs:
        if doc.person not in relation_cache:
            relation_cache[doc.person] = extract_relations(kg, doc.person)
        labeled = label_relations(kg, doc, relation_cache[doc.person])
        records.extend(labeled)
        persons.add(doc.person)
        positives[doc.source] += sum(1 for rec in labeled if rec.relevant)

    summary = {
        "persons": len(persons),
        "relations": len(records),
        "positives": positives,
    }
    return BenchmarkResult(records=records, summary=summary, skipped=skipped)


# ---- JSONL benchmark interchange ------------------------------------------


def record_to_json(record: LabeledRelation, person: str) -> dict:
    relation = record.relation
    return {
        "person": person,
        "source": record.source,
        "property": relation.property_id,
        "object": relation.object_key,
        "object_kind": "date" if relation.object_is_literal else "entity",
        "start": relation.validity.start.iso() if relation.validity.start else None,
        "end": relation.validity.end.iso() if relation.validity.end else None,
        "kind": int(relation.kind),
        "relevant": record.relevant,
        "evidence_sentence": record.evidence.sentence_index if record.evidence else None,
        "matched_year": record.evidence.matched_year if record.evidence else None,
    }


def write_benchmark(records: list[LabeledRelation], path: Union[str, Path]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for record in records:
            doc = record_to_json(record, person=record.relation.subject)
            fh.write(json.dumps(doc, separators=(",", ":")) + "\n")


def read_benchmark(path: Union[str, Path]) -> list[LabeledRelation]:
    """Rebuild labeled relations from a JSONL benchmark file.

    The interchange format does not carry property labels or the matched
    alias, so those come back empty; training does not use them.
    """
    records: list[LabeledRelation] = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            doc = json.loads(line)
            validity = DateInterval(
                start=parse_date(doc["start"], position="start") if doc["start"] else None,
                end=parse_date(doc["end"], position="end") if doc["end"] else None,
            )
            relation = TemporalRelation(
                subject=doc["person"],
                property_id=doc["property"],
                property_label=doc["property"],
                object=parse_date(doc["object"]) if doc["object_kind"] == "date" else doc["object"],
                validity=validity,
                kind=RelationKind(doc["kind"]),
            )
            evidence = None
            if doc["relevant"] and doc["evidence_sentence"] is not None:
                evidence = Evidence(
                    sentence_index=doc["evidence_sentence"],
                    matched_label="",
                    matched_year=doc["matched_year"],
                )
            records.append(
                LabeledRelation(
                    relation=relation,
                    source=doc["source"],
                    relevant=doc["relevant"],
                    evidence=evidence,
                )
            )
    return records
