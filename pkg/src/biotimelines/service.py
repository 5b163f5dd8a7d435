"""HTTP+JSON service: person search, timelines, export, related, events.

Timeline and export documents are rendered once per (person, model) key
and cached as bytes in a bounded LRU with per-key single-flight
computation, so concurrent identical requests trigger exactly one build
and cache hits replay byte-identical bodies (generated_at included). The
graph and models are immutable; the cache is the only shared mutable
state.
"""

from __future__ import annotations

import json
import threading
from collections import OrderedDict
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Callable, Optional
from urllib.parse import quote

from fastapi import FastAPI, Request, Response

from .errors import BiotimelinesError, NotAPerson, UnknownPerson
from .features import FeatureSchema
from .kg import Entity, Event, GeoPoint, TemporalKG
from .model import RelevanceModel
from .relations import TemporalRelation
from .timeline import Timeline, build_timeline

DEFAULT_CACHE_SIZE = 1000
DEFAULT_URL_TEMPLATE = "https://en.wikipedia.org/wiki/{label}"
DEFAULT_LIMIT = 10
MAX_LIMIT = 100


def now_rfc3339() -> str:
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


class SingleFlightLRU:
    """Bounded LRU map with per-key single-flight computation.

    Concurrent callers for the same missing key block until the first
    caller's build completes; only one build runs per key at a time.
    """

    def __init__(self, maxsize: int = DEFAULT_CACHE_SIZE):
        if maxsize < 1:
            raise ValueError("cache size must be positive")
        self.maxsize = maxsize
        self._lock = threading.Lock()
        self._data: OrderedDict = OrderedDict()
        self._inflight: dict = {}
        self.hits = 0
        self.misses = 0

    def get_or_build(self, key, build: Callable[[], object]) -> tuple[object, bool]:
        """Return (value, was_cached). ``build`` runs outside the lock."""
        while True:
            with self._lock:
                if key in self._data:
                    self._data.move_to_end(key)
                    self.hits += 1
                    return self._data[key], True
                waiter = self._inflight.get(key)
                if waiter is None:
                    self._inflight[key] = threading.Event()
                    break
            waiter.wait()
        try:
            value = build()
        except BaseException:
            with self._lock:
                self._inflight.pop(key).set()
            raise
        with self._lock:
            self._data[key] = value
            self._data.move_to_end(key)
            while len(self._data) > self.maxsize:
                self._data.popitem(last=False)
            self.misses += 1
            self._inflight.pop(key).set()
        return value, False

    def clear(self) -> None:
        with self._lock:
            self._data.clear()

    def __len__(self) -> int:
        with self._lock:
            return len(self._data)


# ---- JSON rendering --------------------------------------------------------


def dumps_bytes(doc) -> bytes:
    """Canonical response encoding; parse + re-dump is byte-stable."""
    return json.dumps(doc, ensure_ascii=False, separators=(",", ":")).encode("utf-8")


def _geo_json(location: Optional[GeoPoint]):
    if location is None:
        return None
    return {"lat": location.lat, "lon": location.lon}


def _interval_json(interval):
    if interval is None:
        return None
    return {
        "start": interval.start.iso() if interval.start else None,
        "end": interval.end.iso() if interval.end else None,
    }


def person_json(entity: Entity, url_template: Optional[str]) -> dict:
    doc = {
        "id": entity.id,
        "label": entity.label,
        "aliases": list(entity.aliases),
        "description": entity.description,
        "existence": _interval_json(entity.existence),
        "location": _geo_json(entity.location),
        "link_count": entity.link_count,
    }
    if url_template:
        doc["external_url"] = url_template.format(
            id=quote(entity.id), label=quote(entity.label.replace(" ", "_"))
        )
    return doc


def relation_json(relation: TemporalRelation, score: float, relevant: bool) -> dict:
    return {
        "subject": relation.subject,
        "property": relation.property_id,
        "property_label": relation.property_label,
        "object": relation.object_key,
        "object_kind": "date" if relation.object_is_literal else "entity",
        "start": relation.validity.start.iso() if relation.validity.start else None,
        "end": relation.validity.end.iso() if relation.validity.end else None,
        "kind": int(relation.kind),
        "score": score,
        "relevant": relevant,
    }


def event_json(event: Event) -> dict:
    return {
        "id": event.id,
        "label": event.label,
        "description": event.description,
        "start": event.happening.start.iso() if event.happening.start else None,
        "end": event.happening.end.iso() if event.happening.end else None,
        "location": _geo_json(event.location),
        "participants": sorted(event.participants),
    }


def timeline_json(
    timeline: Timeline, kg: TemporalKG, generated_at: str, url_template: Optional[str]
) -> dict:
    person = kg.entities[timeline.person]
    entries = []
    for entry in timeline.entries:
        doc = relation_json(entry.relation, entry.score, relevant=True)
        doc["object_label"] = entry.object_label
        doc["group_label"] = entry.group_label
        doc["location"] = _geo_json(entry.location)
        entries.append(doc)
    return {
        "person": person_json(person, url_template),
        "model_source": timeline.source_model,
        "generated_at": generated_at,
        "entries": entries,
        "events": [event_json(ev) for ev in timeline.events],
        "related_people": [
            {
                "id": pid,
                "label": kg.entities[pid].label,
                "count": count,
                "link_count": kg.entities[pid].link_count,
            }
            for pid, count in timeline.related_people
        ],
    }


def export_json(
    timeline: Timeline, kg: TemporalKG, generated_at: str, url_template: Optional[str]
) -> dict:
    person = kg.entities[timeline.person]
    return {
        "person": person_json(person, url_template),
        "model_source": timeline.source_model,
        "generated_at": generated_at,
        "entries": [
            relation_json(entry.relation, entry.score, relevant=True)
            for entry in timeline.entries
        ],
        "rejected": [
            relation_json(relation, score, relevant=False)
            for relation, score in timeline.rejected
        ],
        "events": [event_json(ev) for ev in timeline.events],
    }


# ---- service ---------------------------------------------------------------


@dataclass
class _CacheEntry:
    timeline_bytes: bytes
    export_bytes: bytes


class TimelineService:
    """Request-level facade over the graph, models, and timeline cache."""

    def __init__(
        self,
        kg: TemporalKG,
        models: dict[str, RelevanceModel],
        schema: FeatureSchema,
        cache_size: int = DEFAULT_CACHE_SIZE,
        clock: Callable[[], str] = now_rfc3339,
        url_template: Optional[str] = DEFAULT_URL_TEMPLATE,
        related_limit: int = DEFAULT_LIMIT,
    ):
        if not models:
            raise ValueError("at least one relevance model is required")
        self.kg = kg
        self.models = models
        self.schema = schema
        self.clock = clock
        self.url_template = url_template
        self.related_limit = related_limit
        self.cache = SingleFlightLRU(cache_size)
        self.build_count = 0
        self._build_lock = threading.Lock()

    def reload(self, kg: TemporalKG) -> None:
        """Swap in freshly loaded data; the timeline cache is dropped."""
        self.kg = kg
        self.cache.clear()

    # each (person, model) build renders both documents once
    def _build_entry(self, person: str, source: str) -> _CacheEntry:
        timeline = self._compute_timeline(person, source)
        generated_at = self.clock()
        with self._build_lock:
            self.build_count += 1
        return _CacheEntry(
            timeline_bytes=dumps_bytes(
                timeline_json(timeline, self.kg, generated_at, self.url_template)
            ),
            export_bytes=dumps_bytes(
                export_json(timeline, self.kg, generated_at, self.url_template)
            ),
        )

    def _compute_timeline(self, person: str, source: str) -> Timeline:
        return build_timeline(
            self.kg, person, self.models[source], self.schema, related_limit=self.related_limit
        )

    def _entry(self, person: str, source: str) -> tuple[_CacheEntry, bool]:
        if source not in self.models:
            raise KeyError(source)
        if self.kg.person(person) is None:
            raise UnknownPerson(person)
        key = (person, source)
        value, cached = self.cache.get_or_build(key, lambda: self._build_entry(person, source))
        return value, cached  # type: ignore[return-value]

    def timeline_bytes(self, person: str, source: str) -> tuple[bytes, bool]:
        entry, cached = self._entry(person, source)
        return entry.timeline_bytes, cached

    def export_bytes(self, person: str, source: str) -> tuple[bytes, bool]:
        entry, cached = self._entry(person, source)
        return entry.export_bytes, cached

    def search_json(self, query: str, limit: int) -> list[dict]:
        return [
            {
                "id": entity.id,
                "label": entity.label,
                "link_count": entity.link_count,
                "existence": _interval_json(entity.existence),
                "description": entity.description,
            }
            for entity in self.kg.search_persons(query, limit)
        ]

    def related_json(self, person: str, limit: int) -> list[dict]:
        from .timeline import related_people

        return [
            {
                "id": pid,
                "label": self.kg.entities[pid].label,
                "count": count,
                "link_count": self.kg.entities[pid].link_count,
            }
            for pid, count in related_people(self.kg, person, limit)
        ]

    def events_json(self, person: str) -> list[dict]:
        from .timeline import person_events

        return [event_json(ev) for ev in person_events(self.kg, person)]

    def stats(self) -> dict:
        return {
            "builds": self.build_count,
            "cache_hits": self.cache.hits,
            "cache_misses": self.cache.misses,
            "cached_timelines": len(self.cache),
        }


def create_app(service: TimelineService, static_dir: Optional[str] = None) -> FastAPI:
    """Wire the service into a FastAPI application."""
    app = FastAPI(title="biotimelines", docs_url=None, redoc_url=None)
    app.state.service = service

    def json_response(doc, status: int = 200, headers: Optional[dict] = None) -> Response:
        return Response(
            content=dumps_bytes(doc),
            status_code=status,
            media_type="application/json",
            headers=headers,
        )

    def error(status: int, message: str) -> Response:
        return json_response({"error": message}, status=status)

    def parse_limit(raw: Optional[str]):
        if raw is None:
            return DEFAULT_LIMIT
        try:
            limit = int(raw)
        except ValueError:
            return None
        if limit < 0:
            return None
        return min(limit, MAX_LIMIT)

    def resolve_model(raw: Optional[str]) -> Optional[str]:
        source = raw if raw is not None else "wikipedia"
        return source if source in service.models else None

    @app.get("/api/persons")
    def persons(request: Request) -> Response:
        query = request.query_params.get("q")
        if not query:
            return error(400, "missing query parameter q")
        limit = parse_limit(request.query_params.get("limit"))
        if limit is None:
            return error(400, "limit must be a non-negative integer")
        return json_response(service.search_json(query, limit))

    @app.get("/api/timeline/{person_id}")
    def timeline(person_id: str, request: Request) -> Response:
        source = resolve_model(request.query_params.get("model"))
        if source is None:
            return error(400, "unknown model; expected one of " + ", ".join(sorted(service.models)))
        try:
            body, cached = service.timeline_bytes(person_id, source)
        except (UnknownPerson, NotAPerson):
            return error(404, f"unknown person: {person_id}")
        return Response(
            content=body,
            media_type="application/json",
            headers={"cache": "hit" if cached else "miss"},
        )

    @app.get("/api/export/{person_id}")
    def export(person_id: str, request: Request) -> Response:
        source = resolve_model(request.query_params.get("model"))
        if source is None:
            return error(400, "unknown model; expected one of " + ", ".join(sorted(service.models)))
        try:
            body, cached = service.export_bytes(person_id, source)
        except (UnknownPerson, NotAPerson):
            return error(404, f"unknown person: {person_id}")
        return Response(
            content=body,
            media_type="application/json",
            headers={"cache": "hit" if cached else "miss"},
        )

    @app.get("/api/related/{person_id}")
    def related(person_id: str, request: Request) -> Response:
        limit = parse_limit(request.query_params.get("limit"))
        if limit is None:
            return error(400, "limit must be a non-negative integer")
        try:
            return json_response(service.related_json(person_id, limit))
        except (UnknownPerson, NotAPerson):
            return error(404, f"unknown person: {person_id}")

    @app.get("/api/events/{person_id}")
    def events(person_id: str) -> Response:
        try:
            return json_response(service.events_json(person_id))
        except (UnknownPerson, NotAPerson):
            return error(404, f"unknown person: {person_id}")

    @app.get("/api/stats")
    def stats() -> Response:
        return json_response(service.stats())

    @app.exception_handler(BiotimelinesError)
    def handle_domain_error(request: Request, exc: BiotimelinesError) -> Response:
        return error(500, str(exc))

    if static_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="static")

    return app
