"""Biography timelines from a temporal knowledge graph.

Pipeline: load a TSV dump into an immutable graph, extract each person's
candidate temporal relations, label them against textual biographies by
distant supervision, train per-corpus linear relevance models, and serve
grouped chronological timelines with linked events, people, and places.
"""

from .dates import DateInterval, PrecisionDate, intersect, parse_date
from .errors import (
    BiotimelinesError,
    DanglingReference,
    DegenerateTrainingSet,
    DuplicateId,
    EmptyBenchmark,
    InvalidDate,
    MalformedLine,
    NotAPerson,
    PersonMismatch,
    SchemaMismatch,
    UnknownPerson,
)
from .features import FeatureSchema, build_schema, featurize, load_schema, save_schema
from .kg import Entity, EntityKind, Event, Fact, GeoPoint, TemporalKG, load_kg, validate_kg
from .model import (
    Hyperparams,
    RelevanceModel,
    hinge_loss,
    load_model,
    predict,
    save_model,
    score,
    train,
)
from .relations import RelationKind, TemporalRelation, extract_relations
from .service import SingleFlightLRU, TimelineService, create_app
from .supervision import (
    BenchmarkResult,
    BiographyDoc,
    Evidence,
    LabeledRelation,
    build_benchmark,
    label_relations,
    read_benchmark,
    write_benchmark,
)
from .timeline import (
    MISC_GROUP,
    Timeline,
    TimelineEntry,
    assign_groups,
    build_timeline,
    person_events,
    related_people,
)

__version__ = "0.1.0"

__all__ = [
    "BenchmarkResult",
    "BiographyDoc",
    "BiotimelinesError",
    "DanglingReference",
    "DateInterval",
    "DegenerateTrainingSet",
    "DuplicateId",
    "EmptyBenchmark",
    "Entity",
    "EntityKind",
    "Event",
    "Evidence",
    "Fact",
    "FeatureSchema",
    "GeoPoint",
    "Hyperparams",
    "InvalidDate",
    "LabeledRelation",
    "MISC_GROUP",
    "MalformedLine",
    "NotAPerson",
    "PersonMismatch",
    "PrecisionDate",
    "RelationKind",
    "RelevanceModel",
    "SchemaMismatch",
    "SingleFlightLRU",
    "TemporalKG",
    "TemporalRelation",
    "Timeline",
    "TimelineEntry",
    "TimelineService",
    "UnknownPerson",
    "assign_groups",
    "build_benchmark",
    "build_schema",
    "build_timeline",
    "create_app",
    "extract_relations",
    "featurize",
    "hinge_loss",
    "intersect",
    "label_relations",
    "load_kg",
    "load_model",
    "load_schema",
    "parse_date",
    "person_events",
    "predict",
    "read_benchmark",
    "related_people",
    "save_model",
    "save_schema",
    "score",
    "train",
    "validate_kg",
    "write_benchmark",
]
