import datetime as dt
from pathlib import Path

import pytest

from biotimelines import (
    DanglingReference,
    DuplicateId,
    InvalidDate,
    MalformedLine,
    load_kg,
    validate_kg,
)
from biotimelines.kg import ENTITY_COLUMNS, EVENT_COLUMNS, FACT_COLUMNS, EntityKind

from oracles import search_oracle

ENTITY_HEADER = "\t".join(ENTITY_COLUMNS)
EVENT_HEADER = "\t".join(EVENT_COLUMNS)
FACT_HEADER = "\t".join(FACT_COLUMNS)


def write_dump(tmp_path: Path, entities=(), events=(), facts=()) -> Path:
    (tmp_path / "entities.tsv").write_text(
        "\n".join([ENTITY_HEADER, *entities]) + "\n", encoding="utf-8"
    )
    (tmp_path / "events.tsv").write_text(
        "\n".join([EVENT_HEADER, *events]) + "\n", encoding="utf-8"
    )
    (tmp_path / "facts.tsv").write_text(
        "\n".join([FACT_HEADER, *facts]) + "\n", encoding="utf-8"
    )
    return tmp_path


PERSON_ROW = "P1\tAda Example\tperson\twriter\t1800-01-01\t1870-01-01\t\t\t10\tAn example person."
OTHER_ROW = "O1\tSome Office\tother\t\t1750\t\t\t\t5\t"


class TestLoading:
    def test_fixture_counts_match_line_counts(self, kg, fixture_dir):
        lines = {
            name: (fixture_dir / "mini_ekg" / f"{name}.tsv")
            .read_text(encoding="utf-8")
            .splitlines()
            for name in ("entities", "events", "facts")
        }
        persons_in_file = sum(
            1 for row in lines["entities"][1:] if row.split("\t")[2] == "person"
        )
        assert kg.n_persons == persons_in_file == 50
        assert len(kg.entities) == len(lines["entities"]) - 1
        assert len(kg.events) == len(lines["events"]) - 1
        assert len(kg.facts) == len(lines["facts"]) - 1

    def test_two_loads_identical_including_order(self, fixture_dir):
        first = load_kg(fixture_dir / "mini_ekg")
        second = load_kg(fixture_dir / "mini_ekg")
        assert first == second
        assert list(first.entities) == list(second.entities) == sorted(first.entities)
        assert list(first.events) == sorted(first.events)

    def test_intervals_are_ordered(self, kg):
        for entity in kg.entities.values():
            if entity.existence and entity.existence.start and entity.existence.end:
                assert entity.existence.start.day <= entity.existence.end.day
        for event in kg.events.values():
            assert event.happening.start is not None
            if event.happening.end is not None:
                assert event.happening.start.day <= event.happening.end.day

    def test_referential_integrity(self, kg):
        for fact in kg.facts:
            assert fact.subject in kg.entities
            if not fact.object_is_literal:
                assert fact.object in kg.entities or fact.object in kg.events
        for event in kg.events.values():
            for pid in event.participants:
                assert pid in kg.entities

    def test_empty_facts_file(self, tmp_path):
        kg = load_kg(write_dump(tmp_path, entities=[PERSON_ROW]))
        assert len(kg.facts) == 0
        assert len(kg.entities) == 1

    def test_zero_byte_files_mean_no_rows(self, tmp_path):
        write_dump(tmp_path, entities=[PERSON_ROW])
        (tmp_path / "facts.tsv").write_text("", encoding="utf-8")
        kg = load_kg(tmp_path)
        assert len(kg.facts) == 0

    def test_year_only_dates_expand_with_marker(self, tmp_path):
        kg = load_kg(write_dump(tmp_path, entities=[PERSON_ROW, OTHER_ROW]))
        office = kg.entities["O1"]
        assert office.existence.start.day == dt.date(1750, 1, 1)
        assert office.existence.start.approx

    def test_aliases_split_from_label(self, kg):
        abigail = kg.entities["AbigailAdams"]
        assert abigail.label == "Abigail Adams"
        assert abigail.aliases == ("Abigail Adams", "Abigail Smith")


class TestErrors:
    def test_dangling_fact_reference(self, tmp_path):
        dump = write_dump(
            tmp_path,
            entities=[PERSON_ROW],
            facts=["P1\tknows\tKnows\tentity\tQX\t\t"],
        )
        with pytest.raises(DanglingReference) as err:
            load_kg(dump)
        assert err.value.id == "QX"

    def test_dangling_participant(self, tmp_path):
        dump = write_dump(
            tmp_path,
            entities=[PERSON_ROW],
            events=["E1\tA fair\t1820-05-01\t\t\t\tP1|P9\tA fair is held."],
        )
        with pytest.raises(DanglingReference):
            load_kg(dump)

    def test_duplicate_entity_id(self, tmp_path):
        with pytest.raises(DuplicateId):
            load_kg(write_dump(tmp_path, entities=[PERSON_ROW, PERSON_ROW]))

    def test_event_id_colliding_with_entity(self, tmp_path):
        dump = write_dump(
            tmp_path,
            entities=[PERSON_ROW],
            events=["P1\tClash\t1820-05-01\t\t\t\t\tClash."],
        )
        with pytest.raises(DuplicateId):
            load_kg(dump)

    def test_invalid_date_surfaces_text(self, tmp_path):
        bad = PERSON_ROW.replace("1800-01-01", "1800-13-01")
        with pytest.raises(InvalidDate) as err:
            load_kg(write_dump(tmp_path, entities=[bad]))
        assert err.value.text == "1800-13-01"

    @pytest.mark.parametrize(
        "row",
        [
            "P1\tAda\tperson\t\t\t\t\t\t10",  # missing column
            "p 1\tAda\tperson\t\t\t\t\t\t10\t",  # bad id
            "P1\tAda\talien\t\t\t\t\t\t10\t",  # bad kind
            "P1\tAda\tperson\t\t\t\t91.0\t10.0\t10\t",  # latitude out of range
            "P1\tAda\tperson\t\t\t\t42.0\t\t10\t",  # lon missing
            "P1\tAda\tperson\t\t\t\t\t\t-3\t",  # negative link count
            "P1\tAda\tperson\t\t1870-01-01\t1800-01-01\t\t\t1\t",  # reversed interval
            "P1\t\tperson\t\t\t\t\t\t1\t",  # empty label
        ],
    )
    def test_malformed_entity_rows(self, tmp_path, row):
        with pytest.raises(MalformedLine):
            load_kg(write_dump(tmp_path, entities=[row]))

    def test_bad_header(self, tmp_path):
        write_dump(tmp_path, entities=[PERSON_ROW])
        (tmp_path / "facts.tsv").write_text("wrong\theader\n", encoding="utf-8")
        with pytest.raises(MalformedLine):
            load_kg(tmp_path)

    def test_literal_fact_with_validity_rejected(self, tmp_path):
        dump = write_dump(
            tmp_path,
            entities=[PERSON_ROW],
            facts=["P1\tborn\tborn\tdate\t1800-01-01\t1800-01-01\t"],
        )
        with pytest.raises(MalformedLine):
            load_kg(dump)

    def test_event_requires_start(self, tmp_path):
        dump = write_dump(
            tmp_path,
            entities=[PERSON_ROW],
            events=["E1\tA fair\t\t\t\t\tP1\tA fair."],
        )
        with pytest.raises(MalformedLine):
            load_kg(dump)

    def test_validate_collects_multiple_errors(self, tmp_path):
        dump = write_dump(
            tmp_path,
            entities=[PERSON_ROW, "P2\tBad\talien\t\t\t\t\t\t1\t", PERSON_ROW.replace("P1", "P1")],
            facts=["P1\tknows\tKnows\tentity\tQX\t\t", "P9\tknows\tKnows\tentity\tP1\t\t"],
        )
        report = validate_kg(dump)
        assert not report.ok
        kinds = {type(err) for err in report.errors}
        assert DuplicateId in kinds
        assert DanglingReference in kinds
        assert MalformedLine in kinds
        assert report.counts["entities"] == 1  # the two defective rows were dropped

    def test_validate_clean_fixture(self, fixture_dir):
        report = validate_kg(fixture_dir / "mini_ekg")
        assert report.ok
        assert report.counts["persons"] == 50


class TestQueries:
    def test_person_lookup_john_adams(self, kg):
        adams = kg.person("JohnAdams")
        assert adams is not None
        assert adams.existence.start.iso() == "1735-10-30"
        assert adams.existence.end.iso() == "1826-07-04"

    def test_person_absent_for_unknown_and_non_person(self, kg):
        assert kg.person("NoSuchId") is None
        assert kg.entities["HarvardCollege"].kind is EntityKind.OTHER
        assert kg.person("HarvardCollege") is None

    def test_search_matches_oracle(self, kg):
        for query in ("adams", "ADAMS", "john", "a", "zzzz-no-match", ""):
            for limit in (1, 3, 100):
                got = [e.id for e in kg.search_persons(query, limit)]
                assert got == search_oracle(kg, query, limit), (query, limit)

    def test_search_ranks_john_adams_first(self, kg):
        hits = kg.search_persons("adams", 10)
        assert hits[0].id == "JohnAdams"
        assert [e.id for e in hits[:3]] == ["JohnAdams", "JohnQuincyAdams", "SamuelAdams"]

    def test_search_empty_query(self, kg):
        assert kg.search_persons("", 10) == []

    def test_search_no_match(self, kg):
        assert kg.search_persons("zzzz-no-match", 10) == []
