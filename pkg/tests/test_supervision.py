import json
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from biotimelines import PersonMismatch, build_benchmark, label_relations
from biotimelines.supervision import (
    BENCHMARK_FIELDS,
    BiographyDoc,
    normalize_tokens,
    read_benchmark,
    write_benchmark,
)

from oracles import label_oracle, tokens_oracle


def doc_for(person, sentences, source="wikipedia"):
    return BiographyDoc(person=person, source=source, sentences=tuple(sentences))


class TestMatcher:
    def test_alias_and_year_match(self, kg):
        relations = [
            r for r in __import__("biotimelines").extract_relations(kg, "JohnAdams")
            if r.property_id == "marriedTo"
        ]
        doc = doc_for("JohnAdams", ["He married Abigail Smith in 1764."])
        labeled = label_relations(kg, doc, relations)
        assert labeled[0].relevant
        evidence = labeled[0].evidence
        assert evidence.sentence_index == 0
        assert evidence.matched_label == "abigail smith"
        assert evidence.matched_year == 1764

    def test_year_outside_window_is_negative(self, kg):
        from biotimelines import extract_relations

        relations = [
            r for r in extract_relations(kg, "JohnAdams")
            if r.property_id == "child" and r.object == "JohnQuincyAdams"
        ]
        doc = doc_for("JohnAdams", ["A statue of John Quincy Adams was raised in 1900."])
        labeled = label_relations(kg, doc, relations)
        assert not labeled[0].relevant
        assert labeled[0].evidence is None

    def test_literal_relations_match_property_label(self, kg):
        from biotimelines import extract_relations

        relations = [
            r for r in extract_relations(kg, "JohnAdams") if r.property_id == "born"
        ]
        hit = label_relations(kg, doc_for("JohnAdams", ["Born in 1735, he farmed."]), relations)
        assert hit[0].relevant
        miss = label_relations(
            kg, doc_for("JohnAdams", ["He arrived in the world in 1735."]), relations
        )
        assert not miss[0].relevant

    def test_mention_without_year_is_negative(self, kg):
        from biotimelines import extract_relations

        relations = [
            r for r in extract_relations(kg, "JohnAdams") if r.property_id == "marriedTo"
        ]
        doc = doc_for("JohnAdams", ["He married Abigail Smith."])
        assert not label_relations(kg, doc, relations)[0].relevant

    def test_label_must_be_whole_word_sequence(self, kg):
        from biotimelines import extract_relations

        relations = [
            r for r in extract_relations(kg, "JohnAdams") if r.property_id == "marriedTo"
        ]
        doc = doc_for("JohnAdams", ["He admired Abigail Smithson in 1764."])
        assert not label_relations(kg, doc, relations)[0].relevant

    def test_empty_sentences_all_negative(self, kg):
        from biotimelines import extract_relations

        relations = extract_relations(kg, "JohnAdams")
        labeled = label_relations(kg, doc_for("JohnAdams", []), relations)
        assert labeled and not any(rec.relevant for rec in labeled)

    def test_person_mismatch_rejected(self, kg):
        from biotimelines import extract_relations

        relations = extract_relations(kg, "JohnAdams")
        with pytest.raises(PersonMismatch):
            label_relations(kg, doc_for("SamuelAdams", ["Nothing."]), relations)

    def test_first_matching_sentence_wins(self, kg):
        from biotimelines import extract_relations

        relations = [
            r for r in extract_relations(kg, "JohnAdams") if r.property_id == "marriedTo"
        ]
        doc = doc_for(
            "JohnAdams",
            ["Nothing relevant here.", "In 1764 he wed Abigail Adams.",
             "Abigail Smith accepted him in 1764."],
        )
        evidence = label_relations(kg, doc, relations)[0].evidence
        assert evidence.sentence_index == 1
        assert evidence.matched_label == "abigail adams"


class TestNormalization:
    @pytest.mark.parametrize(
        "text,expected",
        [
            ("He married Abigail Smith in 1764.", ["he", "married", "abigail", "smith", "in", "1764"]),
            ("  A--B!!  c  ", ["a", "b", "c"]),
            ("", []),
            ("in1764 the", ["in1764", "the"]),
        ],
    )
    def test_examples(self, text, expected):
        assert normalize_tokens(text) == expected

    @given(st.text(max_size=200))
    def test_matches_independent_tokenizer(self, text):
        assert normalize_tokens(text) == tokens_oracle(text)


class TestAgainstOracle:
    def test_full_fixture_corpus(self, kg, fixture_dir):
        from biotimelines import extract_relations

        for source in ("wikipedia", "bio_web"):
            for path in sorted((fixture_dir / "corpus" / source).glob("*.txt")):
                person = path.stem
                sentences = [
                    line for line in path.read_text(encoding="utf-8").splitlines() if line.strip()
                ]
                relations = extract_relations(kg, person)
                got = [
                    (
                        rec.relevant,
                        rec.evidence.sentence_index if rec.evidence else None,
                        rec.evidence.matched_label if rec.evidence else None,
                        rec.evidence.matched_year if rec.evidence else None,
                    )
                    for rec in label_relations(
                        kg, doc_for(person, sentences, source), relations
                    )
                ]
                assert got == label_oracle(kg, sentences, relations), (source, person)

    def test_evidence_reproducible_on_single_sentence(self, kg, benchmark):
        from biotimelines import extract_relations

        cache = {}
        checked = 0
        for rec in benchmark.records:
            if not rec.relevant:
                continue
            person = rec.relation.subject
            if person not in cache:
                cache[person] = extract_relations(kg, person)
            sentence = _corpus_sentence(person, rec.source, rec.evidence.sentence_index)
            single = label_relations(
                kg,
                doc_for(person, [sentence], rec.source),
                [rec.relation],
            )[0]
            assert single.relevant
            assert single.evidence.matched_label == rec.evidence.matched_label
            assert single.evidence.matched_year == rec.evidence.matched_year
            checked += 1
        assert checked > 100


def _corpus_sentence(person, source, index):
    path = Path(__file__).resolve().parent.parent / "fixtures" / "corpus" / source / f"{person}.txt"
    lines = [line for line in path.read_text(encoding="utf-8").splitlines() if line.strip()]
    return lines[index]


@settings(max_examples=50, deadline=None)
@given(
    extra=st.text(max_size=120),
    n_sentences=st.integers(0, 6),
)
def test_adding_a_sentence_never_flips_to_negative(kg_cached, extra, n_sentences):
    from biotimelines import extract_relations

    kg = kg_cached
    base_path = (
        Path(__file__).resolve().parent.parent / "fixtures" / "corpus" / "wikipedia" / "JohnAdams.txt"
    )
    pool = [line for line in base_path.read_text(encoding="utf-8").splitlines() if line.strip()]
    sentences = pool[:n_sentences]
    relations = extract_relations(kg, "JohnAdams")
    before = label_relations(kg, doc_for("JohnAdams", sentences), relations)
    after = label_relations(kg, doc_for("JohnAdams", sentences + [extra]), relations)
    for old, new in zip(before, after):
        if old.relevant:
            assert new.relevant
            assert new.evidence == old.evidence  # appended text cannot steal evidence


@pytest.fixture(scope="module")
def kg_cached(kg):
    return kg


class TestBenchmark:
    def test_fixture_summary(self, benchmark):
        assert benchmark.summary["persons"] == 50
        for source, positives in benchmark.summary["positives"].items():
            total = sum(1 for rec in benchmark.records if rec.source == source)
            assert 0 < positives < total, source
        assert not benchmark.skipped

    def test_records_sorted_by_person_then_source(self, benchmark):
        keys = [(rec.relation.subject, rec.source) for rec in benchmark.records]
        assert keys == sorted(keys)

    def test_empty_corpus(self, kg, tmp_path):
        result = build_benchmark(kg, tmp_path)
        assert result.records == []
        assert result.summary["persons"] == 0

    def test_unknown_person_file_skipped(self, kg, tmp_path):
        (tmp_path / "wikipedia").mkdir()
        (tmp_path / "wikipedia" / "Nobody.txt").write_text("Text in 1800.\n", encoding="utf-8")
        (tmp_path / "wikipedia" / "HarvardCollege.txt").write_text("Text.\n", encoding="utf-8")
        result = build_benchmark(kg, tmp_path)
        assert result.records == []
        assert len(result.skipped) == 2
        assert "Nobody" in result.skipped[1] or "Nobody" in result.skipped[0]


class TestJsonl:
    def test_round_trip_and_field_contract(self, benchmark, tmp_path):
        out = tmp_path / "benchmark.jsonl"
        write_benchmark(benchmark.records, out)
        lines = out.read_text(encoding="utf-8").splitlines()
        assert len(lines) == len(benchmark.records)
        for line in lines[:50]:
            doc = json.loads(line)
            assert list(doc.keys()) == BENCHMARK_FIELDS

        loaded = read_benchmark(out)
        assert len(loaded) == len(benchmark.records)
        for original, parsed in zip(benchmark.records, loaded):
            assert parsed.relevant == original.relevant
            assert parsed.source == original.source
            assert parsed.relation.subject == original.relation.subject
            assert parsed.relation.property_id == original.relation.property_id
            assert parsed.relation.object_key == original.relation.object_key
            assert int(parsed.relation.kind) == int(original.relation.kind)

    def test_write_is_deterministic(self, benchmark, tmp_path):
        a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
        write_benchmark(benchmark.records, a)
        write_benchmark(benchmark.records, b)
        assert a.read_bytes() == b.read_bytes()
