import json

import pytest
from hypothesis import given, strategies as st

from tempspan import (Document, IngestCounters, IngestError,
                      MAX_MASKABLE_SENTENCE, Sentence, normalize_text,
                      read_documents, segment_sentences)


def doc(text, doc_id="d"):
    return Document(doc_id=doc_id, title="", text=text)


class TestNormalize:
    def test_crlf_and_nul(self):
        assert normalize_text("a\r\nb\rc\x00d") == "a\nb\ncd"

    def test_crlf_collapses_to_lf(self):
        assert normalize_text("x\r\ny") == "x\ny"

    def test_nfc(self):
        # e + combining acute composes to a single scalar
        assert normalize_text("café") == "café"

    def test_plain_ascii_unchanged(self):
        assert normalize_text("Hello there.") == "Hello there."


class TestSegmentation:
    def test_two_sentences_offsets(self):
        # hand-counted: "It rained." is (0,10); the string is 22 scalars
        # long, so the second sentence ends at 22, not one past it
        sents = segment_sentences(doc("It rained. It stopped."))
        assert [(s.text, s.start, s.end) for s in sents] == [
            ("It rained.", 0, 10),
            ("It stopped.", 11, 22),
        ]

    def test_no_terminator_single_sentence(self):
        sents = segment_sentences(doc("One sentence only"))
        assert len(sents) == 1
        assert sents[0].text == "One sentence only"
        assert (sents[0].start, sents[0].end) == (0, 17)

    def test_abbreviation_does_not_split(self):
        sents = segment_sentences(doc("Dr. Smith arrived on January 1. He left."))
        assert [s.text for s in sents] == [
            "Dr. Smith arrived on January 1.",
            "He left.",
        ]

    def test_month_abbreviations_do_not_split(self):
        sents = segment_sentences(doc("It happened on Jan. 5, 1901. Nobody saw."))
        assert [s.text for s in sents] == [
            "It happened on Jan. 5, 1901.",
            "Nobody saw.",
        ]

    def test_initials_do_not_split(self):
        sents = segment_sentences(doc("J. S. Bach composed daily. True story."))
        assert [s.text for s in sents] == [
            "J. S. Bach composed daily.",
            "True story.",
        ]

    def test_question_and_exclamation(self):
        sents = segment_sentences(doc("Really? Yes! Fine."))
        assert [s.text for s in sents] == ["Really?", "Yes!", "Fine."]

    def test_closing_quote_stays_with_sentence(self):
        sents = segment_sentences(doc('She said "go." Then left.'))
        assert [s.text for s in sents] == ['She said "go."', "Then left."]

    def test_lowercase_continuation_not_split(self):
        sents = segment_sentences(doc("He got 3.5 points. ok then."))
        # "ok" is lowercase, so the first boundary candidate is rejected;
        # the decimal point never qualifies at all
        assert sents[0].text == "He got 3.5 points. ok then."

    def test_empty_text(self):
        assert segment_sentences(doc("")) == []

    def test_whitespace_only(self):
        assert segment_sentences(doc("  \n\t ")) == []

    def test_sent_ids_and_ordinals(self):
        sents = segment_sentences(doc("A cat sat. A dog ran.", doc_id="dx"))
        assert [s.sent_id for s in sents] == ["dx:0", "dx:1"]
        assert [s.ordinal for s in sents] == [0, 1]

    def test_overlength_flag(self):
        short = segment_sentences(doc("Tiny."))[0]
        assert not short.overlength
        long_doc = doc("x" * (MAX_MASKABLE_SENTENCE + 1))
        assert segment_sentences(long_doc)[0].overlength

    def test_unicode_offsets_in_scalars(self):
        text = "The 🎉 ended. Next began."
        sents = segment_sentences(doc(text))
        first = sents[0]
        assert first.text == "The 🎉 ended."
        assert text[first.start:first.end] == first.text
        # emoji counts as one scalar
        assert first.end == 12

    @given(st.text(max_size=400))
    def test_offsets_always_slice_exactly(self, text):
        document = Document(doc_id="f", title="", text=normalize_text(text))
        for s in segment_sentences(document):
            assert document.text[s.start:s.end] == s.text
            assert s.text.strip() == s.text
            assert s.text

    @given(st.text(max_size=400))
    def test_sentences_ordered_and_disjoint(self, text):
        document = Document(doc_id="f", title="", text=normalize_text(text))
        sents = segment_sentences(document)
        for a, b in zip(sents, sents[1:]):
            assert a.end <= b.start

    @given(st.text(max_size=400))
    def test_coverage_gap_is_whitespace_only(self, text):
        # whatever the splitter skips between sentences must be
        # whitespace: nothing textual may be lost
        document = Document(doc_id="f", title="", text=normalize_text(text))
        sents = segment_sentences(document)
        pos = 0
        for s in sents:
            assert document.text[pos:s.start].strip() == ""
            pos = s.end
        assert document.text[pos:].strip() == ""


class TestReadDocuments:
    def test_single_record(self, tmp_path):
        p = tmp_path / "one.jsonl"
        p.write_text('{"id":"d1","title":"T","text":"Hello."}\n', encoding="utf-8")
        docs = list(read_documents(p, "jsonl"))
        assert docs == [Document(doc_id="d1", title="T", text="Hello.")]

    def test_empty_file(self, tmp_path):
        p = tmp_path / "empty.jsonl"
        p.write_text("", encoding="utf-8")
        counters = IngestCounters()
        assert list(read_documents(p, "jsonl", counters=counters)) == []
        assert counters.skipped_records == 0

    def test_malformed_line_lenient(self, tmp_path):
        p = tmp_path / "mixed.jsonl"
        p.write_text(
            '{"id":"good","text":"Fine."}\n'
            'this is not json\n',
            encoding="utf-8",
        )
        counters = IngestCounters()
        docs = list(read_documents(p, "jsonl", counters=counters))
        assert [d.doc_id for d in docs] == ["good"]
        assert counters.skipped_records == 1

    def test_malformed_line_strict(self, tmp_path):
        p = tmp_path / "bad.jsonl"
        p.write_text("not json\n", encoding="utf-8")
        with pytest.raises(IngestError):
            list(read_documents(p, "jsonl", strict=True))

    def test_missing_fields_skipped(self, tmp_path):
        p = tmp_path / "fields.jsonl"
        p.write_text('{"title":"no id or text"}\n', encoding="utf-8")
        counters = IngestCounters()
        assert list(read_documents(p, "jsonl", counters=counters)) == []
        assert counters.skipped_records == 1

    def test_duplicate_id_skipped(self, tmp_path):
        p = tmp_path / "dup.jsonl"
        p.write_text(
            '{"id":"d1","text":"First."}\n{"id":"d1","text":"Again."}\n',
            encoding="utf-8",
        )
        counters = IngestCounters()
        docs = list(read_documents(p, "jsonl", counters=counters))
        assert len(docs) == 1
        assert counters.skipped_records == 1

    def test_missing_path_fatal(self, tmp_path):
        with pytest.raises(IngestError):
            list(read_documents(tmp_path / "absent.jsonl", "jsonl"))

    def test_plain_format(self, tmp_path):
        p = tmp_path / "plain.txt"
        p.write_text("First doc here.\n\nSecond doc there.\n", encoding="utf-8")
        docs = list(read_documents(p, "plain"))
        assert [d.doc_id for d in docs] == ["plain.txt:0", "plain.txt:1"]
        assert docs[0].text == "First doc here."

    def test_text_normalized_on_ingest(self, tmp_path):
        p = tmp_path / "crlf.jsonl"
        p.write_text(json.dumps({"id": "d", "text": "a\r\nb\x00c"}) + "\n",
                     encoding="utf-8")
        [d] = read_documents(p, "jsonl")
        assert d.text == "a\nbc"


class TestSentenceRecord:
    def test_round_trip(self):
        s = Sentence(sent_id="d:0", doc_id="d", ordinal=0,
                     text="Hi.", start=0, end=3)
        assert Sentence.from_record(s.to_record()) == s
