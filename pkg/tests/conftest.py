import json
from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def golden_records():
    """Parsed golden corpus: sentences with expected temporal spans."""
    records = []
    with (DATA / "golden_temporal.jsonl").open(encoding="utf-8") as fh:
        for line in fh:
            records.append(json.loads(line))
    assert len(records) >= 200, "golden corpus shrank below contract size"
    return records


@pytest.fixture(scope="session")
def sample_corpus_path():
    """The bundled ~10k-sentence synthetic corpus, as shipped."""
    from importlib.resources import files

    path = Path(str(files("tempspan") / "data" / "sample_corpus.jsonl"))
    assert path.is_file()
    return path


@pytest.fixture()
def toy_corpus(tmp_path):
    """Three small documents covering all span strategies."""
    docs = [
        {"id": "d1", "title": "Obama",
         "text": ("Barack Obama visited Paris on January 12, 2004. "
                  "He stayed for two weeks. Every Monday he runs.")},
        {"id": "d2", "title": "Meeting",
         "text": "The meeting is at 3:30 pm next Tuesday. Marie Curie won twice."},
        {"id": "d3", "title": "Nothing",
         "text": "No temporal content here. The harbor stayed quiet."},
    ]
    path = tmp_path / "docs.jsonl"
    with path.open("w", encoding="utf-8") as fh:
        for doc in docs:
            fh.write(json.dumps(doc) + "\n")
    return path


def write_examples(path, records):
    with Path(path).open("w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(json.dumps(rec, ensure_ascii=False) + "\n")
    return Path(path)


def make_example_record(i, name="a", strategy="tsm"):
    """A minimal well-formed MaskedExample jsonl record."""
    text = f"sentence {name}{i} ran"
    return {
        "example_id": f"{name}:{i}#{strategy}#0:4",
        "sent_id": f"{name}:{i}",
        "strategy": strategy,
        "span_type": "date",
        "inputs": f"_X_ {name}{i} ran",
        "targets": "sentence",
        "span_start": 0,
        "span_end": 8,
    }
