"""
Span statistics over the bundled sample corpus
==============================================

"""

from importlib.resources import files

from tempspan import (compute_stats, detect_dates, heuristic_entities,
                      iter_corpus_sentences, most_frequent_type,
                      parse_temporal, read_documents, render_report,
                      resolve_salient_overlaps)

# ~860 short synthetic articles, ~10k sentences, shipped inside the
# package so every demo and test runs offline.
corpus = files("tempspan") / "data" / "sample_corpus.jsonl"

sentences, temporal, salient = [], [], []
for sentence in iter_corpus_sentences(read_documents(str(corpus))):
    sentences.append(sentence)
    temporal.extend(parse_temporal(sentence.text, sent_id=sentence.sent_id))
    salient.extend(resolve_salient_overlaps(
        heuristic_entities(sentence.text, sent_id=sentence.sent_id)
        + detect_dates(sentence.text, sent_id=sentence.sent_id)))

stats = compute_stats(sentences, temporal, salient)

# The cross-tabulation: temporal types as rows, salient kinds as columns,
# each cell a number of sentences carrying both.
print(render_report(stats, table=True))
print()
print("most frequent type:", most_frequent_type(stats).value)
print("entity sentences that also carry a temporal span: "
      f"{stats.fraction_entity_sentences_with_temporal:.1%}")
