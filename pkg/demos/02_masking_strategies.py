"""
Three ways to corrupt a sentence
================================

"""

from tempspan import (Sentence, detect_dates, heuristic_entities,
                      make_entities_example, make_ssm_example,
                      make_tsm_examples, parse_temporal)

text = "Isaac Newton arrived in Cambridge in June 1661 and stayed two years."
sentence = Sentence(sent_id="demo:0", doc_id="demo", ordinal=0,
                    text=text, start=0, end=len(text))
print(sentence.text)
print()

# Strategy 1: one example per temporal span.  Two spans here, so two
# training pairs come out.
temporal = parse_temporal(text, sent_id=sentence.sent_id)
for example in make_tsm_examples(sentence, temporal):
    print(f"tsm       inputs:  {example.inputs}")
    print(f"          targets: {example.targets!r} ({example.span_type})")
print()

# Strategy 2: mask one salient span — an entity or a regex-found date —
# chosen uniformly.  The choice hangs off (seed, sent_id), so reruns with
# the same seed pick the same span, and different seeds explore others.
entities = heuristic_entities(text, sent_id=sentence.sent_id)
dates = detect_dates(text, sent_id=sentence.sent_id)
for seed in (0, 1, 2, 3):
    example = make_ssm_example(sentence, entities, dates, seed)
    print(f"ssm s={seed}   targets: {example.targets!r} ({example.span_type})")
print()

# Strategy 3: same sampling with every regex-date span taken off the
# table, so only entities remain maskable.
for seed in (0, 1, 2, 3):
    example = make_entities_example(sentence, entities, seed)
    print(f"entities s={seed}  targets: {example.targets!r}")
