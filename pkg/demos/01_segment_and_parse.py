"""
Segmenting text and tagging temporal expressions
================================================

"""

# A document is just an id plus raw text.  Segmentation gives back
# sentences with offsets into the original, so everything downstream can
# point at exact character ranges.
from tempspan import Document, segment_sentences, parse_temporal

doc = Document(doc_id="demo", title="Walkthrough", text=(
    "Marie Curie moved to Paris in 1891. She worked there for two "
    "decades. Every Thursday she lectured at 14:00. The committee "
    "will reconvene next Monday."
))

for sentence in segment_sentences(doc):
    print(f"[{sentence.sent_id}] {sentence.text}")

    # parse_temporal returns typed spans: date, duration, set or time.
    # Offsets are relative to the sentence, surfaces are exact slices.
    for span in parse_temporal(sentence.text, sent_id=sentence.sent_id):
        print(f"    {span.type.value:<8} {span.start:>3}:{span.end:<3} "
              f"{span.surface!r}  ({span.rule_id})")
    print()
