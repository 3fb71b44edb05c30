"""
Proportional mixing of example streams
======================================

"""

import tempfile
from fractions import Fraction
from pathlib import Path

from tempspan import MixtureComponent, MixtureSpec, mix
from tempspan.jsonio import write_jsonl


def fake_examples(name, n):
    # Stand-ins for real masked examples; only the ids matter here.
    for i in range(n):
        yield {"example_id": f"{name}:{i}#tsm#0:3", "sent_id": f"{name}:{i}",
               "strategy": "tsm", "span_type": "date",
               "inputs": "_X_ happened", "targets": "it",
               "span_start": 0, "span_end": 2}


workdir = Path(tempfile.mkdtemp())
write_jsonl(workdir / "tsm.jsonl", fake_examples("tsm", 60))
write_jsonl(workdir / "ssm.jsonl", fake_examples("ssm", 60))

# Three parts tsm to one part ssm.  The scheduler is smooth weighted
# round-robin: every prefix of the output is within one example of the
# 3:1 target, not just the stream as a whole.
spec = MixtureSpec(components=(
    MixtureComponent(name="tsm", path=workdir / "tsm.jsonl", weight=Fraction(3)),
    MixtureComponent(name="ssm", path=workdir / "ssm.jsonl", weight=Fraction(1)),
))

stream = [example.sent_id.split(":")[0] for example in mix(spec)]
print("first 16: ", " ".join(stream[:16]))
print("tsm share:", stream.count("tsm") / len(stream))

# Weights can also be left out entirely, in which case each component is
# weighed by its own example count — "proportional to dataset size".
auto = MixtureSpec(components=(
    MixtureComponent(name="tsm", path=workdir / "tsm.jsonl"),
    MixtureComponent(name="ssm", path=workdir / "ssm.jsonl"),
))
stream = [example.sent_id.split(":")[0] for example in mix(auto)]
print("auto:     ", " ".join(stream[:8]), "... equal sizes alternate")
