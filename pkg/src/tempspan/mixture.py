"""Deterministic proportional interleaving of example files.

Components are jsonl files of masked examples; each gets a positive
rational weight (default: its own line count, so "proportional to dataset
size").  Scheduling is smooth weighted round-robin: every component keeps
a running credit, each step adds its weight, the largest credit emits next
and pays the total weight back.  The schedule is a pure function of the
weights, so for every prefix of length n each component's share is within
one item of ``n * w_i / sum(w)`` — an exactly testable bound, with no
sampling involved.

Two stop modes: ``exact`` ends the stream the first time the scheduler
turns to an exhausted component, so proportions hold to the last item;
``exhaust`` rewinds finished components cyclically and ends once every
component has been emitted in full at least once.

The seed only matters when per-component shuffling is requested; the
interleaving itself never uses randomness.
"""

from __future__ import annotations

import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterator

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .errors import MixtureError
from .masking import MaskedExample


@dataclass(frozen=True)
class MixtureComponent:
    name: str
    path: Path
    weight: Fraction | None = None  # None -> weigh by example count


@dataclass(frozen=True)
class MixtureSpec:
    components: tuple[MixtureComponent, ...]
    seed: int = 0
    mode: str = "exact"            # "exact" | "exhaust"
    dedup_inputs: bool = False
    shuffle: bool = False

    def __post_init__(self) -> None:
        if not self.components:
            raise MixtureError("mixture needs at least one component")
        names = [c.name for c in self.components]
        if len(set(names)) != len(names):
            raise MixtureError(f"component names must be unique, got {names}")
        for comp in self.components:
            if comp.weight is not None and comp.weight <= 0:
                raise MixtureError(f"component {comp.name!r}: weight must be positive")
        if self.mode not in ("exact", "exhaust"):
            raise MixtureError(f"unknown mixture mode {self.mode!r}")


def _as_fraction(value: object, where: str) -> Fraction:
    try:
        if isinstance(value, float):
            # Go through the decimal literal so 0.1 means 1/10, not the
            # binary float it parses to.
            return Fraction(repr(value))
        return Fraction(value)  # type: ignore[arg-type]
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise MixtureError(f"{where}: bad weight {value!r}") from exc


def load_mixture_spec(path: str | Path) -> MixtureSpec:
    """Read a mixture spec from TOML ([[component]] tables) or JSON."""
    path = Path(path)
    if not path.is_file():
        raise MixtureError(f"cannot read mixture spec: {path}")
    if path.suffix.lower() == ".toml":
        with path.open("rb") as fh:
            data = tomllib.load(fh)
    else:
        data = json.loads(path.read_text(encoding="utf-8"))
    if not isinstance(data, dict):
        raise MixtureError(f"{path}: expected a table/object at top level")
    raw = data.get("component", data.get("components"))
    if not isinstance(raw, list) or not raw:
        raise MixtureError(f"{path}: expected a non-empty [[component]] list")
    components = []
    for i, entry in enumerate(raw):
        try:
            name = entry["name"]
            comp_path = Path(entry["path"])
        except (KeyError, TypeError) as exc:
            raise MixtureError(f"{path}: component #{i} needs name and path") from exc
        if not comp_path.is_absolute():
            comp_path = path.parent / comp_path
        weight = entry.get("weight")
        components.append(MixtureComponent(
            name=name,
            path=comp_path,
            weight=None if weight is None else _as_fraction(weight, f"{path} #{i}"),
        ))
    return MixtureSpec(
        components=tuple(components),
        seed=int(data.get("seed", 0)),
        mode=data.get("mode", "exact"),
        dedup_inputs=bool(data.get("dedup_inputs", False)),
        shuffle=bool(data.get("shuffle", False)),
    )


def _count_lines(path: Path) -> int:
    n = 0
    with path.open("r", encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                n += 1
    return n


class _Reader:
    """One component's example stream, optionally shuffled, optionally cyclic."""

    def __init__(self, comp: MixtureComponent, spec: MixtureSpec):
        self.name = comp.name
        self.path = comp.path
        self._lines: list[str] | None = None
        try:
            if spec.shuffle:
                self._lines = self._load_lines()
                rng = random.Random(f"{spec.seed}|{self.name}")
                rng.shuffle(self._lines)
                self.size = len(self._lines)
            else:
                self.size = _count_lines(self.path)
        except OSError as exc:
            raise MixtureError(
                f"component {self.name!r}: cannot read {self.path}: {exc}"
            ) from exc
        if self.size == 0:
            raise MixtureError(f"component {self.name!r} is empty: {self.path}")
        self.dispensed = 0
        self._iter = self._fresh_iter()

    @property
    def completed_pass(self) -> bool:
        return self.dispensed >= self.size

    def _load_lines(self) -> list[str]:
        with self.path.open("r", encoding="utf-8") as fh:
            return [ln.rstrip("\n") for ln in fh if ln.strip()]

    def _fresh_iter(self) -> Iterator[str]:
        if self._lines is not None:
            yield from self._lines
        else:
            with self.path.open("r", encoding="utf-8") as fh:
                for line in fh:
                    line = line.rstrip("\n")
                    if line.strip():
                        yield line

    def next_example(self, cyclic: bool) -> "MaskedExample | None":
        """Next record; None once exhausted in non-cyclic mode."""
        line = next(self._iter, None)
        if line is None:
            if not cyclic:
                return None
            self._iter = self._fresh_iter()
            line = next(self._iter, None)
            if line is None:
                return None
        self.dispensed += 1
        try:
            return MaskedExample.from_record(json.loads(line))
        except (json.JSONDecodeError, KeyError, ValueError) as exc:
            raise MixtureError(
                f"component {self.name!r}: bad example record in {self.path}: {exc!r}"
            ) from exc


def mix(spec: MixtureSpec) -> Iterator[MaskedExample]:
    """Yield the interleaved example stream defined by ``spec``.

    Auto-weights (weight omitted) resolve to the component's example count
    before streaming starts.  Without dedup, every prefix of the output
    holds each component's share within one item of its weight fraction;
    dedup removes repeated (inputs, targets) pairs after scheduling, so it
    trades that bound away.
    """
    readers = [_Reader(comp, spec) for comp in spec.components]
    weights = [
        comp.weight if comp.weight is not None else Fraction(reader.size)
        for comp, reader in zip(spec.components, readers)
    ]
    total = sum(weights)
    credit = [Fraction(0)] * len(readers)
    cyclic = spec.mode == "exhaust"
    seen: set[tuple[str, str]] | None = set() if spec.dedup_inputs else None

    while True:
        for i, w in enumerate(weights):
            credit[i] += w
        pick = max(range(len(readers)), key=lambda i: (credit[i], -i))
        credit[pick] -= total
        example = readers[pick].next_example(cyclic)
        if example is None:
            return
        if seen is not None:
            key = (example.inputs, example.targets)
            if key in seen:
                if cyclic and all(r.completed_pass for r in readers):
                    return
                continue
            seen.add(key)
        yield example
        if cyclic and all(r.completed_pass for r in readers):
            return
