from fractions import Fraction

import pytest

from tempspan import (MixtureComponent, MixtureError, MixtureSpec,
                      load_mixture_spec, mix)
from conftest import make_example_record, write_examples


def component_file(tmp_path, name, count, strategy="tsm"):
    return write_examples(
        tmp_path / f"{name}.jsonl",
        [make_example_record(i, name, strategy) for i in range(count)])


def spec_for(tmp_path, sizes, weights=None, **kwargs):
    components = []
    for idx, (name, size) in enumerate(sizes.items()):
        path = component_file(tmp_path, name, size)
        weight = None
        if weights is not None:
            weight = Fraction(weights[idx])
        components.append(MixtureComponent(name=name, path=path, weight=weight))
    return MixtureSpec(components=tuple(components), **kwargs)


def origin(example):
    return example.sent_id.split(":")[0]


class TestProportionality:
    def test_equal_weights_alternate(self, tmp_path):
        spec = spec_for(tmp_path, {"a": 100, "b": 100})
        out = [origin(e) for e in mix(spec)]
        assert out[:8] == ["a", "b", "a", "b", "a", "b", "a", "b"]
        for n in range(1, len(out) + 1):
            prefix = out[:n]
            assert abs(prefix.count("a") - n / 2) <= 1
            assert abs(prefix.count("b") - n / 2) <= 1

    def test_three_to_one_prefix_bound_over_40(self, tmp_path):
        spec = spec_for(tmp_path, {"a": 60, "b": 60}, weights=[3, 1])
        out = [origin(e) for e in mix(spec)]
        assert len(out) >= 40
        for n in range(1, 41):
            prefix = out[:n]
            assert abs(prefix.count("a") - 3 * n / 4) <= 1, f"prefix {n}"
            assert abs(prefix.count("b") - n / 4) <= 1, f"prefix {n}"

    def test_three_to_one_window_of_four(self, tmp_path):
        spec = spec_for(tmp_path, {"a": 60, "b": 60}, weights=[3, 1])
        out = [origin(e) for e in mix(spec)]
        for w in range(0, 40, 4):
            window = out[w:w + 4]
            assert window.count("a") == 3 and window.count("b") == 1

    def test_fractional_weights(self, tmp_path):
        # 1.5 : 0.5 is the same schedule as 3 : 1
        spec = spec_for(tmp_path, {"a": 30, "b": 30}, weights=["3/2", "1/2"])
        out = [origin(e) for e in mix(spec)]
        assert out[:4].count("a") == 3

    def test_default_weights_are_dataset_sizes(self, tmp_path):
        # sizes 20 and 10 -> two a's per b
        spec = spec_for(tmp_path, {"a": 20, "b": 10})
        out = [origin(e) for e in mix(spec)]
        for n in range(1, len(out) + 1):
            assert abs(out[:n].count("a") - 2 * n / 3) <= 1


class TestModes:
    def test_exact_stops_at_first_exhaustion(self, tmp_path):
        spec = spec_for(tmp_path, {"a": 50, "b": 5}, weights=[1, 1],
                        mode="exact")
        out = [origin(e) for e in mix(spec)]
        # b runs dry after its 5th appearance; nothing repeats
        assert out.count("b") == 5
        assert len(out) <= 11

    def test_exhaust_conservation_equal_sizes(self, tmp_path):
        spec = spec_for(tmp_path, {"a": 12, "b": 12}, mode="exhaust")
        out = list(mix(spec))
        assert len(out) == 24
        assert sorted(e.example_id for e in out) == sorted(
            make_example_record(i, n)["example_id"]
            for n in ("a", "b") for i in range(12))

    def test_exhaust_repeats_shorter_component(self, tmp_path):
        spec = spec_for(tmp_path, {"a": 9, "b": 3}, weights=[1, 1],
                        mode="exhaust")
        out = [e for e in mix(spec)]
        ids_a = {e.example_id for e in out if origin(e) == "a"}
        assert len(ids_a) == 9  # every a dispensed at least once
        # b cycled: appearances exceed its size
        assert sum(1 for e in out if origin(e) == "b") >= 3

    def test_single_component_passthrough(self, tmp_path):
        spec = spec_for(tmp_path, {"solo": 17})
        out = list(mix(spec))
        assert [e.example_id for e in out] == [
            make_example_record(i, "solo")["example_id"] for i in range(17)]


class TestDeterminismAndFlags:
    def test_two_runs_identical(self, tmp_path):
        spec = spec_for(tmp_path, {"a": 40, "b": 25})
        first = [e.example_id for e in mix(spec)]
        second = [e.example_id for e in mix(spec)]
        assert first == second

    def test_shuffle_is_seeded(self, tmp_path):
        base = dict(sizes={"a": 30, "b": 30})
        s1 = spec_for(tmp_path, base["sizes"], seed=1, shuffle=True)
        s1b = spec_for(tmp_path, base["sizes"], seed=1, shuffle=True)
        s2 = spec_for(tmp_path, base["sizes"], seed=2, shuffle=True)
        run1 = [e.example_id for e in mix(s1)]
        run1b = [e.example_id for e in mix(s1b)]
        run2 = [e.example_id for e in mix(s2)]
        assert run1 == run1b
        assert run1 != run2

    def test_dedup_inputs(self, tmp_path):
        rec = make_example_record(0, "a")
        dup = dict(rec, example_id="a:0#tsm#0:4-copy")
        path = write_examples(tmp_path / "a.jsonl", [rec, dup])
        spec = MixtureSpec(components=(
            MixtureComponent(name="a", path=path, weight=None),),
            dedup_inputs=True)
        out = list(mix(spec))
        assert len(out) == 1


class TestValidation:
    def test_empty_component_file_named(self, tmp_path):
        empty = tmp_path / "empty.jsonl"
        empty.write_text("", encoding="utf-8")
        spec = MixtureSpec(components=(
            MixtureComponent(name="void", path=empty, weight=None),))
        with pytest.raises(MixtureError, match="void"):
            list(mix(spec))

    def test_no_components_rejected(self):
        with pytest.raises(MixtureError):
            MixtureSpec(components=())

    def test_duplicate_names_rejected(self, tmp_path):
        p = component_file(tmp_path, "a", 1)
        with pytest.raises(MixtureError):
            MixtureSpec(components=(
                MixtureComponent(name="a", path=p, weight=None),
                MixtureComponent(name="a", path=p, weight=None),
            ))

    def test_nonpositive_weight_rejected(self, tmp_path):
        p = component_file(tmp_path, "a", 1)
        with pytest.raises(MixtureError):
            MixtureSpec(components=(
                MixtureComponent(name="a", path=p, weight=Fraction(0)),))

    def test_unknown_mode_rejected(self, tmp_path):
        p = component_file(tmp_path, "a", 1)
        with pytest.raises(MixtureError):
            MixtureSpec(components=(
                MixtureComponent(name="a", path=p, weight=None),),
                mode="sideways")

    def test_missing_component_file_fatal(self, tmp_path):
        spec = MixtureSpec(components=(
            MixtureComponent(name="a", path=tmp_path / "gone.jsonl",
                             weight=None),))
        with pytest.raises(MixtureError):
            list(mix(spec))


class TestSpecFiles:
    def test_toml_round_trip(self, tmp_path):
        component_file(tmp_path, "a", 4)
        component_file(tmp_path, "b", 4)
        toml = tmp_path / "mixture.toml"
        toml.write_text(
            'seed = 3\nmode = "exhaust"\n'
            '[[component]]\nname = "a"\npath = "a.jsonl"\nweight = 3\n'
            '[[component]]\nname = "b"\npath = "b.jsonl"\nweight = 1\n',
            encoding="utf-8",
        )
        spec = load_mixture_spec(toml)
        assert spec.seed == 3
        assert spec.mode == "exhaust"
        assert [c.name for c in spec.components] == ["a", "b"]
        assert spec.components[0].weight == Fraction(3)
        # relative paths resolve against the spec file
        assert spec.components[0].path == tmp_path / "a.jsonl"

    def test_json_spec(self, tmp_path):
        component_file(tmp_path, "a", 2)
        js = tmp_path / "mixture.json"
        js.write_text(
            '{"components": [{"name": "a", "path": "a.jsonl"}]}',
            encoding="utf-8",
        )
        spec = load_mixture_spec(js)
        assert spec.components[0].weight is None

    def test_float_weight_decimal_semantics(self, tmp_path):
        component_file(tmp_path, "a", 2)
        toml = tmp_path / "m.toml"
        toml.write_text(
            '[[component]]\nname = "a"\npath = "a.jsonl"\nweight = 0.1\n',
            encoding="utf-8",
        )
        spec = load_mixture_spec(toml)
        assert spec.components[0].weight == Fraction(1, 10)
