import textwrap

import pytest

from walker4 import report
from walker4.classify import SamplePlan, check_ricci_flat
from walker4.config import ConfigError, load_config, parse_config


def write(tmp_path, text):
    p = tmp_path / "metric.toml"
    p.write_text(textwrap.dedent(text))
    return p


def test_explicit_metric_config(tmp_path):
    cfg = load_config(
        write(
            tmp_path,
            """
            [metric]
            name = "demo"

            [metric.a]
            poly = [[2, 0, 1.0], [0, 1, 0.5]]

            [metric.b]
            exp = [1.0, 2.0, 1.0]

            [metric.c]
            constant = 0.0

            [plan]
            count = 8
            seed = 5
            box = [-2.0, 2.0]
            tolerance = 1e-7
            """,
        )
    )
    assert cfg.metric.name == "demo"
    assert cfg.metric.a.kind == "polynomial"
    assert cfg.metric.b.kind == "exponential"
    assert cfg.plan == SamplePlan(count=8, seed=5, box=(-2.0, 2.0), tolerance=1e-7)


def test_family_config(tmp_path):
    cfg = load_config(
        write(
            tmp_path,
            """
            [metric]
            family = "exponential"

            [metric.params]
            r1 = 1.0
            r2 = -3.0
            """,
        )
    )
    assert check_ricci_flat(cfg.metric, SamplePlan(count=8, seed=1)).verdict == "holds"


def test_einstein_family_config(tmp_path):
    cfg = load_config(
        write(
            tmp_path,
            """
            [metric]
            family = "einstein"

            [metric.params]
            K = 1.0
            B = [[0, 2.0]]
            D = [[0, -1.0]]
            """,
        )
    )
    assert cfg.metric.name == "einstein-family"


def test_missing_field_names_the_field(tmp_path):
    path = write(
        tmp_path,
        """
        [metric]
        [metric.a]
        poly = [[2, 0, 1.0]]
        [metric.c]
        constant = 0.0
        """,
    )
    with pytest.raises(ConfigError, match="'b'"):
        load_config(path)


def test_family_and_explicit_are_mutually_exclusive():
    with pytest.raises(ConfigError, match="not both"):
        parse_config(
            {"metric": {"family": "exponential", "a": {"constant": 0.0}}}
        )


def test_violating_family_params_become_config_errors():
    with pytest.raises(ConfigError, match="EN-JM\\+IP"):
        parse_config(
            {"metric": {"family": "conformally-flat", "params": {"E": 1.0, "N": 1.0}}}
        )


def test_bad_exponent_rejected():
    with pytest.raises(ConfigError, match="exponents"):
        parse_config({"metric": {"a": {"poly": [[-1, 0, 1.0]]}, "b": {"constant": 0.0}, "c": {"constant": 0.0}}})


def test_bad_plan_rejected():
    base = {"a": {"constant": 0.0}, "b": {"constant": 0.0}, "c": {"constant": 0.0}}
    with pytest.raises(ConfigError, match="count"):
        parse_config({"metric": base, "plan": {"count": 0}})


def test_unknown_family_rejected():
    with pytest.raises(ConfigError, match="unknown family"):
        parse_config({"metric": {"family": "mystery"}})


def test_report_round_trip():
    tree = {
        "format": "walker4.report/1",
        "scalar": 4.0,
        "tiny": 1.2345678912345678e-17,
        "negative_zero": -0.0,
        "count": 32,
        "flag": True,
        "label": "holds",
        "vector": [1.0, -2.5, 3.0],
        "nested": {"inner": {"value": 0.1}},
    }
    text = report.dumps(tree)
    parsed = report.loads(text)
    assert parsed == report.flatten(tree)
    # byte-determinism of serialization
    assert report.dumps(tree) == text


def test_report_rejects_ambiguous_strings():
    with pytest.raises(ValueError):
        report.dumps({"bad": "a = b"})


def test_report_loads_skips_comments_and_blanks():
    parsed = report.loads("# comment\n\nkey = 1\n")
    assert parsed == {"key": 1}


def test_report_loads_rejects_garbage():
    with pytest.raises(ValueError, match="line 1"):
        report.loads("not a key value line")
