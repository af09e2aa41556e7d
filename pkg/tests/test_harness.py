import textwrap
from fractions import Fraction

import pytest

from fflab.errors import ConfigError, VerificationFailure
from fflab.harness import (TASKS, _admissible_etas, _TASK_BUILDERS,
                           build_problem, load_config, run_task)
from fflab.reporting import ReportRecord, flatten_records

BASE = """
    [field]
    p = 5

    [problem]
    d = 3
    n = 2
    e = 1

    [task]
    name = count-cone
"""


def write_cfg(tmp_path, text, name="run.cfg"):
    path = tmp_path / name
    path.write_text(textwrap.dedent(text))
    return str(path)


def test_minimal_config_defaults(tmp_path):
    cfg = load_config(write_cfg(tmp_path, BASE))
    assert (cfg.p, cfg.f, cfg.d, cfg.n, cfg.e) == (5, 1, 3, 2, 1)
    assert cfg.task == "count-cone"
    assert cfg.budget == 10 ** 9
    assert cfg.workers == 1 and cfg.seed == 0
    assert cfg.fmt == "csv" and cfg.out_dir == "out"


def test_cli_overrides_win(tmp_path):
    cfg = load_config(write_cfg(tmp_path, BASE), workers=4,
                      out_dir="elsewhere", fmt="jsonl")
    assert cfg.workers == 4
    assert cfg.out_dir == "elsewhere"
    assert cfg.fmt == "jsonl"


@pytest.mark.parametrize("mangle,needle", [
    (lambda s: s.replace("p = 5", "p = 3"), "must exceed d"),
    (lambda s: s.replace("p = 5", ""), "missing required key 'p'"),
    (lambda s: s.replace("[field]", "[fields]"), "unknown section"),
    (lambda s: s.replace("n = 2", "n = 2\nstyle = fast"), "unknown key"),
    (lambda s: s.replace("count-cone", "count-everything"), "unknown task"),
    (lambda s: s + "    method = auto\n    zeta = 3\n", "not a parameter"),
    (lambda s: s.replace("e = 1", "e = one"), "expected an integer"),
    (lambda s: s.replace("e = 1", "e = 0"), "must be >= 1"),
])
def test_load_rejects_bad_configs(tmp_path, mangle, needle):
    with pytest.raises(ConfigError) as err:
        load_config(write_cfg(tmp_path, mangle(BASE)))
    assert needle in str(err.value)


def test_task_argument_must_match_config_name(tmp_path):
    path = write_cfg(tmp_path, BASE)
    with pytest.raises(ConfigError) as err:
        load_config(path, task="major-arc")
    assert "command line" in str(err.value)
    assert load_config(path, task="count-cone").task == "count-cone"


def test_task_argument_fills_missing_name(tmp_path):
    text = BASE.replace("[task]\n    name = count-cone", "")
    path = write_cfg(tmp_path, text)
    with pytest.raises(ConfigError):
        load_config(path)
    assert load_config(path, task="major-arc").task == "major-arc"


def test_missing_file_rejected(tmp_path):
    with pytest.raises(ConfigError) as err:
        load_config(str(tmp_path / "nope.cfg"))
    assert "cannot read" in str(err.value)


def test_form_file_resolved_relative_to_config(tmp_path):
    (tmp_path / "cubic.form").write_text("3 0 : 1\n0 3 : 2\n")
    cfg = load_config(write_cfg(
        tmp_path, BASE.replace("e = 1", "e = 1\n    form = cubic.form")))
    assert cfg.form_path == str(tmp_path / "cubic.form")
    prob = build_problem(cfg)
    assert prob.form.n == 2


def test_absent_form_file_rejected_at_load(tmp_path):
    with pytest.raises(ConfigError) as err:
        load_config(write_cfg(
            tmp_path, BASE.replace("e = 1", "e = 1\n    form = ghost.form")))
    assert "file not found" in str(err.value)


def test_malformed_form_file_names_the_line(tmp_path):
    (tmp_path / "bad.form").write_text("3 0 : 1\n1 1 : 2\n")
    cfg = load_config(write_cfg(
        tmp_path, BASE.replace("e = 1", "e = 1\n    form = bad.form")))
    with pytest.raises(ConfigError) as err:
        build_problem(cfg)
    msg = str(err.value)
    assert "bad.form:2" in msg and "degree" in msg


def test_extension_field_config(tmp_path):
    text = BASE.replace("p = 5", "p = 5\n    f = 2")
    cfg = load_config(write_cfg(tmp_path, text))
    prob = build_problem(cfg)
    assert prob.spec.q == 25


def test_bad_modulus_rejected(tmp_path):
    text = BASE.replace("p = 5", "p = 5\n    f = 2\n    modulus = 1,x")
    with pytest.raises(ConfigError) as err:
        load_config(write_cfg(tmp_path, text))
    assert "modulus" in str(err.value)


def test_param_parsers(tmp_path):
    text = BASE.replace("name = count-cone",
                        "name = count-cone\n    ell = 2\n    method = auto")
    cfg = load_config(write_cfg(tmp_path, text))
    assert cfg.param_int("ell") == 2
    assert cfg.param_int("missing", default=7) == 7
    assert cfg.param_fraction("missing", default=Fraction(1, 2)) == Fraction(1, 2)
    assert cfg.param_choice("method", ("auto", "enumerate")) == "auto"
    with pytest.raises(ConfigError):
        cfg.param_int("ell", minimum=3)


def test_admissible_etas():
    assert _admissible_etas(1) == [Fraction(0), Fraction(1)]
    assert _admissible_etas(3) == [Fraction(0), Fraction(1, 2), Fraction(1)]
    assert _admissible_etas(2) == [Fraction(1, 3), Fraction(1)]


def test_every_task_has_a_builder():
    assert set(TASKS) == set(_TASK_BUILDERS)


def test_run_task_pass_status(tmp_path):
    result = run_task(load_config(write_cfg(tmp_path, BASE)))
    assert result.status == "pass"
    assert result.exit_code == 0
    [record] = result.records
    assert record.outputs["cone"] == 24
    assert record.outputs["divisible"] is True


def test_run_task_budget_status(tmp_path):
    text = BASE.replace("name = count-cone", "name = dissect-verify") + \
        "\n    [run]\n    budget = 10\n"
    result = run_task(load_config(write_cfg(tmp_path, text)))
    assert result.status == "budget-exhausted"
    assert result.exit_code == 3
    [record] = result.records
    assert record.outputs["status"] == "budget-exhausted"
    assert record.outputs["needed"] > 10


def test_run_task_fail_status(tmp_path, monkeypatch):
    def failing(config):
        return [ReportRecord(task=config.task, outputs={"holds": False},
                             passed=False)]
    monkeypatch.setitem(_TASK_BUILDERS, "count-cone", failing)
    result = run_task(load_config(write_cfg(tmp_path, BASE)))
    assert result.status == "fail"
    assert result.exit_code == 1


def test_run_task_wraps_verification_failure(tmp_path, monkeypatch):
    def raising(config):
        raise VerificationFailure("identity broke")
    monkeypatch.setitem(_TASK_BUILDERS, "count-cone", raising)
    result = run_task(load_config(write_cfg(tmp_path, BASE)))
    assert result.status == "fail"
    assert "identity broke" in result.records[0].outputs["detail"]


def test_weyl_workers_do_not_change_rows(tmp_path):
    text = BASE.replace("name = count-cone",
                        "name = weyl-check\n    limit = 30")
    path = write_cfg(tmp_path, text)
    rows_1 = flatten_records(run_task(load_config(path, workers=1)).records)
    rows_2 = flatten_records(run_task(load_config(path, workers=2)).records)
    assert rows_1 == rows_2
