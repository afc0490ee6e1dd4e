# Copyright 2024 Lauricella Matrix Functions.
# License LGPL-3 or later (http://www.gnu.org/licenses/lgpl).

import json
from io import StringIO

import numpy as np
from pytest import fixture, mark, raises

from lauricella.cli import main
from lauricella.exceptions import InputError
from lauricella.models.lauricella_kind import LauricellaKind, ParameterSet
from lauricella.models.matrix_core import ComplexMatrix
from lauricella.tools import config
from lauricella.tools.jsonio import ParameterFile, parse_complex, parse_point

from .oracles import scalar_params


def _run(*argv):
    out = StringIO()
    code = main(list(argv), stdout=out)
    return code, out.getvalue()


def _write_params(path, params):
    path.write_text(ParameterFile.from_parameters(params).model_dump_json())
    return str(path)


@fixture
def fa_params(tmp_path):
    return _write_params(tmp_path / "fa.json", scalar_params(LauricellaKind("GA")))


def test_list_json():
    code, out = _run("list", "--json")
    assert code == 0
    entries = json.loads(out)
    assert len(entries) >= 120
    assert {"id", "kind", "equation"} <= set(entries[0])


def test_list_table_with_filter():
    code, out = _run("list", "--filter", "FA.A.raise.*")
    lines = out.splitlines()
    assert code == 0
    assert lines[0].split() == ["id", "kind", "equation", "hypotheses", "typo"]
    assert any(line.startswith("FA.A.raise.unit ") for line in lines[1:])


def test_eval_at_origin(tmp_path):
    kind = LauricellaKind("GA", arity=2)
    path = _write_params(tmp_path / "p.json", scalar_params(kind))
    code, out = _run("eval", "--kind", "GA", "--params", path, "--x", "0,0")
    payload = json.loads(out)
    assert code == 0
    assert payload["value"]["entries"] == [[1.0, 0.0]]
    assert payload["converged"] is True
    assert payload["kind"] == "GA(k=2)"


def test_eval_matrix_parameters(tmp_path):
    kind = LauricellaKind("F4")
    named = {
        slot.name: ComplexMatrix(np.diag([1.3, 2.2 + 0.3j])) for slot in kind.slots
    }
    path = _write_params(tmp_path / "f4.json", ParameterSet.from_named(kind, named))
    code, out = _run(
        "eval", "--kind", "F4", "--params", path, "--x", "0.02,0.01i,-0.03"
    )
    assert code == 0
    assert json.loads(out)["value"]["dim"] == 2


def test_eval_outside_guard(fa_params, capsys):
    code, _out = _run(
        "eval", "--kind", "GA", "--params", fa_params, "--x", "0.3,0.2,0.1"
    )
    assert code == 3
    assert "guard region" in capsys.readouterr().err


def test_eval_with_missing_group(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"a": [{"dim": 1, "entries": [[1.0, 0.0]]}], "b": []}))
    code, _out = _run("eval", "--kind", "GA", "--params", str(path), "--x", "0.1")
    assert code == 2
    assert "c: Field required" in capsys.readouterr().err


def test_eval_with_empty_groups(tmp_path, capsys):
    path = tmp_path / "empty.json"
    path.write_text(json.dumps({"a": [], "b": [], "c": []}))
    code, _out = _run("eval", "--kind", "GA", "--params", str(path), "--x", "0.1,0.1")
    err = capsys.readouterr().err
    assert code == 2
    assert "a: List should have at least 1 item" in err
    assert "Traceback" not in err


@mark.parametrize(
    "content, message",
    [("{not json", "not valid JSON"), (None, "Cannot read")],
)
def test_unreadable_parameter_file(tmp_path, capsys, content, message):
    path = tmp_path / "params.json"
    if content is not None:
        path.write_text(content)
    code, _out = _run("eval", "--kind", "GA", "--params", str(path), "--x", "0.1")
    assert code == 2
    assert message in capsys.readouterr().err


def test_usage_errors(fa_params):
    assert _run("frobnicate")[0] == 2
    assert _run("eval", "--kind", "GA")[0] == 2
    assert _run("eval", "--kind", "GZ", "--params", fa_params, "--x", "0.1")[0] == 2
    assert _run("eval", "--kind", "GA", "--params", fa_params, "--x", "0.1,zz")[0] == 2


def test_validate_zero_shift(fa_params):
    code, out = _run(
        "validate", "--id", "FA.A.raise.unit", "--params", fa_params,
        "--x", "0.04,-0.03,0.02+0.02i", "--n", "0",
    )
    payload = json.loads(out)
    assert code == 0
    assert payload["residual"] < 1e-15
    assert payload["pass"] is True


def test_validate_generic_index(fa_params):
    code, out = _run(
        "validate", "--id", "FA.Bi.raise.binomial", "--params", fa_params,
        "--x", "0.04,-0.03,0.02+0.02i", "--n", "2", "--index", "3",
    )
    payload = json.loads(out)
    assert code == 0
    assert payload["index"] == 3


def test_validate_printed_typo_fails(tmp_path):
    path = _write_params(tmp_path / "f12.json", scalar_params(LauricellaKind("F12")))
    argv = [
        "validate", "--id", "F12.A2.raise.unit", "--params", path,
        "--x", "0.04,-0.03,0.02+0.02i", "--n", "1",
    ]
    assert _run(*argv)[0] == 0
    code, out = _run(*argv, "--variant", "printed")
    assert code == 1
    assert json.loads(out)["pass"] is False


def test_validate_hypothesis_violation(tmp_path, capsys):
    kind = LauricellaKind("GA")
    named = {slot.name: ComplexMatrix(np.diag([1.1, 0.7])) for slot in kind.slots}
    named["A"] = ComplexMatrix(np.array([[1.0, 1.0], [0.0, 1.5]]))
    path = _write_params(tmp_path / "nc.json", ParameterSet.from_named(kind, named))
    code, _out = _run(
        "validate", "--id", "FA.A.raise.unit", "--params", path, "--x", "0.1,0.1,0.1"
    )
    assert code == 3
    assert "A B_1 = B_1 A" in capsys.readouterr().err


def test_validate_unknown_id(fa_params):
    code, _out = _run(
        "validate", "--id", "FA.nope", "--params", fa_params, "--x", "0.1,0.1,0.1"
    )
    assert code == 2


@mark.parametrize(
    "token, value",
    [("0.1", 0.1), ("-0.2i", -0.2j), ("0.1+0.2i", 0.1 + 0.2j), (" 1e-3 ", 0.001)],
)
def test_parse_complex(token, value):
    assert parse_complex(token) == value


def test_parse_point_refuses_empty_coordinate():
    with raises(InputError):
        parse_point("0.1,,0.2")


def test_default_seed(monkeypatch):
    monkeypatch.delenv(config.SEED_VARIABLE, raising=False)
    assert config.default_seed() == config.DEFAULT_SEED
    monkeypatch.setenv(config.SEED_VARIABLE, "17")
    assert config.default_seed() == 17
    monkeypatch.setenv(config.SEED_VARIABLE, "seventeen")
    with raises(InputError, match=config.SEED_VARIABLE):
        config.default_seed()
