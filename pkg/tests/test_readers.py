import json

import pytest

from sbprecon import default_settings
from sbprecon.exceptions import ConfigError, SettingDoesNotExist
from sbprecon.readers import DefaultReader, JsonReader


def test_default_reader():
    reader = DefaultReader()
    assert reader.default() == default_settings.PRECONDITIONER_DEFAULT
    assert reader.get("N_OUTER") == default_settings.N_OUTER
    assert reader.read("circulant") == {"SINGULAR_TOLERANCE": 1e-14}
    assert reader.klass("jacobi") == "sbprecon.preconditioners.JacobiPreconditioner"


def test_default_reader_unknown_names():
    reader = DefaultReader()
    with pytest.raises(SettingDoesNotExist):
        reader.get("NOT_A_SETTING")
    with pytest.raises(SettingDoesNotExist):
        reader.read("multigrid")
    with pytest.raises(SettingDoesNotExist):
        reader.klass("multigrid")


def test_json_reader_aliases_and_fallback():
    reader = JsonReader(values={"outer": 5, "eps": 1e-6, "keep-coils": 6, "set": 2, "size": None})
    assert reader.get("N_OUTER") == 5
    assert reader.get("EPSILON") == 1e-6
    assert reader.get("KEEP_COILS") == 6
    assert reader.get("REGULARIZATION_SET") == 2
    assert reader.get("SIZE") == default_settings.SIZE


def test_json_reader_file_then_values(tmp_path):
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"precond": "none", "inner": 3, "out": "results"}))
    reader = JsonReader(path, {"inner": 2})
    assert reader.default() == "none"
    assert reader.get("N_INNER") == 2
    assert reader.get("OUT_DIR") == "results"


@pytest.mark.parametrize("content", ["{not json", "[1, 2]"])
def test_json_reader_bad_file(tmp_path, content):
    path = tmp_path / "run.json"
    path.write_text(content)
    with pytest.raises(ConfigError):
        JsonReader(path)


def test_json_reader_missing_file(tmp_path):
    with pytest.raises(ConfigError):
        JsonReader(tmp_path / "missing.json")
