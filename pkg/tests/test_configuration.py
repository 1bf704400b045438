import pytest

from rulerunner.common.evaluation_mode import EvaluationMode
from rulerunner.common.exceptions import LoadConfigurationError
from rulerunner.common.lookup_table import LookupTable
from rulerunner.configuration import Configuration

TEXT = """
; monitor defaults
Mode = singlepass
color = no
cells = 1e3, 1e4,1e5
reps = 3
density = 0.3
broken = 1e3,,x
 = ignored
no separator here
"""


@pytest.fixture
def config():
    c = Configuration()
    c.load_from_text(TEXT)
    return c


class TestConfiguration:

    def test_keys(self, config):
        assert config.get_count() == 6
        assert [config.read_key(i) for i in range(config.get_count())] == [
            "Mode", "color", "cells", "reps", "density", "broken"]
        assert config.contains("MODE")

    def test_typed_values(self, config):
        assert config.read_mode("mode", EvaluationMode.FIXPOINT) is EvaluationMode.SINGLE_PASS
        assert config.read_boolean("color", True) is False
        assert config.read_integer_list("cells", []) == [1000, 10000, 100000]
        assert config.read_integer("reps", 1) == 3
        assert config.read_float("density", 0.5) == pytest.approx(0.3)

    def test_defaults(self, config):
        assert config.read_integer_list("broken", [7]) == [7]
        assert config.read_integer("density", 4) == 4
        assert config.read_string("missing", None) is None
        assert config.read_boolean("missing", True) is True

    def test_load_from_file(self, tmp_path):
        path = tmp_path / "rr.cfg"
        path.write_text("\ufeffseed = 12\n", encoding="utf-8")
        config = Configuration()
        config.load_from_file(str(path))
        assert config.read_integer("seed", 0) == 12

    def test_missing_file(self, tmp_path):
        with pytest.raises(LoadConfigurationError) as info:
            Configuration().load_from_file(str(tmp_path / "missing.cfg"))
        assert info.value.get_filename().endswith("missing.cfg")

    def test_type_checks(self):
        with pytest.raises(TypeError):
            Configuration().load_from_file(42)
        with pytest.raises(TypeError):
            Configuration().load_from_text(None)


class TestLookupTable:

    @pytest.mark.parametrize("text,expected", [("42", 42), (" 1e6 ", 1000000), ("2.0", 2), ("-1", None),
                                               ("1.5", None), ("x", None)])
    def test_to_integer(self, text, expected):
        assert LookupTable.to_integer(text) == expected

    def test_add_does_not_overwrite(self):
        table = LookupTable()
        table.add("Key", "1")
        table.add("key", "2")
        assert table.get_string_value("KEY", None) == "1"
        table.put("key", "3")
        assert table.get_integer_value("key", 0) == 3
        table.remove("KEY")
        assert not table.contains("key")

    def test_rejects_non_strings(self):
        with pytest.raises(TypeError):
            LookupTable().put(1, "a")
        with pytest.raises(TypeError):
            LookupTable().put("a", 1)

    def test_unknown_mode(self):
        table = LookupTable()
        table.put("mode", "turbo")
        assert table.get_mode_value("mode", EvaluationMode.FIXPOINT) is EvaluationMode.FIXPOINT
        with pytest.raises(ValueError):
            EvaluationMode.parse("turbo")
