import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from psp62.constants import ConstantsError, default_path, format_rational, load, parse, parse_rational


def raw_text():
    return default_path().read_text(encoding="utf-8")


def test_roundtrip(consts):
    text = raw_text()
    assert consts.dumps() == text
    assert parse(consts.dumps()).dumps() == text


def test_loaded_values(consts):
    assert consts.x.degree == consts.z.degree == 72
    assert consts.belyi_scale == Fraction(-1, 2 ** 4 * 3 ** 8)
    assert consts.over_one_multiplier == 104976
    assert consts.composition == "left-first"
    assert consts.delta.prime_powers == {2: 732, 3: 168}
    assert consts.belyi_p.expand_uni().degree == 72
    assert consts.belyi_q.expand_uni().degree == 68
    assert consts.family_p.expand_bi().degree == 36


def test_x_starts_as_printed(consts):
    assert consts.raw["triple"]["x"].startswith("(1, 37, 16, 70, 23, 59)")


@given(st.fractions())
def test_rational_roundtrip(c):
    assert parse_rational(format_rational(c)) == c


@pytest.mark.parametrize("bad", ["2/4", "1/-2", "0.5", "1/1", "", "--1", 3])
def test_rational_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def corrupt(path, mutate):
    d = json.loads(raw_text())
    mutate(d)
    path.write_text(json.dumps(d, indent=2), encoding="utf-8")
    return path


def test_corrupt_field_names_line_and_field(tmp_path):
    p = corrupt(tmp_path / "c.json", lambda d: d["belyi"].__setitem__("scale", "-2/4"))
    with pytest.raises(ConstantsError) as exc:
        load(p)
    assert exc.value.field == "belyi.scale"
    line = p.read_text().splitlines()[exc.value.line - 1]
    assert '"scale"' in line


def test_corrupt_cycle_notation(tmp_path):
    p = corrupt(tmp_path / "c.json", lambda d: d["triple"].__setitem__("x", "(1, 2, 2)"))
    with pytest.raises(ConstantsError, match="triple.x"):
        load(p)


def test_missing_field(tmp_path):
    p = corrupt(tmp_path / "c.json", lambda d: d.pop("delta"))
    with pytest.raises(ConstantsError, match="field delta"):
        load(p)


def test_bad_json_reports_line(tmp_path):
    p = tmp_path / "c.json"
    p.write_text('{\n  "format": 1,\n  oops\n}\n')
    with pytest.raises(ConstantsError) as exc:
        load(p)
    assert exc.value.line == 3


def test_unsupported_convention(tmp_path):
    p = corrupt(tmp_path / "c.json", lambda d: d["conventions"].__setitem__("composition", "right-first"))
    with pytest.raises(ConstantsError, match="composition"):
        load(p)
