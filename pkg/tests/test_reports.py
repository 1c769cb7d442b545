import json

from kfsusy.reports import CheckReport


def test_check_kinds():
    rep = CheckReport("demo")
    rep.expect_small("small", 1e-12, 1e-10)
    rep.expect_large("large", 0.5, 0.1)
    rep.expect_true("flag", False)
    assert not rep.passed
    assert [c.name for c in rep.failures()] == ["flag"]
    assert rep["large"].passed


def test_json_roundtrip_and_extend():
    a = CheckReport("a")
    a.expect_small("x", 0.0, 1.0)
    b = CheckReport("b")
    b.extend(a, prefix="a: ")
    assert b["a: x"].passed
    restored = CheckReport.from_dict(json.loads(json.dumps(b.to_dict())))
    assert restored == b
    assert "a: x" in b.format_table()
