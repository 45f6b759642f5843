import json

from gmpy2 import mpq

from diagchi.exactcore import QQ, RatFun
from diagchi.oreops import DiffOp, catalog


def sample_op():
    return DiffOp([
        RatFun.from_ints(QQ, [3, -14], [2]),
        RatFun.from_ints(QQ, [0, 5, 1]),
        RatFun.from_ints(QQ, [7]),
    ])


def test_single_file_round_trip(tmp_path):
    path = tmp_path / "op.json"
    op = sample_op()
    catalog.dump_operator(op, "sample", path)
    back = catalog.load_operator_file(path)
    assert back.to_dict(name="sample") == op.to_dict(name="sample")
    assert back.equals_up_to_left_factor(op)


def test_store_override_via_environment(tmp_path, monkeypatch):
    op = sample_op()
    store = {"operators": [op.to_dict(name="demo")]}
    (tmp_path / "operators.json").write_text(json.dumps(store))
    (tmp_path / "fixtures.json").write_text(json.dumps({"answer": [4, 2]}))
    monkeypatch.setenv("DIAGCHI_DATA", str(tmp_path))
    assert catalog.operator_names() == ["demo"]
    got = catalog.load_operator("demo")
    assert got.to_dict(name="demo") == op.to_dict(name="demo")
    assert catalog.fixture("answer") == [4, 2]
    try:
        catalog.fixture("missing")
    except KeyError as e:
        assert "missing" in str(e)
    else:
        raise AssertionError("expected KeyError")


def test_bundled_store_loads():
    names = catalog.operator_names()
    # the bundled store ships the whole operator family used by the tests
    for name in names:
        op = catalog.load_operator(name)
        assert op.order >= 1
