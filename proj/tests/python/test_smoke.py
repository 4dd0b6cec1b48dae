import os
import pathlib
import random

import pytest

import sensbench as sb

DATA = pathlib.Path(os.environ.get("SENSBENCH_TEST_DATA", pathlib.Path(__file__).parents[1] / "data"))


def naive_sensitivity(f, n):
    # direct neighbor count over all inputs
    best = 0
    for x in range(1 << n):
        best = max(best, sum(f(x) != f(x ^ (1 << i)) for i in range(n)))
    return best


def test_or3_measures():
    d = sb.load((DATA / "or3.dnf").read_text())
    assert isinstance(d, sb.Dnf)
    m = sb.measures(d)
    assert (m["s"], m["s0"], m["s1"]) == (3, 3, 1)
    assert (m["bs"], m["bs0"], m["bs1"]) == (3, 3, 1)
    assert m["witness_bs"] == {"input": "000", "blocks": [[1], [2], [3]]}


def test_truth_table_round_trip():
    f = sb.load((DATA / "and2.tt").read_text())
    assert isinstance(f, sb.TruthTable)
    assert f.arity == 2 and f.hex == "8"
    assert f("11") and not f("10")
    assert sb.TruthTable.parse(f.text()) == f
    assert sb.measures(f, ell=1)["bs_ell"] == sb.measures(f)["s"]


def test_measures_match_python_oracle():
    rng = random.Random(5)
    for _ in range(20):
        n = rng.randint(1, 6)
        rows = [rng.random() < 0.5 for _ in range(1 << n)]
        hexdigits = "".join(
            "%x" % sum(rows[4 * k + b] << b for b in range(4) if 4 * k + b < len(rows))
            for k in range(max(1, len(rows) // 4))
        )
        f = sb.TruthTable(n, hexdigits)
        assert [f(x) for x in range(1 << n)] == rows
        assert sb.measures(f)["s"] == naive_sensitivity(lambda x: rows[x], n)


def test_families():
    r = sb.family("rubinstein", n=2)
    assert (r["predicted"]["s"], r["predicted"]["bs"]) == (4, 8)
    a = sb.family("as", n=2)
    s, bs = a["predicted"]["s"], a["predicted"]["bs"]
    assert (s, bs) == (8, 40) and 3 * bs == 2 * s * s - s
    v = sb.family("virza", n=2)
    assert 2 * v["predicted"]["bs"] == v["predicted"]["s"] ** 2 + v["predicted"]["s"]
    t = sb.onesbound_tight(2)
    m = sb.measures(t)
    assert m["s0"] == m["s1"] == 3


def test_props_and_witnesses():
    g = sb.family("as", n=1)["g_dnf"]
    p = sb.props(g)
    assert p["stats"]["block"] and p["stats"]["transitive"] and p["stats"]["mixing_max"] == 3
    assert p["bounds"]["ok"]
    w = sb.witness(sb.load((DATA / "or3.dnf").read_text()), "block")
    assert w["input"] == "000" and w["measured"] == 3
    r = sb.solve(g, "000000", [[3, 4], [5, 6], [1, 2]])
    assert r["sensitivity"] ** 2 * 4 >= r["block_count"]


def test_ball_reconstruction():
    f = sb.load((DATA / "and2.tt").read_text())
    ball = sb.ball(f, "00", 2)
    assert sb.reconstruct(ball, 2, monotone=True) == f
    maj = sb.TruthTable(3, "8e")
    assert maj == sb.Dnf.parse("dnf 3\n+1 +2\n+1 +3\n+2 +3\n").truth_table()
    assert sb.reconstruct(sb.ball(maj, "101", 3), 2) == maj


def test_errors_carry_kind_and_exit_code():
    with pytest.raises(sb.Error) as e:
        sb.family("as", n=2, expand=True)
    assert e.value.kind == "capacity" and e.value.exit_code == 3
    with pytest.raises(sb.Error) as e:
        sb.reconstruct((DATA / "and2_r2.ball").read_text(), 1, monotone=True)
    assert e.value.kind == "inconsistent-data" and e.value.exit_code == 4
    with pytest.raises(sb.Error) as e:
        sb.Dnf.parse("dnf 2\n+3\n")
    assert e.value.exit_code == 2


@pytest.mark.parametrize("suite", [s for s in sb.suite_names() if s != "monotone-nisan"])
def test_suites_pass(suite):
    rep = sb.verify(suite, seed=3, count=5)
    assert rep["instances"] > 0
    assert rep["failures"] == 0, [r for r in rep["results"] if not r["passed"]][:1]


def test_pointwise_monotone_counterexample_replays():
    rep = sb.replay("monotone-nisan", (DATA / "and2.tt").read_text())
    groups = {r["group"]: r["passed"] for r in rep["results"]}
    assert groups == {"nisan": False, "nisan-global": True}


def test_verify_is_deterministic():
    a = sb.verify("block-4s2", seed=7, count=3)
    b = sb.verify("block-4s2", seed=7, count=3)
    assert a == b
