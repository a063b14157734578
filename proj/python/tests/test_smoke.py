import json

import pytest

import weylnorm


def test_roots():
    assert weylnorm.roots("A", 2)["num_roots"] == 6
    assert weylnorm.roots("G", 2)["weyl_order"] == 12
    assert weylnorm.cartan_matrix("G", 2) == [[2, -1], [-3, 2]]


def test_sl2_matrices():
    assert weylnorm.tits_lifts("A", 1, "sl2") == [[["0", "-1"], ["1", "0"]]]
    assert weylnorm.unitary_lifts("A", 1, "sl2") == [[["0", "z^2"], ["z^2", "0"]]]
    g = weylnorm.generators("A", 2, "defining")
    assert g["e"][0][0][1] == "1"
    assert [w[0] for w in g["weights"]] == [1, -1, 0]


@pytest.mark.parametrize("suite", ["tits", "unitary", "action"])
def test_verify_b2(suite):
    r = weylnorm.verify("B", 2, suite=suite, threads=2)
    assert r["schema_version"] == weylnorm.SCHEMA_VERSION
    assert r["failed"] == 0
    assert r["passed"] > 0


def test_split():
    assert weylnorm.split_check("G", 2)["status"] == "split_with_witness"
    assert weylnorm.split_check("A", 1, "sl2")["status"] == "no_two_torsion_section"
    with pytest.raises(weylnorm.CapExceeded):
        weylnorm.split_check("E", 8, cap=100)


def test_group_orders():
    assert weylnorm.tits_group_order("A", 1, "sl2") == 4
    assert weylnorm.tits_group_order("A", 1) == 2
    assert weylnorm.tits_group_order("A", 2, "defining") == 24
    assert weylnorm.tits_group_order("B", 3, cap=10) is None


def test_errors_and_cli():
    with pytest.raises(weylnorm.ConfigError):
        weylnorm.roots("Z", 9)
    with pytest.raises(ValueError):
        weylnorm.verify("B", 2, "defining")
    code, out, _ = weylnorm.run_cli("verify", "--type", "G", "--rank", "2", "--json")
    assert code == 0
    assert json.loads(out)["failed"] == 0
    assert weylnorm.run_cli("verify", "--type", "Z", "--rank", "9")[0] == 2
