import json
import os
import subprocess

import pytest

import ekr


def test_claim_ids_match_cli_list():
    ids = ekr.claim_ids()
    assert len(ids) == 18
    assert "prop4.3" in ids and "table1" in ids


def test_profile_cyclic():
    p = ekr.profile("cyclic", n=6)
    assert (p["order"], p["derangements"], p["labels"], p["d_G"]) == (6, 5, 3, 1)


@pytest.mark.parametrize("n,expect", [(3, 2), (4, 6), (5, 24)])
def test_sym_alpha_is_star(n, expect):
    r = ekr.alpha("sym", n=n)
    assert r["alpha"] == expect
    assert len(r["witness"]) == expect


def test_alpha_after_removal_doubles_for_c6():
    # removing the label of (1,4)(2,5)(3,6) in C6 takes alpha from 1 to 2
    assert ekr.alpha("cyclic", n=6)["alpha"] == 1
    assert ekr.alpha("cyclic", removed=["(1,4)(2,5)(3,6)"], n=6)["alpha"] == 2


def test_abelian_tuple_params():
    assert ekr.describe_group("abelian", abelian=(4, 2))["order"] == 8


def test_verify_pass_and_exit_code():
    v = ekr.verify("prop4.3", abelian="6")
    assert v["hypothesis"] and v["pass"]
    assert ekr.exit_code(v) == 0


def test_verify_hypothesis_not_met():
    v = ekr.verify("lem4.2", abelian="2,2")
    assert not v["hypothesis"]
    assert ekr.exit_code(v) == 3


def test_verify_scan_has_cases():
    v = ekr.verify("prop4.5", n=8)
    assert v["cases"] and all("alpha" in c for c in v["cases"])


def test_bad_family_raises():
    with pytest.raises(ekr.EkrError):
        ekr.profile("nope")


def test_workers_do_not_change_results():
    a = ekr.verify("cor4.8", abelian="6", workers=1)
    b = ekr.verify("cor4.8", abelian="6", workers=4)
    assert a["computed"] == b["computed"]


@pytest.mark.skipif(not os.environ.get("EKR_BIN"), reason="EKR_BIN not set")
def test_cli_json_matches_module(tmp_path):
    env = dict(os.environ, EKR_CACHE_DIR=str(tmp_path))
    out = subprocess.run(
        [os.environ["EKR_BIN"], "verify", "prop3.6", "--n", "6", "--json", "-"],
        capture_output=True, text=True, env=env, check=False,
    )
    assert out.returncode == 0, out.stderr
    rec = json.loads(out.stdout)
    assert rec["cache"] == "miss"
    assert rec["payload"]["computed"] == ekr.verify("prop3.6", n=6)["computed"]
    again = subprocess.run(
        [os.environ["EKR_BIN"], "verify", "prop3.6", "--n", "6", "--json", "-"],
        capture_output=True, text=True, env=env, check=False,
    )
    assert json.loads(again.stdout)["cache"] == "hit"
