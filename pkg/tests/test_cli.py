import json

import pytest

from upkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    lines = [ln for ln in out.splitlines() if ln]
    return code, lines


# ----------------------------------------------------------------- classes

def test_classes_singleton(capsys):
    code, lines = run(capsys, "classes", "--dual", "B", "--N", "1")
    assert code == 0
    assert lines == ['{"I":[],"J":[],"partition":"1","special":true}']


def test_classes_c2(capsys):
    code, lines = run(capsys, "classes", "--dual", "C", "--N", "2")
    assert code == 0
    assert [json.loads(ln)["partition"] for ln in lines] == ["2", "1^2"]


def test_classes_b9_count(capsys):
    code, lines = run(capsys, "classes", "--dual", "B", "--N", "9")
    assert code == 0
    assert len(lines) == 13  # |P^{+1}(9)|
    first = json.loads(lines[0])
    assert first == {"I": [], "J": [], "partition": "9", "special": True}


def test_classes_parity_mismatch(capsys):
    code, _ = run(capsys, "classes", "--dual", "B", "--N", "8")
    assert code == 2


def test_classes_cap(capsys, monkeypatch):
    monkeypatch.setenv("UPKIT_MAX_N", "10")
    code, _ = run(capsys, "classes", "--dual", "B", "--N", "11")
    assert code == 2
    monkeypatch.setenv("UPKIT_MAX_N", "11")
    code, _ = run(capsys, "classes", "--dual", "B", "--N", "11")
    assert code == 0


# -------------------------------------------------------------- class-info

GOLDEN_INFO = (
    '{"A0_size":4,"A_dagger":[[],[1,3]],"A_dagger_signs":["(+++)","(--+)"],'
    '"I":[],"J":[4],"S":[1,3,5],"S0":[1,3,5],"Spc":["5,3,1","4^2,1"],'
    '"blocks":[[3,1],[5]],"d":"2^4","dual":"B","partition":"5,3,1",'
    '"special":true}'
)


def test_class_info_golden(capsys):
    code, lines = run(capsys, "class-info", "--dual", "B", "--partition", "5,3,1")
    assert code == 0
    assert lines == [GOLDEN_INFO]


def test_class_info_golden_is_stable(capsys):
    for _ in range(2):
        _, lines = run(capsys, "class-info", "--dual", "B", "--partition", "5,3,1")
        assert lines == [GOLDEN_INFO]


def test_class_info_regular(capsys):
    code, lines = run(capsys, "class-info", "--dual", "B", "--partition", "7")
    assert code == 0
    rec = json.loads(lines[0])
    assert rec["A_dagger"] == [[]]
    assert rec["Spc"] == ["7"]
    assert rec["J"] == [] and rec["I"] == []


def test_class_info_pretty_equivalent(capsys):
    _, compact = run(capsys, "class-info", "--dual", "B", "--partition", "5,3,1")
    code = main(["class-info", "--dual", "B", "--partition", "5,3,1", "--pretty"])
    pretty = capsys.readouterr().out
    assert code == 0
    assert json.loads(pretty) == json.loads(compact[0])


# -------------------------------------------------------------- weak-packet

def test_weak_packet_531(capsys):
    code, lines = run(capsys, "weak-packet", "--dual", "B", "--partition", "5,3,1")
    assert code == 0
    rows = [json.loads(ln) for ln in lines]
    assert [r["record"] for r in rows] == ["lpacket", "lpacket", "summary"]
    assert [r["J"] for r in rows[:2]] == [[], [4]]
    assert [r["mu"] for r in rows[:2]] == ["5,3,1", "4^2,1"]
    assert rows[2] == {
        "lpacket_sizes": [4, 1],
        "packets": 2,
        "record": "summary",
        "total": 5,
    }


# --------------------------------------------------------------- membership

def test_membership_531(capsys):
    code, lines = run(
        capsys, "membership", "--dual", "B", "--partition", "5,3,1",
        "--eps=--+",
    )
    assert code == 0
    rows = [json.loads(ln) for ln in lines]
    assert rows[-1] == {"count": 2, "record": "summary"}
    assert [r["J"] for r in rows[:-1]] == [[], [4]]


def test_membership_with_J(capsys):
    code, lines = run(
        capsys, "membership", "--dual", "B", "--partition", "5,3,1",
        "--eps=--+", "--J", "4",
    )
    assert code == 0
    assert json.loads(lines[0]) == {
        "J": [4],
        "contains": True,
        "eps": [1, 3],
        "eps_signs": "(--+)",
        "partition": "5,3,1",
        "record": "membership",
    }
    code, lines = run(
        capsys, "membership", "--dual", "B", "--partition", "5,3,1",
        "--eps=--+", "--J", "{}",
    )
    assert code == 0
    assert json.loads(lines[0])["J"] == [] and json.loads(lines[0])["contains"]


def test_membership_bad_J(capsys):
    code, _ = run(
        capsys, "membership", "--dual", "B", "--partition", "5,3,1",
        "--eps=--+", "--J", "2",
    )
    assert code == 3  # 2 is not in J(lam)


def test_membership_outside_canonical(capsys):
    code, _ = run(
        capsys, "membership", "--dual", "B", "--partition", "5,3,1",
        "--eps=+--",
    )
    assert code == 3  # {3,5} is not in the canonical subgroup


# ----------------------------------------------------------------- springer

def test_springer_golden(capsys):
    code, lines = run(
        capsys, "springer", "--dual", "B", "--partition", "5,3,1",
        "--eps=(--+)",
    )
    assert code == 0
    assert lines == [
        '{"S_max":[3],"S_min":[1,5],"X":[1,2,3],"X_eps":[2],"alpha":[2,2],'
        '"beta":[],"defect0":0,"dual":"B","eps":[1,3],"eps_signs":"(--+)",'
        '"gamma":[2,2,0],"partition":"5,3,1"}'
    ]


def test_springer_default_trivial(capsys):
    code, lines = run(capsys, "springer", "--dual", "B", "--partition", "5,3,1")
    assert code == 0
    rec = json.loads(lines[0])
    assert rec["eps"] == [] and rec["alpha"] == [2] and rec["beta"] == [2]


def test_springer_not_springer_type(capsys):
    code, _ = run(
        capsys, "springer", "--dual", "B", "--partition", "5,3,1",
        "--eps=-+-",
    )
    assert code == 3


# --------------------------------------------------------------- sphericity

@pytest.mark.parametrize(
    "eps,want",
    [("+++", True), ("--+", True), ("-+-", False), ("+--", False)],
)
def test_sphericity_531(capsys, eps, want):
    code, lines = run(
        capsys, "sphericity", "--dual", "B", "--partition", "5,3,1",
        f"--eps={eps}",
    )
    assert code == 0
    assert json.loads(lines[0])["weakly_spherical"] is want


def test_sphericity_mixed_parity(capsys):
    code, lines = run(
        capsys, "sphericity", "--dual", "C", "--partition", "10,10,4,4,2",
    )
    assert code == 0
    assert json.loads(lines[0])["weakly_spherical"] is True


# --------------------------------------------------------------- validation

def test_bad_partition_text(capsys):
    code, _ = run(capsys, "class-info", "--dual", "B", "--partition", "abc")
    assert code == 2


def test_bad_parity_partition(capsys):
    # N even cannot be a B dual
    code, _ = run(capsys, "class-info", "--dual", "B", "--partition", "4,4")
    assert code == 2


def test_bad_eps_length(capsys):
    code, _ = run(
        capsys, "sphericity", "--dual", "B", "--partition", "5,3,1",
        "--eps=-+",
    )
    assert code == 2
    # argparse swallows a bare "--" value; still a clean usage error
    code, _ = run(
        capsys, "sphericity", "--dual", "B", "--partition", "5,3,1",
        "--eps=--",
    )
    assert code == 2


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["classes", "--dual", "X", "--N", "9"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


# ------------------------------------------------------------------- verify

def test_verify_single_suite(capsys):
    code, lines = run(capsys, "verify", "--suite", "dprop", "--maxN", "6")
    assert code == 0
    rows = [json.loads(ln) for ln in lines]
    assert rows[-1]["status"] == "pass" and rows[-1]["suites"] == ["dprop"]
    assert all(r["status"] == "pass" for r in rows[:-1])
    assert sum(r["checked"] for r in rows[:-1]) > 0


def test_verify_all_small(capsys):
    code, lines = run(capsys, "verify", "--suite", "all", "--maxN", "4")
    assert code == 0
    rows = [json.loads(ln) for ln in lines]
    suites = {r["suite"] for r in rows[:-1]}
    assert suites == {
        "dprop", "spc", "js", "almost", "firstrow", "theoremC", "oracle",
    }
    assert rows[-1]["status"] == "pass"


def test_verify_jobs_match_serial(capsys):
    _, serial = run(capsys, "verify", "--suite", "spc", "--maxN", "8")
    _, parallel = run(
        capsys, "verify", "--suite", "spc", "--maxN", "8", "--jobs", "2"
    )
    assert serial == parallel


def test_verify_cap(capsys, monkeypatch):
    monkeypatch.setenv("UPKIT_MAX_N", "6")
    code, _ = run(capsys, "verify", "--suite", "spc", "--maxN", "8")
    assert code == 2


def test_verify_bad_suite():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nope"])
    assert exc.value.code == 2
