import json
import subprocess
import sys

import pytest

from edsf.cli import main
from edsf.report import truncate_int


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def results(doc):
    return {r["label"]: r["value"] for r in doc["results"]}


def test_eds_examples(capsys):
    code, doc = run_json(capsys, "eds", "--id", "ex3", "--indices", "1,3,9")
    assert code == 0
    assert results(doc) == {"D_1": "1", "D_3": "3", "D_9": "10593"}
    code, doc = run_json(capsys, "eds", "--curve", "0,1,0,-4,0", "--point", "-2,2", "--indices", "1")
    assert code == 0 and results(doc) == {"D_1": "1"}
    code, doc = run_json(capsys, "eds", "--id", "ex3", "--indices", "27")
    assert results(doc)["D_27"] == "4777150229413943953562546772323392659"


def test_fermat_examples(capsys):
    code, doc = run_json(capsys, "fermat", "--id", "ex3", "--m", "3", "--k-max", "3", "--factor")
    assert code == 0
    r = results(doc)
    assert r["F_2^(3) factors"] == "3 * 11 * 107"
    assert r["F_3^(3) factors"] == "3 * 3240769000879427 * 46385324158085723"
    assert r["F_3^(3)"].endswith("2163") and len(r["F_3^(3)"]) == 33

    code, doc = run_json(capsys, "fermat", "--id", "E1", "--m", "2", "--k-max", "4", "--factor")
    r = results(doc)
    assert r["F_2^(2) factors"] == "2 * 17 * 19"
    assert r["F_4^(2) factors"].endswith("838133 * 265666679 * 3205176128020873")

    for rid in ("ex3", "E2"):
        code, doc = run_json(capsys, "fermat", "--id", rid, "--m", "1", "--k-max", "5")
        assert set(results(doc).values()) == {"1"}


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--theorem", "magnified", "--pair", "E1p->E1", "--m", "2", "--k-max", "4"],
        ["verify", "--theorem", "coprimality", "--id", "ex3", "--m", "3", "--k-max", "5"],
        ["verify", "--theorem", "growth", "--id", "ex3", "--m", "3", "--k", "5"],
        ["verify", "--theorem", "order-universality", "--id", "ex3", "--m", "3", "--k-max", "3", "--N", "11,1177"],
        ["verify", "--theorem", "order-universality", "--id", "ex3", "--m", "3", "--k-max", "3"],
        ["verify", "--theorem", "ss-lemma", "--id", "ex3", "--m", "3"],
    ],
)
def test_verify_examples(capsys, argv):
    code, doc = run_json(capsys, *argv)
    assert code == 0
    assert doc["passed"] and doc["checks"]
    assert all(c["evidence"] for c in doc["checks"])


def test_coprimality_gcds(capsys):
    _, doc = run_json(capsys, "verify", "--theorem", "coprimality", "--id", "ex3", "--m", "3", "--k-max", "5")
    assert {c["evidence"]["gcd"] for c in doc["checks"]} <= {"1", "3"}


def test_report_paper(capsys):
    code, doc = run_json(capsys, "report-paper")
    assert code == 0
    claims = [c["claim"] for c in doc["checks"]]
    for name in ("degree3", "degree7", "gefn3", "degree2"):
        assert any(c.startswith(name) for c in claims)
    verdict = results(doc)["adjudication"]
    assert "F_2 = 3531 holds" in verdict

    code, doc = run_json(capsys, "report-paper", "--only", "degree7")
    assert code == 0
    assert all(c["claim"].startswith("degree7") for c in doc["checks"])
    assert "adjudication" not in results(doc)


def test_exit_codes(capsys):
    assert run(capsys, "eds", "--id", "ex3", "--curve", "0,1,0,-4,0", "--indices", "1")[0] == 1
    with pytest.raises(SystemExit) as info:
        main(["eds", "--id", "ex3"])
    assert info.value.code == 1
    with pytest.raises(SystemExit) as info:
        main(["verify", "--theorem", "fermat-last"])
    assert info.value.code == 1
    assert run(capsys, "eds", "--curve", "0,0,0,0,0", "--point", "0,0", "--indices", "1")[0] == 2
    assert run(capsys, "eds", "--curve", "0,1,0,-4,0", "--point", "-2,3", "--indices", "1")[0] == 2
    assert run(capsys, "eds", "--id", "nope", "--indices", "1")[0] == 2
    assert run(capsys, "verify", "--theorem", "order-universality", "--id", "ex3", "--m", "4")[0] == 2
    code, _, _ = run(capsys, "verify", "--theorem", "growth", "--id", "ex3", "--m", "3", "--k", "2", "--tol", "1e-9")
    assert code == 3


def test_human_output_truncates(capsys):
    code, out, _ = run(capsys, "eds", "--id", "ex3", "--indices", "81")
    line = next(l for l in out.splitlines() if l.startswith("D_81"))
    assert "…" in line and "digits)" in line
    _, doc = run_json(capsys, "eds", "--id", "ex3", "--indices", "81")
    assert results(doc)["D_81"].isdigit()


def test_truncate_int():
    assert truncate_int(12345) == "12345"
    assert truncate_int(10 ** 40) == "1000…0000 (41 digits)"
    assert truncate_int(-(10 ** 40)) == "-100…0000 (41 digits)"


def test_seed_determinism(capsys):
    argv = ["fermat", "--id", "E2", "--m", "2", "--k-max", "4", "--factor", "--seed", "11", "--json"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "edsf", "eds", "--id", "ex3", "--indices", "9"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "D_9 = 10593" in proc.stdout
