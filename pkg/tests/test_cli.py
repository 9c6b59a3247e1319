import os

import pytest

from wordlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_generate(capsys):
    code, out, _ = run(capsys, "generate", "--morphism", "012/02/1", "--length", "6")
    assert code == 0 and out == "012021\n"
    code, out, _ = run(
        capsys,
        "generate",
        "--morphism", "012/02/1",
        "--outer", "00010011000111011/000100111011/00111",
        "--length", "17",
    )
    assert code == 0 and out.strip() == "00010011000111011"


def test_generate_errors(capsys):
    code, _, err = run(capsys, "generate", "--morphism", "0/1", "--length", "4")
    assert code == 2 and "prolongable" in err


def test_usage_error(capsys):
    assert run(capsys, "no-such-command")[0] == 2
    assert run(capsys)[0] == 2


def test_inventories(tmp_path, capsys):
    f = tmp_path / "w.txt"
    f.write_text("0100010101\n")
    code, out, _ = run(capsys, "squares", "--input", str(f))
    assert code == 0 and out.splitlines() == ["00", "0101", "1010"]
    code, out, _ = run(capsys, "overlaps", "--input", str(f))
    assert code == 0 and out.splitlines() == ["000", "01010", "10101"]
    code, out, _ = run(capsys, "exponent", "--input", str(f))
    assert code == 0 and out.startswith("3/1\t")


def test_match(tmp_path, capsys):
    f = tmp_path / "w.txt"
    f.write_text("001001")
    code, out, _ = run(capsys, "match", "--formula", "AA", "--input", str(f), "--cap", "3")
    assert code == 0
    assert out.splitlines() == ["A=0", "A=001"]


def test_check_exit_codes(tmp_path, capsys):
    cons = tmp_path / "b3.cons"
    cons.write_text("alphabet 3\nforbid-formula AA\nforbid-factor 010 212\n")
    good = tmp_path / "good.txt"
    good.write_text("012021\n")
    bad = tmp_path / "bad.txt"
    bad.write_text("0102\n")

    code, out, _ = run(capsys, "check", "--constraints", str(cons), "--input", str(good))
    assert code == 0 and out == "ok\n"
    code, out, _ = run(capsys, "check", "--constraints", str(cons), "--input", str(bad))
    assert code == 1 and "010" in out


def test_search_and_counts(tmp_path, capsys):
    cons = tmp_path / "sf2.cons"
    cons.write_text("alphabet 2\nforbid-formula AA\n")
    code, out, _ = run(
        capsys, "search", "--constraints", str(cons), "--budget-length", "50"
    )
    assert code == 0 and "exhausted max_length=3 witness=010" in out

    code, out, _ = run(capsys, "counts", "--constraints", str(cons), "--max", "4")
    assert code == 0 and out.splitlines() == ["1\t2", "2\t2", "3\t2", "4\t0"]


def test_search_budget_exit_code(tmp_path, capsys):
    cons = tmp_path / "sf3.cons"
    cons.write_text("alphabet 3\nforbid-formula AA\n")
    code, _, err = run(
        capsys,
        "search", "--constraints", str(cons),
        "--budget-length", "40", "--budget-nodes", "5",
    )
    assert code == 3 and "budget" in err


def test_extendable(tmp_path, capsys):
    cons = tmp_path / "no11.cons"
    cons.write_text("alphabet 2\nforbid-factor 11\n")
    code, out, _ = run(
        capsys, "extendable", "--constraints", str(cons), "--length", "2", "--horizon", "2"
    )
    assert code == 0 and out.splitlines() == ["00", "01", "10"]


def test_verify_manifest(manifest_dir, capsys):
    code, out, _ = run(capsys, "verify", "--manifest", os.path.join(manifest_dir, "b3"))
    assert code == 0
    assert out.strip().splitlines()[-1] == "VERDICT b3 PASS"


def test_verify_failing_manifest(tmp_path, capsys):
    (tmp_path / "c.cons").write_text("alphabet 2\n")
    man = tmp_path / "loose"
    man.write_text(
        "name loose\nconstraints c.cons\ntarget-inner 01/00\ncheck-length 2\nhorizon 2\nprefix 200\n"
    )
    code, out, _ = run(capsys, "verify", "--manifest", str(man))
    assert code == 1
    assert out.strip().splitlines()[-1] == "VERDICT loose FAIL"


def test_verify_all_is_deterministic(tmp_path, capsys):
    (tmp_path / "a.cons").write_text("alphabet 3\nforbid-formula AA\nforbid-factor 010 212\n")
    for name, inner in (("first", "012/02/1"), ("second", "012/02/1")):
        (tmp_path / name).write_text(
            f"name {name}\nconstraints a.cons\ntarget-inner {inner}\n"
            "check-length 6\nhorizon 6\nprefix 500\n"
        )
    code1, out1, _ = run(capsys, "verify-all", "--dir", str(tmp_path))
    code2, out2, _ = run(capsys, "verify-all", "--dir", str(tmp_path))
    assert code1 == code2 == 0
    assert out1 == out2
    assert out1.count("VERDICT") == 2
    assert out1.index("VERDICT first") < out1.index("VERDICT second")
