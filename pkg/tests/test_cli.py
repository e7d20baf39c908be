import json
from pathlib import Path

import pytest

from isc.cli import main

GOLDEN = Path(__file__).parent / "golden"
ROOMY = ["--M", "16", "--L", "36", "--l", "16", "--t", "1", "--e1", "1", "--e2", "1"]
P0 = ["--M", "4", "--L", "9", "--l", "3", "--t", "1", "--e1", "1", "--e2", "1"]
P0F = ["--M", "4", "--L", "13", "--l", "7", "--t", "1", "--e1", "1", "--e2", "1"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_params_json(capsys):
    code, out, _ = run(capsys, "params", *P0)
    assert code == 0 and json.loads(out)["capacity_bits"] == 16


@pytest.mark.parametrize("argv", [
    ["params", "--M", "4", "--L", "9", "--l", "3", "--t", "1", "--e1", "1"],
    ["params", "--M", "6", "--L", "9", "--l", "3", "--t", "1", "--e1", "1", "--e2", "1"],
    ["experiment", *P0F, "--trials", "0"],
    ["bounds", "--M", "16"],
    ["bounds", *ROOMY, "--sweep", "M=1..4:*1"],
    ["frobnicate"],
])
def test_invalid_usage_exit_4(capsys, argv):
    assert run(capsys, *argv)[0] == 4


def test_golden_encode_corrupt_decode(capsys, tmp_path):
    enc, cor = tmp_path / "enc.isc", tmp_path / "cor.isc"
    assert main(["encode", *ROOMY, "--in", str(GOLDEN / "payload.bin"), "--out", str(enc)]) == 0
    assert enc.read_bytes() == (GOLDEN / "encoded.isc").read_bytes()
    assert main(["corrupt", "--in", str(enc), "--out", str(cor), "--seed", "7"]) == 0
    assert cor.read_bytes() == (GOLDEN / "corrupted.isc").read_bytes()
    sidecar = Path(str(cor) + ".pattern.json")
    assert sidecar.read_bytes() == (GOLDEN / "corrupted.pattern.json").read_bytes()
    out = tmp_path / "out.bin"
    assert main(["decode", "--in", str(cor), "--out", str(out)]) == 0
    assert out.read_bytes() == (GOLDEN / "payload.bin").read_bytes()


def test_round_trip_stdout(capsys, tmp_path):
    src = tmp_path / "p.bin"
    src.write_bytes(b"\x00\x01\x02\xfe")
    enc = tmp_path / "e.isc"
    assert main(["encode", *ROOMY, "--in", str(src), "--out", str(enc)]) == 0
    for seed in range(1, 6):
        cor = tmp_path / f"c{seed}.isc"
        assert main(["corrupt", "--in", str(enc), "--out", str(cor), "--seed", str(seed)]) == 0
        code = main(["decode", "--in", str(cor), "--out", str(tmp_path / "d.bin")])
        assert code == 0 and (tmp_path / "d.bin").read_bytes() == src.read_bytes()


def test_truncated_set_is_size_mismatch(capsys, tmp_path):
    lines = (GOLDEN / "encoded.isc").read_text().splitlines()
    bad = tmp_path / "short.isc"
    bad.write_text("\n".join(lines[:-1]) + "\n")
    code, _, err = run(capsys, "decode", "--in", str(bad))
    assert code == 2 and "size mismatch" in err


def test_bad_format_exit_4(capsys, tmp_path):
    bad = tmp_path / "bad.isc"
    bad.write_text("ISC1 M=4 L=9\n010101010\n")
    assert run(capsys, "decode", "--in", str(bad))[0] == 4
    bad.write_text((GOLDEN / "encoded.isc").read_text().replace("0", "2", 40))
    assert run(capsys, "decode", "--in", str(bad))[0] == 4


def test_encoding_rejection_exit_3(capsys, tmp_path):
    src = tmp_path / "p.bin"
    src.write_bytes(b"\x00\x00")
    assert run(capsys, "encode", *P0, "--in", str(src))[0] == 3


def test_bounds_outputs(capsys):
    code, out, _ = run(capsys, "bounds", "--M", "16", "--L", "20", "--l", "16", "--t", "1",
                       "--e1", "1", "--e2", "1")
    rep = json.loads(out)
    assert code == 0 and rep["r_sp_exact"] == 8.0 and rep["r_A_defined"]
    code, out, _ = run(capsys, "bounds", "--L", "4108", "--l", "20", "--t", "2", "--e1", "1",
                       "--e2", "2", "--M", "16", "--sweep", "M=16..65536:*4")
    rows = out.splitlines()
    assert code == 0 and len(rows) == 1 + 7 and rows[0].startswith("M,L,l,")
    code, out, _ = run(capsys, "bounds", *P0)
    assert code == 0 and json.loads(out)["r_A_defined"] is False


def test_experiment_deterministic(capsys):
    reports = []
    for _ in range(2):
        code, out, _ = run(capsys, "experiment", *ROOMY, "--trials", "40", "--seed", "9")
        assert code == 0
        rep = json.loads(out)
        rep.pop("wall_time")
        reports.append(rep)
    assert reports[0] == reports[1]
    r = reports[0]
    assert r["successes"] + sum(r["failures"].values()) == 40
    assert r["successes"] + r["failures"]["encoding rejection"] == 40


def test_enumerate_check_decode(capsys, tmp_path):
    code, out, err = run(capsys, "enumerate", *P0F, "--trials", "3", "--check-decode")
    summary = json.loads(out)
    assert code == 0 and summary["codewords"] == 3 and summary["failed"] == 0
    assert "pass=" in err
    code, out, _ = run(capsys, "enumerate", "--in", str(GOLDEN / "encoded.isc"))
    assert code == 0 and json.loads(out)["patterns_per_codeword"] == 16 * 5 * 33


def test_enumerate_guard_exit_4(capsys):
    argv = ["enumerate", "--M", "64", "--L", "64", "--l", "16", "--t", "3", "--e1", "1",
            "--e2", "1"]
    assert run(capsys, *argv)[0] == 4
