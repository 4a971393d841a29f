"""Tests for the command-line interface."""

import sys

import pytest

from src.cli import main


def test_cli_encode_then_decode(tmp_path):
    plain = tmp_path / "message.txt"
    coded = tmp_path / "message.pdc"
    decoded = tmp_path / "decoded.txt"
    plain.write_text("Hello Ala\n")

    assert main(["encode", "--input", str(plain), "--output", str(coded)]) == 0
    assert coded.read_bytes() == b"PADOVANC v1 m=1\n2341,11,8,15,15,2,4,15,4\n"

    assert main(["decode", "--input", str(coded), "--output", str(decoded)]) == 0
    assert decoded.read_text() == "HELLO ALA\n"


def test_cli_encode_is_deterministic(tmp_path):
    plain = tmp_path / "message.txt"
    plain.write_text("to be or not to be\n")
    first, second = tmp_path / "a.pdc", tmp_path / "b.pdc"

    assert main(["encode", "--input", str(plain), "--output", str(first)]) == 0
    assert main(["encode", "--input", str(plain), "--output", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()


def test_cli_encode_rejects_bad_text(tmp_path, capsys):
    plain = tmp_path / "message.txt"
    plain.write_text("HELLO 2 ALA\n")

    ret = main(["encode", "--input", str(plain), "--output", str(tmp_path / "out.pdc")])
    assert ret == 1
    assert "unsupported characters" in capsys.readouterr().err
    assert not (tmp_path / "out.pdc").exists()


def test_cli_decode_tampered_file(tmp_path, capsys):
    coded = tmp_path / "message.pdc"
    coded.write_bytes(b"PADOVANC v1 m=1\n2341,12,8,15,15,2,4,15,4\n")

    ret = main(["decode", "--input", str(coded), "--output", str(tmp_path / "out.txt")])
    assert ret == 2
    assert "corrupted" in capsys.readouterr().err


def test_cli_decode_malformed_file(tmp_path, capsys):
    coded = tmp_path / "message.pdc"
    coded.write_bytes(b"PADOVANC v1 m=2\n2341,11,8,15,15,2,4,15,4\n")

    ret = main(["decode", "--input", str(coded), "--output", str(tmp_path / "out.txt")])
    assert ret == 1
    assert "rows" in capsys.readouterr().err


def test_cli_decode_missing_file(tmp_path):
    ret = main(["decode", "--input", str(tmp_path / "absent.pdc"), "--output", str(tmp_path / "out.txt")])
    assert ret == 1


def test_cli_inspect_example1(data_dir, capsys):
    ret = main(["inspect", "--input", str(data_dir / "example1.pdc")])
    assert ret == 0
    out = capsys.readouterr().out.splitlines()
    assert out == ["m=1", "n=4", "rows=1", "row 1: d=2208 minor22=-16 status=ok"]


def test_cli_inspect_equations(data_dir, capsys):
    ret = main(["inspect", "--input", str(data_dir / "example1.pdc"), "--equations"])
    assert ret == 0
    out = capsys.readouterr().out
    assert "e1=19 e2=15 e3=7 e4=30 e5=23 e6=22 e7=45 e8=23 e9=25" in out
    assert "solve: 2208 = -16x + 2496" in out
    assert "x=18" in out


def test_cli_usage_errors(capsys):
    assert main(["encode", "--input", "only.txt"]) == 1
    assert main(["frobnicate"]) == 1


def test_cli_help():
    assert main(["--help"]) == 0


def test_cli_encodes_sample_file(data_dir, tmp_path):
    coded = tmp_path / "hello.pdc"
    assert main(["encode", "--input", str(data_dir / "hello.txt"), "--output", str(coded)]) == 0
    assert coded.read_bytes() == b"PADOVANC v1 m=1\n2341,11,8,15,15,2,4,15,4\n"


def test_cli_encode_reports_unfixable_minor(tmp_path, capsys):
    plain = tmp_path / "message.txt"
    plain.write_text("AAAAAAAAAAA\n")

    ret = main(["encode", "--input", str(plain), "--output", str(tmp_path / "out.pdc")])
    assert ret == 2
    err = capsys.readouterr().err
    assert "cannot be encoded" in err
    assert "corrupted" not in err
    assert not (tmp_path / "out.pdc").exists()


@pytest.mark.skipif(not hasattr(sys, "get_int_max_str_digits"), reason="interpreter has no integer digit limit")
def test_cli_decode_oversized_field(tmp_path, capsys):
    coded = tmp_path / "message.pdc"
    coded.write_text("PADOVANC v1 m=1\n" + "9" * 5000 + ",0,0,0,0,0,0,0,0\n")

    ret = main(["decode", "--input", str(coded), "--output", str(tmp_path / "out.txt")])
    assert ret == 1
    assert capsys.readouterr().err.startswith("error:")
