from __future__ import annotations

import pytest

from del4.cli import main, parse_q_range
from del4.codes import optimal_code
from del4.formats import ParseError, format_blocks, format_code, parse_blocks, parse_code


def test_code_round_trip():
    code, _ = optimal_code(8)
    back, header = parse_code(format_code(code, "optimal"))
    assert back == code and header["kind"] == "optimal"


@pytest.mark.parametrize(
    "text, line",
    [
        ("# n=4 q=2\n0 0 1 1\n0 1 x 1\n", 3),
        ("# n=4 q=2\n0 0 1\n", 2),
        ("# n=4 q=2\n0 0 1 2\n", 2),
        ("# n=4 q=2\n0 0 1 1\n\n0 0 1 1\n", 4),
        ("# n=4 q=2 size=3\n0 0 1 1\n", 1),
        ("0 0 1 1\n", 1),
    ],
)
def test_code_parse_errors(text, line):
    with pytest.raises(ParseError) as e:
        parse_code(text)
    assert e.value.line == line


def test_block_round_trip_and_errors():
    header, blocks = parse_blocks(format_blocks([(3, 2, 1, 0)], ["sqs q=4"]))
    assert header == {"q": "4"} and blocks == [(0, 1, 2, 3)]
    for bad in ("1 0 2 3\n", "0 1 2\n", "0 1 1 2\n", "a b c d\n"):
        with pytest.raises(ParseError):
            parse_blocks(bad)


def test_q_range():
    assert parse_q_range("4..10") == [4, 6, 8, 10]
    assert parse_q_range("7") == [7]


def test_bound(capsys):
    assert main(["bound", "--q", "4..10"]) == 0
    rows = capsys.readouterr().out.splitlines()[1:]
    assert rows == ["4\t25\t24", "6\t73\t72", "8\t162\t160", "10\t302\t300"]


@pytest.mark.parametrize("q", [4, 10, 12, 18])
def test_construct_verify_round_trip(tmp_path, capsys, q):
    out = tmp_path / "c.txt"
    assert main(["construct", "--q", str(q), "--out", str(out)]) == 0
    size = q * q * (q + 2) // 4
    assert f"optimal: {size}/{size}" in capsys.readouterr().out
    assert main(["verify", str(out)]) == 0
    text = capsys.readouterr().out
    assert "(> 2: True)" in text and f"{size}/{size}" in text


def test_construct_deterministic(tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    main(["construct", "--q", "20", "--out", str(a)])
    main(["construct", "--q", "20", "--out", str(b), "--jobs", "4"])
    assert a.read_bytes() == b.read_bytes()


def test_construct_to_stdout(capsys):
    assert main(["construct", "--q", "4"]) == 0
    captured = capsys.readouterr()
    assert captured.out.startswith("# n=4 q=4 size=24 kind=optimal")
    assert "optimal: 24/24" in captured.err


def test_verify_collision(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("# n=4 q=2 size=2 kind=optimal\n0 0 1 1\n0 1 0 1\n")
    assert main(["verify", str(f)]) == 2
    assert "ball collision" in capsys.readouterr().out


def test_verify_perfect(tmp_path, capsys):
    f = tmp_path / "p.txt"
    assert main(["perfect", "--q", "6", "--out", str(f)]) == 0
    assert main(["verify", str(f), "--jobs", "2"]) == 0
    assert "perfect: True (216/216" in capsys.readouterr().out


def test_exit_codes(tmp_path, capsys):
    assert main(["construct", "--q", "7"]) == 3
    bad = tmp_path / "bad.txt"
    bad.write_text("# n=4 q=2\n0 0 1 1\n0 1 x 1\n")
    assert main(["verify", str(bad)]) == 3
    assert "line 3" in capsys.readouterr().err
    assert main(["verify", str(tmp_path / "missing.txt")]) == 3
    assert main(["search", "--q", "4", "--budget", "0.2"]) == 4
    assert main(["sqs", "--q", "16", "--exact-cover", "--budget", "0.2"]) == 4
    assert main(["sqs", "--q", "12"]) == 3


def test_sqs_commands(tmp_path, capsys):
    f = tmp_path / "s.txt"
    assert main(["sqs", "--q", "10", "--out", str(f)]) == 0
    assert main(["sqs", "--check", str(f)]) == 0
    assert "step property: True" in capsys.readouterr().out
    lines = f.read_text().splitlines()
    f.write_text("\n".join(lines[:-1]) + "\n")
    assert main(["sqs", "--check", str(f)]) == 2


def test_gdd_commands(tmp_path, capsys):
    f = tmp_path / "g.txt"
    assert main(["gdd", "--m", "3", "--out", str(f)]) == 0
    assert main(["gdd", "--check", str(f)]) == 0
    assert "contains A: True" in capsys.readouterr().out
    lines = f.read_text().splitlines()
    f.write_text("\n".join(lines[:-1]) + "\n")
    assert main(["gdd", "--check", str(f)]) == 2


def test_search_and_profile(capsys):
    assert main(["search", "--q", "2"]) == 0
    assert "size=4 exact=True" in capsys.readouterr().out
    assert main(["profile", "--q", "8"]) == 0
    out = capsys.readouterr().out
    assert "C4,2\t24" in out and "size from coverage: 160" in out
