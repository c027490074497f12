from pathlib import Path

import pytest

from pirlab.cli import main
from pirlab.reference import build_reference_table
from pirlab.scheme import dump_scheme
from tests.conftest import GOLDEN, make_table

SCHEME_2_2 = GOLDEN / "reference_2_2.scheme"


def run(capsys: pytest.CaptureFixture[str], *argv: str) -> tuple[int, str, str]:
    code = main(["--no-log", *argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def scheme_3_2(tmp_path: Path) -> Path:
    path = tmp_path / "reference_3_2.scheme"
    dump_scheme(build_reference_table(3, 2), path)
    return path


@pytest.fixture
def broken_scheme(tmp_path: Path) -> Path:
    path = tmp_path / "broken.scheme"
    dump_scheme(make_table(2, 2, 2, {1: [[[1, 1], [1, 1]]], 2: [[[0, 1], [1, 0]]]}), path)
    return path


class TestGenReference:
    def test_stdout(self, capsys: pytest.CaptureFixture[str]):
        code, out, _ = run(capsys, "gen-reference", "--servers", "2", "--messages", "2")

        assert code == 0
        assert out == SCHEME_2_2.read_text(encoding="utf-8")

    def test_out_file(self, capsys: pytest.CaptureFixture[str], tmp_path: Path):
        path = tmp_path / "out.scheme"
        code, out, _ = run(capsys, "gen-reference", "--servers", "2", "--messages", "2", "--out", str(path))

        assert (code, out) == (0, "")
        assert path.read_bytes() == SCHEME_2_2.read_bytes()

    def test_composite_servers(self, capsys: pytest.CaptureFixture[str]):
        code, _, err = run(capsys, "gen-reference", "--servers", "4", "--messages", "2")

        assert code == 2
        assert err == "pirlab: modulus 4 is not prime\n"

    def test_budget(self, capsys: pytest.CaptureFixture[str], monkeypatch: pytest.MonkeyPatch):
        monkeypatch.setenv("PIR_REFERENCE_BUDGET", "3")

        code, _, err = run(capsys, "gen-reference", "--servers", "2", "--messages", "2")

        assert code == 3
        assert "budget is 3" in err

    @pytest.mark.parametrize(("servers", "required"), [("1601", 1152720), ("2147483647", 2147483647)])
    def test_large_prime_exceeds_budget(self, capsys: pytest.CaptureFixture[str], servers: str, required: int):
        code, _, err = run(capsys, "gen-reference", "--servers", servers, "--messages", "2")

        assert code == 3
        assert err == f"pirlab: enumeration needs at least {required} cells, budget is 1000000\n"


class TestVerify:
    def test_reference_passes(self, capsys: pytest.CaptureFixture[str]):
        code, out, _ = run(capsys, "verify", str(SCHEME_2_2), "--collusion", "1")

        assert code == 0
        assert out == (GOLDEN / "reference_2_2.report").read_text(encoding="utf-8")

    def test_colluding_failure(self, capsys: pytest.CaptureFixture[str], scheme_3_2: Path):
        code, out, _ = run(capsys, "verify", str(scheme_3_2), "--collusion", "1", "2")

        assert code == 1
        assert out == (GOLDEN / "reference_3_2_colluding.report").read_text(encoding="utf-8")

    def test_crosscheck(self, capsys: pytest.CaptureFixture[str]):
        code, out, _ = run(capsys, "verify", str(SCHEME_2_2), "--crosscheck")

        assert code == 0
        assert out.endswith("[crosscheck]\nrank-entropy: pass\n")

    def test_rate_skipped(self, capsys: pytest.CaptureFixture[str]):
        code, out, _ = run(capsys, "verify", str(SCHEME_2_2), "--budget", "3")

        assert code == 0
        assert "rate: skipped (budget)\n" in out

    def test_broken_scheme_fails(self, capsys: pytest.CaptureFixture[str], broken_scheme: Path):
        code, out, _ = run(capsys, "verify", str(broken_scheme))

        assert code == 1
        assert "correctness: fail\n  m: 1\n  f: 0\n  sub-symbol: 1\n" in out

    def test_collusion_larger_than_servers(self, capsys: pytest.CaptureFixture[str]):
        code, out, _ = run(capsys, "verify", str(SCHEME_2_2), "--collusion", "3")

        assert (code, out) == (64, "")

    def test_missing_file(self, capsys: pytest.CaptureFixture[str], tmp_path: Path):
        code, _, err = run(capsys, "verify", str(tmp_path / "missing.scheme"))

        assert code == 4
        assert err.startswith("pirlab: cannot read scheme file")

    def test_malformed_file(self, capsys: pytest.CaptureFixture[str], tmp_path: Path):
        path = tmp_path / "bad.scheme"
        path.write_text("not a scheme\n", encoding="utf-8")

        code, _, err = run(capsys, "verify", str(path))

        assert code == 4
        assert f"{path}: line 1:" in err

    def test_composite_field_in_file(self, capsys: pytest.CaptureFixture[str], tmp_path: Path):
        path = tmp_path / "composite.scheme"
        path.write_text(SCHEME_2_2.read_text(encoding="utf-8").replace("field 2", "field 4"), encoding="utf-8")

        code, _, err = run(capsys, "verify", str(path))

        assert code == 4
        assert "not prime" in err

    def test_undecodable_file(self, capsys: pytest.CaptureFixture[str], tmp_path: Path):
        path = tmp_path / "binary.scheme"
        path.write_bytes(b"pir-scheme v1\nfield \xff\xfe\n")

        code, _, err = run(capsys, "verify", str(path))

        assert code == 4
        assert err == f"pirlab: {path}: line 2: invalid UTF-8 at byte 20\n"


class TestRetrieve:
    def test_trace(self, capsys: pytest.CaptureFixture[str]):
        code, out, _ = run(capsys, "retrieve", str(SCHEME_2_2), "--index", "1", "--seed", "0")

        assert code == 0
        assert out.splitlines()[:4] == ["seed: 0", "m: 1", "f: 3", "messages: 0 1"]
        assert out.splitlines()[-1] == "Decoded: matches W_1"

    def test_index_out_of_range(self, capsys: pytest.CaptureFixture[str]):
        code, _, err = run(capsys, "retrieve", str(SCHEME_2_2), "--index", "3", "--seed", "0")

        assert code == 64
        assert "--index 3" in err

    def test_undecodable(self, capsys: pytest.CaptureFixture[str], broken_scheme: Path):
        code, _, err = run(capsys, "retrieve", str(broken_scheme), "--index", "1", "--seed", "0")

        assert code == 5
        assert err == "pirlab: no decoding matrix exists for m=1, f=0\n"

    @pytest.mark.parametrize("seed", ["-1", str(2**64), "abc"])
    def test_invalid_seed(self, capsys: pytest.CaptureFixture[str], seed: str):
        code, _, _ = run(capsys, "retrieve", str(SCHEME_2_2), "--index", "1", "--seed", seed)

        assert code == 64


class TestAdversary:
    def test_single_server(self, capsys: pytest.CaptureFixture[str]):
        code, out, _ = run(capsys, "adversary", str(SCHEME_2_2), "--collude", "1", "--seed", "0")

        assert code == 0
        assert out == "colluding: 1\nobserved[1]: 0 0\nposterior: 1/2 1/2\nactual: 2\n"

    def test_full_coalition(self, capsys: pytest.CaptureFixture[str], scheme_3_2: Path):
        code, out, _ = run(capsys, "adversary", str(scheme_3_2), "--collude", "2,1", "--seed", "3")

        assert code == 0
        assert out.startswith("colluding: 1,2\n")
        assert "posterior: 1 0\n" in out or "posterior: 0 1\n" in out

    @pytest.mark.parametrize("collude", ["1,3", "0", "1,x", "1,1"])
    def test_invalid_coalition(self, capsys: pytest.CaptureFixture[str], collude: str):
        code, _, _ = run(capsys, "adversary", str(SCHEME_2_2), "--collude", collude, "--seed", "0")

        assert code == 64


class TestCapacity:
    @pytest.mark.parametrize(
        ("argv", "expected"),
        [
            (["--servers", "2", "--messages", "2"], "2/3 ≈ 0.666667\n"),
            (["--servers", "3", "--messages", "2", "--collusion", "2"], "3/5 ≈ 0.600000\n"),
            (["--servers", "2", "--messages", "3"], "4/7 ≈ 0.571429\n"),
            (["--servers", "3", "--messages", "3"], "9/13 ≈ 0.692308\n"),
        ],
    )
    def test_values(self, capsys: pytest.CaptureFixture[str], argv: list[str], expected: str):
        code, out, _ = run(capsys, "capacity", *argv)

        assert (code, out) == (0, expected)

    def test_collusion_must_be_below_servers(self, capsys: pytest.CaptureFixture[str]):
        code, _, err = run(capsys, "capacity", "--servers", "2", "--messages", "2", "--collusion", "2")

        assert code == 64
        assert "collusion size 2" in err


class TestUsage:
    @pytest.mark.parametrize(
        ("value", "message"),
        [
            ("abc", "invalid configuration: Failed to cast environment variable PIR_BUDGET: 'abc'"),
            ("0", "invalid configuration: EnumerationConfig.budget: budget is 0, minimum is 1"),
        ],
    )
    def test_invalid_environment(
        self,
        capsys: pytest.CaptureFixture[str],
        monkeypatch: pytest.MonkeyPatch,
        value: str,
        message: str,
    ):
        monkeypatch.setenv("PIR_BUDGET", value)

        commands = (
            ["retrieve", str(SCHEME_2_2), "--index", "1", "--seed", "0"],
            ["gen-reference", "--servers", "2", "--messages", "2"],
        )
        for argv in commands:
            code, out, err = run(capsys, *argv)

            assert (code, out) == (64, "")
            assert err == f"pirlab: {message}\n"

    def test_missing_command(self, capsys: pytest.CaptureFixture[str]):
        code, _, err = run(capsys)

        assert code == 64
        assert err.startswith("pirlab: pirlab:")

    def test_missing_required_option(self, capsys: pytest.CaptureFixture[str]):
        code, _, _ = run(capsys, "gen-reference", "--servers", "2")

        assert code == 64


def test_logging_enabled(capsys: pytest.CaptureFixture[str]):
    code = main(["--log", "--log-level", "DEBUG", "capacity", "--servers", "2", "--messages", "2"])

    assert code == 0
    assert capsys.readouterr().out == "2/3 ≈ 0.666667\n"
