import json
import subprocess
import sys
from pathlib import Path

from superinterval.cli import main

HERE = Path(__file__).parent
CORPUS = HERE / "corpus"
CARRIERS = HERE / "carriers"


def run(capsys, *args):
    code = main([str(a) for a in args])
    out, err = capsys.readouterr()
    return code, out, err


def test_major_product(capsys):
    code, out, _ = run(capsys, "matmul", "--mode", "major", CORPUS / "nat_long_row.mat", CORPUS / "nat_long_column.mat")
    assert code == 0 and out == "domain: nat\n284\n"


def test_extended_product(capsys):
    code, out, _ = run(capsys, "matmul", "--mode", "extended", CORPUS / "ext2_A.mat", CORPUS / "ext2_B.mat")
    assert code == 0 and out == "domain: nat\n25 | 73\n---\n18 | 34\n"


def test_partition_count_and_list(capsys):
    assert run(capsys, "partitions", "--count", 3, 2)[1] == "7\n"
    code, out, _ = run(capsys, "partitions", "--list", 2, 2)
    assert code == 0 and len(out.splitlines()) == 3
    code, out, _ = run(capsys, "partitions", "--list", "--include-trivial", "--json", 1, 2)
    assert len(json.loads(out)) == 2


def test_type_mismatch_names_the_cuts(tmp_path, capsys):
    other = tmp_path / "x.mat"
    other.write_text("domain: nat\n3 2 1 | 5 1\n")
    code, _, err = run(capsys, "add", CORPUS / "nat_triple_x.mat", other)
    assert code == 1
    assert "[2]" in err and "[3]" in err


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "add", CORPUS / "nat_triple_x.mat", "/no/such/file.mat")[0] == 2
    assert run(capsys, "partitions", "--count", 0, 2)[0] == 2
    assert run(capsys, "no-such-command")[0] == 2
    assert run(capsys, "partitions", 3, 2)[0] == 2


def test_parse_errors_exit_1(tmp_path, capsys):
    bad = tmp_path / "bad.mat"
    bad.write_text("domain: nat\n1 | 2\n3 4\n")
    code, _, err = run(capsys, "transpose", bad)
    assert code == 1 and "line 3" in err


def test_scalar_mul_json(capsys):
    code, out, _ = run(capsys, "scalar-mul", "--by", 3, "--json", CORPUS / "nat_triple_x.mat")
    obj = json.loads(out)
    assert obj["endpoints"] == [[9, 6, 3, 15, 3]] and obj["col_cuts"] == [2]


def test_fuzzy_commands(capsys):
    code, out, _ = run(capsys, "fuzzy-scale", "--op", "min", "--by", "0.31", "--decimals", CORPUS / "fuzzy_scale_min.mat")
    assert out == "domain: unit\n0.31 0.2 0.1 | 0.31 0.1 | 0.31 | 0.302 0.251 0.31\n"
    code, out, _ = run(capsys, "fuzzy-min", CORPUS / "fuzzy_x.mat", CORPUS / "fuzzy_y.mat")
    assert out == "domain: unit\n0 | 3/10 2/5 | 0 7/10 1/5 | 1/10\n"
    code, out, _ = run(capsys, "fuzzify", CORPUS / "z12_reciprocal.mat")
    assert code == 0 and out.startswith("domain: unit\n")


def test_fuzzy_ops_reject_other_domains(capsys):
    assert run(capsys, "fuzzy-min", CORPUS / "nat_triple_x.mat", CORPUS / "nat_triple_y.mat")[0] == 1


def test_check_reports(capsys):
    code, out, _ = run(capsys, "check", "group", "--carrier", CARRIERS / "z2_small_group.toml")
    assert code == 0 and "inverses: holds-exhaustive" in out
    code, out, _ = run(capsys, "check", "strict", "--carrier", CARRIERS / "z23_row_strict.toml")
    assert "strict: fails" in out and "3 13 | 8 2 1 20 | 8" in out
    code, out, _ = run(capsys, "check", "lattice", "--carrier", CARRIERS / "unit_min.toml", "--json")
    assert all(v["status"] == "holds-exhaustive" for v in json.loads(out)["verdicts"].values())
    code, out, _ = run(capsys, "check", "direct-sum", "--carrier", CARRIERS / "z12_pseudo_direct_sum.toml")
    assert "pseudo-direct" in out


def test_check_needs_matching_tables(capsys):
    assert run(capsys, "check", "direct-sum", "--carrier", CARRIERS / "z2_small_group.toml")[0] == 2
    assert run(capsys, "check", "linear-map", "--carrier", CARRIERS / "z2_small_group.toml")[0] == 2


def test_find_span_basis(capsys):
    code, out, _ = run(capsys, "find", "zero-divisors", "--seeded", "--max", 3, "--carrier", CARRIERS / "z12_row_hadamard.toml")
    assert code == 0 and "found" in out
    code, out, _ = run(capsys, "span", "--carrier", CARRIERS / "z5_span.toml")
    assert out.startswith("span: 5 elements (complete)")
    code, out, _ = run(capsys, "basis", "--carrier", CARRIERS / "z23_constant_column.toml")
    assert "carrier size: 23" in out and "generators: 1" in out


def test_audit_eta(capsys):
    code, out, _ = run(capsys, "audit-eta", "--carrier", CARRIERS / "z12_eta.toml")
    assert code == 0 and "superadditivity: fails" in out and "'(2,3)'" in out


def test_seeded_runs_are_byte_identical(capsys):
    args = ["check", "semiring", "--carrier", CARRIERS / "nat_semiring.toml", "--seed", 9, "--samples", 50, "--json"]
    first = run(capsys, *args)[1]
    assert first == run(capsys, *args)[1]


def test_module_entry_point_reads_stdin():
    text = (CORPUS / "nat_row_vector.mat").read_text()
    res = subprocess.run([sys.executable, "-m", "superinterval.cli", "transpose", "-"],
                         input=text, capture_output=True, text=True, check=True)
    assert res.stdout.startswith("domain: nat\n")
