import pytest

from mobiuspoly.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_chain_one(capsys):
    code, out, err = run(capsys, "gen", "chain", "1")
    assert code == 0 and err == ""
    assert out == "elem 0 rank 0\nelem 1 rank 1\ncover 0 1\n"


def test_gen_boolean_two_counts(capsys):
    code, out, _ = run(capsys, "gen", "boolean", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert sum(1 for l in lines if l.startswith("elem ")) == 4
    assert sum(1 for l in lines if l.startswith("cover ")) == 4


def test_gen_divisor_twelve_counts(capsys):
    code, out, _ = run(capsys, "gen", "divisor", "12")
    assert code == 0
    lines = out.strip().splitlines()
    assert sum(1 for l in lines if l.startswith("elem ")) == 6
    assert sum(1 for l in lines if l.startswith("cover ")) == 7


def test_gen_guard_violation_exits_2(capsys):
    code, out, err = run(capsys, "gen", "boolean", "17")
    assert code == 2
    assert out == ""
    assert "16" in err


def test_gen_writes_file(tmp_path, capsys):
    target = tmp_path / "c2.poset"
    code, out, _ = run(capsys, "gen", "chain", "2", "-o", str(target))
    assert code == 0 and out == ""
    assert target.read_text().startswith("elem 0 rank 0\n")


def test_mobius_singleton(tmp_path, capsys):
    f = tmp_path / "p.poset"
    f.write_text("elem only\n")
    code, out, _ = run(capsys, "mobius", str(f))
    assert code == 0
    assert out == "1\n"


def test_mobius_of_generated_families(tmp_path, capsys):
    f = tmp_path / "c1.poset"
    run(capsys, "gen", "chain", "1", "-o", str(f))
    code, out, _ = run(capsys, "mobius", str(f))
    assert (code, out) == (0, "2 - z\n")

    f = tmp_path / "d12.poset"
    run(capsys, "gen", "divisor", "12", "-o", str(f))
    code, out, _ = run(capsys, "mobius", str(f))
    assert (code, out) == (0, "6 - 7*z + 2*z^2\n")


def test_mobius_missing_file(capsys):
    code, out, err = run(capsys, "mobius", "/nonexistent/p.poset")
    assert code == 2 and out == "" and "cannot read" in err


def test_mobius_rejects_invalid_ranks(tmp_path, capsys):
    f = tmp_path / "bad.poset"
    f.write_text("elem a rank 0\nelem b rank 0\ncover a b\n")
    code, out, err = run(capsys, "mobius", str(f))
    assert code == 2 and out == ""
    assert "rank" in err


def test_hilbert_boolean_one(tmp_path, capsys):
    f = tmp_path / "b1.poset"
    run(capsys, "gen", "boolean", "1", "-o", str(f))
    code, out, _ = run(capsys, "hilbert", str(f))
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "H = (1 - z)/(1 - 2*z + z^2)"
    assert lines[1] == "coeffs: " + ", ".join(["1"] * 17)


def test_hilbert_boolean_two_with_terms(tmp_path, capsys):
    f = tmp_path / "b2.poset"
    run(capsys, "gen", "boolean", "2", "-o", str(f))
    code, out, _ = run(capsys, "hilbert", str(f), "--terms", "4")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "H = (1 - z)/(1 - 4*z + 4*z^2 - z^3)"
    assert lines[1] == "coeffs: 1, 3, 8, 21, 55"


def test_hilbert_rejects_generalized_input(tmp_path, capsys):
    f = tmp_path / "gen.poset"
    f.write_text("elem a rank 0\nelem b rank 2\ncover a b\n")
    code, out, err = run(capsys, "hilbert", str(f))
    assert code == 2 and out == ""
    assert "ranked poset" in err


def test_hilbert_rejects_multiple_minima(tmp_path, capsys):
    f = tmp_path / "anti.poset"
    f.write_text("elem a\nelem b\n")
    code, _, err = run(capsys, "hilbert", str(f))
    assert code == 2
    assert "minimal" in err


def test_trace_atom_swap(tmp_path, capsys):
    f = tmp_path / "b2.poset"
    run(capsys, "gen", "boolean", "2", "-o", str(f))
    aut = tmp_path / "swap.aut"
    aut.write_text("map {1} {2}\nmap {2} {1}\n")
    code, out, _ = run(capsys, "trace", str(f), "--aut", str(aut), "--terms", "4")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "Tr = (1 - z)/(1 - 2*z + z^3)"
    assert lines[1] == "coeffs: 1, 1, 2, 3, 5"


def test_trace_rejects_bad_aut(tmp_path, capsys):
    f = tmp_path / "b2.poset"
    run(capsys, "gen", "boolean", "2", "-o", str(f))
    aut = tmp_path / "bad.aut"
    aut.write_text("map {1} {1,2}\n")
    code, _, err = run(capsys, "trace", str(f), "--aut", str(aut))
    assert code == 2
    assert err != ""


def test_product_command(tmp_path, capsys):
    c1 = tmp_path / "c1.poset"
    run(capsys, "gen", "chain", "1", "-o", str(c1))
    code, out, _ = run(capsys, "product", str(c1), str(c1))
    assert code == 0
    assert "elem (0,0) rank 0" in out
    assert "elem (1,1) rank 2" in out
    assert "cover (0,1) (1,1)" in out


def test_rescale_command(tmp_path, capsys):
    c1 = tmp_path / "c1.poset"
    run(capsys, "gen", "chain", "1", "-o", str(c1))
    code, out, _ = run(capsys, "rescale", str(c1), "2")
    assert code == 0
    assert out == "elem 0 rank 0\nelem 1 rank 2\ncover 0 1\n"


def test_fixed_command(tmp_path, capsys):
    f = tmp_path / "b2.poset"
    run(capsys, "gen", "boolean", "2", "-o", str(f))
    aut = tmp_path / "swap.aut"
    aut.write_text("map {1} {2}\nmap {2} {1}\n")
    code, out, _ = run(capsys, "fixed", str(f), "--aut", str(aut))
    assert code == 0
    assert out == "elem {} rank 0\nelem {1,2} rank 2\ncover {} {1,2}\n"


def test_fixed_empty_rejected(tmp_path, capsys):
    f = tmp_path / "anti.poset"
    f.write_text("elem a\nelem b\n")
    aut = tmp_path / "swap.aut"
    aut.write_text("map a b\nmap b a\n")
    code, _, err = run(capsys, "fixed", str(f), "--aut", str(aut))
    assert code == 2
    assert "fixed subposet empty" in err


def test_verify_generated_family_passes(tmp_path, capsys):
    f = tmp_path / "d30.poset"
    run(capsys, "gen", "divisor", "30", "-o", str(f))
    code, out, _ = run(capsys, "verify", str(f))
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 4
    assert all(line.endswith("PASS") for line in lines)


def test_verify_reports_rank_failures(tmp_path, capsys):
    f = tmp_path / "bad.poset"
    f.write_text("elem a rank 0\nelem b rank 0\ncover a b\n")
    code, out, _ = run(capsys, "verify", str(f))
    assert code == 2
    assert "validate: FAIL" in out


def test_verify_cycle_is_a_parse_rejection(tmp_path, capsys):
    f = tmp_path / "cyc.poset"
    f.write_text("elem a\nelem b\ncover a b\ncover b a\n")
    code, out, err = run(capsys, "verify", str(f))
    assert code == 2
    assert out == ""
    assert "cycle" in err


def test_generated_output_parses_back(tmp_path, capsys):
    # gen -> product -> fixed round trip through files only
    c1 = tmp_path / "c1.poset"
    run(capsys, "gen", "chain", "1", "-o", str(c1))
    prod = tmp_path / "prod.poset"
    code, _, _ = run(capsys, "product", str(c1), str(c1), "-o", str(prod))
    assert code == 0
    code, out, _ = run(capsys, "mobius", str(prod))
    assert (code, out) == (0, "4 - 4*z + z^2\n")
