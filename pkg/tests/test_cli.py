import pytest

from irng import catalog
from irng.cli import main
from irng.rng import load_rng, parse_rng
from irng.semigroups import load_semigroup


def run(capsys, *argv):
    rc = main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


@pytest.fixture
def emit(tmp_path, capsys):
    def _emit(name):
        path = tmp_path / f"{name}.txt"
        assert main(["catalog", "emit", name, "-o", str(path)]) == 0
        capsys.readouterr()
        return str(path)
    return _emit


# -- golden lines -------------------------------------------------------------------

def test_weight_remark7(capsys, emit):
    rc, out, _ = run(capsys, "weight", "--rng", emit("remark7"))
    assert rc == 0 and out == "exact 1\n"


def test_weight_zero22_verbose(capsys, emit):
    rc, out, _ = run(capsys, "weight", "--rng", emit("zero22"), "--verbose")
    lines = out.splitlines()
    assert rc == 0 and lines[0] == "exact 2" and "lower bound: 2" in lines
    assert sum(ln.startswith("witness: ") for ln in lines) == 2


def test_weight_budget(capsys, emit):
    rc, out, _ = run(capsys, "weight", "--rng", emit("zero22"), "--enum-cap", "2")
    assert rc == 0 and out == "at-least 2\n"


def test_thm3_free(capsys):
    rc, out, _ = run(capsys, "thm3-free", "--n", "2", "--sides", "LL")
    lines = out.splitlines()
    assert rc == 0
    assert "z = x1 + x2 - x1.x2" in lines
    assert lines[-1] == "certificates: 2/2 verified"


def test_steinberg(capsys, emit):
    rc, out, _ = run(capsys, "el", "steinberg", "--rng", emit("z2"), "--n", "3", "--exhaustive")
    assert rc == 0 and out.splitlines()[-1] == "relations verified: 3/3"


def test_steinberg_sampled_prints_seed(capsys, emit):
    rc, out, _ = run(capsys, "el", "steinberg", "--rng", emit("remark7"), "--n", "3",
                     "--samples", "50", "--seed", "9")
    assert rc == 0 and "seed 9" in out


def test_el_generate(capsys, emit):
    rc, out, _ = run(capsys, "el", "generate", "--rng", emit("z2"), "--n", "3")
    assert rc == 0 and "group order: 168" in out.splitlines()


def test_el_thm11(capsys, emit):
    rc, out, _ = run(capsys, "el", "thm11", "--rng", emit("z2"), "--n", "3")
    assert rc == 0
    assert "upper bound witnessed: yes" in out.splitlines()


def test_el_quotient(capsys, emit):
    rc, out, _ = run(capsys, "el", "quotient", "--rng", emit("z4"), "--n", "3", "--gen", "2",
                     "--samples", "100")
    assert rc == 0 and "quotient order: 2" in out.splitlines()


def test_verify_and_ideal(capsys, emit):
    path = emit("m2z2")
    rc, out, _ = run(capsys, "verify", "--rng", path)
    assert rc == 0 and "irng: yes" in out.splitlines()
    rc, out, _ = run(capsys, "ideal", "--rng", path, "--gen", "1 0 0 0")
    assert rc == 0 and out.splitlines()[-1] == "whole rng: yes"
    rc, out, _ = run(capsys, "ideal", "--rng", path, "--gen", "1 0 0 0", "--left")
    assert rc == 0 and "ideal order: 4" in out.splitlines()


def test_unit_and_cor6(capsys, emit):
    rc, out, _ = run(capsys, "unit", "--rng", emit("z6sub"))
    lines = out.splitlines()
    assert rc == 0 and lines[-1] == "verdict: verified"
    assert any(ln.startswith("brute-force unit: ") and ln.endswith("(agrees)") for ln in lines)
    rc, out, _ = run(capsys, "cor6", "--rng", emit("remark7"))
    assert rc == 0 and out.splitlines()[-1] == "verdict: verified"


def test_semigroup_commands(capsys, emit):
    path = emit("LZ2")
    rc, out, _ = run(capsys, "verify", "--semigroup", path)
    assert rc == 0 and "band: yes" in out.splitlines()
    rc, out, _ = run(capsys, "x0", "--semigroup", path, "--X", "0")
    assert rc == 0
    rc, out, _ = run(capsys, "cor8", "--semigroup", path, "--m", "3")
    assert rc == 0


# -- exit codes -------------------------------------------------------------------------

def test_exit_code_usage(capsys):
    assert run(capsys, "weight")[0] == 2
    assert run(capsys, "weight", "--rng", "x", "--bogus")[0] == 2
    assert run(capsys, "nosuch")[0] == 2


def test_exit_code_missing_file(capsys, tmp_path):
    rc, _, err = run(capsys, "weight", "--rng", str(tmp_path / "missing.rng"))
    assert rc == 2 and err.startswith("error: ")


def test_exit_code_bad_file(capsys, tmp_path):
    p = tmp_path / "bad.rng"
    p.write_text("this is not an rng\n")
    assert run(capsys, "verify", "--rng", str(p))[0] == 2


def test_exit_code_precondition(capsys, emit):
    # a zero-multiplication rng is not an irng
    assert run(capsys, "unit", "--rng", emit("zero2"))[0] == 2
    assert run(capsys, "catalog", "emit", "nope")[0] == 2


def test_exit_code_bad_subset(capsys, emit):
    # in the chain semilattice S{0}S = {0}, so X = {0} violates S = SX
    assert run(capsys, "x0", "--semigroup", emit("CH3"), "--X", "0")[0] == 2


def test_exit_code_verification_failure(capsys, monkeypatch):
    import irng.cli
    monkeypatch.setattr(irng.cli, "verify_certificate", lambda cert: False)
    rc, out, _ = run(capsys, "thm3-free", "--n", "2")
    assert rc == 1 and out.splitlines()[-1] == "certificates: 0/2 verified"


# -- determinism and round trip ------------------------------------------------------------

@pytest.mark.parametrize("argv", [
    ["catalog", "list"],
    ["thm3-free", "--n", "3", "--sides", "LRL", "--show"],
])
def test_same_bytes_twice(capsys, argv):
    a = run(capsys, *argv)
    b = run(capsys, *argv)
    assert a == b and a[0] == 0


def test_weight_output_independent_of_workers(capsys, emit):
    path = emit("m2z3")
    a = run(capsys, "weight", "--rng", path, "--verbose")
    b = run(capsys, "weight", "--rng", path, "--verbose", "--workers", "2")
    assert a == b


@pytest.mark.parametrize("name", catalog.catalog_names())
def test_catalog_emit_round_trip(capsys, tmp_path, name):
    rc, text, _ = run(capsys, "catalog", "emit", name)
    assert rc == 0
    path = tmp_path / "out.txt"
    path.write_text(text)
    entry = catalog.CATALOG[name]
    obj = load_rng(str(path)) if entry.kind == "rng" else load_semigroup(str(path))
    ref = entry.build()
    assert obj == ref and obj.name == ref.name
    if entry.kind == "rng":
        assert parse_rng(text).constants == ref.constants
