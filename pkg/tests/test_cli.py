import subprocess
import sys

import pytest

from polyconj import (
    SolutionFile,
    SspInstance,
    conjugate,
    make_context,
    parse_instance,
    serialize_instance,
    subset_sum,
    twisted_sum,
)
from polyconj.cli import run
from polyconj.formats import CertificateFile, ConjugacyInstance, TsspInstance


@pytest.fixture
def write(tmp_path):
    def _write(name, obj):
        path = tmp_path / name
        path.write_text(serialize_instance(obj) if not isinstance(obj, str) else obj)
        return str(path)

    return _write


def run_cli(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSolve:
    def test_tssp_dp_solvable(self, write, capsys):
        path = write("i.tssp", TsspInstance((3, 5), -2))
        code, out, _ = run_cli(capsys, "solve", "tssp", path, "--method", "dp")
        assert code == 0
        sol = parse_instance(out)
        assert isinstance(sol, SolutionFile)
        assert twisted_sum((3, 5), sol.values) == -2

    def test_tssp_unsolvable(self, write, capsys):
        path = write("i.tssp", TsspInstance((3, 5), 4))
        code, out, _ = run_cli(capsys, "solve", "tssp", path)
        assert code == 1 and out == ""

    @pytest.mark.parametrize("method", ["brute", "dp"])
    def test_ssp_both_methods(self, write, capsys, method):
        path = write("i.ssp", SspInstance((3, 5, 7), 8))
        code, out, _ = run_cli(capsys, "solve", "ssp", path, "--method", method)
        assert code == 0
        assert subset_sum((3, 5, 7), parse_instance(out).values) == 8

    def test_ssp_search_wrapper(self, write, capsys):
        path = write("i.ssp", SspInstance((3, 5, 7), 8))
        code, out, _ = run_cli(capsys, "solve", "ssp", path, "--search")
        assert code == 0
        assert parse_instance(out).values == (1, 1, 0)

    def test_search_rejected_for_tssp(self, write, capsys):
        path = write("i.tssp", TsspInstance((3, 5), -2))
        code, _, err = run_cli(capsys, "solve", "tssp", path, "--search")
        assert code == 2 and "search" in err

    def test_sspp_dp_route(self, write, capsys):
        from polyconj import SspPrimeInstance

        path = write("i.sspp", SspPrimeInstance((3, 5), 2))
        code, out, _ = run_cli(capsys, "solve", "sspp", path, "--method", "dp")
        assert code == 0
        values = parse_instance(out).values
        assert sum(k * x for k, x in zip((3, 5), values)) == 2

    def test_kind_mismatch(self, write, capsys):
        path = write("i.ssp", TsspInstance((3, 5), -2))
        code, _, err = run_cli(capsys, "solve", "ssp", path)
        assert code == 2 and "expected" in err

    def test_max_cells_flag(self, write, capsys):
        path = write("i.tssp", TsspInstance((10**9, 10**9), 0))
        code, _, err = run_cli(capsys, "solve", "tssp", path, "--max-cells", "100")
        assert code == 2 and "cap" in err
        code, out, _ = run_cli(
            capsys, "solve", "tssp", path, "--max-cells", str(10**11)
        )
        assert code == 0 and parse_instance(out).values == (0, 0)


class TestReduceAndPullback:
    def test_reduce_ssp_to_conj(self, write, capsys):
        path = write("i.ssp", SspInstance((3, 5, 7), 8))
        code, out, _ = run_cli(capsys, "reduce", "ssp-to-conj", path)
        assert code == 0
        conj = parse_instance(out)
        assert isinstance(conj, ConjugacyInstance)
        assert conj.ctx.n == 12  # 3 -> 6 signed -> 12 twisted coefficients

    def test_full_pipeline_recovers_subset(self, write, capsys, tmp_path):
        inst = SspInstance((3, 5, 7), 8)
        ssp_path = write("i.ssp", inst)
        code, conj_text, _ = run_cli(capsys, "reduce", "ssp-to-conj", ssp_path)
        assert code == 0
        conj_path = tmp_path / "i.conj"
        conj_path.write_text(conj_text)

        code, cert_text, _ = run_cli(capsys, "conj", "search", str(conj_path))
        assert code == 0
        cert_path = tmp_path / "i.cert"
        cert_path.write_text(cert_text)

        code, sol_text, _ = run_cli(capsys, "pullback", "conj-to-ssp", ssp_path, str(cert_path))
        assert code == 0
        bits = parse_instance(sol_text).values
        assert subset_sum((3, 5, 7), bits) == 8

    def test_intermediate_hops(self, write, capsys, tmp_path):
        ssp_path = write("i.ssp", SspInstance((2, 6), 8))
        code, sspp_text, _ = run_cli(capsys, "reduce", "ssp-to-sspp", ssp_path)
        assert code == 0
        sspp_path = tmp_path / "i.sspp"
        sspp_path.write_text(sspp_text)

        code, tssp_text, _ = run_cli(capsys, "reduce", "sspp-to-tssp", str(sspp_path))
        assert code == 0
        tssp_path = tmp_path / "i.tssp"
        tssp_path.write_text(tssp_text)

        code, sol_text, _ = run_cli(capsys, "solve", "tssp", str(tssp_path))
        assert code == 0
        sol_path = tmp_path / "assign.sol"
        sol_path.write_text(sol_text)

        code, values_text, _ = run_cli(
            capsys, "pullback", "tssp-to-sspp", str(sspp_path), str(sol_path)
        )
        assert code == 0
        values_path = tmp_path / "values.sol"
        values_path.write_text(values_text)

        code, bits_text, _ = run_cli(
            capsys, "pullback", "sspp-to-ssp", ssp_path, str(values_path)
        )
        assert code == 0
        assert subset_sum((2, 6), parse_instance(bits_text).values) == 8

    def test_pullback_rejects_bogus_witness(self, write, capsys):
        ssp_path = write("i.ssp", SspInstance((3, 5), 8))
        sol_path = write("w.sol", SolutionFile((0, 0, 0, 0)))
        code, _, err = run_cli(capsys, "pullback", "sspp-to-ssp", ssp_path, sol_path)
        assert code == 2 and "error" in err

    def test_pipeline_over_generated_instances(self, capsys, tmp_path):
        # every solvable generated instance survives the whole command chain
        from polyconj import GenSpec, generate

        for seed in range(25):
            inst = generate(GenSpec(kind="ssp", n=1 + seed % 5, bound=9, seed=seed, solvable=True))
            ssp_path = tmp_path / f"{seed}.ssp"
            ssp_path.write_text(serialize_instance(inst))

            code, conj_text, _ = run_cli(capsys, "reduce", "ssp-to-conj", str(ssp_path))
            assert code == 0
            conj_path = tmp_path / f"{seed}.conj"
            conj_path.write_text(conj_text)

            code, cert_text, _ = run_cli(capsys, "conj", "search", str(conj_path))
            assert code == 0
            cert_path = tmp_path / f"{seed}.cert"
            cert_path.write_text(cert_text)

            code, sol_text, _ = run_cli(
                capsys, "pullback", "conj-to-ssp", str(ssp_path), str(cert_path)
            )
            assert code == 0
            bits = parse_instance(sol_text).values
            assert subset_sum(inst.coefficients, bits) == inst.target


class TestConjCommands:
    def test_decide_yes_no(self, write, capsys):
        ctx = make_context(1)
        yes = write("y.conj", ConjugacyInstance(ctx, (0, 0, 5), (-5, 0, 5)))
        no = write("n.conj", ConjugacyInstance(ctx, (0, 0, 5), (-4, 0, 5)))
        assert run_cli(capsys, "conj", "decide", yes)[0] == 0
        assert run_cli(capsys, "conj", "decide", no)[0] == 1

    def test_search_and_verify(self, write, capsys, tmp_path):
        ctx = make_context(1)
        inst = ConjugacyInstance(ctx, (0, 0, 5), (-5, 0, 5))
        path = write("i.conj", inst)
        code, cert_text, _ = run_cli(capsys, "conj", "search", path)
        assert code == 0
        cert = parse_instance(cert_text)
        assert isinstance(cert, CertificateFile)
        assert conjugate(ctx, cert.certificate.w, inst.u) == inst.v

        cert_path = tmp_path / "w.cert"
        cert_path.write_text(cert_text)
        assert run_cli(capsys, "conj", "verify", path, str(cert_path))[0] == 0

        bad = tmp_path / "bad.cert"
        bad.write_text("cert\n1\n0 0 0\n")
        assert run_cli(capsys, "conj", "verify", path, str(bad))[0] == 1

    def test_search_not_conjugate(self, write, capsys):
        ctx = make_context(1)
        path = write("n.conj", ConjugacyInstance(ctx, (0, 0, 5), (-4, 0, 5)))
        code, out, _ = run_cli(capsys, "conj", "search", path)
        assert code == 1 and out == ""

    def test_verify_needs_certificate_argument(self, write, capsys):
        ctx = make_context(1)
        path = write("i.conj", ConjugacyInstance(ctx, (0, 0, 5), (-5, 0, 5)))
        code, _, err = run_cli(capsys, "conj", "verify", path)
        assert code == 2 and "cert" in err


class TestGen:
    def test_deterministic(self, capsys):
        first = run_cli(capsys, "gen", "tssp", "--n", "5", "--bound", "100", "--seed", "1", "--solvable")
        second = run_cli(capsys, "gen", "tssp", "--n", "5", "--bound", "100", "--seed", "1", "--solvable")
        assert first == second and first[0] == 0

    def test_solvable_bias(self, capsys):
        from polyconj import solve_tssp_brute

        code, out, _ = run_cli(
            capsys, "gen", "tssp", "--n", "5", "--bound", "100", "--seed", "1", "--solvable"
        )
        assert code == 0
        inst = parse_instance(out)
        assert solve_tssp_brute(inst) is not None

    def test_unbiased_parses(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "ssp", "--n", "3", "--bound", "10", "--seed", "7")
        assert code == 0
        assert isinstance(parse_instance(out), SspInstance)


class TestErrorsAndUsage:
    def test_parse_error_exit_code(self, tmp_path, capsys):
        bad = tmp_path / "bad.ssp"
        bad.write_text("ssp\n2\n3 5\n")
        code, _, err = run_cli(capsys, "solve", "ssp", str(bad))
        assert code == 2 and "line" in err

    def test_missing_file(self, capsys):
        code, _, err = run_cli(capsys, "solve", "ssp", "/nonexistent/i.ssp")
        assert code == 2

    def test_usage_error(self, capsys):
        assert run_cli(capsys, "frobnicate")[0] == 2

    def test_help_exits_zero(self, capsys):
        assert run_cli(capsys, "--help")[0] == 0


class TestBenchCommand:
    def test_scaling_suite_prints_table(self, capsys):
        code = run(["bench", "--suite", "scaling", "--seed", "5"])
        out = capsys.readouterr().out
        assert code == 0
        assert "S" in out and "states" in out and "seconds" in out
        assert "unary-scaled" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "polyconj", "gen", "tssp", "--n", "2", "--bound", "5", "--seed", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("tssp\n2\n")
