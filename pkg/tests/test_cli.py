# tests/test_cli.py
import pytest

from cli import main
from services.report import EXIT_ERROR, EXIT_SAT, EXIT_UNKNOWN, EXIT_UNSAT, EXIT_USAGE, UNSAT_MESSAGE
from services.run_manager import compile_source

TOY = "nv = nu+1;\nassert(nv==2);\n"


def test_toy_program(spec_file, capsys):
    assert main([spec_file(TOY)]) == EXIT_SAT
    assert capsys.readouterr().out == "nu=1;\n"


def test_unsat_exit_code(spec_file, capsys):
    assert main([spec_file("assert(nu * 2 == 1);")]) == EXIT_UNSAT
    assert capsys.readouterr().out == UNSAT_MESSAGE + "\n"


def test_error_goes_to_stderr(spec_file, capsys):
    assert main([spec_file("nA = 4 / 2;")]) == EXIT_ERROR
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "lexer error at 1:8" in captured.err


def test_missing_file(tmp_path, capsys):
    assert main([str(tmp_path / "nope.urs")]) == EXIT_ERROR
    assert "cannot read" in capsys.readouterr().err


@pytest.mark.parametrize("flags", [["--width", "0"], ["--limit", "0", "--all-models"], ["--timeout", "-1"]])
def test_invalid_option_values_are_usage_errors(spec_file, capsys, flags):
    assert main([spec_file(TOY), *flags]) == EXIT_USAGE
    assert "error:" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [[], ["x.urs", "--width", "eight"], ["x.urs", "--engine", "minisat"]])
def test_argparse_errors_exit_with_usage(argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == EXIT_USAGE


def test_all_models(spec_file, capsys):
    path = spec_file("assert(nX < 3);")
    assert main([path, "--width", "2", "--all-models"]) == EXIT_SAT
    out = capsys.readouterr().out
    assert out.count("Solution ") == 3
    assert out.endswith("Found 3 solution(s).\n")

    assert main([path, "--width", "2", "--all-models", "--limit", "1"]) == EXIT_SAT
    assert capsys.readouterr().out.endswith("Found 1 solution(s). (search stopped early)\n")


def test_dimacs_file_is_byte_identical_across_runs(spec_file, tmp_path, capsys):
    path = spec_file(TOY)
    first, second = tmp_path / "a.cnf", tmp_path / "b.cnf"
    assert main([path, "--dimacs", str(first)]) == EXIT_SAT
    assert main([path, "--dimacs", str(second)]) == EXIT_SAT
    assert first.read_bytes() == second.read_bytes()
    from cnf.dimacs import write_dimacs

    assert first.read_text() == write_dimacs(compile_source(TOY, 8).cnf)
    assert capsys.readouterr().out == ""


def test_dimacs_to_stdout_with_names(spec_file, capsys):
    assert main([spec_file(TOY), "--dimacs", "-", "--names", "--width", "4"]) == EXIT_SAT
    out = capsys.readouterr().out
    assert out.startswith("c name nu 1 2 3 4\np cnf ")


def test_stats(spec_file, capsys):
    assert main([spec_file(TOY), "--stats"]) == EXIT_SAT
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "nu=1;"
    assert any(line.startswith("c variables ") for line in lines)
    assert "c engine cdcl" in lines


def test_prints_come_before_the_model(spec_file, capsys):
    assert main([spec_file("nA = 3; print nA * 2; assert(nB == nA);")]) == EXIT_SAT
    assert capsys.readouterr().out == "nA * 2=6;\nnB=3;\n"


def test_external_solver_flag(spec_file, fake_solver, capsys):
    assert main([spec_file(TOY), "--width", "3", "--solver", fake_solver()]) == EXIT_SAT
    assert capsys.readouterr().out == "nu=1;\n"


def test_timeout_reports_unknown(spec_file, fake_solver, capsys):
    assert main([spec_file(TOY), "--solver", fake_solver("sleep"), "--timeout", "0.5"]) == EXIT_UNKNOWN
    assert "No answer" in capsys.readouterr().out


def test_record_stores_a_job(spec_file, db_session, capsys):
    from database.models import SolveJob

    assert main([spec_file("// Toy increment\n" + TOY), "--record"]) == EXIT_SAT
    job = db_session.query(SolveJob).order_by(SolveJob.id.desc()).first()
    assert job is not None
    assert job.status == "sat"
    assert job.title == "Toy increment"
    assert "nu=1;" in job.report
    assert job.finished_at is not None
