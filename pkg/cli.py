# cli.py
import argparse
import logging
import sys
from datetime import datetime, timezone

from pydantic import ValidationError

from core.logging_setup import configure_logging
from core.settings import DEFAULT_ENGINE, DEFAULT_SOLVER_COMMAND, DEFAULT_TIMEOUT, DEFAULT_WIDTH, LOG_LEVEL
from services.report import EXIT_ERROR, EXIT_USAGE
from services.run_manager import RunConfig, RunReport, run
from solvers.engine import ENGINES

logger = logging.getLogger("URSA-CLI")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ursa",
        description="Solve a constraint program: undefined variables are unknowns, "
                    "assert() states what they must satisfy.",
        epilog="Exit codes: 0 SAT, 1 error, 2 usage, 20 UNSAT, 30 UNKNOWN.",
    )
    parser.add_argument("spec", help="program file (.urs)")
    parser.add_argument("--width", type=int, default=DEFAULT_WIDTH,
                        help=f"bits per natural (default {DEFAULT_WIDTH})")
    parser.add_argument("--all-models", action="store_true", help="list every model, projected on the unknowns")
    parser.add_argument("--limit", type=int, default=None, help="stop --all-models after N models")
    parser.add_argument("--dimacs", metavar="PATH", default=None,
                        help="only write the CNF in DIMACS format ('-' for stdout)")
    parser.add_argument("--names", action="store_true", help="add 'c name' comments to --dimacs output")
    parser.add_argument("--solver", metavar="CMD", default=DEFAULT_SOLVER_COMMAND,
                        help="external DIMACS solver, run as 'CMD file.cnf' (env URSA_SOLVER)")
    parser.add_argument("--engine", choices=ENGINES, default=DEFAULT_ENGINE,
                        help="in-process engine when no --solver is given")
    parser.add_argument("--timeout", type=float, default=DEFAULT_TIMEOUT, metavar="SECS",
                        help="search budget; running out reports UNKNOWN")
    parser.add_argument("--stats", action="store_true", help="print variable/clause counts and solver statistics")
    parser.add_argument("--polarity", action="store_true", help="one-sided Tseitin definitions (smaller CNF)")
    parser.add_argument("--record", action="store_true", help="store the run in the job database")
    parser.add_argument("--log-level", default=LOG_LEVEL, help="logging level for stderr (default from LOG_LEVEL)")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    mode = "dimacs-only" if args.dimacs is not None else "all-models" if args.all_models else "solve"
    return RunConfig(
        spec_path=args.spec,
        width=args.width,
        mode=mode,
        solver_command=args.solver or None,
        engine=args.engine,
        model_limit=args.limit,
        timeout=args.timeout,
        dimacs_path=args.dimacs,
        include_names=args.names,
        stats=args.stats,
        polarity=args.polarity,
    )


def record_run(config: RunConfig, report: RunReport, spec_text: str):
    """Stores a finished CLI run as a job row, the same shape the service queue produces."""
    from database.models import SolveJob
    from database.session import Base, SessionLocal, engine
    from services.job_manager import JOB_STATUS
    from services.utils import get_smart_title

    Base.metadata.create_all(bind=engine)
    db = SessionLocal()
    try:
        job = SolveJob(title=get_smart_title(spec_text), spec_text=spec_text, width=config.width,
                       mode=config.mode, model_limit=config.model_limit, timeout=config.timeout,
                       status=JOB_STATUS[report.status], report=report.render(config.mode, True),
                       num_vars=report.num_vars, num_clauses=report.num_clauses, error=report.error,
                       finished_at=datetime.now(timezone.utc))
        db.add(job)
        db.commit()
        logger.info(f"[CLI] run recorded as Job {job.id}")
    except Exception as e:
        db.rollback()
        logger.error(f"[CLI] could not record the run: {e}")
    finally:
        db.close()


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level, sys.stderr)

    try:
        config = config_from_args(args)
    except ValidationError as e:
        problems = "; ".join(f"{'.'.join(map(str, err['loc'])) or 'options'}: {err['msg']}" for err in e.errors())
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {problems}", file=sys.stderr)
        return EXIT_USAGE

    report = run(config)
    if report.status == "ERROR":
        print(report.error, file=sys.stderr)
    else:
        sys.stdout.write(report.render(config.mode, config.stats))

    if args.record:
        try:
            with open(config.spec_path, encoding="utf-8") as handle:
                spec_text = handle.read()
        except OSError:
            spec_text = ""
        if spec_text:
            record_run(config, report, spec_text)

    return report.exit_code if report.status != "ERROR" else EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
