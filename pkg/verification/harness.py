# verification/harness.py
import logging
import os
import tomllib
from typing import Literal

from pydantic import BaseModel, Field, ValidationError

from core.errors import CorpusError
from core.settings import CORPUS_DIR
from services.report import decode_model
from services.run_manager import RunConfig, RunReport, compile_source, execute_run
from solvers.engine import solve_cnf
from solvers.outcome import Budget, SolveStatus, UNLIMITED
from verification.fragments import AssertionKind, Mutation, compose, fragments_from_program
from verification.fragments import apply_knobs as rewrite_knobs
from verification.instances import clique_instance, vertex_cover_instance
from verification.oracles import all_graphs, complement, oracle_clique, oracle_vertex_cover

logger = logging.getLogger("Corpus-Harness")

SPEC_FILE = "spec.urs"
MANIFEST_FILE = "expect.toml"


# --- 1. MANIFEST SCHEMAS ---
class Expectation(BaseModel):
    status: Literal["SAT", "UNSAT", "UNKNOWN"]
    model: list[str] | None = None
    prints: list[str] = []


class MutationSpec(BaseModel):
    find: str
    replace: str


class ReductionSpec(BaseModel):
    kind: AssertionKind = "full"
    instance: list[str]
    source: list[str]
    reduction: list[str]
    link: list[str]
    target: list[str]
    source_var: str
    target_var: str
    link_var: str
    legality: list[str] = []
    decode: list[str] = []
    mutations: list[MutationSpec] = []


class CaseManifest(BaseModel):
    id: str
    role: Literal["solver", "reduction-solver", "verification"]
    width: int = Field(8, ge=1)
    summary: str
    reference: str
    slow: bool = False
    derived_from: str | None = None
    knobs: dict[str, int] = {}
    reference_knobs: dict[str, int] = {}
    # width the reference-scale size arithmetic needs without wrapping
    reference_width: int | None = Field(None, ge=1)
    reference_sizes: dict[str, int] = {}
    expect: Expectation
    reduction: ReductionSpec | None = None


class CorpusCase(BaseModel):
    manifest: CaseManifest
    directory: str
    spec_text: str

    @property
    def id(self) -> str:
        return self.manifest.id


class CaseResult(BaseModel):
    case_id: str
    passed: bool
    report: RunReport
    mismatches: list[str] = []


class ReductionVerdict(BaseModel):
    case_id: str
    verified: bool
    status: str
    knobs: dict[str, int] = {}
    # array name -> {cell display name -> value}
    counterexample: dict[str, dict[str, bool | int]] = {}
    num_vars: int = 0
    num_clauses: int = 0


# --- 2. LOADING ---
def _read_manifest(directory: str) -> CaseManifest:
    path = os.path.join(directory, MANIFEST_FILE)
    try:
        with open(path, "rb") as handle:
            data = tomllib.load(handle)
    except OSError as e:
        raise CorpusError(f"cannot read manifest {path}: {e.strerror}")
    except tomllib.TOMLDecodeError as e:
        raise CorpusError(f"malformed manifest {path}: {e}")
    try:
        return CaseManifest(**data)
    except ValidationError as e:
        raise CorpusError(f"invalid manifest {path}: {e.errors()[0]['msg']}")


def load_corpus(corpus_dir: str = CORPUS_DIR) -> list[CorpusCase]:
    """Every case directory under `corpus_dir`, sorted by id. Derived cases borrow their parent's program."""
    if not os.path.isdir(corpus_dir):
        raise CorpusError(f"corpus directory not found: {corpus_dir}")

    manifests: dict[str, tuple[CaseManifest, str]] = {}
    for entry in sorted(os.listdir(corpus_dir)):
        directory = os.path.join(corpus_dir, entry)
        if os.path.isfile(os.path.join(directory, MANIFEST_FILE)):
            manifest = _read_manifest(directory)
            if manifest.id != entry:
                raise CorpusError(f"case directory '{entry}' declares id '{manifest.id}'")
            manifests[manifest.id] = (manifest, directory)

    cases = []
    for case_id, (manifest, directory) in manifests.items():
        source_dir = directory
        if manifest.derived_from:
            if manifest.derived_from not in manifests:
                raise CorpusError(f"case '{case_id}' derives from unknown case '{manifest.derived_from}'")
            source_dir = manifests[manifest.derived_from][1]
        try:
            with open(os.path.join(source_dir, SPEC_FILE), encoding="utf-8") as handle:
                spec_text = handle.read()
        except OSError as e:
            raise CorpusError(f"case '{case_id}' has no readable {SPEC_FILE}: {e.strerror}")
        cases.append(CorpusCase(manifest=manifest, directory=directory, spec_text=spec_text))

    logger.info(f"[Corpus] loaded {len(cases)} cases from {corpus_dir}")
    return cases


def get_case(case_id: str, corpus_dir: str = CORPUS_DIR) -> CorpusCase:
    for case in load_corpus(corpus_dir):
        if case.id == case_id:
            return case
    raise CorpusError(f"unknown corpus case '{case_id}'")


# --- 3. RUNNING ---
def case_program(case: CorpusCase, knobs: dict[str, int] | None = None,
                 kind: AssertionKind | None = None) -> str:
    """
    The program a case runs. Reduction cases are recomposed from their
    fragments; others are the file with its size knobs rewritten.
    """
    manifest = case.manifest
    knobs = {**manifest.knobs, **(knobs or {})}
    if manifest.reduction is None:
        return rewrite_knobs(case.spec_text, knobs) if knobs else case.spec_text

    spec = manifest.reduction
    fragments = fragments_from_program(
        case.spec_text,
        {"instance": spec.instance, "source": spec.source, "reduction": spec.reduction,
         "link": spec.link, "target": spec.target},
        spec.source_var, spec.target_var, spec.link_var, spec.legality)
    mutations = [Mutation(m.find, m.replace) for m in spec.mutations]
    return compose(fragments, kind or spec.kind, knobs, mutations)


def case_width(case: CorpusCase, knobs: dict[str, int] | None = None) -> int:
    """Word width for a run at `knobs`; the reference scale may need a wider one than the default."""
    manifest = case.manifest
    merged = {**manifest.knobs, **(knobs or {})}
    reference = {**manifest.knobs, **manifest.reference_knobs}
    if manifest.reference_width and manifest.reference_knobs and merged == reference:
        return max(manifest.width, manifest.reference_width)
    return manifest.width


def run_case(case: CorpusCase, knobs: dict[str, int] | None = None, engine: str = "cdcl",
             solver_command: str | None = None, timeout: float | None = None) -> CaseResult:
    """Runs a case through the pipeline and compares status, model lines and prints with its manifest."""
    config = RunConfig(spec_text=case_program(case, knobs), width=case_width(case, knobs), engine=engine,
                       solver_command=solver_command, timeout=timeout)
    report = execute_run(config)

    expect = case.manifest.expect
    mismatches = []
    if report.status != expect.status:
        mismatches.append(f"status {report.status}, expected {expect.status}")
    if expect.model is not None and report.status == "SAT" and report.models[0] != expect.model:
        mismatches.append(f"model {report.models[0]}, expected {expect.model}")
    if expect.prints and report.prints != expect.prints:
        mismatches.append(f"prints {report.prints}, expected {expect.prints}")

    passed = not mismatches
    log = logger.info if passed else logger.error
    log(f"[Corpus] {case.id}: {'pass' if passed else 'FAIL ' + '; '.join(mismatches)}")
    return CaseResult(case_id=case.id, passed=passed, report=report, mismatches=mismatches)


def _base_name(display: str) -> str:
    return display.split("[", 1)[0]


def verify_reduction(case: CorpusCase, knobs: dict[str, int] | None = None,
                     kind: AssertionKind | None = None, budget: Budget = UNLIMITED,
                     engine: str = "cdcl", solver_command: str | None = None) -> ReductionVerdict:
    """
    Bounded check of a reduction for every instance of the knob-given size.
    UNSAT verifies it; a model is decoded into the arrays the manifest lists,
    which is the counterexample instance with both certificates.
    """
    if case.manifest.role != "verification" or case.manifest.reduction is None:
        raise CorpusError(f"case '{case.id}' is not a reduction verification")

    compiled = compile_source(case_program(case, knobs, kind), case_width(case, knobs))
    outcome = solve_cnf(compiled.cnf, engine, solver_command, budget)
    verdict = ReductionVerdict(case_id=case.id, verified=outcome.status is SolveStatus.UNSAT,
                               status=outcome.status.value, knobs={**case.manifest.knobs, **(knobs or {})},
                               num_vars=compiled.cnf.num_vars, num_clauses=compiled.cnf.num_clauses)

    if outcome.status is SolveStatus.SAT:
        wanted = case.manifest.reduction.decode
        for name, value in decode_model(compiled.result.registry, outcome.model).items():
            base = _base_name(name)
            if not wanted or base in wanted:
                verdict.counterexample.setdefault(base, {})[name] = value
        logger.warning(f"[Verify] {case.id}: counterexample found over {sorted(verdict.counterexample)}")
    else:
        logger.info(f"[Verify] {case.id}: {outcome.status.value} "
                    f"({compiled.cnf.num_vars} vars / {compiled.cnf.num_clauses} clauses)")
    return verdict


# --- 4. ORACLE CROSS-CHECK ---
def oracle_reduction_equisat(n: int, clique_case: CorpusCase, reduction_case: CorpusCase,
                             cover_case: CorpusCase | None = None) -> list[str]:
    """
    For every graph on n vertices and every k in 0..n, checks that the clique
    oracle, the complemented vertex-cover oracle, the clique solver program and
    the clique-to-cover reduction program all agree. With `cover_case` the
    cover-to-clique program also runs on the complement with l = n - k.
    Returns the mismatches.
    """
    clique_verifier = _verifier_tail(clique_case, "Certificate verification for k-clique")
    reduction_tail = _verifier_tail(reduction_case, "Reduction from k-clique to l-vertexCover")
    cover_tail = _verifier_tail(cover_case, "Reduction from l-vertexCover to k-clique") if cover_case else None

    mismatches = []
    for graph in all_graphs(n):
        for k in range(n + 1):
            expected = oracle_clique(graph, n, k)
            if oracle_vertex_cover(complement(graph, n), n, n - k) != expected:
                mismatches.append(f"oracles disagree on {sorted(graph)}, k={k}")
                continue
            runs = [("clique solver", clique_instance(graph, n, k) + "\n" + clique_verifier),
                    ("reduction", clique_instance(graph, n, k) + "\n" + reduction_tail)]
            if cover_tail:
                runs.append(("cover reduction",
                             vertex_cover_instance(complement(graph, n), n, n - k) + "\n" + cover_tail))
            for label, program in runs:
                compiled = compile_source(program, clique_case.manifest.width)
                answer = solve_cnf(compiled.cnf).status is SolveStatus.SAT
                if answer != expected:
                    mismatches.append(f"{label} says {answer} on {sorted(graph)}, k={k}; oracle says {expected}")
    logger.info(f"[Oracle] n={n}: {len(mismatches)} mismatches")
    return mismatches


def _verifier_tail(case: CorpusCase, first_section: str) -> str:
    """Program text from `first_section`'s header to the end, the instance part dropped."""
    text = case.spec_text
    marker = text.find(first_section)
    if marker < 0:
        raise CorpusError(f"case '{case.id}' has no section '{first_section}'")
    return text[text.rfind("\n", 0, marker) + 1:]
