# tests/test_corpus.py
import pytest

from cnf.dimacs import write_dimacs
from core.errors import CorpusError
from interpreter.executor import execute
from language.parser import parse_source
from services.report import decode_model
from services.run_manager import compile_source
from solvers.enumerate import enumerate_models
from symbolic.formula import TRUE
from verification.counts import max_output_clauses, sat_to_3sat_sizes, t_clauses
from verification.fragments import (
    Mutation, apply_knobs, apply_mutations, assertion_text, compose, fragments_from_program, split_sections,
)
from verification.harness import (
    case_program, case_width, get_case, load_corpus, oracle_reduction_equisat, run_case, verify_reduction,
)
from verification.instances import clique_instance, graph_from_values, members_from_values, vertex_cover_instance
from verification.oracles import (
    all_graphs, complement, is_clique, is_vertex_cover, literal_clauses, oracle_3colouring, oracle_clique,
    oracle_sat, oracle_vertex_cover,
)

FAST_CASES = ["toy-increment", "clique-check", "clique-solve", "vertex-cover-solve", "clique-to-cover",
              "cover-to-clique", "verify-clique-cover", "clique-cover-xor-pitfall", "verify-clique-cover-broken"]
SLOW_CASES = ["lcg-seed", "verify-clique-cover-large", "verify-3sat-3colouring", "verify-sat-3sat"]


# --- LOADING ---
def test_corpus_lists_every_case(corpus):
    assert sorted(corpus) == sorted(FAST_CASES + SLOW_CASES)
    assert all(corpus[c].manifest.slow for c in SLOW_CASES)
    assert not any(corpus[c].manifest.slow for c in FAST_CASES)


def test_derived_cases_share_their_parents_program(corpus):
    parent = corpus["verify-clique-cover"]
    for case_id in ("verify-clique-cover-large", "clique-cover-xor-pitfall", "verify-clique-cover-broken"):
        assert corpus[case_id].spec_text == parent.spec_text


def test_get_case_unknown():
    with pytest.raises(CorpusError):
        get_case("no-such-case")


def test_load_corpus_rejects_bad_layouts(tmp_path):
    with pytest.raises(CorpusError):
        load_corpus(str(tmp_path / "missing"))

    case_dir = tmp_path / "mismatch"
    case_dir.mkdir()
    (case_dir / "expect.toml").write_text(
        'id = "other"\nrole = "solver"\nsummary = "s"\nreference = "r"\n[expect]\nstatus = "SAT"\n')
    (case_dir / "spec.urs").write_text("assert(true);\n")
    with pytest.raises(CorpusError):
        load_corpus(str(tmp_path))

    (case_dir / "expect.toml").write_text('id = "mismatch"\nrole = "solver"\n')
    with pytest.raises(CorpusError):
        load_corpus(str(tmp_path))


# --- RUNNING CASES ---
@pytest.mark.parametrize("case_id", FAST_CASES)
def test_fast_cases_pass(corpus, case_id):
    result = run_case(corpus[case_id])
    assert result.passed, result.mismatches


@pytest.mark.slow
@pytest.mark.parametrize("case_id", SLOW_CASES)
def test_slow_cases_pass(corpus, case_id):
    result = run_case(corpus[case_id])
    assert result.passed, result.mismatches


def test_recomposed_program_keeps_the_original_assertion(corpus):
    program = case_program(corpus["verify-clique-cover"])
    assert program.endswith("assert((bClique ^^ bVertexCover) && bCertificateReduction);\n")
    assert program.count("assert(") == 1
    assert "nV = 6;" in program


def test_knob_overrides_reach_the_instance(corpus):
    program = case_program(corpus["verify-clique-cover"], {"nV": 4, "nK_clique": 3})
    assert "nV = 4;" in program and "nK_clique = 3;" in program


def test_lcg_seed_reexecutes_forward(corpus):
    program = "nseed = 2025;\n" + corpus["lcg-seed"].spec_text
    result = compile_source(program, corpus["lcg-seed"].manifest.width).result
    assert result.assertion == TRUE
    assert result.value("nx") == 2365677197


def test_solver_programs_answer_like_the_oracle(corpus):
    graph = frozenset({(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (2, 4), (3, 5)})
    assert oracle_clique(graph, 6, 4)
    assert not oracle_clique(graph, 6, 5)
    assert oracle_vertex_cover(complement(graph, 6), 6, 2)


def _projection(compiled, prefix: str) -> list[int]:
    return [v for name, ids in compiled.cnf.name_map.items() if name.startswith(prefix) for v in ids]


def test_clique_solve_models_include_the_known_clique(corpus):
    case = corpus["clique-solve"]
    compiled = compile_source(case_program(case), case_width(case))
    enumeration = enumerate_models(compiled.cnf, projection=_projection(compiled, "bBelongsClique["))
    assert enumeration.complete
    cliques = [members_from_values(decode_model(compiled.result.registry, model), "bBelongsClique", 6)
               for model in enumeration.models]
    assert [0, 1, 2, 3] in cliques
    assert len(cliques) == len(set(map(tuple, cliques)))


@pytest.mark.parametrize("case_id", FAST_CASES)
def test_runs_are_deterministic(corpus, case_id):
    case = corpus[case_id]
    first, second = run_case(case).report, run_case(case).report
    assert first.status == second.status
    assert first.models[:1] == second.models[:1]
    dimacs = [write_dimacs(compile_source(case_program(case), case_width(case)).cnf) for _ in range(2)]
    assert dimacs[0] == dimacs[1]


# reduction checks shrunk so the stand-in solver finishes quickly
EXTERNAL_KNOBS = {"verify-clique-cover": {"nV": 3, "nK_clique": 2},
                  "clique-cover-xor-pitfall": {"nV": 3, "nK_clique": 2}}


@pytest.mark.parametrize("case_id", FAST_CASES)
def test_external_solver_agrees_with_the_embedded_one(corpus, fake_solver, case_id):
    case, knobs = corpus[case_id], EXTERNAL_KNOBS.get(case_id)
    embedded = run_case(case, knobs).report
    external = run_case(case, knobs, solver_command=fake_solver()).report
    assert external.status == embedded.status


# --- REDUCTION VERIFICATION ---
def test_clique_cover_reduction_is_verified(corpus):
    verdict = verify_reduction(corpus["verify-clique-cover"], {"nV": 4, "nK_clique": 2})
    assert verdict.verified and verdict.status == "UNSAT"
    assert verdict.counterexample == {}
    assert verdict.knobs == {"nV": 4, "nK_clique": 2}


def test_xor_only_assertion_finds_spurious_counterexamples(corpus):
    verdict = verify_reduction(corpus["clique-cover-xor-pitfall"], {"nV": 3, "nK_clique": 2})
    assert not verdict.verified and verdict.status == "SAT"
    # the same instance with the certificate link is fine
    assert verify_reduction(corpus["verify-clique-cover"], {"nV": 3, "nK_clique": 2}).verified


def test_broken_reduction_counterexample_is_real(corpus):
    n, k = 3, 2
    verdict = verify_reduction(corpus["verify-clique-cover-broken"])
    assert not verdict.verified
    assert set(verdict.counterexample) <= {"bE_clique", "bBelongsClique", "bBelongsVertexCover"}

    graph = graph_from_values(verdict.counterexample.get("bE_clique", {}), "bE_clique", n)
    clique = members_from_values(verdict.counterexample.get("bBelongsClique", {}), "bBelongsClique", n)
    cover = members_from_values(verdict.counterexample.get("bBelongsVertexCover", {}), "bBelongsVertexCover", n)

    # the link makes the cover the complement of the clique
    assert sorted(cover) == [v for v in range(n) if v not in clique]
    clique_ok = is_clique(graph, clique) and len(clique) >= k
    # the mutated reduction checks the cover against the uncomplemented graph
    cover_ok = is_vertex_cover(graph, cover) and len(cover) <= n - k
    assert clique_ok != cover_ok
    # while the real reduction agrees on this instance
    assert oracle_clique(graph, n, k) == oracle_vertex_cover(complement(graph, n), n, n - k)


def test_verify_reduction_needs_a_verification_case(corpus):
    with pytest.raises(CorpusError):
        verify_reduction(corpus["clique-solve"])


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_clique_and_cover_programs_agree_with_oracles(corpus, n):
    mismatches = oracle_reduction_equisat(n, corpus["clique-solve"], corpus["clique-to-cover"],
                                          corpus["cover-to-clique"])
    assert mismatches == []


COLOURING_SECTIONS = ["Reduction from 3SAT to 3-colouring", "Certificate reduction between 3SAT and 3-colouring",
                      "Certificate verification for 3-colouring"]


def _colouring_program(case, rows: list[list[int]]) -> str:
    sections = split_sections(case.spec_text, COLOURING_SECTIONS)
    lines = ["nN_3SAT = 3;", f"nClauses = {len(rows)};"]
    lines += [f"nC[{i}][{j}] = {code};" for i, row in enumerate(rows) for j, code in enumerate(row)]
    body = "".join(sections[title] for title in COLOURING_SECTIONS)
    return "\n".join(lines) + "\n" + body + "assert(bNumberOfColours && b3colouring && bCertificateReduction);\n"


@pytest.mark.parametrize("rows", [
    [[0, 2, 4], [1, 3, 5]],
    [[0, 3, 4], [1, 1, 2]],
    [[5, 5, 2], [4, 3, 3]],
    [[0, 0, 0], [1, 1, 1]],
])
def test_colourings_map_back_to_satisfying_assignments(corpus, rows):
    compiled = compile_source(_colouring_program(corpus["verify-3sat-3colouring"], rows), 8)
    enumeration = enumerate_models(compiled.cnf, projection=_projection(compiled, "bV["))
    assert enumeration.complete

    clauses = literal_clauses([[code in row for code in range(6)] for row in rows])
    assignments = set()
    for model in enumeration.models:
        values = decode_model(compiled.result.registry, model)
        assignments.add(tuple(values[f"bV[{v}]"] for v in range(3)))
    for bits in assignments:
        units = [[v + 1 if bit else -(v + 1)] for v, bit in enumerate(bits)]
        assert oracle_sat(clauses + units, 3)
    assert bool(assignments) == oracle_sat(clauses, 3)


# --- FRAGMENTS ---
PROGRAM = """\
/*** Sizes ***/
nV = 3;
/*** Source ***/
bS = nV > 2;
assert(bS);
/* Helper note */
bAlso = true;
/*** Target ***/
bT = nV > 1;
bL = true;
"""


def test_split_sections_strips_assertions():
    sections = split_sections(PROGRAM, ["Sizes", "Source", "Target"])
    assert sections["Source"] == "/*** Source ***/\nbS = nV > 2;\n/* Helper note */\nbAlso = true;\n"
    assert "assert" not in "".join(sections.values())
    with pytest.raises(CorpusError):
        split_sections(PROGRAM, ["Sizes", "Missing"])


def test_compose_assertion_kinds():
    fragments = fragments_from_program(
        PROGRAM, {"instance": ["Sizes"], "source": ["Source"], "target": ["Target"]}, "bS", "bT", "bL")
    assert compose(fragments).endswith("assert((bS ^^ bT) && bL);\n")
    assert compose(fragments, "soundness").endswith("assert(!bS && bT && bL);\n")
    assert compose(fragments, "xor-only").endswith("assert((bS ^^ bT));\n")
    assert "nV = 5;" in compose(fragments, knobs={"nV": 5})
    program = compose(fragments, mutations=[Mutation("nV > 1", "nV > 9")])
    assert "bT = nV > 9;" in program

    fragments.legality = ["bA", "bB"]
    assert assertion_text(fragments, "soundness") == "assert(bA && bB && !bS && bT && bL);\n"
    with pytest.raises(CorpusError):
        assertion_text(fragments, "sideways")


def test_fragment_errors():
    with pytest.raises(CorpusError):
        fragments_from_program(PROGRAM, {"oracle": ["Sizes"]}, "bS", "bT", "bL")
    with pytest.raises(CorpusError):
        apply_knobs("nV = 3;", {"nK": 2})
    with pytest.raises(CorpusError):
        apply_mutations("nV = 3;", [Mutation("nW", "nX")])
    assert apply_knobs("  nV = 3;\nnVV = 4;", {"nV": 7}) == "  nV = 7;\nnVV = 4;"


def test_every_assertion_kind_composes_a_runnable_program(corpus):
    case = corpus["verify-clique-cover"]
    for kind in ("full", "soundness", "xor-only"):
        compiled = compile_source(case_program(case, {"nV": 3, "nK_clique": 2}, kind), case.manifest.width)
        assert compiled.result.registry[0].display == "bBelongsClique[0]"
        assert compiled.cnf.num_clauses > 0


# --- CLAUSE COUNTS ---
def test_t_clauses():
    assert [t_clauses(k) for k in range(1, 13)] == [4, 2, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10]
    with pytest.raises(ValueError):
        t_clauses(0)
    with pytest.raises(ValueError):
        t_clauses(7, n_vars=3)
    assert t_clauses(6, n_vars=3) == 4


def test_output_size_bounds():
    assert max_output_clauses(3) == 4
    assert max_output_clauses(10) == 18
    with pytest.raises(ValueError):
        max_output_clauses(1)
    assert sat_to_3sat_sizes(3, 2) == (32, 15)
    assert sat_to_3sat_sizes(10, 10) == (720, 350)


def _sat_to_3sat_sizes_in_program(case, knobs: dict[str, int], width: int) -> tuple[int, int]:
    lines = case.spec_text.splitlines()
    end = next(i for i, line in enumerate(lines) if line.startswith("nN_3SAT"))
    head = apply_knobs("\n".join(lines[:end + 1]) + "\n", knobs)
    result = execute(parse_source(head), width)
    return result.value("nClauses_3SAT"), result.value("nN_3SAT")


@pytest.mark.parametrize("n_vars, n_clauses", [(2, 1), (3, 2), (4, 3), (10, 10)])
def test_size_formula_matches_the_reduction_program(corpus, n_vars, n_clauses):
    knobs = {"nN_SAT": n_vars, "nClauses_SAT": n_clauses}
    sizes = _sat_to_3sat_sizes_in_program(corpus["verify-sat-3sat"], knobs, 16)
    assert sizes == sat_to_3sat_sizes(n_vars, n_clauses)


def test_reference_scale_runs_at_a_wider_word(corpus):
    case = corpus["verify-sat-3sat"]
    reference = case.manifest.reference_knobs
    assert case_width(case) == 8
    assert case_width(case, {"nN_SAT": 4, "nClauses_SAT": 3}) == 8
    assert case_width(case, reference) == 16
    assert _sat_to_3sat_sizes_in_program(case, reference, case_width(case, reference)) == (720, 350)
    # 720 and 350 wrap at eight bits
    assert _sat_to_3sat_sizes_in_program(case, reference, 8) == (208, 94)
    colouring = corpus["verify-3sat-3colouring"]
    assert case_width(colouring, colouring.manifest.reference_knobs) == 8


# --- ORACLES ---
def test_graph_enumeration():
    assert len(list(all_graphs(3))) == 8
    assert len(set(all_graphs(4))) == 64
    with pytest.raises(ValueError):
        next(all_graphs(5))


def test_oracles_on_small_graphs():
    triangle = frozenset({(0, 1), (0, 2), (1, 2)})
    assert oracle_clique(triangle, 3, 3)
    assert oracle_clique(frozenset(), 3, 1)
    assert oracle_clique(frozenset(), 3, 0)
    assert not oracle_clique(frozenset(), 3, 2)
    assert not oracle_vertex_cover(triangle, 3, 1)
    assert oracle_vertex_cover(triangle, 3, 2)
    assert oracle_vertex_cover(frozenset(), 3, 0)
    assert oracle_3colouring(triangle, 3)
    k4 = frozenset({(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)})
    assert not oracle_3colouring(k4, 4)
    with pytest.raises(ValueError):
        oracle_clique(frozenset(), 6, 2)


def test_clique_and_cover_oracles_are_complementary():
    for n in range(1, 5):
        for graph in all_graphs(n):
            for k in range(n + 1):
                assert oracle_clique(graph, n, k) == oracle_vertex_cover(complement(graph, n), n, n - k)


def test_sat_oracle_and_literal_rows():
    assert oracle_sat([[1, 2], [-1], [-2, 3]], 3)
    assert not oracle_sat([[1], [-1]], 1)
    assert oracle_sat([], 0)
    assert literal_clauses([[True, False, False, True], [False, True, True, False]]) == [[1, -2], [-1, 2]]


def test_instance_text_runs_as_a_program():
    graph = frozenset({(0, 1)})
    compiled = compile_source(clique_instance(graph, 3, 2), 8)
    assert compiled.result.value("bE_clique", 0, 1) is True
    assert compiled.result.value("bE_clique", 1, 2) is False
    assert compiled.result.value("nK_clique") == 2
    values = {"bE_clique[0][1]": True, "bE_clique[0][2]": False}
    assert graph_from_values(values, "bE_clique", 3) == graph
    assert members_from_values({"bB[0]": False, "bB[2]": True}, "bB", 3) == [2]

    cover = compile_source(vertex_cover_instance(complement(graph, 3), 3, 1), 8).result
    assert cover.value("bE_vertexCover", 0, 1) is False
    assert cover.value("bE_vertexCover", 0, 2) is True
    assert cover.value("nL_vertexCover") == 1
