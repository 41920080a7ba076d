# tests/test_executor.py
import pytest

from core.errors import ExecutionError, GroundnessError, KindError
from interpreter.executor import execute
from interpreter.values import SymBool, SymWord
from language.parser import parse_source
from symbolic.formula import TRUE


def _run(source: str, width: int = 8, **kwargs):
    return execute(parse_source(source), width, **kwargs)


def _word_assignment(var_ids, value: int) -> dict[int, bool]:
    return {var: bool((value >> i) & 1) for i, var in enumerate(var_ids)}


def test_toy_program_has_exactly_one_solution():
    result = _run("nv = nu+1;\nassert(nv==2);")
    assert [u.display for u in result.registry] == ["nu"]
    nu = result.registry[0]
    assert nu.var_ids == tuple(range(1, 9))
    satisfying = [u for u in range(256)
                  if result.store.evaluate(result.assertion, _word_assignment(nu.var_ids, u))]
    assert satisfying == [1]


def test_shifting_by_at_least_the_width_gives_zero():
    source = "nA = 1;\nnB = nA << 18446744073709551615;\nnC = 255 >> 4000000000;\nnD = nA << 63;\nprint nB;"
    result = _run(source, width=64)
    assert (result.value("nB"), result.value("nC")) == (0, 0)
    assert result.value("nD") == 1 << 63
    assert result.prints == [("nB", 0)]
    symbolic = _run("nB = nX << 70; nC = nX >> 64;", width=64)
    assert (symbolic.value("nB"), symbolic.value("nC")) == (0, 0)


def test_ground_program_folds_completely():
    result = _run("nA = 3; nB = nA * 5; bC = nB >= 15; assert(nB == 15 && bC);")
    assert result.assertion == TRUE
    assert result.registry == []
    assert result.value("nB") == 15
    assert result.value("bC") is True
    assert result.store.node_count == 0


def test_arithmetic_wraps_at_width():
    result = _run("nA = 15 + 2; nB = 17; nC = 0 - 1; nD = -3; nE = ~0; nF = 3 << 3;", width=4)
    assert [result.value(n) for n in ("nA", "nB", "nC", "nD", "nE", "nF")] == [1, 1, 15, 13, 15, 8]


def test_arrays_and_loops():
    result = _run("""
        for (ni = 0; ni < 4; ni++) { nSq[ni] = ni * ni; }
        nSum = 0;
        for (ni = 0; ni < 4; ni++) nSum += nSq[ni];
    """)
    assert [result.value("nSq", i) for i in range(4)] == [0, 1, 4, 9]
    assert result.value("nSum") == 14
    assert result.stats["loop_iterations"] == 8


def test_unknowns_are_registered_in_first_read_order():
    result = _run("bX = nB[1] > nA; bY = bZ || bX; nA = 3;")
    assert [u.display for u in result.registry] == ["nB[1]", "nA", "bZ"]
    assert [len(u.var_ids) for u in result.registry] == [8, 8, 1]
    assert result.names == {"nB[1]": tuple(range(1, 9)), "nA": tuple(range(9, 17)), "bZ": (17,)}
    # reassignment does not re-register
    assert result.value("nA") == 3


def test_logical_operators_do_not_short_circuit():
    result = _run("bA = false && bU; bB = true || nV == 0;")
    assert [u.display for u in result.registry] == ["bU", "nV"]
    assert result.value("bA") is False
    assert result.value("bB") is True


def test_ite_evaluates_both_branches():
    result = _run("nA = ite(true, 1, nZ); bB = ite(bC, true, bD);")
    assert [u.display for u in result.registry] == ["nZ", "bC", "bD"]
    assert result.value("nA") == 1
    assert isinstance(result.value("bB"), SymBool)


def test_compound_assignment_on_undefined_location_reads_an_unknown():
    result = _run("nS += 1; bF &&= true;")
    assert [u.display for u in result.registry] == ["nS", "bF"]
    assert isinstance(result.value("nS"), SymWord)


def test_bitwise_operators_on_booleans_are_logical():
    result = _run("bA = true & false; bB = true | false; bC = true ^ true; bD = true == false;")
    assert [result.value(n) for n in ("bA", "bB", "bC", "bD")] == [False, True, False, False]


def test_prints_are_recorded_in_source_syntax():
    result = _run("nA = 2; print nA + 1; print true; print nA < 1;")
    assert result.prints == [("nA + 1", 3), ("true", True), ("nA < 1", False)]


def test_symbolic_values_that_fold_are_ground():
    result = _run("nA = nU & 0; bB = bU ^^ bU; print nA; print bB;")
    assert result.prints == [("nA", 0), ("bB", False)]


@pytest.mark.parametrize("source", [
    "nA = true;",
    "bA = 1;",
    "assert(1);",
    "bX = nA && bB;",
    "nA = !3;",
    "bA = -true;",
    "nA = ite(true, 1, false);",
    "nA = ite(1, 1, 2);",
    "nA[true] = 1;",
    "for (ni = 0; 3; ni++) nA = 1;",
    "if (1) nA = 1;",
    "nA = 1 + true;",
])
def test_kind_errors(source):
    with pytest.raises(KindError):
        _run(source)


@pytest.mark.parametrize("source", [
    "for (ni = 0; ni < nK; ni++) nA = 1;",
    "if (bX) nA = 1;",
    "print nU;",
    "nA = 1 << nC;",
    "nA[nI] = 1;",
    "nB = nA[nI];",
])
def test_groundness_errors(source):
    with pytest.raises(GroundnessError) as info:
        _run(source)
    assert info.value.line == 1


def test_loop_iteration_limit():
    with pytest.raises(ExecutionError) as info:
        _run("for (ni = 0; ni < 100; ni++) nA = ni;", max_loop_iterations=10)
    assert "iteration limit" in info.value.message
    assert _run("for (ni = 0; ni < 10; ni++) nA = ni;", max_loop_iterations=10).value("nA") == 9


def test_width_must_be_positive():
    with pytest.raises(ValueError):
        _run("nA = 1;", width=0)


def test_assertions_accumulate_as_a_conjunction():
    result = _run("assert(nX < 3); assert(nX > 0);", width=3)
    nx = result.registry[0]
    satisfying = [v for v in range(8)
                  if result.store.evaluate(result.assertion, _word_assignment(nx.var_ids, v))]
    assert satisfying == [1, 2]


def test_unsigned_comparison_semantics():
    result = _run("assert(nX > 5);", width=3)
    nx = result.registry[0]
    satisfying = [v for v in range(8)
                  if result.store.evaluate(result.assertion, _word_assignment(nx.var_ids, v))]
    assert satisfying == [6, 7]


def test_stats():
    result = _run("nv = nu+1;\nassert(nv==2);")
    assert result.stats["unknowns"] == 1
    assert result.stats["num_vars"] == 8
    assert result.stats["node_count"] == result.store.node_count
    assert "exec_seconds" in result.stats
