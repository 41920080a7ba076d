# verification/oracles.py
from collections.abc import Iterator, Sequence
from itertools import combinations, product

Edge = tuple[int, int]
Graph = frozenset[Edge]

# Subset enumeration over more vertices than this gets slow for test use
MAX_ORACLE_VERTICES = 5
MAX_ALL_GRAPHS_VERTICES = 4


def vertex_pairs(n: int) -> list[Edge]:
    """Upper-triangle pairs (i, j), i < j, in the row-major order the programs loop in."""
    return list(combinations(range(n), 2))


def all_graphs(n: int) -> Iterator[Graph]:
    """Every undirected simple graph on n vertices, as sets of (i, j) edges with i < j."""
    if n > MAX_ALL_GRAPHS_VERTICES:
        raise ValueError(f"all_graphs is capped at {MAX_ALL_GRAPHS_VERTICES} vertices, got {n}")
    pairs = vertex_pairs(n)
    for mask in range(1 << len(pairs)):
        yield frozenset(p for bit, p in enumerate(pairs) if mask >> bit & 1)


def complement(graph: Graph, n: int) -> Graph:
    return frozenset(p for p in vertex_pairs(n) if p not in graph)


def is_clique(graph: Graph, members: Sequence[int]) -> bool:
    return all((i, j) in graph for i, j in combinations(sorted(members), 2))


def is_vertex_cover(graph: Graph, members: Sequence[int]) -> bool:
    chosen = set(members)
    return all(i in chosen or j in chosen for i, j in graph)


def _check_size(n: int):
    if n > MAX_ORACLE_VERTICES:
        raise ValueError(f"subset oracles are capped at {MAX_ORACLE_VERTICES} vertices, got {n}")


def oracle_clique(graph: Graph, n: int, k: int) -> bool:
    """Is there a clique with at least k vertices? Exhaustive over vertex subsets."""
    _check_size(n)
    if k <= 0:
        return True
    return any(is_clique(graph, subset) for size in range(k, n + 1)
               for subset in combinations(range(n), size))


def oracle_vertex_cover(graph: Graph, n: int, l: int) -> bool:
    """Is there a vertex cover with at most l vertices?"""
    _check_size(n)
    return any(is_vertex_cover(graph, subset) for size in range(0, min(l, n) + 1)
               for subset in combinations(range(n), size))


def oracle_3colouring(graph: Graph, n: int) -> bool:
    if n > 12:
        raise ValueError(f"3-colouring oracle is capped at 12 vertices, got {n}")
    return any(all(colours[i] != colours[j] for i, j in graph)
               for colours in product(range(3), repeat=n))


def oracle_sat(clauses: Sequence[Sequence[int]], num_vars: int) -> bool:
    """Brute-force satisfiability of DIMACS-style clauses over variables 1..num_vars."""
    for bits in product((False, True), repeat=num_vars):
        if all(any(bits[abs(lit) - 1] == (lit > 0) for lit in clause) for clause in clauses):
            return True
    return False


def literal_clauses(membership: Sequence[Sequence[bool]]) -> list[list[int]]:
    """
    Turns literal-membership rows (column 2v is x_v, 2v+1 is not x_v) into
    DIMACS clauses over variables 1..n.
    """
    clauses = []
    for row in membership:
        clause = []
        for index, present in enumerate(row):
            if present:
                var = index // 2 + 1
                clause.append(var if index % 2 == 0 else -var)
        clauses.append(clause)
    return clauses
