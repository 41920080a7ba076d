# verification/instances.py
from verification.oracles import Graph, vertex_pairs


def _adjacency_lines(array: str, graph: Graph, n: int) -> list[str]:
    return [f"{array}[{i}][{j}] = {'true' if (i, j) in graph else 'false'};" for i, j in vertex_pairs(n)]


def clique_instance(graph: Graph, n: int, k: int) -> str:
    """k-clique instance text in the corpus layout: sizes first, then the adjacency bits."""
    lines = ["/*** Specification of instance of k-clique ***/", f"nV = {n};", f"nK_clique = {k};", ""]
    lines += _adjacency_lines("bE_clique", graph, n)
    return "\n".join(lines) + "\n"


def vertex_cover_instance(graph: Graph, n: int, l: int, size_name: str = "nL_vertexCover") -> str:
    lines = ["/*** Specification of instance of l-vertexCover ***/", f"nV = {n};", f"{size_name} = {l};", ""]
    lines += _adjacency_lines("bE_vertexCover", graph, n)
    return "\n".join(lines) + "\n"


def graph_from_values(values: dict[str, int | bool], array: str, n: int) -> Graph:
    """Reads a decoded adjacency array (e.g. a counterexample) back into a graph."""
    return frozenset((i, j) for i, j in vertex_pairs(n) if values.get(f"{array}[{i}][{j}]") is True)


def members_from_values(values: dict[str, int | bool], array: str, n: int) -> list[int]:
    return [i for i in range(n) if values.get(f"{array}[{i}]") is True]
