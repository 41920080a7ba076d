# verification/counts.py


def t_clauses(k: int, n_vars: int | None = None) -> int:
    """
    Number of 3SAT clauses a SAT clause of length k finally turns into.
    With `n_vars` the length is checked against the 2n literals available.
    """
    if k < 1:
        raise ValueError("an empty clause has no 3SAT image")
    if n_vars is not None and k > 2 * n_vars:
        raise ValueError(f"a clause over {n_vars} variables has at most {2 * n_vars} literals")
    if k == 1:
        return 4
    if k == 2:
        return 2
    if k == 3:
        return 1
    return k - 2


def max_output_clauses(n_vars: int) -> int:
    """Worst case for one clause: all 2n literals of n > 1 variables give 2n - 2 clauses."""
    if n_vars < 2:
        raise ValueError("the bound holds for at least two variables")
    return t_clauses(2 * n_vars)


def sat_to_3sat_sizes(n_vars: int, n_clauses: int) -> tuple[int, int]:
    """
    Output size of the symbolic SAT to 3SAT reduction program as
    (clause slots, variables). Every input clause reserves four slots per
    splitting round, tautologies included.
    """
    rounds = 2 * n_vars - 2 if n_vars > 1 else 4
    return n_clauses * rounds * 4, n_vars + n_clauses * (2 * n_vars - 3) * 2
