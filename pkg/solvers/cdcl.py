# solvers/cdcl.py
import heapq
import logging
import random
import time
from collections.abc import Iterable, Sequence

from cnf.tseitin import Cnf
from solvers.outcome import Budget, SolveOutcome, SolveStats, SolveStatus, UNLIMITED, verify_model

logger = logging.getLogger("CDCL-Solver")

DEFAULT_SEED = 91648253
VAR_DECAY = 0.95
RESTART_FIRST = 100
RANDOM_VAR_FREQ = 0.02
LEARNT_SIZE_FACTOR = 1 / 3
LEARNT_GROWTH = 1.1
MIN_MAX_LEARNTS = 2000
CREF_UNDEF = -1


def luby(x: int, y: int = 2) -> int:
    """x-th element (0-based) of the Luby restart sequence with base y."""
    size, seq = 1, 0
    while size < x + 1:
        seq += 1
        size = 2 * size + 1
    while size - 1 != x:
        size = (size - 1) >> 1
        seq -= 1
        x %= size
    return y ** seq


def _encode(lit: int) -> int:
    return 2 * lit if lit > 0 else -2 * lit + 1


class CdclSolver:
    """
    Conflict-driven clause learning over encoded literals (2*var for x, 2*var+1 for -x).

    Two watched literals per clause, first-UIP learning with local minimisation,
    VSIDS on a lazy heap (ties go to the lowest variable), phase saving,
    Luby restarts and LBD-based learnt clause reduction. Clauses may be added
    between solve() calls, which is how model enumeration blocks models; their
    variables must be frozen, since pure literals of the rest are fixed at root.
    """

    def __init__(self, num_vars: int, clauses: Iterable[Sequence[int]] = (), seed: int = DEFAULT_SEED,
                 frozen: Iterable[int] = (), random_var_freq: float = RANDOM_VAR_FREQ):
        self.num_vars = num_vars
        size = 2 * num_vars + 2
        self.lit_val = [0] * size           # 1 true, -1 false, 0 unassigned
        self.watches: list[list[int]] = [[] for _ in range(size)]
        self.level = [0] * (num_vars + 1)
        self.reason = [CREF_UNDEF] * (num_vars + 1)
        self.activity = [0.0] * (num_vars + 1)
        self.phase = [False] * (num_vars + 1)
        self.seen = [False] * (num_vars + 1)
        self.frozen = set(frozen)

        self.clauses: list[list[int] | None] = []
        self.lbd: list[int] = []
        self.learnt_refs: list[int] = []
        self.original: list[list[int]] = []

        self.trail: list[int] = []
        self.trail_lim: list[int] = []
        self.qhead = 0
        self.ok = True

        self.var_inc = 1.0
        self.heap = [(0.0, v) for v in range(1, num_vars + 1)]
        self.rng = random.Random(seed)
        self.random_var_freq = random_var_freq
        self.max_learnts = 0.0
        self.restart_index = 0
        self.simplified = False
        self.stats = SolveStats()

        for clause in clauses:
            self.add_clause(clause)

    # --- CLAUSE DATABASE ---
    def add_clause(self, clause: Sequence[int]) -> bool:
        """Adds an original clause at decision level 0. Returns False once the formula is UNSAT."""
        self.original.append(list(clause))
        if not self.ok:
            return False
        self._backtrack(0)

        lits: list[int] = []
        for lit in dict.fromkeys(_encode(x) for x in clause):
            if not 1 <= lit >> 1 <= self.num_vars:
                raise ValueError(f"literal {clause} outside 1..{self.num_vars}")
            if (lit ^ 1) in lits or self.lit_val[lit] == 1:
                return True  # tautology or already satisfied at root
            if self.lit_val[lit] == 0:
                lits.append(lit)

        if not lits:
            self.ok = False
        elif len(lits) == 1:
            self._enqueue(lits[0], CREF_UNDEF)
            if self._propagate() is not None:
                self.ok = False
        else:
            self._attach(lits, learnt=False, lbd=0)
        return self.ok

    def _attach(self, lits: list[int], learnt: bool, lbd: int) -> int:
        cref = len(self.clauses)
        self.clauses.append(lits)
        self.lbd.append(lbd)
        self.watches[lits[0]].append(cref)
        self.watches[lits[1]].append(cref)
        if learnt:
            self.learnt_refs.append(cref)
        return cref

    def _locked(self, cref: int) -> bool:
        first = self.clauses[cref][0]
        return self.reason[first >> 1] == cref and self.lit_val[first] == 1

    def _reduce_db(self):
        alive = [c for c in self.learnt_refs if self.clauses[c] is not None]
        candidates = [c for c in alive
                      if not self._locked(c) and self.lbd[c] > 2 and len(self.clauses[c]) > 2]
        candidates.sort(key=lambda c: (self.lbd[c], len(self.clauses[c])), reverse=True)
        doomed = set(candidates[:len(candidates) // 2])
        for cref in doomed:
            self.clauses[cref] = None
        self.learnt_refs = [c for c in alive if c not in doomed]
        logger.debug(f"[CDCL] reduced learnt clauses: removed {len(doomed)}, kept {len(self.learnt_refs)}")

    # --- ASSIGNMENT ---
    @property
    def decision_level(self) -> int:
        return len(self.trail_lim)

    def _enqueue(self, lit: int, reason: int):
        var = lit >> 1
        self.lit_val[lit] = 1
        self.lit_val[lit ^ 1] = -1
        self.level[var] = len(self.trail_lim)
        self.reason[var] = reason
        self.trail.append(lit)
        self.stats.propagations += 1

    def _backtrack(self, level: int):
        if len(self.trail_lim) <= level:
            return
        stop = self.trail_lim[level]
        for lit in self.trail[stop:]:
            var = lit >> 1
            self.lit_val[lit] = 0
            self.lit_val[lit ^ 1] = 0
            self.reason[var] = CREF_UNDEF
            self.phase[var] = not (lit & 1)
            heapq.heappush(self.heap, (-self.activity[var], var))
        del self.trail[stop:]
        del self.trail_lim[level:]
        self.qhead = len(self.trail)

    def _propagate(self) -> int | None:
        """Unit propagation over the watch lists; returns a conflicting clause ref or None."""
        lit_val, clauses, watches, trail = self.lit_val, self.clauses, self.watches, self.trail
        while self.qhead < len(trail):
            false_lit = trail[self.qhead] ^ 1
            self.qhead += 1
            watching = watches[false_lit]
            kept: list[int] = []
            for position, cref in enumerate(watching):
                clause = clauses[cref]
                if clause is None:
                    continue
                if clause[0] == false_lit:
                    clause[0], clause[1] = clause[1], false_lit
                first = clause[0]
                if lit_val[first] == 1:
                    kept.append(cref)
                    continue
                for k in range(2, len(clause)):
                    if lit_val[clause[k]] != -1:
                        clause[1], clause[k] = clause[k], false_lit
                        watches[clause[1]].append(cref)
                        break
                else:
                    kept.append(cref)
                    if lit_val[first] == -1:
                        kept.extend(watching[position + 1:])
                        watches[false_lit] = kept
                        self.qhead = len(trail)
                        return cref
                    self._enqueue(first, cref)
            watches[false_lit] = kept
        return None

    # --- CONFLICT ANALYSIS ---
    def _bump(self, var: int):
        self.activity[var] += self.var_inc
        if self.activity[var] > 1e100:
            for v in range(1, self.num_vars + 1):
                self.activity[v] *= 1e-100
            self.var_inc *= 1e-100
            self.heap = [(-self.activity[v], v) for v in range(1, self.num_vars + 1)
                         if self.lit_val[2 * v] == 0]
            heapq.heapify(self.heap)
        elif self.lit_val[2 * var] == 0:
            heapq.heappush(self.heap, (-self.activity[var], var))

    def _analyze(self, conflict: int) -> tuple[list[int], int, int]:
        """First-UIP learnt clause (asserting literal first), backjump level and LBD."""
        seen, level, reason, trail = self.seen, self.level, self.reason, self.trail
        current = self.decision_level
        learnt = [0]
        pending = 0
        lit = None
        index = len(trail) - 1
        cref = conflict

        while True:
            clause = self.clauses[cref]
            for q in (clause if lit is None else clause[1:]):
                var = q >> 1
                if not seen[var] and level[var] > 0:
                    seen[var] = True
                    self._bump(var)
                    if level[var] >= current:
                        pending += 1
                    else:
                        learnt.append(q)
            while not seen[trail[index] >> 1]:
                index -= 1
            lit = trail[index]
            index -= 1
            cref = reason[lit >> 1]
            seen[lit >> 1] = False
            pending -= 1
            if pending == 0:
                break
        learnt[0] = lit ^ 1

        # Drop literals implied by the rest of the clause
        minimized = [learnt[0]]
        for q in learnt[1:]:
            r = reason[q >> 1]
            if r == CREF_UNDEF or not all(seen[x >> 1] or level[x >> 1] == 0 for x in self.clauses[r][1:]):
                minimized.append(q)
        for q in learnt[1:]:
            seen[q >> 1] = False

        backjump = 0
        if len(minimized) > 1:
            best = max(range(1, len(minimized)), key=lambda i: level[minimized[i] >> 1])
            minimized[1], minimized[best] = minimized[best], minimized[1]
            backjump = level[minimized[1] >> 1]
        lbd = len({level[q >> 1] for q in minimized})
        return minimized, backjump, lbd

    # --- DECISIONS ---
    def _pick_branch(self) -> int | None:
        var = None
        if self.num_vars and self.random_var_freq and self.rng.random() < self.random_var_freq:
            candidate = self.rng.randrange(1, self.num_vars + 1)
            if self.lit_val[2 * candidate] == 0:
                var = candidate
        while var is None:
            if not self.heap:
                return None
            neg_act, candidate = heapq.heappop(self.heap)
            if self.lit_val[2 * candidate] == 0 and -neg_act == self.activity[candidate]:
                var = candidate
        return 2 * var if self.phase[var] else 2 * var + 1

    def _eliminate_pure_literals(self):
        """Root-level pure literal assignment for variables outside the frozen set."""
        polarity = [0] * (self.num_vars + 1)
        for clause in self.clauses:
            if clause is None or any(self.lit_val[q] == 1 for q in clause):
                continue
            for q in clause:
                polarity[q >> 1] |= 1 if q & 1 == 0 else 2
        assigned = 0
        for var in range(1, self.num_vars + 1):
            if var in self.frozen or self.lit_val[2 * var] != 0:
                continue
            if polarity[var] == 1:
                self._enqueue(2 * var, CREF_UNDEF)
                assigned += 1
            elif polarity[var] == 2:
                self._enqueue(2 * var + 1, CREF_UNDEF)
                assigned += 1
        if assigned:
            logger.debug(f"[CDCL] {assigned} pure literals fixed at root")

    # --- SEARCH ---
    def solve(self, budget: Budget = UNLIMITED) -> SolveOutcome:
        started = time.monotonic()
        deadline = budget.deadline(started)
        conflicts_at_start = self.stats.conflicts

        status = self._search(budget, deadline, conflicts_at_start)
        self.stats.wall_time += time.monotonic() - started
        self.stats.learnts = len(self.learnt_refs)

        model = None
        if status is SolveStatus.SAT:
            model = {v: self.lit_val[2 * v] == 1 for v in range(1, self.num_vars + 1)}
            verify_model(self.original, model, engine="cdcl")
        logger.info(f"[CDCL] {status.value}: conflicts={self.stats.conflicts} "
                    f"decisions={self.stats.decisions} restarts={self.stats.restarts} "
                    f"time={self.stats.wall_time:.3f}s")
        stats = SolveStats(**vars(self.stats))
        return SolveOutcome(status, model, stats, engine="cdcl")

    def _search(self, budget: Budget, deadline: float | None, conflicts_at_start: int) -> SolveStatus:
        if not self.ok:
            return SolveStatus.UNSAT
        self._backtrack(0)
        if self._propagate() is not None:
            self.ok = False
            return SolveStatus.UNSAT
        if not self.simplified:
            self.simplified = True
            self._eliminate_pure_literals()
            if self.max_learnts == 0.0:
                self.max_learnts = max(len(self.clauses) * LEARNT_SIZE_FACTOR, MIN_MAX_LEARNTS)

        restart_limit = RESTART_FIRST * luby(self.restart_index)
        conflicts_since_restart = 0

        while True:
            conflict = self._propagate()
            if conflict is not None:
                self.stats.conflicts += 1
                conflicts_since_restart += 1
                if self.decision_level == 0:
                    self.ok = False
                    return SolveStatus.UNSAT

                learnt, backjump, lbd = self._analyze(conflict)
                self._backtrack(backjump)
                if len(learnt) == 1:
                    self._enqueue(learnt[0], CREF_UNDEF)
                else:
                    self._enqueue(learnt[0], self._attach(learnt, learnt=True, lbd=lbd))
                self.var_inc /= VAR_DECAY

                if budget.conflict_limit is not None and \
                        self.stats.conflicts - conflicts_at_start >= budget.conflict_limit:
                    self._backtrack(0)
                    return SolveStatus.UNKNOWN
                if deadline is not None and time.monotonic() >= deadline:
                    self._backtrack(0)
                    return SolveStatus.UNKNOWN
                continue

            if conflicts_since_restart >= restart_limit:
                self.stats.restarts += 1
                self.restart_index += 1
                restart_limit = RESTART_FIRST * luby(self.restart_index)
                conflicts_since_restart = 0
                self._backtrack(0)
                logger.debug(f"[CDCL] restart #{self.stats.restarts}, next after {restart_limit} conflicts")
                continue

            if len(self.learnt_refs) - len(self.trail) >= self.max_learnts:
                self._reduce_db()
                self.max_learnts *= LEARNT_GROWTH

            lit = self._pick_branch()
            if lit is None:
                return SolveStatus.SAT
            self.stats.decisions += 1
            self.trail_lim.append(len(self.trail))
            self._enqueue(lit, CREF_UNDEF)


def solve(cnf: Cnf, budget: Budget = UNLIMITED, seed: int = DEFAULT_SEED) -> SolveOutcome:
    """One-shot solve of `cnf` with the embedded engine."""
    logger.info(f"[CDCL] solving {cnf.num_vars} variables, {cnf.num_clauses} clauses")
    return CdclSolver(cnf.num_vars, cnf.clauses, seed=seed).solve(budget)
