"""k-colorability as CNF, a CDCL solver, DIMACS I/O and chromatic number search.

Variable ``x_{i,l}`` (vertex ``i`` in ``1..n``, color ``l`` in ``1..k``) is
numbered ``(i - 1) * k + l``. Only at-least-one and edge-conflict clauses
are emitted; a vertex that ends up with several colors simply keeps its
lowest one when decoding.
"""

from __future__ import annotations

import heapq
import random
import time
from dataclasses import dataclass, field

from .graphs import Coloring, FiniteGraph, is_proper_coloring

DEFAULT_BUDGET = 50_000_000
SAT = "SAT"
UNSAT = "UNSAT"


class BudgetExceeded(RuntimeError):
    """The solver hit its conflict budget before reaching a verdict."""


@dataclass(frozen=True)
class CnfFormula:
    var_count: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        clauses = tuple(tuple(int(x) for x in c) for c in self.clauses)
        for c in clauses:
            if not c:
                raise ValueError("empty clause")
            for lit in c:
                if lit == 0 or abs(lit) > self.var_count:
                    raise ValueError(f"literal {lit} outside 1..{self.var_count}")
        object.__setattr__(self, "clauses", clauses)

    def satisfied_by(self, assignment) -> bool:
        """``assignment[v - 1]`` is the truth value of variable ``v``."""
        return all(any((lit > 0) == bool(assignment[abs(lit) - 1]) for lit in c)
                   for c in self.clauses)


@dataclass(frozen=True)
class SatOutcome:
    status: str
    assignment: tuple[bool, ...] | None = None
    stats: dict = field(default_factory=dict, compare=False)
    formula: CnfFormula | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.status not in (SAT, UNSAT):
            raise ValueError(f"bad status {self.status!r}")
        if (self.status == SAT) != (self.assignment is not None):
            raise ValueError("assignment must be present exactly for SAT")
        if self.status == SAT and self.formula is not None:
            if not self.formula.satisfied_by(self.assignment):
                raise AssertionError("solver returned a non-satisfying assignment")

    @property
    def is_sat(self) -> bool:
        return self.status == SAT


# --- encoding --------------------------------------------------------------

def color_var(i: int, color: int, k: int) -> int:
    """DIMACS variable for 1-based vertex ``i`` having 1-based ``color``."""
    return (i - 1) * k + color


def encode_k_coloring(graph: FiniteGraph, k: int, symmetry_breaking: bool = False) -> CnfFormula:
    """CNF that is satisfiable iff ``graph`` has a proper ``k``-coloring.

    With ``symmetry_breaking`` vertex 1 is pinned to color 1 and vertex
    ``i <= k`` may only use colors ``<= i``; relabelling colors by first
    appearance shows this keeps every colorable instance satisfiable.
    """
    if k < 1:
        raise ValueError("need at least one color")
    n = graph.vertex_count
    clauses = [tuple(color_var(i, l, k) for l in range(1, k + 1)) for i in range(1, n + 1)]
    for u, v in graph.edges:
        for l in range(1, k + 1):
            clauses.append((-color_var(u + 1, l, k), -color_var(v + 1, l, k)))
    if symmetry_breaking and n:
        clauses.append((color_var(1, 1, k),))
        for i in range(1, min(k, n) + 1):
            for l in range(i + 1, k + 1):
                clauses.append((-color_var(i, l, k),))
    return CnfFormula(n * k, tuple(clauses))


def decode_coloring(n: int, k: int, outcome: SatOutcome) -> Coloring:
    """Lowest true color per vertex.

    Raises:
        ValueError: for an UNSAT outcome or a vertex with no color set.
    """
    if not outcome.is_sat:
        raise ValueError("cannot decode an unsatisfiable outcome")
    a = outcome.assignment
    colors = []
    for i in range(1, n + 1):
        for l in range(1, k + 1):
            if a[color_var(i, l, k) - 1]:
                colors.append(l)
                break
        else:
            raise ValueError(f"vertex {i} has no color")
    return Coloring(tuple(colors), k)


# --- DIMACS ----------------------------------------------------------------

def write_dimacs(formula: CnfFormula, comments=()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p cnf {formula.var_count} {len(formula.clauses)}")
    lines += [" ".join(map(str, c)) + " 0" for c in formula.clauses]
    return "\n".join(lines) + "\n"


def read_dimacs(text: str) -> CnfFormula:
    header = None
    lits: list[int] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"bad header {line!r}")
            header = (int(parts[2]), int(parts[3]))
            continue
        lits.extend(int(x) for x in line.split())
    if header is None:
        raise ValueError("missing 'p cnf' header")
    clauses, cur = [], []
    for x in lits:
        if x == 0:
            clauses.append(tuple(cur))
            cur = []
        else:
            cur.append(x)
    if cur:
        raise ValueError("last clause not terminated by 0")
    if len(clauses) != header[1]:
        raise ValueError(f"header announces {header[1]} clauses, found {len(clauses)}")
    return CnfFormula(header[0], tuple(clauses))


def write_solution(outcome: SatOutcome) -> str:
    """Competition-style ``s``/``v`` lines."""
    if not outcome.is_sat:
        return "s UNSATISFIABLE\n"
    lits = [str(v if val else -v) for v, val in enumerate(outcome.assignment, start=1)]
    lines = ["s SATISFIABLE"]
    for i in range(0, len(lits), 20):
        lines.append("v " + " ".join(lits[i:i + 20]))
    lines.append("v 0")
    return "\n".join(lines) + "\n"


def read_solution(text: str, var_count: int) -> tuple[str, tuple[bool, ...] | None]:
    status = None
    values = [False] * var_count
    for line in text.splitlines():
        if line.startswith("s "):
            status = SAT if "UNSAT" not in line else UNSAT
        elif line.startswith("v "):
            for x in map(int, line[2:].split()):
                if x:
                    values[abs(x) - 1] = x > 0
    if status is None:
        raise ValueError("no status line")
    return status, (tuple(values) if status == SAT else None)


# --- CDCL ------------------------------------------------------------------

class CDCLSolver:
    """Conflict-driven clause learning over a fixed clause set.

    Literals are encoded internally as ``2 * var + sign`` with 0-based
    variables. Binary clauses live in implication lists; longer clauses use
    two watched literals at positions 0 and 1.
    """

    def __init__(self, formula: CnfFormula, seed: int = 0, restart_first: int = 100,
                 restart_factor: float = 1.5, var_decay: float = 0.95,
                 clause_decay: float = 0.999):
        self.formula = formula
        self.nvars = n = formula.var_count
        self.val = [0] * (2 * n)
        self.level = [0] * n
        self.reason: list = [None] * n
        self.phase = [False] * n
        self.activity = [0.0] * n
        self.seen = [False] * n
        self.bins = [[] for _ in range(2 * n)]
        self.watches = [[] for _ in range(2 * n)]
        self.long_clauses: list[list[int]] = []
        self.learnts: list[list[int]] = []
        self.clause_act: dict[int, float] = {}
        self.clause_lbd: dict[int, int] = {}
        self.trail: list[int] = []
        self.trail_lim: list[int] = []
        self.qhead = 0
        self.var_inc = 1.0
        self.var_decay = var_decay
        self.cla_inc = 1.0
        self.clause_decay = clause_decay
        self.restart_first = restart_first
        self.restart_factor = restart_factor
        self.rng = random.Random(seed)
        self.stats = {"conflicts": 0, "decisions": 0, "propagations": 0,
                      "restarts": 0, "learnt_deleted": 0}
        self.ok = True
        if seed:
            for v in range(n):
                self.activity[v] = self.rng.random() * 1e-5
        self.heap = [(-self.activity[v], v) for v in range(n)]
        heapq.heapify(self.heap)
        self._load()

    # internal literal helpers
    @staticmethod
    def _lit(x: int) -> int:
        return 2 * (abs(x) - 1) + (x < 0)

    def _load(self):
        for clause in self.formula.clauses:
            lits = sorted({self._lit(x) for x in clause})
            if any(lits[i] ^ 1 == lits[i + 1] for i in range(len(lits) - 1)):
                continue  # tautology
            if len(lits) == 1:
                lit = lits[0]
                if self.val[lit] == -1:
                    self.ok = False
                    return
                if self.val[lit] == 0:
                    self._assign(lit, None)
            elif len(lits) == 2:
                a, b = lits
                self.bins[a ^ 1].append(b)
                self.bins[b ^ 1].append(a)
            else:
                self.long_clauses.append(lits)
                self.watches[lits[0]].append(lits)
                self.watches[lits[1]].append(lits)

    def _assign(self, lit, reason):
        v = lit >> 1
        self.val[lit] = 1
        self.val[lit ^ 1] = -1
        self.level[v] = len(self.trail_lim)
        self.reason[v] = reason
        self.trail.append(lit)

    def _propagate(self):
        """Unit propagation; returns a conflicting clause or None.

        ``bins[l]`` and ``watches[l]`` hold clauses that need attention when
        literal ``l`` becomes true, i.e. its negation is falsified; the
        watched literal recorded in the clause is ``l ^ 1``.
        """
        val, trail, bins, watches = self.val, self.trail, self.bins, self.watches
        level, reason = self.level, self.reason
        lvl = len(self.trail_lim)
        qhead = self.qhead
        props = 0
        confl = None
        while qhead < len(trail):
            p = trail[qhead]
            qhead += 1
            props += 1
            false_lit = p ^ 1
            for q in bins[p]:
                vq = val[q]
                if vq == 1:
                    continue
                if vq == -1:
                    confl = [q, false_lit]
                    break
                val[q] = 1
                val[q ^ 1] = -1
                level[q >> 1] = lvl
                reason[q >> 1] = [q, false_lit]
                trail.append(q)
            if confl is not None:
                break
            ws = watches[false_lit]
            i = j = 0
            nws = len(ws)
            while i < nws:
                c = ws[i]
                i += 1
                if c[0] == false_lit:
                    c[0] = c[1]
                    c[1] = false_lit
                first = c[0]
                if val[first] == 1:
                    ws[j] = c
                    j += 1
                    continue
                for k in range(2, len(c)):
                    lk = c[k]
                    if val[lk] != -1:
                        c[1] = lk
                        c[k] = false_lit
                        watches[lk].append(c)
                        break
                else:
                    ws[j] = c
                    j += 1
                    if val[first] == -1:
                        confl = c
                        while i < nws:
                            ws[j] = ws[i]
                            j += 1
                            i += 1
                        break
                    val[first] = 1
                    val[first ^ 1] = -1
                    level[first >> 1] = lvl
                    reason[first >> 1] = c
                    trail.append(first)
            del ws[j:]
            if confl is not None:
                break
        self.qhead = qhead if confl is None else len(trail)
        self.stats["propagations"] += props
        return confl

    def _bump_var(self, v):
        act = self.activity
        act[v] += self.var_inc
        if act[v] > 1e100:
            for u in range(self.nvars):
                act[u] *= 1e-100
            self.var_inc *= 1e-100
            self._rebuild_heap()
        elif self.val[2 * v] == 0:
            heapq.heappush(self.heap, (-act[v], v))

    def _rebuild_heap(self):
        act, val = self.activity, self.val
        self.heap = [(-act[v], v) for v in range(self.nvars) if val[2 * v] == 0]
        heapq.heapify(self.heap)

    def _bump_clause(self, c):
        key = id(c)
        if key in self.clause_act:
            self.clause_act[key] += self.cla_inc
            if self.clause_act[key] > 1e20:
                for k in self.clause_act:
                    self.clause_act[k] *= 1e-20
                self.cla_inc *= 1e-20

    def _analyze(self, confl):
        seen, level, reason, trail = self.seen, self.level, self.reason, self.trail
        cur = len(self.trail_lim)
        learnt = [0]
        counter = 0
        p = None
        idx = len(trail) - 1
        clause = confl
        while True:
            self._bump_clause(clause)
            for q in (clause if p is None else clause[1:]):
                v = q >> 1
                if not seen[v] and level[v] > 0:
                    seen[v] = True
                    self._bump_var(v)
                    if level[v] >= cur:
                        counter += 1
                    else:
                        learnt.append(q)
            while not seen[trail[idx] >> 1]:
                idx -= 1
            p = trail[idx]
            idx -= 1
            clause = reason[p >> 1]
            seen[p >> 1] = False
            counter -= 1
            if counter == 0:
                break
        learnt[0] = p ^ 1
        # drop literals implied by the rest of the clause
        kept = [learnt[0]]
        for q in learnt[1:]:
            r = reason[q >> 1]
            if r is None or not all(seen[x >> 1] or level[x >> 1] == 0 for x in r[1:]):
                kept.append(q)
        for q in learnt[1:]:
            seen[q >> 1] = False
        if len(kept) == 1:
            return kept, 0
        best = max(range(1, len(kept)), key=lambda i: level[kept[i] >> 1])
        kept[1], kept[best] = kept[best], kept[1]
        return kept, level[kept[1] >> 1]

    def _backtrack(self, lvl):
        if len(self.trail_lim) <= lvl:
            return
        val, phase, reason, act, heap = self.val, self.phase, self.reason, self.activity, self.heap
        stop = self.trail_lim[lvl]
        for lit in self.trail[stop:]:
            v = lit >> 1
            val[lit] = 0
            val[lit ^ 1] = 0
            phase[v] = not (lit & 1)
            reason[v] = None
            heapq.heappush(heap, (-act[v], v))
        del self.trail[stop:]
        del self.trail_lim[lvl:]
        self.qhead = len(self.trail)

    def _pick(self):
        heap, val, act = self.heap, self.val, self.activity
        while heap:
            a, v = heapq.heappop(heap)
            if val[2 * v] == 0 and -a == act[v]:
                return 2 * v + (0 if self.phase[v] else 1)
        # stale heap: scan for any unassigned variable
        self._rebuild_heap()
        if self.heap:
            _, v = heapq.heappop(self.heap)
            return 2 * v + (0 if self.phase[v] else 1)
        return None

    def _reduce_db(self):
        val, reason = self.val, self.reason
        lbd, act = self.clause_lbd, self.clause_act

        def locked(c):
            return val[c[0]] == 1 and reason[c[0] >> 1] is c

        ranked = sorted(self.learnts, key=lambda c: (lbd[id(c)], -act[id(c)]))
        half = len(ranked) // 2
        keep, drop = [], 0
        for i, c in enumerate(ranked):
            if i < half or lbd[id(c)] <= 2 or locked(c):
                keep.append(c)
            else:
                del lbd[id(c)]
                del act[id(c)]
                drop += 1
        self.learnts = keep
        self.stats["learnt_deleted"] += drop
        watches = [[] for _ in range(2 * self.nvars)]
        for c in self.long_clauses:
            watches[c[0]].append(c)
            watches[c[1]].append(c)
        for c in keep:
            watches[c[0]].append(c)
            watches[c[1]].append(c)
        self.watches = watches

    def solve(self, budget: int = DEFAULT_BUDGET) -> SatOutcome:
        """Run to a verdict.

        Raises:
            BudgetExceeded: after ``budget`` conflicts without a verdict.
        """
        t0 = time.perf_counter()
        status = self._search(budget) if self.ok else UNSAT
        self.stats["seconds"] = time.perf_counter() - t0
        if status == SAT:
            model = tuple(self.val[2 * v] == 1 for v in range(self.nvars))
            return SatOutcome(SAT, model, dict(self.stats), self.formula)
        return SatOutcome(UNSAT, None, dict(self.stats), self.formula)

    def _search(self, budget):
        if self._propagate() is not None:
            return UNSAT
        restart_limit = float(self.restart_first)
        conflicts_since_restart = 0
        max_learnts = max(2000, len(self.long_clauses) // 3)
        stats = self.stats
        while True:
            confl = self._propagate()
            if confl is not None:
                stats["conflicts"] += 1
                conflicts_since_restart += 1
                if not self.trail_lim:
                    return UNSAT
                if stats["conflicts"] > budget:
                    raise BudgetExceeded(f"conflict budget {budget} exhausted")
                learnt, back = self._analyze(confl)
                self._backtrack(back)
                if len(learnt) == 1:
                    self._assign(learnt[0], None)
                elif len(learnt) == 2:
                    a, b = learnt
                    self.bins[a ^ 1].append(b)
                    self.bins[b ^ 1].append(a)
                    self._assign(a, [a, b])
                else:
                    key = id(learnt)
                    self.clause_lbd[key] = len({self.level[x >> 1] for x in learnt})
                    self.clause_act[key] = self.cla_inc
                    self.learnts.append(learnt)
                    self.watches[learnt[0]].append(learnt)
                    self.watches[learnt[1]].append(learnt)
                    self._assign(learnt[0], learnt)
                self.var_inc /= self.var_decay
                self.cla_inc /= self.clause_decay
                continue
            if conflicts_since_restart >= restart_limit:
                stats["restarts"] += 1
                conflicts_since_restart = 0
                restart_limit *= self.restart_factor
                self._backtrack(0)
                continue
            if len(self.learnts) - len(self.trail) >= max_learnts:
                self._reduce_db()
                max_learnts = int(max_learnts * 1.1)
            if len(self.heap) > 20 * self.nvars + 1000:
                self._rebuild_heap()
            lit = self._pick()
            if lit is None:
                return SAT
            stats["decisions"] += 1
            self.trail_lim.append(len(self.trail))
            self._assign(lit, None)


def solve(formula: CnfFormula, budget: int = DEFAULT_BUDGET, seed: int = 0) -> SatOutcome:
    """Decide ``formula``; SAT outcomes carry a checked model.

    Raises:
        BudgetExceeded: if ``budget`` conflicts pass without a verdict.
    """
    return CDCLSolver(formula, seed=seed).solve(budget)


def chromatic_number_sat(graph: FiniteGraph, lo: int, hi: int, *,
                         symmetry_breaking: bool = False,
                         budget: int = DEFAULT_BUDGET, seed: int = 0):
    """Scan ``k = lo, lo + 1, ...`` until the coloring formula is satisfiable.

    Returns ``(chi, coloring, unsat_k)`` where ``unsat_k`` is the last
    refuted ``k`` (``lo - 1`` when ``lo`` is already colorable).

    Raises:
        ValueError: if ``hi`` colors do not suffice.
    """
    if not 1 <= lo <= hi:
        raise ValueError("need 1 <= lo <= hi")
    unsat_k = lo - 1
    for k in range(lo, hi + 1):
        out = solve(encode_k_coloring(graph, k, symmetry_breaking), budget, seed)
        if out.is_sat:
            coloring = decode_coloring(graph.vertex_count, k, out)
            assert is_proper_coloring(graph, coloring)
            return k, coloring, unsat_k
        unsat_k = k
    raise ValueError(f"graph is not {hi}-colorable")
