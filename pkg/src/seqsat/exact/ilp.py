"""The 0-1 integer program whose optimum is Sat(n, u).

Variables ``x_i_j`` mark letter ``i`` at position ``j`` of a sequence of at
most ``N`` letters; ``y_k`` flags placement ``k`` as missing exactly one
cell.  :func:`solve_ilp` is a depth-first branch-and-bound over the binaries
with bound propagation on every linear row.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from ..core import Pattern
from ..errors import BadParameters, GridTooSmall, Infeasible, ResourceLimit
from .patterns import Kind, Placement, enumerate_placements

LE, GE, EQ = "<=", ">=", "="

# Saturation rows: (family, which side of s_j the letter goes, which rows are
# subtracted, placement kind paired under each convention).  "small" means
# the inserted letter is below s_j, so the copy reads it before s_j when it
# goes left.
_SAT_FAMILIES = (
    ("ins_left_small", "left", "above", Kind.UMINUS, Kind.UPLUS),
    ("ins_left_large", "left", "below", Kind.UPLUS, Kind.UMINUS),
    ("ins_right_small", "right", "above", Kind.UPLUS, Kind.UMINUS),
    ("ins_right_large", "right", "below", Kind.UMINUS, Kind.UPLUS),
)
PAIRINGS = ("reading", "swapped")


@dataclass(frozen=True)
class Constraint:
    name: str
    terms: tuple[tuple[int, int], ...]  # (variable index, coefficient)
    sense: str
    rhs: int
    family: str


@dataclass
class IlpModel:
    n: int
    N: int
    pattern: Pattern
    names: list[str]
    x_index: dict[tuple[int, int], int]
    placements: list[Placement]
    y_offset: int
    constraints: list[Constraint]
    objective: list[int]  # variable indices with coefficient 1
    pairing: str = "reading"

    @property
    def num_vars(self) -> int:
        return len(self.names)

    @property
    def num_constraints(self) -> int:
        return len(self.constraints)

    def y_var(self, k: int) -> int:
        return self.y_offset + k


def _row(name, coeffs: dict[int, int], sense, rhs, family) -> Constraint:
    terms = tuple(sorted((v, a) for v, a in coeffs.items() if a))
    return Constraint(name, terms, sense, rhs, family)


def build_ilp(n: int, N: int, u: Pattern, pairing: str = "reading") -> IlpModel:
    """Assemble the full binary program for alphabet ``n`` and ``N`` columns.

    ``pairing="reading"`` pairs each insertion side with the placement kind
    whose reading order matches it; ``"swapped"`` uses the opposite pairing.
    """
    if pairing not in PAIRINGS:
        raise ValueError(f"pairing must be one of {PAIRINGS}")
    r, l = u.r, len(u)
    if r < 2:
        # same-letter insertions next to an equal letter have no doubled-column form
        raise BadParameters(f"{u} has a single letter; the program needs at least two")
    if N < 1 or n < r:
        raise GridTooSmall(f"grid {n}x{N} too small for {u}")
    names = []
    x_index = {}
    for j in range(1, N + 1):
        for i in range(1, n + 1):
            x_index[i, j] = len(names)
            names.append(f"x_{i}_{j}")
    if N >= l - 1:
        groups = {kind: enumerate_placements(n, N, u, kind) for kind in Kind}
    else:
        groups = {kind: [] for kind in Kind}
    placements = groups[Kind.U] + groups[Kind.UPLUS] + groups[Kind.UMINUS]
    y_offset = len(names)
    names += [f"y_{k + 1}" for k in range(len(placements))]
    by_kind_cell = {kind: {} for kind in Kind}
    for k, p in enumerate(placements):
        for cell in p.cells:
            by_kind_cell[p.kind].setdefault(cell, []).append(y_offset + k)

    rows: list[Constraint] = []
    for k, p in enumerate(placements):
        f = {x_index[c]: 1 for c in sorted(p.cells)}
        y = y_offset + k
        if p.kind is Kind.U:
            rows.append(_row(f"nocopy_{k + 1}", f, LE, l - 1, "nocopy"))
        rows.append(_row(f"ycap_{k + 1}", {y: l - 1, **{v: -1 for v in f}}, LE, 0, "ycap"))
        rows.append(_row(f"yfloor_{k + 1}", {y: 1, **{v: -1 for v in f}}, GE, 2 - l, "yfloor"))

    pick = 3 if pairing == "reading" else 4
    for fam in _SAT_FAMILIES:
        family, side, subtract, kind = fam[0], fam[1], fam[2], fam[pick]
        if side == "left":
            lo, hi = 1 - r, r - 2
        else:
            lo, hi = 2 - r, r - 1
        for i in range(1, n + 1):
            for j in range(1, N + 1):
                coeffs: dict[int, int] = {}
                for v in by_kind_cell[Kind.U].get((i, j), []):
                    coeffs[v] = coeffs.get(v, 0) + 1
                for v in by_kind_cell[kind].get((i, j), []):
                    coeffs[v] = coeffs.get(v, 0) + 1
                others = range(i + 1, n + 1) if subtract == "above" else range(1, i)
                for t in others:
                    coeffs[x_index[t, j]] = coeffs.get(x_index[t, j], 0) - 1
                for t in range(j + lo, j + hi + 1):
                    if 1 <= t <= N:
                        coeffs[x_index[i, t]] = coeffs.get(x_index[i, t], 0) + 1
                rows.append(_row(f"{family}_{i}_{j}", coeffs, GE, 0, family))

    for j in range(1, N + 1):
        col = {x_index[i, j]: 1 for i in range(1, n + 1)}
        rows.append(_row(f"onecol_{j}", col, LE, 1, "onecol"))
    for j in range(1, N):
        coeffs = {x_index[i, j]: 1 for i in range(1, n + 1)}
        coeffs.update({x_index[i, j + 1]: -1 for i in range(1, n + 1)})
        rows.append(_row(f"leftjust_{j}", coeffs, GE, 0, "leftjust"))
    for i in range(1, n + 1):
        for j in range(1, N - r + 2):
            window = {x_index[i, t]: 1 for t in range(j, j + r)}
            rows.append(_row(f"sparse_{i}_{j}", window, LE, 1, "sparse"))
    for i in range(1, r):
        if i <= N:
            rows.append(_row(f"anchor_{i}", {x_index[i, i]: 1}, EQ, 1, "anchor"))

    return IlpModel(
        n, N, u, names, x_index, placements, y_offset, rows,
        sorted(x_index.values()), pairing,
    )


def _format_terms(terms, names, per_line=8) -> str:
    chunks = []
    for pos, (v, a) in enumerate(terms):
        sign = "-" if a < 0 else "+"
        mag = abs(a)
        body = names[v] if mag == 1 else f"{mag} {names[v]}"
        if pos == 0:
            chunks.append(body if sign == "+" else f"- {body}")
        else:
            chunks.append(f"{sign} {body}")
    lines = [" ".join(chunks[k:k + per_line]) for k in range(0, len(chunks), per_line)]
    return "\n   ".join(lines) if lines else "0 " + names[0]


def export_lp(model: IlpModel) -> str:
    """Render the model in CPLEX LP format with deterministic ordering."""
    names = model.names
    out = [
        f"\\ Sat(n, u) program: n={model.n} N={model.N} u={model.pattern} "
        f"pairing={model.pairing}",
        "Minimize",
        " obj: " + _format_terms([(v, 1) for v in model.objective], names),
        "Subject To",
    ]
    for c in model.constraints:
        expr = _format_terms(c.terms, names) if c.terms else f"0 {names[0]}"
        out.append(f" {c.name}: {expr} {c.sense} {c.rhs}")
    out.append("Binaries")
    for k in range(0, len(names), 10):
        out.append(" " + " ".join(names[k:k + 10]))
    out.append("End")
    return "\n".join(out) + "\n"


@dataclass
class IlpSolution:
    objective: int
    values: list[int]
    seq: tuple[int, ...]
    nodes: int
    elapsed: float = 0.0
    x: dict[tuple[int, int], int] = field(default_factory=dict)


class _Propagator:
    """Row activity bookkeeping for binaries; all rows stored as ``a.x <= b``."""

    def __init__(self, model: IlpModel):
        nv = model.num_vars
        self.rows_v: list[list[int]] = []
        self.rows_a: list[list[int]] = []
        self.rhs: list[int] = []
        for c in model.constraints:
            vs = [v for v, _ in c.terms]
            as_ = [a for _, a in c.terms]
            if c.sense in (LE, EQ):
                self._add(vs, as_, c.rhs)
            if c.sense in (GE, EQ):
                self._add(vs, [-a for a in as_], -c.rhs)
        # objective cutoff row, tightened as incumbents appear
        self.obj_row = len(self.rhs)
        self._add(list(model.objective), [1] * len(model.objective), len(model.objective))
        m = len(self.rhs)
        self.minact = [sum(a for a in row if a < 0) for row in self.rows_a]
        self.maxabs = [max((abs(a) for a in row), default=0) for row in self.rows_a]
        # occurrences that move the row minimum when the variable is set to 1 / 0
        self.on_one: list[list[tuple[int, int]]] = [[] for _ in range(nv)]
        self.on_zero: list[list[tuple[int, int]]] = [[] for _ in range(nv)]
        for c in range(m):
            for v, a in zip(self.rows_v[c], self.rows_a[c]):
                if a > 0:
                    self.on_one[v].append((c, a))
                else:
                    self.on_zero[v].append((c, -a))
        self.val = [-1] * nv
        self.trail: list[int] = []

    def _add(self, vs, as_, b):
        self.rows_v.append(vs)
        self.rows_a.append(as_)
        self.rhs.append(b)

    def fix(self, v: int, value: int, queue: list[int]) -> bool:
        self.val[v] = value
        self.trail.append(v)
        ok = True
        minact, rhs, maxabs = self.minact, self.rhs, self.maxabs
        for c, d in (self.on_one[v] if value else self.on_zero[v]):
            minact[c] += d
            slack = rhs[c] - minact[c]
            if slack < 0:
                ok = False
            elif slack < maxabs[c]:
                queue.append(c)
        return ok

    def propagate(self, queue: list[int]) -> bool:
        val, minact, rhs = self.val, self.minact, self.rhs
        while queue:
            c = queue.pop()
            slack = rhs[c] - minact[c]
            if slack < 0:
                return False
            for v, a in zip(self.rows_v[c], self.rows_a[c]):
                if val[v] < 0 and (a if a > 0 else -a) > slack:
                    if not self.fix(v, 0 if a > 0 else 1, queue):
                        return False
        return True

    def undo(self, mark: int):
        val, minact = self.val, self.minact
        while len(self.trail) > mark:
            v = self.trail.pop()
            for c, d in (self.on_one[v] if val[v] else self.on_zero[v]):
                minact[c] -= d
            val[v] = -1

    def all_rows(self) -> list[int]:
        return list(range(len(self.rhs)))


def decode(model: IlpModel, values) -> tuple[int, ...]:
    """Read the sequence off the x grid, stopping at the first empty column."""
    seq = []
    for j in range(1, model.N + 1):
        rows = [i for i in range(1, model.n + 1) if values[model.x_index[i, j]]]
        if not rows:
            break
        seq.append(rows[0])
    return tuple(seq)


def encode(model: IlpModel, seq) -> list[int]:
    """Assignment of every variable induced by a sequence of at most N letters."""
    if len(seq) > model.N:
        raise GridTooSmall(f"sequence of length {len(seq)} exceeds N = {model.N}")
    values = [0] * model.num_vars
    for j, letter in enumerate(seq, start=1):
        values[model.x_index[letter, j]] = 1
    l = len(model.pattern)
    for k, p in enumerate(model.placements):
        f = sum(values[model.x_index[c]] for c in p.cells)
        values[model.y_var(k)] = int(f == l - 1)
    return values


def violated(model: IlpModel, values) -> list[Constraint]:
    bad = []
    for c in model.constraints:
        act = sum(a * values[v] for v, a in c.terms)
        if (c.sense == LE and act > c.rhs) or (c.sense == GE and act < c.rhs) or (
            c.sense == EQ and act != c.rhs
        ):
            bad.append(c)
    return bad


def solve_ilp(
    model: IlpModel,
    max_nodes: int | None = None,
    time_limit: float | None = None,
    check: bool = True,
) -> IlpSolution:
    """Exact minimum of the objective by depth-first branch-and-bound.

    x variables are branched in column-major order with value 1 tried
    before 0, so the first optimum reached is the lexicographically least
    decoded sequence.  With ``check`` the decoded optimum is re-verified as
    saturated by the combinatorial checker.
    """
    start = time.perf_counter()
    prop = _Propagator(model)
    order = list(model.objective) + [model.y_var(k) for k in range(len(model.placements))]
    best: list[int] | None = None
    best_obj = None
    nodes = 0

    queue = prop.all_rows()
    if not prop.propagate(queue):
        raise Infeasible(f"root infeasible for N = {model.N}")

    def recurse(depth: int):
        nonlocal best, best_obj, nodes
        nodes += 1
        if max_nodes is not None and nodes > max_nodes:
            raise ResourceLimit("node limit reached", best_obj, nodes)
        if time_limit is not None and time.perf_counter() - start > time_limit:
            raise ResourceLimit("time limit reached", best_obj, nodes)
        while depth < len(order) and prop.val[order[depth]] >= 0:
            depth += 1
        if depth == len(order):
            obj = sum(prop.val[v] for v in model.objective)
            best = list(prop.val)
            best_obj = obj
            prop.rhs[prop.obj_row] = obj - 1
            return
        v = order[depth]
        for value in (1, 0):
            if prop.rhs[prop.obj_row] - prop.minact[prop.obj_row] < 0:
                return
            mark = len(prop.trail)
            queue = [prop.obj_row]
            if prop.fix(v, value, queue) and prop.propagate(queue):
                recurse(depth + 1)
            prop.undo(mark)

    recurse(0)
    if best is None:
        raise Infeasible(f"no feasible point with N = {model.N}; raise N above Sat(n, u)")
    seq = decode(model, best)
    if check:
        from ..saturation import verify

        report = verify(seq, model.n, model.pattern)
        if not report.saturated:
            raise AssertionError(f"decoded optimum {seq} is {report.verdict}")
    x = {cell: best[v] for cell, v in model.x_index.items()}
    return IlpSolution(best_obj, best, seq, nodes, time.perf_counter() - start, x)
