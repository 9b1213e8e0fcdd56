"""Exact values of Sat(n, u) from two independent engines."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from ..core import Pattern, Seq
from ..errors import AlphabetTooSmall, EngineDisagreement
from .ilp import IlpModel, IlpSolution, build_ilp, decode, encode, export_lp, solve_ilp, violated
from .patterns import Kind, PatternMatrix, Placement, enumerate_pattern_matrices, enumerate_placements
from .search import search_sat

ENGINES = ("both", "search", "ilp")


@dataclass
class ExactResult:
    n: int
    pattern: Pattern
    value: int
    witness: Seq
    engine: str
    engines_agree: bool | None
    N: int | None = None
    vars: int | None = None
    constraints: int | None = None
    nodes: int | None = None
    elapsed: dict[str, float] = field(default_factory=dict)

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "n": self.n,
            "pattern": str(self.pattern),
            "sat": self.value,
            "witness": list(self.witness),
            "engine": self.engine,
            "engines_agree": self.engines_agree,
            "N": self.N,
            "vars": self.vars,
            "constraints": self.constraints,
        }
        if timing:
            out["elapsed_ms"] = round(1000 * sum(self.elapsed.values()), 3)
        return out


def sat_exact(
    n: int,
    u: Pattern,
    engine: str = "both",
    N: int | None = None,
    max_nodes: int | None = None,
    time_limit: float | None = None,
    pairing: str = "reading",
) -> ExactResult:
    """Compute Sat(n, u); with ``engine="both"`` the two answers must coincide.

    ``N`` defaults to one more than the greedy saturated length, which is
    strictly above Sat(n, u).
    """
    from ..saturation import greedy_saturate

    if engine not in ENGINES:
        raise ValueError(f"engine must be one of {ENGINES}")
    if n < u.r:
        raise AlphabetTooSmall(f"n = {n} is below the {u.r} letters of {u}")
    greedy_len = len(greedy_saturate(n, u))
    elapsed: dict[str, float] = {}
    found = None
    if engine in ("both", "search"):
        t0 = time.perf_counter()
        found = search_sat(n, u, greedy_len)
        elapsed["search"] = time.perf_counter() - t0
    if engine == "both" and u.r < 2:
        engine = "search"  # the integer program needs two distinct letters
    if engine == "search":
        value, witness = found
        return ExactResult(n, u, value, witness, engine, None, elapsed=elapsed)

    if N is None:
        N = greedy_len + 1
    t0 = time.perf_counter()
    model = build_ilp(n, N, u, pairing)
    sol = solve_ilp(model, max_nodes=max_nodes, time_limit=time_limit)
    elapsed["ilp"] = time.perf_counter() - t0
    ilp_witness = Seq(sol.seq, n)
    agree = None
    if found is not None:
        agree = found[0] == sol.objective
        if not agree:
            raise EngineDisagreement(
                f"search gives {found[0]} ({found[1]}), integer program gives "
                f"{sol.objective} ({ilp_witness}) for n={n}, u={u}",
                search=found,
                ilp=(sol.objective, ilp_witness),
            )
    witness = found[1] if found is not None else ilp_witness
    return ExactResult(
        n, u, sol.objective, witness, engine, agree, N,
        model.num_vars, model.num_constraints, sol.nodes, elapsed,
    )


__all__ = [
    "ENGINES", "ExactResult", "IlpModel", "IlpSolution", "Kind", "PatternMatrix",
    "Placement", "build_ilp", "decode", "encode", "enumerate_pattern_matrices",
    "enumerate_placements", "export_lp", "sat_exact", "search_sat", "solve_ilp", "violated",
]
