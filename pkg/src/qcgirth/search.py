"""Greedy construction and simulated annealing for certifiable seeds.

The target is a canonical (3,L) exponent matrix that is girth-12 at some
size Q <= q_cap and satisfies the two ordering conditions, with the row-2
maximum as small as possible: the family's shortest member length is
L * (2 * p2_max + 1), so p2_max is the cost that matters.

Greedy placement picks, column by column, the lexicographically smallest
(p1, p2) pair with p1 <= p2 that keeps every cycle length through 10 open
at modulus q_cap.  Annealing then walks single-entry perturbations under a
penalized cost, repairing the row order by swapping.  Restart chains use
rng streams seed + i and the winner is the minimum-cost result with ties
broken by restart index, so the outcome does not depend on scheduling.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .errors import SearchBudgetError
from .extension import ConditionReport, check_seed_conditions, _row_extremes
from .girth import find_cycle, girth_fast
from .matrices import ExponentMatrix

_MOVE_SPAN = 8  # single-entry perturbation offsets drawn from [-8, 8] \ {0}
_PENALTY_FACTOR = 10  # penalty per violated condition is 10 * q_cap


@dataclass(frozen=True)
class SearchConfig:
    """Knobs for the seed search; only `cols` and `q_cap` are problem data."""

    cols: int
    q_cap: int
    seed: int = 0
    max_steps: int = 200_000
    initial_temperature: float = 10.0
    cooling_rate: float = 0.995
    restarts: int = 8
    greedy_enforce_gap: bool = False

    def __post_init__(self):
        if self.cols < 1:
            raise ValueError("cols must be >= 1")
        if self.q_cap < 2:
            raise ValueError("q_cap must be >= 2")
        if self.max_steps < 1:
            raise ValueError("max_steps must be >= 1")
        if not 0.0 < self.cooling_rate < 1.0:
            raise ValueError("cooling_rate must be in (0, 1)")
        if self.initial_temperature <= 0.0:
            raise ValueError("initial_temperature must be positive")
        if self.restarts < 1:
            raise ValueError("restarts must be >= 1")


def _has_short_cycle(matrix: ExponentMatrix, q: int) -> bool:
    """True when some cycle of length 4..10 closes at modulus q."""
    for length in (4, 6, 8, 10):
        if find_cycle(matrix, q, length) is not None:
            return True
    return False


def _condition_flags(matrix: ExponentMatrix, q_cap: int) -> tuple[bool, bool, bool]:
    """(girth-12 at q_cap, element-wise order, row-2 gap)."""
    no_short = not _has_short_cycle(matrix, q_cap)
    cond2 = all(a <= b for a, b in zip(matrix.entries[1], matrix.entries[2]))
    p1_max, p2_max, p2_second = _row_extremes(matrix)
    cond3 = (p2_max - p2_second) >= p1_max
    return no_short, cond2, cond3


def _cost(matrix: ExponentMatrix, cfg: SearchConfig) -> int:
    flags = _condition_flags(matrix, cfg.q_cap)
    violations = sum(1 for ok in flags if not ok)
    return max(matrix.entries[2]) + _PENALTY_FACTOR * cfg.q_cap * violations


def _gap_ok(p1s: list[int], p2s: list[int]) -> bool:
    ordered = sorted(p2s, reverse=True)
    second = ordered[1] if len(ordered) >= 2 else ordered[0]
    return (ordered[0] - second) >= max(p1s)


def greedy_seed(cfg: SearchConfig) -> ExponentMatrix:
    """Column-by-column lexicographic construction, girth-12 at q_cap.

    The output always keeps p1 <= p2 per column but may violate the row-2
    gap condition; it is a starting point for :func:`anneal`, not a
    certified seed.  With ``greedy_enforce_gap`` the gap condition is also
    enforced on every prefix.
    """
    p1s, p2s = [0], [0]
    for _ in range(1, cfg.cols):
        placed = None
        for a in range(cfg.q_cap):
            for b in range(a, cfg.q_cap):
                candidate = ExponentMatrix.from_rows(
                    [[0] * (len(p1s) + 1), p1s + [a], p2s + [b]]
                )
                if _has_short_cycle(candidate, cfg.q_cap):
                    continue
                if cfg.greedy_enforce_gap and not _gap_ok(p1s + [a], p2s + [b]):
                    continue
                placed = (a, b)
                break
            if placed:
                break
        if placed is None:
            raise SearchBudgetError(
                f"no feasible column within exponents < {cfg.q_cap}: "
                f"q_cap too small for L={cfg.cols}"
            )
        p1s.append(placed[0])
        p2s.append(placed[1])
    return ExponentMatrix.from_rows([[0] * cfg.cols, p1s, p2s])


def _perturb(entries: list[list[int]], cfg: SearchConfig, rng: random.Random) -> None:
    """Offset one non-first-column entry in place, repairing row order."""
    u = rng.randint(1, 2)
    v = rng.randint(1, cfg.cols - 1)
    offset = rng.randint(1, _MOVE_SPAN)
    if rng.random() < 0.5:
        offset = -offset
    entries[u][v] = min(max(entries[u][v] + offset, 0), cfg.q_cap - 1)
    if entries[1][v] > entries[2][v]:
        entries[1][v], entries[2][v] = entries[2][v], entries[1][v]


def _chain(start: ExponentMatrix, cfg: SearchConfig, stream: int) -> tuple[int, ExponentMatrix]:
    """One annealing chain on rng stream seed + stream; returns (cost, best)."""
    rng = random.Random(cfg.seed + stream)
    current = [list(row) for row in start.entries]
    current_cost = _cost(start, cfg)
    best, best_cost = start, current_cost
    temperature = cfg.initial_temperature
    for _ in range(cfg.max_steps):
        proposal = [list(row) for row in current]
        _perturb(proposal, cfg, rng)
        candidate = ExponentMatrix.from_rows(proposal)
        candidate_cost = _cost(candidate, cfg)
        delta = candidate_cost - current_cost
        if delta <= 0 or rng.random() < math.exp(-delta / max(temperature, 1e-12)):
            current, current_cost = proposal, candidate_cost
            if candidate_cost < best_cost:
                best, best_cost = candidate, candidate_cost
        temperature *= cfg.cooling_rate
    return best_cost, best


def _ranked_chain_results(start: ExponentMatrix, cfg: SearchConfig) -> list[tuple[int, int, ExponentMatrix]]:
    results = []
    for i in range(cfg.restarts):
        cost, matrix = _chain(start, cfg, i)
        results.append((cost, i, matrix))
    results.sort(key=lambda t: (t[0], t[1]))
    return results


def anneal(start: ExponentMatrix, cfg: SearchConfig) -> ExponentMatrix:
    """Best matrix over cfg.restarts Metropolis chains from *start*.

    Deterministic for fixed (start, cfg): chains derive their rng from
    cfg.seed and the winner is the minimum-cost result, ties to the lowest
    restart index.  Never worse than the best state seen, which includes
    the start itself.
    """
    if start.rows != 3:
        raise ValueError("annealing expects a (3,L) matrix")
    if not all(e == 0 for e in start.entries[0]):
        raise ValueError("annealing expects a canonical start")
    return _ranked_chain_results(start, cfg)[0][2]


def find_certified_seed(cfg: SearchConfig) -> tuple[ExponentMatrix, int, ConditionReport]:
    """Greedy start, annealing restarts, then certification scan over Q.

    Candidates are examined in (cost, restart index) order; for each, Q
    scans upward from just above the largest entry to q_cap until the
    girth reaches 12, and the first candidate whose full condition report
    passes is returned with that Q.
    """
    start = greedy_seed(cfg)
    seen: set[tuple[tuple[int, ...], ...]] = set()
    for _, _, candidate in _ranked_chain_results(start, cfg):
        if candidate.entries in seen:
            continue
        seen.add(candidate.entries)
        no_short, cond2, cond3 = _condition_flags(candidate, cfg.q_cap)
        if not (cond2 and cond3):
            continue
        for q in range(max(2, candidate.max_entry + 1), cfg.q_cap + 1):
            if girth_fast(candidate, q).girth == 12:
                report = check_seed_conditions(candidate, q)
                if report.all_pass:
                    return candidate, q, report
                break
    raise SearchBudgetError(
        "search budget exhausted without a certified seed; "
        "increase q_cap / max_steps"
    )
