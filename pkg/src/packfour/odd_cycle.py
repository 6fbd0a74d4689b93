"""Grow the two 2-packings until what is left is bipartite.

Starting from the triangle-breaker's pair, repeatedly find a shortest odd
cycle in the remainder (the subgraph induced by unchosen vertices), scan its
vertices in witness order, and absorb the first one that can join a side
without breaking that side's 2-packing — side a is tried before side b.
Distances are always measured in the original graph, not the remainder.

Every absorption deletes a vertex from the remainder, so the loop ends after
at most n steps with a bipartite remainder, or raises StuckOddCycle carrying
the offending cycle and a claw search result (non-claw-free inputs are the
expected cause of a stuck run).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import StuckOddCycle
from .graph import Graph, OddCycle, find_claw, induced_subgraph, set_distance_at_least, shortest_odd_cycle
from .triangle_break import PackingPair


@dataclass(frozen=True)
class Addition:
    vertex: int
    side: str  # "A" or "B"
    cycle_length: int

    def to_record(self) -> dict:
        return {"vertex": self.vertex, "side": self.side, "cycle_length": self.cycle_length}


@dataclass(frozen=True)
class ReductionState:
    base_a: frozenset[int]
    base_b: frozenset[int]
    ext_a: frozenset[int]
    ext_b: frozenset[int]
    remaining: frozenset[int]
    additions: tuple[Addition, ...]


def addable_side(g: Graph, state: ReductionState, v: int) -> str | None:
    """Which side v may join: "A" if distance >= 3 from ext_a, else "B", else None."""
    if v not in state.remaining:
        raise ValueError(f"vertex {v} is not in the remainder")
    if set_distance_at_least(g, v, state.ext_a, 3):
        return "A"
    if set_distance_at_least(g, v, state.ext_b, 3):
        return "B"
    return None


def _snapshot(pair: PackingPair, ext_a, ext_b, remaining, additions) -> ReductionState:
    return ReductionState(
        base_a=pair.a,
        base_b=pair.b,
        ext_a=frozenset(ext_a),
        ext_b=frozenset(ext_b),
        remaining=frozenset(remaining),
        additions=tuple(additions),
    )


def reduce_odd_cycles(g: Graph, pair: PackingPair) -> tuple[ReductionState, list[Addition]]:
    """Absorb one vertex per shortest odd cycle until the remainder is bipartite."""
    ext_a = set(pair.a)
    ext_b = set(pair.b)
    remaining = set(range(g.n)) - ext_a - ext_b
    additions: list[Addition] = []
    while True:
        sub, mapping = induced_subgraph(g, remaining)
        witness = shortest_odd_cycle(sub)
        if witness is None:
            return _snapshot(pair, ext_a, ext_b, remaining, additions), additions
        cycle: OddCycle = tuple(mapping[i] for i in witness)
        state = _snapshot(pair, ext_a, ext_b, remaining, additions)
        for v in cycle:
            side = addable_side(g, state, v)
            if side is None:
                continue
            if side == "A":
                ext_a.add(v)
            else:
                ext_b.add(v)
            remaining.discard(v)
            additions.append(Addition(v, side, len(cycle)))
            break
        else:
            raise StuckOddCycle(state, cycle, find_claw(g))
