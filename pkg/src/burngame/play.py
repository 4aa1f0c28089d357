"""Terminal play against the engine.

The session is driven by an input callable and an output callable so it can
run against stdin/stdout, a recorded move list, or a test harness.
"""

from __future__ import annotations

import json
from collections.abc import Callable
from dataclasses import dataclass, field

from .engine import BURNER, GameSolver, Player, spread
from .formats import emit_graph6, parse_graph6
from .graph import Graph, bits, closed_neighborhood, neighborhood

EXACT_MAX_VERTICES = 20


class SessionAborted(Exception):
    pass


def heuristic_move(g: Graph, after: int, player: Player) -> int:
    """Non-optimal reply for graphs too large to solve.

    Staller picks the unburned vertex farthest from the fire.  Burner picks
    the vertex whose ball covers the most unburned vertices, growing the
    radius until the choice is unique or the balls stop changing.
    """
    free = g.full & ~after
    if player == BURNER:
        candidates = list(bits(free))
        radius = 1
        while len(candidates) > 1:
            scores = {v: (closed_neighborhood(g, 1 << v, radius) & free).bit_count() for v in candidates}
            top = max(scores.values())
            narrowed = [v for v in candidates if scores[v] == top]
            if len(narrowed) == len(candidates) and radius >= g.n:
                break
            candidates = narrowed
            radius += 1
        return candidates[0]
    region, last = after, free
    while True:
        grown = neighborhood(g, region)
        if grown & free == free or grown == region:
            break
        region = grown
        last = free & ~region
    candidates = last & free
    return (candidates & -candidates).bit_length() - 1


@dataclass
class Session:
    g: Graph
    human: Player
    starter: Player = BURNER
    exact: bool = True
    inputs: list[str] = field(default_factory=list)

    def run(self, read: Callable[[], str], write: Callable[[str], None]) -> int:
        """Play one game; returns the number of rounds.  ``read`` raises ``EOFError`` to abort."""
        g = self.g
        solver = GameSolver(g) if self.exact else None
        write(f"graph on {g.n} vertices, {g.num_edges} edges; {self.starter} moves first; you are {self.human}")
        if not self.exact:
            write("warning: heuristic engine, replies are not optimal")
        burned, player, rnd = 0, self.starter, 0
        while burned != g.full:
            rnd += 1
            after = spread(g, burned)
            delta = after & ~burned
            write(f"round {rnd}: fire spreads to {sorted(bits(delta))}")
            burned = after
            if burned == g.full:
                break
            if player == self.human:
                v = self._ask(read, write, burned)
                write(f"round {rnd}: you ({player}) burn {v}")
            else:
                v = solver.best_move(burned, player)[1] if solver else heuristic_move(g, burned, player)
                write(f"round {rnd}: engine ({player}) burns {v}")
            burned |= 1 << v
            player = player.other
        write(f"game over after {rnd} rounds")
        if solver is not None:
            write(f"optimal value with {self.starter} first: {solver.value(0, self.starter)}")
        return rnd

    def _ask(self, read, write, burned: int) -> int:
        free = sorted(bits(self.g.full & ~burned))
        while True:
            write(f"unburned {free}; your move:")
            try:
                raw = read()
            except EOFError:
                write("input closed; game aborted")
                raise SessionAborted from None
            self.inputs.append(raw)
            text = raw.strip()
            if not text.lstrip("-").isdigit():
                write(f"not a vertex: {text!r}")
                continue
            v = int(text)
            if not 0 <= v < self.g.n:
                write(f"no vertex {v}")
            elif burned >> v & 1:
                write(f"vertex {v} is already burned")
            else:
                return v

    def record(self) -> dict:
        return {
            "graph6": emit_graph6(self.g),
            "human": str(self.human),
            "starter": str(self.starter),
            "exact": self.exact,
            "inputs": list(self.inputs),
        }


def load_recording(path: str) -> tuple[Session, list[str]]:
    """A fresh session for the recorded game, plus the recorded human inputs."""
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    players = {str(p): p for p in Player}
    session = Session(parse_graph6(data["graph6"]), players[data["human"]], players[data["starter"]], data["exact"])
    return session, list(data["inputs"])


def scripted_reader(moves: list[str]) -> Callable[[], str]:
    it = iter(list(moves))

    def read() -> str:
        try:
            return next(it)
        except StopIteration:
            raise EOFError from None

    return read
