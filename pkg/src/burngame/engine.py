"""Exact solvers for the burning game.

A state is the burned vertex set at the end of a round plus the player who
selects next.  Each round spreads fire to all neighbours of burned vertices
and then, unless everything is burned, the player to move burns one
unburned vertex.  The game ends in the first round after which every vertex
is burned; its length is the number of rounds.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .graph import Graph, VertexSet, bits, mask_of, neighborhood


class Player(enum.IntEnum):
    BURNER = 0
    STALLER = 1

    @property
    def other(self) -> Player:
        return Player(1 - self)

    def __str__(self) -> str:
        return self.name.capitalize()


BURNER = Player.BURNER
STALLER = Player.STALLER


def spread(g: Graph, b: VertexSet) -> VertexSet:
    """``b`` plus every neighbour of ``b``."""
    return neighborhood(g, b)


@dataclass(frozen=True)
class Round:
    spread_delta: VertexSet
    actor: Player | None = None
    selected: int | None = None

    @property
    def spread_only(self) -> bool:
        return self.selected is None


@dataclass(frozen=True)
class PlayTrace:
    initial: VertexSet
    starter: Player
    rounds: tuple[Round, ...] = field(default_factory=tuple)

    def replay(self, g: Graph) -> int:
        """Re-run the trace under the game rules; return its length.

        Raises ``ValueError`` if any round breaks a rule.
        """
        burned = self.initial
        player = self.starter
        if burned == g.full:
            if self.rounds:
                raise ValueError("rounds recorded for an already burned graph")
            return 0
        for i, rnd in enumerate(self.rounds):
            after = spread(g, burned)
            if after & ~burned != rnd.spread_delta:
                raise ValueError(f"round {i + 1}: spread delta mismatch")
            burned = after
            if rnd.spread_only:
                if burned != g.full:
                    raise ValueError(f"round {i + 1}: no selection but graph not burned")
                if i != len(self.rounds) - 1:
                    raise ValueError("selection-free round before the end")
                return i + 1
            if rnd.actor != player:
                raise ValueError(f"round {i + 1}: {rnd.actor} moved out of turn")
            if burned >> rnd.selected & 1:
                raise ValueError(f"round {i + 1}: vertex {rnd.selected} already burned")
            burned |= 1 << rnd.selected
            player = player.other
            if burned == g.full:
                if i != len(self.rounds) - 1:
                    raise ValueError("rounds recorded after the graph burned")
                return i + 1
        raise ValueError("trace ends before the graph is burned")

    def to_json(self) -> dict:
        return {
            "initial": sorted(bits(self.initial)),
            "starter": str(self.starter),
            "rounds": [
                {
                    "spread": sorted(bits(r.spread_delta)),
                    "actor": None if r.actor is None else str(r.actor),
                    "selected": r.selected,
                }
                for r in self.rounds
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> PlayTrace:
        players = {str(p): p for p in Player}
        rounds = tuple(
            Round(
                mask_of(r["spread"]),
                None if r["actor"] is None else players[r["actor"]],
                r["selected"],
            )
            for r in data["rounds"]
        )
        return cls(mask_of(data["initial"]), players[data["starter"]], rounds)


class GameSolver:
    """Memoized minimax for one graph.

    ``table`` maps ``(burned << 1) | to_move`` to the number of rounds still
    needed from a state reached at the end of some round (so the next round
    begins with a spread).  Reusing one solver across queries on the same
    graph shares the table.
    """

    def __init__(self, g: Graph) -> None:
        self.g = g
        self.full = g.full
        self.table: dict[int, int] = {}

    def _value(self, burned: VertexSet, player: int) -> int:
        key = (burned << 1) | player
        cached = self.table.get(key)
        if cached is not None:
            return cached
        after = spread(self.g, burned)
        if after == self.full:
            self.table[key] = 1
            return 1
        result = self._select(after, player)
        self.table[key] = result
        return result

    def _select(self, after: VertexSet, player: int) -> int:
        """Rounds needed when ``player`` is about to select from post-spread set ``after``."""
        full = self.full
        free = full & ~after
        other = 1 - player
        best = -1
        while free:
            low = free & -free
            free ^= low
            nxt = after | low
            v = 1 if nxt == full else 1 + self._value(nxt, other)
            if player == BURNER:
                if best < 0 or v < best:
                    best = v
                    if best == 1:
                        break
            elif v > best:
                best = v
        return best

    def value(self, b0: VertexSet, starter: Player) -> int:
        if b0 == self.full:
            return 0
        return self._value(b0, starter)

    def selection_first_value(self, b0: VertexSet, starter: Player) -> int:
        if b0 == self.full:
            return 0
        return self._select(b0, starter)

    def best_move(self, after: VertexSet, player: Player) -> tuple[int, int]:
        """Optimal selection from post-spread set ``after``, lowest index among ties.

        Returns ``(rounds_needed, vertex)`` where the count includes the
        current round.
        """
        target = self._select(after, player)
        for v in bits(self.full & ~after):
            nxt = after | (1 << v)
            if (1 if nxt == self.full else 1 + self._value(nxt, 1 - player)) == target:
                return target, v
        raise ValueError("no unburned vertex to select")

    def principal_variation(self, b0: VertexSet, starter: Player) -> tuple[int, PlayTrace]:
        value = self.value(b0, starter)
        rounds = []
        burned = b0
        player = starter
        while burned != self.full:
            after = spread(self.g, burned)
            delta = after & ~burned
            if after == self.full:
                rounds.append(Round(delta))
                break
            _, v = self.best_move(after, player)
            rounds.append(Round(delta, Player(player), v))
            burned = after | (1 << v)
            player = Player(player).other
        return value, PlayTrace(b0, starter, tuple(rounds))


def game_value(g: Graph, b0: VertexSet = 0, starter: Player = BURNER) -> int:
    """Optimal game length from ``b0`` burned at the end of round 0.

    ``game_value(g, 0, BURNER)`` is ``b_g(G)``; with ``STALLER`` it is ``b_g'(G)``.
    """
    return GameSolver(g).value(b0, starter)


def bg(g: Graph) -> int:
    return game_value(g, 0, BURNER)


def bg_prime(g: Graph) -> int:
    return game_value(g, 0, STALLER)


def selection_first_value(g: Graph, b0: VertexSet, starter: Player) -> int:
    """Like ``game_value`` but the first round skips the spreading phase."""
    return GameSolver(g).selection_first_value(b0, starter)


def principal_variation(g: Graph, b0: VertexSet = 0, starter: Player = BURNER) -> tuple[int, PlayTrace]:
    """Value plus an optimal line of play, lowest vertex index among ties."""
    return GameSolver(g).principal_variation(b0, starter)


def _single_player(g: Graph, b0: VertexSet, maximize: bool) -> int:
    full = g.full
    table: dict[int, int] = {}

    def select(after: int) -> int:
        best = -1
        free = full & ~after
        while free:
            low = free & -free
            free ^= low
            nxt = after | low
            v = 1 if nxt == full else 1 + value(nxt)
            if best < 0 or (v > best if maximize else v < best):
                best = v
        return best

    def value(burned: int) -> int:
        cached = table.get(burned)
        if cached is None:
            after = spread(g, burned)
            cached = 1 if after == full else select(after)
            table[burned] = cached
        return cached

    if b0 == full:
        return 0
    return value(b0)


def burner_only_value(g: Graph, b0: VertexSet = 0) -> int:
    return _single_player(g, b0, maximize=False)


def staller_only_value(g: Graph, b0: VertexSet = 0) -> int:
    """Game length when Staller makes every selection; used as the cooling number."""
    return _single_player(g, b0, maximize=True)


def cooling_number(g: Graph) -> int:
    return staller_only_value(g, 0)


class ScriptExhausted(RuntimeError):
    """Burner needed a move beyond the end of his script."""


class BoundedSolver:
    """Boolean minimax: can Burner force the game to end within ``r`` rounds?

    Memo key is ``(burned, to_move, rounds_left)``.  With ``prune`` set, a
    state is rejected early when even a single player choosing every
    remaining selection could not cover the graph in time.
    """

    def __init__(self, g: Graph, prune: bool = True) -> None:
        from .classical import BallCover

        self.g = g
        self.full = g.full
        self.prune = prune
        self.cover = BallCover(g)
        self.table: dict[tuple[int, int, int], bool] = {}
        self.nodes = 0

    def _relaxed_ok(self, burned: VertexSet, r: int) -> bool:
        covered = burned
        for _ in range(r):
            covered = spread(self.g, covered)
        return self.cover.feasible(covered, tuple(range(r - 1, -1, -1)))

    def win(self, burned: VertexSet, player: int, r: int) -> bool:
        if burned == self.full:
            return True
        if r == 0:
            return False
        key = (burned, player, r)
        cached = self.table.get(key)
        if cached is not None:
            return cached
        self.nodes += 1
        after = spread(self.g, burned)
        free = self.full & ~after
        if not free or free & (free - 1) == 0:
            result = True
        elif r == 1:
            result = False
        elif self.prune and r >= 2 and not self._relaxed_ok(burned, r):
            result = False
        else:
            result = self._select(after, player, r)
        self.table[key] = result
        return result

    def _select(self, after: VertexSet, player: int, r: int) -> bool:
        full = self.full
        other = 1 - player
        moves = list(bits(full & ~after))
        if player == STALLER:
            moves.sort(key=self._distance_key(after), reverse=True)
        for v in moves:
            nxt = after | (1 << v)
            ok = nxt == full or self.win(nxt, other, r - 1)
            if player == BURNER and ok:
                return True
            if player == STALLER and not ok:
                return False
        return player == STALLER

    def _distance_key(self, burned: VertexSet):
        """Order Staller moves far-from-fire first; those refute Burner fastest."""
        dist = {}
        region, d = burned, 0
        remaining = self.full & ~burned
        while remaining:
            grown = spread(self.g, region)
            layer = grown & ~region
            if not layer:
                break
            d += 1
            for v in bits(layer):
                dist[v] = d
            remaining &= ~layer
            region = grown
        far = d + 1
        return lambda v: (dist.get(v, far), -v)


def can_finish_within(g: Graph, b0: VertexSet, starter: Player, r: int, prune: bool = True) -> bool:
    """True iff Burner can force the game from ``b0`` to end within ``r`` rounds."""
    if r < 0:
        raise ValueError("round budget must be non-negative")
    return BoundedSolver(g, prune).win(b0, starter, r)


def verify_burner_script(
    g: Graph,
    b0: VertexSet,
    starter: Player,
    script: list[int],
    r: int | None = None,
) -> int:
    """Worst-case game length when Burner plays ``script`` and Staller plays anything.

    Burner's ``i``-th turn selects ``script[i]``, or the lowest-index
    unburned vertex when that one already burns.  Every Staller reply is
    explored.  Branches still running after round ``r`` (default ``n``)
    are cut and counted as ``r + 1``.  Raises ``ScriptExhausted`` when
    Burner must move at or before round ``r`` with no script left.
    """
    horizon = g.n if r is None else r
    full = g.full
    memo: dict[tuple[int, int], int] = {}

    def worst(burned: int, rnd: int, player: int, turn: int) -> int:
        # rnd: the round about to be played; turn: Burner moves made so far
        if burned == full:
            return rnd - 1
        if rnd > horizon:
            return horizon + 1
        key = (burned, rnd)
        if key in memo:
            return memo[key]
        after = spread(g, burned)
        if after == full:
            result = rnd
        elif player == BURNER:
            if turn >= len(script):
                raise ScriptExhausted(f"Burner has no scripted move for round {rnd}")
            v = script[turn]
            if after >> v & 1:
                free = full & ~after
                v = (free & -free).bit_length() - 1
            result = worst(after | (1 << v), rnd + 1, STALLER, turn + 1)
        else:
            result = max(worst(after | (1 << v), rnd + 1, BURNER, turn) for v in bits(full & ~after))
        memo[key] = result
        return result

    return worst(b0, 1, starter, 0)
