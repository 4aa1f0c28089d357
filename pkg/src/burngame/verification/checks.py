"""The catalog of single-graph checks.

Each check turns one published inequality or characterization into a list
of comparisons evaluated on a graph.  Quantities are computed once per graph
by a shared ``Profile``.  A comparison that fails carries a witness: the
optimal play trace of every game whose value enters it, so the violation can
be replayed through the engine.
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Callable
from dataclasses import dataclass, field
from functools import cached_property

from ..canon import CANON_MAX_VERTICES, canonical_form
from ..classical import b as burning_number_of
from ..classical import bipartite_square_pair, gamma_k
from ..engine import BURNER, STALLER, GameSolver, PlayTrace, Player, burner_only_value, staller_only_value
from ..formats import emit_graph6, parse_graph6
from ..generators import hypercube
from ..graph import (
    Graph,
    add_edge,
    bfs_layers,
    bits,
    closed_neighborhood,
    complement,
    components,
    is_connected,
    is_tree,
    make_graph,
    max_degree,
    min_degree,
    neighborhood,
    remove_edge,
    spanning_trees,
    square,
)
from .bounds import closed_forms

STARTERS = (BURNER, STALLER)
SPANNING_TREE_LIMIT = 200_000


@dataclass(frozen=True)
class Game:
    """A game whose optimal value enters a comparison."""

    graph: Graph
    initial: int
    starter: Player


class Profile:
    """Lazily computed quantities of one graph, shared by every check."""

    def __init__(self, g: Graph) -> None:
        self.g = g
        self.n = g.n
        self.solver = GameSolver(g)
        self._gamma: dict[int, int] = {}

    @cached_property
    def graph6(self) -> str:
        return emit_graph6(self.g)

    @cached_property
    def connected(self) -> bool:
        return is_connected(self.g)

    def value(self, starter: Player, initial: int = 0) -> int:
        return self.solver.value(initial, starter)

    @cached_property
    def bg(self) -> int:
        return self.value(BURNER)

    @cached_property
    def bg_prime(self) -> int:
        return self.value(STALLER)

    @cached_property
    def b(self) -> int:
        return burning_number_of(self.g)

    @cached_property
    def cl(self) -> int:
        return staller_only_value(self.g)

    @cached_property
    def b_square(self) -> int:
        return burning_number_of(square(self.g))

    @cached_property
    def eccentricities(self) -> list[int]:
        """Eccentricity of each vertex within its own component."""
        return [max(bfs_layers(self.g, v)) for v in self.g.vertices]

    @cached_property
    def radius(self) -> int:
        return min(self.eccentricities)

    @cached_property
    def diameter(self) -> int:
        """Largest finite distance; equals the diameter when connected."""
        return max(self.eccentricities)

    @cached_property
    def max_degree(self) -> int:
        return max_degree(self.g)

    @cached_property
    def min_degree(self) -> int:
        return min_degree(self.g)

    @cached_property
    def complement(self) -> Profile:
        return Profile(complement(self.g))

    def gamma(self, k: int) -> int:
        if k not in self._gamma:
            self._gamma[k] = gamma_k(self.g, k)
        return self._gamma[k]

    def game(self, starter: Player, initial: int = 0) -> Game:
        return Game(self.g, initial, starter)


def value_name(starter: Player) -> str:
    return "bg" if starter == BURNER else "bg'"


@dataclass(frozen=True)
class Comparison:
    lhs: object
    relation: str
    rhs: object
    params: dict = field(default_factory=dict)
    games: tuple[Game, ...] = ()

    @property
    def holds(self) -> bool:
        return relation_holds(self.lhs, self.relation, self.rhs)


def relation_holds(lhs, relation: str, rhs) -> bool:
    if relation == "<=":
        return lhs <= rhs
    if relation == ">=":
        return lhs >= rhs
    if relation in ("==", "iff"):
        return lhs == rhs
    if relation == "in":
        return rhs[0] <= lhs <= rhs[1]
    raise ValueError(f"unknown relation {relation!r}")


@dataclass
class CheckResult:
    check_id: str
    graph6: str
    params: dict
    lhs: object
    relation: str
    rhs: object
    holds: bool | None
    exploratory: bool = False
    witness: dict | None = None
    order_key: str = field(default="", compare=False, repr=False)

    @property
    def status(self) -> str:
        if self.holds is None:
            return "skip"
        if self.exploratory:
            return "note"
        return "pass" if self.holds else "fail"

    def to_json(self) -> dict:
        out = {
            "check_id": self.check_id,
            "graph6": self.graph6,
            "params": self.params,
            "lhs": self.lhs,
            "relation": self.relation,
            "rhs": self.rhs,
            "holds": self.holds,
            "status": self.status,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out

    @classmethod
    def from_json(cls, data: dict) -> CheckResult:
        return cls(
            data["check_id"],
            data["graph6"],
            data["params"],
            data["lhs"],
            data["relation"],
            data["rhs"],
            data["holds"],
            data["status"] == "note",
            data.get("witness"),
        )


def order_key(g: Graph) -> str:
    """Isomorphism-invariant sort key where available, else the graph6 string."""
    if g.n <= CANON_MAX_VERTICES:
        return canonical_form(g).decode("ascii")
    return emit_graph6(g)


def make_witness(comparison: Comparison) -> dict:
    games = []
    for game in comparison.games:
        value, trace = GameSolver(game.graph).principal_variation(game.initial, game.starter)
        games.append(
            {
                "graph6": emit_graph6(game.graph),
                "initial": sorted(bits(game.initial)),
                "starter": str(game.starter),
                "value": value,
                "trace": trace.to_json(),
            }
        )
    return {"lhs": comparison.lhs, "rhs": comparison.rhs, "games": games}


def replay_witness(witness: dict) -> bool:
    """True iff every recorded trace replays legally and matches the solver's value."""
    for game in witness["games"]:
        g = parse_graph6(game["graph6"])
        trace = PlayTrace.from_json(game["trace"])
        initial = sum(1 << v for v in game["initial"])
        starter = trace.starter
        if trace.initial != initial or trace.replay(g) != game["value"]:
            return False
        if GameSolver(g).value(initial, starter) != game["value"]:
            return False
    return True


def to_result(check_id: str, graph6: str, comparison: Comparison, exploratory: bool) -> CheckResult:
    witness = None if comparison.holds else make_witness(comparison)
    return CheckResult(
        check_id,
        graph6,
        comparison.params,
        comparison.lhs,
        comparison.relation,
        comparison.rhs,
        comparison.holds,
        exploratory,
        witness,
    )


def skipped(check_id: str, graph6: str, reason: str, exploratory: bool = False) -> CheckResult:
    return CheckResult(check_id, graph6, {"skipped": reason}, None, "", None, None, exploratory)


@dataclass(frozen=True)
class CheckDefinition:
    id: str
    citation: str
    applies: Callable[[Profile], bool]
    evaluate: Callable[[Profile], list[Comparison]]
    exploratory: bool = False
    max_n: int | None = None
    requirement: str = ""


def evaluate_check(defn: CheckDefinition, g: Graph | Profile) -> list[CheckResult]:
    p = g if isinstance(g, Profile) else Profile(g)
    if defn.max_n is not None and p.n > defn.max_n:
        return [skipped(defn.id, p.graph6, f"n > {defn.max_n}", defn.exploratory)]
    if not defn.applies(p):
        return [skipped(defn.id, p.graph6, defn.requirement or "not applicable", defn.exploratory)]
    return [to_result(defn.id, p.graph6, c, defn.exploratory) for c in defn.evaluate(p)]


# applicability predicates


def _connected(p: Profile) -> bool:
    return p.connected


def _always(p: Profile) -> bool:
    return True


def _at_least_two(p: Profile) -> bool:
    return p.n >= 2


def _both_connected(p: Profile) -> bool:
    return p.n >= 3 and p.connected and p.complement.connected


def is_path_graph(p: Profile) -> bool:
    return p.connected and p.g.num_edges == p.n - 1 and p.max_degree <= 2


def is_cycle_graph(p: Profile) -> bool:
    return p.connected and p.n >= 3 and p.min_degree == p.max_degree == 2


def hypercube_dimension(p: Profile) -> int | None:
    d = p.n.bit_length() - 1
    if p.n != 1 << d or p.n > CANON_MAX_VERTICES or d < 1:
        return None
    if canonical_form(p.g) != canonical_form(hypercube(d)):
        return None
    return d


# evaluators


def _prop_2_1(p: Profile) -> list[Comparison]:
    out = []
    for starter, cap in ((BURNER, 2 * p.b_square - 1), (STALLER, 2 * p.b_square)):
        name = value_name(starter)
        v = p.value(starter)
        games = (p.game(starter),)
        out.append(Comparison(p.b, "<=", v, {"bound": f"b <= {name}"}, games))
        out.append(Comparison(v, "<=", p.cl, {"bound": f"{name} <= CL"}, games))
        out.append(Comparison(v, "<=", cap, {"bound": f"{name} <= 2b(G^2){'-1' if starter == BURNER else ''}"}, games))
    return out


def _prop_2_2(p: Profile) -> list[Comparison]:
    return [
        Comparison(p.bg, "<=", p.radius + 1, {"bound": "bg <= rad+1"}, (p.game(BURNER),)),
        Comparison(p.bg_prime, "<=", p.radius + 2, {"bound": "bg' <= rad+2"}, (p.game(STALLER),)),
        Comparison(p.bg_prime, "<=", p.diameter + 1, {"bound": "bg' <= diam+1"}, (p.game(STALLER),)),
    ]


def _prop_2_3(p: Profile) -> list[Comparison]:
    out = [Comparison(p.bg, "<=", p.n - p.max_degree, {"starter": "Burner"}, (p.game(BURNER),))]
    if p.max_degree <= p.n - 3:
        out.append(Comparison(p.bg_prime, "<=", p.n - p.max_degree, {"starter": "Staller"}, (p.game(STALLER),)))
    return out


def _random_subset(rng: random.Random, mask: int) -> int:
    return sum(1 << v for v in bits(mask) if rng.random() < 0.5)


def _sampled_pairs(p: Profile, check_id: str, samples: int) -> tuple[str, list[tuple[int, int]]]:
    """Pairs ``A <= B``: all of them for n <= 4, else a seeded sample."""
    full = p.g.full
    if p.n <= 4:
        pairs = []
        for bset in range(full + 1):
            sub = bset
            while True:
                pairs.append((sub, bset))
                if sub == 0:
                    break
                sub = (sub - 1) & bset
        return "exhaustive", pairs
    rng = random.Random(f"{check_id}:{p.graph6}")
    pairs = []
    for _ in range(samples):
        a = _random_subset(rng, full)
        pairs.append((a, a | _random_subset(rng, full & ~a)))
    return "sampled", pairs


def _thm_2_4(p: Profile) -> list[Comparison]:
    mode, pairs = _sampled_pairs(p, "thm-2.4", 200)
    out = []
    for starter in STARTERS:
        worst, worst_pair = None, None
        for a, bset in pairs:
            gap = p.value(starter, bset) - p.value(starter, a)
            if worst is None or gap > worst:
                worst, worst_pair = gap, (a, bset)
        a, bset = worst_pair
        out.append(
            Comparison(
                worst,
                "<=",
                0,
                {"starter": str(starter), "mode": mode, "pairs": len(pairs), "A": sorted(bits(a)), "B": sorted(bits(bset))},
                (p.game(starter, bset), p.game(starter, a)),
            )
        )
    return out


def _prop_2_6(p: Profile) -> list[Comparison]:
    return [Comparison(abs(p.bg - p.bg_prime), "<=", 1, {}, (p.game(BURNER), p.game(STALLER)))]


def _thm_2_7(p: Profile) -> list[Comparison]:
    out = []
    for u, v in p.g.edges():
        h = Profile(remove_edge(p.g, u, v))
        for starter in STARTERS:
            base = p.value(starter)
            cut = h.value(starter)
            out.append(
                Comparison(
                    cut,
                    "in",
                    [base, base + 2],
                    {"edge": [u, v], "starter": str(starter), "gap": cut - base},
                    (p.game(starter), h.game(starter)),
                )
            )
    return out


def _prop_2_9(p: Profile) -> list[Comparison]:
    n = p.n
    return [
        Comparison(p.bg == 1, "iff", n == 1, {"item": 1}, (p.game(BURNER),)),
        Comparison(p.bg_prime == 1, "iff", n == 1, {"item": 2}, (p.game(STALLER),)),
        Comparison(p.bg == 2, "iff", n >= 2 and p.max_degree >= n - 2, {"item": 3}, (p.game(BURNER),)),
        Comparison(p.bg_prime == 2, "iff", n >= 2 and p.min_degree >= n - 2, {"item": 4}, (p.game(STALLER),)),
    ]


def three_round_centre(g: Graph) -> int | None:
    """A vertex ``v`` such that every ``u`` outside ``N[v]`` leaves at most one
    vertex outside ``N_2[v]`` unburned, i.e. ``|(V - N_2[v]) - N[u]| <= 1``.

    Returns the lowest such vertex, or ``None``.
    """
    full = g.full
    for v in g.vertices:
        first = neighborhood(g, 1 << v)
        outside = full & ~closed_neighborhood(g, 1 << v, 2)
        if all((outside & ~neighborhood(g, 1 << u)).bit_count() <= 1 for u in bits(full & ~first)):
            return v
    return None


def _prop_2_10(p: Profile) -> list[Comparison]:
    centre = three_round_centre(p.g)
    condition = p.max_degree <= p.n - 3 and centre is not None
    return [Comparison(p.bg == 3, "iff", condition, {"centre": centre}, (p.game(BURNER),))]


def _prop_2_11(p: Profile) -> list[Comparison]:
    return [Comparison(p.b, "==", p.bg, {}, (p.game(BURNER),))]


def _spanning_subgraphs(p: Profile) -> tuple[str, list[Graph]]:
    edges = p.g.edges()
    if p.n <= 4:
        codes = range(1, 1 << len(edges))
        mode = "exhaustive"
    else:
        rng = random.Random(f"lemma-2.12:{p.graph6}")
        codes = [rng.randrange(1, 1 << len(edges)) for _ in range(50)] if edges else []
        mode = "sampled"
    subs = []
    for code in codes:
        kept = [e for i, e in enumerate(edges) if not code >> i & 1]
        subs.append(make_graph(p.n, kept))
    return mode, subs


def _lemma_2_12(p: Profile) -> list[Comparison]:
    supers = [
        Profile(add_edge(p.g, u, v)) for u, v in itertools.combinations(range(p.n), 2) if not p.g.has_edge(u, v)
    ]
    mode, subs = _spanning_subgraphs(p)
    subs = [Profile(h) for h in subs]
    out = []
    for starter in STARTERS:
        # single-edge supersets: bg(G + e) <= bg(G)
        worst, games = 0, ()
        for s in supers:
            gap = s.value(starter) - p.value(starter)
            if not games or gap > worst:
                worst, games = gap, (s.game(starter), p.game(starter))
        out.append(Comparison(worst, "<=", 0, {"starter": str(starter), "mode": "single-edge", "pairs": len(supers)}, games))
        # removing any edge subset: bg(G) <= bg(H)
        worst, games = 0, ()
        for h in subs:
            gap = p.value(starter) - h.value(starter)
            if not games or gap > worst:
                worst, games = gap, (p.game(starter), h.game(starter))
        out.append(Comparison(worst, "<=", 0, {"starter": str(starter), "mode": mode, "pairs": len(subs)}, games))
    return out


def _complement_games(p: Profile, starter: Player) -> tuple[Game, Game]:
    return p.game(starter), p.complement.game(starter)


def _prop_4_1(p: Profile) -> list[Comparison]:
    total = p.bg + p.complement.bg
    return [Comparison(total, "in", [4, p.n + 2], {}, _complement_games(p, BURNER))]


def _components_of_order_three(p: Profile) -> bool:
    return not p.connected and all(c.bit_count() >= 3 for c in components(p.g))


def _lemma_4_2(p: Profile) -> list[Comparison]:
    # doubled to stay in integers: 2 bg <= n + 1 and 2 bg' <= n + 2
    return [
        Comparison(2 * p.bg, "<=", p.n + 1, {"bound": "2bg <= n+1"}, (p.game(BURNER),)),
        Comparison(2 * p.bg_prime, "<=", p.n + 2, {"bound": "2bg' <= n+2"}, (p.game(STALLER),)),
    ]


def _prop_4_3(p: Profile) -> list[Comparison]:
    product = p.bg * p.complement.bg
    return [Comparison(product, "in", [4, 2 * p.n], {}, _complement_games(p, BURNER))]


def _k_range(p: Profile) -> range:
    return range(1, max(1, p.diameter) + 1)


def _prop_4_4(p: Profile) -> list[Comparison]:
    ks = list(_k_range(p))
    bound_bg = min(2 * p.gamma(k) + k - 1 for k in ks)
    bound_bgp = min(2 * p.gamma(k) + k for k in ks)
    return [
        Comparison(p.bg, "<=", bound_bg, {"k_max": ks[-1]}, (p.game(BURNER),)),
        Comparison(p.bg_prime, "<=", bound_bgp, {"k_max": ks[-1]}, (p.game(STALLER),)),
    ]


def _prop_4_5(p: Profile) -> list[Comparison]:
    ks = list(_k_range(p))
    bound_bg = min(p.gamma(k) + 3 * k for k in ks)
    return [
        Comparison(p.bg, "<=", bound_bg, {"k_max": ks[-1]}, (p.game(BURNER),)),
        Comparison(p.bg_prime, "<=", bound_bg + 1, {"k_max": ks[-1]}, (p.game(STALLER),)),
    ]


def _cor_4_x(p: Profile) -> list[Comparison]:
    return [Comparison(p.bg * p.complement.bg, "<=", p.n + 18, {}, _complement_games(p, BURNER))]


def _prop_4_6(p: Profile) -> list[Comparison]:
    total = p.bg_prime + p.complement.bg_prime
    return [Comparison(total, "in", [4, p.n + 2], {}, _complement_games(p, STALLER))]


def _prop_4_7(p: Profile) -> list[Comparison]:
    product = p.bg_prime * p.complement.bg_prime
    return [Comparison(product, "in", [8, 3 * p.n - 6], {}, _complement_games(p, STALLER))]


def _cor_4_y(p: Profile) -> list[Comparison]:
    return [Comparison(p.bg_prime * p.complement.bg_prime, "<=", p.n + 21, {}, _complement_games(p, STALLER))]


def _thm_5_1(p: Profile) -> list[Comparison]:
    cache: dict[bytes, int] = {}
    best, count = None, 0
    for t in spanning_trees(p.g, SPANNING_TREE_LIMIT):
        key = canonical_form(t) if t.n <= CANON_MAX_VERTICES else emit_graph6(t).encode()
        if key not in cache:
            cache[key] = burning_number_of(t)
        count += 1
        best = cache[key] if best is None else min(best, cache[key])
    return [Comparison(p.b, "==", best, {"trees": count})]


def _path_or_cycle(family: str):
    def evaluate(p: Profile) -> list[Comparison]:
        out = []
        for starter in STARTERS:
            row = closed_forms(f"{family}-{value_name(starter)}", p.n)
            out.append(Comparison(p.value(starter), "in", [row.lower, row.upper], {"starter": str(starter)}, (p.game(starter),)))
        return out

    return evaluate


def _thm_6_2(p: Profile) -> list[Comparison]:
    d = hypercube_dimension(p)
    out = []
    for starter in STARTERS:
        row = closed_forms(f"hypercube-{value_name(starter)}", d)
        out.append(Comparison(p.value(starter), "==", row.lower, {"d": d, "starter": str(starter)}, (p.game(starter),)))
    return out


def _lemma_5_5_inner(p: Profile) -> list[Comparison]:
    h, x, _ = bipartite_square_pair(p.g)
    lhs = burning_number_of(square(p.g))
    return [Comparison(lhs, "<=", burning_number_of(h) + 1, {"partite_size": x.bit_count()})]


def _burner_only(p: Profile) -> list[Comparison]:
    return [Comparison(burner_only_value(p.g), "==", p.b, {})]


CATALOG: tuple[CheckDefinition, ...] = (
    CheckDefinition("prop-2.1", "Prop 2.1: b <= bg <= min{CL, 2b(G^2)-1} and b <= bg' <= min{CL, 2b(G^2)}; CL read as the Staller-only game value", _connected, _prop_2_1, requirement="connected"),
    CheckDefinition("prop-2.2", "Prop 2.2: bg <= rad+1 and bg' <= min{rad+2, diam+1}", _connected, _prop_2_2, requirement="connected"),
    CheckDefinition("prop-2.3", "Prop 2.3: Delta <= n-2 gives bg <= n-Delta; Delta <= n-3 gives bg' <= n-Delta", lambda p: p.max_degree <= p.n - 2, _prop_2_3, requirement="Delta <= n-2"),
    CheckDefinition("thm-2.4", "Thm 2.4 (Continuation Principle): A subset of B gives value(G|B) <= value(G|A)", _always, _thm_2_4, max_n=6),
    CheckDefinition("prop-2.6", "Prop 2.6: |bg - bg'| <= 1", _connected, _prop_2_6, requirement="connected"),
    CheckDefinition("thm-2.7", "Thm 2.7: bg <= bg(G-e) <= bg+2 and the same for bg', every edge e", _connected, _thm_2_7, requirement="connected"),
    CheckDefinition("prop-2.9", "Prop 2.9: characterizations of bg, bg' in {1, 2}", _connected, _prop_2_9, requirement="connected"),
    CheckDefinition("prop-2.10", "Prop 2.10: bg = 3 iff Delta <= n-3 and some v has every vertex outside N[v] adjacent to all but at most one vertex outside N_2[v]", _connected, _prop_2_10, requirement="connected"),
    CheckDefinition("prop-2.11", "Prop 2.11: diameter at most 2 gives b = bg", lambda p: p.connected and p.diameter <= 2, _prop_2_11, requirement="diameter <= 2"),
    CheckDefinition("lemma-2.12", "Lemma 2.12: H spanning subgraph of G gives bg(G) <= bg(H) and bg'(G) <= bg'(H)", _always, _lemma_2_12, max_n=6),
    CheckDefinition("prop-4.1", "Prop 4.1: 4 <= bg(G) + bg(co-G) <= n+2", _at_least_two, _prop_4_1, requirement="n >= 2"),
    CheckDefinition("lemma-4.2", "Lemma 4.2: disconnected with all components of order >= 3 gives bg <= (n+1)/2 and bg' <= n/2+1", _components_of_order_three, _lemma_4_2, requirement="disconnected, components of order >= 3"),
    CheckDefinition("prop-4.3", "Prop 4.3: 4 <= bg(G) bg(co-G) <= 2n", _at_least_two, _prop_4_3, requirement="n >= 2"),
    CheckDefinition("prop-4.4", "Prop 4.4: bg <= min_k 2gamma_k+k-1 and bg' <= min_k 2gamma_k+k, k = 1..diam", _always, _prop_4_4),
    CheckDefinition("prop-4.5", "Prop 4.5: bg <= min_k gamma_k+3k and bg' <= min_k gamma_k+3k+1, k = 1..diam", _connected, _prop_4_5, requirement="connected"),
    CheckDefinition("cor-4.x", "Corollary (Burner start): G and co-G connected, n >= 3, gives bg(G) bg(co-G) <= n+18", _both_connected, _cor_4_x, requirement="G and complement connected, n >= 3"),
    CheckDefinition("prop-4.6", "Prop 4.6: 4 <= bg'(G) + bg'(co-G) <= n+2", _at_least_two, _prop_4_6, requirement="n >= 2"),
    CheckDefinition("prop-4.7", "Prop 4.7: n >= 6 gives 8 <= bg'(G) bg'(co-G) <= 3n-6", lambda p: p.n >= 6, _prop_4_7, requirement="n >= 6"),
    CheckDefinition("cor-4.y", "Corollary (Staller start): G and co-G connected, n >= 3, gives bg'(G) bg'(co-G) <= n+21", _both_connected, _cor_4_y, requirement="G and complement connected, n >= 3"),
    CheckDefinition("thm-5.1", "Thm 5.1 (tree reduction): b(G) = min over spanning trees T of b(T)", _connected, _thm_5_1, max_n=6, requirement="connected"),
    CheckDefinition("thm-5.3", "Thm 5.3: path windows for bg and bg'", is_path_graph, _path_or_cycle("path"), requirement="path"),
    CheckDefinition("thm-cycles", "Cycle theorem: cycle windows for bg and bg'", is_cycle_graph, _path_or_cycle("cycle"), requirement="cycle"),
    CheckDefinition("lemma-5.5-inner", "Lemma 5.5 construction: b(T^2) <= b(H)+1, H = T^2 restricted to the smaller partite set", lambda p: p.n >= 2 and is_tree(p.g), _lemma_5_5_inner, requirement="tree on at least two vertices"),
    CheckDefinition("thm-6.2", "Thm 6.2: bg(Q_d) = 2 for d <= 2, else ceil((d+1)/2)+1; bg'(Q_d) = ceil(d/2)+1", lambda p: hypercube_dimension(p) is not None, _thm_6_2, requirement="hypercube on at most 10 vertices"),
    CheckDefinition("burner-only-vs-b", "Burner-only game against the burning number (exploratory; the two may differ)", _always, _burner_only, exploratory=True),
)

CHECKS_BY_ID = {c.id: c for c in CATALOG}
