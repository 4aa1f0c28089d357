"""Checks on graph products over a small factor set."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

from ..formats import emit_graph6
from ..generators import cartesian, complete, corona, cycle, lexicographic, path, star, strong
from ..graph import Graph
from .checks import STARTERS, CheckResult, Comparison, Profile, skipped, to_result, value_name

PRODUCT_MAX_ORDER = 20


def default_factors() -> dict[str, Graph]:
    return {
        "K2": complete(2),
        "P3": path(3),
        "P4": path(4),
        "C3": cycle(3),
        "C4": cycle(4),
        "K13": star(3),
    }


def has_universal_vertex(g: Graph) -> bool:
    return any(row.bit_count() == g.n - 1 for row in g.adj)


@dataclass(frozen=True)
class PairCheckDefinition:
    id: str
    citation: str
    order: Callable[[Graph, Graph], int]
    applies: Callable[[Profile, Profile], bool]
    evaluate: Callable[[Profile, Profile, dict], tuple[Graph, list[Comparison]]]
    exploratory: bool = False
    requirement: str = ""


def _prop_6_1(g: Profile, h: Profile, cache: dict) -> tuple[Graph, list[Comparison]]:
    s = _profile(cache, "strong", g, h)
    c = _profile(cache, "cartesian", g, h)
    out = []
    for starter in STARTERS:
        lower = max(g.value(starter), h.value(starter))
        out.append(
            Comparison(
                s.value(starter),
                "in",
                [lower, c.value(starter)],
                {"starter": str(starter), "quantity": value_name(starter)},
                (s.game(starter), c.game(starter), g.game(starter), h.game(starter)),
            )
        )
    return s.g, out


def _prop_6_3(g: Profile, h: Profile, cache: dict) -> tuple[Graph, list[Comparison]]:
    p = _profile(cache, "corona", g, h)
    k = g.b_square
    return p.g, [
        Comparison(p.value(st), "in", [2 * k - 1, 2 * k], {"starter": str(st), "b(G^2)": k}, (p.game(st),))
        for st in STARTERS
    ]


def _prop_6_4(g: Profile, h: Profile, cache: dict) -> tuple[Graph, list[Comparison]]:
    p = _profile(cache, "lexicographic", g, h)
    out = []
    for st in STARTERS:
        base = g.value(st)
        out.append(Comparison(p.value(st), "in", [base, base + 1], {"starter": str(st)}, (p.game(st), g.game(st))))
    return p.g, out


def _prop_6_4_nonuniversal(g: Profile, h: Profile, cache: dict) -> tuple[Graph, list[Comparison]]:
    p = _profile(cache, "lexicographic", g, h)
    k = g.b_square
    return p.g, [
        Comparison(p.value(st), "in", [2 * k, 2 * k + 1], {"starter": str(st), "b(G^2)": k}, (p.game(st),))
        for st in STARTERS
    ]


_BUILDERS = {"strong": strong, "cartesian": cartesian, "corona": corona, "lexicographic": lexicographic}


def _profile(cache: dict, kind: str, g: Profile, h: Profile) -> Profile:
    key = (kind, g.graph6, h.graph6)
    if key not in cache:
        cache[key] = Profile(_BUILDERS[kind](g.g, h.g))
    return cache[key]


def _both_connected(g: Profile, h: Profile) -> bool:
    return g.connected and h.connected


PAIR_CHECKS: tuple[PairCheckDefinition, ...] = (
    PairCheckDefinition(
        "prop-6.1",
        "Prop 6.1: max{bg(G), bg(H)} <= bg(G strong H) <= bg(G cartesian H), and the same for bg'",
        lambda g, h: g.n * h.n,
        lambda g, h: True,
        _prop_6_1,
    ),
    PairCheckDefinition(
        "prop-6.3",
        "Prop 6.3: G, H connected gives 2b(G^2)-1 <= bg(G corona H), bg'(G corona H) <= 2b(G^2)",
        lambda g, h: g.n * (h.n + 1),
        _both_connected,
        _prop_6_3,
        requirement="G and H connected",
    ),
    PairCheckDefinition(
        "prop-6.4",
        "Prop 6.4: G, H connected and H has a universal vertex gives bg(G) <= bg(G[H]) <= bg(G)+1, and the same for bg'",
        lambda g, h: g.n * h.n,
        lambda g, h: _both_connected(g, h) and has_universal_vertex(h.g),
        _prop_6_4,
        requirement="G and H connected, H has a universal vertex",
    ),
    PairCheckDefinition(
        "prop-6.4-nonuniversal",
        "Prop 6.4, second case (exploratory): H without a universal vertex gives 2b(G^2) <= bg(G[H]) <= 2b(G^2)+1",
        lambda g, h: g.n * h.n,
        lambda g, h: _both_connected(g, h) and not has_universal_vertex(h.g),
        _prop_6_4_nonuniversal,
        exploratory=True,
        requirement="G and H connected, H without a universal vertex",
    ),
)


def evaluate_pair(
    defn: PairCheckDefinition,
    names: tuple[str, str],
    g: Profile,
    h: Profile,
    cache: dict,
    max_order: int = PRODUCT_MAX_ORDER,
) -> list[CheckResult]:
    pair = {"G": names[0], "H": names[1]}
    label = f"{names[0]},{names[1]}"
    order = defn.order(g.g, h.g)
    if order > max_order:
        res = skipped(defn.id, "", f"product order {order} > {max_order}", defn.exploratory)
        res.params.update(pair)
        res.order_key = label
        return [res]
    if not defn.applies(g, h):
        res = skipped(defn.id, "", defn.requirement, defn.exploratory)
        res.params.update(pair)
        res.order_key = label
        return [res]
    product, comparisons = defn.evaluate(g, h, cache)
    results = []
    for c in comparisons:
        res = to_result(defn.id, emit_graph6(product), c, defn.exploratory)
        res.params = {**pair, **res.params}
        res.order_key = label
        results.append(res)
    return results


def product_pair_results(
    names: tuple[str, str],
    factors: dict[str, Graph],
    checks: tuple[PairCheckDefinition, ...] = PAIR_CHECKS,
    max_order: int = PRODUCT_MAX_ORDER,
) -> list[CheckResult]:
    g, h = Profile(factors[names[0]]), Profile(factors[names[1]])
    cache: dict = {}
    out = []
    for defn in checks:
        out.extend(evaluate_pair(defn, names, g, h, cache, max_order))
    return out

