"""Closed-form windows for paths, cycles and hypercubes, and exact family sweeps.

Every ceiling of a square-root expression is evaluated in integers:
``ceil(sqrt(a) - c)`` is the least ``r >= 0`` with ``(r + c)^2 >= a``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from ..engine import BURNER, STALLER, GameSolver
from ..generators import cycle, hypercube, path

CLOSED_FORMS = ("path-bg", "path-bg'", "cycle-bg", "cycle-bg'", "hypercube-bg", "hypercube-bg'")

FAMILY_CAPS = {"path": 22, "cycle": 22, "hypercube": 4}


class BoundError(ValueError):
    pass


@dataclass(frozen=True)
class BoundRow:
    name: str
    n: int
    lower: int
    upper: int
    value: int | None = None

    @property
    def holds(self) -> bool | None:
        if self.value is None:
            return None
        return self.lower <= self.value <= self.upper

    def to_json(self) -> dict:
        out = asdict(self)
        out["holds"] = self.holds
        return out


def _least(pred) -> int:
    r = 0
    while not pred(r):
        r += 1
    return r


def closed_forms(name: str, n: int) -> BoundRow:
    """The cited lower and upper bound for family ``name`` at parameter ``n``."""
    if name not in CLOSED_FORMS:
        raise BoundError(f"unknown closed form {name!r}")
    family = name.split("-")[0]
    lo_n = {"path": 1, "cycle": 3, "hypercube": 1}[family]
    if n < lo_n:
        raise BoundError(f"{name} needs n >= {lo_n}")
    if name == "hypercube-bg":
        v = 2 if n <= 2 else (n + 2) // 2 + 1
        return BoundRow(name, n, v, v)
    if name == "hypercube-bg'":
        v = (n + 1) // 2 + 1
        return BoundRow(name, n, v, v)
    # ceil(sqrt(2n + 1/4) - 1/2): least r with r(r+1) >= 2n
    upper_common = _least(lambda r: r * (r + 1) >= 2 * n)
    if name in ("path-bg", "cycle-bg"):
        # ceil(sqrt(2n+1) - 1)
        return BoundRow(name, n, _least(lambda r: (r + 1) ** 2 >= 2 * n + 1), upper_common)
    if name == "path-bg'":
        # ceil(sqrt(2n+2) - 1)
        return BoundRow(name, n, _least(lambda r: (r + 1) ** 2 >= 2 * n + 2), upper_common)
    # cycle-bg': ceil(sqrt(2n+7) - 2) and ceil(sqrt(2n + 17/4) - 3/2)
    return BoundRow(
        name,
        n,
        _least(lambda r: (r + 2) ** 2 >= 2 * n + 7),
        _least(lambda r: (2 * r + 3) ** 2 >= 8 * n + 17),
    )


_BUILDERS = {"path": path, "cycle": cycle, "hypercube": hypercube}


def family_sweep(family: str, n_range: range) -> list[BoundRow]:
    """Exact values for both starters against the closed-form windows."""
    if family not in FAMILY_CAPS:
        raise BoundError(f"unknown family {family!r}")
    if max(n_range) > FAMILY_CAPS[family]:
        raise BoundError(f"{family} sweep capped at {FAMILY_CAPS[family]}")
    rows = []
    for n in n_range:
        solver = GameSolver(_BUILDERS[family](n))
        for suffix, starter in (("bg", BURNER), ("bg'", STALLER)):
            window = closed_forms(f"{family}-{suffix}", n)
            rows.append(BoundRow(window.name, n, window.lower, window.upper, solver.value(0, starter)))
    return rows
