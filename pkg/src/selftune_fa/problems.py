"""Objective-function suite: five box-bounded benchmarks with known global
minimum 0 at the origin, plus the constrained speed-reducer (gearbox)
design problem handled through a static quadratic penalty.

Every function here is pure and safe to call concurrently. The compiled
engine carries its own C versions of these formulas with the same
operation order, so both evaluation paths agree bitwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

_TWO_PI = 6.283185307179586

# engine dispatch codes; CALLBACK means "call the Python objective"
KIND_CALLBACK = 0
KIND_SPHERE = 1
KIND_ACKLEY = 2
KIND_FOREST = 3
KIND_RASTRIGIN = 4
KIND_ZAKHAROV = 5
KIND_GEARBOX = 6

DEFAULT_DIMENSION = 8
DEFAULT_PENALTY = 1.0e6
GEARBOX_TARGET = 2996.348165

GEARBOX_BOUNDS = [
    (2.6, 3.6),   # face width b
    (0.7, 0.8),   # tooth module h
    (17.0, 28.0),  # pinion tooth count z (integer)
    (7.3, 8.3),   # first shaft length L1
    (7.8, 8.3),   # second shaft length L2
    (2.9, 3.9),   # first shaft diameter d1
    (5.0, 5.5),   # second shaft diameter d2
]


@dataclass(frozen=True)
class Problem:
    """A box-bounded minimization problem.

    Exactly one of `known_optimum` / `target_threshold` should be set for
    problems used in tuning; the engine stops when the best value is
    within delta of the optimum, or at/below the threshold.
    `integer_dims` marks coordinates rounded to integers before every
    objective evaluation (relax-and-round).
    """

    name: str
    dimension: int
    bounds: list[tuple[float, float]]
    objective: Callable[[Sequence[float]], float]
    known_optimum: float | None = None
    target_threshold: float | None = None
    integer_dims: frozenset[int] = field(default_factory=frozenset)
    kind: int = KIND_CALLBACK
    penalty_coefficient: float | None = None

    def __post_init__(self):
        if self.dimension < 1:
            raise ValueError("dimension must be positive")
        if len(self.bounds) != self.dimension:
            raise ValueError("bounds length must equal dimension")
        for lo, hi in self.bounds:
            if not (lo < hi):
                raise ValueError(f"invalid bounds ({lo}, {hi}): need lo < hi")
        if self.known_optimum is not None and self.target_threshold is not None:
            raise ValueError("set known_optimum or target_threshold, not both")


def sphere(x: Sequence[float]) -> float:
    """Sum of squares; global minimum 0 at the origin."""
    s = 0.0
    for v in x:
        s += v * v
    return s


def ackley(x: Sequence[float]) -> float:
    """Ackley function, minimum 0 at the origin."""
    d = len(x)
    s1 = 0.0
    s2 = 0.0
    for v in x:
        s1 += v * v
        s2 += math.cos(_TWO_PI * v)
    return (-20.0 * math.exp(-0.2 * math.sqrt(s1 / d))
            - math.exp(s2 / d) + 20.0 + math.e)


def forest(x: Sequence[float]) -> float:
    """Highly multimodal forest function, minimum 0 at the origin."""
    sa = 0.0
    ss = 0.0
    for v in x:
        sa += abs(v)
        ss += math.sin(v * v)
    return sa * math.exp(-ss)


def rastrigin(x: Sequence[float]) -> float:
    """Rastrigin function, minimum 0 at the origin."""
    s = 0.0
    for v in x:
        s += v * v - 10.0 * math.cos(_TWO_PI * v)
    return 10.0 * len(x) + s


def zakharov(x: Sequence[float]) -> float:
    """Zakharov function with 1-based index weights, minimum 0 at the origin."""
    s1 = 0.0
    s2 = 0.0
    for i, v in enumerate(x):
        s1 += v * v
        s2 += (i + 1) * v
    h = 0.5 * s2
    h2 = h * h
    return s1 + h2 + h2 * h2


def _round_half_away(v: float) -> float:
    if v >= 0.0:
        return math.floor(v + 0.5)
    return math.ceil(v - 0.5)


def round_integer_dims(x: Sequence[float], problem: Problem) -> list[float]:
    """Round the integer-marked coordinates (half away from zero), then
    clamp them back into bounds. Other coordinates pass through."""
    out = list(map(float, x))
    for k in problem.integer_dims:
        lo, hi = problem.bounds[k]
        r = _round_half_away(out[k])
        if r < lo:
            r = lo
        elif r > hi:
            r = hi
        out[k] = r
    return out


def gearbox_objective(x: Sequence[float]) -> float:
    """Speed-reducer weight for design (b, h, z, L1, L2, d1, d2).

    Expects z already rounded to an integer value.
    """
    b, h, z, l1, l2, d1, d2 = x
    return (0.7854 * b * h * h * (3.3333 * z * z + 14.9334 * z - 43.0934)
            - 1.508 * b * (d1 * d1 + d2 * d2)
            + 7.4777 * (d1 * d1 * d1 + d2 * d2 * d2)
            + 0.7854 * (l1 * d1 * d1 + l2 * d2 * d2))


def gearbox_constraints(x: Sequence[float]) -> list[float]:
    """The 11 inequality constraints; g <= 0 means satisfied."""
    b, h, z, l1, l2, d1, d2 = x
    if b == 0.0 or h == 0.0 or z == 0.0 or l1 == 0.0 or l2 == 0.0 \
            or d1 == 0.0 or d2 == 0.0:
        raise ValueError("zero design variable gives a zero denominator")
    return [
        27.0 / (b * h * h * z) - 1.0,
        397.5 / (b * h * h * z * z) - 1.0,
        1.93 * l1 * l1 * l1 / (h * z * d1 * d1 * d1 * d1) - 1.0,
        1.93 * l2 * l2 * l2 / (h * z * d2 * d2 * d2 * d2) - 1.0,
        math.sqrt((745.0 * l1 / (h * z)) ** 2 + 16.9e6) / (110.0 * d1 * d1 * d1) - 1.0,
        math.sqrt((745.0 * l2 / (h * z)) ** 2 + 157.5e6) / (85.0 * d2 * d2 * d2) - 1.0,
        h * z / 40.0 - 1.0,
        5.0 * h / b - 1.0,
        b / (12.0 * h) - 1.0,
        (1.5 * d1 + 1.9) / l1 - 1.0,
        (1.1 * d2 + 1.9) / l2 - 1.0,
    ]


def is_feasible(x: Sequence[float]) -> bool:
    """True iff every gearbox constraint holds at the design point."""
    return max(gearbox_constraints(x)) <= 0.0


def penalized_objective(x: Sequence[float], lam: float = DEFAULT_PENALTY) -> float:
    """Gearbox weight plus lam * sum of squared constraint violations.

    z is rounded before evaluation; the result equals the raw objective
    exactly on feasible points.
    """
    if lam < 0.0:
        raise ValueError("penalty coefficient must be non-negative")
    lo, hi = GEARBOX_BOUNDS[2]
    rounded = list(map(float, x))
    r = _round_half_away(rounded[2])
    if r < lo:
        r = lo
    elif r > hi:
        r = hi
    rounded[2] = r
    f = gearbox_objective(rounded)
    p = 0.0
    for g in gearbox_constraints(rounded):
        if g > 0.0:
            p += g * g
    return f + lam * p


_BENCHMARKS: dict[str, tuple[Callable[[Sequence[float]], float], tuple[float, float], int]] = {
    "ackley": (ackley, (-32.768, 32.768), KIND_ACKLEY),
    "sphere": (sphere, (-5.12, 5.12), KIND_SPHERE),
    "forest": (forest, (-_TWO_PI, _TWO_PI), KIND_FOREST),
    "rastrigin": (rastrigin, (-5.12, 5.12), KIND_RASTRIGIN),
    "zakharov": (zakharov, (-10.0, 10.0), KIND_ZAKHAROV),
}

PROBLEM_NAMES = tuple(_BENCHMARKS) + ("gearbox",)


def make_problem(name: str, dimension: int | None = None,
                 penalty_coefficient: float | None = None) -> Problem:
    """Build a registered problem by name.

    Benchmarks default to dimension 8; the gearbox is fixed at 7 design
    variables with the tooth count as an integer dimension and a
    threshold target instead of a known optimum.
    """
    if name in _BENCHMARKS:
        fn, (lo, hi), kind = _BENCHMARKS[name]
        d = DEFAULT_DIMENSION if dimension is None else dimension
        if d < 1:
            raise ValueError("dimension must be positive")
        return Problem(
            name=name,
            dimension=d,
            bounds=[(lo, hi)] * d,
            objective=fn,
            known_optimum=0.0,
            kind=kind,
        )
    if name == "gearbox":
        if dimension not in (None, 7):
            raise ValueError("gearbox dimension is fixed at 7")
        lam = DEFAULT_PENALTY if penalty_coefficient is None else float(penalty_coefficient)
        if lam < 0.0:
            raise ValueError("penalty coefficient must be non-negative")
        return Problem(
            name="gearbox",
            dimension=7,
            bounds=list(GEARBOX_BOUNDS),
            objective=lambda x, _lam=lam: penalized_objective(x, _lam),
            target_threshold=GEARBOX_TARGET,
            integer_dims=frozenset({2}),
            kind=KIND_GEARBOX,
            penalty_coefficient=lam,
        )
    raise KeyError(f"unknown problem {name!r}; known: {', '.join(PROBLEM_NAMES)}")
