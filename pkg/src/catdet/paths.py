"""Monotone lattice paths and non-intersecting path families.

This module is the combinatorial ground truth the determinant
identities are checked against:

* ``count_paths`` is a dynamic-programming count of unit-step monotone
  paths, optionally constrained to stay weakly below a slanted line
  ("every visited point satisfies x >= mu * y"; touching the line is
  allowed, and the start and end points count as visited).
* ``enumerate_paths`` lists those paths explicitly (lexicographically,
  with 'R' before 'U'), refusing when the count exceeds a cap.
* ``count_nonintersecting`` brute-forces vertex-disjoint path families:
  no two paths in a family may share any lattice point, endpoints
  included.
* ``lgv_determinant`` evaluates the determinant of single-pair counts
  whose value equals the family count whenever the start/end layout is
  staggered so that mismatched pairings are forced to cross.

Start/end layouts come either from explicit coordinates or from the
config builders at the bottom (the slanted-line configuration behind
the generalised-Catalan determinants and the column-to-row layout
behind the product formula for stacked families).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, NamedTuple, Sequence

from .engines import det
from .matrices import ExactMatrix, Provenance
from .rationals import as_integer, binomial_int

DEFAULT_ENUM_CAP = 100_000

STEP_RIGHT = "R"
STEP_UP = "U"


class LatticePoint(NamedTuple):
    x: int
    y: int


def _point(p) -> LatticePoint:
    x, y = p
    return LatticePoint(int(x), int(y))


@dataclass(frozen=True)
class LatticePath:
    """A monotone path: a start point plus a string of 'R'/'U' steps."""

    start: LatticePoint
    steps: str

    def __post_init__(self) -> None:
        if any(s not in (STEP_RIGHT, STEP_UP) for s in self.steps):
            raise ValueError(f"steps must be 'R'/'U' only: {self.steps!r}")

    def points(self) -> tuple[LatticePoint, ...]:
        x, y = self.start
        out = [LatticePoint(x, y)]
        for s in self.steps:
            if s == STEP_RIGHT:
                x += 1
            else:
                y += 1
            out.append(LatticePoint(x, y))
        return tuple(out)

    @property
    def end(self) -> LatticePoint:
        x, y = self.start
        r = self.steps.count(STEP_RIGHT)
        return LatticePoint(x + r, y + len(self.steps) - r)


@dataclass(frozen=True)
class PathSystemConfig:
    """n start points, n end points, an optional slant constraint mu
    (every visited point must satisfy x >= mu * y), and a tag recording
    which builder produced the configuration."""

    starts: tuple[LatticePoint, ...]
    ends: tuple[LatticePoint, ...]
    mu: int | None = None
    source: str = "custom"

    def __post_init__(self) -> None:
        object.__setattr__(self, "starts", tuple(_point(p) for p in self.starts))
        object.__setattr__(self, "ends", tuple(_point(p) for p in self.ends))
        if len(self.starts) != len(self.ends):
            raise ValueError("starts and ends must have the same length")
        if not self.starts:
            raise ValueError("configuration must contain at least one path")
        if self.mu is not None and self.mu < 1:
            raise ValueError(f"mu must be >= 1 (got {self.mu})")

    @property
    def size(self) -> int:
        return len(self.starts)


class EnumerationCapError(RuntimeError):
    """Path enumeration refused: the exact count exceeds the cap."""

    def __init__(self, count: int, cap: int):
        super().__init__(f"enumeration refused: {count} paths exceed cap {cap}")
        self.count = count
        self.cap = cap


def _satisfies(x: int, y: int, mu: int | None) -> bool:
    return mu is None or x >= mu * y


def count_paths(start, end, mu: int | None = None) -> int:
    """Number of monotone paths start -> end honouring the constraint.

    Returns 0 when the end point is unreachable or either endpoint
    violates the constraint.
    """
    ax, ay = _point(start)
    ex, ey = _point(end)
    if ex < ax or ey < ay:
        return 0
    if not _satisfies(ax, ay, mu) or not _satisfies(ex, ey, mu):
        return 0
    width, height = ex - ax + 1, ey - ay + 1
    row = [0] * width                       # counts for current y level
    for dx in range(width):
        if not _satisfies(ax + dx, ay, mu):
            break
        row[dx] = 1
    for dy in range(1, height):
        new = [0] * width
        for dx in range(width):
            if not _satisfies(ax + dx, ay + dy, mu):
                continue
            new[dx] = row[dx] + (new[dx - 1] if dx else 0)
        row = new
    return row[width - 1]


def enumerate_paths(start, end, mu: int | None = None,
                    cap: int = DEFAULT_ENUM_CAP) -> list[LatticePath]:
    """All constrained monotone paths start -> end, lexicographic in the
    step string ('R' < 'U').  Raises EnumerationCapError when the count
    exceeds ``cap``."""
    start = _point(start)
    end = _point(end)
    total = count_paths(start, end, mu)
    if total > cap:
        raise EnumerationCapError(total, cap)
    if total == 0:
        return []
    out: list[LatticePath] = []
    steps: list[str] = []

    def walk(x: int, y: int) -> None:
        if (x, y) == end:
            out.append(LatticePath(start, "".join(steps)))
            return
        if x < end.x and _satisfies(x + 1, y, mu):
            steps.append(STEP_RIGHT)
            walk(x + 1, y)
            steps.pop()
        if y < end.y and _satisfies(x, y + 1, mu):
            steps.append(STEP_UP)
            walk(x, y + 1)
            steps.pop()

    walk(start.x, start.y)
    return out


def count_nonintersecting(config: PathSystemConfig,
                          cap: int = DEFAULT_ENUM_CAP) -> int:
    """Brute-force count of vertex-disjoint families (P_0, ..., P_{n-1}),
    P_i running starts[i] -> ends[i], all honouring the constraint.

    Every per-pair path set must fit under ``cap``.  Exponential in the
    worst case; meant as an oracle for desk-scale configurations.
    """
    families = [enumerate_paths(s, e, config.mu, cap)
                for s, e in zip(config.starts, config.ends)]
    point_sets = [[frozenset(p.points()) for p in paths] for paths in families]

    def extend(level: int, used: frozenset) -> int:
        if level == len(point_sets):
            return 1
        total = 0
        for pts in point_sets[level]:
            if used & pts:
                continue
            total += extend(level + 1, used | pts)
        return total

    return extend(0, frozenset())


def first_family(config: PathSystemConfig,
                 cap: int = DEFAULT_ENUM_CAP) -> list[LatticePath] | None:
    """The lexicographically first vertex-disjoint family, or None."""
    families = [enumerate_paths(s, e, config.mu, cap)
                for s, e in zip(config.starts, config.ends)]

    def extend(level: int, used: frozenset, acc: list[LatticePath]):
        if level == len(families):
            return list(acc)
        for path in families[level]:
            pts = frozenset(path.points())
            if used & pts:
                continue
            acc.append(path)
            found = extend(level + 1, used | pts, acc)
            if found is not None:
                return found
            acc.pop()
        return None

    return extend(0, frozenset(), [])


def path_count_matrix(config: PathSystemConfig) -> ExactMatrix:
    """entry(i, j) = number of constrained paths starts[j] -> ends[i]."""
    n = config.size
    return ExactMatrix(
        [[count_paths(config.starts[j], config.ends[i], config.mu)
          for j in range(n)] for i in range(n)],
        provenance=Provenance("path_counts", (("source", config.source),)))


def lgv_determinant(config: PathSystemConfig) -> int:
    """Determinant of the single-pair count matrix.

    Equals ``count_nonintersecting`` whenever the layout forces any
    mismatched pairing to cross (the staggered layouts produced by the
    config builders below satisfy this by construction; it is not
    checked algorithmically).
    """
    return as_integer(det(path_count_matrix(config)).value)


# -- configuration builders ----------------------------------------------


def gen_catalan_config(alphas: Sequence[int], k: int, beta: int) -> PathSystemConfig:
    """The slanted-line system whose family count equals the determinant
    of ``gen_catalan_alpha_matrix(alphas, k, beta)``:

    P_i runs from (-(k-1) a_i, -a_i) to (i + beta, (i+beta) // (k-1)),
    weakly below x = (k-1) y.

    Any beta >= 0 is accepted: the path model is meaningful beyond the
    0 <= beta <= k-1 window that the matrix builder's closed form needs.
    """
    if k < 2:
        raise ValueError(f"k must be >= 2 (got {k})")
    if beta < 0:
        raise ValueError(f"beta must be >= 0 (got {beta})")
    if any(a < 0 for a in alphas):
        raise ValueError("alpha values must be >= 0")
    starts = tuple(LatticePoint(-(k - 1) * a, -a) for a in alphas)
    ends = tuple(LatticePoint(i + beta, (i + beta) // (k - 1))
                 for i in range(len(alphas)))
    return PathSystemConfig(starts, ends, mu=k - 1, source="gen_catalan_alpha")


def drop_forced_tail(config: PathSystemConfig) -> PathSystemConfig:
    """Remove the forced final vertical runs from a slanted-line system.

    All paths other than P_0 must finish with vertical steps above the
    height of the first end point; deleting those steps lowers every end
    point to that height without changing the family count.  Only
    configurations built by :func:`gen_catalan_config` are accepted.
    """
    if config.source != "gen_catalan_alpha":
        raise ValueError("drop_forced_tail only applies to gen_catalan_alpha "
                         f"configurations (got source={config.source!r})")
    mu = config.mu
    assert mu is not None
    beta = config.ends[0].x          # end x-coordinates are i + beta
    height = beta // mu              # floor(beta / (k-1))
    ends = tuple(LatticePoint(e.x, height) for e in config.ends)
    return replace(config, ends=ends)


def column_to_row_config(a: int, b: int, c: int,
                         alphas: Sequence[int]) -> PathSystemConfig:
    """Unconstrained system: P_i runs from (a, b - i) to (alphas[i], c).

    Starts are stacked downwards on the column x = a; ends sit on the
    row y = c.
    """
    starts = tuple(LatticePoint(a, b - i) for i in range(len(alphas)))
    ends = tuple(LatticePoint(x, c) for x in alphas)
    return PathSystemConfig(starts, ends, mu=None, source="column_to_row")


# -- dual paths ------------------------------------------------------------


def count_down_diagonal_paths(start, end) -> int:
    """Paths start -> end using steps (0,-1) and (1,-1); brute recursion.

    This is the enumeration-side oracle for :func:`dual_path_count`.
    """
    start = _point(start)
    end = _point(end)

    def walk(x: int, y: int) -> int:
        if y == end.y:
            return int(x == end.x)
        if x > end.x:
            return 0
        return walk(x, y - 1) + walk(x + 1, y - 1)

    if start.y < end.y:
        return 0
    return walk(start.x, start.y)


def dual_path_count(n: int, s: int, beta: int, k: int) -> int:
    """C(floor((s+beta)/(k-1)) + n, n - s): the number of down/diagonal
    staircase paths from (s+beta, floor((s+beta)/(k-1))) to (n+beta, -n),
    each of which encodes one non-intersecting family of the reduced
    slanted-line system."""
    if k < 2:
        raise ValueError(f"k must be >= 2 (got {k})")
    if not 0 <= beta <= k - 1:
        raise ValueError(f"beta must satisfy 0 <= beta <= k-1 = {k - 1} (got {beta})")
    if not 0 <= s <= n:
        raise ValueError(f"s must satisfy 0 <= s <= n = {n} (got {s})")
    return binomial_int((s + beta) // (k - 1) + n, n - s)


def dual_path_endpoints(n: int, s: int, beta: int, k: int) -> tuple[LatticePoint, LatticePoint]:
    """The staircase start/end used by :func:`dual_path_count`."""
    return (LatticePoint(s + beta, (s + beta) // (k - 1)),
            LatticePoint(n + beta, -n))


# -- ascii rendering --------------------------------------------------------


def render_ascii(config: PathSystemConfig,
                 family: Iterable[LatticePath] | None = None) -> str:
    """Character-grid picture of a configuration.

    Legend: S/E start/end markers, digits trace family paths, '/' marks
    lattice points on the line x = mu*y, '|' and '-' the axes, '.'
    everything else.  Output is deterministic and golden-file tested.
    """
    pts = list(config.starts) + list(config.ends)
    paths = list(family) if family is not None else []
    for p in paths:
        pts.extend(p.points())
    xmin = min(p.x for p in pts) - 1
    xmax = max(p.x for p in pts) + 1
    ymin = min(p.y for p in pts) - 1
    ymax = max(p.y for p in pts) + 1

    def base_char(x: int, y: int) -> str:
        if config.mu is not None and x == config.mu * y:
            return "/"
        if x == 0 and y == 0:
            return "+"
        if x == 0:
            return "|"
        if y == 0:
            return "-"
        return "."

    grid = {(x, y): base_char(x, y)
            for x in range(xmin, xmax + 1) for y in range(ymin, ymax + 1)}
    for i, p in enumerate(paths):
        mark = str(i % 10)
        for q in p.points():
            grid[q.x, q.y] = mark
    for p in config.starts:
        grid[p.x, p.y] = "S"
    for p in config.ends:
        grid[p.x, p.y] = "E"

    lines = []
    for y in range(ymax, ymin - 1, -1):
        lines.append(" ".join(grid[x, y] for x in range(xmin, xmax + 1)))
    lines.append("")
    lines.append(f"x: {xmin}..{xmax}  y: {ymin}..{ymax} (top row is y={ymax})")
    if config.mu is not None:
        lines.append(f"constraint: x >= {config.mu}*y (line marked '/')")
    for i, (s, e) in enumerate(zip(config.starts, config.ends)):
        lines.append(f"P{i}: S=({s.x},{s.y}) -> E=({e.x},{e.y})")
    return "\n".join(lines) + "\n"
