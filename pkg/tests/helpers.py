"""Independent brute-force oracles for the test suite.

Everything here is deliberately written from scratch (recursive
enumeration, cofactor expansion) so it shares no code path with the
package implementations it checks.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import product


def brute_monotone_count(start, end, mu=None):
    """Memoized recursive count of monotone R/U paths under x >= mu*y."""
    sx, sy = start
    ex, ey = end

    def ok(x, y):
        return mu is None or x >= mu * y

    if not ok(sx, sy) or not ok(ex, ey):
        return 0

    @lru_cache(maxsize=None)
    def walk(x, y):
        if not ok(x, y):
            return 0
        if (x, y) == (ex, ey):
            return 1
        total = 0
        if x < ex:
            total += walk(x + 1, y)
        if y < ey:
            total += walk(x, y + 1)
        return total

    return walk(sx, sy)


def brute_paths(start, end, mu=None):
    """All monotone paths as vertex tuples (R explored before U)."""
    sx, sy = start
    ex, ey = end

    def ok(x, y):
        return mu is None or x >= mu * y

    if not ok(sx, sy) or not ok(ex, ey) or ex < sx or ey < sy:
        return []
    out = []

    def walk(x, y, acc):
        if (x, y) == (ex, ey):
            out.append(tuple(acc))
            return
        if x < ex and ok(x + 1, y):
            acc.append((x + 1, y))
            walk(x + 1, y, acc)
            acc.pop()
        if y < ey and ok(x, y + 1):
            acc.append((x, y + 1))
            walk(x, y + 1, acc)
            acc.pop()

    walk(sx, sy, [(sx, sy)])
    return out


def brute_family_count(starts, ends, mu=None):
    """Vertex-disjoint family count by filtering the full product."""
    all_paths = [brute_paths(s, e, mu) for s, e in zip(starts, ends)]
    count = 0
    for combo in product(*all_paths):
        seen = set()
        ok = True
        for path in combo:
            for pt in path:
                if pt in seen:
                    ok = False
                    break
                seen.add(pt)
            if not ok:
                break
        if ok:
            count += 1
    return count


def det_cofactor(rows):
    """Plain cofactor-expansion determinant over Fractions."""
    n = len(rows)
    rows = [tuple(Fraction(x) for x in row) for row in rows]

    def expand(m):
        if len(m) == 1:
            return m[0][0]
        total = Fraction(0)
        for j in range(len(m)):
            if m[0][j] == 0:
                continue
            minor = [r[:j] + r[j + 1:] for r in m[1:]]
            term = m[0][j] * expand(minor)
            total += term if j % 2 == 0 else -term
        return total

    return expand(rows)
