"""Exact minimum Kakeya-set size in F_q^2 by branch and bound.

Any Kakeya set contains one full line per canonical direction, and the
union of those lines is itself Kakeya, so the minimum is attained by a
union of one line per direction.  The search branches over the q
parallel lines of each direction in canonical order.
"""

from __future__ import annotations

from .sets import KakeyaSet
from .space import canonical_directions, line_points

MAX_Q = 9


def _lines_by_direction(field, dirs):
    """For each direction the q parallel lines, deterministically ordered.

    A line is (base, frozenset of coordinate codes); bases are taken in
    sorted point order, keeping the first base seen per line.
    """
    q = field.q
    out = []
    for b in dirs:
        seen = {}
        for a0 in range(q):
            for a1 in range(q):
                base = (a0, a1)
                pts = frozenset(p[0] * q + p[1] for p in line_points(field, base, b))
                if pts not in seen:
                    seen[pts] = base
        lines = sorted(((base, pts) for pts, base in seen.items()))
        out.append(lines)
    return out


def min_kakeya(field, n: int = 2):
    """Exact minimum |K| over Kakeya sets in F_q^2, with a verified witness."""
    if n != 2:
        raise ValueError("exact search supports n = 2 only")
    q = field.q
    if q > MAX_Q:
        raise ValueError(f"exact search supports q <= {MAX_Q}")
    dirs = canonical_directions(field, 2)
    lines = _lines_by_direction(field, dirs)
    ndirs = len(dirs)

    best_size = q * q + 1
    best_choice = None

    # A fresh line meets each previously chosen line (different direction)
    # in exactly one point, so choosing line number d adds >= q - d points.
    suffix_min_add = [0] * (ndirs + 1)
    for depth in range(ndirs - 1, -1, -1):
        suffix_min_add[depth] = suffix_min_add[depth + 1] + max(0, q - depth)

    def dfs(depth, union, choice):
        nonlocal best_size, best_choice
        if depth == ndirs:
            if len(union) < best_size:
                best_size = len(union)
                best_choice = list(choice)
            return
        if len(union) + suffix_min_add[depth] >= best_size:
            return
        for base, pts in lines[depth]:
            added = pts - union
            choice.append((base, pts))
            dfs(depth + 1, union | added, choice)
            choice.pop()

    dfs(0, frozenset(), [])

    points = frozenset().union(*(pts for _, pts in best_choice))
    decoded = frozenset((c // q, c % q) for c in points)
    witnesses = {b: base for b, (base, _) in zip(dirs, best_choice)}
    witness_set = KakeyaSet(field, 2, decoded, witnesses, "custom")
    return best_size, witness_set


def size_sandwich(field, n, m_cap=None):
    """[best lemma bound, best construction size] for dimensions beyond
    the exact search."""
    from .bounds import best_m
    from .sets import construct_even, construct_odd

    if m_cap is None:
        m_cap = 2 * n
    _, rep = best_m(n, field.q, m_cap)
    if field.p == 2:
        upper = construct_even(field, n).size
    else:
        upper = construct_odd(field, n).size
    return rep.bound_ceiling, upper
