"""Points, directions, and lines in F_q^n.

Points and directions are plain tuples of element ints.  A direction is
canonical when its first nonzero coordinate is 1; the canonical
directions are exactly the (q^n - 1)/(q - 1) projective representatives.
"""

from __future__ import annotations

from itertools import product


def canonicalize(field, vec):
    """Scale a nonzero vector so its first nonzero coordinate is 1."""
    for c in vec:
        if c != 0:
            lam = field.inv(c)
            return tuple(field.mul(lam, x) for x in vec)
    raise ValueError("zero vector has no direction")


def canonical_directions(field, n):
    """All canonical directions of F_q^n in lexicographic order.

    Exactly (q^n - 1)/(q - 1) tuples, each of the form
    (0, ..., 0, 1, *...*); tuples with more leading zeros sort first.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    out = []
    for lead in range(n - 1, -1, -1):
        prefix = (0,) * lead + (1,)
        for tail in product(range(field.q), repeat=n - 1 - lead):
            out.append(prefix + tail)
    return out


def line_points(field, base, direction):
    """The q points {base + t*direction : t in F_q} as a frozenset."""
    add, mul = field.add, field.mul
    return frozenset(
        tuple(add(a, mul(t, b)) for a, b in zip(base, direction))
        for t in range(field.q)
    )


def points_to_dict(field, n, points):
    """Serializable point-list payload, sorted for reproducibility."""
    return {
        "format": 1,
        "q": field.q,
        "n": n,
        "points": [list(p) for p in sorted(points)],
    }


def points_from_dict(d):
    from .gf import field_make

    field = field_make(d["q"])
    n = d["n"]
    points = [tuple(p) for p in d["points"]]
    for p in points:
        if len(p) != n or not all(0 <= c < field.q for c in p):
            raise ValueError(f"point {p} not in F_{field.q}^{n}")
    return field, n, points
