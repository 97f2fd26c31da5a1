"""Deterministic generation of small quivers for sweeps and acceptance runs."""

from __future__ import annotations

import random

from .quivers import Quiver


def q_arrow() -> Quiver:
    """v1 --a--> v2."""
    return Quiver(("v1", "v2"), (("a", "v1", "v2"),))


def q_a3() -> Quiver:
    """v1 --a--> v2 --b--> v3."""
    return Quiver(("v1", "v2", "v3"), (("a", "v1", "v2"), ("b", "v2", "v3")))


def q_isolated(n: int) -> Quiver:
    return Quiver(tuple(f"v{i + 1}" for i in range(n)), ())


def sweep_quivers(
    max_vertices: int = 4,
    max_edges: int = 4,
    count: int = 200,
    seed: int = 20240824,
) -> list[Quiver]:
    """A fixed pseudorandom family of distinct quivers within the given bounds.

    The first entries are canonical fixtures; the rest are drawn from a seeded
    generator, deduplicated by edge signature, so runs are reproducible."""
    fixtures = [
        q_isolated(1),
        q_isolated(2),
        q_arrow(),
        q_a3(),
        Quiver(("v1",), (("a", "v1", "v1"),)),  # loop
        Quiver(("v1", "v2"), (("a", "v1", "v2"), ("b", "v2", "v1"))),  # 2-cycle
        Quiver(("v1", "v2", "v3"), (("a", "v1", "v2"), ("b", "v1", "v3"))),  # fork
        Quiver(("v1", "v2", "v3"), (("a", "v1", "v3"), ("b", "v2", "v3"))),  # join
    ]
    out = []
    seen = set()
    for q in fixtures:
        if len(q.vertices) <= max_vertices and len(q.edges) <= max_edges:
            sig = (len(q.vertices), tuple(sorted((s, t) for _, s, t in q.edges)))
            seen.add(sig)
            out.append(q)
    rng = random.Random(seed)
    attempts = 0
    while len(out) < count and attempts < count * 200:
        attempts += 1
        nv = rng.randint(1, max_vertices)
        ne = rng.randint(0, max_edges)
        verts = tuple(f"v{i + 1}" for i in range(nv))
        pairs = sorted(
            (verts[rng.randrange(nv)], verts[rng.randrange(nv)]) for _ in range(ne)
        )
        sig = (nv, tuple(pairs))
        if sig in seen:
            continue
        seen.add(sig)
        edges = tuple(
            (f"a{i + 1}", s, t) for i, (s, t) in enumerate(pairs)
        )
        out.append(Quiver(verts, edges))
    return out
