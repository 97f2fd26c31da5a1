"""Finite quivers, paths, and the closure/connectivity predicates on vertex sets."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import FrozenSet, Iterable, Iterator


class QuiverError(ValueError):
    """Malformed quiver, path, or vertex-set input."""


@dataclass(frozen=True)
class Path:
    """A path: either trivial at a vertex, or a nonempty edge sequence in
    traversal order (target of each edge equals source of the next)."""

    vertex: str | None = None
    edges: tuple[str, ...] = ()

    def __post_init__(self):
        if (self.vertex is None) == (len(self.edges) == 0):
            raise QuiverError("path is either trivial(vertex) or a nonempty edge list")

    @property
    def is_trivial(self) -> bool:
        return self.vertex is not None

    def __len__(self) -> int:
        return len(self.edges)

    def sort_key(self):
        # length first, then identifiers, so serialized elements are bit-stable
        if self.is_trivial:
            return (0, (self.vertex,))
        return (len(self.edges), self.edges)

    def to_json(self):
        if self.is_trivial:
            return {"trivial": self.vertex}
        return {"edges": list(self.edges)}

    @staticmethod
    def from_json(obj) -> "Path":
        if not isinstance(obj, dict):
            raise QuiverError(f"bad path: {obj!r}")
        if "trivial" in obj:
            return Path(vertex=obj["trivial"])
        if "edges" in obj:
            return Path(edges=tuple(obj["edges"]))
        raise QuiverError(f"bad path: {obj!r}")


@dataclass(frozen=True)
class Quiver:
    """A finite quiver: ordered vertices and a list of (id, source, target) edges."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, str], ...] = ()

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverError("duplicate vertex identifiers")
        seen = set()
        for eid, src, dst in self.edges:
            if eid in seen:
                raise QuiverError(f"duplicate edge identifier {eid!r}")
            seen.add(eid)
            if src not in self.vertex_set or dst not in self.vertex_set:
                raise QuiverError(f"edge {eid!r} touches undeclared vertex")

    @cached_property
    def vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertices)

    @cached_property
    def edge_by_id(self) -> dict[str, tuple[str, str]]:
        return {eid: (src, dst) for eid, src, dst in self.edges}

    @cached_property
    def out_edges(self) -> dict[str, tuple[str, ...]]:
        out = {v: [] for v in self.vertices}
        for eid, src, _ in self.edges:
            out[src].append(eid)
        return {v: tuple(es) for v, es in out.items()}

    @cached_property
    def in_edges(self) -> dict[str, tuple[str, ...]]:
        inc = {v: [] for v in self.vertices}
        for eid, _, dst in self.edges:
            inc[dst].append(eid)
        return {v: tuple(es) for v, es in inc.items()}

    def edge_source(self, eid: str) -> str:
        return self.edge_by_id[eid][0]

    def edge_target(self, eid: str) -> str:
        return self.edge_by_id[eid][1]

    # ---- paths ----

    def check_path(self, p: Path) -> Path:
        if p.is_trivial:
            if p.vertex not in self.vertex_set:
                raise QuiverError(f"unknown vertex {p.vertex!r}")
            return p
        for eid in p.edges:
            if eid not in self.edge_by_id:
                raise QuiverError(f"unknown edge {eid!r}")
        for a, b in zip(p.edges, p.edges[1:]):
            if self.edge_target(a) != self.edge_source(b):
                raise QuiverError(f"edges {a!r},{b!r} do not compose")
        return p

    def path_source(self, p: Path) -> str:
        return p.vertex if p.is_trivial else self.edge_source(p.edges[0])

    def path_target(self, p: Path) -> str:
        return p.vertex if p.is_trivial else self.edge_target(p.edges[-1])

    def paths_up_to(self, max_len: int, limit: int | None = None) -> list[Path]:
        """All paths of length <= max_len in canonical order.

        A limit guards against blowup on cyclic quivers.
        """
        out: list[Path] = [Path(vertex=v) for v in sorted(self.vertices)]
        frontier: list[tuple[str, ...]] = [()]
        for length in range(1, max_len + 1):
            nxt: list[tuple[str, ...]] = []
            for pref in frontier:
                if pref == ():
                    candidates = [eid for eid, _, _ in self.edges]
                else:
                    candidates = self.out_edges[self.edge_target(pref[-1])]
                for eid in candidates:
                    nxt.append(pref + (eid,))
            nxt.sort()
            for seq in nxt:
                out.append(Path(edges=seq))
                if limit is not None and len(out) > limit:
                    raise QuiverError(
                        f"path enumeration exceeded limit {limit} at length {length}"
                    )
            frontier = nxt
        return out

    @cached_property
    def is_acyclic(self) -> bool:
        color = {v: 0 for v in self.vertices}

        def visit(v: str) -> bool:
            color[v] = 1
            for eid in self.out_edges[v]:
                w = self.edge_target(eid)
                if color[w] == 1:
                    return False
                if color[w] == 0 and not visit(w):
                    return False
            color[v] = 2
            return True

        return all(visit(v) for v in self.vertices if color[v] == 0)

    def all_paths(self) -> list[Path]:
        """Every path of an acyclic quiver, in canonical order."""
        if not self.is_acyclic:
            raise QuiverError("all_paths requires an acyclic quiver")
        return self.paths_up_to(max(len(self.vertices) - 1, 0))

    # ---- vertex-set predicates ----

    def _check_subset(self, s: Iterable[str]) -> frozenset[str]:
        s = frozenset(s)
        unknown = s - self.vertex_set
        if unknown:
            raise QuiverError(f"unknown vertices {sorted(unknown)}")
        return s

    def is_left_closed(self, s: Iterable[str]) -> bool:
        """Closed under targets of outgoing edges."""
        s = self._check_subset(s)
        return all(
            self.edge_target(eid) in s for v in s for eid in self.out_edges[v]
        )

    def is_right_closed(self, s: Iterable[str]) -> bool:
        """Closed under sources of incoming edges."""
        s = self._check_subset(s)
        return all(
            self.edge_source(eid) in s for v in s for eid in self.in_edges[v]
        )

    def reachable(self, start: str) -> frozenset[str]:
        """Vertices reachable from `start` by a directed path of length >= 0."""
        if start not in self.vertex_set:
            raise QuiverError(f"unknown vertex {start!r}")
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for eid in self.out_edges[v]:
                w = self.edge_target(eid)
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return frozenset(seen)

    def weak_components(self) -> list[frozenset[str]]:
        """Partition of the vertices under the symmetric closure of the edge relation."""
        nbrs = {v: set() for v in self.vertices}
        for _, src, dst in self.edges:
            nbrs[src].add(dst)
            nbrs[dst].add(src)
        seen: set[str] = set()
        comps = []
        for v in self.vertices:
            if v in seen:
                continue
            comp = {v}
            stack = [v]
            seen.add(v)
            while stack:
                u = stack.pop()
                for w in nbrs[u]:
                    if w not in seen:
                        seen.add(w)
                        comp.add(w)
                        stack.append(w)
            comps.append(frozenset(comp))
        return comps

    def enumerate_left_closed(self, max_vertices: int = 16) -> list[frozenset[str]]:
        """All left-closed vertex subsets, by exhaustive subset enumeration."""
        n = len(self.vertices)
        if n > max_vertices:
            raise QuiverError(
                f"quiver has {n} vertices, above the enumeration bound {max_vertices}"
            )
        out = []
        for mask in range(1 << n):
            s = frozenset(v for i, v in enumerate(self.vertices) if mask >> i & 1)
            if self.is_left_closed(s):
                out.append(s)
        out.sort(key=lambda s: (len(s), sorted(s)))
        return out

    # ---- serialization ----

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [{"id": eid, "src": src, "dst": dst} for eid, src, dst in self.edges],
        }

    @staticmethod
    def from_json(obj: dict) -> "Quiver":
        if not isinstance(obj, dict) or "vertices" not in obj:
            raise QuiverError(f"bad quiver: {obj!r}")
        edges = tuple(
            (e["id"], e["src"], e["dst"]) for e in obj.get("edges", [])
        )
        return Quiver(tuple(obj["vertices"]), edges)


def concat(q: Quiver, p: Path, r: Path) -> Path | None:
    """The product path p*r (traverse r, then p); None when the junction mismatches."""
    if r.is_trivial:
        return p if q.path_source(p) == r.vertex else None
    if p.is_trivial:
        return r if q.path_target(r) == p.vertex else None
    if q.path_target(r) != q.path_source(p):
        return None
    return Path(edges=r.edges + p.edges)
