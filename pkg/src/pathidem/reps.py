"""Finite-dimensional quiver representations and raw modules.

A Representation assigns a free module of finite rank to each vertex and a
matrix to each edge; it is the graded picture of a non-degenerate module over
the path algebra. A RawModule is an ungraded module given by action matrices
for the generators; the non-degenerate part is extracted by `nu`.

Matrices act on column vectors; the edge matrix for a has shape
dims[target] x dims[source]. Global vectors concatenate the vertex blocks in
the quiver's declared vertex order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .algebra import AlgElem, path_element
from .linalg import (
    FieldRowSpace,
    LinAlgError,
    identity_matrix,
    mat_canon,
    mat_mul,
    mat_vec,
    nullspace,
    zero_matrix,
)
from .quivers import Path, Quiver, QuiverError
from .rings import Ring


class RepError(ValueError):
    pass


@dataclass
class Representation:
    quiver: Quiver
    ring: Ring
    dims: dict[str, int]
    edge_maps: dict[str, tuple]  # edge id -> matrix (dims[t] x dims[s])

    def __post_init__(self):
        q = self.quiver
        if set(self.dims) != set(q.vertices):
            raise RepError("dims must cover exactly the quiver's vertices")
        if any(d < 0 for d in self.dims.values()):
            raise RepError("negative dimension")
        maps = {}
        for eid, src, dst in q.edges:
            m = self.edge_maps.get(eid)
            if m is None:
                m = zero_matrix(self.ring, self.dims[dst], self.dims[src])
            m = mat_canon(self.ring, m)
            if len(m) != self.dims[dst] or any(
                len(row) != self.dims[src] for row in m
            ):
                raise RepError(f"edge {eid!r} matrix has wrong shape")
            maps[eid] = m
        extra = set(self.edge_maps) - set(maps)
        if extra:
            raise RepError(f"matrices given for unknown edges {sorted(extra)}")
        self.edge_maps = maps

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def offset(self, v: str) -> int:
        off = 0
        for w in self.quiver.vertices:
            if w == v:
                return off
            off += self.dims[w]
        raise RepError(f"unknown vertex {v!r}")

    def block(self, vec: Sequence, v: str) -> tuple:
        off = self.offset(v)
        return tuple(vec[off : off + self.dims[v]])

    def embed(self, local: Sequence, v: str) -> tuple:
        out = [self.ring.zero()] * self.total_dim
        off = self.offset(v)
        for i, x in enumerate(local):
            out[off + i] = x
        return tuple(out)

    def path_matrix(self, p: Path) -> tuple:
        """Global action matrix of a single path."""
        D = self.total_dim
        out = [[self.ring.zero()] * D for _ in range(D)]
        if p.is_trivial:
            v = p.vertex
            off = self.offset(v)
            for i in range(self.dims[v]):
                out[off + i][off + i] = self.ring.one()
            return tuple(tuple(r) for r in out)
        src = self.quiver.path_source(p)
        dst = self.quiver.path_target(p)
        comp = identity_matrix(self.ring, self.dims[src])
        for eid in p.edges:
            comp = mat_mul(self.ring, self.edge_maps[eid], comp)
        roff, coff = self.offset(dst), self.offset(src)
        for i, row in enumerate(comp):
            for j, x in enumerate(row):
                out[roff + i][coff + j] = x
        return tuple(tuple(r) for r in out)

    def action_matrix(self, e: AlgElem) -> tuple:
        if e.quiver != self.quiver or e.ring != self.ring:
            raise RepError("element and representation are incompatible")
        D = self.total_dim
        acc = [[self.ring.zero()] * D for _ in range(D)]
        for p, c in e.terms:
            pm = self.path_matrix(p)
            for i in range(D):
                row = pm[i]
                for j in range(D):
                    if not self.ring.is_zero(row[j]):
                        acc[i][j] = self.ring.add(acc[i][j], self.ring.mul(c, row[j]))
        return tuple(tuple(r) for r in acc)

    def apply_edge(self, eid: str, local: Sequence) -> tuple:
        return mat_vec(self.ring, self.edge_maps[eid], local)

    # ---- serialization ----

    def to_json(self) -> dict:
        return {
            "dims": dict(self.dims),
            "edges": {
                eid: [[self.ring.fmt(x) for x in row] for row in m]
                for eid, m in self.edge_maps.items()
            },
        }

    @staticmethod
    def from_json(quiver: Quiver, ring: Ring, obj: dict) -> "Representation":
        if not isinstance(obj, dict) or "dims" not in obj:
            raise RepError(f"bad representation: {obj!r}")
        dims = {v: int(d) for v, d in obj["dims"].items()}
        maps = {
            eid: tuple(tuple(ring.canon(x) for x in row) for row in m)
            for eid, m in obj.get("edges", {}).items()
        }
        return Representation(quiver, ring, dims, maps)

    def __eq__(self, other):
        return (
            isinstance(other, Representation)
            and self.quiver == other.quiver
            and self.ring == other.ring
            and self.dims == other.dims
            and self.edge_maps == other.edge_maps
        )


def zero_representation(quiver: Quiver, ring: Ring) -> Representation:
    return Representation(quiver, ring, {v: 0 for v in quiver.vertices}, {})


@dataclass
class Submodule:
    """A graded, edge-closed subspace of a representation, one echelon basis
    per vertex (vectors in the local coordinates of that vertex)."""

    rep: Representation
    spaces: dict[str, FieldRowSpace]

    @property
    def dims(self) -> dict[str, int]:
        return {v: sp.rank for v, sp in self.spaces.items()}

    @property
    def total_dim(self) -> int:
        return sum(sp.rank for sp in self.spaces.values())

    def basis(self, v: str) -> list[tuple]:
        return self.spaces[v].basis()

    def contains_global(self, vec: Sequence) -> bool:
        return all(
            self.spaces[v].contains(self.rep.block(vec, v))
            for v in self.rep.quiver.vertices
        )

    def is_edge_closed(self) -> bool:
        q = self.rep.quiver
        for eid, src, dst in q.edges:
            for x in self.spaces[src].basis():
                if not self.spaces[dst].contains(self.rep.apply_edge(eid, x)):
                    return False
        return True

    def __eq__(self, other):
        return (
            isinstance(other, Submodule)
            and self.rep == other.rep
            and {v: sp.basis() for v, sp in self.spaces.items()}
            == {v: sp.basis() for v, sp in other.spaces.items()}
        )

    def to_json(self) -> dict:
        return {
            v: [[self.rep.ring.fmt(x) for x in vec] for vec in sp.basis()]
            for v, sp in self.spaces.items()
        }


def submodule_from_local(
    rep: Representation, vectors: dict[str, list[Sequence]], close: bool = True
) -> Submodule:
    """Build a submodule from per-vertex spanning vectors, optionally closing
    under the edge maps."""
    spaces = {v: FieldRowSpace(rep.ring, rep.dims[v]) for v in rep.quiver.vertices}
    for v, vecs in vectors.items():
        for x in vecs:
            spaces[v].add(x)
    sub = Submodule(rep, spaces)
    if close:
        _close_under_edges(sub)
    return sub


def _close_under_edges(sub: Submodule) -> None:
    q = sub.rep.quiver
    changed = True
    while changed:
        changed = False
        for eid, src, dst in q.edges:
            for x in list(sub.spaces[src].basis()):
                if sub.spaces[dst].add(sub.rep.apply_edge(eid, x)):
                    changed = True


def e_fixed(e: AlgElem, m: Representation) -> list[tuple]:
    """Echelon basis of the image e*M inside the total space. Not necessarily
    edge-closed (nor graded) on its own."""
    if not e.is_idempotent():
        raise RepError("e_fixed requires an idempotent element")
    act = m.action_matrix(e)
    space = FieldRowSpace(m.ring, m.total_dim)
    for j in range(m.total_dim):
        space.add(tuple(act[i][j] for i in range(m.total_dim)))
    return space.basis()


def gamma(e: AlgElem, m: Representation) -> Submodule:
    """The smallest edge-closed graded subspace containing e*M (i.e. the span
    of all path translates of e*M), computed by worklist closure."""
    seed: dict[str, list] = {v: [] for v in m.quiver.vertices}
    for w in e_fixed(e, m):
        for v in m.quiver.vertices:
            seed[v].append(m.block(w, v))
    return submodule_from_local(m, seed, close=True)


def in_category_e(e: AlgElem, m: Representation) -> bool:
    """Whether M is generated by its e-fixed vectors (M = A e M)."""
    return gamma(e, m).dims == m.dims


def sub_representation(sub: Submodule) -> tuple[Representation, dict[str, list[tuple]]]:
    """The submodule as a representation in its own echelon bases, plus the
    per-vertex inclusion bases (local vectors of the ambient module)."""
    rep = sub.rep
    dims = sub.dims
    maps = {}
    for eid, src, dst in rep.quiver.edges:
        cols = []
        for x in sub.spaces[src].basis():
            y = rep.apply_edge(eid, x)
            coords = sub.spaces[dst].coords(y)
            if coords is None:
                raise RepError("subspace is not closed under the edge maps")
            cols.append(coords)
        # transpose the column list into a dims[dst] x dims[src] matrix
        maps[eid] = tuple(
            tuple(cols[j][i] for j in range(dims[src])) for i in range(dims[dst])
        )
    return (
        Representation(rep.quiver, rep.ring, dims, maps),
        {v: sub.spaces[v].basis() for v in rep.quiver.vertices},
    )


def quotient(m: Representation, sub: Submodule) -> Representation:
    """Quotient representation by a submodule; over Z/n only free quotients
    (non-unit pivots raise)."""
    if sub.rep != m:
        raise RepError("submodule belongs to a different representation")
    ring = m.ring
    coords: dict[str, list[int]] = {}
    for v in m.quiver.vertices:
        pivots = set(sub.spaces[v].pivots)
        coords[v] = [j for j in range(m.dims[v]) if j not in pivots]

    def project(v: str, x: Sequence) -> tuple:
        red = sub.spaces[v]._reduce(x)
        return tuple(red[j] for j in coords[v])

    dims = {v: len(coords[v]) for v in m.quiver.vertices}
    maps = {}
    for eid, src, dst in m.quiver.edges:
        cols = []
        for j in coords[src]:
            basis_vec = [ring.zero()] * m.dims[src]
            basis_vec[j] = ring.one()
            cols.append(project(dst, m.apply_edge(eid, basis_vec)))
        maps[eid] = tuple(
            tuple(cols[jj][i] for jj in range(dims[src])) for i in range(dims[dst])
        )
    return Representation(m.quiver, ring, dims, maps)


# ---- Hom spaces ----


def hom_space(
    m: Representation, n: Representation, zn_dim_cap: int = 6
) -> list[dict[str, tuple]]:
    """Basis of intertwiners f = (f_v) with f_{t(a)} M_a = N_a f_{s(a)}.

    Over a field this is a nullspace computation; over Z/n an exhaustive
    search bounded by `zn_dim_cap` on the combined total dimension."""
    if m.quiver != n.quiver or m.ring != n.ring:
        raise RepError("representations are incompatible")
    ring = m.ring
    if ring.is_field:
        return _hom_space_field(m, n)
    if m.total_dim + n.total_dim > zn_dim_cap:
        raise RepError(
            f"hom_space over {ring} needs total dimension <= {zn_dim_cap}"
        )
    return _hom_space_exhaustive(m, n)


def _unknown_layout(m: Representation, n: Representation) -> list[tuple[str, int, int]]:
    layout = []
    for v in m.quiver.vertices:
        for i in range(n.dims[v]):
            for j in range(m.dims[v]):
                layout.append((v, i, j))
    return layout


def _unpack(m, n, layout, sol) -> dict[str, tuple]:
    ring = m.ring
    mats = {
        v: [[ring.zero()] * m.dims[v] for _ in range(n.dims[v])]
        for v in m.quiver.vertices
    }
    for (v, i, j), x in zip(layout, sol):
        mats[v][i][j] = ring.canon(x)
    return {v: tuple(tuple(r) for r in rows) for v, rows in mats.items()}


def _hom_space_field(m, n) -> list[dict[str, tuple]]:
    ring = m.ring
    layout = _unknown_layout(m, n)
    index = {key: k for k, key in enumerate(layout)}
    rows = []
    for eid, src, dst in m.quiver.edges:
        Ma, Na = m.edge_maps[eid], n.edge_maps[eid]
        for i in range(n.dims[dst]):
            for j in range(m.dims[src]):
                row = [ring.zero()] * len(layout)
                for k in range(m.dims[dst]):
                    row[index[(dst, i, k)]] = ring.add(
                        row[index[(dst, i, k)]], Ma[k][j]
                    )
                for l in range(n.dims[src]):
                    row[index[(src, l, j)]] = ring.sub(
                        row[index[(src, l, j)]], Na[i][l]
                    )
                rows.append(row)
    return [_unpack(m, n, layout, sol) for sol in nullspace(ring, rows, len(layout))]


def _hom_space_exhaustive(m, n) -> list[dict[str, tuple]]:
    from itertools import product

    ring = m.ring
    layout = _unknown_layout(m, n)
    found = []
    from .linalg import ZnRowSpace

    span = ZnRowSpace(ring, len(layout)) if layout else None
    for assignment in product(ring.elements(), repeat=len(layout)):
        f = _unpack(m, n, layout, assignment)
        ok = all(
            mat_mul(ring, f[dst], m.edge_maps[eid])
            == mat_mul(ring, n.edge_maps[eid], f[src])
            for eid, src, dst in m.quiver.edges
        )
        if ok and span is not None and span.add(assignment):
            found.append(f)
    return found


def intertwiner_global(m: Representation, f: dict[str, tuple]) -> tuple:
    """Block-diagonal global matrix of a vertex-map family."""
    ring = m.ring
    D = m.total_dim
    out = [[ring.zero()] * D for _ in range(D)]
    for v in m.quiver.vertices:
        off = m.offset(v)
        for i in range(len(f[v])):
            for j in range(len(f[v][i])):
                out[off + i][off + j] = f[v][i][j]
    return tuple(tuple(r) for r in out)


# ---- corner ring eAe and its modules ----


@dataclass
class CornerAlgebra:
    """Basis of the corner ring e*A*e of an acyclic quiver's path algebra."""

    e: AlgElem
    basis: list[AlgElem]

    @property
    def dim(self) -> int:
        return len(self.basis)


def corner_algebra(e: AlgElem) -> CornerAlgebra:
    q, ring = e.quiver, e.ring
    if not q.is_acyclic:
        raise RepError("corner computations require an acyclic quiver")
    if not e.is_idempotent():
        raise RepError("corner ring needs an idempotent element")
    paths = q.all_paths()
    index = {p: i for i, p in enumerate(paths)}
    space = FieldRowSpace(ring, len(paths))
    rows_elems: list[AlgElem] = []
    for p in paths:
        x = e * path_element(q, ring, p) * e
        if x.is_zero:
            continue
        vec = [ring.zero()] * len(paths)
        for pp, c in x.terms:
            vec[index[pp]] = c
        space.add(vec)
    for row in space.basis():
        terms = {paths[i]: c for i, c in enumerate(row) if not ring.is_zero(c)}
        rows_elems.append(AlgElem.make(q, ring, terms))
    return CornerAlgebra(e, rows_elems)


@dataclass
class CornerModule:
    """e*M as a module over the corner ring: a basis of e*M (global vectors of
    the ambient representation) and one action matrix per corner basis element."""

    corner: CornerAlgebra
    rep: Representation
    basis: list[tuple]
    actions: list[tuple]  # aligned with corner.basis

    @property
    def dim(self) -> int:
        return len(self.basis)


def corner_module(e: AlgElem, m: Representation) -> CornerModule:
    corner = corner_algebra(e)
    ring = m.ring
    basis = e_fixed(e, m)
    space = FieldRowSpace(ring, m.total_dim)
    for w in basis:
        space.add(w)
    actions = []
    for b in corner.basis:
        act = m.action_matrix(b)
        cols = []
        for w in basis:
            y = mat_vec(ring, act, w)
            coords = space.coords(y)
            if coords is None:
                raise RepError("corner action left the e-fixed subspace")
            cols.append(coords)
        actions.append(
            tuple(
                tuple(cols[j][i] for j in range(len(basis)))
                for i in range(len(basis))
            )
        )
    return CornerModule(corner, m, basis, actions)


def corner_intertwiners(cm: CornerModule, cn: CornerModule) -> list[tuple]:
    """Basis of matrices g with g * act_m(b) == act_n(b) * g for every corner
    basis element b; g maps coordinates of e*M to coordinates of e*N."""
    ring = cm.rep.ring
    if not ring.is_field:
        raise RepError("corner intertwiners need a field")
    rows = []
    nunk = cn.dim * cm.dim
    for Am, An in zip(cm.actions, cn.actions):
        for i in range(cn.dim):
            for j in range(cm.dim):
                row = [ring.zero()] * nunk
                for k in range(cm.dim):
                    row[i * cm.dim + k] = ring.add(row[i * cm.dim + k], Am[k][j])
                for l in range(cn.dim):
                    row[l * cm.dim + j] = ring.sub(row[l * cm.dim + j], An[i][l])
                rows.append(row)
    return nullspace(ring, rows, nunk)


def restrict_to_corner(
    e: AlgElem, m: Representation, n: Representation, f: dict[str, tuple],
    cm: Optional[CornerModule] = None, cn: Optional[CornerModule] = None,
) -> tuple:
    """Restriction of an intertwiner f: M -> N to a matrix e*M -> e*N in the
    corner-module coordinate bases."""
    ring = m.ring
    cm = cm or corner_module(e, m)
    cn = cn or corner_module(e, n)
    space_n = FieldRowSpace(ring, n.total_dim)
    for w in cn.basis:
        space_n.add(w)
    cols = []
    for w in cm.basis:
        y = [ring.zero()] * n.total_dim
        for v in m.quiver.vertices:
            loc = mat_vec(ring, f[v], m.block(w, v))
            off = n.offset(v)
            for i, x in enumerate(loc):
                y[off + i] = ring.add(y[off + i], x)
        coords = space_n.coords(tuple(y))
        if coords is None:
            raise RepError("intertwiner image left the e-fixed subspace")
        cols.append(coords)
    return tuple(
        tuple(cols[j][i] for j in range(cm.dim)) for i in range(cn.dim)
    )


def morita_surrogate_check(
    e: AlgElem,
    m: Representation,
    n: Representation,
    cm: Optional[CornerModule] = None,
    cn: Optional[CornerModule] = None,
) -> dict:
    """Check that restriction to the e-fixed subspaces is a bijection from
    Hom(M, N) onto the corner intertwiners, for M, N generated by their
    e-fixed vectors over an acyclic quiver."""
    ring = m.ring
    homs = hom_space(m, n)
    cm = cm or corner_module(e, m)
    cn = cn or corner_module(e, n)
    corner_dim = len(corner_intertwiners(cm, cn))
    restricted = FieldRowSpace(ring, cn.dim * cm.dim)
    for f in homs:
        r = restrict_to_corner(e, m, n, f, cm, cn)
        restricted.add(tuple(x for row in r for x in row))
    rank = restricted.rank
    return {
        "hom_dim": len(homs),
        "corner_dim": corner_dim,
        "restricted_rank": rank,
        "bijective": len(homs) == corner_dim == rank,
    }


# ---- raw modules and the non-degenerate part ----


@dataclass
class RawModule:
    """A module given by generator action matrices on a free module of the
    stated rank; the trivial-path images must be pairwise orthogonal
    idempotents, and each edge matrix must be sandwiched between its target
    and source projections. Verified eagerly."""

    quiver: Quiver
    ring: Ring
    rank: int
    vertex_actions: dict[str, tuple]
    edge_actions: dict[str, tuple]

    def __post_init__(self):
        q, ring, r = self.quiver, self.ring, self.rank
        self.vertex_actions = {
            v: mat_canon(ring, self.vertex_actions.get(v, zero_matrix(ring, r, r)))
            for v in q.vertices
        }
        self.edge_actions = {
            eid: mat_canon(ring, self.edge_actions.get(eid, zero_matrix(ring, r, r)))
            for eid, _, _ in q.edges
        }
        for v, E in self.vertex_actions.items():
            if len(E) != r or any(len(row) != r for row in E):
                raise RepError(f"vertex action at {v!r} has wrong shape")
            if mat_mul(ring, E, E) != E:
                raise RepError(f"vertex action at {v!r} is not idempotent")
        verts = list(q.vertices)
        for i, v in enumerate(verts):
            for w in verts[i + 1 :]:
                Ev, Ew = self.vertex_actions[v], self.vertex_actions[w]
                if mat_mul(ring, Ev, Ew) != zero_matrix(ring, r, r) or mat_mul(
                    ring, Ew, Ev
                ) != zero_matrix(ring, r, r):
                    raise RepError(f"vertex actions at {v!r},{w!r} not orthogonal")
        for eid, src, dst in q.edges:
            A = self.edge_actions[eid]
            if len(A) != r or any(len(row) != r for row in A):
                raise RepError(f"edge action {eid!r} has wrong shape")
            sandwich = mat_mul(
                ring,
                self.vertex_actions[dst],
                mat_mul(ring, A, self.vertex_actions[src]),
            )
            if A != sandwich:
                raise RepError(
                    f"edge action {eid!r} is not supported between its endpoints"
                )


def nu(raw: RawModule) -> Representation:
    """The non-degenerate part: the sum of the trivial-path images, graded by
    vertex, with the induced edge maps."""
    ring, q = raw.ring, raw.quiver
    bases: dict[str, FieldRowSpace] = {}
    for v in q.vertices:
        sp = FieldRowSpace(ring, raw.rank)
        E = raw.vertex_actions[v]
        for j in range(raw.rank):
            sp.add(tuple(E[i][j] for i in range(raw.rank)))
        bases[v] = sp
    dims = {v: bases[v].rank for v in q.vertices}
    maps = {}
    for eid, src, dst in q.edges:
        cols = []
        for x in bases[src].basis():
            y = mat_vec(ring, raw.edge_actions[eid], x)
            coords = bases[dst].coords(y)
            if coords is None:
                raise RepError("edge action image escaped the target projection")
            cols.append(coords)
        maps[eid] = tuple(
            tuple(cols[j][i] for j in range(dims[src])) for i in range(dims[dst])
        )
    return Representation(q, ring, dims, maps)


def rep_to_raw(m: Representation) -> RawModule:
    """Re-embed a representation as a raw module on its total space."""
    ring, q = m.ring, m.quiver
    D = m.total_dim
    vert = {}
    for v in q.vertices:
        E = [[ring.zero()] * D for _ in range(D)]
        off = m.offset(v)
        for i in range(m.dims[v]):
            E[off + i][off + i] = ring.one()
        vert[v] = tuple(tuple(r) for r in E)
    edges = {eid: m.path_matrix(Path(edges=(eid,))) for eid, _, _ in q.edges}
    return RawModule(q, ring, D, vert, edges)


# ---- desk-scale categorical checks (acyclic quivers) ----


def left_ideal_representation(e: AlgElem) -> Representation:
    """The cyclic projective A*e as a representation, graded by path targets.
    Finite-dimensional exactly because the quiver is acyclic."""
    q, ring = e.quiver, e.ring
    if not q.is_acyclic:
        raise RepError("A*e is infinite-dimensional on cyclic quivers")
    paths = q.all_paths()
    index = {p: i for i, p in enumerate(paths)}

    def vectorize(x: AlgElem) -> list:
        vec = [ring.zero()] * len(paths)
        for p, c in x.terms:
            vec[index[p]] = c
        return vec

    bases: dict[str, FieldRowSpace] = {
        v: FieldRowSpace(ring, len(paths)) for v in q.vertices
    }
    for p in paths:
        x = path_element(q, ring, p) * e
        if not x.is_zero:
            bases[q.path_target(p)].add(vectorize(x))
    dims = {v: bases[v].rank for v in q.vertices}
    maps = {}
    for eid, src, dst in q.edges:
        a = path_element(q, ring, Path(edges=(eid,)))
        cols = []
        for row in bases[src].basis():
            x = AlgElem.make(
                q, ring, {paths[i]: c for i, c in enumerate(row) if not ring.is_zero(c)}
            )
            coords = bases[dst].coords(vectorize(a * x))
            if coords is None:
                raise RepError("edge action escaped the graded piece of A*e")
            cols.append(coords)
        maps[eid] = tuple(
            tuple(cols[j][i] for j in range(dims[src])) for i in range(dims[dst])
        )
    return Representation(q, ring, dims, maps)


def tensor_identity_holds(m: Representation) -> bool:
    """Whether the multiplication map A (x)_A M -> M is an isomorphism, with A
    the (finite-dimensional) path algebra of an acyclic quiver."""
    q, ring = m.quiver, m.ring
    if not q.is_acyclic:
        raise RepError("tensor identity check requires an acyclic quiver")
    if not ring.is_field:
        raise RepError("tensor identity check requires a field")
    paths = q.all_paths()
    index = {p: i for i, p in enumerate(paths)}
    D = m.total_dim
    ncols = len(paths) * D
    relations = FieldRowSpace(ring, ncols)
    from .quivers import concat

    for x in paths:
        for a in paths:
            xa = concat(q, x, a)
            act = m.path_matrix(a)
            for k in range(D):
                # (x*a) (x) m_k  -  x (x) (a*m_k)
                vec = [ring.zero()] * ncols
                if xa is not None:
                    vec[index[xa] * D + k] = ring.add(
                        vec[index[xa] * D + k], ring.one()
                    )
                col = [act[i][k] for i in range(D)]
                for i, c in enumerate(col):
                    if not ring.is_zero(c):
                        pos = index[x] * D + i
                        vec[pos] = ring.sub(vec[pos], c)
                relations.add(vec)
    return ncols - relations.rank == D
