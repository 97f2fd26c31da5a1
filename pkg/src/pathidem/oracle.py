"""Brute-force validators: exhaustive enumeration of small representations,
their submodule lattices, and truncated ideal computations, used to
cross-check the structural classifier against the categorical definitions.

Consistency verdicts are evidence within the enumeration budget, not proof;
counterexamples are certificates. The failing constructions behind the
classifier all live at total dimension 2, so the default budgets catch every
disagreement they can produce.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Optional

from .algebra import AlgElem, path_element, truncated_two_sided_ideal, vertex_idempotent
from .classify import standard_form
from .linalg import FieldRowSpace
from .quivers import Path, Quiver
from .reps import Representation, Submodule, gamma, in_category_e, submodule_from_local
from .rings import Ring


class OracleError(ValueError):
    pass


class BudgetExceeded(OracleError):
    pass


@dataclass(frozen=True)
class OracleBudget:
    max_total_dim: int = 3
    max_path_degree: Optional[int] = None  # defaults to |V| at use sites
    max_reps: int = 200_000

    def __post_init__(self):
        if self.max_total_dim < 0 or self.max_reps <= 0:
            raise OracleError("budget bounds must be positive")

    def path_degree(self, q: Quiver) -> int:
        return self.max_path_degree if self.max_path_degree is not None else len(q.vertices)


@dataclass
class Verdict:
    kind: str  # "consistent" | "counterexample" | "exhausted"
    reps_checked: int = 0
    module: Optional[Representation] = None
    submodule: Optional[Submodule] = None

    @property
    def is_consistent(self) -> bool:
        return self.kind == "consistent"

    @property
    def is_counterexample(self) -> bool:
        return self.kind == "counterexample"

    def to_json(self) -> dict:
        if self.kind == "counterexample":
            out = {"verdict": "counterexample", "module": self.module.to_json()}
            if self.submodule is not None:
                out["submodule"] = self.submodule.to_json()
            return out
        return {"verdict": self.kind, "reps_checked": self.reps_checked}


def _dim_vectors(nverts: int, total: int) -> Iterator[tuple[int, ...]]:
    if nverts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _dim_vectors(nverts - 1, total - first):
            yield (first,) + rest


def enumerate_reps(
    q: Quiver, ring: Ring, budget: OracleBudget = OracleBudget()
) -> Iterator[Representation]:
    """All representations with total dimension <= budget, in a deterministic
    order: dimension vectors lexicographically, then matrices in row-major
    counter order over the field elements."""
    if ring.kind != "Fp":
        raise OracleError("representation enumeration requires a prime field")
    elems = list(ring.elements())
    count = 0
    for total in range(budget.max_total_dim + 1):
        for dims_vec in sorted(_dim_vectors(len(q.vertices), total)):
            dims = dict(zip(q.vertices, dims_vec))
            shapes = [
                (eid, dims[dst], dims[src]) for eid, src, dst in q.edges
            ]
            entry_counts = [r * c for _, r, c in shapes]
            for flat in product(elems, repeat=sum(entry_counts)):
                maps = {}
                pos = 0
                for (eid, r, c), k in zip(shapes, entry_counts):
                    chunk = flat[pos : pos + k]
                    pos += k
                    maps[eid] = tuple(
                        tuple(chunk[i * c + j] for j in range(c)) for i in range(r)
                    )
                count += 1
                if count > budget.max_reps:
                    raise BudgetExceeded(
                        f"representation cap {budget.max_reps} exceeded"
                    )
                yield Representation(q, ring, dims, maps)


def _enumerate_subspaces(ring: Ring, dim: int) -> list[tuple[tuple, ...]]:
    """All subspaces of the column space F_p^dim, as echelon-basis tuples."""
    vectors = [tuple(v) for v in product(ring.elements(), repeat=dim)]
    seen = {(): None}
    frontier = [()]
    out = [()]
    while frontier:
        nxt = []
        for basis in frontier:
            for v in vectors:
                sp = FieldRowSpace(ring, dim)
                for b in basis:
                    sp.add(b)
                if not sp.add(v):
                    continue
                key = tuple(sp.basis())
                if key not in seen:
                    seen[key] = None
                    nxt.append(key)
                    out.append(key)
        frontier = nxt
    return out


def enumerate_submodules(m: Representation) -> list[Submodule]:
    """All edge-closed graded subspaces (equivalently, all submodules)."""
    q, ring = m.quiver, m.ring
    if ring.kind != "Fp":
        raise OracleError("submodule enumeration requires a prime field")
    per_vertex = {v: _enumerate_subspaces(ring, m.dims[v]) for v in q.vertices}
    out = []
    for choice in product(*(per_vertex[v] for v in q.vertices)):
        sub = submodule_from_local(
            m,
            {v: list(basis) for v, basis in zip(q.vertices, choice)},
            close=False,
        )
        if sub.is_edge_closed():
            out.append(sub)
    return out


def check_special_by_modules(
    e: AlgElem, q: Quiver, ring: Ring, budget: OracleBudget = OracleBudget()
) -> Verdict:
    """Search for a module M = AeM with a submodule N != AeN: such a pair
    certifies that e is not left special. No counterexample within budget
    means consistency with specialness (evidence, not proof)."""
    if not e.is_idempotent():
        raise OracleError("oracle requires an idempotent element")
    checked = 0
    for m in enumerate_reps(q, ring, budget):
        checked += 1
        if not in_category_e(e, m):
            continue
        for sub in enumerate_submodules(m):
            from .reps import sub_representation

            nrep, _ = sub_representation(sub)
            if not in_category_e(e, nrep):
                return Verdict("counterexample", checked, module=m, submodule=sub)
    return Verdict("consistent", checked)


def _graded_complement_exists(m: Representation, g: Submodule) -> bool:
    """Whether some submodule C satisfies C (+) g = M vertexwise."""
    ring = m.ring
    gdims = g.dims
    for c in enumerate_submodules(m):
        cdims = c.dims
        if any(cdims[v] + gdims[v] != m.dims[v] for v in m.quiver.vertices):
            continue
        ok = True
        for v in m.quiver.vertices:
            sp = FieldRowSpace(ring, m.dims[v])
            for x in g.basis(v):
                sp.add(x)
            for x in c.basis(v):
                if not sp.add(x):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False


def check_split_by_sequences(
    e: AlgElem, q: Quiver, ring: Ring, budget: OracleBudget = OracleBudget()
) -> Verdict:
    """Search for a module M in which the generated submodule AeM has no
    edge-closed complement: such an M certifies that e is not left split."""
    if not e.is_idempotent():
        raise OracleError("oracle requires an idempotent element")
    checked = 0
    for m in enumerate_reps(q, ring, budget):
        checked += 1
        g = gamma(e, m)
        if not _graded_complement_exists(m, g):
            return Verdict("counterexample", checked, module=m, submodule=g)
    return Verdict("consistent", checked)


def split_complements_are_perp(
    e: AlgElem, q: Quiver, ring: Ring, budget: OracleBudget = OracleBudget()
) -> bool:
    """For a split element: every enumerated M decomposes as AeM (+) C with
    e acting by zero on some complement C."""
    for m in enumerate_reps(q, ring, budget):
        g = gamma(e, m)
        found = False
        for c in enumerate_submodules(m):
            cdims, gdims = c.dims, g.dims
            if any(cdims[v] + gdims[v] != m.dims[v] for v in q.vertices):
                continue
            sp_ok = True
            for v in q.vertices:
                sp = FieldRowSpace(ring, m.dims[v])
                for x in g.basis(v):
                    sp.add(x)
                for x in c.basis(v):
                    if not sp.add(x):
                        sp_ok = False
                        break
                if not sp_ok:
                    break
            if not sp_ok:
                continue
            # e must kill the complement
            act = m.action_matrix(e)
            from .linalg import mat_vec

            killed = all(
                all(
                    ring.is_zero(x)
                    for x in mat_vec(ring, act, m.embed(vec, v))
                )
                for v in q.vertices
                for vec in c.basis(v)
            )
            if killed:
                found = True
                break
        if not found:
            return False
    return True


def orthogonality_bruteforce(e1: AlgElem, e2: AlgElem, degree: int) -> bool:
    """Whether e1 * p * e2 == 0 for every path p of length <= degree."""
    if e1.quiver != e2.quiver or e1.ring != e2.ring:
        raise OracleError("elements are incompatible")
    q, ring = e1.quiver, e1.ring
    for p in q.paths_up_to(degree, limit=100_000):
        if not (e1 * path_element(q, ring, p) * e2).is_zero:
            return False
    return True


def fullness_bruteforce(es: list[AlgElem], degree: int) -> bool:
    """Whether every trivial-path idempotent e_v lies in the degree-truncated
    two-sided ideal generated by the family."""
    if not es:
        return False
    q, ring = es[0].quiver, es[0].ring
    ideal = truncated_two_sided_ideal(list(es), degree)
    return all(
        ideal.contains(vertex_idempotent(q, ring, {v})) for v in q.vertices
    )
