"""Sparse exact arithmetic in the path algebra of a quiver.

Elements are finite maps path -> coefficient; multiplication extends path
concatenation bilinearly, with trivial paths acting as local units.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .linalg import row_space
from .quivers import Path, Quiver, QuiverError, concat
from .rings import Ring


class AlgebraError(ValueError):
    pass


@dataclass(frozen=True)
class AlgElem:
    """An element of the path algebra: canonical sorted sparse term list."""

    quiver: Quiver
    ring: Ring
    terms: tuple[tuple[Path, object], ...]

    @staticmethod
    def make(quiver: Quiver, ring: Ring, terms: Mapping[Path, object]) -> "AlgElem":
        canon = {}
        for p, c in terms.items():
            quiver.check_path(p)
            c = ring.canon(c)
            if not ring.is_zero(c):
                canon[p] = c
        ordered = tuple(sorted(canon.items(), key=lambda pc: pc[0].sort_key()))
        return AlgElem(quiver, ring, ordered)

    @staticmethod
    def zero(quiver: Quiver, ring: Ring) -> "AlgElem":
        return AlgElem(quiver, ring, ())

    def _check_compatible(self, other: "AlgElem") -> None:
        if self.quiver != other.quiver or self.ring != other.ring:
            raise AlgebraError("elements live over different quivers or rings")

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, p: Path):
        for q, c in self.terms:
            if q == p:
                return c
        return self.ring.zero()

    def support(self) -> list[Path]:
        return [p for p, _ in self.terms]

    def __add__(self, other: "AlgElem") -> "AlgElem":
        self._check_compatible(other)
        acc = dict(self.terms)
        for p, c in other.terms:
            acc[p] = self.ring.add(acc.get(p, self.ring.zero()), c)
        return AlgElem.make(self.quiver, self.ring, acc)

    def __neg__(self) -> "AlgElem":
        return AlgElem.make(
            self.quiver, self.ring, {p: self.ring.neg(c) for p, c in self.terms}
        )

    def __sub__(self, other: "AlgElem") -> "AlgElem":
        return self + (-other)

    def scale(self, c) -> "AlgElem":
        c = self.ring.canon(c)
        return AlgElem.make(
            self.quiver, self.ring, {p: self.ring.mul(c, x) for p, x in self.terms}
        )

    def __mul__(self, other: "AlgElem") -> "AlgElem":
        self._check_compatible(other)
        acc: dict[Path, object] = {}
        for p, c in self.terms:
            for q, d in other.terms:
                pq = concat(self.quiver, p, q)
                if pq is None:
                    continue
                cd = self.ring.mul(c, d)
                acc[pq] = self.ring.add(acc.get(pq, self.ring.zero()), cd)
        return AlgElem.make(self.quiver, self.ring, acc)

    def is_idempotent(self) -> bool:
        return self * self == self

    def max_degree(self) -> int:
        return max((len(p) for p, _ in self.terms), default=0)

    # ---- serialization ----

    def to_json(self) -> dict:
        return {
            "terms": [
                {"path": p.to_json(), "coeff": self.ring.fmt(c)} for p, c in self.terms
            ]
        }

    @staticmethod
    def from_json(quiver: Quiver, ring: Ring, obj: dict) -> "AlgElem":
        if not isinstance(obj, dict) or "terms" not in obj:
            raise AlgebraError(f"bad algebra element: {obj!r}")
        acc: dict[Path, object] = {}
        for t in obj["terms"]:
            p = quiver.check_path(Path.from_json(t["path"]))
            c = ring.canon(t["coeff"])
            if p in acc:
                raise AlgebraError(f"duplicate path in element: {t['path']!r}")
            acc[p] = c
        return AlgElem.make(quiver, ring, acc)

    def __str__(self):
        if self.is_zero:
            return "0"
        bits = []
        for p, c in self.terms:
            name = f"e_{p.vertex}" if p.is_trivial else "*".join(reversed(p.edges))
            bits.append(f"{self.ring.fmt(c)}·{name}")
        return " + ".join(bits)


def path_element(quiver: Quiver, ring: Ring, p: Path) -> AlgElem:
    return AlgElem.make(quiver, ring, {quiver.check_path(p): ring.one()})


def edge_element(quiver: Quiver, ring: Ring, eid: str) -> AlgElem:
    if eid not in quiver.edge_by_id:
        raise QuiverError(f"unknown edge {eid!r}")
    return path_element(quiver, ring, Path(edges=(eid,)))


def vertex_idempotent(quiver: Quiver, ring: Ring, vertices: Iterable[str]) -> AlgElem:
    """The idempotent e_S = sum of trivial paths over a vertex subset."""
    s = frozenset(vertices)
    unknown = s - quiver.vertex_set
    if unknown:
        raise QuiverError(f"unknown vertices {sorted(unknown)}")
    return AlgElem.make(quiver, ring, {Path(vertex=v): ring.one() for v in s})


class TruncatedIdeal:
    """Echelonized slice of a two-sided ideal: the span of p*g*q over
    generators g and paths p, q with len(p) + len(q) <= degree.

    Membership queries are sound for elements supported in paths of length
    <= degree (the slice contains every ideal element of that degree)."""

    def __init__(
        self,
        gens: list[AlgElem],
        degree: int,
        max_paths: int = 20000,
    ):
        if degree < 0:
            raise AlgebraError("degree must be nonnegative")
        if not gens:
            raise AlgebraError("need at least one generator")
        quiver, ring = gens[0].quiver, gens[0].ring
        for g in gens:
            gens[0]._check_compatible(g)
        self.quiver, self.ring, self.degree = quiver, ring, degree

        gen_deg = max(g.max_degree() for g in gens)
        paths = quiver.paths_up_to(degree, limit=max_paths)
        # index the coordinate space by all paths that can occur in a sandwich
        coord_paths = quiver.paths_up_to(degree + gen_deg, limit=max_paths)
        self._index = {p: i for i, p in enumerate(coord_paths)}
        self._space = row_space(ring, len(coord_paths))
        for g in gens:
            for p in paths:
                left = path_element(quiver, ring, p)
                pg = left * g
                for q in paths:
                    if len(p) + len(q) > degree:
                        continue
                    elem = pg * path_element(quiver, ring, q)
                    if not elem.is_zero:
                        self._space.add(self._vectorize(elem))

    def _vectorize(self, elem: AlgElem) -> list:
        vec = [self.ring.zero()] * len(self._index)
        for p, c in elem.terms:
            if p not in self._index:
                raise AlgebraError(
                    f"path of length {len(p)} outside the truncation window"
                )
            vec[self._index[p]] = c
        return vec

    def contains(self, elem: AlgElem) -> bool:
        if elem.is_zero:
            return True
        if elem.max_degree() > self.degree:
            raise AlgebraError(
                f"element degree {elem.max_degree()} exceeds truncation {self.degree}"
            )
        return self._space.contains(self._vectorize(elem))


def truncated_two_sided_ideal(
    gens: list[AlgElem], degree: int, max_paths: int = 20000
) -> TruncatedIdeal:
    return TruncatedIdeal(gens, degree, max_paths=max_paths)
