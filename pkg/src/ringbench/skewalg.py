"""Skew category algebras built from functors into unital rings.

A skew category system assigns a unital ring R_a to every object and a
unit-preserving ring isomorphism to every morphism g, acting from the ring
at dom(g) to the ring at cod(g), functorially.  The associated algebra has
basis pairs (g, basis element of R_{cod(g)}) and multiplication

    (r g) * (r' h) = r * map_g(r') * (g h)   when (g, h) is composable,
    0 otherwise.

The algebra is rebuilt through the validated ring constructor, so its
associativity is re-verified on every construction, and its canonical
grading (one free block per morphism) is revalidated as strongly graded and
object unital rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from . import howell
from .errors import (
    IdentityNotIdentity,
    ModulusMismatch,
    NotFunctorial,
    NotRingIso,
    NotUnital,
    ShapeMismatch,
)
from .finring import (
    FiniteRing,
    RingElement,
    _build_ring,
    corner_ring,
    enumerate_one_sided_ideals,
    find_identity,
)
from .graded import (
    Grading,
    attach_grading,
    homset_strongly_graded_report,
    induced_idempotents,
    object_unital_check,
    strongly_graded_check,
)
from .idempotents import is_strong
from .smallcat import SmallCategory, homset_strong_report


@dataclass(frozen=True, eq=False)
class SkewCategorySystem:
    category: SmallCategory
    object_rings: tuple[FiniteRing, ...]
    maps: tuple[np.ndarray, ...]  # per morphism; row-vector action x -> x @ M

    @property
    def modulus(self) -> int:
        return self.object_rings[0].modulus

    def apply(self, g: int, x: np.ndarray) -> np.ndarray:
        return (np.asarray(x) @ self.maps[g]) % self.modulus


def _as_tuple_by_index(data, count: int, what: str):
    if isinstance(data, Mapping):
        missing = [i for i in range(count) if i not in data]
        if missing:
            raise ShapeMismatch(f"{what} missing for indices {missing}")
        return tuple(data[i] for i in range(count))
    out = tuple(data)
    if len(out) != count:
        raise ShapeMismatch(f"expected {count} {what}, got {len(out)}")
    return out


def validate_system(
    category: SmallCategory,
    object_rings: Mapping[int, FiniteRing] | Sequence[FiniteRing],
    morphism_maps: Mapping[int, np.ndarray] | Sequence[np.ndarray],
) -> SkewCategorySystem:
    """Verify every system axiom exhaustively.

    Each map must be an additive bijection (an invertible matrix over Z/m),
    multiplicative on basis pairs, and unit preserving; identity morphisms
    must carry identity maps and compositions must multiply contravariantly
    in the row-vector convention: map_{gh} = map_h @ map_g.
    """
    rings = _as_tuple_by_index(object_rings, category.object_count, "object rings")
    m = rings[0].modulus
    for r in rings[1:]:
        if r.modulus != m:
            raise ModulusMismatch("object rings must share one modulus")
    units: list[RingElement] = []
    for a, r in enumerate(rings):
        u = find_identity(r)
        if u is None:
            raise NotUnital(a)
        units.append(u)

    raw_maps = _as_tuple_by_index(morphism_maps, category.morphism_count, "morphism maps")
    maps: list[np.ndarray] = []
    for g, raw in enumerate(raw_maps):
        src = rings[category.dom[g]]
        dst = rings[category.cod[g]]
        M = np.asarray(raw, dtype=np.int64) % m
        if M.shape != (src.rank, dst.rank):
            raise ShapeMismatch(
                f"map for morphism {g} must be {src.rank} x {dst.rank}, got {M.shape}"
            )
        if src.rank != dst.rank or not np.array_equal(
            howell.howell_form(M, m), np.eye(src.rank, dtype=np.int64)
        ):
            raise NotRingIso(g, "matrix is not invertible over the modulus")
        # multiplicative: image of a basis product equals the product of images
        lhs = np.einsum("stl,lk->stk", src.sc, M) % m
        rhs = np.einsum("si,tj,ijk->stk", M, M, dst.sc) % m
        if (lhs != rhs).any():
            s, t = (int(x) for x in np.argwhere((lhs != rhs).any(axis=2))[0])
            raise NotRingIso(g, "map is not multiplicative", witness=(s, t))
        if ((units[category.dom[g]].vec @ M) % m != units[category.cod[g]].vec).any():
            raise NotRingIso(g, "map does not preserve the unit")
        M.setflags(write=False)
        maps.append(M)

    for a in range(category.object_count):
        e = category.identity[a]
        if not np.array_equal(maps[e], np.eye(rings[a].rank, dtype=np.int64) % m):
            raise IdentityNotIdentity(a)

    for g in range(category.morphism_count):
        for h in range(category.morphism_count):
            if category.is_composable(g, h):
                gh = int(category.compose[g, h])
                if not np.array_equal(maps[gh], (maps[h] @ maps[g]) % m):
                    raise NotFunctorial(g, h)

    return SkewCategorySystem(category, rings, tuple(maps))


@dataclass(frozen=True, eq=False)
class SkewAlgebra:
    """The algebra of a skew category system with its canonical grading.

    ``offsets[g]`` is the first flat basis index of morphism g's block; the
    unit of the block at object a is unit_elements[a] = 1_{R_a} placed in the
    identity morphism's block.
    """

    ring: FiniteRing
    grading: Grading
    system: SkewCategorySystem
    offsets: tuple[int, ...]
    unit_elements: tuple[RingElement, ...]
    strongly_graded: bool
    object_unital: bool

    @property
    def category(self) -> SmallCategory:
        return self.system.category


def build_skew_algebra(system: SkewCategorySystem) -> SkewAlgebra:
    """Assemble structure constants from the defining relations and rebuild
    the algebra through the validated ring constructor.

    Basis order: morphisms in index order, then the codomain ring's basis
    order, so constants are reproducible byte for byte.
    """
    cat = system.category
    rings = system.object_rings
    m = system.modulus

    offsets = []
    total = 0
    labels: list[str] = []
    for g in range(cat.morphism_count):
        offsets.append(total)
        block = rings[cat.cod[g]]
        labels.extend(f"{lab}|m{g}" for lab in block.basis_labels)
        total += block.rank

    sc = np.zeros((total, total, total), dtype=np.int64)
    for g in range(cat.morphism_count):
        rg = rings[cat.cod[g]]
        og = offsets[g]
        for h in range(cat.morphism_count):
            if not cat.is_composable(g, h):
                continue
            rh = rings[cat.cod[h]]
            oh = offsets[h]
            gh = int(cat.compose[g, h])
            # (b_t g)(b_u h) = b_t * map_g(b_u) * (gh); cod(gh) == cod(g), so
            # the product block shares rg's basis
            block = np.einsum("ul,tlw->tuw", system.maps[g], rg.sc) % m
            sc[og : og + rg.rank, oh : oh + rh.rank, offsets[gh] : offsets[gh] + rg.rank] = block
    ring = _build_ring(m, total, sc, labels)

    components = []
    for g in range(cat.morphism_count):
        rows = np.zeros((rings[cat.cod[g]].rank, total), dtype=np.int64)
        for t in range(rings[cat.cod[g]].rank):
            rows[t, offsets[g] + t] = 1
        components.append(ring.span(rows))
    grading = attach_grading(ring, cat, components)

    units = []
    for a in range(cat.object_count):
        e = cat.identity[a]
        u = find_identity(rings[a])
        vec = np.zeros(total, dtype=np.int64)
        vec[offsets[e] : offsets[e] + rings[a].rank] = u.vec
        units.append(ring.element(vec))

    strongly = strongly_graded_check(grading)
    ou = object_unital_check(grading)
    if not strongly or not ou.object_unital:
        raise AssertionError(
            "canonical grading of a validated system failed its strength checks"
        )
    return SkewAlgebra(
        ring, grading, system, tuple(offsets), tuple(units), strongly, ou.object_unital
    )


def build_category_algebra(T: FiniteRing, category: SmallCategory) -> SkewAlgebra:
    """The constant system over one unital ring with identity maps."""
    if find_identity(T) is None:
        raise NotUnital(0)
    eye = np.eye(T.rank, dtype=np.int64)
    system = validate_system(
        category,
        [T] * category.object_count,
        [eye] * category.morphism_count,
    )
    return build_skew_algebra(system)


# ---------------------------------------------------------------------------
# equivalence and chain-condition reports


@dataclass(frozen=True)
class StrongEquivalenceRecord:
    """Both sides of the strength biconditional, computed independently:
    whether the canonical idempotents form a strong set versus whether the
    category is hom-set strong, plus the graded-level report when both hold."""

    idempotents_strong: bool
    category_homset_strong: bool
    graded_report_ok: bool | None

    @property
    def agree(self) -> bool:
        return self.idempotents_strong == self.category_homset_strong


def strong_idempotent_equivalence_check(algebra: SkewAlgebra) -> StrongEquivalenceRecord:
    iset = induced_idempotents(algebra.grading)
    ring_side = is_strong(iset)
    cat_side = homset_strong_report(algebra.category).strong
    graded_ok: bool | None = None
    if ring_side and cat_side:
        report = homset_strongly_graded_report(algebra.grading)
        graded_ok = report.strong and report.agree and report.corner_identity
    return StrongEquivalenceRecord(ring_side, cat_side, graded_ok)


@dataclass(frozen=True)
class ObjectCornerReport:
    object_index: int
    corner_order: int
    matches_endo_component: bool
    left_size: int
    left_height: int
    right_size: int
    right_height: int


@dataclass(frozen=True)
class ArtinianCriteriaReport:
    """Finite-scale chain-condition data for a skew algebra.

    Every party here is finite, so all chain conditions hold; the report's
    substance is the corner-extraction identity (the corner at each object's
    unit equals the endomorphism hom-component) and the lattice statistics.
    """

    object_count: int
    morphism_count: int
    ring_left_size: int
    ring_left_height: int
    ring_right_size: int
    ring_right_height: int
    corners: tuple[ObjectCornerReport, ...]
    corner_extraction_ok: bool
    all_finite: bool


def artinian_criteria_report(algebra: SkewAlgebra, cap: int = 100_000) -> ArtinianCriteriaReport:
    ring = algebra.ring
    cat = algebra.category
    left = enumerate_one_sided_ideals(ring, "left", cap)
    right = enumerate_one_sided_ideals(ring, "right", cap)
    corners = []
    extraction_ok = True
    for a in range(cat.object_count):
        corner = corner_ring(ring, algebra.unit_elements[a])
        matches = corner.subgroup == algebra.grading.endo_component(a)
        extraction_ok = extraction_ok and matches
        cl = enumerate_one_sided_ideals(corner.ring, "left", cap)
        cr = enumerate_one_sided_ideals(corner.ring, "right", cap)
        corners.append(
            ObjectCornerReport(
                a, corner.ring.order, matches, cl.size, cl.height, cr.size, cr.height
            )
        )
    return ArtinianCriteriaReport(
        object_count=cat.object_count,
        morphism_count=cat.morphism_count,
        ring_left_size=left.size,
        ring_left_height=left.height,
        ring_right_size=right.size,
        ring_right_height=right.height,
        corners=tuple(corners),
        corner_extraction_ok=extraction_ok,
        all_finite=True,
    )
