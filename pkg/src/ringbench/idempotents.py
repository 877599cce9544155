"""Complete sets of idempotents, their component tables, and strength checks.

A complete set of idempotents for S is a family of nonzero orthogonal
idempotents e_0, ..., e_{k-1} whose one-sided multiples decompose S on both
sides: S = (+)_i S e_i = (+)_i e_i S.  The k x k component table has entry
(i, j) = e_i S e_j; diagonal entries are unital corner rings with unit e_i.

A complete set is *strong* when the mixed components interlock: whenever one
of e_i S e_j, e_j S e_i is nonzero, so is the other, and their product
recovers the diagonal.  Three equivalent formulations of this condition are
evaluated independently and literally, so their agreement is itself a
checkable fact on every instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import posets
from .errors import (
    NotComplete,
    NotIdempotent,
    NotOrthogonal,
    NotStrong,
    RingMismatch,
    ZeroComponent,
    ZeroIdempotent,
)
from .finring import (
    AdditiveSubgroup,
    CornerRing,
    FiniteRing,
    RingElement,
    corner_ring,
    enumerate_one_sided_ideals,
    product_subgroup,
)


@dataclass(frozen=True)
class ValidationRecord:
    """Audit trail of the axioms a validated set passed."""

    nonzero: bool
    idempotent: bool
    orthogonal: bool
    complete_left: bool
    complete_right: bool


@dataclass(frozen=True, eq=False)
class IdempotentSet:
    ring: FiniteRing
    elements: tuple[RingElement, ...]
    validation: ValidationRecord

    @property
    def size(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"IdempotentSet(size {self.size} in {self.ring!r})"


def _one_sided_multiples(ring: FiniteRing, e: RingElement, side: str) -> AdditiveSubgroup:
    if side == "left":  # S e
        return ring.span(ring.right_mul_matrix(e.vec))
    return ring.span(ring.left_mul_matrix(e.vec))  # e S


def validate_complete_set(
    ring: FiniteRing, candidates: Sequence[RingElement]
) -> IdempotentSet:
    """Check the complete-set axioms and return the validated set.

    Axioms are checked in order (nonzero, idempotent, orthogonal, complete
    on each side) and the first failure raises with the smallest
    lexicographic witness.
    """
    elems = tuple(candidates)
    for e in elems:
        if e.ring is not ring:
            raise RingMismatch("candidate bound to a different ring")
    for i, e in enumerate(elems):
        if e.is_zero():
            raise ZeroIdempotent(i)
    for i, e in enumerate(elems):
        if e * e != e:
            raise NotIdempotent(i)
    for i in range(len(elems)):
        for j in range(len(elems)):
            if i != j and not (elems[i] * elems[j]).is_zero():
                raise NotOrthogonal(i, j)
    for side in ("left", "right"):
        parts = [_one_sided_multiples(ring, e, side) for e in elems]
        total = ring.zero_subgroup()
        prod = 1
        for p in parts:
            total = total.join(p)
            prod *= p.order
        if prod != ring.order or total != ring.full_subgroup():
            raise NotComplete(side, defect=total)
    record = ValidationRecord(True, True, True, True, True)
    return IdempotentSet(ring, elems, record)


# ---------------------------------------------------------------------------
# component tables


def _components(iset: IdempotentSet) -> list[list[AdditiveSubgroup]]:
    ring = iset.ring
    k = iset.size
    lefts = [ring.left_mul_matrix(e.vec) for e in iset.elements]
    rights = [ring.right_mul_matrix(e.vec) for e in iset.elements]
    table = []
    for i in range(k):
        row = []
        for j in range(k):
            # row l of lefts[i] is e_i * b_l; right-multiplying by e_j is a
            # matrix product against rights[j]
            mat = (lefts[i] @ rights[j]) % ring.modulus
            row.append(ring.span(mat))
        table.append(row)
    return table


@dataclass(frozen=True, eq=False)
class PeirceTable:
    """All k^2 components e_i S e_j plus the diagonal corner rings."""

    ring: FiniteRing
    iset: IdempotentSet
    components: tuple[tuple[AdditiveSubgroup, ...], ...]
    corners: tuple[CornerRing, ...]

    @property
    def size(self) -> int:
        return self.iset.size

    def component(self, i: int, j: int) -> AdditiveSubgroup:
        return self.components[i][j]


def peirce_table(iset: IdempotentSet) -> PeirceTable:
    """Compute every component e_i S e_j and package the diagonal corners.

    The component orders must multiply to |S| (the two-sided decomposition
    refines both one-sided ones); this is re-verified on every call.
    """
    ring = iset.ring
    table = _components(iset)
    total = ring.zero_subgroup()
    prod = 1
    for row in table:
        for sub in row:
            total = total.join(sub)
            prod *= sub.order
    assert prod == ring.order and total == ring.full_subgroup(), (
        "component table does not decompose the ring"
    )
    corners = tuple(corner_ring(ring, e) for e in iset.elements)
    return PeirceTable(
        ring,
        iset,
        tuple(tuple(row) for row in table),
        corners,
    )


# ---------------------------------------------------------------------------
# strength conditions


@dataclass(frozen=True)
class StrongnessReport:
    """Independent verdicts for the three equivalent strength conditions.

    A false verdict carries the smallest lexicographic witness: the failing
    index tuple plus a short reason.  ``agree`` records whether the three
    verdicts coincide; their equivalence is re-checked on every instance
    rather than assumed.
    """

    condition1: bool
    condition2: bool
    condition3: bool
    witness1: tuple | None
    witness2: tuple | None
    witness3: tuple | None

    @property
    def agree(self) -> bool:
        return self.condition1 == self.condition2 == self.condition3

    @property
    def strong(self) -> bool:
        return self.condition1 and self.condition2 and self.condition3


def _condition1(table: Sequence[Sequence[AdditiveSubgroup]]) -> tuple[bool, tuple | None]:
    k = len(table)
    for i in range(k):
        for j in range(k):
            for l in range(k):
                sij, sjl, sil = table[i][j], table[j][l], table[i][l]
                nonzero = [not sij.is_zero(), not sjl.is_zero(), not sil.is_zero()]
                if sum(nonzero) < 2:
                    continue
                if sum(nonzero) == 2:
                    return False, ((i, j, l), "third component is zero")
                if product_subgroup(sij, sjl) != sil:
                    return False, ((i, j, l), "product does not recover the component")
    return True, None


def _condition2(table) -> tuple[bool, tuple | None]:
    k = len(table)
    for p in range(k):
        for q in range(k):
            spq, sqp = table[p][q], table[q][p]
            if spq.is_zero() and sqp.is_zero():
                continue
            if spq.is_zero() or sqp.is_zero():
                return False, ((p, q), "opposed component is zero")
            if product_subgroup(spq, sqp) != table[p][p]:
                return False, ((p, q), "product does not recover the diagonal")
    return True, None


def _condition3(table, elems) -> tuple[bool, tuple | None]:
    k = len(table)
    for p in range(k):
        for q in range(k):
            spq, sqp = table[p][q], table[q][p]
            if spq.is_zero() and sqp.is_zero():
                continue
            if spq.is_zero() or sqp.is_zero():
                return False, ((p, q), "opposed component is zero")
            if not product_subgroup(spq, sqp).contains(elems[p]):
                return False, ((p, q), "idempotent not reached by the product")
    return True, None


def strong_condition_report(table: PeirceTable) -> StrongnessReport:
    """Evaluate the three strength conditions independently and literally.

    Condition 1 quantifies over all ordered index triples including repeats;
    the degenerate triple (i, i, i) amounts to S_i S_i = S_i.
    """
    comps = table.components
    elems = table.iset.elements
    c1, w1 = _condition1(comps)
    c2, w2 = _condition2(comps)
    c3, w3 = _condition3(comps, elems)
    return StrongnessReport(c1, c2, c3, w1, w2, w3)


def is_strong(iset: IdempotentSet) -> bool:
    """Condition-3 verdict (the cheapest of the equivalent formulations)."""
    table = _components(iset)
    verdict, _ = _condition3(table, iset.elements)
    return verdict


# ---------------------------------------------------------------------------
# corner/ideal poset correspondence


@dataclass(frozen=True, eq=False)
class CornerLatticeCertificate:
    """Certificate for the poset isomorphism between corner ideals and
    component submodules.

    For side=left and indices (i, j): the poset of left ideals of the corner
    ring at e_i against the poset of left S_j-submodules of e_j S e_i, with
    the maps  ideal I -> e_j S I  and  submodule M -> e_i S M.  For
    side=right the mirror image is used: right ideals of the corner at e_i
    against right S_j-submodules of e_i S e_j, with I -> I S e_j and
    M -> M S e_i.
    """

    side: str
    i: int
    j: int
    ideal_count: int
    submodule_count: int
    ideal_height: int
    submodule_height: int
    forward_then_back_identity: bool
    back_then_forward_identity: bool
    forward_monotone: bool
    back_monotone: bool
    pairs: tuple[tuple[int, int], ...]
    failure: str | None

    @property
    def ok(self) -> bool:
        return self.failure is None and (
            self.forward_then_back_identity
            and self.back_then_forward_identity
            and self.forward_monotone
            and self.back_monotone
            and self.ideal_count == self.submodule_count
            and self.ideal_height == self.submodule_height
        )


def _submodules(
    ring: FiniteRing,
    acting: AdditiveSubgroup,
    ambient: AdditiveSubgroup,
    side: str,
    cap: int,
) -> list[AdditiveSubgroup]:
    """All subgroups M of ``ambient`` with acting*M (or M*acting) inside M,
    via principal submodules closed under joins."""
    found: dict[tuple, AdditiveSubgroup] = {}
    for x in ambient.element_vectors():
        if side == "left":
            rows = [x] + [ring.mul_vec(w, x) for w in acting.basis]
        else:
            rows = [x] + [ring.mul_vec(x, w) for w in acting.basis]
        sub = ring.span(rows)
        found.setdefault(sub.key, sub)
    frontier = sorted(found.values(), key=lambda s: s.key)
    while frontier:
        fresh = []
        existing = sorted(found.values(), key=lambda s: s.key)
        for a in existing:
            for b in frontier:
                jn = a.join(b)
                if jn.key not in found:
                    found[jn.key] = jn
                    fresh.append(jn)
                    if len(found) > cap:
                        from .errors import LatticeTooLarge

                        raise LatticeTooLarge(cap)
        frontier = fresh
    return sorted(found.values(), key=lambda s: (s.order, s.key))


def _poset_height(subs: list[AdditiveSubgroup]) -> int:
    lt = posets.strict_order_matrix(
        len(subs), lambda a, b: subs[a].order < subs[b].order and subs[a] <= subs[b]
    )
    return posets.longest_chain_length(lt)


def corner_lattice_correspondence(
    table: PeirceTable, i: int, j: int, side: str, cap: int = 100_000
) -> CornerLatticeCertificate:
    """Materialize both posets and certify the inclusion-preserving bijection.

    Requires a strong set (NotStrong otherwise) and a nonzero mixed component
    e_i S e_j (ZeroComponent otherwise).  Verdict failures are recorded in
    the certificate, never raised.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    verdict, _ = _condition3(table.components, table.iset.elements)
    if not verdict:
        raise NotStrong("the idempotent set is not strong")
    if table.components[i][j].is_zero():
        raise ZeroComponent(f"component ({i}, {j}) is zero")

    ring = table.ring
    corner = table.corners[i]
    lattice = enumerate_one_sided_ideals(corner.ring, side, cap)

    def corner_to_parent(sub: AdditiveSubgroup) -> AdditiveSubgroup:
        if corner.ring.rank == 0:
            return ring.zero_subgroup()
        rows = (sub.basis @ corner.inclusion) % ring.modulus
        return ring.span(rows)

    ideals = [corner_to_parent(ideal.subgroup) for ideal in lattice.ideals]

    e_i = table.iset.elements[i]
    e_j = table.iset.elements[j]
    if side == "left":
        ambient = table.components[j][i]  # e_j S e_i
        acting = table.components[j][j]
        ej_s = ring.left_mul_matrix(e_j.vec)  # rows e_j * b_l
        ei_s = ring.left_mul_matrix(e_i.vec)

        def forward(sub: AdditiveSubgroup) -> AdditiveSubgroup:
            rows = [ring.mul_vec(r, v) for r in ej_s for v in sub.basis]
            return ring.span(rows)

        def back(sub: AdditiveSubgroup) -> AdditiveSubgroup:
            rows = [ring.mul_vec(r, v) for r in ei_s for v in sub.basis]
            return ring.span(rows)

    else:
        ambient = table.components[i][j]  # e_i S e_j
        acting = table.components[j][j]
        s_ej = ring.right_mul_matrix(e_j.vec)  # rows b_l * e_j
        s_ei = ring.right_mul_matrix(e_i.vec)

        def forward(sub: AdditiveSubgroup) -> AdditiveSubgroup:
            rows = [ring.mul_vec(v, r) for v in sub.basis for r in s_ej]
            return ring.span(rows)

        def back(sub: AdditiveSubgroup) -> AdditiveSubgroup:
            rows = [ring.mul_vec(v, r) for v in sub.basis for r in s_ei]
            return ring.span(rows)

    submodules = _submodules(ring, acting, ambient, side, cap)
    sub_index = {s.key: idx for idx, s in enumerate(submodules)}

    pairs = []
    failure = None
    fwd_back = True
    back_fwd = True
    for idx, ideal in enumerate(ideals):
        image = forward(ideal)
        if image.key not in sub_index:
            failure = f"image of ideal {idx} is not a listed submodule"
            break
        pairs.append((idx, sub_index[image.key]))
        if back(image) != ideal:
            fwd_back = False
    if failure is None:
        ideal_index = {s.key: idx for idx, s in enumerate(ideals)}
        for idx, sub in enumerate(submodules):
            image = back(sub)
            if image.key not in ideal_index:
                failure = f"image of submodule {idx} is not a listed ideal"
                break
            if forward(image) != sub:
                back_fwd = False

    fwd_monotone = True
    back_monotone = True
    if failure is None:
        images = [forward(s) for s in ideals]
        for a in range(len(ideals)):
            for b in range(len(ideals)):
                if a != b and ideals[a] <= ideals[b] and not images[a] <= images[b]:
                    fwd_monotone = False
        back_images = [back(s) for s in submodules]
        for a in range(len(submodules)):
            for b in range(len(submodules)):
                if (
                    a != b
                    and submodules[a] <= submodules[b]
                    and not back_images[a] <= back_images[b]
                ):
                    back_monotone = False

    return CornerLatticeCertificate(
        side=side,
        i=i,
        j=j,
        ideal_count=len(ideals),
        submodule_count=len(submodules),
        ideal_height=lattice.height,
        submodule_height=_poset_height(submodules),
        forward_then_back_identity=fwd_back,
        back_then_forward_identity=back_fwd,
        forward_monotone=fwd_monotone,
        back_monotone=back_monotone,
        pairs=tuple(pairs),
        failure=failure,
    )


# ---------------------------------------------------------------------------
# lattice analytics


@dataclass(frozen=True)
class CornerProfile:
    corner_order: int
    left_size: int
    left_height: int
    right_size: int
    right_height: int


@dataclass(frozen=True, eq=False)
class ChainProfile:
    """Quantitative lattice data for a ring with a complete set of idempotents.

    On finite instances every chain condition holds, so the informative
    content is the lattice sizes and heights plus the strength verdict and
    the component-decomposition consistency flag.
    """

    index_size: int
    strong: bool
    corners: tuple[CornerProfile, ...]
    ring_left_size: int
    ring_left_height: int
    ring_right_size: int
    ring_right_height: int
    decomposition_ok: bool
    consistent: bool


def chain_profile(ring: FiniteRing, iset: IdempotentSet, cap: int = 100_000) -> ChainProfile:
    table = peirce_table(iset)
    report = strong_condition_report(table)
    corners = []
    for c in table.corners:
        left = enumerate_one_sided_ideals(c.ring, "left", cap)
        right = enumerate_one_sided_ideals(c.ring, "right", cap)
        corners.append(
            CornerProfile(c.ring.order, left.size, left.height, right.size, right.height)
        )
    ring_left = enumerate_one_sided_ideals(ring, "left", cap)
    ring_right = enumerate_one_sided_ideals(ring, "right", cap)
    prod = 1
    for row in table.components:
        for sub in row:
            prod *= sub.order
    decomposition_ok = prod == ring.order
    return ChainProfile(
        index_size=iset.size,
        strong=report.strong,
        corners=tuple(corners),
        ring_left_size=ring_left.size,
        ring_left_height=ring_left.height,
        ring_right_size=ring_right.size,
        ring_right_height=ring_right.height,
        decomposition_ok=decomposition_ok,
        consistent=decomposition_ok,
    )
