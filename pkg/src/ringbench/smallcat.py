"""Finite small categories with validated composition tables.

Morphisms are indices 0..q-1 with domain/codomain arrays into the object
range 0..p-1; composition is a q x q partial table with -1 for undefined.
A pair (g, h) is composable exactly when dom(g) == cod(h), in which case the
composite is written g then-after h, i.e. the table entry at [g, h].

HOM-SET CONVENTION.  hom_set(cat, a, b) is the set of morphisms b -> a,
that is, arrows INTO a FROM b.  This is the reversed convention relative to
most software libraries, kept so that the set product
hom_set(a, b) * hom_set(b, c) consists of plain table composites.  A
dedicated regression test pins this orientation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    CompositionDomainMismatch,
    IdentityLawViolation,
    NotAMonoid,
    NotAGroup,
    NotAssociative,
    ShapeMismatch,
)

UNDEFINED = -1


@dataclass(frozen=True, eq=False)
class SmallCategory:
    object_count: int
    dom: tuple[int, ...]
    cod: tuple[int, ...]
    identity: tuple[int, ...]
    compose: np.ndarray  # q x q, entry UNDEFINED when not composable

    @property
    def morphism_count(self) -> int:
        return len(self.dom)

    def is_composable(self, g: int, h: int) -> bool:
        return self.dom[g] == self.cod[h]

    def comp(self, g: int, h: int) -> int:
        r = int(self.compose[g, h])
        if r == UNDEFINED:
            raise ShapeMismatch(f"pair ({g}, {h}) is not composable")
        return r

    def hom_set(self, a: int, b: int) -> tuple[int, ...]:
        """Morphisms b -> a (arrows into a from b); see the module note."""
        return tuple(
            g
            for g in range(self.morphism_count)
            if self.cod[g] == a and self.dom[g] == b
        )

    def endo(self, a: int) -> tuple[int, ...]:
        return self.hom_set(a, a)

    def __repr__(self) -> str:
        return f"SmallCategory({self.object_count} objects, {self.morphism_count} morphisms)"


def hom_set(cat: SmallCategory, a: int, b: int) -> tuple[int, ...]:
    if not (0 <= a < cat.object_count and 0 <= b < cat.object_count):
        raise ShapeMismatch(f"object index out of range: ({a}, {b})")
    return cat.hom_set(a, b)


def make_category(object_count, dom, cod, identity, compose) -> SmallCategory:
    """Validate all category axioms exhaustively and build the category.

    Checks, in order: index ranges and shapes, identity endpoints, table
    definedness against dom/cod, composite endpoints, identity laws, and
    associativity on every defined triple.
    """
    p = int(object_count)
    dom = tuple(int(x) for x in dom)
    cod = tuple(int(x) for x in cod)
    identity = tuple(int(x) for x in identity)
    q = len(dom)
    if p < 1:
        raise ShapeMismatch("a category needs at least one object")
    if len(cod) != q:
        raise ShapeMismatch("dom and cod must have one entry per morphism")
    if len(identity) != p:
        raise ShapeMismatch("identity assignment must have one entry per object")
    if any(not 0 <= x < p for x in dom + cod):
        raise ShapeMismatch("dom/cod entry out of object range")
    if any(not 0 <= x < q for x in identity):
        raise ShapeMismatch("identity entry out of morphism range")
    table = np.asarray(compose, dtype=np.int64)
    if table.shape != (q, q):
        raise ShapeMismatch(f"composition table must be {q} x {q}, got {table.shape}")
    if ((table < UNDEFINED) | (table >= q)).any():
        raise ShapeMismatch("composition entry out of morphism range")

    for a in range(p):
        e = identity[a]
        if dom[e] != a or cod[e] != a:
            raise IdentityLawViolation(
                f"identity morphism of object {a} is not an endomorphism of {a}"
            )

    dom_a = np.asarray(dom)
    cod_a = np.asarray(cod)
    composable = dom_a[:, None] == cod_a[None, :]
    defined = table != UNDEFINED
    over = defined & ~composable
    if over.any():
        g, h = (int(x) for x in np.argwhere(over)[0])
        raise CompositionDomainMismatch(g, h, "overdefined")
    under = composable & ~defined
    if under.any():
        g, h = (int(x) for x in np.argwhere(under)[0])
        raise CompositionDomainMismatch(g, h, "underdefined")

    gs, hs = np.nonzero(composable)
    comps = table[gs, hs]
    bad = (dom_a[comps] != dom_a[hs]) | (cod_a[comps] != cod_a[gs])
    if bad.any():
        idx = int(np.flatnonzero(bad)[0])
        raise CompositionDomainMismatch(int(gs[idx]), int(hs[idx]), "endpoints")

    for a in range(p):
        e = identity[a]
        for h in range(q):
            if cod[h] == a and int(table[e, h]) != h:
                raise IdentityLawViolation(
                    f"identity of object {a} fails the left law on morphism {h}"
                )
            if dom[h] == a and int(table[h, e]) != h:
                raise IdentityLawViolation(
                    f"identity of object {a} fails the right law on morphism {h}"
                )

    if q:
        # left[g, h, k] = (g h) k and right[g, h, k] = g (h k), masked to
        # triples where both inner pairs are composable; the outer pairs are
        # then composable automatically
        mask = composable[:, :, None] & composable[None, :, :]
        safe = np.where(table == UNDEFINED, 0, table)
        left = safe[safe]
        right = safe[:, safe]
        bad = mask & (left != right)
        if bad.any():
            g, h, k = (int(x) for x in np.argwhere(bad)[0])
            raise NotAssociative((g, h, k))

    return SmallCategory(p, dom, cod, identity, table)


# ---------------------------------------------------------------------------
# groupoid and hom-set checks


@dataclass(frozen=True)
class GroupoidCheck:
    is_groupoid: bool
    inverses: tuple[int, ...] | None
    witness: int | None  # a morphism with no two-sided inverse


def is_groupoid(cat: SmallCategory) -> GroupoidCheck:
    """Every morphism must have a two-sided inverse against the identities
    at its endpoints; returns the inverse table when they all do."""
    inv = []
    for g in range(cat.morphism_count):
        target_l = cat.identity[cat.cod[g]]
        target_r = cat.identity[cat.dom[g]]
        found = None
        for h in range(cat.morphism_count):
            if (
                cat.dom[h] == cat.cod[g]
                and cat.cod[h] == cat.dom[g]
                and int(cat.compose[g, h]) == target_l
                and int(cat.compose[h, g]) == target_r
            ):
                found = h
                break
        if found is None:
            return GroupoidCheck(False, None, g)
        inv.append(found)
    return GroupoidCheck(True, tuple(inv), None)


@dataclass(frozen=True)
class HomSetStrongReport:
    """Independent verdicts for the three equivalent hom-set strength
    conditions, with smallest lexicographic object witnesses on failure."""

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


def _hom_table(cat: SmallCategory) -> list[list[frozenset[int]]]:
    p = cat.object_count
    table = [[set() for _ in range(p)] for _ in range(p)]
    for g in range(cat.morphism_count):
        table[cat.cod[g]][cat.dom[g]].add(g)
    return [[frozenset(s) for s in row] for row in table]


def _set_product(cat: SmallCategory, A: frozenset[int], B: frozenset[int]) -> frozenset[int]:
    return frozenset(int(cat.compose[g, h]) for g in A for h in B)


def homset_strong_report(cat: SmallCategory) -> HomSetStrongReport:
    hs = _hom_table(cat)
    p = cat.object_count

    c1, w1 = True, None
    for a in range(p):
        for b in range(p):
            for c in range(p):
                sab, sbc, sac = hs[a][b], hs[b][c], hs[a][c]
                filled = [bool(sab), bool(sbc), bool(sac)]
                if sum(filled) < 2:
                    continue
                if sum(filled) == 2:
                    c1, w1 = False, ((a, b, c), "third hom-set is empty")
                    break
                if _set_product(cat, sab, sbc) != sac:
                    c1, w1 = False, ((a, b, c), "composite set misses morphisms")
                    break
            if not c1:
                break
        if not c1:
            break

    c2, w2 = True, None
    for x in range(p):
        for y in range(p):
            sxy, syx = hs[x][y], hs[y][x]
            if not sxy and not syx:
                continue
            if not sxy or not syx:
                c2, w2 = False, ((x, y), "opposed hom-set is empty")
                break
            if _set_product(cat, sxy, syx) != hs[x][x]:
                c2, w2 = False, ((x, y), "endo set not recovered")
                break
        if not c2:
            break

    c3, w3 = True, None
    for x in range(p):
        for y in range(p):
            sxy, syx = hs[x][y], hs[y][x]
            if not sxy and not syx:
                continue
            if not sxy or not syx:
                c3, w3 = False, ((x, y), "opposed hom-set is empty")
                break
            if cat.identity[x] not in _set_product(cat, sxy, syx):
                c3, w3 = False, ((x, y), "identity not reached")
                break
        if not c3:
            break

    return HomSetStrongReport(c1, c2, c3, w1, w2, w3)


# ---------------------------------------------------------------------------
# the monoid-times-square construction


def _check_monoid(table: np.ndarray) -> int:
    """Validate an associative table with two-sided identity; returns the
    identity index."""
    k = table.shape[0]
    if table.shape != (k, k) or ((table < 0) | (table >= k)).any():
        raise NotAMonoid("table is not a square table over its own index range")
    left = table[table]
    right = table[:, table]
    bad = left != right
    if bad.any():
        i, j, l = (int(x) for x in np.argwhere(bad)[0])
        raise NotAMonoid(f"table is not associative at triple ({i}, {j}, {l})")
    for e in range(k):
        if all(int(table[e, x]) == x == int(table[x, e]) for x in range(k)):
            return e
    raise NotAMonoid("table has no two-sided identity")


def build_MX(monoid_table, set_size: int) -> SmallCategory:
    """Category with objects 0..s-1 and morphisms all triples (m, x, y),
    read as arrows y -> x, composing by (m, x, y)(n, y, z) = (m n, x, z).

    Hom-set strong for every monoid input; a groupoid exactly when the
    monoid table is a group table.
    """
    table = np.asarray(monoid_table, dtype=np.int64)
    if table.ndim != 2:
        raise NotAMonoid("table must be two-dimensional")
    e = _check_monoid(table)
    s = int(set_size)
    if s < 1:
        raise ShapeMismatch("set size must be >= 1")
    k = table.shape[0]

    triples = [(m, x, y) for m in range(k) for x in range(s) for y in range(s)]
    index = {t: i for i, t in enumerate(triples)}
    dom = [y for (_, _, y) in triples]
    cod = [x for (_, x, _) in triples]
    identity = [index[(e, x, x)] for x in range(s)]
    q = len(triples)
    compose = np.full((q, q), UNDEFINED, dtype=np.int64)
    for gi, (m, x, y) in enumerate(triples):
        for hi, (n, y2, z) in enumerate(triples):
            if y == y2:
                compose[gi, hi] = index[(int(table[m, n]), x, z)]
    return make_category(s, dom, cod, identity, compose)


# ---------------------------------------------------------------------------
# finiteness bookkeeping and group predicates


@dataclass(frozen=True)
class FinitenessReport:
    """Both sides of the finiteness criterion, as data: total morphism and
    object counts against the per-object endomorphism monoid sizes.  When the
    category is hom-set strong, every nonempty hom-set injects into the endo
    monoid at its codomain; bound_satisfied records that check (None when the
    category is not hom-set strong and the bound is not asserted)."""

    morphism_count: int
    object_count: int
    endo_sizes: tuple[int, ...]
    homset_strong: bool
    bound_satisfied: bool | None


def finiteness_report(cat: SmallCategory) -> FinitenessReport:
    hs = _hom_table(cat)
    endo_sizes = tuple(len(hs[a][a]) for a in range(cat.object_count))
    strong = homset_strong_report(cat).strong
    bound: bool | None = None
    if strong:
        bound = True
        for c in range(cat.object_count):
            for d in range(cat.object_count):
                if hs[c][d] and len(hs[c][d]) > len(hs[c][c]):
                    bound = False
    return FinitenessReport(
        cat.morphism_count, cat.object_count, endo_sizes, strong, bound
    )


@dataclass(frozen=True)
class GroupPredicates:
    """Group-only predicates in their finite collapse: a finite group is
    torsion-free exactly when trivial, and every finite group trivially has a
    finite subnormal series, so polycyclic-by-finite always holds."""

    object_index: int
    is_group: bool
    endo_size: int

    def _require_group(self) -> None:
        if not self.is_group:
            raise NotAGroup(
                f"endomorphism monoid of object {self.object_index} is not a group"
            )

    @property
    def torsion_free(self) -> bool:
        self._require_group()
        return self.endo_size == 1

    @property
    def polycyclic_by_finite(self) -> bool:
        self._require_group()
        return True


def group_predicates(cat: SmallCategory, a: int) -> GroupPredicates:
    if not 0 <= a < cat.object_count:
        raise ShapeMismatch(f"object index {a} out of range")
    endo = cat.endo(a)
    e = cat.identity[a]
    group = True
    for g in endo:
        if not any(
            int(cat.compose[g, h]) == e and int(cat.compose[h, g]) == e for h in endo
        ):
            group = False
            break
    return GroupPredicates(a, group, len(endo))
