"""Exception types shared across the workbench.

Every error raised by a validator carries a concrete, reproducible witness
(indices, coordinate vectors, or a short reason string) so that a failing
check is self-diagnosing.
"""

from __future__ import annotations


class WorkbenchError(Exception):
    """Base class for all workbench errors."""


# ---------------------------------------------------------------------------
# ring construction and arithmetic


class ShapeMismatch(WorkbenchError):
    """Input data has the wrong shape or an index out of range."""


class ModulusTooSmall(WorkbenchError):
    """Coefficient modulus must be at least 2."""


class ModulusMismatch(WorkbenchError):
    """Operands live over different coefficient moduli."""


class NotAssociative(WorkbenchError):
    """Associativity fails; carries the offending triple of indices."""

    def __init__(self, triple: tuple[int, int, int], message: str = ""):
        self.triple = tuple(int(t) for t in triple)
        super().__init__(message or f"associativity fails at triple {self.triple}")


class RingMismatch(WorkbenchError):
    """Elements or subgroups bound to different rings were combined."""


class LatticeTooLarge(WorkbenchError):
    """Ideal enumeration exceeded the working-set cap."""

    def __init__(self, cap: int, message: str = ""):
        self.cap = cap
        super().__init__(message or f"ideal enumeration exceeded cap of {cap}")


class CornerNotFree(WorkbenchError):
    """A corner subgroup is not a free module over any single modulus,
    so it cannot be repackaged as a standalone structure-constant ring."""


# ---------------------------------------------------------------------------
# idempotent sets


class ZeroIdempotent(WorkbenchError):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"candidate idempotent {index} is zero")


class NotIdempotent(WorkbenchError):
    def __init__(self, index: int | None = None, message: str = ""):
        self.index = index
        super().__init__(message or f"element {index} is not idempotent")


class NotOrthogonal(WorkbenchError):
    def __init__(self, i: int, j: int):
        self.pair = (i, j)
        super().__init__(f"idempotents {i} and {j} are not orthogonal")


class NotComplete(WorkbenchError):
    """Completeness fails on one side; carries the defective sum subgroup."""

    def __init__(self, side: str, defect=None, message: str = ""):
        self.side = side
        self.defect = defect
        super().__init__(message or f"idempotent set is not complete on the {side}")


class NotStrong(WorkbenchError):
    """An operation required a strong complete set of idempotents."""


class ZeroComponent(WorkbenchError):
    """The mixed component fixed by the operation's hypothesis is zero."""


# ---------------------------------------------------------------------------
# small categories


class CompositionDomainMismatch(WorkbenchError):
    """Composition table definedness disagrees with domain/codomain data.

    ``kind`` is one of ``overdefined`` (entry present for a non-composable
    pair), ``underdefined`` (entry missing for a composable pair) or
    ``endpoints`` (composite has the wrong domain or codomain).
    """

    def __init__(self, g: int, h: int, kind: str):
        self.pair = (g, h)
        self.kind = kind
        super().__init__(f"composition table {kind} at pair ({g}, {h})")


class IdentityLawViolation(WorkbenchError):
    def __init__(self, message: str):
        super().__init__(message)


class NotAMonoid(WorkbenchError):
    """The supplied multiplication table is not an associative table with a
    two-sided identity; carries a witness."""


class NotAGroup(WorkbenchError):
    """A group-only predicate was requested for a non-group endomorphism
    monoid."""


# ---------------------------------------------------------------------------
# gradings


class NotDirectSum(WorkbenchError):
    """Components do not decompose the ring's additive group."""


class GradingViolation(WorkbenchError):
    """A product of homogeneous elements lands outside the target component."""

    def __init__(self, g: int, h: int, witness=None, message: str = ""):
        self.pair = (g, h)
        self.witness = witness
        super().__init__(message or f"grading violated on morphism pair ({g}, {h})")


class NotObjectUnital(WorkbenchError):
    """The grading is not object unital, so the operation does not apply."""


class CategoryNotHomSetStrong(WorkbenchError):
    """The grading category fails the hom-set strength hypothesis."""


# ---------------------------------------------------------------------------
# skew category systems


class NotUnital(WorkbenchError):
    def __init__(self, obj: int):
        self.object_index = obj
        super().__init__(f"object ring {obj} has no multiplicative unit")


class NotRingIso(WorkbenchError):
    """A morphism map is not a unit-preserving ring isomorphism."""

    def __init__(self, g: int, reason: str, witness=None):
        self.morphism = g
        self.reason = reason
        self.witness = witness
        super().__init__(f"map for morphism {g} is not a ring isomorphism: {reason}")


class NotFunctorial(WorkbenchError):
    def __init__(self, g: int, h: int):
        self.pair = (g, h)
        super().__init__(
            f"maps violate functoriality on composable pair ({g}, {h})"
        )


class IdentityNotIdentity(WorkbenchError):
    def __init__(self, obj: int):
        self.object_index = obj
        super().__init__(f"map for the identity morphism of object {obj} is not the identity")


# ---------------------------------------------------------------------------
# corpus and CLI


class ParameterOutOfRange(WorkbenchError):
    """A recipe parameter falls outside its documented range."""


class UnknownSuite(WorkbenchError):
    def __init__(self, name: str, known):
        self.name = name
        super().__init__(f"unknown suite {name!r}; known suites: {', '.join(sorted(known))}")


class CannotTarget(WorkbenchError):
    """The requested mutation target is vacuous for the given instance."""


class ParseError(WorkbenchError):
    """Malformed input file; carries line and column of the offending token."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})" if line else message)
