"""Exception hierarchy shared by all modules."""


class SkewSpanError(Exception):
    """Base class for every error raised by this package."""


class DomainMismatch(SkewSpanError):
    """Function boundaries do not line up (composition, pullback)."""


class CapExceeded(SkewSpanError):
    """An enumeration would exceed its configured size cap."""


class BoundaryMismatch(SkewSpanError):
    """Span or 2-cell boundaries do not line up."""


class InvalidTwoCell(SkewSpanError):
    """A 2-cell's apex map does not commute with the span legs."""


class NotStructurallyIsomorphic(SkewSpanError):
    """No canonical structural isomorphism between the given spans."""


class UnknownObject(SkewSpanError):
    """An object is not in the category it was looked up in."""


class UnknownArrow(SkewSpanError):
    """An arrow is not in the category it was looked up in."""


class DepthTooSmall(SkewSpanError):
    """A simplicial operation needs more truncation depth than available."""


class NotWellFormed(SkewSpanError):
    """Axiom checking was attempted on ill-formed monoidale data."""


class AxiomsFail(SkewSpanError):
    """An operation requires a fully verified monoidale."""


class ConditionsFail(SkewSpanError):
    """An operation requires a functor structure passing all conditions."""


class MonoidLawsFail(SkewSpanError):
    """The given multiplication table is not a monoid."""


class InvalidCategory(SkewSpanError):
    """The given tables do not form a category."""


class NotAMonoidMorphism(SkewSpanError):
    """The given map does not preserve multiplication and unit."""


class ParseError(SkewSpanError):
    """An instance file is not syntactically valid."""


class ResolutionError(SkewSpanError):
    """An instance file references names or elements that do not resolve."""
