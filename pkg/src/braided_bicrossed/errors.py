"""Exception hierarchy.

Every error carries an optional ``witness`` tuple naming the offending
element(s), so callers can print a one-line diagnostic.
"""

from __future__ import annotations


class AlgebraError(Exception):
    """Base class for all validation and construction failures."""

    def __init__(self, message: str, witness: tuple | None = None):
        super().__init__(message)
        self.witness = witness


# groups and scalars
class NotAssociative(AlgebraError):
    pass


class NoIdentity(AlgebraError):
    pass


class NotInvertible(AlgebraError):
    pass


class ConductorMismatch(AlgebraError):
    pass


class NotDivisible(AlgebraError):
    pass


# matched pairs
class NotRightAction(AlgebraError):
    pass


class NotLeftAction(AlgebraError):
    pass


class Comp1Fails(AlgebraError):
    pass


class Comp2Fails(AlgebraError):
    pass


class NotSubgroup(AlgebraError):
    pass


class NotExactFactorization(AlgebraError):
    pass


class NotComposable(AlgebraError):
    pass


# cocycles and structures
class CocycleFails(AlgebraError):
    pass


class NormalizationFails(AlgebraError):
    pass


class ParentMismatch(AlgebraError):
    pass


class BidegreeUnsupported(AlgebraError):
    pass


# realizations
class ConditionFails(AlgebraError):
    pass


class CharacterIllDefined(AlgebraError):
    pass


class NotSemidirect(AlgebraError):
    pass


class GammaConditionFails(AlgebraError):
    pass


# example families
class BadParameters(AlgebraError):
    pass


class NoOrderQUnit(AlgebraError):
    pass


class SchemaError(AlgebraError):
    """Malformed JSON input."""
