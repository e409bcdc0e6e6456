"""Exception types shared across the package."""


class EcgroupsError(Exception):
    """Base class for all library errors."""


class MixedFields(EcgroupsError):
    pass


class MixedCurves(EcgroupsError):
    pass


class DivisionByZero(EcgroupsError):
    pass


class ZeroElement(EcgroupsError):
    pass


class BadCharacteristic(EcgroupsError):
    pass


class SingularCurve(EcgroupsError):
    pass


class NotANonresidue(EcgroupsError):
    pass


class TraceZeroWitness(EcgroupsError):
    pass


class IncompleteTwoTorsion(EcgroupsError):
    pass


class DegenerateParameter(EcgroupsError):
    pass


class FieldTooLarge(EcgroupsError):
    pass


class BadForm(EcgroupsError):
    pass


class IndexTooLarge(EcgroupsError):
    pass


class AllPointsSmallOrder(EcgroupsError):
    pass


class NoLargeOrderPoint(EcgroupsError):
    pass


class HasseViolation(EcgroupsError):
    pass


class BoundsViolated(EcgroupsError):
    pass


class MissingPrime(EcgroupsError):
    pass


class BadBeta(EcgroupsError):
    pass


class FactoringFailed(EcgroupsError):
    pass


class NotADivisor(EcgroupsError):
    pass


class AnomalousCurve(EcgroupsError):
    pass


class UnsupportedFamily(EcgroupsError):
    pass


class EncodingFailed(EcgroupsError):
    pass


class NoRepresentation(EcgroupsError):
    pass


class ConstructionTimeout(EcgroupsError):
    pass


class DenominatorVanishes(EcgroupsError):
    pass
