"""Exception hierarchy.

``ValidationError`` covers malformed inputs (CLI exit code 2);
``DomainError`` covers numerically undefined requests (exit code 3).
"""


class InfometricsError(Exception):
    pass


class ValidationError(InfometricsError, ValueError):
    pass


class DomainError(InfometricsError, ValueError):
    pass


# entropy
class EmptyInput(ValidationError):
    pass


class NegativeProbability(ValidationError):
    pass


class SumOutOfTolerance(ValidationError):
    pass


class LengthMismatch(ValidationError):
    pass


# algorithmic
class SymbolOutOfRange(ValidationError):
    pass


# ca
class WidthTooSmall(ValidationError):
    pass


# grit
class EmptyCategory(ValidationError):
    pass


class NotASubset(ValidationError):
    pass


class NotAMember(ValidationError):
    pass


class TooSmall(ValidationError):
    pass


class ZeroBaseComplexity(DomainError):
    pass


# cogaug
class UnresolvablePsi(ValidationError):
    pass


class ZeroWork(DomainError):
    pass


class NonpositiveTime(DomainError):
    pass


class NonpositiveEnergy(DomainError):
    pass


class LedgerError(InfometricsError):
    """Collects per-step failures; ``failures`` maps step id to the exception."""

    def __init__(self, failures):
        self.failures = dict(failures)
        detail = "; ".join(f"step {sid}: {exc}" for sid, exc in self.failures.items())
        super().__init__(detail)

    @property
    def is_domain(self):
        return all(isinstance(e, DomainError) for e in self.failures.values())
