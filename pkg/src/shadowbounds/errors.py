"""Exception types shared across the package."""


class DomainError(ValueError):
    """Parameters outside the range where a formula is defined."""


class NoNegativeEntryError(DomainError):
    """No eigenspace index has q_j(d-1) < 0, so M_{v,d} is undefined."""


class ParseError(ValueError):
    """Malformed generator-matrix text."""


class EnumerationGuardError(DomainError):
    """Code length exceeds the exhaustive-enumeration guard."""
