"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside an operation's domain."""


class ResourceLimitError(RuntimeError):
    """A configured step or sieve budget ran out before the answer was found."""


class CertificateMismatchError(ValueError):
    """A supplied certificate does not certify what it claims."""


class HypothesisFailedError(ValueError):
    """A stated arithmetic hypothesis was checked and found false."""
