"""Exception hierarchy shared by all qdeg modules."""


class QdegError(Exception):
    """Base class for all library errors."""


class ConfigurationError(QdegError):
    """Inadmissible (type, rank) or otherwise unbuildable configuration."""


class DomainError(QdegError):
    """Argument outside the operation's domain (non-root, mismatched systems, ...)."""


class ResourceError(QdegError):
    """An enumeration exceeded its configured cap."""


class VerificationError(QdegError):
    """A scan or stability re-check failed to verify a claimed property."""


class InvariantViolationError(QdegError):
    """Two internal computations of the same quantity disagreed."""
