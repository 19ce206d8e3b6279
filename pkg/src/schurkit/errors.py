"""Exception types shared across schurkit."""


class SchurKitError(Exception):
    pass


class ValidationError(SchurKitError, ValueError):
    """Malformed input: bad partition text, inconsistent sizes, illegal shapes."""


class ResourceLimitError(SchurKitError):
    """A configured size bound (table degree, cache, truncation) was exceeded."""


class IntegrityError(SchurKitError):
    """An internal consistency check failed, e.g. a differential squares to nonzero."""
