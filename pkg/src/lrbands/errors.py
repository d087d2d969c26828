class LrbError(Exception):
    """Base class for all errors raised by lrbands."""


class InputError(LrbError, ValueError):
    """Malformed input: bad indices, shapes, duplicate faces, parse failures."""


class ClosureError(InputError):
    """A face list is not closed under sign-vector composition."""

    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = witness


class PreconditionError(LrbError):
    """An operation was called on an instance lacking a required property."""


class StructureError(LrbError):
    """A table claimed to be an LRB produced an inconsistent derived structure."""


class CycleOverflowError(LrbError):
    """Simple-cycle enumeration exceeded the configured cap."""
