"""Exception hierarchy shared by every module and mapped to CLI exit codes."""


class FuncDegError(Exception):
    """Base class for all library errors."""


class InvalidInput(FuncDegError, ValueError):
    """Malformed or out-of-range argument (CLI exit status 1)."""


class GroupMismatch(InvalidInput):
    """Operands live in different groups."""


class Unsupported(FuncDegError):
    """Operation needs a finite group (or cyclic codomain) and did not get one."""


class NoRepresentation(FuncDegError):
    """The table has infinite degree, so no periodic polyfract represents it."""


class InternalInconsistency(FuncDegError, RuntimeError):
    """Two independent computations disagreed (CLI exit status 2)."""
