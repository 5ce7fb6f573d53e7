"""Exception types shared across the package."""


class EmpError(Exception):
    """Base class for package errors."""


class ConfigError(EmpError):
    """A configuration value is missing, malformed, or inconsistent."""


class DataError(EmpError):
    """An input file or dataset is missing or structurally invalid."""


class FilterError(ConfigError):
    """A filtering function cannot be evaluated on the given graph."""


class ComplexError(EmpError):
    """A filtered complex violates a structural invariant (e.g. grading)."""
