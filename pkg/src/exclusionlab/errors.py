"""Shared exception types."""


class ExclusionLabError(Exception):
    """Base class for package errors."""


class AlphabetMismatchError(ExclusionLabError):
    """Two symbolic objects over different alphabets were combined."""


class ResourceCapError(ExclusionLabError):
    """A configured resource cap (region count, vertex count) was exceeded."""


class NonConvergenceError(ExclusionLabError):
    """An iteration cap was exhausted before reaching the requested tolerance."""


class NonRecurringOrbitError(ExclusionLabError):
    """No exact recurrence was found within the configured step budget."""


class ConfigError(ExclusionLabError):
    """An analysis config failed validation.

    ``problems`` holds (json_pointer, message) pairs, one per violation.
    """

    def __init__(self, problems: list[tuple[str, str]]) -> None:
        self.problems = problems
        super().__init__("; ".join(f"{p}: {m}" for p, m in problems))
