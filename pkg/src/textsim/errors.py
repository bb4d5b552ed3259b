"""Shared exception types, mapped to CLI exit codes by the front end."""

from __future__ import annotations


class MissingAssetError(FileNotFoundError):
    """A referenced asset file (taxonomy, embeddings, dataset, ...) does not exist."""


class DataFormatError(ValueError):
    """A data file exists but its contents violate the expected format.

    Carries the offending path and 1-based line number when known.
    """

    def __init__(self, message: str, path: str | None = None, line: int | None = None):
        self.path = path
        self.line = line
        prefix = ""
        if path is not None:
            prefix = f"{path}:"
            if line is not None:
                prefix += f"{line}:"
            prefix += " "
        super().__init__(prefix + message)


class ConfigError(ValueError):
    """A benchmark config file could not be parsed or validated."""

    def __init__(self, message: str, path: str | None = None, line: int | None = None):
        self.path = path
        self.line = line
        prefix = ""
        if path is not None:
            prefix = f"{path}:"
            if line is not None:
                prefix += f"{line}:"
            prefix += " "
        super().__init__(prefix + message)


class ConvergenceError(RuntimeError):
    """An iterative computation failed to reach its tolerance within max_iter."""
