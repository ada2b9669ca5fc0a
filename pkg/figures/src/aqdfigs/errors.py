class AqdfigsError(Exception):
    """Base error for the figure renderer."""


class MissingInputError(AqdfigsError):
    """A required CSV file or column is absent."""
