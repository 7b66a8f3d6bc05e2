"""Shared exception types."""


class CapacityError(Exception):
    """An enumerative operation was asked to exceed its documented bound."""

    def __init__(self, what: str, limit: int, requested: int):
        super().__init__(f"{what}: bound is {limit} atoms, requested {requested}")
        self.what = what
        self.limit = limit
        self.requested = requested


class ParseError(ValueError):
    """A lexical or syntax error in the concrete formula syntax."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.message = message
        self.position = position
