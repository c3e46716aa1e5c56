class DomainError(ValueError):
    """An argument is outside the domain of an operation."""


class ParseError(ValueError):
    def __init__(self, message, text, pos):
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos
