"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input lies outside the mathematical domain of an operation."""


class RatioOutOfRange(DomainError):
    pass


class DegreeExceeded(DomainError):
    pass


class MalformedMeasure(DomainError):
    pass


class RatioSyntaxError(ValueError):
    def __init__(self, text: str, position: int, reason: str = "unexpected input"):
        self.text = text
        self.position = position
        super().__init__(f"cannot parse {text!r} at position {position}: {reason}")
