class ConjunctionError(ValueError):
    """Base class for domain errors (the CLI maps these to exit code 1)."""


class DegeneratePairError(ConjunctionError):
    def __init__(self, a, b):
        super().__init__(
            f"degenerate pair: bodies never separate ({a} and {b} share one period)"
        )


class UnitMismatchError(ConjunctionError):
    pass


class UnknownBodyError(ConjunctionError):
    def __init__(self, name, available):
        self.name = name
        self.available = sorted(available)
        super().__init__(
            f"unknown body {name!r}; available: {', '.join(self.available)}"
        )
