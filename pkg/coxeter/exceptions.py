class CoxeterTypeError(ValueError):
    """Unparseable or unsupported Coxeter type string."""


class GroupTooLargeError(RuntimeError):
    """A brute-force step would enumerate more group elements than allowed."""

    def __init__(self, what, order, limit):
        self.what = what
        self.order = order
        self.limit = limit
        super().__init__(f"{what} needs |W|={order} elements, above the guard of {limit}; pass an override to run it")


class ConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagree."""
