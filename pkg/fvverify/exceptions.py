class VerificationError(RuntimeError):
    """A computed invariant contradicts the theorem it is meant to confirm."""
