"""Exception types shared across the package."""


class FinsertError(Exception):
    """Base class for every error raised by finsert."""


class UniverseMismatch(FinsertError, ValueError):
    """Two objects live on carriers of different sizes."""


class MalformedTopology(FinsertError, ValueError):
    """A topology violates one of its axioms."""

    def __init__(self, axiom: str, detail: str = ""):
        self.axiom = axiom
        self.detail = detail
        msg = f"topology axiom violated: {axiom}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class CapExceeded(FinsertError, ValueError):
    """A search or tabulation would exceed its configured size cap."""


class PreconditionError(FinsertError, ValueError):
    """Inputs do not satisfy an operation's precondition."""
