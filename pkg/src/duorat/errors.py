"""Exception hierarchy shared by every duorat module."""


class DuoratError(Exception):
    """Base class for all domain errors raised by duorat."""

    kind = "DuoratError"

    def to_dict(self) -> dict:
        return {"type": self.kind, "message": str(self)}


class NotCoprime(DuoratError, ValueError):
    kind = "NotCoprime"


class RangeTooLarge(DuoratError, ValueError):
    kind = "RangeTooLarge"


class RangeTooSmall(DuoratError, ValueError):
    kind = "RangeTooSmall"


class PreconditionViolated(DuoratError, ValueError):
    kind = "PreconditionViolated"


class PrincipalCharacter(DuoratError, ValueError):
    kind = "PrincipalCharacter"
