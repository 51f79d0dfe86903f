"""Exception hierarchy shared by the engines and the CLI."""


class SerreWeightsError(Exception):
    """Base class for all errors raised by this package."""


class LengthMismatch(SerreWeightsError, ValueError):
    pass


class ParamMismatch(SerreWeightsError, ValueError):
    pass


class OddNiveau(SerreWeightsError, ValueError):
    pass


class NotASerreWeight(SerreWeightsError, ValueError):
    pass


class ReducibleInduction(SerreWeightsError, ValueError):
    """Raised when an induced representation would be reducible (psi == psi^c)."""


class NonSemisimpleInput(SerreWeightsError, ValueError):
    pass


class RamifiedField(SerreWeightsError, ValueError):
    pass


class PreconditionViolated(SerreWeightsError, ValueError):
    pass


class InvalidWitness(SerreWeightsError, ValueError):
    pass


class NotALift(SerreWeightsError, ValueError):
    pass


class SingularGenerator(SerreWeightsError, ValueError):
    pass


class CapExceeded(SerreWeightsError, RuntimeError):
    def __init__(self, cap: int, size: int | None = None):
        self.cap = cap
        self.size = size
        msg = f"group closure exceeded cap of {cap} elements"
        if size is not None:
            msg += f" (reached {size})"
        super().__init__(msg)


class CharMismatch(SerreWeightsError, ValueError):
    pass


class UnsupportedSpec(SerreWeightsError, ValueError):
    pass


class ParseError(SerreWeightsError, ValueError):
    def __init__(self, message: str, field: str | None = None, line: int | None = None):
        self.field = field
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field '{field}'")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)
