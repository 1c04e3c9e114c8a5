class AcgError(Exception):
    """Raiz de todos os erros do projeto."""


class PermutationParseError(AcgError, ValueError):
    def __init__(self, message, offset):
        super().__init__(f"{message} (posição {offset})")
        self.offset = offset


class DegreeMismatchError(AcgError, ValueError):
    pass


class GroupFileFormatError(AcgError, ValueError):
    def __init__(self, message, line, path=None):
        where = f"{path}:{line}" if path else f"linha {line}"
        super().__init__(f"{where}: {message}")
        self.line = line
        self.path = path


class CapacityError(AcgError):
    def __init__(self, order, bound, what='enumeração'):
        super().__init__(
            f"Capacidade excedida na {what}: ordem {order} > limite {bound}. "
            f"Aumente o limite (parâmetro bound ou ACG_ENUM_BOUND)."
        )
        self.order = order
        self.bound = bound


class PreconditionError(AcgError):
    pass


class NotASubgroupError(PreconditionError):
    pass


class NotNormalError(PreconditionError):
    pass


class NotAnticentralError(PreconditionError):
    pass


class UnsupportedGroupError(PreconditionError):
    pass


class TheoremViolationError(AcgError):
    """Falha de uma afirmação estrutural: bug ou contraexemplo. Sempre com testemunha."""

    def __init__(self, message, witness, report=None):
        super().__init__(message)
        self.witness = witness
        self.report = report


class InternalConsistencyError(AcgError):
    pass


class ManifestMismatchError(AcgError):
    pass
