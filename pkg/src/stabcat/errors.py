"""Exception hierarchy shared by every stabcat module."""


class StabcatError(Exception):
    pass


class DomainMismatch(StabcatError):
    """Two morphisms (or a morphism and an object) do not line up."""


class LawViolation(StabcatError):
    """A table does not satisfy the object or morphism law of its instance."""


class IndexOutOfRange(StabcatError):
    pass


class NotATopology(StabcatError):
    def __init__(self, first, second, reason):
        super().__init__(f"{reason}: {sorted(first)} and {sorted(second)}")
        self.pair = (first, second)


class NoFactorization(StabcatError):
    pass


class NoZKernel(StabcatError):
    """The theory has no Z-kernel for this morphism."""


class NoZCokernel(StabcatError):
    """The theory has no Z-cokernel for this morphism."""


class ZKernelUnverified(StabcatError):
    pass


class KernelUnverified(StabcatError):
    pass


class CokernelUnverified(StabcatError):
    pass


class NotCoproductPreserving(StabcatError):
    pass


class NotTTFunctor(StabcatError):
    pass


class ParseError(StabcatError):
    def __init__(self, message, line=0, column=0):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column
