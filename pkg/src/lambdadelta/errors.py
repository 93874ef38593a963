"""Exception hierarchy shared by every layer of the kernel."""


class LambdaDeltaError(Exception):
    pass


class TermSyntaxError(LambdaDeltaError):
    def __init__(self, message, pos=None, expected=None):
        self.pos = pos
        self.expected = expected
        where = "" if pos is None else f" at offset {pos}"
        super().__init__(f"{message}{where}")


class UnboundName(TermSyntaxError):
    def __init__(self, name, pos=None):
        self.name = name
        super().__init__(f"unbound name {name!r}", pos)


class MissingSortHead(TermSyntaxError):
    def __init__(self, pos=None):
        super().__init__("environment must end with a sort", pos, expected="*NAT")


class FuelExhausted(LambdaDeltaError):
    def __init__(self, fuel, what="reduction"):
        self.fuel = fuel
        super().__init__(f"{what} did not finish within {fuel} steps")


class TypeCheckError(LambdaDeltaError):
    """A failed typing, static-typing or arity judgement.

    ``path`` locates the offending subterm as a tuple of ``"arg"``/``"body"``
    selectors from the root of the judged term; ``subterm`` is that subterm.
    """

    def __init__(self, message, path=(), subterm=None):
        self.path = tuple(path)
        self.subterm = subterm
        self.message = message
        super().__init__(message)

    @property
    def variant(self):
        return type(self).__name__


class DanglingReference(TypeCheckError):
    pass


class ExcludedVariable(TypeCheckError):
    pass


class NotAFunction(TypeCheckError):
    pass


class DomainMismatch(TypeCheckError):
    pass


class CastMismatch(TypeCheckError):
    pass


class IllTypedSubterm(TypeCheckError):
    pass


class MonotonicityViolation(TypeCheckError):
    pass
