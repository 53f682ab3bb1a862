"""Exception hierarchy shared by every module of the package."""


class NaryError(Exception):
    """Base class for all errors raised by narygroups."""


# groups
class MalformedTable(NaryError):
    pass


class NotAssociative(NaryError):
    def __init__(self, x, y, z):
        super().__init__(f"not associative at (x, y, z) = ({x}, {y}, {z})")
        self.witness = (x, y, z)


class NoIdentity(NaryError):
    pass


class NoInverse(NaryError):
    def __init__(self, x):
        super().__init__(f"element {x} has no inverse")
        self.witness = x


class UnsupportedOrder(NaryError):
    pass


class OrderTooLarge(NaryError):
    pass


# polyadic
class ArityMismatch(NaryError):
    pass


class IndexOutOfRange(NaryError):
    pass


class BudgetExceeded(NaryError):
    pass


class MissingSkewMap(NaryError):
    pass


class ArityArithmeticMismatch(NaryError):
    pass


class NotAnNaryGroup(NaryError):
    def __init__(self, verdict):
        super().__init__(f"not an n-ary group: {verdict.reason} (witness {verdict.witness})")
        self.verdict = verdict


# hosszu
class FixedPointViolated(NaryError):
    pass


class InnerPowerViolated(NaryError):
    def __init__(self, x):
        super().__init__(f"phi^(n-1)(x) != b x b^-1 at x = {x}")
        self.witness = x


class DivisibilityViolated(NaryError):
    pass


class ParamConstraintViolated(NaryError):
    pass


class EvenArity(NaryError):
    pass


# nary-iso / classify / terms
class ShapeMismatch(NaryError):
    pass


class RowNotTabulated(NaryError):
    pass


class NotCyclicBase(NaryError):
    pass


class NonAbelianBase(NaryError):
    pass


class DuplicateElements(NaryError):
    pass


class ParseError(NaryError):
    pass
