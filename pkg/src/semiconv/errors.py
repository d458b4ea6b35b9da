"""Exception hierarchy.

Every error raised by the package derives from SemiconvError so CLI code
can map failures to exit codes in one place.
"""


class SemiconvError(Exception):
    pass


class MalformedInput(SemiconvError):
    """Input file or literal does not parse into the expected shape."""


class IndexOutOfRange(MalformedInput):
    def __init__(self, row, col, value):
        self.row, self.col, self.value = row, col, value
        super().__init__(f"table[{row}][{col}] = {value} is not a valid element index")


class NonAssociative(SemiconvError):
    def __init__(self, a, b, c):
        self.witness = (a, b, c)
        super().__init__(f"(a*b)*c != a*(b*c) for (a,b,c) = ({a},{b},{c})")


class OrderCapExceeded(SemiconvError):
    def __init__(self, order, cap):
        self.order, self.cap = order, cap
        super().__init__(f"order {order} exceeds the configured cap {cap}")


class MismatchedParent(SemiconvError):
    pass


class EmptySet(SemiconvError):
    pass


class EmptyGenerators(SemiconvError):
    pass


class NotASubsemigroup(SemiconvError):
    def __init__(self, a, b):
        self.witness = (a, b)
        super().__init__(f"not closed: product of elements {a} and {b} lies outside the set")


class NotAGroup(SemiconvError):
    def __init__(self, reason, witness=None):
        self.reason, self.witness = reason, witness
        msg = reason if witness is None else f"{reason} (witness: {witness})"
        super().__init__(msg)


class NotSimple(SemiconvError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"semigroup is not simple: witness element {witness}")


class NotIdempotent(SemiconvError):
    def __init__(self, element):
        self.element = element
        super().__init__(f"element {element} is not idempotent")


class NotPrimitive(SemiconvError):
    def __init__(self, element, below):
        self.element, self.below = element, below
        super().__init__(f"idempotent {element} is not primitive: {below} lies strictly below it")


class NotInFactor(SemiconvError):
    def __init__(self, factor, element):
        self.factor, self.element = factor, element
        super().__init__(f"element {element} does not belong to the {factor} factor")


class VerificationFailed(SemiconvError):
    """An internally derived identity failed to check out.  Signals a bug."""

    def __init__(self, clause, detail=""):
        self.clause = clause
        msg = f"internal verification failed: {clause}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class InvalidSandwichEntry(SemiconvError):
    def __init__(self, row, col, value):
        self.row, self.col, self.value = row, col, value
        super().__init__(f"sandwich[{row}][{col}] = {value} is not a group element index")


class InvalidDistribution(MalformedInput):
    pass


class SupportOutsideDecomposition(SemiconvError):
    def __init__(self, element):
        self.element = element
        super().__init__(f"support element {element} lies outside the decomposed carrier")


class TheoremViolation(SemiconvError):
    """A verified-by-construction conclusion failed on concrete data."""

    def __init__(self, clause, detail=""):
        self.clause = clause
        msg = f"theorem check failed: {clause}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class PreconditionViolated(SemiconvError):
    def __init__(self, condition, witness=None):
        self.condition, self.witness = condition, witness
        msg = f"precondition violated: {condition}"
        if witness is not None:
            msg += f" (witness: {witness})"
        super().__init__(msg)


class HypothesisViolated(SemiconvError):
    def __init__(self, condition, witness=None):
        self.condition, self.witness = condition, witness
        msg = f"hypothesis violated: {condition}"
        if witness is not None:
            msg += f" (witness: {witness})"
        super().__init__(msg)


class SingularDecomposition(SemiconvError):
    pass


class ParameterOutOfRange(SemiconvError):
    pass


class EmptySupport(SemiconvError):
    pass


class Cancelled(SemiconvError):
    """Raised when a caller-supplied cancellation token fires mid-analysis."""

