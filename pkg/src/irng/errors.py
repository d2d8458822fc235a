"""Exception hierarchy. Every error names the offending data."""


class IrngError(Exception):
    pass


class ParseError(IrngError, ValueError):
    pass


class BilinearityViolation(IrngError, ValueError):
    def __init__(self, i, j, t):
        self.i, self.j, self.t = i, j, t
        super().__init__(
            f"structure constant e{i + 1}*e{j + 1} has coordinate {t + 1} "
            f"not killed by the orders of e{i + 1}, e{j + 1}")


class AssociativityViolation(IrngError, ValueError):
    def __init__(self, i, j, l, what="e"):
        self.i, self.j, self.l = i, j, l
        if what == "e":
            msg = f"(e{i + 1}e{j + 1})e{l + 1} != e{i + 1}(e{j + 1}e{l + 1})"
        else:
            msg = f"({i}*{j})*{l} != {i}*({j}*{l})"
        super().__init__(msg)


class AmbientMismatch(IrngError, ValueError):
    pass


class IntegerOverflow(IrngError, ArithmeticError):
    """Reserved. Unitization integers are Python ints and the compiled
    kernel only accepts moduli below its limit, so nothing raises this."""


class TooLarge(IrngError):
    def __init__(self, size, cap):
        self.size, self.cap = size, cap
        super().__init__(f"size {size} exceeds cap {cap}")


class PreconditionFailed(IrngError, ValueError):
    pass


class NotTwoSided(IrngError, ValueError):
    pass


class NotCommutative(IrngError, ValueError):
    pass


class NotIrng(IrngError, ValueError):
    pass


class SystemUnsolvable(IrngError):
    def __init__(self, index):
        self.index = index
        super().__init__(f"generator x{index + 1} is not an R-combination of the generators")


class CorollaryViolated(IrngError, AssertionError):
    """A finite computation contradicts a proved statement; never expected."""


class LemmaViolated(IrngError, AssertionError):
    """A finite computation contradicts a proved statement; never expected."""


class HypothesisViolation(IrngError, ValueError):
    def __init__(self, index):
        self.index = index
        super().__init__(f"declared fixing identity fails for generator x{index}")


class SubstitutionBlowup(IrngError):
    def __init__(self, reached, budget):
        self.reached, self.budget = reached, budget
        super().__init__(f"certificate reached {reached} monomials (budget {budget})")


class NotAGroup(IrngError, ValueError):
    pass


class BadIndices(IrngError, ValueError):
    pass


class TooManyEntries(IrngError, ValueError):
    pass


class CapExceeded(IrngError):
    def __init__(self, visited, cap):
        self.visited, self.cap = visited, cap
        super().__init__(f"visited {visited} elements, cap {cap}")
