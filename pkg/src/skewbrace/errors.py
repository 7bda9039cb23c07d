"""Exception hierarchy.

``VerificationError`` subclasses mean a mathematical check failed on valid
input; everything else under ``SkewBraceError`` is a usage or input problem.
"""


class SkewBraceError(Exception):
    pass


class VerificationError(SkewBraceError):
    pass


class InputError(SkewBraceError, ValueError):
    pass


# finite groups

class NotLatin(VerificationError):
    def __init__(self, row, col, detail=""):
        self.row, self.col = row, col
        super().__init__(f"table is not a Latin square at cell ({row}, {col}){detail}")


class NotAssociative(VerificationError):
    def __init__(self, a, b, c):
        self.triple = (a, b, c)
        super().__init__(f"associativity fails at ({a}, {b}, {c})")


class NoIdentity(VerificationError):
    def __init__(self, row, col):
        self.row, self.col = row, col
        super().__init__(f"element 0 is not the identity: cell ({row}, {col})")


class NotCharacteristic(VerificationError):
    pass


class OrderBoundExceeded(InputError):
    pass


# finite braces

class IdentityMismatch(VerificationError):
    pass


class BraceIdentityViolation(VerificationError):
    def __init__(self, a, b, c):
        self.triple = (a, b, c)
        super().__init__(f"brace identity fails at (a, b, c) = ({a}, {b}, {c})")


class NotAnIdeal(VerificationError):
    pass


# Lie / post-Lie

class JacobiViolation(VerificationError):
    def __init__(self, i, j, k):
        self.triple = (i, j, k)
        super().__init__(f"Jacobi identity fails on basis triple ({i}, {j}, {k})")


class AntisymmetryViolation(VerificationError):
    def __init__(self, i, j, k):
        self.index = (i, j, k)
        super().__init__(f"c[{i}][{j}][{k}] != -c[{j}][{i}][{k}]")


class AxiomViolation(VerificationError):
    def __init__(self, which, i, j, k):
        self.which = which
        self.triple = (i, j, k)
        super().__init__(f"post-Lie axiom ({which}) fails on basis triple ({i}, {j}, {k})")


class DimTooLarge(InputError):
    pass


class IncompleteOverRationals(SkewBraceError):
    pass


class CircNotSimple(VerificationError):
    pass


class NotSemisimple(VerificationError):
    pass


class DimensionMismatch(InputError):
    pass


# group-law DSL

class LawSyntaxError(InputError):
    def __init__(self, line, col, expected, found=None):
        self.line, self.col, self.expected = line, col, expected
        msg = f"line {line}, col {col}: expected {expected}"
        if found is not None:
            msg += f", found {found!r}"
        super().__init__(msg)


class UnknownVariable(InputError):
    pass


class NewtonDivergence(VerificationError):
    def __init__(self, point):
        self.point = tuple(float(x) for x in point)
        super().__init__(f"Newton inverse solve did not converge at {self.point}")


class NoRationalWithinBound(VerificationError):
    def __init__(self, entry, value, detail="no rational within bound"):
        self.entry, self.value = entry, value
        super().__init__(f"entry {entry} = {value!r}: {detail}")
