"""Exception hierarchy shared by all modules."""


class CommVarError(Exception):
    """Base class for every error raised by this package."""


class ShapeMismatch(CommVarError):
    """Operands do not have compatible shapes."""


class RankDeficient(CommVarError):
    """A vector family is linearly dependent at working tolerance."""


class NotHermitian(CommVarError):
    pass


class NotUnitary(CommVarError):
    pass


class NotSkewHermitian(CommVarError):
    pass


class NotSymmetric(CommVarError):
    pass


class NotCommuting(CommVarError):
    """A matrix tuple fails the pairwise commutation test."""


class NoConvergence(CommVarError):
    """Jacobi sweeps exhausted without reaching the target residual."""


class NotOrthogonal(CommVarError):
    """Configuration labels are not mutually orthogonal."""


class IndexOutOfRange(CommVarError):
    """A based map refers to an index outside its target set."""


class TruncationOverflow(CommVarError):
    """An output monomial exceeds the degree bound of the target universe."""


class SingularAtOne(CommVarError):
    """Inverse Cayley transform applied to a matrix with eigenvalue one."""


class WrongStratum(CommVarError):
    """Chart requested on an element outside the open stratum."""


class NotRealizable(CommVarError):
    """Eigenspaces are not complexifications of real subspaces."""


class ZeroTuple(CommVarError):
    """Normalization of an (essentially) zero tuple."""


class NotOddPrime(CommVarError):
    pass
