"""Exception types shared across the engine."""


class LieTraceError(Exception):
    """Base class for all domain errors raised by lietrace."""


class InvalidAlgebra(LieTraceError):
    pass


class NonDominant(LieTraceError):
    pass


class UnknownIrrep(LieTraceError):
    pass


class DegenerateSpectrum(LieTraceError):
    """Two irreps in one subspace share an eigenvalue; they cannot be separated.

    Carries the offending (weight, space) groups in ``pairs``.
    """

    def __init__(self, message, pairs=()):
        super().__init__(message)
        self.pairs = tuple(pairs)


class InternalInconsistency(LieTraceError):
    """A mathematically impossible state; indicates a bug, not bad input."""


class UnsupportedFamily(LieTraceError):
    pass


class NotTypeD(LieTraceError):
    pass


class UnresolvedTensor(LieTraceError):
    pass


class UnsupportedSize(LieTraceError):
    pass
