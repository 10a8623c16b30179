"""Exception hierarchy.

Every error that names a failed axiom or theorem carries the offending
element indices in ``witness`` so callers can report them.
"""


class AGFuzzError(Exception):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


# malformed input
class ParseError(AGFuzzError):
    pass


class NonSquare(ParseError):
    pass


class EntryOutOfRange(ParseError):
    pass


# AG-group axioms
class NotAGGroup(AGFuzzError):
    pass


class NotLeftInvertive(NotAGGroup):
    pass


class NoLeftIdentity(NotAGGroup):
    pass


class MultipleLeftIdentities(NotAGGroup):
    pass


class MissingInverse(NotAGGroup):
    pass


class NotHomomorphism(AGFuzzError):
    pass


class NotAPartition(AGFuzzError):
    pass


class NotWellDefined(AGFuzzError):
    pass


class PreconditionFailed(AGFuzzError):
    pass


# a proved statement failed on a concrete instance
class LemmaViolation(AGFuzzError):
    pass


class PropositionViolation(AGFuzzError):
    pass


class TheoremViolation(AGFuzzError):
    pass


class OrderCapExceeded(AGFuzzError):
    pass
