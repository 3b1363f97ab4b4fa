"""Exception hierarchy.

Every error raised while *building* an algebra derives from
:class:`InvalidAlgebra`; the command line maps those to exit code 2.
"""


class PBZError(ValueError):
    """Base class for all errors raised by this package."""


class InvalidAlgebra(PBZError):
    """Input does not describe a structure of the requested kind."""


class NotAPoset(InvalidAlgebra):
    def __init__(self, a, b):
        super().__init__(f"NotAPoset: cycle through {a} and {b}")
        self.pair = (a, b)


class NotBounded(InvalidAlgebra):
    def __init__(self, a, b):
        super().__init__(f"NotBounded: {a} and {b} break the declared bounds")
        self.pair = (a, b)


class NotALattice(InvalidAlgebra):
    def __init__(self, a, b, what="meet"):
        super().__init__(f"NotALattice: no unique {what} for ({a}, {b})")
        self.pair = (a, b)
        self.what = what


class NotInvolutive(InvalidAlgebra):
    def __init__(self, a):
        super().__init__(f"NotInvolutive: {a}'' != {a}")
        self.witness = a


class NotAntitone(InvalidAlgebra):
    def __init__(self, a, b, op="'"):
        super().__init__(f"NotAntitone: {a} <= {b} but {b}{op} is not below {a}{op}")
        self.pair = (a, b)


class BZAxiomFailure(InvalidAlgebra):
    def __init__(self, axiom, witness):
        super().__init__(f"BZAxiomFailure: {axiom} fails at {witness}")
        self.axiom = axiom
        self.witness = witness


class NotDualIso(InvalidAlgebra):
    def __init__(self, witness):
        super().__init__(f"NotDualIso: map is not a dual isomorphism onto M^d at {witness}")
        self.witness = witness


class TrivialLowerPart(InvalidAlgebra):
    def __init__(self):
        super().__init__("TrivialLowerPart: the lower summand must have at least two elements")


class NotPseudoKleene(InvalidAlgebra):
    def __init__(self, witness=None):
        super().__init__(f"NotPseudoKleene: x^x' <= y v y' fails at {witness}")
        self.witness = witness


class SideConditionViolated(InvalidAlgebra):
    def __init__(self, flavor, reason):
        super().__init__(f"SideConditionViolated[{flavor}]: {reason}")
        self.flavor = flavor
        self.reason = reason


class MixedFlavors(InvalidAlgebra):
    def __init__(self, flavor):
        super().__init__(f"MixedFlavors: some operand has no {flavor} reduct")


class NotACongruence(PBZError):
    def __init__(self, witness):
        super().__init__(f"NotACongruence: compatibility fails at {witness}")
        self.witness = witness


class NotAntiortholattice(PBZError):
    pass


class EmptySubset(PBZError):
    pass


class SizeGuardExceeded(PBZError):
    pass


class GuardExceeded(PBZError):
    pass


class ParamOutOfRange(PBZError):
    pass


class MissingOperation(PBZError):
    pass


class UnknownName(PBZError):
    pass


class MissingParam(PBZError):
    pass


class TermSyntaxError(PBZError, SyntaxError):
    """Malformed term; ``position`` is the 0-based offset of the bad token."""

    def __init__(self, msg, position):
        super().__init__(f"SyntaxError at {position}: {msg}")
        self.msg = msg
        self.position = position

    def __str__(self):
        return f"SyntaxError at {self.position}: {self.msg}"
