"""Exception hierarchy. Contract violations raise; they are never silently coerced."""


class SmoncatError(Exception):
    pass


class ShapeError(SmoncatError):
    """Matrix/morphism shape mismatch; a caller bug, not a math condition."""


class ParseError(SmoncatError):
    def __init__(self, message, path=None, line=None):
        loc = ""
        if path is not None:
            loc += str(path)
        if line is not None:
            loc += f":{line}"
        super().__init__(f"{loc}: {message}" if loc else message)
        self.path = path
        self.line = line


class NonAdmissibleError(SmoncatError):
    """Path enumeration hit the length cap without all paths dying out."""


class FieldTooSmallError(SmoncatError):
    """Trace-form radical needs characteristic 0 or p > algebra dimension."""


class DecompositionInconclusive(SmoncatError):
    """Locality of an endomorphism ring could not be certified either way."""


class ProjectiveInputError(SmoncatError):
    """tau of a module with projective summands is undefined."""


class InjectiveInputError(SmoncatError):
    """tau-inverse of a module with injective summands is undefined."""


class MembershipError(SmoncatError):
    """A required object left the subcategory add(generators)."""


class NotEnoughInjectivesError(SmoncatError):
    pass


class NotEnoughProjectivesError(SmoncatError):
    pass


class NotMonoError(SmoncatError):
    """Operation requires an object of the monomorphism category S(C)."""


class NotEpiError(SmoncatError):
    """Operation requires an object of the epimorphism category F(C)."""


class ProjectiveObjectError(SmoncatError):
    """tau_S of a projective object of S(C) is undefined."""


class InjectiveObjectError(SmoncatError):
    """tau_S-inverse of an injective object of S(C) is undefined."""


class BackendUnsupportedError(SmoncatError):
    """The chosen tau backend cannot transport morphisms."""


class NotFrobeniusError(SmoncatError):
    pass


class CapExceededError(SmoncatError):
    """Knitting or enumeration exceeded its cap (possibly representation-infinite)."""


class CertificationError(SmoncatError):
    """An AR certificate failed to verify; the run aborts rather than report junk."""
