"""Exception hierarchy shared by all posetbundle modules."""


class PosetBundleError(Exception):
    """Base class for all errors raised by this package."""


# --- poset construction ---

class DuplicateElement(PosetBundleError):
    pass


class UnknownElement(PosetBundleError):
    pass


class AntisymmetryViolation(PosetBundleError):
    pass


class BadParameter(PosetBundleError):
    pass


# --- simplicial ---

class UnsupportedDimension(PosetBundleError):
    pass


class IndexOutOfRange(PosetBundleError):
    pass


# --- paths ---

class EndpointMismatch(PosetBundleError):
    pass


class NotConnected(PosetBundleError):
    pass


class SearchLimitExceeded(PosetBundleError):
    pass


# --- groups ---

class MalformedTable(PosetBundleError):
    pass


class NotAssociative(MalformedTable):
    pass


class NoIdentity(MalformedTable):
    pass


class NoInverse(MalformedTable):
    pass


class DiamondUndefined(PosetBundleError):
    pass


class DotUndefined(PosetBundleError):
    pass


class Mismatch(PosetBundleError):
    pass


# --- cochains ---

class CentralityViolation(PosetBundleError):
    pass


class MissingValue(PosetBundleError):
    pass


# --- connections ---

class NotAConnection(PosetBundleError):
    pass


class PreconditionViolated(PosetBundleError):
    pass


class NoSuchSimplex(PosetBundleError):
    pass


class TrivialGroup(PosetBundleError):
    pass


class NotCentral(PosetBundleError):
    pass


class MixedCocycles(PosetBundleError):
    pass


# --- gauge ---

class WrongCocycle(PosetBundleError):
    pass


# --- cli ---

class UsageError(PosetBundleError):
    pass
