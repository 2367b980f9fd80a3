"""Exception hierarchy. Everything derives from ValueError so callers that
catch ValueError (the orchestrator, the CLI) keep working."""


class OpenXXZError(ValueError):
    pass


class ZeroParameter(OpenXXZError):
    pass


class DegenerateBoundary(OpenXXZError):
    pass


class SingularGamma(OpenXXZError):
    def __init__(self, indices, message=None):
        self.indices = list(indices)
        super().__init__(message or f"gamma_m vanishes for m in {self.indices}")


class GenericityFailure(OpenXXZError):
    pass


class SingularParameter(OpenXXZError):
    pass


class CrossingSingularity(OpenXXZError):
    pass


class NonInvertibleTransfer(OpenXXZError):
    pass


class PoleAtRoot(OpenXXZError):
    pass


class IllConditioned(OpenXXZError):
    def __init__(self, message, condition=None):
        self.condition = condition
        super().__init__(message)


class LiftFailure(OpenXXZError):
    pass


class ResidualTooLarge(OpenXXZError):
    pass


class PoleCollision(OpenXXZError):
    pass


class OffShellDual(OpenXXZError):
    pass


class DegenerateRoots(OpenXXZError):
    pass


class CrossCheckFailure(OpenXXZError):
    pass


class PochhammerZero(OpenXXZError):
    pass


class DegenerateDenominator(OpenXXZError):
    pass


class ConfigError(OpenXXZError):
    pass
