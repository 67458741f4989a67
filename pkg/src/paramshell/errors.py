"""Exception types shared across the package."""


class ParamShellError(Exception):
    """Base class for all package-specific errors."""


class DomainError(ParamShellError, ValueError):
    """An argument is outside its admissible domain."""


class InvalidPoissonError(ParamShellError, ValueError):
    """Poisson ratio product outside [0, 1)."""


class MaterialReciprocityError(ParamShellError, ValueError):
    """nu2*E1 and nu1*E2 disagree beyond tolerance."""


class NonPositiveProfileError(ParamShellError, ValueError):
    """A linear property profile would become non-positive on its span."""


class QuadratureConvergenceError(ParamShellError, RuntimeError):
    """Adaptive quadrature exhausted its subdivision depth."""


class SingularSystemError(ParamShellError, RuntimeError):
    """The stationarity system is (near-)singular: resonance of the
    homogeneous problem, or a vanishing deflection cofactor."""


class NonExcitableModeError(ParamShellError, RuntimeError):
    """The pulsating load does not couple to the requested mode."""


class AllModesNonExcitableError(ParamShellError, RuntimeError):
    """No mode in the search rectangle yields a positive critical load."""


class ConfigError(ParamShellError, ValueError):
    """Malformed or invalid run configuration document."""
