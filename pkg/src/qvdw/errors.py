"""Exception hierarchy shared by all qvdw modules.

Argument/contract violations raise ValueError subclasses (bad inputs the
caller should fix).  ModelError subclasses signal that a computation is
legitimately impossible for the given physical configuration; the CLI maps
them to a dedicated exit code.
"""


class TruncationError(ValueError):
    """Fock truncation too small to represent the requested operator."""


class HermiticityError(ValueError):
    """Operator expected to be Hermitian deviates beyond tolerance."""


class ModelError(Exception):
    """Base class for physics-level failures (degeneracy, instability, ...)."""


class DegeneracyError(ModelError):
    """Second-order perturbation theory hit a (near-)degenerate denominator."""


class NearResonanceError(DegeneracyError):
    """Qubit and mode frequencies too close for a dispersive treatment."""


class IdentificationError(ModelError):
    """No eigenstate overlaps the bare product state by more than 1/2.

    Signals coupling too strong for the dressed-state labeling to make sense.
    """


class DimensionLimitError(ModelError):
    """Requested product space exceeds the configured dense-matrix limit."""


class UnstableConfigurationError(ModelError):
    """Dipole coupling exceeds the restoring force; a normal mode went soft."""


class InvalidStateError(ModelError):
    """Density matrix fails Hermiticity, trace or positivity checks."""


class UncertaintyViolationError(InvalidStateError):
    """Covariance matrix violates the Heisenberg uncertainty bound."""


class FitError(ModelError):
    """Power-law fit is ill-posed (degenerate abscissas or zero values)."""
