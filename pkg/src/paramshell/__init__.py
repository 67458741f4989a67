"""Critical pulsating-load solver for damaged orthotropic cylindrical
shells stiffened by inhomogeneous rods and rings on a Winkler/Pasternak
viscoelastic foundation."""

from .errors import (
    AllModesNonExcitableError,
    ConfigError,
    DomainError,
    InvalidPoissonError,
    MaterialReciprocityError,
    NonExcitableModeError,
    NonPositiveProfileError,
    ParamShellError,
    QuadratureConvergenceError,
    SingularSystemError,
)
from .config import (
    RingSpec,
    RodSpec,
    RunConfig,
    SWEEP_PARAMETERS,
    apply_sweep,
    parse_config,
)
from .estimator import CriticalLoadEstimator
from .reference import reference_run_config, reference_shell_config
from .runner import (
    CSV_HEADER,
    SolveOutcome,
    SweepRow,
    run_single,
    run_sweep,
    sweep_csv_text,
)
from .selfcheck import self_check
from .action import (
    ActionQuadraticForm,
    MediumTimeBlock,
    TimeFactors,
    assemble_by_quadrature,
    assemble_closed_form,
    medium_time_block,
    time_factors,
)
from .damage import (
    ActiveIntervals,
    active_intervals,
    characteristic_time,
    damage_modulation,
)
from .model import (
    DamageModel,
    FoundationModel,
    InhomogeneityLaw,
    Loading,
    ModeIndex,
    OrthotropicMaterial,
    RingStiffener,
    RodStiffener,
    ShellConfig,
    ShellGeometry,
    StiffnessCoefficients,
    evaluate_law,
    stiffness_coefficients,
    uniform_rings,
    uniform_rods,
)
from .quadrature import (
    QuadratureSpec,
    RingProfileIntegrals,
    RodProfileIntegrals,
    integrate,
    ring_profile_integrals,
    rod_profile_integrals,
)
from .solver import (
    AlphaCoefficients,
    CriticalForceResult,
    ModalAmplitudes,
    ModeResult,
    alpha_coefficients,
    critical_force_for_mode,
    find_critical_force,
    reconstruct_displacements,
    solve_modal,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
