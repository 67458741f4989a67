"""Problem-statement types: geometry, orthotropic material, stiffeners,
foundation, damage and loading, plus the elementary material computations.

All quantities are SI (m, Pa, kg/m^3, rad/s).  Every type is an immutable
dataclass validated on construction, so instances are safe to share across
concurrent evaluations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import (
    DomainError,
    InvalidPoissonError,
    MaterialReciprocityError,
    NonPositiveProfileError,
)

RECIPROCITY_RTOL = 1e-9

TWO_PI = 2.0 * math.pi


def _require_positive(name: str, value: float) -> None:
    if not (value > 0.0) or not math.isfinite(value):
        raise DomainError(f"{name} must be finite and > 0, got {value!r}")


def _require_nonnegative(name: str, value: float) -> None:
    if value < 0.0 or not math.isfinite(value):
        raise DomainError(f"{name} must be finite and >= 0, got {value!r}")


@dataclass(frozen=True)
class ShellGeometry:
    """Mid-surface radius, length and wall thickness of the shell."""

    radius: float
    length: float
    thickness: float

    def __post_init__(self) -> None:
        _require_positive("radius", self.radius)
        _require_positive("length", self.length)
        _require_positive("thickness", self.thickness)
        if self.thickness / self.radius >= 0.2:
            raise DomainError(
                "thickness/radius = "
                f"{self.thickness / self.radius:.4g} outside the thin-shell "
                "regime (must be < 0.2)"
            )


@dataclass(frozen=True)
class OrthotropicMaterial:
    """Orthotropic shell wall material.

    e1 is the axial modulus, e2 the circumferential one.  The two Poisson
    ratios must satisfy the reciprocity relation nu2*e1 == nu1*e2 (to
    RECIPROCITY_RTOL relative), otherwise the two equivalent expressions for
    the coupling stiffness b12 would disagree.
    """

    e1: float
    e2: float
    nu1: float
    nu2: float
    g: float
    rho0: float

    def __post_init__(self) -> None:
        _require_positive("e1", self.e1)
        _require_positive("e2", self.e2)
        _require_positive("g", self.g)
        _require_positive("rho0", self.rho0)
        prod = self.nu1 * self.nu2
        if prod < 0.0 or prod >= 1.0:
            raise InvalidPoissonError(
                f"nu1*nu2 = {prod:.6g} must lie in [0, 1)"
            )
        lhs = self.nu2 * self.e1
        rhs = self.nu1 * self.e2
        scale = max(abs(lhs), abs(rhs))
        if scale > 0.0 and abs(lhs - rhs) > RECIPROCITY_RTOL * scale:
            raise MaterialReciprocityError(
                f"nu2*e1 = {lhs:.10g} and nu1*e2 = {rhs:.10g} disagree "
                f"beyond {RECIPROCITY_RTOL:g} relative"
            )


@dataclass(frozen=True)
class StiffnessCoefficients:
    """Membrane stiffness coefficients of the orthotropic wall (Pa)."""

    b11: float
    b22: float
    b12: float
    b66: float

    def __post_init__(self) -> None:
        _require_positive("b11", self.b11)
        _require_positive("b22", self.b22)
        _require_positive("b66", self.b66)
        if not self.b12 * self.b12 < self.b11 * self.b22:
            raise DomainError(
                "b12^2 must be < b11*b22 (positive-definite membrane "
                f"stiffness); got b12={self.b12:.6g}"
            )


def stiffness_coefficients(material: OrthotropicMaterial) -> StiffnessCoefficients:
    """Membrane stiffness coefficients from the engineering constants.

    b12 is evaluated through both equivalent expressions and the two are
    required to agree to RECIPROCITY_RTOL relative.
    """
    denom = 1.0 - material.nu1 * material.nu2
    if denom <= 0.0:
        raise InvalidPoissonError(f"1 - nu1*nu2 = {denom:.6g} must be > 0")
    b11 = material.e1 / denom
    b22 = material.e2 / denom
    b12_a = material.nu2 * material.e1 / denom
    b12_b = material.nu1 * material.e2 / denom
    scale = max(abs(b12_a), abs(b12_b))
    if scale > 0.0 and abs(b12_a - b12_b) > RECIPROCITY_RTOL * scale:
        raise MaterialReciprocityError(
            f"b12 expressions disagree: {b12_a:.10g} vs {b12_b:.10g}"
        )
    return StiffnessCoefficients(b11=b11, b22=b22, b12=b12_a, b66=material.g)


@dataclass(frozen=True)
class InhomogeneityLaw:
    """Linear spatial variation of a stiffener property.

    value(s) = base * (1 + slope * s / span) on s in [0, span].  The span is
    the shell length for rod laws and 2*pi for ring laws.
    """

    base: float
    slope: float = 0.0
    span: float = TWO_PI

    def __post_init__(self) -> None:
        _require_positive("base", self.base)
        _require_positive("span", self.span)
        if self.slope <= -1.0:
            raise NonPositiveProfileError(
                f"slope = {self.slope:.6g} <= -1 makes the profile "
                "non-positive at the far end of its span"
            )

    def value(self, s):
        """Profile value at coordinate s (accepts scalars or arrays)."""
        import numpy as np

        s_arr = np.asarray(s, dtype=float)
        if np.any(s_arr < 0.0) or np.any(s_arr > self.span):
            raise DomainError(
                f"coordinate outside [0, {self.span:.6g}]"
            )
        out = self.base * (1.0 + self.slope * s_arr / self.span)
        return float(out) if out.ndim == 0 else out

    __call__ = value

    @property
    def mean(self) -> float:
        """Span-averaged value, base * (1 + slope/2)."""
        return self.base * (1.0 + 0.5 * self.slope)


def evaluate_law(law: InhomogeneityLaw, s: float) -> float:
    """Evaluate a linear property profile at coordinate s in [0, span]."""
    return law.value(s)


@dataclass(frozen=True)
class RodStiffener:
    """Longitudinal stiffener at angular position phi.

    j_y is the bending inertia for the radial deflection, j_z the one for
    the tangential deflection, j_torsion the torsional constant.  The three
    property laws run over x in [0, shell length].
    """

    area: float
    j_y: float
    j_z: float
    j_torsion: float
    modulus: InhomogeneityLaw
    shear: InhomogeneityLaw
    density: InhomogeneityLaw
    phi: float

    def __post_init__(self) -> None:
        _require_positive("area", self.area)
        _require_positive("j_y", self.j_y)
        _require_positive("j_z", self.j_z)
        _require_positive("j_torsion", self.j_torsion)
        if not (0.0 <= self.phi < TWO_PI):
            raise DomainError(f"phi = {self.phi:.6g} must lie in [0, 2*pi)")


@dataclass(frozen=True)
class RingStiffener:
    """Circumferential stiffener at axial position x.

    j_in_plane is the bending inertia for radial deflection of the ring in
    its own plane, j_out_of_plane the one for deflection along the shell
    axis, j_torsion the torsional constant.  The property laws run over
    phi in [0, 2*pi].
    """

    area: float
    j_in_plane: float
    j_out_of_plane: float
    j_torsion: float
    modulus: InhomogeneityLaw
    shear: InhomogeneityLaw
    density: InhomogeneityLaw
    x: float

    def __post_init__(self) -> None:
        _require_positive("area", self.area)
        _require_positive("j_in_plane", self.j_in_plane)
        _require_positive("j_out_of_plane", self.j_out_of_plane)
        _require_positive("j_torsion", self.j_torsion)
        _require_positive("x", self.x)


@dataclass(frozen=True)
class FoundationModel:
    """Winkler/Pasternak foundation with an exponential hereditary kernel.

    kernel_amplitude = 0 or kernel_decay arbitrary disables the hereditary
    medium term; the static springs act through winkler and pasternak.
    """

    winkler: float = 0.0
    pasternak: float = 0.0
    kernel_amplitude: float = 0.0
    kernel_decay: float = 0.0

    def __post_init__(self) -> None:
        _require_nonnegative("winkler", self.winkler)
        _require_nonnegative("pasternak", self.pasternak)
        _require_nonnegative("kernel_amplitude", self.kernel_amplitude)
        _require_nonnegative("kernel_decay", self.kernel_decay)


@dataclass(frozen=True)
class DamageModel:
    """Constant-kernel hereditary damage bookkeeping.

    gamma is the constant damage kernel, recovery the per-cycle recovery
    level (0 = full recovery, 1 = none), rheologic the coefficient entering
    the damage modulation function, cycles the number of active loading
    cycles.  t_table holds the six auxiliary correction coefficients whose
    derivations live outside this artifact; they default to zero.
    """

    gamma: float = 0.0
    recovery: float = 1.0
    rheologic: float = 0.0
    cycles: int = 1
    t_table: tuple = (0.0, 0.0, 0.0, 0.0, 0.0, 0.0)

    def __post_init__(self) -> None:
        _require_nonnegative("gamma", self.gamma)
        if not (0.0 <= self.recovery <= 1.0):
            raise DomainError(f"recovery = {self.recovery:.6g} not in [0, 1]")
        if int(self.cycles) != self.cycles or self.cycles < 1:
            raise DomainError(f"cycles = {self.cycles!r} must be an integer >= 1")
        if len(self.t_table) != 6:
            raise DomainError("t_table must have exactly six entries")
        object.__setattr__(self, "t_table", tuple(float(t) for t in self.t_table))

    @property
    def effective_gamma(self) -> float:
        """Kernel constant with the per-cycle recovery weight folded in."""
        n = self.cycles
        return self.gamma * (self.recovery * (n - 1) + 1.0) / n


@dataclass(frozen=True)
class Loading:
    """Pulsating external load p(t) = p0 + p1*sin(omega1*t).

    omega is the response frequency; omega1 defaults to the principal
    parametric resonance 2*omega.  w0_target is the prescribed radial
    deflection amplitude used when inverting for the critical pulsation
    amplitude; p1 is only consulted when the action is assembled at a
    known amplitude (e.g. by the quadrature oracle).
    """

    p0: float = 0.0
    p1: float = 0.0
    omega: float = 100.0
    omega1: float | None = None
    w0_target: float = 1e-4

    def __post_init__(self) -> None:
        _require_positive("omega", self.omega)
        if self.omega1 is None:
            object.__setattr__(self, "omega1", 2.0 * self.omega)
        if abs(abs(self.omega1) - self.omega) <= 1e-12 * self.omega:
            raise DomainError(
                "omega1 must differ from +/-omega (removable singularity "
                "in the load time factor)"
            )
        _require_positive("w0_target", self.w0_target)
        if not math.isfinite(self.p0) or not math.isfinite(self.p1):
            raise DomainError("p0 and p1 must be finite")


@dataclass(frozen=True)
class ModeIndex:
    """Wave-number pair: n circumferential waves, m axial half-waves."""

    n: int
    m: int

    def __post_init__(self) -> None:
        if int(self.n) != self.n or self.n < 1:
            raise DomainError(f"n = {self.n!r} must be an integer >= 1")
        if int(self.m) != self.m or self.m < 1:
            raise DomainError(f"m = {self.m!r} must be an integer >= 1")

    def axial_wavenumber(self, length: float) -> float:
        """k = m*pi/length, the axial wavenumber of the half-wave ansatz."""
        return self.m * math.pi / length


@dataclass(frozen=True)
class ShellConfig:
    """Full problem statement for one solve."""

    geometry: ShellGeometry
    material: OrthotropicMaterial
    rods: tuple = ()
    rings: tuple = ()
    foundation: FoundationModel = field(default_factory=FoundationModel)
    damage: DamageModel = field(default_factory=DamageModel)
    loading: Loading = field(default_factory=Loading)

    def __post_init__(self) -> None:
        object.__setattr__(self, "rods", tuple(self.rods))
        object.__setattr__(self, "rings", tuple(self.rings))
        length = self.geometry.length
        last_phi = -1.0
        for rod in self.rods:
            for law in (rod.modulus, rod.shear, rod.density):
                if abs(law.span - length) > 1e-9 * length:
                    raise DomainError(
                        "rod property law span must equal the shell length"
                    )
            if rod.phi <= last_phi:
                raise DomainError("rod positions must be strictly increasing")
            last_phi = rod.phi
        last_x = 0.0
        for ring in self.rings:
            for law in (ring.modulus, ring.shear, ring.density):
                if abs(law.span - TWO_PI) > 1e-9 * TWO_PI:
                    raise DomainError("ring property law span must equal 2*pi")
            if not (last_x < ring.x < length):
                raise DomainError(
                    "ring positions must be strictly increasing interior "
                    "points of (0, length)"
                )
            last_x = ring.x


def uniform_rods(
    count: int,
    geometry: ShellGeometry,
    area: float,
    j_y: float,
    j_z: float,
    j_torsion: float,
    modulus_base: float,
    shear_base: float,
    density_base: float,
    modulus_slope: float = 0.0,
    shear_slope: float = 0.0,
    density_slope: float = 0.0,
) -> tuple:
    """count identical rods equally spaced in angle, phi_i = 2*pi*i/count."""
    if count < 0:
        raise DomainError("rod count must be >= 0")
    length = geometry.length
    rods = []
    for i in range(count):
        rods.append(
            RodStiffener(
                area=area,
                j_y=j_y,
                j_z=j_z,
                j_torsion=j_torsion,
                modulus=InhomogeneityLaw(modulus_base, modulus_slope, length),
                shear=InhomogeneityLaw(shear_base, shear_slope, length),
                density=InhomogeneityLaw(density_base, density_slope, length),
                phi=TWO_PI * i / count,
            )
        )
    return tuple(rods)


def uniform_rings(
    count: int,
    geometry: ShellGeometry,
    area: float,
    j_in_plane: float,
    j_out_of_plane: float,
    j_torsion: float,
    modulus_base: float,
    shear_base: float,
    density_base: float,
    modulus_slope: float = 0.0,
    shear_slope: float = 0.0,
    density_slope: float = 0.0,
) -> tuple:
    """count identical rings at interior points x_j = length*j/(count+1)."""
    if count < 0:
        raise DomainError("ring count must be >= 0")
    rings = []
    for j in range(1, count + 1):
        rings.append(
            RingStiffener(
                area=area,
                j_in_plane=j_in_plane,
                j_out_of_plane=j_out_of_plane,
                j_torsion=j_torsion,
                modulus=InhomogeneityLaw(modulus_base, modulus_slope, TWO_PI),
                shear=InhomogeneityLaw(shear_base, shear_slope, TWO_PI),
                density=InhomogeneityLaw(density_base, density_slope, TWO_PI),
                x=geometry.length * j / (count + 1),
            )
        )
    return tuple(rings)
