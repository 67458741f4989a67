"""Assembly of the time-integrated action as a quadratic form in the
modal amplitudes (u0, theta0, w0) plus a linear load term.

Two independent paths are provided:

* ``assemble_closed_form`` evaluates the analytic expression obtained by
  substituting the half-wave ansatz into the shell, rod, ring, foundation
  and load functionals and integrating in closed form, plus the printed
  damage-correction blocks (scaled by the effective kernel constant).
* ``assemble_by_quadrature`` evaluates the same functionals by numerical
  quadrature in space and time for one amplitude vector; it is the oracle
  for the closed form in the undamaged sector.

Conventions: the quadratic form is stored symmetric with diagonal entries
equal to the squared-monomial coefficients and off-diagonal entries equal
to half the mixed-monomial coefficients, so stationarity reads
``L q = (0, 0, phi_star)`` with ``phi_star = -(linear w0 coefficient)/2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .damage import damage_modulation
from .errors import DomainError, QuadratureConvergenceError
from .model import FoundationModel, ModeIndex, ShellConfig, ShellGeometry
from .model import stiffness_coefficients
from .quadrature import ring_profile_integrals, rod_profile_integrals

# Sign with which the external-load work enters the stored action.  The
# positive orientation makes the critical amplitudes of the reference
# configuration come out positive for the excitable modes.
_LOAD_SIGN = 1.0


@dataclass(frozen=True)
class TimeFactors:
    """Time integrals of sin^2 and cos^2 of the response over [0, T]."""

    s_minus: float
    s_plus: float

    def __post_init__(self) -> None:
        if self.s_minus < -1e-15 or self.s_plus < -1e-15:
            raise DomainError("time factors must be non-negative")


def time_factors(omega: float, t_char: float) -> TimeFactors:
    """s_minus = T/2 - sin(2 w T)/(4 w), s_plus = T/2 + sin(2 w T)/(4 w)."""
    if not omega > 0.0:
        raise DomainError(f"omega = {omega!r} must be > 0")
    if t_char < 0.0:
        raise DomainError(f"t_char = {t_char!r} must be >= 0")
    osc = math.sin(2.0 * omega * t_char) / (4.0 * omega)
    return TimeFactors(s_minus=0.5 * t_char - osc, s_plus=0.5 * t_char + osc)


def cos_kl_minus_one(m: int) -> float:
    """cos(k l) - 1 for k = m*pi/l: exactly 0 for even m, -2 for odd m."""
    return 0.0 if m % 2 == 0 else -2.0

_SIN_QUARTER = (0.0, math.sqrt(0.5), 1.0, math.sqrt(0.5),
                0.0, -math.sqrt(0.5), -1.0, -math.sqrt(0.5))


def sin_quarter_wave(n: int) -> float:
    """sin(n*pi/4), exact (in particular exactly 0 for n = 0 mod 4)."""
    return _SIN_QUARTER[n % 8]


@dataclass(frozen=True)
class MediumTimeBlock:
    """Hereditary-medium contribution to the w0^2 coefficient."""

    value: float


def _hereditary_double_integral(omega: float, psi: float, t_char: float) -> float:
    """Closed form of I = int_0^T sin(w t) int_0^t e^(-psi (t-tau)) sin(w tau) dtau dt.

    Continuous at psi = 0; derived from the exact inner convolution
    (psi sin(w t) - w cos(w t) + w e^(-psi t)) / (psi^2 + w^2).
    """
    w = omega
    denom = psi * psi + w * w
    tf = time_factors(w, t_char)
    tail = w * (w - math.exp(-psi * t_char)
                * (psi * math.sin(w * t_char) + w * math.cos(w * t_char))) / denom
    return (psi * tf.s_minus - 0.5 * math.sin(w * t_char) ** 2 + tail) / denom


def medium_time_block(
    foundation: FoundationModel,
    omega: float,
    t_char: float,
    geom: ShellGeometry,
) -> MediumTimeBlock:
    """Time-integrated hereditary medium coefficient of w0^2.

    Zero whenever the kernel amplitude vanishes; finite for any decay >= 0.
    """
    amp = foundation.kernel_amplitude
    if amp == 0.0:
        return MediumTimeBlock(0.0)
    d = _hereditary_double_integral(omega, foundation.kernel_decay, t_char)
    return MediumTimeBlock(
        -0.5 * math.pi * geom.length * geom.radius * amp * d
    )


def _load_time_bracket(loading, t_char: float) -> tuple[float, float]:
    """Time integrals multiplying p0 and p1 in the load work."""
    w, w1 = loading.omega, loading.omega1
    f0 = (1.0 - math.cos(w * t_char)) / w
    wd, ws = w - w1, w + w1
    f1 = math.sin(wd * t_char) / (2.0 * wd) - math.sin(ws * t_char) / (2.0 * ws)
    return f0, f1


def load_linear_coefficient(
    config: ShellConfig, mode: ModeIndex, t_char: float
) -> float:
    """Coefficient of the linear w0 term of the action."""
    geom = config.geometry
    n = mode.n
    k = mode.axial_wavenumber(geom.length)
    shape = cos_kl_minus_one(mode.m) * sin_quarter_wave(n)
    if shape == 0.0:
        return 0.0
    f0, f1 = _load_time_bracket(config.loading, t_char)
    return (
        _LOAD_SIGN
        * (4.0 * geom.radius / (n * k))
        * shape
        * (config.loading.p0 * f0 + config.loading.p1 * f1)
    )


@dataclass(frozen=True)
class ActionQuadraticForm:
    """Symmetric quadratic form of the action plus the load functional."""

    l11: float
    l12: float
    l13: float
    l22: float
    l23: float
    l33: float
    phi_star: float

    def matrix(self) -> np.ndarray:
        return np.array(
            [
                [self.l11, self.l12, self.l13],
                [self.l12, self.l22, self.l23],
                [self.l13, self.l23, self.l33],
            ]
        )

    def rhs(self) -> np.ndarray:
        return np.array([0.0, 0.0, self.phi_star])

    def energy(self, u0: float, th0: float, w0: float) -> float:
        """Scalar action value at the given amplitudes."""
        return (
            self.l11 * u0 * u0
            + self.l22 * th0 * th0
            + self.l33 * w0 * w0
            + 2.0 * (self.l12 * u0 * th0 + self.l13 * u0 * w0 + self.l23 * th0 * w0)
            - 2.0 * self.phi_star * w0
        )


def assemble_closed_form(
    config: ShellConfig, mode: ModeIndex, t_char: float
) -> ActionQuadraticForm:
    """Closed-form assembly of the action quadratic form for one mode."""
    geom, mat = config.geometry, config.material
    big_r, length, h = geom.radius, geom.length, geom.thickness
    b = stiffness_coefficients(mat)
    n = mode.n
    k = mode.axial_wavenumber(length)
    omega = config.loading.omega
    tf = time_factors(omega, t_char)
    sm, sp = tf.s_minus, tf.s_plus
    r2 = big_r * big_r

    c_uu = c_vv = c_ww = c_uv = c_uw = c_vw = 0.0

    # shell wall: membrane + bending, then the inertia diagonal
    csh = 0.25 * math.pi * length * r2 * sm
    c_uu += csh * h * (b.b11 * k * k + b.b66 * n * n / r2)
    c_vv += csh * h * (b.b22 * n * n / r2 + b.b66 * k * k)
    c_ww += csh * (
        h * b.b22 / r2
        + (h ** 3 / 12.0)
        * (
            b.b11 * k ** 4
            + 2.0 * b.b12 * k * k * n * n / r2
            + b.b22 * n ** 4 / (r2 * r2)
            + 4.0 * b.b66 * n * n * k * k / r2
        )
    )
    c_uv += csh * (-2.0 * h * k * n * (b.b12 + b.b66) / big_r)
    c_uw += csh * (2.0 * h * b.b12 * k / big_r)
    c_vw += csh * (-2.0 * h * b.b22 * n / r2)

    inertia = mat.rho0 * h * 0.5 * math.pi * omega * omega * length * sp
    c_uu += inertia
    c_vv += inertia
    c_ww += inertia

    # hereditary damage corrections, kept in their printed grouping with
    # the auxiliary coefficient table in its slots
    gamma_eff = config.damage.effective_gamma
    if gamma_eff > 0.0:
        fmod = damage_modulation(omega, t_char, config.damage.rheologic)
        t1, t2, t3, t4, t5, t6 = config.damage.t_table
        pref = 0.25 * math.pi * length * h * r2 * gamma_eff * fmod / omega
        h3_16 = h ** 3 / 16.0
        c_uu += pref * t1 * (h3_16 - h)
        c_vv += pref * t2 * (h3_16 - h)
        c_ww += pref * (
            -h * (t3 - t4 - h ** 3 * n * n * k * k * b.b66 / (4.0 * r2))
            + h3_16 * (t3 + t4 + 4.0 * h ** 3 * n * n * k * k * b.b66 / (9.0 * r2))
        )
        c_uv += pref * (
            2.0 * n * k / big_r * h * h * (b.b11 * b.b12 + b.b11 * b.b22)
            - (h ** 4 / 16.0)
            * (2.0 * n * k / big_r)
            * (b.b11 * b.b12 + b.b12 * b.b22 + b.b66 * b.b66)
        )
        c_uw += pref * (
            -(2.0 * n * h * h / big_r)
            * (b.b12 * t3 + b.b22 * t4 + h * k * k * b.b66 * b.b66 / (2.0 * big_r))
            + (n * h ** 4 / (8.0 * big_r)) * (b.b12 * t5 + b.b22 * t6)
        )

    # longitudinal rods
    wplus = omega * omega * sp
    for rod in config.rods:
        ri = rod_profile_integrals(rod, geom, mode)
        s2 = math.sin(n * rod.phi) ** 2
        c2 = math.cos(n * rod.phi) ** 2
        c_uu += sm * 0.5 * rod.area * k * k * ri.i2 * c2
        c_uu += wplus * rod.area * ri.i4 * c2
        c_vv += sm * 0.5 * rod.j_z * k ** 4 * ri.i2 * s2
        c_vv += wplus * rod.area * ri.i5 * s2
        c_ww += sm * (
            0.5 * rod.j_y * k ** 4 * ri.i2 * c2
            + 0.5 * rod.j_torsion * n * n * k * k * ri.i3_cos * s2 / r2
        )
        c_ww += wplus * (
            rod.area * ri.i5 * c2 + rod.j_torsion * n * n * ri.i5 * s2 / r2
        )

    # circumferential rings
    for ring in config.rings:
        gi = ring_profile_integrals(ring, mode)
        s2x = math.sin(k * ring.x) ** 2
        c2x = math.cos(k * ring.x) ** 2
        # extension of the ring centreline
        c_vv += sm * ring.area * n * n * gi.i6 / (2.0 * big_r) * s2x
        c_ww += sm * ring.area * gi.i6 / (2.0 * big_r) * s2x
        c_vw += sm * (-n * ring.area * gi.i6 / big_r) * s2x
        # bending in the ring plane
        c_ww += sm * ring.j_in_plane * (n * n - 1.0) ** 2 * gi.i6 / (
            2.0 * big_r ** 3
        ) * s2x
        # bending out of the ring plane and torsion
        c_uu += sm * (
            ring.j_out_of_plane * n ** 4 * gi.i6
            + ring.j_torsion * n * n * gi.i9
        ) / (2.0 * big_r ** 3) * c2x
        c_ww += sm * (
            ring.j_out_of_plane * k * k * gi.i6
            + ring.j_torsion * n * n * k * k * gi.i9
        ) / (2.0 * big_r) * c2x
        c_uw += sm * (
            ring.j_out_of_plane * n * n * k * gi.i6
            + ring.j_torsion * n * n * k * gi.i9
        ) / r2 * c2x
        # ring inertia (incl. torsional)
        c_uu += wplus * big_r * ring.area * gi.i7 * c2x
        c_vv += wplus * big_r * ring.area * gi.i8 * s2x
        c_ww += wplus * big_r * (
            ring.area * gi.i7 * s2x + ring.j_torsion * k * k * gi.i7 * c2x
        )

    # foundation: static springs plus hereditary medium
    fnd = config.foundation
    static = fnd.winkler + fnd.pasternak * (k * k + n * n / r2)
    c_ww += sm * 0.5 * math.pi * big_r * length * static
    c_ww += medium_time_block(fnd, omega, t_char, geom).value

    # pulsating load, linear in w0
    c_w = load_linear_coefficient(config, mode, t_char)

    return ActionQuadraticForm(
        l11=c_uu,
        l12=0.5 * c_uv,
        l13=0.5 * c_uw,
        l22=c_vv,
        l23=0.5 * c_vw,
        l33=c_ww,
        phi_star=-0.5 * c_w,
    )


def _gauss_panels(a: float, b: float, panels: int, order: int = 12):
    """Composite Gauss-Legendre nodes and weights on [a, b]."""
    nodes, weights = np.polynomial.legendre.leggauss(order)
    edges = np.linspace(a, b, panels + 1)
    mid = 0.5 * (edges[:-1] + edges[1:])
    half = 0.5 * (edges[1:] - edges[:-1])
    x = (mid[:, None] + half[:, None] * nodes[None, :]).ravel()
    w = (half[:, None] * weights[None, :]).ravel()
    return x, w


def _quadrature_action_value(
    config: ShellConfig,
    mode: ModeIndex,
    t_char: float,
    amps,
    refine: int,
) -> float:
    """One resolution level of the space-time quadrature of the action."""
    geom, mat = config.geometry, config.material
    big_r, length, h = geom.radius, geom.length, geom.thickness
    b = stiffness_coefficients(mat)
    n, m = mode.n, mode.m
    k = mode.axial_wavenumber(length)
    omega = config.loading.omega
    u0, v0, w0 = float(amps[0]), float(amps[1]), float(amps[2])
    r2 = big_r * big_r

    px = refine * max(4, 2 * m)
    pp = refine * max(6, 2 * n + 2)
    pt = refine * max(6, int(math.ceil(omega * t_char / math.pi)) * 3)

    x, wx = _gauss_panels(0.0, length, px)
    ph, wph = _gauss_panels(0.0, 2.0 * math.pi, pp)
    t, wt = _gauss_panels(0.0, t_char, pt)

    cx, sx = np.cos(k * x), np.sin(k * x)
    cp, sp_ = np.cos(n * ph), np.sin(n * ph)

    def quad2(fx, fp):
        return float((wx * fx).sum() * (wph * fp).sum())

    # shell: spatial integrals of the squared strain/curvature patterns
    e11 = -k * u0  # * cp * sx
    e22 = (n * v0 - w0) / big_r  # * cp * sx
    e12 = k * v0 - n * u0 / big_r  # * sp * cx
    x11 = -k * k * w0  # * cp * sx
    x22 = -(n * n / r2) * w0  # * cp * sx
    x12 = 2.0 * n * k / big_r * w0  # * sp * cx

    int_cs = quad2(sx * sx, cp * cp)  # (cp*sx)^2
    int_sc = quad2(cx * cx, sp_ * sp_)  # (sp*cx)^2
    shell_strain = 0.5 * r2 * (
        h
        * (
            b.b11 * e11 * e11 * int_cs
            + 2.0 * b.b12 * e11 * e22 * int_cs
            + b.b22 * e22 * e22 * int_cs
            + b.b66 * e12 * e12 * int_sc
        )
        + (h ** 3 / 12.0)
        * (
            b.b11 * x11 * x11 * int_cs
            + 2.0 * b.b12 * x11 * x22 * int_cs
            + b.b22 * x22 * x22 * int_cs
            + b.b66 * x12 * x12 * int_sc
        )
    )
    shell_kin = mat.rho0 * h * (
        u0 * u0 * quad2(cx * cx, cp * cp)
        + v0 * v0 * quad2(sx * sx, sp_ * sp_)
        + w0 * w0 * int_cs
    )

    rod_strain = rod_kin = 0.0
    for rod in config.rods:
        e_x = rod.modulus.value(x)
        g_x = rod.shear.value(x)
        r_x = rod.density.value(x)
        cni, sni = math.cos(n * rod.phi), math.sin(n * rod.phi)
        du = -k * u0 * cni * sx
        d2w = -k * k * w0 * cni * sx
        d2v = -k * k * v0 * sni * sx
        dtw = -(n * k / big_r) * w0 * sni * cx  # d/dx of the twist angle
        rod_strain += 0.5 * float(
            (
                wx
                * (
                    e_x * rod.area * du * du
                    + e_x * rod.j_y * d2w * d2w
                    + e_x * rod.j_z * d2v * d2v
                    + g_x * rod.j_torsion * dtw * dtw
                )
            ).sum()
        )
        ui = u0 * cni * cx
        vi = v0 * sni * sx
        wi = w0 * cni * sx
        tw = -(n / big_r) * w0 * sni * sx
        rod_kin += float(
            (
                wx
                * r_x
                * (
                    rod.area * (ui * ui + vi * vi + wi * wi)
                    + rod.j_torsion * tw * tw
                )
            ).sum()
        )

    ring_strain = ring_kin = 0.0
    for ring in config.rings:
        e_p = ring.modulus.value(ph)
        g_p = ring.shear.value(ph)
        r_p = ring.density.value(ph)
        sxj, cxj = math.sin(k * ring.x), math.cos(k * ring.x)
        ext = (n * v0 - w0) / big_r * cp * sxj
        bend_in = (1.0 - n * n) * w0 / r2 * cp * sxj
        bend_out = -(n * n * u0 / r2 + k * w0 / big_r) * cp * cxj
        twist = -(n * k * w0 / big_r + n * u0 / r2) * sp_ * cxj
        ring_strain += 0.5 * big_r * float(
            (
                wph
                * (
                    e_p * ring.area * ext * ext
                    + e_p * ring.j_in_plane * bend_in * bend_in
                    + e_p * ring.j_out_of_plane * bend_out * bend_out
                    + g_p * ring.j_torsion * twist * twist
                )
            ).sum()
        )
        uj = u0 * cp * cxj
        vj = v0 * sp_ * sxj
        wj = w0 * cp * sxj
        twj = k * w0 * cp * cxj
        ring_kin += big_r * float(
            (
                wph
                * r_p
                * (
                    ring.area * (uj * uj + vj * vj + wj * wj)
                    + ring.j_torsion * twj * twj
                )
            ).sum()
        )

    fnd = config.foundation
    w_pat2 = w0 * w0 * int_cs
    found_static = big_r * (
        fnd.winkler + fnd.pasternak * (k * k + n * n / r2)
    ) * w_pat2

    # load work over the [0, pi/4] quadrant with the printed factor 4
    phq, wphq = _gauss_panels(0.0, 0.25 * math.pi, max(2, refine * max(2, n)))
    s_load = float((wx * sx).sum() * (wphq * np.cos(n * phq)).sum())

    # hereditary inner convolution at every time node
    amp = fnd.kernel_amplitude
    if amp > 0.0:
        gl_n, gl_w = np.polynomial.legendre.leggauss(24 * refine)
        tau = 0.5 * t[:, None] * (gl_n[None, :] + 1.0)
        dw = 0.5 * t[:, None] * gl_w[None, :]
        psi = fnd.kernel_decay
        inner = (dw * np.exp(-psi * (t[:, None] - tau)) * np.sin(omega * tau)).sum(
            axis=1
        )
    else:
        inner = np.zeros_like(t)

    st = np.sin(omega * t)
    ct = np.cos(omega * t)
    p_t = config.loading.p0 + config.loading.p1 * np.sin(config.loading.omega1 * t)
    j_t = (
        (shell_strain + rod_strain + ring_strain + found_static) * st * st
        + (shell_kin + rod_kin + ring_kin) * omega * omega * ct * ct
        - big_r * amp * inner * st * w_pat2
        + _LOAD_SIGN * (-4.0 * big_r) * p_t * w0 * s_load * st
    )
    return float((wt * j_t).sum())


def assemble_by_quadrature(
    config: ShellConfig,
    mode: ModeIndex,
    t_char: float,
    amplitudes,
    rel_tol: float = 1e-9,
) -> float:
    """Scalar action value by space-time quadrature (undamaged sector).

    Evaluates the energy functionals with the ansatz substituted, on a
    composite Gauss grid, and repeats at double resolution as a convergence
    check.  The hereditary damage corrections (pure kernel-constant
    scalings of the closed form) are outside this oracle's sector.
    """
    amps = (
        (amplitudes.u0, amplitudes.theta0, amplitudes.w0)
        if hasattr(amplitudes, "u0")
        else tuple(amplitudes)
    )
    coarse = _quadrature_action_value(config, mode, t_char, amps, refine=1)
    fine = _quadrature_action_value(config, mode, t_char, amps, refine=2)
    scale = max(abs(coarse), abs(fine), 1e-30)
    if abs(fine - coarse) > max(rel_tol * scale, 1e-20):
        raise QuadratureConvergenceError(
            f"action quadrature did not converge: {coarse!r} vs {fine!r}"
        )
    return fine
