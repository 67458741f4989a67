"""Run-configuration documents: a sectioned, human-writable key-value
format with explicit unit suffixes, converted to SI at parse time.

Unknown sections or keys are rejected, every embedded model invariant is
re-validated on load, and a parsed configuration can be echoed back to a
canonical SI document that round-trips exactly.
"""

from __future__ import annotations

import configparser
import io
import math
from dataclasses import dataclass, field, replace

from .errors import ConfigError, ParamShellError
from .model import (
    DamageModel,
    FoundationModel,
    Loading,
    OrthotropicMaterial,
    ShellConfig,
    ShellGeometry,
    uniform_rings,
    uniform_rods,
)

_UNITS = {
    "length": {"m": 1.0, "mm": 1e-3, "cm": 1e-2},
    "pressure": {"Pa": 1.0, "kPa": 1e3, "MPa": 1e6, "GPa": 1e9, "N/m2": 1.0},
    "density": {"kg/m3": 1.0, "g/cm3": 1e3},
    "area": {"m2": 1.0, "mm2": 1e-6, "cm2": 1e-4},
    "inertia": {"m4": 1.0, "mm4": 1e-12, "cm4": 1e-8},
    "frequency": {"rad/s": 1.0},
    "winkler": {"N/m3": 1.0},
    "pasternak": {"N/m": 1.0},
    "plain": {},
}

_SI_UNIT = {
    "length": "m",
    "pressure": "Pa",
    "density": "kg/m3",
    "area": "m2",
    "inertia": "m4",
    "frequency": "rad/s",
    "winkler": "N/m3",
    "pasternak": "N/m",
    "plain": None,
}

_STIFFENER_KEYS = {
    "count": "int",
    "area": "area",
    "j_torsion": "inertia",
    "modulus": "pressure",
    "modulus_slope": "plain",
    "shear_modulus": "pressure",
    "shear_slope": "plain",
    "density": "density",
    "density_slope": "plain",
}

_SCHEMA = {
    "geometry": {
        "radius": "length",
        "length": "length",
        "thickness": "length",
    },
    "material": {
        "e1": "pressure",
        "e2": "pressure",  # also accepts the literal "auto"
        "nu1": "plain",
        "nu2": "plain",
        "shear_modulus": "pressure",
        "density": "density",
    },
    "rods": dict(_STIFFENER_KEYS, j_y="inertia", j_z="inertia"),
    "rings": dict(
        _STIFFENER_KEYS, j_in_plane="inertia", j_out_of_plane="inertia"
    ),
    "foundation": {
        "winkler": "winkler",
        "pasternak": "pasternak",
        "kernel_amplitude": "plain",
        "kernel_decay": "plain",
    },
    "damage": {
        "gamma": "plain",
        "recovery": "plain",
        "rheologic": "plain",
        "cycles": "int",
        "t1": "plain",
        "t2": "plain",
        "t3": "plain",
        "t4": "plain",
        "t5": "plain",
        "t6": "plain",
    },
    "loading": {
        "p0": "pressure",
        "p1": "pressure",
        "omega": "frequency",
        "omega1": "frequency",
        "w0_target": "length",
    },
    "search": {"n_min": "int", "n_max": "int", "m_values": "intlist"},
    "sweep": {"parameter": "str", "values": "floatlist"},
    "output": {"csv": "str", "plot_script": "str"},
}

SWEEP_PARAMETERS = (
    "ring_count",
    "sigma",
    "tau",
    "modulus_ratio",
    "winkler",
    "pasternak",
    "gamma",
    "R_l",
)


def _parse_scalar(section: str, key: str, raw: str, kind: str) -> float:
    tokens = raw.split()
    if not tokens or len(tokens) > 2:
        raise ConfigError(f"{section}.{key}: cannot parse value {raw!r}")
    try:
        value = float(tokens[0])
    except ValueError as exc:
        raise ConfigError(f"{section}.{key}: not a number: {tokens[0]!r}") from exc
    if len(tokens) == 2:
        table = _UNITS.get(kind, {})
        if tokens[1] not in table:
            raise ConfigError(
                f"{section}.{key}: unit {tokens[1]!r} not valid for a "
                f"{kind} quantity (allowed: {sorted(table) or 'none'})"
            )
        value *= table[tokens[1]]
    if not math.isfinite(value):
        raise ConfigError(f"{section}.{key}: value must be finite")
    return value


def _parse_value(section: str, key: str, raw: str, kind: str):
    raw = raw.strip()
    if kind == "str":
        return raw
    if kind == "int":
        scalar = _parse_scalar(section, key, raw, "plain")
        if scalar != int(scalar):
            raise ConfigError(f"{section}.{key}: expected an integer")
        return int(scalar)
    if kind == "intlist":
        try:
            return tuple(int(tok) for tok in raw.split())
        except ValueError as exc:
            raise ConfigError(f"{section}.{key}: expected integers") from exc
    if kind == "floatlist":
        try:
            values = tuple(float(tok) for tok in raw.split())
        except ValueError as exc:
            raise ConfigError(f"{section}.{key}: expected numbers") from exc
        if not all(math.isfinite(v) for v in values):
            raise ConfigError(f"{section}.{key}: values must be finite")
        return values
    return _parse_scalar(section, key, raw, kind)


@dataclass(frozen=True)
class RodSpec:
    """Parameters of a uniformly spaced set of identical rods."""

    count: int
    area: float
    j_y: float
    j_z: float
    j_torsion: float
    modulus: float
    shear_modulus: float
    density: float
    modulus_slope: float = 0.0
    shear_slope: float = 0.0
    density_slope: float = 0.0


@dataclass(frozen=True)
class RingSpec:
    """Parameters of a uniformly spaced set of identical rings."""

    count: int
    area: float
    j_in_plane: float
    j_out_of_plane: float
    j_torsion: float
    modulus: float
    shear_modulus: float
    density: float
    modulus_slope: float = 0.0
    shear_slope: float = 0.0
    density_slope: float = 0.0


@dataclass(frozen=True)
class RunConfig:
    """Fully validated, SI-converted run description."""

    geometry: ShellGeometry
    material: OrthotropicMaterial
    rod_spec: RodSpec | None
    ring_spec: RingSpec | None
    foundation: FoundationModel
    damage: DamageModel
    loading: Loading
    n_min: int = 1
    n_max: int = 12
    m_values: tuple = (1, 3, 5, 7)
    sweep_param: str | None = None
    sweep_values: tuple = ()
    csv_path: str | None = None
    plot_path: str | None = None

    def __post_init__(self) -> None:
        if self.n_min < 1 or self.n_max < self.n_min:
            raise ConfigError("search.n_min/n_max must satisfy 1 <= n_min <= n_max")
        if not self.m_values or any(m < 1 for m in self.m_values):
            raise ConfigError("search.m_values must be a non-empty list of m >= 1")
        if self.sweep_param is not None:
            if self.sweep_param not in SWEEP_PARAMETERS:
                raise ConfigError(
                    f"sweep.parameter {self.sweep_param!r} not one of "
                    f"{SWEEP_PARAMETERS}"
                )
            if not self.sweep_values:
                raise ConfigError("sweep.values must be non-empty")

    def shell_config(self) -> ShellConfig:
        """Materialise the in-memory problem statement."""
        rods = ()
        if self.rod_spec is not None and self.rod_spec.count > 0:
            rs = self.rod_spec
            rods = uniform_rods(
                rs.count, self.geometry, rs.area, rs.j_y, rs.j_z, rs.j_torsion,
                rs.modulus, rs.shear_modulus, rs.density,
                rs.modulus_slope, rs.shear_slope, rs.density_slope,
            )
        rings = ()
        if self.ring_spec is not None and self.ring_spec.count > 0:
            gs = self.ring_spec
            rings = uniform_rings(
                gs.count, self.geometry, gs.area, gs.j_in_plane,
                gs.j_out_of_plane, gs.j_torsion,
                gs.modulus, gs.shear_modulus, gs.density,
                gs.modulus_slope, gs.shear_slope, gs.density_slope,
            )
        return ShellConfig(
            geometry=self.geometry,
            material=self.material,
            rods=rods,
            rings=rings,
            foundation=self.foundation,
            damage=self.damage,
            loading=self.loading,
        )

    def canonical_text(self) -> str:
        """Canonical SI echo of this configuration; parses back equal."""
        out = io.StringIO()

        def sec(name: str, pairs) -> None:
            out.write(f"[{name}]\n")
            for key, value in pairs:
                if value is None:
                    continue
                if isinstance(value, tuple):
                    out.write(f"{key} = {' '.join(repr(v) for v in value)}\n")
                elif isinstance(value, (int, str)):
                    out.write(f"{key} = {value}\n")
                else:
                    out.write(f"{key} = {value!r}\n")
            out.write("\n")

        g, m = self.geometry, self.material
        sec("geometry", [("radius", g.radius), ("length", g.length),
                         ("thickness", g.thickness)])
        sec("material", [("e1", m.e1), ("e2", m.e2), ("nu1", m.nu1),
                         ("nu2", m.nu2), ("shear_modulus", m.g),
                         ("density", m.rho0)])
        for name, spec in (("rods", self.rod_spec), ("rings", self.ring_spec)):
            if spec is None:
                continue
            pairs = [("count", spec.count), ("area", spec.area)]
            if name == "rods":
                pairs += [("j_y", spec.j_y), ("j_z", spec.j_z)]
            else:
                pairs += [("j_in_plane", spec.j_in_plane),
                          ("j_out_of_plane", spec.j_out_of_plane)]
            pairs += [
                ("j_torsion", spec.j_torsion),
                ("modulus", spec.modulus),
                ("modulus_slope", spec.modulus_slope),
                ("shear_modulus", spec.shear_modulus),
                ("shear_slope", spec.shear_slope),
                ("density", spec.density),
                ("density_slope", spec.density_slope),
            ]
            sec(name, pairs)
        f = self.foundation
        sec("foundation", [("winkler", f.winkler), ("pasternak", f.pasternak),
                           ("kernel_amplitude", f.kernel_amplitude),
                           ("kernel_decay", f.kernel_decay)])
        d = self.damage
        sec("damage", [("gamma", d.gamma), ("recovery", d.recovery),
                       ("rheologic", d.rheologic), ("cycles", d.cycles)]
            + [(f"t{i+1}", d.t_table[i]) for i in range(6)])
        ld = self.loading
        sec("loading", [("p0", ld.p0), ("p1", ld.p1), ("omega", ld.omega),
                        ("omega1", ld.omega1), ("w0_target", ld.w0_target)])
        sec("search", [("n_min", self.n_min), ("n_max", self.n_max),
                       ("m_values", self.m_values)])
        if self.sweep_param is not None:
            sec("sweep", [("parameter", self.sweep_param),
                          ("values", self.sweep_values)])
        if self.csv_path is not None or self.plot_path is not None:
            sec("output", [("csv", self.csv_path),
                           ("plot_script", self.plot_path)])
        return out.getvalue()


def _section_dict(parser, section: str) -> dict:
    """Parsed, SI-converted values of a section; rejects unknown keys."""
    schema = _SCHEMA[section]
    values = {}
    for key, raw in parser.items(section):
        if key not in schema:
            raise ConfigError(f"unknown key {key!r} in section [{section}]")
        if section == "material" and key == "e2" and raw.strip() == "auto":
            values[key] = "auto"
            continue
        values[key] = _parse_value(section, key, raw, schema[key])
    return values


def _require(section: str, values: dict, key: str):
    if key not in values:
        raise ConfigError(f"missing required key {key!r} in section [{section}]")
    return values[key]


def parse_config(text: str) -> RunConfig:
    """Parse and validate a configuration document."""
    parser = configparser.ConfigParser(interpolation=None, strict=True)
    parser.optionxform = str  # keys are case-sensitive
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise ConfigError(f"cannot parse configuration: {exc}") from exc

    for section in parser.sections():
        if section not in _SCHEMA:
            raise ConfigError(f"unknown section [{section}]")
    for section in ("geometry", "material"):
        if not parser.has_section(section):
            raise ConfigError(f"missing required section [{section}]")

    try:
        geo = _section_dict(parser, "geometry")
        geometry = ShellGeometry(
            radius=_require("geometry", geo, "radius"),
            length=_require("geometry", geo, "length"),
            thickness=_require("geometry", geo, "thickness"),
        )

        mat = _section_dict(parser, "material")
        e1 = _require("material", mat, "e1")
        nu1 = _require("material", mat, "nu1")
        nu2 = _require("material", mat, "nu2")
        e2 = mat.get("e2", "auto")
        if e2 == "auto":
            if nu1 == 0.0:
                raise ConfigError("material.e2 = auto requires nu1 != 0")
            e2 = nu2 * e1 / nu1
        material = OrthotropicMaterial(
            e1=e1, e2=e2, nu1=nu1, nu2=nu2,
            g=_require("material", mat, "shear_modulus"),
            rho0=_require("material", mat, "density"),
        )

        rod_spec = None
        if parser.has_section("rods"):
            rd = _section_dict(parser, "rods")
            rod_spec = RodSpec(
                count=_require("rods", rd, "count"),
                area=_require("rods", rd, "area"),
                j_y=_require("rods", rd, "j_y"),
                j_z=_require("rods", rd, "j_z"),
                j_torsion=_require("rods", rd, "j_torsion"),
                modulus=_require("rods", rd, "modulus"),
                shear_modulus=_require("rods", rd, "shear_modulus"),
                density=_require("rods", rd, "density"),
                modulus_slope=rd.get("modulus_slope", 0.0),
                shear_slope=rd.get("shear_slope", 0.0),
                density_slope=rd.get("density_slope", 0.0),
            )
        ring_spec = None
        if parser.has_section("rings"):
            rg = _section_dict(parser, "rings")
            ring_spec = RingSpec(
                count=_require("rings", rg, "count"),
                area=_require("rings", rg, "area"),
                j_in_plane=_require("rings", rg, "j_in_plane"),
                j_out_of_plane=_require("rings", rg, "j_out_of_plane"),
                j_torsion=_require("rings", rg, "j_torsion"),
                modulus=_require("rings", rg, "modulus"),
                shear_modulus=_require("rings", rg, "shear_modulus"),
                density=_require("rings", rg, "density"),
                modulus_slope=rg.get("modulus_slope", 0.0),
                shear_slope=rg.get("shear_slope", 0.0),
                density_slope=rg.get("density_slope", 0.0),
            )

        fnd = (_section_dict(parser, "foundation")
               if parser.has_section("foundation") else {})
        foundation = FoundationModel(
            winkler=fnd.get("winkler", 0.0),
            pasternak=fnd.get("pasternak", 0.0),
            kernel_amplitude=fnd.get("kernel_amplitude", 0.0),
            kernel_decay=fnd.get("kernel_decay", 0.0),
        )

        dmg = (_section_dict(parser, "damage")
               if parser.has_section("damage") else {})
        damage = DamageModel(
            gamma=dmg.get("gamma", 0.0),
            recovery=dmg.get("recovery", 1.0),
            rheologic=dmg.get("rheologic", 0.0),
            cycles=dmg.get("cycles", 1),
            t_table=tuple(dmg.get(f"t{i+1}", 0.0) for i in range(6)),
        )

        lod = (_section_dict(parser, "loading")
               if parser.has_section("loading") else {})
        loading = Loading(
            p0=lod.get("p0", 0.0),
            p1=lod.get("p1", 0.0),
            omega=lod.get("omega", 100.0),
            omega1=lod.get("omega1", None),
            w0_target=lod.get("w0_target", 1e-4),
        )

        sch = (_section_dict(parser, "search")
               if parser.has_section("search") else {})
        swp = (_section_dict(parser, "sweep")
               if parser.has_section("sweep") else {})
        outp = (_section_dict(parser, "output")
                if parser.has_section("output") else {})

        run = RunConfig(
            geometry=geometry,
            material=material,
            rod_spec=rod_spec,
            ring_spec=ring_spec,
            foundation=foundation,
            damage=damage,
            loading=loading,
            n_min=sch.get("n_min", 1),
            n_max=sch.get("n_max", 12),
            m_values=tuple(sch.get("m_values", (1, 3, 5, 7))),
            sweep_param=swp.get("parameter"),
            sweep_values=tuple(swp.get("values", ())),
            csv_path=outp.get("csv"),
            plot_path=outp.get("plot_script"),
        )
        run.shell_config()  # re-validate every embedded invariant now
        return run
    except ConfigError:
        raise
    except ParamShellError as exc:
        raise ConfigError(f"invalid configuration: {exc}") from exc


def apply_sweep(run: RunConfig, param: str, value: float) -> RunConfig:
    """A copy of the configuration with one sweep parameter overridden."""
    if param == "ring_count":
        if run.ring_spec is None:
            raise ConfigError("ring_count sweep requires a [rings] section")
        if value != int(value) or value < 0:
            raise ConfigError(f"ring_count sweep value {value!r} invalid")
        return replace(run, ring_spec=replace(run.ring_spec, count=int(value)))
    if param == "sigma":
        updates = {}
        if run.ring_spec is not None:
            updates["ring_spec"] = replace(run.ring_spec, modulus_slope=value)
        if run.rod_spec is not None:
            updates["rod_spec"] = replace(run.rod_spec, modulus_slope=value)
        if not updates:
            raise ConfigError("sigma sweep requires rods or rings")
        return replace(run, **updates)
    if param == "tau":
        updates = {}
        if run.ring_spec is not None:
            updates["ring_spec"] = replace(run.ring_spec, density_slope=value)
        if run.rod_spec is not None:
            updates["rod_spec"] = replace(run.rod_spec, density_slope=value)
        if not updates:
            raise ConfigError("tau sweep requires rods or rings")
        return replace(run, **updates)
    if param == "modulus_ratio":
        if value <= 0.0:
            raise ConfigError("modulus_ratio must be > 0")
        m = run.material
        # hold e2 and nu1, move e1; nu2 follows from reciprocity
        e1 = value * m.e2
        nu2 = m.nu1 * m.e2 / e1
        return replace(
            run, material=replace(m, e1=e1, nu2=nu2)
        )
    if param == "winkler":
        return replace(run, foundation=replace(run.foundation, winkler=value))
    if param == "pasternak":
        return replace(run, foundation=replace(run.foundation, pasternak=value))
    if param == "gamma":
        return replace(run, damage=replace(run.damage, gamma=value))
    if param == "R_l":
        return replace(run, damage=replace(run.damage, rheologic=value))
    raise ConfigError(f"unknown sweep parameter {param!r}")
