"""Hereditary damage bookkeeping: active loading intervals, the
characteristic time bounding the action integral, and the damage
modulation function."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class ActiveIntervals:
    """Ordered disjoint time windows during which stress grows damage."""

    intervals: tuple

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "intervals", tuple((float(a), float(b)) for a, b in self.intervals)
        )
        prev_hi = -math.inf
        for lo, hi in self.intervals:
            if not lo < hi:
                raise DomainError(f"degenerate interval ({lo}, {hi})")
            if lo <= prev_hi:
                raise DomainError("intervals must be strictly ordered and disjoint")
            prev_hi = hi

    def __iter__(self):
        return iter(self.intervals)

    def __len__(self) -> int:
        return len(self.intervals)

    @property
    def supremum(self) -> float:
        return self.intervals[-1][1]


def active_intervals(omega: float, cycles: int) -> ActiveIntervals:
    """The cycles active windows [(pi/2 + 2*pi*k)/omega, (3*pi/2 + 2*pi*k)/omega]."""
    if not omega > 0.0:
        raise DomainError(f"omega = {omega!r} must be > 0")
    if int(cycles) != cycles or cycles < 1:
        raise DomainError(f"cycles = {cycles!r} must be an integer >= 1")
    return ActiveIntervals(
        tuple(
            (
                (0.5 * math.pi + 2.0 * math.pi * k) / omega,
                (1.5 * math.pi + 2.0 * math.pi * k) / omega,
            )
            for k in range(cycles)
        )
    )


def characteristic_time(omega: float, cycles: int) -> float:
    """Upper end of the last active interval, the greatest active time."""
    if not omega > 0.0:
        raise DomainError(f"omega = {omega!r} must be > 0")
    if int(cycles) != cycles or cycles < 1:
        raise DomainError(f"cycles = {cycles!r} must be an integer >= 1")
    return (1.5 * math.pi + 2.0 * math.pi * (cycles - 1)) / omega


def damage_modulation(omega: float, t_char: float, rheologic: float) -> float:
    """Damage modulation factor
    (sin^2(omega*T) + 4*rheologic*sin^2(omega*T/2)) / (2*omega)."""
    if not omega > 0.0:
        raise DomainError(f"omega = {omega!r} must be > 0")
    if t_char < 0.0:
        raise DomainError(f"t_char = {t_char!r} must be >= 0")
    wt = omega * t_char
    return (math.sin(wt) ** 2 + 4.0 * rheologic * math.sin(0.5 * wt) ** 2) / (
        2.0 * omega
    )
