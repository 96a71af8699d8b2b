"""Experiment configuration: the Scenario record and its JSON form.

A scenario is a single JSON object; every field is optional and defaults to
the baseline setup below.  Unknown keys are rejected outright so that a
typo cannot silently fall back to a default.

    {
      "na": 16, "nr": 50,
      "alice_spacing_wavelengths": 0.5, "irs_spacing_wavelengths": 0.5,
      "pt_dbm": 25.0, "noise_dbm": -20.0,
      "alpha": 0.6, "d0_m": 1.0,
      "alice": [0.0, 0.0], "bob": [20.0, 0.0],
      "irs": [20.0, -15.0], "eve": [30.0, 20.0],
      "path_loss_combine": "sum-distance",
      "an_mode": "expected",
      "seed": 0, "mc_samples": 1000
    }
"""

import json
import math
from dataclasses import dataclass, fields

from .arrays import ArraySpec
from .geometry import PATH_LOSS_RULES, GeometryError, Position
from .secrecy import AN_MODES


class ConfigError(ValueError):
    """Raised for malformed or out-of-range configuration input."""


@dataclass(frozen=True)
class Scenario:
    """Complete description of one experiment."""

    na: int = 16
    nr: int = 50
    alice_spacing_wavelengths: float = 0.5
    irs_spacing_wavelengths: float = 0.5
    pt_dbm: float = 25.0
    noise_dbm: float = -20.0
    alpha: float = 0.6
    d0_m: float = 1.0
    alice: Position = Position(0.0, 0.0)
    bob: Position = Position(20.0, 0.0)
    irs: Position = Position(20.0, -15.0)
    eve: Position = Position(30.0, 20.0)
    path_loss_combine: str = "sum-distance"
    an_mode: str = "expected"
    seed: int = 0
    mc_samples: int = 1000

    def __post_init__(self):
        if self.na < 2:
            raise ConfigError(f"na must be at least 2 (noise projection needs it), got {self.na}")
        if self.nr < 1:
            raise ConfigError(f"nr must be at least 1, got {self.nr}")
        for name in ("alice_spacing_wavelengths", "irs_spacing_wavelengths", "d0_m"):
            value = getattr(self, name)
            if not (value > 0.0 and math.isfinite(value)):
                raise ConfigError(f"{name} must be positive and finite, got {value!r}")
        if not (0.0 <= self.alpha <= 1.0):
            raise ConfigError(f"alpha must lie in [0, 1], got {self.alpha!r}")
        for name in ("pt_dbm", "noise_dbm"):
            if not math.isfinite(getattr(self, name)):
                raise ConfigError(f"{name} must be finite, got {getattr(self, name)!r}")
        if self.path_loss_combine not in PATH_LOSS_RULES:
            raise ConfigError(
                f"path_loss_combine must be one of {PATH_LOSS_RULES}, got {self.path_loss_combine!r}"
            )
        if self.an_mode not in AN_MODES:
            raise ConfigError(f"an_mode must be one of {AN_MODES}, got {self.an_mode!r}")
        if self.mc_samples < 1:
            raise ConfigError(f"mc_samples must be at least 1, got {self.mc_samples}")
        ref = {"alice": self.alice, "bob": self.bob, "irs": self.irs}
        named = list(ref.items())
        for i, (name_a, pos_a) in enumerate(named):
            for name_b, pos_b in named[i + 1 :]:
                if pos_a == pos_b:
                    raise GeometryError(f"{name_a} and {name_b} coincide at {pos_a}")
        # eve is a probe: it may sit on bob but not on alice or the IRS
        for name in ("alice", "irs"):
            if self.eve == ref[name]:
                raise GeometryError(f"eve and {name} coincide at {self.eve}")

    def alice_array(self) -> ArraySpec:
        return ArraySpec(self.na, self.alice_spacing_wavelengths)

    def irs_array(self) -> ArraySpec:
        return ArraySpec(self.nr, self.irs_spacing_wavelengths)

    @property
    def pt_mw(self) -> float:
        return 10.0 ** (self.pt_dbm / 10.0)

    @property
    def noise_mw(self) -> float:
        return 10.0 ** (self.noise_dbm / 10.0)


_INT_FIELDS = {"na", "nr", "seed", "mc_samples"}
_FLOAT_FIELDS = {
    "alice_spacing_wavelengths",
    "irs_spacing_wavelengths",
    "pt_dbm",
    "noise_dbm",
    "alpha",
    "d0_m",
}
_POSITION_FIELDS = {"alice", "bob", "irs", "eve"}
_STRING_FIELDS = {"path_loss_combine", "an_mode"}
_ALL_FIELDS = _INT_FIELDS | _FLOAT_FIELDS | _POSITION_FIELDS | _STRING_FIELDS
assert _ALL_FIELDS == {f.name for f in fields(Scenario)}


def _as_int(name, value):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{name} must be an integer, got {value!r}")
    return value


def _as_float(name, value):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{name} must be a number, got {value!r}")
    return float(value)


def _as_position(name, value):
    if (
        not isinstance(value, (list, tuple))
        or len(value) != 2
        or any(isinstance(v, bool) or not isinstance(v, (int, float)) for v in value)
    ):
        raise ConfigError(f"{name} must be a [x, y] pair of numbers, got {value!r}")
    return Position(float(value[0]), float(value[1]))


def _as_string(name, value):
    if not isinstance(value, str):
        raise ConfigError(f"{name} must be a string, got {value!r}")
    return value


def parse_config(text: str) -> Scenario:
    """Parse and validate a JSON scenario, applying defaults for absent fields."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(raw, dict):
        raise ConfigError(f"config must be a JSON object, got {type(raw).__name__}")
    unknown = sorted(set(raw) - _ALL_FIELDS)
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(unknown)}")
    kwargs = {}
    for name, value in raw.items():
        if name in _INT_FIELDS:
            kwargs[name] = _as_int(name, value)
        elif name in _FLOAT_FIELDS:
            kwargs[name] = _as_float(name, value)
        elif name in _POSITION_FIELDS:
            kwargs[name] = _as_position(name, value)
        else:
            kwargs[name] = _as_string(name, value)
    return Scenario(**kwargs)


def scenario_to_dict(scenario: Scenario) -> dict:
    """Plain-JSON dictionary form of a scenario (inverse of parse_config)."""
    out = {}
    for f in fields(Scenario):
        value = getattr(scenario, f.name)
        if f.name in _POSITION_FIELDS:
            value = [value.x, value.y]
        out[f.name] = value
    return out


def serialize_config(scenario: Scenario) -> str:
    """Canonical JSON text for a scenario; parse_config round-trips it."""
    return json.dumps(scenario_to_dict(scenario), sort_keys=True, indent=2) + "\n"
