"""
Reading angle data and parsing angle and error arguments
"""

import math
import re
import sys
from dataclasses import dataclass

import numpy as np

from deconv.error_models import ErrorModel
from estimators.sample import AngleSample
from utils.exceptions import ConfigurationError, InputError

_ANGLE = re.compile(
    r"^\s*(?P<sign>[+-])?\s*(?:(?P<coef>\d+(?:\.\d*)?|\.\d+)\s*\*?\s*)?(?P<pi>pi|π)"
    r"(?:\s*/\s*(?P<den>\d+(?:\.\d*)?))?\s*$"
)


def parse_angle(text):
    """
    Parse a number or a multiple of pi: '0.5', '-pi', 'pi/12', '2*pi/3', '3π/4'.

    Raises:
        InputError: on anything else
    """
    text = str(text).strip().lower()
    match = _ANGLE.match(text)
    if match:
        value = math.pi * float(match.group("coef") or 1.0) / float(match.group("den") or 1.0)
        return -value if match.group("sign") == "-" else value
    try:
        value = float(text)
    except ValueError:
        raise InputError(f"cannot read {text!r} as an angle")
    if not math.isfinite(value):
        raise InputError(f"angle {text!r} is not finite")
    return value


def parse_error_model(text):
    """
    Parse 'none', 'laplace:RHO', 'laplace-scale:S', 'uniform:A' or 'vm:KAPPA'.

    Returns:
        ErrorModel
    """
    kind, _, parameter = str(text).strip().lower().partition(":")
    if kind == "none":
        return ErrorModel.none()
    if not parameter:
        raise ConfigurationError(f"error model {text!r} needs a parameter, e.g. {kind}:0.2")
    value = parse_angle(parameter)
    builders = {
        "laplace": ErrorModel.wrapped_laplace,
        "laplace-scale": ErrorModel.wrapped_laplace_scale,
        "uniform": ErrorModel.wrapped_uniform,
        "vm": ErrorModel.von_mises,
    }
    if kind not in builders:
        raise ConfigurationError(f"unknown error model {kind!r}; expected one of none, {', '.join(builders)}")
    return builders[kind](value)


@dataclass(frozen=True)
class InputSpec:
    """
    Where and how to read observations.

    Lines hold one angle, or 'angle,count' pairs for grouped data; '#' starts a comment.
    """
    path: str = "-"
    degrees: bool = False
    grouped: bool = None

    def open(self):
        if self.path in (None, "-"):
            return sys.stdin
        try:
            return open(self.path, encoding="utf-8")
        except OSError as e:
            raise InputError(f"cannot open {self.path}: {e.strerror}")

    def load(self):
        """
        Returns:
            AngleSample, weighted when the data are grouped
        """
        stream = self.open()
        try:
            return parse_records(stream.read().splitlines(), self.degrees, self.grouped)
        finally:
            if stream is not sys.stdin:
                stream.close()


def parse_records(lines, degrees=False, grouped=None):
    """
    Args:
        lines: Text lines
        degrees: Angles are in degrees
        grouped: Force grouped (True) or plain (False) reading; detected from the first record when None

    Returns:
        AngleSample
    """
    angles = []
    counts = []
    for number, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = [field.strip() for field in line.split(",")]
        if grouped is None:
            grouped = len(fields) == 2
        expected = 2 if grouped else 1
        if len(fields) != expected:
            raise InputError(f"line {number}: expected {expected} field(s), got {len(fields)}")
        try:
            angle = float(fields[0]) if degrees else parse_angle(fields[0])
            count = float(fields[1]) if grouped else 1.0
        except (InputError, ValueError):
            raise InputError(f"line {number}: cannot parse {raw.strip()!r}")
        if count < 0:
            raise InputError(f"line {number}: negative count {count:g}")
        angles.append(angle)
        counts.append(count)

    if not angles:
        raise InputError("no observations in input")
    angles = np.asarray(angles)
    if degrees:
        angles = np.deg2rad(angles)
    return AngleSample(angles, counts if grouped else None)
