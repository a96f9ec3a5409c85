"""
Affine scaling of an objective F into [0, scale] for extremum finding.

With bounds f_minus <= F(x) <= f_plus and c = scale / (f_plus - f_minus):

    plus:   f_plus(x)  = (f_plus - F(x)) * c    maximal where F is minimal
    minus:  f_minus(x) = (F(x) - f_minus) * c   maximal where F is maximal

Only the constant Fourier coefficient shifts; every other coefficient is
multiplied by -c (plus) or +c (minus). For a QUBO with bounds (q_minus,
q_plus) this gives b_plus / b_minus.
"""

import math

import numpy as np
from pydantic import BaseModel, ConfigDict

from binopt.common.enum import Direction, Extremum
from binopt.common.exceptions import (
    DegenerateObjectiveError,
    ScalingError,
    WidthMismatchError,
)
from binopt.common.types import Bounds
from binopt.config.settings import config
from binopt.fourier.functions import FunctionTable
from binopt.fourier.spectrum import FourierSpectrum
from binopt.fourier.transforms import fourier_fast, spectrum_to_table, table_bounds


class ScaledObjective(BaseModel):
    """
    A scaled objective f_plus or f_minus derived from F, in both
    representations: `spectrum` drives the synthesized oracle and `table`
    the diagonal one.
    """

    model_config = ConfigDict(frozen=True)

    base: FunctionTable
    base_spectrum: FourierSpectrum
    bounds: Bounds
    direction: Direction
    scale: float
    spectrum: FourierSpectrum
    table: FunctionTable

    @property
    def n(self) -> int:
        return self.base.n


def direction_for(which: Extremum) -> Direction:
    """Minima are found with the plus scaling, maxima with the minus scaling."""
    return Direction.PLUS if which == Extremum.MIN else Direction.MINUS


def scale_objective(
    objective: FunctionTable | FourierSpectrum,
    bounds: Bounds | None,
    direction: Direction,
    scale: float | None = None,
    spectrum: FourierSpectrum | None = None,
) -> ScaledObjective:
    """
    Map F affinely into [0, scale] so that its minima (plus) or maxima
    (minus) become the maxima of the scaled function.

    Args:
        objective: F as a dense table or as its Fourier spectrum
        bounds: (f_minus, f_plus) enclosing F; the exact range of F when None
        direction: Direction.PLUS to target minima, Direction.MINUS for maxima
        scale: Width of the target interval, in (0, pi/2]; the configured default when None
        spectrum: Known spectrum of a tabled F, e.g. read off QUBO coefficients;
            transformed from the table when None

    Returns:
        ScaledObjective: Scaled spectrum and table plus the data they came from

    Raises:
        DegenerateObjectiveError: If f_plus == f_minus.
        ScalingError: If the bounds are inverted or miss F, or the scale is out of range.
        WidthMismatchError: If spectrum and table have different widths.
    """
    if isinstance(objective, FunctionTable):
        base = objective
        if spectrum is None:
            base_spectrum = fourier_fast(objective)
        elif spectrum.n != objective.n:
            raise WidthMismatchError(
                f"spectrum of width {spectrum.n} given for a table of width {objective.n}"
            )
        else:
            base_spectrum = spectrum
    else:
        base_spectrum = objective
        base = spectrum_to_table(objective)

    f_minus, f_plus = table_bounds(base) if bounds is None else bounds
    if f_plus == f_minus:
        raise DegenerateObjectiveError(
            f"objective is constant ({f_plus}); no point can be distinguished"
        )
    if f_plus < f_minus:
        raise ScalingError(f"inverted bounds ({f_minus}, {f_plus})")

    scale = config.default_scale if scale is None else scale
    if not 0.0 < scale <= math.pi / 2 + 1e-15:
        raise ScalingError(f"scale {scale} outside (0, pi/2]")

    width = f_plus - f_minus
    slack = 1e-9 * max(1.0, width)
    if base.values.min() < f_minus - slack or base.values.max() > f_plus + slack:
        raise ScalingError(
            f"objective range [{base.values.min()}, {base.values.max()}] is not inside the bounds ({f_minus}, {f_plus})"
        )

    c = scale / width
    if direction == Direction.PLUS:
        factor, shift = -c, f_plus * c
    else:
        factor, shift = c, -f_minus * c

    return ScaledObjective(
        base=base,
        base_spectrum=base_spectrum,
        bounds=(f_minus, f_plus),
        direction=direction,
        scale=scale,
        spectrum=base_spectrum.affine(factor, shift),
        table=FunctionTable(n=base.n, values=np.clip(base.values * factor + shift, 0.0, scale)),
    )
