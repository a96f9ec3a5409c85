"""
Fourier analysis on the Boolean cube.

The parity functions chi_S(x) = (-1)^(S-hat . x) form an orthonormal basis of
the real functions on {0,1}^n under <f, g> = 2^-n sum_x f(x) g(x). The
coefficients f-hat(S) = <f, chi_S> can be obtained from a dense table (naively
or with the fast Walsh-Hadamard transform) or, for QUBO and order-m
polynomials, read off the problem parameters directly.
"""

from typing import NamedTuple

import numpy as np

from binopt.common.exceptions import WidthMismatchError
from binopt.common.types import Bounds
from binopt.common.utils import cube_indices, iter_submasks, parity_of
from binopt.config.logging import get_logger
from binopt.fourier.bits import BitString, SubsetMask
from binopt.fourier.functions import FunctionTable, PseudoBooleanPolynomial, QuboMatrix
from binopt.fourier.spectrum import FourierSpectrum

logger = get_logger(__name__)


class QuboBounds(NamedTuple):
    """q_minus <= B(x) <= q_plus with norm11 = q_plus - q_minus = sum |Q_ij|."""

    q_minus: float
    q_plus: float
    norm11: float

    @property
    def degenerate(self) -> bool:
        return self.norm11 == 0.0


def parity_table(subset: SubsetMask | int, n: int) -> FunctionTable:
    """
    Dense table of chi_S over the cube.
    """
    mask = subset.mask if isinstance(subset, SubsetMask) else subset
    signs = 1.0 - 2.0 * parity_of(cube_indices(n) & mask)
    return FunctionTable(n=n, values=signs)


def inner_product(f: FunctionTable, g: FunctionTable) -> float:
    if f.n != g.n:
        raise WidthMismatchError(f"inner product of widths {f.n} and {g.n}")
    return float(np.dot(f.values, g.values)) / (1 << f.n)


def fourier_naive(f: FunctionTable) -> FourierSpectrum:
    """
    f-hat(S) = <f, chi_S> for every S in P[n]; O(4^n).
    """
    dense = np.array(
        [inner_product(f, parity_table(mask, f.n)) for mask in range(1 << f.n)]
    )
    return FourierSpectrum.from_dense(f.n, dense)


def walsh_hadamard(values: np.ndarray) -> np.ndarray:
    """
    Unnormalized Walsh-Hadamard transform in natural (Hadamard) order.

    Entry S of the result is sum_x values[x] * (-1)^popcount(S & x). Applying
    it twice multiplies by the length. Runs in O(n 2^n).
    """
    h = np.array(values, dtype=np.float64)
    size = len(h)
    if size & (size - 1):
        raise ValueError(f"length {size} is not a power of two")
    step = 1
    while step < size:
        h = h.reshape(-1, 2, step)
        h = np.stack((h[:, 0, :] + h[:, 1, :], h[:, 0, :] - h[:, 1, :]), axis=1)
        h = h.reshape(-1)
        step <<= 1
    return h


def fourier_fast(f: FunctionTable) -> FourierSpectrum:
    dense = walsh_hadamard(f.values) / (1 << f.n)
    return FourierSpectrum.from_dense(f.n, dense)


def spectrum_to_table(fh: FourierSpectrum) -> FunctionTable:
    """
    Dense reconstruction f(x) = sum_S f-hat(S) chi_S(x) for all x at once.
    """
    return FunctionTable(n=fh.n, values=walsh_hadamard(fh.to_dense()))


def evaluate_spectrum(fh: FourierSpectrum, x: BitString) -> float:
    if fh.n != x.n:
        raise WidthMismatchError(f"spectrum of width {fh.n} evaluated at width {x.n}")
    return float(
        sum(
            value * (1 - 2 * ((mask & x.value).bit_count() & 1))
            for mask, value in fh.coeffs.items()
        )
    )


def qubo_to_fourier(q: QuboMatrix) -> FourierSpectrum:
    """
    Closed-form spectrum of B(x) = x^T Q x.

    B-hat(empty) = (sum_i Q_ii + sum_{i<j} Q_ij) / 2, B-hat({i}) = -(sum_j Q_ij) / 2,
    B-hat({i, j}) = Q_ij / 2 and zero for |S| > 2.
    """
    matrix = q.matrix
    coeffs: dict[int, float] = {
        0: 0.5 * (float(np.trace(matrix)) + float(np.triu(matrix, 1).sum()))
    }
    row_sums = matrix.sum(axis=1)
    for i in range(q.n):
        coeffs[1 << i] = -0.5 * float(row_sums[i])
        for j in range(i + 1, q.n):
            coeffs[(1 << i) | (1 << j)] = 0.5 * float(matrix[i, j])
    return FourierSpectrum.from_mapping(q.n, coeffs)


def poly_to_fourier(p: PseudoBooleanPolynomial) -> FourierSpectrum:
    """
    Closed-form spectrum of an order-m pseudo-Boolean polynomial.

    Each monomial x_{i_1} ... x_{i_l} equals 2^-l prod (chi_empty - chi_{i_k}),
    so it contributes (-1)^|T| 2^-l to every T contained in its index set.
    """
    coeffs: dict[int, float] = {}
    for term in p.terms:
        scale = term.coeff / (1 << term.degree)
        for sub in iter_submasks(term.mask):
            sign = -1.0 if sub.bit_count() & 1 else 1.0
            coeffs[sub] = coeffs.get(sub, 0.0) + sign * scale
    return FourierSpectrum.from_mapping(p.n, coeffs)


def qubo_bounds(q: QuboMatrix) -> QuboBounds:
    """
    Sum of the negative entries (q_minus), of the positive entries (q_plus)
    and the entrywise 1-norm of Q.
    """
    q_plus = float(q.matrix[q.matrix > 0].sum())
    q_minus = float(q.matrix[q.matrix < 0].sum())
    bounds = QuboBounds(q_minus=q_minus, q_plus=q_plus, norm11=q_plus - q_minus)
    if bounds.degenerate:
        logger.warning("QUBO matrix is all zero; its objective cannot be scaled")
    return bounds


def poly_bounds(p: PseudoBooleanPolynomial) -> Bounds:
    """
    Bounds for an order-m polynomial from the signs of its coefficients.

    The constant term is exact and every monomial lies between min(0, c) and
    max(0, c).
    """
    lower = upper = 0.0
    for term in p.terms:
        if term.degree == 0:
            lower += term.coeff
            upper += term.coeff
        elif term.coeff > 0:
            upper += term.coeff
        else:
            lower += term.coeff
    if lower == upper:
        logger.warning("Polynomial objective is constant; it cannot be scaled")
    return lower, upper


def table_bounds(f: FunctionTable) -> Bounds:
    return float(f.values.min()), float(f.values.max())
