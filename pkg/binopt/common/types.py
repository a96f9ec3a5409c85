import numpy as np
import numpy.typing as npt

RealVector = npt.NDArray[np.float64]
ComplexVector = npt.NDArray[np.complex128]
IndexVector = npt.NDArray[np.int64]

# (f_minus, f_plus) with f_minus <= F(x) <= f_plus on the whole cube
Bounds = tuple[float, float]
