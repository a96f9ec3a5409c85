from binopt.fourier.bits import BitString, SubsetMask, bit_product, parity
from binopt.fourier.functions import (
    FunctionTable,
    PolynomialTerm,
    PseudoBooleanPolynomial,
    QuboMatrix,
    poly_table,
    qubo_table,
)
from binopt.fourier.spectrum import FourierSpectrum
from binopt.fourier.transforms import (
    QuboBounds,
    evaluate_spectrum,
    fourier_fast,
    fourier_naive,
    inner_product,
    parity_table,
    poly_bounds,
    poly_to_fourier,
    qubo_bounds,
    qubo_to_fourier,
    spectrum_to_table,
    table_bounds,
    walsh_hadamard,
)

__all__ = [
    "BitString",
    "FourierSpectrum",
    "FunctionTable",
    "PolynomialTerm",
    "PseudoBooleanPolynomial",
    "QuboBounds",
    "QuboMatrix",
    "SubsetMask",
    "bit_product",
    "evaluate_spectrum",
    "fourier_fast",
    "fourier_naive",
    "inner_product",
    "parity",
    "parity_table",
    "poly_bounds",
    "poly_table",
    "poly_to_fourier",
    "qubo_bounds",
    "qubo_table",
    "qubo_to_fourier",
    "spectrum_to_table",
    "table_bounds",
    "walsh_hadamard",
]
