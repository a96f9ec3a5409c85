from collections.abc import Iterable

from pydantic import BaseModel, ConfigDict, Field, model_validator

from binopt.common.exceptions import WidthMismatchError
from binopt.common.utils import format_bits, iter_set_bits


class BitString(BaseModel):
    """
    A point x of the Boolean cube {0,1}^n.

    Bit j of `value` is the expansion coefficient x_j of x = sum_j x_j 2^j.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1, description="Number of bits")
    value: int = Field(ge=0, description="Integer whose binary digits are x_j")

    @model_validator(mode="after")
    def _check_range(self) -> "BitString":
        if self.value >= 1 << self.n:
            raise ValueError(f"value {self.value} does not fit in {self.n} bits")
        return self

    @classmethod
    def from_str(cls, bits: str) -> "BitString":
        """Parse a most-significant-bit-first string such as '1001'."""
        return cls(n=len(bits), value=int(bits, 2))

    def bit(self, j: int) -> int:
        return (self.value >> j) & 1

    def __str__(self) -> str:
        return format_bits(self.value, self.n)


class SubsetMask(BaseModel):
    """
    A subset S of [n] = {0, ..., n-1} encoded as the bit-string S-hat.

    Bit j of `mask` is set iff j is in S, the same convention as BitString.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1, description="Size of the ground set")
    mask: int = Field(ge=0, description="Bit j set iff j in S")

    @model_validator(mode="after")
    def _check_range(self) -> "SubsetMask":
        if self.mask >= 1 << self.n:
            raise ValueError(f"mask {self.mask} does not fit in {self.n} bits")
        return self

    @classmethod
    def from_elements(cls, n: int, elements: Iterable[int]) -> "SubsetMask":
        mask = 0
        for j in elements:
            if not 0 <= j < n:
                raise ValueError(f"element {j} outside [0, {n})")
            mask |= 1 << j
        return cls(n=n, mask=mask)

    @classmethod
    def all_subsets(cls, n: int) -> list["SubsetMask"]:
        """P[n]: every subset of [n], in ascending mask order."""
        return [cls(n=n, mask=mask) for mask in range(1 << n)]

    @property
    def value(self) -> int:
        return self.mask

    @property
    def cardinality(self) -> int:
        return self.mask.bit_count()

    def elements(self) -> tuple[int, ...]:
        """Members j_1 < j_2 < ... < j_|S|."""
        return tuple(iter_set_bits(self.mask))

    def __str__(self) -> str:
        return "{" + ", ".join(str(j) for j in self.elements()) + "}"


def bit_product(a: BitString | SubsetMask, b: BitString | SubsetMask) -> int:
    """
    Modular bit-product a . b = (sum_j a_j b_j) mod 2.
    """
    if a.n != b.n:
        raise WidthMismatchError(f"bit_product of widths {a.n} and {b.n}")
    return (a.value & b.value).bit_count() & 1


def parity(subset: SubsetMask, x: BitString) -> float:
    """
    Parity function chi_S(x) = (-1)^(S-hat . x).
    """
    if subset.n != x.n:
        raise WidthMismatchError(f"parity of widths {subset.n} and {x.n}")
    return 1.0 - 2.0 * bit_product(subset, x)
