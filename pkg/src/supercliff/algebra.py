"""Complex Clifford algebra C(R^n) over the standard orthonormal generators.

Basis blades e_{i1}...e_{ik} (strictly increasing indices) are encoded as
integer bitmasks: bit i-1 set means generator e_i is a factor, the empty
mask is the unit. A multivector is a sparse complex coefficient map keyed
by blade mask. Every operation is a pure function over immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

# A blade is a plain bitmask; the ambient dimension travels with the
# multivector that owns it.
BladeIndex = int

RealVector = Sequence[float] | np.ndarray

EPS_EQ = 1e-8  # coefficientwise equality tolerance (unit-normalized inputs)
ALGEBRA_DIM_CAP = 12  # guard against the 2^n coefficient blowup


class DimensionMismatch(ValueError):
    """Operands live over different ambient dimensions."""


def blade_product(a: BladeIndex, b: BladeIndex) -> tuple[BladeIndex, int]:
    """Product of two basis blades: (result mask, sign in {+1, -1}).

    The result mask is the symmetric difference a ^ b; the sign counts the
    transpositions needed to sort the concatenated generator sequence,
    with contractions e_i e_i = 1 contributing no sign.
    """
    t = a >> 1
    swaps = 0
    while t:
        swaps += (t & b).bit_count()
        t >>= 1
    return a ^ b, -1 if swaps & 1 else 1


@dataclass(frozen=True)
class Multivector:
    """Element of C(R^n): sparse complex coefficients keyed by blade mask.

    Canonical form stores no coefficient that is exactly zero; near-zero
    floats may persist, so comparisons go through ``approx_equal``.
    """

    dim: int
    coeffs: Mapping[BladeIndex, complex]

    def __post_init__(self) -> None:
        if not 0 <= self.dim <= ALGEBRA_DIM_CAP:
            raise ValueError(
                f"ambient dimension {self.dim} outside 0..{ALGEBRA_DIM_CAP}"
            )
        limit = 1 << self.dim
        cleaned: dict[BladeIndex, complex] = {}
        for mask, coeff in self.coeffs.items():
            if not 0 <= mask < limit:
                raise ValueError(f"blade mask {mask} invalid for dimension {self.dim}")
            value = complex(coeff)
            if value != 0:
                cleaned[mask] = value
        object.__setattr__(self, "coeffs", cleaned)

    @classmethod
    def zero(cls, dim: int) -> "Multivector":
        return cls(dim, {})

    @classmethod
    def scalar(cls, dim: int, value: complex) -> "Multivector":
        return cls(dim, {0: value})

    @classmethod
    def unit(cls, dim: int) -> "Multivector":
        return cls(dim, {0: 1.0})

    @classmethod
    def blade(cls, dim: int, mask: BladeIndex, coeff: complex = 1.0) -> "Multivector":
        return cls(dim, {mask: coeff})

    @classmethod
    def generator(cls, dim: int, index: int) -> "Multivector":
        """The generator e_index (1-based)."""
        if not 1 <= index <= dim:
            raise ValueError(f"generator index {index} outside 1..{dim}")
        return cls(dim, {1 << (index - 1): 1.0})

    def __add__(self, other: "Multivector") -> "Multivector":
        return add(self, other)

    def __sub__(self, other: "Multivector") -> "Multivector":
        return sub(self, other)

    def __neg__(self) -> "Multivector":
        return scale(-1.0, self)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return mul(self, other)
        if isinstance(other, (int, float, complex)):
            return scale(other, self)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float, complex)):
            return scale(other, self)
        return NotImplemented

    def __str__(self) -> str:
        from .parsing import format_multivector

        return format_multivector(self)


def _check_same_dim(x: Multivector, y: Multivector) -> None:
    if x.dim != y.dim:
        raise DimensionMismatch(f"ambient dimensions differ: {x.dim} vs {y.dim}")


def mul(x: Multivector, y: Multivector) -> Multivector:
    """Clifford product, the bilinear extension of ``blade_product``."""
    _check_same_dim(x, y)
    out: dict[BladeIndex, complex] = {}
    for ma, ca in x.coeffs.items():
        for mb, cb in y.coeffs.items():
            mask, sign = blade_product(ma, mb)
            out[mask] = out.get(mask, 0j) + sign * ca * cb
    return Multivector(x.dim, out)


def add(x: Multivector, y: Multivector) -> Multivector:
    _check_same_dim(x, y)
    out = dict(x.coeffs)
    for mask, coeff in y.coeffs.items():
        out[mask] = out.get(mask, 0j) + coeff
    return Multivector(x.dim, out)


def sub(x: Multivector, y: Multivector) -> Multivector:
    _check_same_dim(x, y)
    out = dict(x.coeffs)
    for mask, coeff in y.coeffs.items():
        out[mask] = out.get(mask, 0j) - coeff
    return Multivector(x.dim, out)


def scale(factor: complex, x: Multivector) -> Multivector:
    return Multivector(x.dim, {m: factor * c for m, c in x.coeffs.items()})


def gamma(x: Multivector) -> Multivector:
    """Grading automorphism: -Id on vectors, so blades flip by grade parity."""
    return Multivector(
        x.dim,
        {m: -c if m.bit_count() & 1 else c for m, c in x.coeffs.items()},
    )


def star(x: Multivector) -> Multivector:
    """Conjugate-linear antiautomorphism fixing each generator.

    On a grade-k blade the reversal contributes (-1)^{k(k-1)/2}; the
    coefficient is conjugated.
    """
    out: dict[BladeIndex, complex] = {}
    for mask, coeff in x.coeffs.items():
        k = mask.bit_count()
        sign = -1 if (k * (k - 1) // 2) & 1 else 1
        out[mask] = sign * coeff.conjugate()
    return Multivector(x.dim, out)


def even_odd_split(x: Multivector) -> tuple[Multivector, Multivector]:
    """Split into the +1 and -1 eigencomponents of the grading automorphism."""
    even: dict[BladeIndex, complex] = {}
    odd: dict[BladeIndex, complex] = {}
    for mask, coeff in x.coeffs.items():
        (odd if mask.bit_count() & 1 else even)[mask] = coeff
    return Multivector(x.dim, even), Multivector(x.dim, odd)


def embed_vector(v: RealVector) -> Multivector:
    """Embed v in R^n as the grade-1 element sum_i v_i e_i."""
    arr = np.asarray(v, dtype=float)
    if arr.ndim != 1:
        raise ValueError("expected a flat coordinate vector")
    return Multivector(len(arr), {1 << i: val for i, val in enumerate(arr)})


def coeff_array(x: Multivector) -> np.ndarray:
    """Dense coefficient vector of length 2^dim, blade masks as indices."""
    out = np.zeros(1 << x.dim, dtype=complex)
    for mask, coeff in x.coeffs.items():
        out[mask] = coeff
    return out


def from_coeff_array(dim: int, coeffs: np.ndarray) -> Multivector:
    arr = np.asarray(coeffs)
    if arr.shape != (1 << dim,):
        raise ValueError(f"expected {1 << dim} coefficients, got shape {arr.shape}")
    return Multivector(dim, {i: c for i, c in enumerate(arr) if c != 0})


def coeff_norm(x: Multivector) -> float:
    """Euclidean norm of the coefficient vector (blades orthonormal)."""
    return float(np.sqrt(sum(abs(c) ** 2 for c in x.coeffs.values())))


def normalized(x: Multivector) -> Multivector:
    nrm = coeff_norm(x)
    if nrm == 0:
        raise ValueError("cannot normalize the zero multivector")
    return scale(1.0 / nrm, x)


def max_coeff_diff(x: Multivector, y: Multivector) -> float:
    _check_same_dim(x, y)
    masks = set(x.coeffs) | set(y.coeffs)
    return max(
        (abs(x.coeffs.get(m, 0) - y.coeffs.get(m, 0)) for m in masks), default=0.0
    )


def approx_equal(x: Multivector, y: Multivector, tol: float = EPS_EQ) -> bool:
    """Equality of multivectors up to the coefficientwise tolerance."""
    return max_coeff_diff(x, y) <= tol
