"""Radix-2 discrete Fourier transforms and the fast linear convolution built on them."""

from __future__ import annotations

from functools import lru_cache

import numpy as np
import numpy.typing as npt

ComplexBuffer = npt.NDArray[np.complex128]

RESIDUE_TOLERANCE = 1e-9


class TransformLengthError(ValueError):
    """Raised when a transform or convolution receives an unsupported length."""


class ConvolutionResidueError(ArithmeticError):
    """Raised when a real convolution leaves a non-negligible imaginary part."""


def next_power_of_two(length: int) -> int:
    if length < 1:
        raise TransformLengthError(f"length must be positive, got {length}")
    return 1 << (length - 1).bit_length()


def _is_power_of_two(length: int) -> bool:
    return length >= 1 and length & (length - 1) == 0


@lru_cache(maxsize=64)
def _bit_reversed_indices(size: int) -> npt.NDArray[np.intp]:
    bits = size.bit_length() - 1
    source = np.arange(size, dtype=np.intp)
    reversed_ = np.zeros(size, dtype=np.intp)
    for _ in range(bits):
        reversed_ = (reversed_ << 1) | (source & 1)
        source = source >> 1
    reversed_.setflags(write=False)
    return reversed_


@lru_cache(maxsize=64)
def _twiddles(size: int, sign: int) -> ComplexBuffer:
    table = np.exp(sign * 2j * np.pi * np.arange(size // 2) / size)
    table.setflags(write=False)
    return table


def _radix2(buffer: npt.ArrayLike, sign: int) -> ComplexBuffer:
    data = np.asarray(buffer, dtype=np.complex128)
    if data.ndim != 1:
        raise TransformLengthError(f"transform input must be one-dimensional, got {data.shape}")
    size = data.size
    if not _is_power_of_two(size):
        raise TransformLengthError(f"transform length must be a power of two, got {size}")

    out = data[_bit_reversed_indices(size)]
    table = _twiddles(size, sign)
    span = 2
    while span <= size:
        half = span // 2
        blocks = out.reshape(-1, span)
        even = blocks[:, :half].copy()
        odd = blocks[:, half:] * table[:: size // span]
        blocks[:, :half] = even + odd
        blocks[:, half:] = even - odd
        span *= 2
    return out


def dft(buffer: npt.ArrayLike) -> ComplexBuffer:
    """Forward DFT, X_k = sum_j x_j exp(-2 pi i jk / N), for power-of-two N."""
    return _radix2(buffer, -1)


def inverse_dft(buffer: npt.ArrayLike) -> ComplexBuffer:
    """Inverse DFT with 1/N scaling."""
    out = _radix2(buffer, 1)
    return out / out.size


def convolve(x: npt.ArrayLike, y: npt.ArrayLike) -> npt.NDArray[np.float64]:
    """First max(len(x), len(y)) entries of the linear convolution of two real sequences.

    Both inputs are zero padded to the next power of two >= len(x) + len(y) - 1.
    They are packed into one complex buffer (x + iy) so a single forward
    transform yields both spectra.
    """
    left = np.asarray(x, dtype=np.float64)
    right = np.asarray(y, dtype=np.float64)
    if left.ndim != 1 or right.ndim != 1 or left.size == 0 or right.size == 0:
        raise TransformLengthError("convolve needs two non-empty one-dimensional sequences")

    size = next_power_of_two(left.size + right.size - 1)
    packed = np.zeros(size, dtype=np.complex128)
    packed[: left.size] += left
    packed[: right.size] += 1j * right

    spectrum = dft(packed)
    mirrored = np.conj(spectrum[(-np.arange(size)) % size])
    left_spectrum = (spectrum + mirrored) / 2.0
    right_spectrum = (spectrum - mirrored) / 2.0j

    product = inverse_dft(left_spectrum * right_spectrum)
    keep = max(left.size, right.size)
    result = product[:keep]

    peak = float(np.max(np.abs(result.real)))
    residue = float(np.max(np.abs(result.imag)))
    if residue > RESIDUE_TOLERANCE * max(1.0, peak):
        raise ConvolutionResidueError(
            f"imaginary residue {residue:.3e} exceeds tolerance for real convolution"
        )
    return np.ascontiguousarray(result.real)
