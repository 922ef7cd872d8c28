"""Tests for the radix-2 transforms and the fast convolution."""

from __future__ import annotations

import numpy as np
import pytest

from algorithms.fastconv import (
    TransformLengthError,
    convolve,
    dft,
    inverse_dft,
    next_power_of_two,
)

POWER_OF_TWO_LENGTHS = [2**k for k in range(11)]


def _brute_force_dft(buffer: np.ndarray, sign: int) -> np.ndarray:
    size = buffer.size
    indices = np.arange(size)
    # Reduce k*n mod N first so the exponent stays small.
    phase = np.outer(indices, indices) % size
    kernel = np.exp(sign * 2j * np.pi * phase / size)
    return kernel @ buffer


def _random_complex(rng: np.random.Generator, size: int) -> np.ndarray:
    return rng.standard_normal(size) + 1j * rng.standard_normal(size)


def test_impulse_has_flat_spectrum() -> None:
    np.testing.assert_allclose(dft([1, 0, 0, 0]), [1, 1, 1, 1], atol=1e-15)


def test_constant_has_dc_spike() -> None:
    np.testing.assert_allclose(dft([1, 1, 1, 1]), [4, 0, 0, 0], atol=1e-15)


def test_inverse_of_dc_spike_is_constant() -> None:
    np.testing.assert_allclose(inverse_dft([4, 0, 0, 0]), [1, 1, 1, 1], atol=1e-15)


@pytest.mark.parametrize("size", POWER_OF_TWO_LENGTHS)
def test_dft_matches_brute_force(rng: np.random.Generator, size: int) -> None:
    buffer = _random_complex(rng, size)

    np.testing.assert_allclose(dft(buffer), _brute_force_dft(buffer, -1), rtol=0, atol=1e-10)


@pytest.mark.parametrize("size", POWER_OF_TWO_LENGTHS)
def test_inverse_dft_matches_brute_force(rng: np.random.Generator, size: int) -> None:
    buffer = _random_complex(rng, size)

    expected = _brute_force_dft(buffer, 1) / size
    np.testing.assert_allclose(inverse_dft(buffer), expected, rtol=0, atol=1e-10)


@pytest.mark.parametrize("size", POWER_OF_TWO_LENGTHS)
def test_round_trip(rng: np.random.Generator, size: int) -> None:
    buffer = _random_complex(rng, size)

    np.testing.assert_allclose(inverse_dft(dft(buffer)), buffer, rtol=0, atol=1e-10)


def test_parseval(rng: np.random.Generator) -> None:
    buffer = _random_complex(rng, 256)

    energy = np.sum(np.abs(buffer) ** 2)
    spectral_energy = np.sum(np.abs(dft(buffer)) ** 2) / buffer.size
    assert spectral_energy == pytest.approx(energy, rel=1e-9)


def test_linearity(rng: np.random.Generator) -> None:
    first = _random_complex(rng, 64)
    second = _random_complex(rng, 64)

    combined = dft(2.5 * first - 1j * second)
    np.testing.assert_allclose(combined, 2.5 * dft(first) - 1j * dft(second), atol=1e-10)


def test_dft_does_not_modify_input(rng: np.random.Generator) -> None:
    buffer = _random_complex(rng, 16)
    original = buffer.copy()

    dft(buffer)

    np.testing.assert_array_equal(buffer, original)


@pytest.mark.parametrize("size", [0, 3, 6, 12])
def test_dft_rejects_non_power_of_two(size: int) -> None:
    with pytest.raises(TransformLengthError):
        dft(np.ones(size))


def test_next_power_of_two() -> None:
    assert [next_power_of_two(n) for n in (1, 2, 3, 5, 8, 9, 1000)] == [1, 2, 4, 8, 8, 16, 1024]
    with pytest.raises(TransformLengthError):
        next_power_of_two(0)


def test_convolve_identity_kernel() -> None:
    np.testing.assert_allclose(convolve([1, 2, 3], [1, 0, 0]), [1, 2, 3], atol=1e-12)


def test_convolve_truncates_to_longer_input() -> None:
    np.testing.assert_allclose(convolve([1, 1], [1, 1]), [1, 2], atol=1e-12)
    assert convolve([1.0, 2.0, 3.0], np.ones(5)).size == 5


def test_convolve_matches_direct_sum(rng: np.random.Generator) -> None:
    for _ in range(50):
        left = rng.standard_normal(int(rng.integers(1, 65)))
        right = rng.standard_normal(int(rng.integers(1, 65)))
        keep = max(left.size, right.size)

        expected = np.convolve(left, right)[:keep]
        np.testing.assert_allclose(convolve(left, right), expected, rtol=0, atol=1e-9)


def test_convolve_is_commutative(rng: np.random.Generator) -> None:
    left = rng.standard_normal(100)
    right = rng.standard_normal(100)

    np.testing.assert_allclose(convolve(left, right), convolve(right, left), atol=1e-9)


@pytest.mark.parametrize(("left", "right"), [([], [1.0]), ([1.0], []), ([[1.0]], [1.0])])
def test_convolve_rejects_empty_or_nested_input(left: list, right: list) -> None:
    with pytest.raises(TransformLengthError):
        convolve(left, right)
