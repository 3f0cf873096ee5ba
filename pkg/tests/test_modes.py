from __future__ import annotations

import math

import numpy as np
import pytest

from latcas import BoundaryCondition, BoundaryKind, PhenOffset, generate_modes

from moment_oracle import kernel_moment


def test_periodic_nz4() -> None:
    ms = generate_modes(BoundaryCondition.periodic(), 4)
    assert ms.akz == pytest.approx([0.0, math.pi / 2, math.pi, 3 * math.pi / 2])
    assert all(w == 1.0 for w in ms.weights)


def test_antiperiodic_nz2() -> None:
    ms = generate_modes(BoundaryCondition.antiperiodic(), 2)
    assert ms.akz == pytest.approx([math.pi / 2, 3 * math.pi / 2])
    assert all(w == 1.0 for w in ms.weights)


def test_phenomenological_nz1_wraps_final_mode() -> None:
    ms = generate_modes(BoundaryCondition.phenomenological(), 1)
    assert ms.akz == pytest.approx([math.pi, 0.0])
    assert all(w == 0.5 for w in ms.weights)


def test_phenomenological_index_variants_agree_as_sets() -> None:
    for nz in (1, 2, 5):
        a = generate_modes(BoundaryCondition.phenomenological(PhenOffset.ONE_TO_2NZ), nz)
        b = generate_modes(BoundaryCondition.phenomenological(PhenOffset.ZERO_TO_2NZ_MINUS_1), nz)
        assert np.allclose(sorted(a.akz), sorted(b.akz), atol=1e-12)
        assert a.weight_sum == b.weight_sum


def test_weight_sum_equals_nz_for_all_kinds() -> None:
    for kind in BoundaryKind:
        bc = BoundaryCondition(kind)
        for nz in range(1, 13):
            ms = generate_modes(bc, nz)
            assert ms.weight_sum == pytest.approx(nz, abs=1e-12)


def test_values_lie_in_first_zone() -> None:
    for kind in BoundaryKind:
        for nz in (1, 3, 8):
            ms = generate_modes(BoundaryCondition(kind), nz)
            assert np.all(ms.akz >= 0.0)
            assert np.all(ms.akz < 2.0 * math.pi)


def test_periodic_and_antiperiodic_interleave() -> None:
    for nz in (1, 2, 4, 7):
        combined = np.concatenate(
            [
                generate_modes(BoundaryCondition.periodic(), nz).akz,
                generate_modes(BoundaryCondition.antiperiodic(), nz).akz,
            ]
        )
        doubled = generate_modes(BoundaryCondition.periodic(), 2 * nz).akz
        assert np.allclose(np.sort(combined), np.sort(doubled), atol=1e-12)


def test_periodic_mode_average_is_trapezoidal_rule() -> None:
    # weighted mode average of (2-2cos)^j equals the zone average for j < nz
    for nz in (2, 3, 5, 8):
        ms = generate_modes(BoundaryCondition.periodic(), nz)
        for j in range(nz):
            avg = math.fsum(
                w * (2.0 - 2.0 * math.cos(x)) ** j for x, w in zip(ms.akz, ms.weights)
            ) / nz
            assert avg == pytest.approx(kernel_moment(j), rel=1e-13, abs=1e-13)


def test_pure_harmonics_below_nz_average_to_zero() -> None:
    for nz in (3, 6):
        ms = generate_modes(BoundaryCondition.periodic(), nz)
        for k in range(1, nz):
            avg = math.fsum(w * math.cos(k * x) for x, w in zip(ms.akz, ms.weights)) / nz
            assert avg == pytest.approx(0.0, abs=1e-14)


def test_rejects_nz_zero() -> None:
    with pytest.raises(ValueError):
        generate_modes(BoundaryCondition.periodic(), 0)
