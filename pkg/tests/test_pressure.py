import math

import numpy as np
import pytest

from boxdim import (
    GenPermMatrix,
    NonnegMatrix,
    abs_determinant,
    builtin_examples,
    identity,
    lifted_sum,
    modified_pressure,
    pressure,
    spectral_radius,
)
from boxdim.errors import DimensionMismatch, EmptySystem, NegativeExponent

from helpers import random_system, rel_close

EX = builtin_examples()
EX1 = EX["example1"].linear_parts
EX2 = EX["example2"].linear_parts


class TestNonnegMatrix:
    def test_rejects_negative_entries(self):
        with pytest.raises(ValueError):
            NonnegMatrix(np.array([[1.0, -0.1], [0.0, 1.0]]))

    def test_rejects_nonsquare(self):
        with pytest.raises(ValueError):
            NonnegMatrix(np.zeros((2, 3)))

    def test_rejects_nonfinite(self):
        with pytest.raises(ValueError):
            NonnegMatrix(np.array([[np.inf]]))

    def test_entries_are_frozen(self):
        m = NonnegMatrix(np.eye(2))
        with pytest.raises(ValueError):
            m.entries[0, 0] = 5.0


class TestSpectralRadius:
    def test_identity(self):
        for n in (1, 2, 3, 5):
            assert spectral_radius(NonnegMatrix(np.eye(n))) == pytest.approx(1.0, rel=1e-14)

    def test_permutation_matrix(self):
        assert spectral_radius(NonnegMatrix(np.array([[0.0, 1.0], [1.0, 0.0]]))) == 1.0

    def test_symmetric_2x2_closed_form(self):
        # eigenvalues (trace +/- sqrt(trace^2 - 4 det)) / 2 = 3 and 1
        assert spectral_radius(NonnegMatrix(np.array([[2.0, 1.0], [1.0, 2.0]]))) == 3.0

    def test_nilpotent(self):
        m = NonnegMatrix(np.array([[0.0, 1.0, 0], [0, 0, 1.0], [0, 0, 0]]))
        assert spectral_radius(m) == 0.0

    def test_reducible_matrix(self):
        m = NonnegMatrix(np.diag([0.3, 0.9, 0.5]))
        assert spectral_radius(m) == pytest.approx(0.9, rel=1e-13)

    def test_competing_blocks(self):
        # The decoupled middle entry holds the max entry of every early
        # power even though the outer 2x2 block has the larger radius; a
        # premature stop returns the wrong block's radius.
        m = NonnegMatrix(
            np.array(
                [
                    [1.92574218, 0.0, 0.9160585],
                    [0.0, 2.3964642, 0.0],
                    [0.87765422, 0.0, 1.83728738],
                ]
            )
        )
        expected = float(np.max(np.abs(np.linalg.eigvals(m.entries))))
        assert spectral_radius(m) == pytest.approx(expected, rel=1e-13)

    def test_against_dense_eigenvalue_oracle(self):
        rng = np.random.default_rng(17)
        for n in (3, 4, 6, 9):
            for _ in range(20):
                entries = rng.uniform(0.0, 1.0, size=(n, n))
                entries[rng.uniform(size=(n, n)) < 0.4] = 0.0
                expected = float(np.max(np.abs(np.linalg.eigvals(entries))))
                got = spectral_radius(NonnegMatrix(entries))
                assert abs(got - expected) <= 1e-13 * max(1.0, expected)


class TestPressure:
    def test_zero_exponent_counts_maps(self):
        assert pressure(EX1, 0.0).value == math.log(2)
        assert pressure(EX2, 0.0).value == math.log(4)
        assert pressure(EX1, 0.0).branch == "zero_s"

    def test_determinant_branch_example1(self):
        p = pressure(EX1, 2.0)
        assert p.branch == "determinant"
        assert abs(p.value - math.log(182 / 243)) <= 1e-13

    def test_determinant_branch_example2(self):
        assert abs(pressure(EX2, 2.0).value - math.log(2 / 3)) <= 1e-13

    def test_lifted_branch_reports_floor(self):
        p = pressure(EX1, 1.4)
        assert p.branch == "lifted"
        assert p.k == 1
        assert p.spectral_radius == pytest.approx(math.exp(p.value), rel=1e-15)

    def test_example2_closed_form_matrix(self):
        # For 1 <= s <= 2 the lifted sum is
        # (1/3^s) * ((2^(s-1)+2, 2), ((2/3)^(s-1)+(4/3)^(s-1), 2^(s-1)+2))
        for s in np.linspace(1.0, 2.0, 11):
            s = float(s)
            closed = np.array(
                [
                    [2.0 ** (s - 1) + 2.0, 2.0],
                    [(2 / 3) ** (s - 1) + (4 / 3) ** (s - 1), 2.0 ** (s - 1) + 2.0],
                ]
            ) / 3.0**s
            expected = spectral_radius(NonnegMatrix(closed))
            got = math.exp(pressure(EX2, s).value) if s < 2 else sum(abs_determinant(a) ** (s / 2) for a in EX2)
            assert rel_close(got, expected, 1e-12)

    def test_strictly_decreasing_for_contractive_systems(self):
        rng = np.random.default_rng(23)
        for _ in range(10):
            d = int(rng.integers(2, 4))
            maps = random_system(rng, int(rng.integers(2, 4)), d)
            grid = np.linspace(0.0, d + 1.0, 25)
            values = [pressure(maps, float(s)).value for s in grid]
            assert all(x > y for x, y in zip(values, values[1:]))

    def test_branch_continuity_at_dimension(self):
        rng = np.random.default_rng(29)
        eps = 1e-6
        for _ in range(10):
            d = int(rng.integers(2, 4))
            maps = random_system(rng, int(rng.integers(2, 4)), d)
            below = pressure(maps, d - eps).value
            above = pressure(maps, d + eps).value
            assert abs(below - above) <= 1e-4

    def test_adjacent_lifts_agree_at_one(self):
        rng = np.random.default_rng(31)
        for _ in range(20):
            maps = random_system(rng, int(rng.integers(2, 5)), 2)
            low = math.log(spectral_radius(lifted_sum(maps, 1.0, k=0)))
            high = math.log(spectral_radius(lifted_sum(maps, 1.0, k=1)))
            assert rel_close(low, high, 1e-12) or abs(low - high) <= 1e-12

    def test_upper_lift_hits_determinant_sum_at_two(self):
        rng = np.random.default_rng(37)
        for _ in range(20):
            maps = random_system(rng, int(rng.integers(2, 5)), 2)
            lifted = math.log(spectral_radius(lifted_sum(maps, 2.0, k=1)))
            det_sum = math.log(math.fsum(abs_determinant(a) for a in maps))
            assert abs(lifted - det_sum) <= 1e-12

    def test_empty_system_rejected(self):
        with pytest.raises(EmptySystem):
            pressure([], 1.0)

    def test_mixed_dimensions_rejected(self):
        with pytest.raises(DimensionMismatch):
            pressure([identity(2), identity(3)], 1.0)

    def test_negative_exponent_rejected(self):
        with pytest.raises(NegativeExponent):
            pressure(EX1, -1.0)


class TestModifiedPressure:
    def test_equals_pressure_at_t_one(self):
        for s in (1.0, 1.25, 1.5, 1.75, 2.0):
            expected = pressure(EX2, s).value if s < 2 else math.log(2 / 3)
            assert rel_close(modified_pressure(EX2, s, 1.0), expected, 1e-12)

    def test_single_similitude(self):
        r = 0.6
        a = GenPermMatrix(2, (1, 2), (r, r))
        for s, t in ((0.8, 0.7), (1.0, 0.6), (1.2, 1.0)):
            assert rel_close(modified_pressure([a], s, t), s * math.log(r), 1e-13)

    def test_empty_system_rejected(self):
        with pytest.raises(EmptySystem):
            modified_pressure([], 1.0, 1.0)
