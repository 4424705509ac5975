import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from landau_ac.landau import (
    LandauQuantumNumbers as LQ,
    eigenfunction_landau,
    energy_landau,
    energy_sq_landau,
    nonrel_energy_landau,
    oscillator_center,
    oscillator_eigenvalue,
    spectrum_table,
)
from landau_ac.model import PhysicalParams
from landau_ac.profiles import overlap
from landau_ac.symmetric import energy_sq_symmetric

UNIT = PhysicalParams(1.0, 1.0, 1.0, 0.0)


def x_grid(params, p_y=0.0, n=20001, widths=12.0):
    geo = oscillator_center(params, p_y)
    return np.linspace(geo.center - widths * geo.width, geo.center + widths * geo.width, n)


class TestEnergies:
    def test_ground_state(self):
        assert energy_sq_landau(UNIT, LQ(0)) == 3.0

    def test_with_axial_momentum(self):
        params = PhysicalParams(1.0, 1.0, 1.0, 3.0)
        assert energy_sq_landau(params, LQ(0), include_k=True) == 12.0

    def test_independent_of_p_y(self):
        assert energy_sq_landau(UNIT, LQ(0, 0.0)) == energy_sq_landau(UNIT, LQ(0, 100.0))

    @given(st.integers(0, 30), st.floats(-1e3, 1e3), st.floats(0.01, 10), st.floats(0.1, 5))
    def test_p_y_degeneracy(self, n, p_y, coupling, mass):
        params = PhysicalParams(coupling, 1.0, mass, 0.2)
        assert energy_sq_landau(params, LQ(n, p_y), True) == energy_sq_landau(params, LQ(n, 0.0), True)

    @pytest.mark.parametrize("n", range(11))
    @pytest.mark.parametrize("coupling", [0.3, 1.0, 7.0])
    def test_matches_symmetric_l0(self, n, coupling):
        params = PhysicalParams(coupling, 1.0, 1.7, 0.4)
        assert energy_sq_landau(params, LQ(n)) == energy_sq_symmetric(params, (n, 0))

    def test_oscillator_part(self):
        assert [oscillator_eigenvalue(PhysicalParams(4.0, 1.0), n) for n in range(3)] == [4.0, 12.0, 20.0]

    def test_branch(self):
        assert energy_landau(UNIT, LQ(1), branch=-1) == -math.sqrt(5.0)


class TestGeometry:
    @pytest.mark.parametrize(
        "p_y,coupling,center", [(2.0, 1.0, -2.0), (0.0, 1.0, 0.0), (-3.0, 2.0, 1.5)]
    )
    def test_center(self, p_y, coupling, center):
        geo = oscillator_center(PhysicalParams(coupling, 1.0), p_y)
        assert geo.center == center
        assert geo.width == pytest.approx(coupling**-0.5)


class TestNonRelativistic:
    def test_value(self):
        params = PhysicalParams(0.01, 1.0, 1.0, 0.0)
        assert nonrel_energy_landau(params, LQ(0)) == pytest.approx(1.01, rel=1e-15)

    def test_exact_value(self):
        params = PhysicalParams(0.01, 1.0, 1.0, 0.0)
        assert energy_landau(params, LQ(0)) == pytest.approx(1.0099504938362078, rel=1e-15)

    def test_gap_scaling(self):
        def gap(coupling):
            params = PhysicalParams(coupling, 1.0, 1.0, 0.0)
            return energy_landau(params, LQ(0)) - nonrel_energy_landau(params, LQ(0))

        assert gap(0.01) == pytest.approx(-4.950616379220466e-05, rel=1e-9)
        assert gap(0.01) / gap(0.005) == pytest.approx(4.0, rel=0.1)


class TestEigenfunction:
    def test_ground_state_gaussian(self):
        params = PhysicalParams(2.0, 1.0)
        grid = x_grid(params, p_y=3.0, n=2001)
        prof = eigenfunction_landau(params, LQ(0, 3.0), grid, normalize=False)
        np.testing.assert_allclose(prof.values, np.exp(-2.0 * (grid + 1.5) ** 2 / 2), rtol=1e-14)
        assert prof.node_count == 0

    def test_first_excited_node_at_center(self):
        params = PhysicalParams(1.0, 1.0)
        grid = x_grid(params, p_y=2.0, n=2001)
        prof = eigenfunction_landau(params, LQ(1, 2.0), grid)
        assert prof.node_count == 1
        idx = np.flatnonzero(np.diff(np.sign(prof.values)))
        assert grid[idx[0]] <= -2.0 <= grid[idx[0] + 1]

    def test_hermite_roots(self):
        # H_3(x) = 8x^3 - 12x vanishes at 0 and +-sqrt(3/2)
        grid = np.linspace(-8, 8, 16000)
        prof = eigenfunction_landau(UNIT, LQ(3), grid)
        assert prof.node_count == 3
        idx = np.flatnonzero(np.diff(np.sign(prof.values)))
        for i, root in zip(idx, [-math.sqrt(1.5), 0.0, math.sqrt(1.5)]):
            assert grid[i] < root < grid[i + 1]

    @pytest.mark.parametrize("n", range(11))
    def test_parity_about_center(self, n):
        params = PhysicalParams(1.3, 1.0)
        p_y = -0.7
        x0 = oscillator_center(params, p_y).center
        s = np.linspace(0.01, 4.0, 300)
        plus = eigenfunction_landau(params, LQ(n, p_y), x0 + s, normalize=False).values
        minus = eigenfunction_landau(params, LQ(n, p_y), (x0 - s)[::-1], normalize=False).values[::-1]
        scale = np.max(np.abs(plus))
        np.testing.assert_allclose(plus, (-1) ** n * minus, rtol=1e-12, atol=1e-12 * scale)

    @pytest.mark.parametrize("n", range(11))
    def test_node_count(self, n):
        assert eigenfunction_landau(UNIT, LQ(n), x_grid(UNIT, n=4001)).node_count == n

    @pytest.mark.parametrize("p_y", [0.0, 5.0])
    def test_orthonormal(self, p_y):
        params = PhysicalParams(0.5, 1.0)
        grid = x_grid(params, p_y)
        profiles = [eigenfunction_landau(params, LQ(n, p_y), grid) for n in range(6)]
        for i, a in enumerate(profiles):
            for j, b in enumerate(profiles):
                assert abs(overlap(a, b) - (i == j)) <= 1e-6

    def test_norm_matches_closed_form(self):
        # int H_n(y)^2 e^{-y^2} dy = 2^n n! sqrt(pi), dx = dy / sqrt(coupling)
        params = PhysicalParams(3.0, 1.0)
        for n in (0, 2, 5):
            prof = eigenfunction_landau(params, LQ(n), x_grid(params), normalize=False)
            expected = 2**n * math.factorial(n) * math.sqrt(math.pi) / math.sqrt(3.0)
            assert prof.norm == pytest.approx(expected, rel=1e-10)

    def test_off_center_grid_rejected(self):
        with pytest.raises(ValueError):
            eigenfunction_landau(UNIT, LQ(0, 50.0), np.linspace(-5, 5, 500))


class TestSpectrumTable:
    def test_rows(self):
        table = spectrum_table(UNIT, 3, p_y=2.0)
        assert [e.qn.n for e in table] == [0, 1, 2, 3]
        assert [e.energy_sq for e in table] == [3.0, 5.0, 7.0, 9.0]
        assert all(e.qn.p_y == 2.0 for e in table)
