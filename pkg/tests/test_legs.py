import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qwell_engine import (
    ConstantN,
    ConstantWidth,
    DomainError,
    Isothermal,
    LegError,
    ProcessLeg,
    QuadratureConfig,
    UnitSystem,
    WellState,
    eigen_energy,
    integrate,
    isothermal_leg,
    isothermal_occupation,
    leg_heat,
    leg_pressure,
    leg_work_closed_form,
    state_energy,
)
from qwell_engine.legs import (
    isothermal_ref_width,
    leg_energy,
    leg_occupation,
    leg_pressure_law,
    leg_state,
    validate_leg,
)

from .conftest import PI2

LN2 = math.log(2.0)


def hot_isotherm(L1, u):
    return ProcessLeg(Isothermal(eigen_energy(1, L1, u)), WellState.pure(1, L1), WellState.pure(2, 2 * L1))


def constant_n(n, a, b):
    return ProcessLeg(ConstantN(n), WellState.pure(n, a), WellState.pure(n, b))


widths = st.floats(0.1, 10.0)
unit_systems = st.builds(UnitSystem, st.floats(0.2, 5.0), st.floats(0.2, 5.0))


class TestIsothermalOccupation:
    def test_start(self):
        assert isothermal_occupation(1.7, 1.7) == 1.0

    def test_end(self):
        assert isothermal_occupation(3.4, 1.7) == 0.0

    def test_interior(self):
        assert isothermal_occupation(math.sqrt(2) * 1.7, 1.7) == pytest.approx(2 / 3, rel=1e-14)

    @pytest.mark.parametrize("L", [0.9, 2.1])
    def test_outside(self, L):
        with pytest.raises(DomainError):
            isothermal_occupation(L, 1.0)

    @given(L_ref=widths, t=st.floats(0.0, 1.0), u=unit_systems)
    def test_energy_stays_on_isotherm(self, L_ref, t, u):
        L = L_ref * (1 + t)
        s = WellState.two_level(isothermal_occupation(L, L_ref), L)
        e = eigen_energy(1, L_ref, u)
        assert math.isclose(state_energy(s, u), e, rel_tol=1e-12)


class TestLegValidation:
    def test_isothermal_energy_mismatch(self, natural):
        with pytest.raises(LegError):
            validate_leg(ProcessLeg(Isothermal(1.0), WellState.pure(1, 1.0), WellState.pure(2, 2.0)), natural)

    def test_isothermal_rejects_high_levels(self, natural):
        s = WellState.pure(3, 3.0)
        e = state_energy(s, natural)
        with pytest.raises(LegError):
            validate_leg(ProcessLeg(Isothermal(e), s, s), natural)

    def test_constant_n_needs_pure(self, natural):
        with pytest.raises(LegError):
            validate_leg(ProcessLeg(ConstantN(1), WellState.pure(2, 1.0), WellState.pure(1, 2.0)), natural)

    def test_constant_n_needs_width_change(self, natural):
        with pytest.raises(LegError):
            validate_leg(constant_n(1, 2.0, 2.0), natural)

    def test_constant_width(self, natural):
        with pytest.raises(LegError):
            validate_leg(ProcessLeg(ConstantWidth(1.0), WellState.pure(1, 1.0), WellState.pure(2, 1.5)), natural)

    @pytest.mark.parametrize("kind", [lambda: Isothermal(0.0), lambda: ConstantN(0), lambda: ConstantWidth(-1.0)])
    def test_kind_invariants(self, kind):
        with pytest.raises(LegError):
            kind()

    def test_isothermal_leg_factory(self, natural):
        e = eigen_energy(1, 1.0, natural)
        leg = isothermal_leg(e, 1.2, 1.8, natural)
        assert leg.start.occupation(1) == pytest.approx((4 - 1.44) / 3, rel=1e-12)
        assert leg.end.occupation(1) == pytest.approx((4 - 3.24) / 3, rel=1e-12)


class TestLegPressure:
    def test_hot_isotherm_at_start(self, natural):
        L1 = 1.3
        assert leg_pressure(hot_isotherm(L1, natural), L1, natural) == pytest.approx(PI2 / L1**3, rel=1e-14)

    def test_constant_n_two(self, natural):
        assert leg_pressure(constant_n(2, 2.0, 4.0), 3.0, natural) == pytest.approx(4 * PI2 / 27, rel=1e-14)

    def test_ericsson_cold_isotherm(self, natural):
        L1 = 4.0
        e_cold = 2 * PI2 / L1**2
        leg = ProcessLeg(Isothermal(e_cold), WellState.pure(2, L1), WellState.pure(1, L1 / 2))
        for L in (2.0, 3.0, 4.0):
            assert leg_pressure(leg, L, natural) == pytest.approx(4 * PI2 / (L1**2 * L), rel=1e-14)

    def test_outside_interval(self, natural):
        with pytest.raises(DomainError):
            leg_pressure(hot_isotherm(1.0, natural), 2.5, natural)

    def test_constant_width_has_no_pressure_law(self, natural):
        leg = ProcessLeg(ConstantWidth(1.0), WellState.pure(1, 1.0), WellState.pure(2, 1.0))
        with pytest.raises(DomainError):
            leg_pressure(leg, 1.0, natural)
        with pytest.raises(DomainError):
            leg_pressure_law(leg, natural)

    @given(L1=widths, t=st.floats(0.0, 1.0), u=unit_systems)
    def test_isothermal_equation_of_state(self, L1, t, u):
        leg = hot_isotherm(L1, u)
        L = min(L1 * (1 + t), 2 * L1)
        assert math.isclose(L * leg_pressure(leg, L, u), 2 * leg.kind.energy, rel_tol=1e-12)

    @given(n=st.integers(1, 8), a=widths, b=widths, t=st.floats(0.0, 1.0), u=unit_systems)
    def test_constant_n_equation_of_state(self, n, a, b, t, u):
        if a == b:
            return
        leg = constant_n(n, a, b)
        lo, hi = leg.interval
        L = min(lo + t * (hi - lo), hi)
        assert math.isclose(L**3 * leg_pressure(leg, L, u), n * n * PI2 * u.hbar**2 / u.mass, rel_tol=1e-12)

    @given(L1=widths, t=st.floats(0.0, 1.0))
    def test_law_matches_pointwise(self, L1, t):
        u = UnitSystem.natural()
        for leg in (hot_isotherm(L1, u), constant_n(2, L1, 3 * L1)):
            lo, hi = leg.interval
            L = min(lo + t * (hi - lo), hi)
            assert math.isclose(leg_pressure_law(leg, u)(L), leg_pressure(leg, L, u), rel_tol=1e-14)

    @given(L1=widths, t=st.floats(0.0, 1.0))
    def test_state_pressure_on_isotherm(self, L1, t):
        from qwell_engine import state_pressure

        u = UnitSystem.natural()
        leg = hot_isotherm(L1, u)
        L = min(L1 * (1 + t), 2 * L1)
        p_state = state_pressure(leg_state(leg, L, u), u)
        assert math.isclose(p_state, leg_pressure(leg, L, u), rel_tol=1e-12)


class TestWorkAndHeat:
    def test_hot_stirling_isotherm(self, natural):
        L1 = 1.0
        leg = hot_isotherm(L1, natural)
        assert leg_work_closed_form(leg, natural) == pytest.approx(PI2 * LN2, rel=1e-14)
        assert leg_heat(leg, natural) == pytest.approx(PI2 * LN2, rel=1e-14)

    def test_constant_width_work_and_heat(self, natural):
        L = 1.5
        leg = ProcessLeg(ConstantWidth(L), WellState.pure(1, L), WellState.pure(2, L))
        assert leg_work_closed_form(leg, natural) == 0.0
        assert leg_heat(leg, natural) == pytest.approx(3 * PI2 / (2 * L**2), rel=1e-14)

    def test_constant_n_work(self, natural):
        # frozen from an mpmath quadrature of 4 pi^2 / L^3 over [2, 4]
        leg = constant_n(2, 2.0, 4.0)
        assert leg_work_closed_form(leg, natural) == pytest.approx(3.7011016504085095, rel=1e-14)
        assert leg_heat(leg, natural) == 0.0

    @given(n=st.integers(1, 6), a=widths, b=widths, u=unit_systems)
    def test_constant_n_matches_quadrature(self, n, a, b, u):
        if a == b:
            return
        leg = constant_n(n, a, b)
        w = leg_work_closed_form(leg, u)
        q = integrate(lambda L: leg_pressure(leg, L, u), a, b, QuadratureConfig(rel_tol=1e-11))
        assert abs(q - w) <= 1e-9 * abs(w)

    @given(L1=widths, s=st.floats(0.0, 1.0), t=st.floats(0.0, 1.0), u=unit_systems)
    def test_isothermal_matches_quadrature(self, L1, s, t, u):
        e = eigen_energy(1, L1, u)
        a, b = L1 * (1 + s), L1 * (1 + t)
        if a == b:
            return
        leg = isothermal_leg(e, a, b, u)
        w = leg_work_closed_form(leg, u)
        q = integrate(leg_pressure_law(leg, u), a, b, QuadratureConfig(rel_tol=1e-11))
        assert abs(q - w) <= 1e-9 * abs(w)

    @given(L1=widths, s=st.floats(0.0, 1.0), t=st.floats(0.0, 1.0), n=st.integers(1, 4), u=unit_systems)
    def test_first_law_per_leg(self, L1, s, t, n, u):
        a, b = L1 * (1 + s), L1 * (1 + t)
        legs = [
            isothermal_leg(eigen_energy(1, L1, u), a, b, u),
            ProcessLeg(ConstantWidth(a), WellState.pure(n, a), WellState(a, (0.25, 0.75))),
        ]
        if a != b:
            legs.append(constant_n(n, a, b))
        for leg in legs:
            dE = state_energy(leg.end, u) - state_energy(leg.start, u)
            lhs = leg_heat(leg, u) - leg_work_closed_form(leg, u)
            scale = max(state_energy(leg.start, u), state_energy(leg.end, u))
            assert abs(lhs - dE) <= 1e-10 * scale

    @given(L1=widths, s=st.floats(0.0, 1.0), t=st.floats(0.0, 1.0), u=unit_systems)
    def test_reversal_antisymmetry(self, L1, s, t, u):
        a, b = L1 * (1 + s), L1 * (1 + t)
        legs = [isothermal_leg(eigen_energy(1, L1, u), a, b, u),
                ProcessLeg(ConstantWidth(a), WellState.pure(1, a), WellState.pure(2, a))]
        if a != b:
            legs.append(constant_n(2, a, b))
        for leg in legs:
            back = leg.reversed()
            assert leg_work_closed_form(back, u) == -leg_work_closed_form(leg, u)
            assert leg_heat(back, u) == -leg_heat(leg, u)


class TestSamplingHelpers:
    def test_endpoint_occupations_exact(self, natural):
        leg = hot_isotherm(1.0, natural)
        assert leg_occupation(leg, 1.0, natural) == 1.0
        assert leg_occupation(leg, 2.0, natural) == 0.0
        assert leg_occupation(constant_n(2, 2.0, 4.0), 3.0, natural) == 0.0
        assert leg_occupation(constant_n(1, 2.0, 1.0), 1.5, natural) == 1.0

    def test_energy_along_legs(self, natural):
        leg = hot_isotherm(1.0, natural)
        assert leg_energy(leg, 1.5, natural) == leg.kind.energy
        assert leg_energy(constant_n(2, 2.0, 4.0), 3.0, natural) == eigen_energy(2, 3.0, natural)

    def test_ref_width_roundtrip(self, natural):
        assert isothermal_ref_width(eigen_energy(1, 2.3, natural), natural) == pytest.approx(2.3, rel=1e-15)
