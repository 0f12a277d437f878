import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from lanecraft.poly import LinearSystem, Polynomial, SingularSystem, solve


def direct_sum(coeffs, t):
    # independent oracle: plain power-sum evaluation
    return sum(c * t**k for k, c in enumerate(coeffs))


def central_difference(p, t, h=1e-6):
    return (p(t + h) - p(t - h)) / (2.0 * h)


finite_coeffs = st.lists(
    st.floats(-10.0, 10.0, allow_nan=False), min_size=1, max_size=8
)


class TestEvaluate:
    def test_constant_velocity_line(self):
        assert Polynomial((0.0, 27.778))(1.0) == 27.778

    def test_constant_poly_far_out(self):
        assert Polynomial((5.0,))(100.0) == 5.0

    def test_unit_quintic_at_one(self):
        coeffs = (0.0, 0.0, 0.0, 10.0, -15.0, 6.0)
        expected = direct_sum(coeffs, 1.0)
        assert expected == 1.0
        assert Polynomial(coeffs)(1.0) == pytest.approx(expected, abs=1e-12)

    def test_array_evaluation(self):
        p = Polynomial((1.0, 2.0, 3.0))
        ts = np.array([0.0, 1.0, 2.0])
        assert np.allclose(p(ts), [direct_sum(p.coeffs, t) for t in ts])

    @given(coeffs=finite_coeffs)
    def test_at_zero_returns_constant_term_exactly(self, coeffs):
        assert Polynomial(tuple(coeffs))(0.0) == coeffs[0]

    def test_empty_coeffs_rejected(self):
        with pytest.raises(ValueError):
            Polynomial(())


class TestDerivative:
    def test_second_derivative_of_cubic(self):
        assert Polynomial((0.0, 0.0, 0.0, 1.0)).derivative(2).coeffs == (0.0, 6.0)

    def test_order_zero_is_identity(self):
        p = Polynomial((1.0, 2.0, 3.0))
        assert p.derivative(0).coeffs == (1.0, 2.0, 3.0)

    def test_unit_quintic_end_velocity_is_zero(self):
        p = Polynomial((0.0, 0.0, 0.0, 10.0, -15.0, 6.0))
        fd = central_difference(p, 1.0)
        assert fd == pytest.approx(0.0, abs=1e-4)
        assert p.derivative()(1.0) == pytest.approx(fd, abs=1e-4)

    def test_past_degree_gives_zero_polynomial(self):
        assert Polynomial((4.0, 3.0)).derivative(5).coeffs == (0.0,)

    def test_negative_order_rejected(self):
        with pytest.raises(ValueError):
            Polynomial((1.0,)).derivative(-1)

    @given(coeffs=finite_coeffs)
    def test_degree_drops_by_one(self, coeffs):
        p = Polynomial(tuple(coeffs))
        assert p.derivative().degree == max(p.degree - 1, 0)

    @given(coeffs=finite_coeffs, t=st.floats(0.0, 10.0, allow_nan=False))
    @settings(max_examples=200)
    def test_matches_central_difference(self, coeffs, t):
        p = Polynomial(tuple(coeffs))
        err = abs(p.derivative()(t) - central_difference(p, t))
        assert err <= 1e-4 * max(1.0, abs(p(t)))

    @given(
        coeffs=st.lists(st.floats(-10.0, 10.0, allow_nan=False), min_size=4, max_size=4),
        other=st.lists(st.floats(-10.0, 10.0, allow_nan=False), min_size=4, max_size=4),
        alpha=st.floats(-10.0, 10.0, allow_nan=False),
        beta=st.floats(-10.0, 10.0, allow_nan=False),
    )
    def test_linearity(self, coeffs, other, alpha, beta):
        p, q = Polynomial(tuple(coeffs)), Polynomial(tuple(other))
        combo = Polynomial(
            tuple(alpha * a + beta * b for a, b in zip(coeffs, other))
        ).derivative()
        parts = [
            alpha * a + beta * b
            for a, b in zip(p.derivative().coeffs, q.derivative().coeffs)
        ]
        for got, want in zip(combo.coeffs, parts):
            assert got == pytest.approx(want, abs=1e-12 * max(1.0, abs(want)))


class TestSolve:
    def test_identity_system(self):
        system = LinearSystem(
            matrix=((1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0)),
            rhs=(1.0, 2.0, 3.0),
        )
        assert solve(system) == [1.0, 2.0, 3.0]

    def test_diagonal_system(self):
        system = LinearSystem(matrix=((2.0, 0.0), (0.0, 4.0)), rhs=(2.0, 8.0))
        assert solve(system) == [1.0, 2.0]

    def test_quintic_lateral_system_closed_form(self):
        # boundary rows written out by hand; closed form 10w/T^3, -15w/T^4, 6w/T^5
        w, T = 3.6, 5.0
        matrix = (
            (1.0, 0.0, 0.0, 0.0, 0.0, 0.0),
            (0.0, 1.0, 0.0, 0.0, 0.0, 0.0),
            (0.0, 0.0, 2.0, 0.0, 0.0, 0.0),
            (1.0, T, T**2, T**3, T**4, T**5),
            (0.0, 1.0, 2 * T, 3 * T**2, 4 * T**3, 5 * T**4),
            (0.0, 0.0, 2.0, 6 * T, 12 * T**2, 20 * T**3),
        )
        got = solve(LinearSystem(matrix=matrix, rhs=(0.0, 0.0, 0.0, w, 0.0, 0.0)))
        expected = [0.0, 0.0, 0.0, 10 * w / T**3, -15 * w / T**4, 6 * w / T**5]
        assert expected[3:] == pytest.approx([0.288, -0.0864, 0.006912], rel=1e-12)
        for have, want in zip(got, expected):
            assert have == pytest.approx(want, abs=1e-9 * max(1.0, abs(want)))

    def test_singular_raises(self):
        system = LinearSystem(matrix=((1.0, 2.0), (2.0, 4.0)), rhs=(1.0, 2.0))
        with pytest.raises(SingularSystem):
            solve(system)

    def test_shape_mismatch_rejected(self):
        with pytest.raises(ValueError):
            LinearSystem(matrix=((1.0, 2.0),), rhs=(1.0, 2.0))

    @given(data=st.data())
    @settings(max_examples=150)
    def test_residual_bound_on_well_conditioned_systems(self, data):
        n = data.draw(st.integers(1, 8))
        entries = data.draw(
            st.lists(st.floats(-10.0, 10.0, allow_nan=False), min_size=n * n, max_size=n * n)
        )
        rhs = data.draw(
            st.lists(st.floats(-10.0, 10.0, allow_nan=False), min_size=n, max_size=n)
        )
        a = np.array(entries).reshape(n, n)
        # a healthy scale plus a bounded condition number keeps every pivot
        # far above the solver's singularity tolerance
        assume(np.max(np.abs(a)) >= 1.0 and np.linalg.cond(a) < 1e6)
        x = solve(LinearSystem(matrix=tuple(map(tuple, a)), rhs=tuple(rhs)))
        residual = np.max(np.abs(a @ np.array(x) - np.array(rhs)))
        assert residual <= 1e-9 * max(1.0, np.max(np.abs(rhs)))
