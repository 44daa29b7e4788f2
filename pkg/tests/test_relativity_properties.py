import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from hardylab.causal import LorentzBoost, SpacetimeEvent, boost, interval

coordinates = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False)
betas = st.floats(min_value=-0.99, max_value=0.99, allow_nan=False)
slow_betas = st.floats(min_value=-0.9, max_value=0.9, allow_nan=False)


@settings(derandomize=True, max_examples=500)
@given(coordinates, coordinates, coordinates, coordinates, betas)
def test_interval_is_invariant(t1, x1, t2, x2, beta):
    """Test that boosts preserve the spacetime interval"""
    a, b = SpacetimeEvent(t1, x1), SpacetimeEvent(t2, x2)
    frame = LorentzBoost(beta)
    before = interval(a, b)[0]
    after = interval(boost(frame, a), boost(frame, b))[0]
    assert abs(after - before) <= 1e-9 * max(1.0, abs(before))


@settings(derandomize=True)
@given(slow_betas, slow_betas)
def test_composition_matches_matrix_product(beta1, beta2):
    """Test that composing boosts adds velocities relativistically"""
    first, second = LorentzBoost(beta1), LorentzBoost(beta2)
    composed = second.compose(first)
    assert np.allclose(composed.matrix, second.matrix @ first.matrix, atol=1e-12)


@settings(derandomize=True)
@given(betas, coordinates, coordinates)
def test_inverse_boost(beta, t, x):
    """Test that a boost followed by its inverse is the identity"""
    frame = LorentzBoost(beta)
    e = frame.inverse().apply(frame.apply(SpacetimeEvent(t, x)))
    assert abs(e.t - t) <= 1e-9 * frame.gamma**2
    assert abs(e.x - x) <= 1e-9 * frame.gamma**2


def test_interval_class_is_invariant():
    """Test that seeded random pairs keep their interval class in every frame"""
    rng = np.random.default_rng(0)
    checked = 0
    for _ in range(10_000):
        t1, x1, t2, x2 = rng.uniform(-10.0, 10.0, size=4)
        a, b = SpacetimeEvent(t1, x1), SpacetimeEvent(t2, x2)
        value, kind = interval(a, b)
        if abs(value) < 1e-6:
            continue
        frame = LorentzBoost(rng.uniform(-0.99, 0.99))
        assert interval(boost(frame, a), boost(frame, b))[1] == kind
        checked += 1
    assert checked > 9_000
