import numpy as np
import pytest

from hardylab.causal import (
    Criterion,
    HardyGeometry,
    IntervalClass,
    LorentzBoost,
    NonlocalKind,
    Spacetime,
    SpacetimeEvent,
    aharonov_albert,
    boost,
    er_criterion,
    gated_assignment,
    hellwig_kraus_validity,
    interval,
    li1_check,
    nonlocal_region,
    region_membership,
)
from hardylab.causal.region import backward_cone, forward_cone, outside_forward_cone
from hardylab.core.exception import (
    CausalException,
    CriterionException,
    EmptyApexException,
    InvalidBoostException,
    MissingAssignmentException,
)
from hardylab.hardy import HardyExperiment

F_PLUS = LorentzBoost(0.6)
F_MINUS = LorentzBoost(-0.6)
TESTED_BOOSTS = [0.0, 0.3, -0.3, 0.6, -0.6, 0.9, -0.9]


def test_boost_coordinates():
    """Test the boosted coordinates of BS2+"""
    e = boost(F_PLUS, SpacetimeEvent(0.0, 1.0, "BS2+"))
    assert e.t == pytest.approx(-0.75)
    assert e.x == pytest.approx(1.25)
    assert e.label == "BS2+"
    assert F_PLUS.gamma == pytest.approx(1.25)


def test_boost_examples():
    """Test the identity boost and the electron side of the experiment"""
    e = boost(LorentzBoost(0.0), SpacetimeEvent(2.0, 3.0))
    assert (e.t, e.x) == (2.0, 3.0)
    e = boost(F_PLUS, SpacetimeEvent(0.0, -1.0))
    assert e.t == pytest.approx(0.75)
    assert e.x == pytest.approx(-1.25)
    assert interval(e, e) == (0.0, IntervalClass.LIGHTLIKE)


@pytest.mark.parametrize("beta", [1.0, -1.0, 1.5, float("nan")])
def test_invalid_boost(beta: float):
    """Test that boosts must stay below the speed of light"""
    with pytest.raises(InvalidBoostException):
        LorentzBoost(beta)


def test_invalid_event():
    """Test that events need finite coordinates"""
    with pytest.raises(CausalException):
        SpacetimeEvent(float("inf"), 0.0)


def test_interval_classes():
    """Test the classification of intervals"""
    origin = SpacetimeEvent(0.0, 0.0)
    assert interval(origin, SpacetimeEvent(1.0, 0.5))[1] == IntervalClass.TIMELIKE
    assert interval(origin, SpacetimeEvent(0.5, 1.0))[1] == IntervalClass.SPACELIKE
    assert interval(origin, SpacetimeEvent(1.0, -1.0))[1] == IntervalClass.LIGHTLIKE
    assert interval(origin, SpacetimeEvent(2.0, 1.0))[0] == pytest.approx(-3.0)


def test_ordering_flips(geometry: HardyGeometry):
    """Test that BS2+ comes first in F+ and BS2- comes first in F-"""
    for frame, first, second in ((F_PLUS, "BS2+", "BS2-"), (F_MINUS, "BS2-", "BS2+")):
        labels = [e.label for e in geometry.ordering(frame)]
        assert labels.index(first) < labels.index(second)


def test_geometry_validation():
    """Test that the second beam splitters must be simultaneous in the lab"""
    events = {
        name: SpacetimeEvent(e.t, e.x, name)
        for name, e in HardyGeometry().events.items()
    }
    events["BS2+"] = SpacetimeEvent(0.1, 1.0, "BS2+")
    with pytest.raises(CausalException):
        HardyGeometry(events)
    del events["D+"]
    with pytest.raises(CausalException):
        HardyGeometry(events)
    with pytest.raises(CausalException):
        HardyGeometry()["D0"]


def test_geometry_json(geometry: HardyGeometry):
    """Test that the geometry is rebuilt from its JSON form"""
    rebuilt = HardyGeometry.from_json(geometry.to_json())
    assert rebuilt.events == geometry.events


def test_detectors_outside_opposite_cones(geometry: HardyGeometry):
    """Test that each detector is outside the forward cone of the opposite box"""
    assert outside_forward_cone(geometry["U+box"]).contains(geometry["D-"])
    assert outside_forward_cone(geometry["U-box"]).contains(geometry["D+"])
    assert not outside_forward_cone(geometry["U+box"]).contains(geometry["D+"])


def test_union_and_intersection(geometry: HardyGeometry):
    """Test that both detectors lie in the union and neither in the intersection"""
    union = geometry.region(NonlocalKind.UNION)
    intersection = geometry.region("intersection")
    for detector in ("D+", "D-"):
        assert region_membership(union, geometry[detector])
        assert not region_membership(intersection, geometry[detector])


def test_single_apex_intersection(geometry: HardyGeometry):
    """Test that an intersection of one exterior is that exterior"""
    region = nonlocal_region("intersection", [geometry["U+box"]])
    exterior = outside_forward_cone(geometry["U+box"])
    for e in geometry.events.values():
        assert region.contains(e) == exterior.contains(e)


def test_box_targets(geometry: HardyGeometry):
    """Test the light-cone criteria with the box of the positron as target"""
    assert er_criterion("ER3", [geometry["D-"]], geometry["U+box"])
    assert not er_criterion("ER2", [geometry["D-"]], geometry["U+box"])


def test_nonlocal_region_errors():
    """Test that regions need apexes and a known kind"""
    with pytest.raises(EmptyApexException):
        nonlocal_region("union", [])
    with pytest.raises(CausalException):
        nonlocal_region("everywhere", [SpacetimeEvent(0.0, 0.0)])


def test_region_algebra():
    """Test the set operations on regions"""
    origin = SpacetimeEvent(0.0, 0.0)
    later = SpacetimeEvent(1.0, 0.0)
    elsewhere = SpacetimeEvent(0.0, 2.0)
    future = forward_cone(origin)
    assert future.contains(later) and not future.contains(elsewhere)
    assert (~future).contains(elsewhere)
    assert (future | backward_cone(origin)).contains(SpacetimeEvent(-1.0, 0.0))
    assert not (future & backward_cone(later)).contains(elsewhere)
    assert Spacetime().contains(elsewhere)
    # The cone surface belongs to both the interior and the exterior
    edge = SpacetimeEvent(1.0, 1.0)
    assert future.contains(edge) and outside_forward_cone(origin).contains(edge)
    assert future.to_dict()["direction"] == "forward"


@pytest.mark.parametrize("beta", TESTED_BOOSTS)
def test_region_boost(geometry: HardyGeometry, beta: float):
    """Test that membership is the same in every frame"""
    frame = LorentzBoost(beta)
    for kind in NonlocalKind:
        region = geometry.region(kind)
        for e in geometry.events.values():
            assert region.contains(e) == region.boost(frame).contains(frame.apply(e))


def test_er1_flips_between_frames(geometry: HardyGeometry):
    """Test that constant-time prediction depends on the frame"""
    verdicts = {
        frame.beta: (
            er_criterion("ER1", [geometry["D-"]], geometry["BS2+"], frame),
            er_criterion("ER1", [geometry["D+"]], geometry["BS2-"], frame),
        )
        for frame in (F_PLUS, F_MINUS)
    }
    assert verdicts[0.6] == (False, True)
    assert verdicts[-0.6] == (True, False)


@pytest.mark.parametrize("beta", TESTED_BOOSTS)
def test_light_cone_criteria_are_frame_free(geometry: HardyGeometry, beta: float):
    """Test that ER2 and ER3 give the same verdicts in every frame"""
    frame = LorentzBoost(beta)
    for detector, target in (("D-", "BS2+"), ("D+", "BS2-")):
        info, event = [geometry[detector]], geometry[target]
        assert er_criterion(Criterion.ER3, info, event, frame)
        assert er_criterion(Criterion.ER3, info, event) == er_criterion(
            Criterion.ER3, info, event, frame
        )
        assert not er_criterion(Criterion.ER2, info, event, frame)


def test_criterion_errors(geometry: HardyGeometry):
    """Test the preconditions of the criteria"""
    with pytest.raises(CriterionException):
        er_criterion("ER1", [geometry["D-"]], geometry["BS2+"])
    with pytest.raises(CriterionException):
        er_criterion("ER3", [], geometry["BS2+"])
    with pytest.raises(CriterionException):
        er_criterion("ER4", [geometry["D-"]], geometry["BS2+"])
    with pytest.raises(CriterionException):
        gated_assignment("ER1", geometry)


def test_er1_assignment(geometry: HardyGeometry, experiment: HardyExperiment):
    """Test that ER1 gives a single element of reality in each boosted frame"""
    plus = gated_assignment("ER1", geometry, F_PLUS, experiment=experiment)
    assert plus.to_json()["values"] == {"U+": None, "U-": 1.0, "U+U-": None}
    minus = gated_assignment("ER1", geometry, F_MINUS, experiment=experiment)
    assert minus.to_json()["values"] == {"U+": 1.0, "U-": None, "U+U-": None}
    lab = gated_assignment("ER1", geometry, LorentzBoost(0.0), experiment=experiment)
    assert lab.assigned() == {}


def test_er3_assignment(geometry: HardyGeometry, experiment: HardyExperiment):
    """Test that ER3 attributes every value and reads the joint one counterfactually"""
    union = gated_assignment("ER3", geometry, F_PLUS, "union", experiment)
    assert union.assigned() == {"U+": 1.0, "U-": 1.0, "U+U-": 0.0}
    assert union.counterfactual
    intersection = gated_assignment("ER3", geometry, F_PLUS, "intersection", experiment)
    assert intersection.to_json()["values"]["U+U-"] is None
    assert not intersection.counterfactual


def test_lorentz_invariance(geometry: HardyGeometry, experiment: HardyExperiment):
    """Test that ER1 leaves values missing in some frame while ER3 agrees everywhere"""
    frames = {f"beta={b:g}": LorentzBoost(b) for b in TESTED_BOOSTS}
    er3 = {
        name: gated_assignment("ER3", geometry, frame, experiment=experiment)
        for name, frame in frames.items()
    }
    for observable in ("U+", "U-", "U+U-"):
        assert li1_check(er3, observable)
    er1 = {
        name: gated_assignment("ER1", geometry, frames[name], experiment=experiment)
        for name in ("beta=0.6", "beta=-0.6")
    }
    with pytest.raises(MissingAssignmentException) as e:
        li1_check(er1, "U-")
    assert e.value.frame == "beta=-0.6"


def test_hellwig_kraus_validity():
    """Test the region where a prepared state is still attributed"""
    region = hellwig_kraus_validity(
        [SpacetimeEvent(0.0, 0.0)], [SpacetimeEvent(2.0, 0.0)]
    )
    assert region.contains(SpacetimeEvent(2.5, 1.0))
    assert not region.contains(SpacetimeEvent(1.0, 0.0))
    assert not region.contains(SpacetimeEvent(-1.0, 0.0))
    assert hellwig_kraus_validity([], []).contains(SpacetimeEvent(-5.0, 0.0))


def test_aharonov_albert():
    """Test where the singlet is attributed once the left spin is measured"""
    verdicts = aharonov_albert().verdicts()
    assert verdicts == {
        "check-left": False,
        "check-right": True,
        "left-before-z": False,
        "right-at-t0": True,
        "z-left": False,
    }


@pytest.mark.parametrize(
    "epsilon,separation,t0", [(0.0, 1.0, 0.0), (0.1, -1.0, 0.0), (0.1, 1.0, -0.2)]
)
def test_aharonov_albert_validation(epsilon: float, separation: float, t0: float):
    """Test the parameters of the singlet scenario"""
    with pytest.raises(CausalException):
        aharonov_albert(epsilon, separation, t0)


@pytest.mark.parametrize("seed", range(10))
def test_regions_are_nested(seed: int):
    """Test that the intersection lies in each exterior and each exterior in the union"""
    rng = np.random.default_rng(seed)
    apexes = [
        SpacetimeEvent(*rng.uniform(-3.0, 3.0, size=2))
        for _ in range(rng.integers(1, 4))
    ]
    union = nonlocal_region("union", apexes)
    intersection = nonlocal_region("intersection", apexes)
    for t, x in rng.uniform(-6.0, 6.0, size=(200, 2)):
        e = SpacetimeEvent(t, x)
        inside = [region_membership(outside_forward_cone(a), e) for a in apexes]
        if region_membership(intersection, e):
            assert all(inside)
        if any(inside):
            assert region_membership(union, e)
