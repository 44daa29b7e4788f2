import pytest

from hardylab.core.exception import (
    DimensionMismatchException,
    NotAProjectorException,
    ProductRuleException,
    ScenarioDefinitionException,
)
from hardylab.prodrule import (
    Case2,
    Case3,
    Const0,
    Const1,
    DiagonalOperator,
    DiagonalProjector,
    ExplicitLattice,
    case_derivation_trace,
    check_product_rule,
    classify_on_projectors,
    evaluate,
    function_from_config,
    random_product_rule_trials,
)

P1 = DiagonalProjector(3, [1])
P2 = DiagonalProjector(3, [2])
H = DiagonalOperator([1.0, -3.0, 2.0])


@pytest.mark.parametrize(
    "f,h,expected",
    [
        (Const1(), DiagonalOperator([0.0, 0.0, 0.0]), 1.0),
        (Const0(), H, 0.0),
        (Case2(1), P1, 1.0),
        (Case2(1), P2, 0.0),
        (Case2(2, alpha=2.0), H, 9.0),
        (Case2(2, alpha=3.0, signed=True), H, -27.0),
        (Case2(1, alpha=0.0), DiagonalOperator([0.0, 1.0, 1.0]), 0.0),
        (Case3([1, 3]), DiagonalOperator([2.0, 3.0, 5.0]), 10.0),
        (Case3([2, 3], [1.0, 2.0], [True, False]), H, -12.0),
    ],
)
def test_evaluate(f, h: DiagonalOperator, expected: float):
    """Test the value of every family on a sample operator"""
    assert evaluate(f, h) == pytest.approx(expected)


def test_evaluate_lattice():
    """Test that explicit lattices read projectors off their index subsets"""
    f = ExplicitLattice.principal_filter(3, [1])
    assert f.evaluate(DiagonalProjector(3, [1, 2])) == 1.0
    assert f.evaluate(DiagonalProjector(3, [2, 3])) == 0.0
    with pytest.raises(NotAProjectorException):
        f.evaluate(H)


def test_dimension_is_enforced():
    """Test that functions bound to a dimension reject other operators"""
    with pytest.raises(DimensionMismatchException):
        Const1(n=4).evaluate(H)
    with pytest.raises(DimensionMismatchException):
        check_product_rule(Const1(), H, DiagonalOperator([1.0] * 4))


def test_check_product_rule():
    """Test the product rule on single pairs"""
    a = DiagonalOperator([4.0, 1.0, 1.0])
    b = DiagonalOperator([9.0, -1.0, 0.5])
    assert check_product_rule(Case2(1, alpha=0.5), a, b)
    assert check_product_rule(Case3([1, 2], [0.5, 1.0], [False, True]), a, b)
    assert not check_product_rule(ExplicitLattice(3, [[1], [2]]), P1, P2)


@pytest.mark.parametrize(
    "f",
    [
        Const0(),
        Const1(),
        Case2(2, alpha=1.5, signed=True),
        Case3([1, 3], [0.5, 2.0], [True, False]),
        ExplicitLattice.principal_filter(3, [1, 2]),
    ],
    ids=repr,
)
def test_random_trials_pass(f):
    """Test that every family satisfies the product rule on random pairs"""
    report = random_product_rule_trials(f, 3, trials=1000, seed=42)
    assert report.passed
    assert report.to_json()["seed"] == 42
    assert report.to_json()["failures"] == []


def test_random_trials_fail():
    """Test that an assignment valued 1 on two singletons is caught"""
    report = random_product_rule_trials(ExplicitLattice(3, [[1], [2]]), 3, seed=0)
    assert not report.passed
    assert report.to_json()["passed"] is False


def test_random_trials_are_seeded():
    """Test that the same seed draws the same pairs"""
    f = ExplicitLattice(3, [[1], [2], [3]])
    first = random_product_rule_trials(f, 3, trials=50, seed=7).to_json()
    second = random_product_rule_trials(f, 3, trials=50, seed=7).to_json()
    assert first == second


def test_vanishing_exponent():
    """Test that a tiny exponent tends to the support indicator of the eigenvalue"""
    f = Case2(1, alpha=1e-6)
    assert f.evaluate(DiagonalOperator([0.5, 1.0, 1.0])) == pytest.approx(1.0, abs=1e-5)
    assert f.evaluate(DiagonalOperator([0.0, 1.0, 1.0])) == 0.0
    assert random_product_rule_trials(f, 3, trials=200, seed=1).passed


@pytest.mark.parametrize(
    "factory,exception",
    [
        (lambda: Case2(0), DimensionMismatchException),
        (lambda: Case2(4, n=3), DimensionMismatchException),
        (lambda: Case2(1, alpha=-1.0), ProductRuleException),
        (lambda: Case3([1]), ProductRuleException),
        (lambda: Case3([1, 1]), ProductRuleException),
        (lambda: Case3([1, 2], [1.0]), ProductRuleException),
        (lambda: Case3([1, 2], [0.0, 1.0]), ProductRuleException),
        (lambda: Case3([1, 5], n=3), DimensionMismatchException),
        (lambda: DiagonalOperator([1.0, 2.0]), DimensionMismatchException),
        (lambda: DiagonalOperator([1.0, 2.0, float("inf")]), ProductRuleException),
        (lambda: DiagonalProjector(3, [4]), DimensionMismatchException),
        (lambda: ExplicitLattice(3, [[0, 1]]), DimensionMismatchException),
    ],
)
def test_constructor_errors(factory, exception):
    """Test that invalid parameters are rejected"""
    with pytest.raises(exception):
        factory()


def test_not_a_projector():
    """Test that projectors need eigenvalues 0 and 1"""
    assert DiagonalProjector.from_operator(DiagonalOperator([1.0, 0.0, 1.0])).name == (
        "P13"
    )
    with pytest.raises(NotAProjectorException):
        DiagonalProjector.from_operator(H)


def test_classify_constant():
    """Test that the constant 1 is valued 1 on every singleton"""
    report = classify_on_projectors(Const1(), 3)
    assert report.case == 1
    assert report.singletons == [1.0, 1.0, 1.0]


def test_classify_single_index():
    """Test that a single-index function singles out its projector"""
    report = classify_on_projectors(Case2(2, alpha=2.0), 4)
    assert report.case == 2
    assert report.unique_singleton == 2
    assert report.to_json()["singletons"] == [0.0, 1.0, 0.0, 0.0]


def test_classify_product():
    """Test that a product over indices first becomes 1 on their joint projector"""
    report = classify_on_projectors(Case3([1, 2]), 3)
    assert report.case == 3
    assert report.minimal_projectors == [frozenset({1, 2})]
    assert not report.is_zero


def test_classify_zero():
    """Test that the constant 0 vanishes on the whole lattice"""
    report = classify_on_projectors(Const0(), 3)
    assert report.case == 3
    assert report.is_zero
    assert report.to_json()["minimal_projectors"] == []


def test_classify_violation():
    """Test that two singletons valued 1 leave no unique projector"""
    report = classify_on_projectors(ExplicitLattice(3, [[1], [2]]), 3)
    assert report.case == 2
    assert report.unique_singleton is None


@pytest.mark.parametrize("f,length", [(Const1(), 9), (Case2(1), 7), (Case2(3), 7)])
def test_derivation_trace(f, length: int):
    """Test that every step of the derivation holds on random spectra"""
    steps = case_derivation_trace(f, 3, seed=0)
    assert len(steps) == length
    assert all(s.holds for s in steps)
    assert all(s.to_json()["holds"] for s in steps)


@pytest.mark.parametrize("f", [Const0(), Case3([1, 2])])
def test_derivation_trace_unsupported(f):
    """Test that only the constant and single-index cases have traces"""
    with pytest.raises(ProductRuleException):
        case_derivation_trace(f)


@pytest.mark.parametrize(
    "config,expected",
    [
        ({"case": "const1"}, Const1()),
        ({"case": "case2", "i": 2, "alpha": 1.5}, Case2(2, alpha=1.5)),
        (
            {"case": "case3", "indices": [1, 3], "signed": [True, False]},
            Case3([1, 3], signed=[True, False]),
        ),
        (
            {"case": "lattice", "n": 3, "filter": [2]},
            ExplicitLattice.principal_filter(3, [2]),
        ),
    ],
)
def test_function_from_config(config, expected):
    """Test that functions are built from their JSON form"""
    assert function_from_config(config) == expected


@pytest.mark.parametrize(
    "config",
    [
        {"case": "case9"},
        {"case": "case2"},
        {"case": "case2", "i": 1, "beta": 2},
        {"case": "case3", "indices": [1]},
        {"case": "lattice", "n": 3, "ones": [[1]], "filter": [1]},
        {"i": 1},
    ],
)
def test_function_from_invalid_config(config):
    """Test that invalid function definitions are reported"""
    with pytest.raises(ScenarioDefinitionException):
        function_from_config(config)
