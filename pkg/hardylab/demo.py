from __future__ import annotations

from typing import Any, Awaitable, Callable, MutableMapping, MutableSequence

from hardylab.causal import aharonov_albert
from hardylab.core.context import STATE_TOLERANCE, LabContext
from hardylab.scenario import AblScenario, HardyScenario, Table


async def hardy_paradox(
    context: LabContext,
) -> tuple[MutableMapping[str, Any], MutableSequence[Table]]:
    """
    The whole argument in one run: the final amplitudes, the rate of joint
    dark-port detections, the probability-one inferences, the ABL values
    of the intermediate observables and the product-rule violation they imply.
    """
    hardy = HardyScenario(context, {})
    hardy_result = await hardy.run()
    abl = AblScenario(context, {"counterfactual": True})
    abl_result = await abl.run()
    result = {
        "amplitudes": hardy_result["amplitudes"],
        "coincidence": hardy_result["probabilities"]["D+D-"],
        "conditionals": hardy_result["conditionals"],
        "abl": abl_result["probabilities"],
        "violations": abl_result["violations"],
    }
    tables = [
        *hardy.tables(hardy_result),
        *abl.tables(abl_result),
        Table(
            "VERDICT",
            ["STATEMENT"],
            [
                [
                    f"f({v['a']}) f({v['b']}) = {v['f_a'] * v['f_b']:g} "
                    f"but f({v['a']}{v['b']}) = {v['f_ab']:g}"
                ]
                for v in result["violations"]
            ],
        ),
    ]
    return result, tables


async def aharonov_albert_demo(
    context: LabContext,
) -> tuple[MutableMapping[str, Any], MutableSequence[Table]]:
    scenario = aharonov_albert()
    verdicts = scenario.verdicts(tolerance=context.get_tolerance(STATE_TOLERANCE))
    result = {
        "epsilon": scenario.epsilon,
        "separation": scenario.separation,
        "t0": scenario.t0,
        "region": scenario.region.to_dict(),
        "verdicts": verdicts,
    }
    tables = [
        Table(
            f"SINGLET ATTRIBUTED (epsilon = {scenario.epsilon:g}, "
            f"separation = {scenario.separation:g}, t0 = {scenario.t0:g})",
            ["EVENT", "ATTRIBUTED"],
            [[label, inside] for label, inside in verdicts.items()],
        )
    ]
    return result, tables


demo_functions: MutableMapping[
    str,
    Callable[
        [LabContext],
        Awaitable[tuple[MutableMapping[str, Any], MutableSequence[Table]]],
    ],
] = {
    "aharonov-albert": aharonov_albert_demo,
    "hardy-paradox": hardy_paradox,
}
