from typing import MutableMapping

from hardylab.scenario.abl import AblScenario
from hardylab.scenario.base import SCENARIO_VERSION, Scenario, Table
from hardylab.scenario.causal import CausalScenario
from hardylab.scenario.hardy import HardyScenario
from hardylab.scenario.prodrule import ProdruleCommand, ProdruleScenario

scenario_classes: MutableMapping[str, type[Scenario]] = {
    "abl": AblScenario,
    "causal": CausalScenario,
    "hardy": HardyScenario,
    "prodrule": ProdruleScenario,
}

__all__ = [
    "SCENARIO_VERSION",
    "AblScenario",
    "CausalScenario",
    "HardyScenario",
    "ProdruleCommand",
    "ProdruleScenario",
    "Scenario",
    "Table",
    "scenario_classes",
]
