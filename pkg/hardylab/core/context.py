from __future__ import annotations

from abc import ABC, abstractmethod
from concurrent.futures import ProcessPoolExecutor
from typing import Any, MutableMapping

STATE_TOLERANCE = 1e-12
PRODRULE_TOLERANCE = 1e-9


class SchemaEntity(ABC):
    @classmethod
    @abstractmethod
    def get_schema(cls) -> str:
        ...


class LabContext:
    def __init__(
        self,
        config: MutableMapping[str, Any],
        seed: int = 0,
        tolerance: float | None = None,
    ):
        self.config: MutableMapping[str, Any] = config
        self.seed: int = seed
        self.tolerance: float | None = tolerance
        self._process_executor: ProcessPoolExecutor | None = None

    @property
    def process_executor(self) -> ProcessPoolExecutor:
        if self._process_executor is None:
            self._process_executor = ProcessPoolExecutor()
        return self._process_executor

    def get_tolerance(self, default: float) -> float:
        return self.tolerance if self.tolerance is not None else default

    async def close(self):
        if self._process_executor is not None:
            self._process_executor.shutdown(wait=True)
            self._process_executor = None
