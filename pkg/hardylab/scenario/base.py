from __future__ import annotations

from abc import abstractmethod
from typing import Any, MutableMapping, MutableSequence

from hardylab.core.context import LabContext, SchemaEntity
from hardylab.core.utils import format_table, get_schema_path

SCENARIO_VERSION = 1


class Table:
    __slots__ = ("title", "header", "rows")

    def __init__(
        self,
        title: str,
        header: MutableSequence[str],
        rows: MutableSequence[MutableSequence[Any]],
    ):
        self.title: str = title
        self.header: MutableSequence[str] = header
        self.rows: MutableSequence[MutableSequence[Any]] = rows

    def __str__(self):
        return f"{self.title}\n{format_table(self.header, self.rows)}"


class Scenario(SchemaEntity):
    """
    A runnable description of one analysis. ``config`` holds the validated
    scenario body; missing fields take the values of ``defaults``.
    """

    kind: str = ""

    def __init__(self, context: LabContext, config: MutableMapping[str, Any]):
        self.context: LabContext = context
        self.config: MutableMapping[str, Any] = {
            "version": SCENARIO_VERSION,
            "kind": self.kind,
            **self.defaults(context),
            **{k: v for k, v in config.items() if v is not None},
        }

    @classmethod
    def defaults(cls, context: LabContext) -> MutableMapping[str, Any]:
        return {}

    @classmethod
    def get_schema(cls) -> str:
        return get_schema_path(__package__, "schemas", f"{cls.kind}.json")

    def render(self, result: MutableMapping[str, Any]) -> str:
        return "\n\n".join(str(t) for t in self.tables(result))

    @abstractmethod
    async def run(self) -> MutableMapping[str, Any]:
        ...

    @abstractmethod
    def tables(self, result: MutableMapping[str, Any]) -> MutableSequence[Table]:
        ...
