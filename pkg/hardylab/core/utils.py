from __future__ import annotations

import json
import os
from typing import Any, MutableMapping, MutableSequence, TYPE_CHECKING

from jsonref import loads

from hardylab.core.exception import ScenarioDefinitionException

if TYPE_CHECKING:
    from hardylab.core.context import SchemaEntity
    from typing import Iterable

SEED_ENVIRONMENT_VARIABLE = "HARDYLAB_SEED"
SIGNIFICANT_DIGITS = 12


def chop(value: complex | float, tolerance: float) -> complex | float:
    if isinstance(value, complex):
        return complex(chop(value.real, tolerance), chop(value.imag, tolerance))
    return 0.0 if abs(value) <= tolerance else value


def dumps(value: Any) -> str:
    return json.dumps(value, indent=2, sort_keys=True, ensure_ascii=False)


def format_complex(
    value: complex, tolerance: float = 0.0
) -> MutableMapping[str, float]:
    return {
        "re": format_real(value.real, tolerance),
        "im": format_real(value.imag, tolerance),
    }


def format_real(value: float, tolerance: float = 0.0) -> float:
    rounded = float(f"{chop(value, tolerance):.{SIGNIFICANT_DIGITS}g}")
    # Avoid printing -0.0 for cancelled amplitudes
    return rounded + 0.0


def format_table(
    header: MutableSequence[str], rows: Iterable[MutableSequence[Any]]
) -> str:
    rows = [[_format_cell(c) for c in row] for row in rows]
    max_sizes = [
        max([len(header[i])] + [len(row[i]) for row in rows]) + 1
        for i in range(len(header))
    ]
    format_string = " ".join("{:<" + str(size) + "}" for size in max_sizes)
    lines = [format_string.format(*header).rstrip()]
    for row in rows:
        lines.append(format_string.format(*row).rstrip())
    return "\n".join(lines)


def _format_cell(cell: Any) -> str:
    if cell is None:
        return "-"
    elif isinstance(cell, bool):
        return str(cell).lower()
    elif isinstance(cell, float):
        return f"{format_real(cell):.{SIGNIFICANT_DIGITS}g}"
    elif isinstance(cell, complex):
        re, im = format_real(cell.real), format_real(cell.imag)
        return f"{re:.{SIGNIFICANT_DIGITS}g}{im:+.{SIGNIFICANT_DIGITS}g}i"
    else:
        return str(cell)


def get_schema_path(package: str, *parts: str) -> str:
    from importlib.resources import files

    return str(files(package).joinpath(*parts))


def inject_schema(
    schema: MutableMapping[str, Any],
    classes: MutableMapping[str, type[SchemaEntity]],
    discriminator: str,
    definition_name: str | None = None,
):
    """Plug the schema of every class into ``schema``, keyed by ``discriminator``."""
    target = schema["definitions"][definition_name] if definition_name else schema
    for name, entity in classes.items():
        if entity_schema := entity.get_schema():
            entity_schema = load_schema(entity_schema)
            target["properties"][discriminator].setdefault("enum", []).append(name)
            target.setdefault("definitions", {})[name] = entity_schema
            target.setdefault("allOf", []).append(
                {
                    "if": {"properties": {discriminator: {"const": name}}},
                    "then": entity_schema,
                }
            )


def load_schema(path: str) -> MutableMapping[str, Any]:
    with open(path) as f:
        return loads(
            f.read(),
            base_uri=f"file://{os.path.dirname(path)}/",
            jsonschema=True,
        )


def resolve_seed(seed: int | None) -> int:
    if (env_seed := os.environ.get(SEED_ENVIRONMENT_VARIABLE)) is not None:
        try:
            return int(env_seed)
        except ValueError:
            raise ScenarioDefinitionException(
                f"{SEED_ENVIRONMENT_VARIABLE} must be an integer, got {env_seed!r}"
            ) from None
    return seed if seed is not None else 0
