"""
Serialização determinística dos registros em CSV e JSON
"""

import csv
import io
import math
from typing import Any, Dict, List, Sequence

import orjson

from models.base_models import BaseEntity


def format_number(value: Any, digits: int = 12) -> str:
    """Número com `digits` dígitos significativos; texto e None passam direto"""
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            return str(value)
        return format(value, f".{digits}g")
    return str(value)


def _round(value: Any, digits: int) -> Any:
    if isinstance(value, float) and math.isfinite(value):
        return float(format(value, f".{digits}g"))
    if isinstance(value, list):
        return [_round(item, digits) for item in value]
    if isinstance(value, dict):
        return {key: _round(item, digits) for key, item in value.items()}
    return value


def record_rows(records: Sequence[BaseEntity]) -> List[Dict[str, Any]]:
    """Registros como dicionários com os nomes de coluna finais"""
    return [record.model_dump(by_alias=True) for record in records]


def render_csv(records: Sequence[BaseEntity], digits: int = 12,
               columns: Sequence[str] = ()) -> str:
    """
    CSV com cabeçalho, separador ',' e terminador LF

    Args:
        records: Registros do mesmo tipo
        digits: Dígitos significativos
        columns: Cabeçalho a usar quando não há registros
    """
    rows = record_rows(records)
    header = list(rows[0].keys()) if rows else list(columns)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_number(row[column], digits) for column in header])
    return buffer.getvalue()


def render_json(payload: Any, digits: int = 12) -> str:
    """JSON indentado via orjson, com floats arredondados"""
    if isinstance(payload, BaseEntity):
        data = payload.model_dump(mode='json', by_alias=True)
    elif isinstance(payload, (list, tuple)):
        data = [
            item.model_dump(mode='json', by_alias=True) if isinstance(item, BaseEntity) else item
            for item in payload
        ]
    else:
        data = payload
    return orjson.dumps(_round(data, digits), option=orjson.OPT_INDENT_2).decode("utf-8") + "\n"
