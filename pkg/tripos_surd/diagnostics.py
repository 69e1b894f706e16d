"""JSON dumping for every report the toolkit produces."""
from __future__ import annotations

import dataclasses
from enum import Enum
from fractions import Fraction
import json
import logging
from typing import Any

from .error_analysis import ErrorReport, TriposVerification, accurate_places
from .exact_numerics import (
    DecimalString,
    Interval,
    format_rational,
    to_decimal,
)

# Logger for the module
_LOGGER = logging.getLogger(__name__)


def safe_dump(the_object: Any) -> Any:
    """Dump an object in a JSON-safe way. Plain values are returned as they
    are. Rationals become "p/q" strings, intervals become [lo, hi] pairs
    of such strings and decimal renderings become their text, so nothing
    exact is ever turned into a float. Objects offering to_record use it;
    other dataclasses are dumped field by field and containers item by
    item. Anything else is str()'d."""
    _LOGGER.debug("Dumping object of type %s", type(the_object).__name__)
    if the_object is None or isinstance(the_object, (bool, int, str)):
        return the_object
    if isinstance(the_object, Fraction):
        return format_rational(the_object)
    if isinstance(the_object, Interval):
        return [format_rational(the_object.lo), format_rational(the_object.hi)]
    if isinstance(the_object, DecimalString):
        return str(the_object)
    if isinstance(the_object, Enum):
        return the_object.value
    if hasattr(the_object, "to_record"):
        return the_object.to_record()
    if dataclasses.is_dataclass(the_object):
        return {
            field.name: safe_dump(getattr(the_object, field.name))
            for field in dataclasses.fields(the_object)
        }
    if isinstance(the_object, dict):
        return {
            str(key): safe_dump(value) for key, value in the_object.items()
        }
    if isinstance(the_object, (list, tuple)):
        return [safe_dump(item) for item in the_object]
    return str(the_object)


def _decimal_pair(interval: Interval, digits: int) -> list[str]:
    return [
        str(to_decimal(interval.lo, digits)),
        str(to_decimal(interval.hi, digits)),
    ]


def dump_error_report(report: ErrorReport, digits: int) -> dict:
    """The report's fields plus the bound and decimal renderings at the
    caller's precision."""
    data = safe_dump(report)
    data["bound"] = safe_dump(report.bound)
    data["accurate_places"] = accurate_places(report.true_error)
    data["decimal"] = {
        "true_error": _decimal_pair(report.true_error, digits),
        "formula_enclosure": _decimal_pair(report.formula_enclosure, digits),
        "bound": str(to_decimal(report.bound, digits)),
    }
    return data


def dump_verification(verification: TriposVerification, digits: int) -> dict:
    data = safe_dump(verification)
    data["passed"] = verification.passed
    data["decimal"] = {
        "true_error": _decimal_pair(verification.true_error, digits),
        "bound": str(to_decimal(verification.bound, digits)),
    }
    return data


def dump_json(data: Any) -> str:
    """Deterministic JSON text."""
    return json.dumps(safe_dump(data), indent=2, sort_keys=True)
