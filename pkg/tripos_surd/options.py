"""Schemas for values that enter the toolkit from outside: command line
options and serialized surd records. Numbers stay exact all the way in."""

from fractions import Fraction
from typing import Any

import voluptuous as vol

from .const import (
    KEY_ROOT,
    OPT_DIGITS,
    OPT_N,
    OPT_PERCENT,
    OPT_ROOT,
    OPT_SIGN,
    OPT_STEPS,
    OPT_T_MAX,
    OPT_T_MIN,
    OPT_X,
    SIGN_NEGATIVE,
    SIGN_POSITIVE,
    SURD_RECORD_KEYS,
)
from .errors import ArgumentError, TriposException
from .exact_numerics import parse_rational


def rational(value: Any) -> Fraction:
    """Validator accepting Fractions, ints and "p/q" or decimal text."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return parse_rational(value)
        except TriposException as ex:
            raise vol.Invalid(str(ex)) from ex
    raise vol.Invalid(f"expected an exact rational, got {value!r}")


def positive(value: Fraction) -> Fraction:
    if value <= 0:
        raise vol.Invalid(f"must be positive, got {value}")
    return value


ROOT_INDEX = vol.All(vol.Coerce(int), vol.Range(min=2))
DIGITS = vol.All(vol.Coerce(int), vol.Range(min=0))

SURD_RECORD_SCHEMA = vol.Schema(
    {
        vol.Required(KEY_ROOT): vol.All(int, vol.Range(min=2)),
        **{vol.Required(key): rational for key in SURD_RECORD_KEYS},
    }
)

DERIVE_SCHEMA = vol.Schema(
    {vol.Required(OPT_ROOT): ROOT_INDEX}, extra=vol.ALLOW_EXTRA
)

EVAL_SCHEMA = vol.Schema(
    {
        vol.Required(OPT_ROOT): ROOT_INDEX,
        vol.Required(OPT_N): vol.All(rational, positive),
        vol.Required(OPT_X): rational,
    },
    extra=vol.ALLOW_EXTRA,
)

ERROR_SCHEMA = EVAL_SCHEMA.extend({vol.Required(OPT_DIGITS): DIGITS})

BOUND_SCHEMA = vol.Schema(
    {
        vol.Required(OPT_PERCENT): vol.All(rational, positive),
        vol.Required(OPT_SIGN): vol.In([SIGN_POSITIVE, SIGN_NEGATIVE]),
        vol.Required(OPT_DIGITS): DIGITS,
    },
    extra=vol.ALLOW_EXTRA,
)

VERIFY_SCHEMA = vol.Schema(
    {vol.Required(OPT_DIGITS): DIGITS}, extra=vol.ALLOW_EXTRA
)

SWEEP_SCHEMA = vol.Schema(
    {
        vol.Required(OPT_ROOT): ROOT_INDEX,
        vol.Required(OPT_T_MIN): rational,
        vol.Required(OPT_T_MAX): rational,
        vol.Required(OPT_STEPS): vol.All(vol.Coerce(int), vol.Range(min=0)),
        vol.Required(OPT_DIGITS): DIGITS,
    },
    extra=vol.ALLOW_EXTRA,
)


def validate_options(schema: vol.Schema, options: dict) -> dict:
    """Run a schema, reporting failures as ArgumentError.
    :param schema: one of the schemas above.
    :param options: raw option values, e.g. vars() of parsed arguments.
    :returns: the validated and coerced options."""
    try:
        return schema(options)
    except vol.Invalid as ex:
        raise ArgumentError(str(ex)) from ex
