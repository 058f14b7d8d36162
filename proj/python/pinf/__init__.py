"""Exact computation with rational series, skew extensions, Leavitt algebras and K0."""

import json as _json

from . import _core
from ._core import (
    Error,
    InputError,
    LeavittElement,
    MathError,
    Mismatch,
    ParseError,
    Series,
    SkewElement,
    acceptance,
    canonical,
    run,
)

__all__ = [
    "Error",
    "InputError",
    "LeavittElement",
    "MathError",
    "Mismatch",
    "ParseError",
    "Series",
    "SkewElement",
    "acceptance",
    "canonical",
    "k0",
    "realize",
    "run",
    "t_certificate",
    "v_certificate",
    "verify_certificate",
]


def k0(presentation, bound=64):
    """Grothendieck group of a commutative monoid presentation such as "I | 3I = I".

    With bound > 0 the monoid is also enumerated and its shape reported.
    """
    return _json.loads(_core.k0(presentation, bound))


def realize(source, target, mult, tamper=False):
    """Generator matrices for multiplication by `mult` from Z_source to Z_target (0 means Z)."""
    return _json.loads(_core.realize(source, target, mult, tamper))


def t_certificate(alpha, n=2, field="q"):
    return _json.loads(_core.t_certificate(alpha, n, field))


def v_certificate(alpha, n=2, field="q", infinite=False):
    return _json.loads(_core.v_certificate(alpha, n, field, infinite))


def verify_certificate(certificate):
    """Returns (valid, detail) for a certificate dict or JSON string."""
    if not isinstance(certificate, str):
        certificate = _json.dumps(certificate)
    return _core.verify_certificate(certificate)
