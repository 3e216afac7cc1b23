"""Python front end for the spectra core library.

Functions returning structured data decode the JSON produced by the core.
"""

import json
import os

from ._core import (  # noqa: F401
    DomainError,
    Falsification,
    HypothesisViolation,
    ParseError,
    UnsupportedRegistry,
    discriminant_numbers,
    end_twist_ranks,
    hitchin_dim,
    lambda_degrees,
    monomial_count_p1,
    poly_gcd,
    resultant,
    spectral_genus,
    squarefree_part,
)
from . import _core


def _text(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def scalar_only(r, d, e, g, reduced="unknown", integral="unknown", regular="unknown"):
    return json.loads(_core.scalar_only(r, d, e, g, reduced, integral, regular))


def model(spec):
    """Validated model report for a model description (dict or JSON text)."""
    return json.loads(_core._model(_text(spec)))


def spectral_certificates(model_spec, spectral_spec, seed=0, trials=16):
    return json.loads(_core._spectral_certificates(_text(model_spec), _text(spectral_spec), seed, trials))


def symkernel(f, g, r, samples=20, seed=0):
    return json.loads(_core._symkernel(f, g, r, samples, seed))


def run(command, **options):
    """Runs a CLI command; returns (exit_code, report). Paths are strings."""
    options = {k: os.fspath(v) if hasattr(v, "__fspath__") else v for k, v in options.items()}
    code, text = _core._run(command, options)
    return code, json.loads(text)
