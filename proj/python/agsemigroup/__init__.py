"""Two-point Weierstrass semigroups, near weights and evaluation codes."""

import json as _json

from ._core import (
    Curve,
    DomainError,
    Func,
    NearWeight,
    ResourceError,
    run_cli,
)
from ._core import check_axioms_json as _check_axioms_json
from ._core import code_json as _code_json
from ._core import semigroup_json as _semigroup_json

__all__ = [
    "Curve",
    "Func",
    "NearWeight",
    "DomainError",
    "ResourceError",
    "run_cli",
    "semigroup",
    "code",
    "check_axioms",
]


def semigroup(curve, bound):
    """Semigroup structure on [0, bound]^2 as a dict: gaps, gamma_tilde,
    gamma_plus, pure_gaps, gen_x, gen_y, conductor, ascii."""
    return _json.loads(_semigroup_json(curve, bound))


def code(curve, m, n, distance_cap=1 << 20):
    """Two-point evaluation code parameters as a dict: N, k, d_lower,
    d_exact (when the enumeration cap allows), generator_matrix."""
    return _json.loads(_code_json(curve, m, n, distance_cap))


def check_axioms(curve, max_factors=3, seed=1):
    """Near-weight axiom report for both designated places as a dict."""
    return _json.loads(_check_axioms_json(curve, max_factors, seed))
