"""Relative simplicial pairs: f/h-vectors, mu-numbers, and theorem checks.

Complexes are passed as facet lists of vertex labels, e.g.
``[["a", "b", "c"], ["b", "c", "d"]]``.  An empty ``gamma`` list means the
ordinary (non-relative) case; ``[[]]`` is the empty complex {∅}.
Exact rationals cross the boundary as strings; the wrappers here convert
them to :class:`fractions.Fraction`.
"""

import json as _json
from fractions import Fraction as _Fraction

from ._core import (  # noqa: F401
    InputError,
    ResourceError,
    betti,
    f_h,
    graded_betti,
    is_normal_pseudomanifold,
    is_pure,
    m_bracket,
)
from . import _core as _c


def _fracs(strings):
    return [_Fraction(s) for s in strings]


def mu(delta, gamma=(), method="exact", field="q", samples=64, seed=7, ordering=None):
    """Mu-vector of the pair; also returns the Morse defects when defined."""
    out = _c.mu(list(map(list, delta)), list(map(list, gamma)), method, field,
                samples, seed, ordering)
    out["mu"] = _fracs(out["mu"])
    if "morse_defects" in out:
        out["morse_defects"] = _fracs(out["morse_defects"])
    return out


def sigma(delta, gamma=(), field="q"):
    """sigma[i] = σ~_{i-1} of the pair."""
    return _fracs(_c.sigma(list(map(list, delta)), list(map(list, gamma)), field))


def generate(kind, **kw):
    """Build a named complex; returns facets plus a certificate when one exists."""
    out = _c.generate(kind,
                      kw.get("dim", 3), kw.get("n", 8), kw.get("stackings", 3),
                      kw.get("handles", 0), kw.get("max_dim", 3), kw.get("count", 3),
                      kw.get("seed", 1))
    if "cert" in out:
        out["cert"] = _json.loads(out["cert"])
    return out


def verify(theorem, delta, gamma=(), field="q", seed=7, samples=8, serre_r=2):
    """Run one theorem check; returns the full report as a dict."""
    return _json.loads(_c.verify(theorem, list(map(list, delta)), list(map(list, gamma)),
                                 field, seed, samples, serre_r))


__all__ = [
    "InputError", "ResourceError",
    "betti", "f_h", "graded_betti", "generate", "is_normal_pseudomanifold",
    "is_pure", "m_bracket", "mu", "sigma", "verify",
]
