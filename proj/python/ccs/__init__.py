"""Characteristic classes of projective schemes.

Thin convenience layer over the native module: Segre, Fulton,
Chern-Schwartz-MacPherson and Milnor classes, Euler characteristics and
projective degrees, computed from ideal generators given as text.
"""

from ._core import CcsError, DEFAULT_SEED, run

__all__ = [
    "CcsError",
    "DEFAULT_SEED",
    "run",
    "segre",
    "fulton",
    "csm",
    "milnor",
    "euler",
    "euler_affine",
    "degrees",
    "excess",
]


def _coeffs(payload):
    return payload["result"]["coefficients"]


def segre(generators, vars=None, field="q", seed=None):
    """Coefficients [a_0..a_n] of the Segre class push-forward."""
    return _coeffs(run("segre", generators, vars=vars, field=field, seed=seed))


def fulton(generators, vars=None, field="q", seed=None):
    """Coefficients [a_0..a_n] of the Chern-Fulton class push-forward."""
    return _coeffs(run("fulton", generators, vars=vars, field=field, seed=seed))


def csm(generators, vars=None, field="q", seed=None, force=False, simplify=False):
    """Coefficients [a_0..a_n] of the Chern-Schwartz-MacPherson class."""
    return _coeffs(
        run("csm", generators, vars=vars, field=field, seed=seed, force=force,
            simplify=simplify)
    )


def milnor(generators, vars=None, field="q", seed=None, force=False):
    """{'n', 'fulton', 'csm', 'milnor'} coefficient vectors."""
    return run("milnor", generators, vars=vars, field=field, seed=seed, force=force)[
        "result"
    ]


def euler(generators, vars=None, field="q", seed=None, force=False):
    """Topological Euler characteristic of the support of the scheme."""
    return run("euler", generators, vars=vars, field=field, seed=seed, force=force)[
        "result"
    ]["euler"]


def euler_affine(generators, vars=None, field="q", seed=None, force=False):
    """Euler characteristic of an affine scheme in A^n (n = number of vars)."""
    return run(
        "euleraffine", generators, vars=vars, field=field, seed=seed, force=force
    )["result"]["euler"]


def degrees(generators, vars=None, field="q", seed=None):
    """Projective degrees [g_0..g_n] of the map defined by the generators."""
    return run("degrees", generators, vars=vars, field=field, seed=seed)["result"][
        "degrees"
    ]


def excess(segre_class, d, n):
    """Excess-intersection count d^n - integral((1+dH)^n * s).

    `segre_class` is a polynomial in H, e.g. "11*H^2 - 58*H^3".
    """
    return run("excess", segre_class, d=d, n=n)["result"]["excess"]
