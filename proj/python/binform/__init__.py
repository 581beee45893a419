"""Real binary forms: factorization, symmetry groups, Hamiltonian fields."""

import json

from . import _core

__all__ = [
    "BinformError",
    "canonical",
    "decide",
    "factor",
    "hamiltonian",
    "integrate_flow",
    "mat_exp",
    "parse",
    "run",
    "symmetry",
]


class BinformError(ValueError):
    """Raised with the decoded error object of a failed command."""

    def __init__(self, payload):
        self.payload = payload
        err = payload.get("error", {})
        super().__init__(f"{err.get('kind')}: {err.get('message')}")


def _options(kwargs):
    return {k: str(v) for k, v in kwargs.items() if v is not None}


def run(command, polynomial, **options):
    """Run a command and return (exit_code, stdout, stderr)."""
    return _core.run(command, polynomial, _options(options))


def _command(command, polynomial, options):
    code, out, err = _core.run(command, polynomial, _options(options))
    if code != 0:
        raise BinformError(json.loads(err))
    return json.loads(out)


def factor(polynomial, **options):
    return _command("factor", polynomial, options)


def decide(polynomial, **options):
    return _command("decide", polynomial, options)


def symmetry(polynomial, **options):
    return _command("symmetry", polynomial, options)


def hamiltonian(polynomial, **options):
    return _command("hamiltonian", polynomial, options)


def parse(text):
    """Coefficient map {(i, j): Fraction-string} of x^i y^j."""
    try:
        return _core.parse(text)
    except ValueError as e:
        raise BinformError(json.loads(str(e))) from None


def canonical(text):
    return _core.canonical(text)


def mat_exp(a, t):
    """exp(A t) with A given row-major as a 2x2 nested list."""
    flat = [a[0][0], a[0][1], a[1][0], a[1][1]]
    e = _core.mat_exp(flat, t)
    return [[e[0], e[1]], [e[2], e[3]]]


def integrate_flow(P, Q, z0, T):
    """Trajectory of P d/dx + Q d/dy from z0 as (status, [(t, x, y), ...])."""
    tr = json.loads(_core.integrate_flow(P, Q, list(z0), T))
    return tr["status"], [tuple(p) for p in tr["points"]]
