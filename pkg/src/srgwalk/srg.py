"""Strongly regular graph parameter sets and the closed-form graph families.

All identities are checked in exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .gf import prime_power


class ParameterError(ValueError):
    """Family or parameter arguments outside their admissible range."""


class CompleteGraphError(ParameterError):
    """k >= N - 1: there are no non-adjacent pairs, so mu is undefined."""


class InfeasibleParamsError(ParameterError):
    """Parameters violate the counting identity or the basic SRG bounds."""


@dataclass(frozen=True)
class SrgParams:
    """The tuple (N, k, lambda, mu) of a strongly regular graph."""

    N: int
    k: int
    lam: int
    mu: int

    def __post_init__(self):
        for name in ("N", "k", "lam", "mu"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise TypeError(f"{name} must be an int, got {value!r}")
        if self.N <= 0 or self.k <= 0:
            raise ParameterError(f"N and k must be positive: {self.astuple()}")
        if self.lam < 0 or self.mu < 0:
            raise ParameterError(f"lambda and mu must be non-negative: {self.astuple()}")

    def astuple(self) -> tuple[int, int, int, int]:
        return (self.N, self.k, self.lam, self.mu)

    def __iter__(self):
        return iter(self.astuple())

    def __str__(self):
        return "({}, {}, {}, {})".format(*self.astuple())


def check_feasibility(params: SrgParams) -> bool:
    """Return True iff k(k - lambda - 1) == (N - k - 1) mu.

    Raises CompleteGraphError for k >= N - 1 rather than returning False.
    """
    N, k, lam, mu = params.astuple()
    if k >= N - 1:
        raise CompleteGraphError(f"k={k} >= N-1={N - 1}: complete graph, mu undefined")
    return k * (k - lam - 1) == (N - k - 1) * mu


def require_feasible(params: SrgParams) -> SrgParams:
    """Raise InfeasibleParamsError unless params could describe an SRG."""
    N, k, lam, mu = params.astuple()
    if not check_feasibility(params):
        raise InfeasibleParamsError(
            f"{params}: k(k-lambda-1)={k * (k - lam - 1)} != (N-k-1)mu={(N - k - 1) * mu}"
        )
    if lam > k - 1 or mu > k or mu == 0:
        raise InfeasibleParamsError(f"{params}: need lambda <= k-1 and 0 < mu <= k")
    return params


def degree_bound_holds(params: SrgParams) -> bool:
    """Finite-size degree bound k**2 > (N - k - 1) mu."""
    N, k, _, mu = params.astuple()
    return k * k > (N - k - 1) * mu


def paley_params(t: int) -> SrgParams:
    """Paley graph on q = 4t + 1 vertices: (4t+1, 2t, t-1, t)."""
    if t < 1:
        raise ParameterError(f"Paley parameter t must be >= 1, got {t}")
    q = 4 * t + 1
    if prime_power(q) is None:
        raise ParameterError(f"q={q} is not a prime power")
    if q % 4 != 1:
        raise ParameterError(f"q={q} is not 1 mod 4")
    return require_feasible(SrgParams(q, 2 * t, t - 1, t))


def latin_params(t: int, d: int) -> SrgParams:
    """Latin square type graph: (t**2, d(t-1), d**2 - 3d + t, d(d-1)).

    d = 2 is the t x t rook's graph, d = 3 adds the symbol classes of one
    Latin square.
    """
    if d < 2 or d > t:
        raise ParameterError(f"need 2 <= d <= t, got t={t}, d={d}")
    lam = d * d - 3 * d + t
    if lam < 0:
        raise ParameterError(f"lambda={lam} negative for t={t}, d={d}")
    return require_feasible(SrgParams(t * t, d * (t - 1), lam, d * (d - 1)))


def triangular_params(m: int) -> SrgParams:
    """Line graph of K_m: (m(m-1)/2, 2(m-2), m-2, 4)."""
    if m < 5:
        raise ParameterError(f"triangular graphs need m >= 5, got {m}")
    return require_feasible(SrgParams(m * (m - 1) // 2, 2 * (m - 2), m - 2, 4))


FAMILY_TAGS = ("complete", "paley", "latin", "triangular")


@dataclass(frozen=True)
class GraphFamily:
    """A graph family tag plus its own parameters.

    ``n`` is used by complete, ``q`` by paley, ``t`` and ``d`` by latin and
    ``m`` by triangular.
    """

    tag: str
    n: Optional[int] = None
    q: Optional[int] = None
    t: Optional[int] = None
    d: Optional[int] = None
    m: Optional[int] = None

    def __post_init__(self):
        if self.tag not in FAMILY_TAGS:
            raise ParameterError(f"unknown family {self.tag!r}")
        needed = {
            "complete": ("n",),
            "paley": ("q",),
            "latin": ("t", "d"),
            "triangular": ("m",),
        }[self.tag]
        missing = [name for name in needed if getattr(self, name) is None]
        if missing:
            raise ParameterError(f"family {self.tag} needs {', '.join(missing)}")
        if self.tag == "complete" and self.n < 2:
            raise ParameterError(f"complete graph needs n >= 2, got {self.n}")
        if self.tag == "paley" and (self.q < 5 or self.q % 4 != 1 or prime_power(self.q) is None):
            raise ParameterError(f"q={self.q} is not a prime power congruent to 1 mod 4")

    @property
    def is_complete(self) -> bool:
        return self.tag == "complete"

    @property
    def num_vertices(self) -> int:
        if self.tag == "complete":
            return self.n
        return self.params().N

    def params(self) -> SrgParams:
        """SRG parameters predicted for this family (not defined for complete)."""
        if self.tag == "complete":
            raise CompleteGraphError("the complete graph has no SRG parameter tuple")
        if self.tag == "paley":
            return paley_params((self.q - 1) // 4)
        if self.tag == "latin":
            return latin_params(self.t, self.d)
        return triangular_params(self.m)

    def label(self) -> str:
        if self.tag == "complete":
            return f"complete(n={self.n})"
        if self.tag == "paley":
            return f"paley(q={self.q})"
        if self.tag == "latin":
            return f"latin(t={self.t},d={self.d})"
        return f"triangular(m={self.m})"
