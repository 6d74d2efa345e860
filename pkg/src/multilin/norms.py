"""Hölder-type norm on alternating matrix spaces.

``||A||_rho = (sum |A_ij|^rho / (p! p'!)^(rho-1))^(1/rho)``; submultiplicative
under the wedge product.  This is the only floating-point code in the package.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from multilin.antisym import AltMatrix
from multilin.exactnum import to_float


@dataclass(frozen=True)
class NormParams:
    rho: float = 2.0

    def __post_init__(self):
        if not self.rho >= 1:
            raise ValueError(f"rho must be >= 1, got {self.rho}")

    @property
    def conjugate(self) -> float:
        """The exponent ``r`` with ``1/rho + 1/r = 1``."""
        return math.inf if self.rho == 1 else self.rho / (self.rho - 1)


def holder_norm(a: AltMatrix, params: NormParams | float = 2.0) -> float:
    if not isinstance(params, NormParams):
        params = NormParams(float(params))
    rho = params.rho
    absvals = [abs(to_float(x)) for x in a.data]
    if rho == 1:
        return math.fsum(absvals)
    scale = float(math.factorial(a.p) * math.factorial(a.p_prime)) ** (rho - 1)
    total = math.fsum(x ** rho for x in absvals)
    return (total / scale) ** (1 / rho)
