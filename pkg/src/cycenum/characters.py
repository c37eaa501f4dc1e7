"""Canonical characters of GF(q**k) and exact classical Gauss sums.

The additive character is e_beta(a) = exp(2*pi*i*Tr(beta*a)/q) and the
multiplicative character is chi_j(alpha**m) = exp(2*pi*i*j*m/(q**k - 1)).
A Gauss sum is the full sum of chi_j * e_beta over the nonzero elements,
evaluated in double precision with a vectorized, deterministic pairwise
summation; for nontrivial chi_j and beta != 0 its magnitude is the exact
square root of the field size, and only the phase is hard.
"""

import cmath
import math
from dataclasses import dataclass
from math import gcd

import numpy as np

from .codes import CodeSpec
from .errors import CharacterOfZero, PhaseOfZero
from .field import ExtField

__all__ = [
    "GaussSumValue",
    "additive_character",
    "multiplicative_character",
    "gauss_sum",
    "order_d_character_sums",
]

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class GaussSumValue:
    """A Gauss sum as complex value plus polar pieces (gamma in (-pi, pi])."""

    value: complex
    gamma: float
    magnitude: float

    def to_dict(self) -> dict:
        return {
            "re": self.value.real,
            "im": self.value.imag,
            "gamma": self.gamma,
            "magnitude": self.magnitude,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "GaussSumValue":
        return cls(complex(d["re"], d["im"]), d["gamma"], d["magnitude"])


def _phase(value: complex) -> float:
    if abs(value) < 1e-12:
        raise PhaseOfZero("phase of a zero Gauss sum is undefined")
    gamma = math.atan2(value.imag, value.real)
    if gamma <= -math.pi:
        gamma = math.pi
    return gamma


def additive_character(beta: int, a: int, F: ExtField) -> complex:
    """e_beta(a) = exp(2*pi*i * Tr(beta*a) / q)."""
    t = F.trace(F.mul(beta, a))
    return cmath.exp(1j * _TWO_PI * t / F.q)


def multiplicative_character(j: int, x: int, F: ExtField) -> complex:
    """chi_j(x) = exp(2*pi*i * j * dlog(x) / (q**k - 1)); x must be nonzero."""
    if F.check(x) == 0:
        raise CharacterOfZero("multiplicative character of zero")
    m = F.dlog(x)
    return cmath.exp(1j * _TWO_PI * ((j * m) % F.group_order) / F.group_order)


def gauss_sum(j: int, beta: int, F: ExtField) -> GaussSumValue:
    """Exact O(q**k) summation of G(chi_j, e_beta) over the nonzero elements."""
    F.check(beta)
    M = F.group_order
    j = j % M
    tr = F.trace_table()
    if beta == 0:
        add_angles = np.zeros(M)
    else:
        add_angles = _TWO_PI / F.q * np.roll(tr, -F.dlog(beta))
    mult_angles = _TWO_PI / M * ((j * np.arange(M)) % M)
    value = complex(np.exp(1j * (mult_angles + add_angles)).sum())
    return GaussSumValue(value=value, gamma=_phase(value), magnitude=abs(value))


def order_d_character_sums(spec: CodeSpec) -> list[GaussSumValue]:
    """G(chibar**a, e_1) for a = 1..d-1, d = gcd(N, (q**k - 1)/(q - 1)).

    chibar is realized as chi_j0 with j0 = (q**k - 1)/d, so that
    chibar(alpha) is a primitive d-th root of unity.
    """
    F = spec.field
    d = gcd(spec.N, F.group_order // (spec.q - 1))
    if d <= 1:
        return []
    j0 = F.group_order // d
    return [gauss_sum(j0 * a, 1, F) for a in range(1, d)]
