"""Weight spectra of irreducible cyclic codes.

weight_spectrum_mceliece evaluates the Gauss-sum weight formula once per
q-cyclotomic coset leader of {0, ..., N-1} and multiplies the tally by n
for cyclic shifts; weight_spectrum_bruteforce enumerates every one of the
q**k trace words directly and is the independent oracle the formula is
tested against. The MacWilliams transform is carried out in exact integer
arithmetic, switching between a sparse per-weight expansion and a dense
three-pass substitution depending on which is cheaper.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .characters import GaussSumValue, order_d_character_sums
from .codes import CodeSpec
from .cosets import coset_leaders
from .errors import (
    NonIntegerDualCoefficient,
    NonIntegerWeight,
    NonRealResult,
    OracleCapExceeded,
    SpectrumMismatch,
)

__all__ = [
    "WeightSpectrum",
    "WeightEnumerator",
    "s_function",
    "weight_spectrum_mceliece",
    "weight_spectrum_bruteforce",
    "macwilliams_dual",
]

DEFAULT_ORACLE_CAP = 1 << 16

WEIGHT_INT_TOL = 1e-6
IMAG_TOL = 1e-6


@dataclass
class WeightSpectrum:
    """Counts A_i of words of Hamming weight i in a length-n code."""

    counts: dict[int, int]
    n: int

    def total(self) -> int:
        return sum(self.counts.values())

    def distinct_nonzero_weights(self) -> int:
        return sum(1 for w in self.counts if w != 0)

    def to_dict(self) -> dict:
        return {str(w): self.counts[w] for w in sorted(self.counts)}

    @classmethod
    def from_dict(cls, d: dict, n: int) -> "WeightSpectrum":
        return cls({int(w): c for w, c in d.items()}, n)


@dataclass
class WeightEnumerator:
    """The bivariate polynomial A(x, y) = sum A_i x^(n-i) y^i of a spectrum."""

    spectrum: WeightSpectrum

    @property
    def n(self) -> int:
        return self.spectrum.n

    def evaluate(self, x, y):
        """Polynomial evaluation; exact integers for integer arguments."""
        n = self.n
        return sum(a * x ** (n - i) * y**i for i, a in self.spectrum.counts.items())


def s_function(iota: int, gauss: list[GaussSumValue], spec: CodeSpec) -> float:
    """Weight of the word indexed by alpha**iota, from the Gauss-sum phases.

    S(iota) = q^k(q-1)/(qN) - (q-1)/(qN) * sum over a of
    chibar(alpha^iota)^(-a) * sqrt(q^k) * exp(i*gamma_a); the magnitude is
    kept at the exact sqrt(q^k) and only the phases enter.
    """
    q, N = spec.q, spec.N
    d = len(gauss) + 1
    base = spec.field.order * (q - 1) / (q * N)
    if d == 1:
        return base
    mag = math.sqrt(spec.field.order)
    coef = (q - 1) / (q * N)
    acc = 0j
    for a, g in enumerate(gauss, start=1):
        chi = cmath.exp(-2j * math.pi * ((iota * a) % d) / d)
        acc += chi * cmath.exp(1j * g.gamma)
    value = base - coef * mag * acc
    if abs(value.imag) > IMAG_TOL:
        raise NonRealResult(
            f"imaginary residue {value.imag:.3e} exceeds {IMAG_TOL}")
    return value.real


def weight_spectrum_mceliece(spec: CodeSpec) -> WeightSpectrum:
    """Weight spectrum via the Gauss-sum formula with coset deduplication.

    Evaluates S once per coset leader b_i, rounds to the nearest integer
    (the residue must stay below 1e-6), tallies with coset sizes as
    multiplicities, scales by n for cyclic shifts, and inserts A_0 = 1.
    """
    gauss = order_d_character_sums(spec)
    tallies: dict[int, int] = {}
    for leader, size in _leader_sizes(spec):
        omega = s_function(leader, gauss, spec)
        w = round(omega)
        if abs(omega - w) > WEIGHT_INT_TOL:
            raise NonIntegerWeight(f"S({leader}) = {omega!r} is not near an integer")
        tallies[w] = tallies.get(w, 0) + size
    counts = {w: spec.n * a for w, a in tallies.items()}
    counts[0] = counts.get(0, 0) + 1
    return _validated(WeightSpectrum(counts, spec.n), spec)


def _validated(spectrum: WeightSpectrum, spec: CodeSpec) -> WeightSpectrum:
    if spectrum.total() != spec.field.order:
        raise SpectrumMismatch(
            f"sum A_i = {spectrum.total()} != q^k = {spec.field.order}")
    if any(w < 0 or w > spec.n for w in spectrum.counts):
        raise SpectrumMismatch(f"weight outside [0, {spec.n}]")
    return spectrum


def _leader_sizes(spec: CodeSpec):
    for coset in coset_leaders(spec.N, spec.q).cosets:
        yield coset.leader, coset.size


def weight_spectrum_bruteforce(spec: CodeSpec,
                               cap: int = DEFAULT_ORACLE_CAP) -> WeightSpectrum:
    """Direct enumeration of all q**k trace words, counting Hamming weights.

    Vectorized letter-by-letter: for each of the n positions the nonzero
    indicator of Tr(tau * alpha^(jN)) is accumulated over every nonzero
    tau at once. Completely independent of the Gauss-sum route.
    """
    if spec.field.order > cap:
        raise OracleCapExceeded(f"q^k = {spec.field.order} exceeds oracle cap {cap}")
    F = spec.field
    M = F.group_order
    nz = (F.trace_table() != 0).astype(np.int64)
    wvec = np.zeros(M, dtype=np.int64)
    for j in range(spec.n):
        s = (j * spec.N) % M
        if s == 0:
            wvec += nz
        else:
            wvec[: M - s] += nz[s:]
            wvec[M - s:] += nz[:s]
    counts: dict[int, int] = {0: 1}  # the tau = 0 word
    hist = np.bincount(wvec)
    for w in np.nonzero(hist)[0]:
        counts[int(w)] = counts.get(int(w), 0) + int(hist[w])
    return _validated(WeightSpectrum(counts, spec.n), spec)


# ---------------------------------------------------------------------------
# MacWilliams transform, exact integer arithmetic


def _binomial_row(m: int) -> list[int]:
    row = [1]
    for j in range(m):
        row.append(row[-1] * (m - j) // (j + 1))
    return row


def _dual_sparse(counts: dict[int, int], n: int, q: int) -> list[int]:
    """Coefficients by y-degree of sum A_i (x+(q-1)y)^(n-i) (x-y)^i.

    Cost is one convolution per distinct weight, so spectra with few
    weights (the irreducible-cyclic case, at most N+1) stay cheap even
    for long codes.
    """
    acc = [0] * (n + 1)
    for i, a_i in counts.items():
        u = _binomial_row(n - i)
        u = [c * (q - 1) ** t for t, c in enumerate(u)]
        v = _binomial_row(i)
        v = [c if t % 2 == 0 else -c for t, c in enumerate(v)]
        for t1, cu in enumerate(u):
            if cu == 0:
                continue
            base = a_i * cu
            for t2, cv in enumerate(v):
                acc[t1 + t2] += base * cv
    return acc


def _dual_dense(counts: dict[int, int], n: int, q: int) -> list[int]:
    """Same polynomial via a shear factorization of the substitution.

    (x, y) -> (x+(q-1)y, x-y) factors as x -> x+(1-q)y, then
    (x, y) -> (qx, -y), then y -> y-x; each factor is a triangular
    binomial pass over the coefficient vector, so the transform is
    O(n^2) no matter how dense the input spectrum is.
    """
    c = [counts.get(i, 0) for i in range(n + 1)]
    # x -> x + (1-q)y: new_c[s] = sum over t <= s of c[t]*C(n-t, s-t)*(1-q)^(s-t)
    out = [0] * (n + 1)
    for t, ct in enumerate(c):
        if ct == 0:
            continue
        row = _binomial_row(n - t)
        p = 1
        for s in range(t, n + 1):
            out[s] += ct * row[s - t] * p
            p *= 1 - q
    c = out
    # x -> q*x, y -> -y: c[t] *= q^(n-t) * (-1)^t
    for t in range(n + 1):
        c[t] *= q ** (n - t) * (-1) ** t
    # y -> y - x: new_c[s] = sum over t >= s of c[t] * C(t, s) * (-1)^(t-s)
    out = [0] * (n + 1)
    for t, ct in enumerate(c):
        if ct == 0:
            continue
        row = _binomial_row(t)
        p = 1
        for s in range(t, -1, -1):
            out[s] += ct * row[s] * p
            p *= -1
    return out


def macwilliams_dual(w: WeightEnumerator, q: int, k: int, n: int) -> WeightEnumerator:
    """Dual enumerator A_perp(x, y) = q^(-k) * A(x+(q-1)y, x-y), exact.

    This is the standard identity over GF(q); applying it twice returns
    the original enumerator. All dual coefficients must come out as
    non-negative integers summing to q^(n-k); anything else raises
    NonIntegerDualCoefficient.
    """
    if w.n != n:
        raise NonIntegerDualCoefficient(f"enumerator length {w.n} != n = {n}")
    counts = w.spectrum.counts
    cost_sparse = sum((i + 1) * (n - i + 1) for i in counts)
    if cost_sparse <= 2 * n * n:
        acc = _dual_sparse(counts, n, q)
    else:
        acc = _dual_dense(counts, n, q)
    scale = q**k
    dual_counts: dict[int, int] = {}
    total = 0
    for weight in range(n + 1):
        coeff = acc[weight]
        if coeff % scale != 0:
            raise NonIntegerDualCoefficient(
                f"dual coefficient A_{weight} = {coeff}/{scale} is not integral")
        val = coeff // scale
        if val < 0:
            raise NonIntegerDualCoefficient(f"dual coefficient A_{weight} = {val} < 0")
        if val:
            dual_counts[weight] = val
            total += val
    if total != q ** (n - k):
        raise NonIntegerDualCoefficient(
            f"dual spectrum sums to {total}, expected q^(n-k) = {q ** (n - k)}")
    return WeightEnumerator(WeightSpectrum(dual_counts, n))
