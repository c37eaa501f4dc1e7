"""Classical simulation of the noisy-oracle weight-recovery pipeline.

The exact Gauss-sum phases are perturbed by a seeded uniform error of
magnitude below epsilon (standing in for the bounded-error quantum
estimator), the weight formula is evaluated per coset leader, and each
noisy value is rounded to the nearest multiple of q**(theta-1), the
divisibility step of every weight. Whenever epsilon stays below
q**(theta-1) / (4*sqrt(q**k)) the rounded spectrum provably matches the
noiseless one; the pipeline reports whether it did.
"""

import math
import random
from dataclasses import dataclass

import numpy as np

from .characters import order_d_character_sums
from .codes import CodeSpec, irreducible_cyclic_code
from .cosets import coset_leaders, multiplicative_order
from .errors import InvalidParameters, MembershipFailed, NonIntegralTheta, RecoveryFailed
from .weights import WeightSpectrum, weight_spectrum_mceliece

__all__ = [
    "IcqParams",
    "MembershipReport",
    "PipelineReport",
    "digit_sum",
    "theta",
    "epsilon_bound",
    "icq_membership",
    "noisy_gauss_oracle",
    "run_pipeline",
    "run_pipeline_trials",
]


def digit_sum(x: int, q: int) -> int:
    """Sum of the base-q digits of x >= 0."""
    if x < 0:
        raise ValueError("digit_sum expects x >= 0")
    if q < 2:
        raise ValueError("base must be >= 2")
    total = 0
    while x:
        total += x % q
        x //= q
    return total


def theta(spec: CodeSpec) -> int:
    """Divisibility exponent: min over 0 < j <= N of digit_sum(j*n)/(q-1).

    Every nonzero weight of the code is divisible by q**(theta-1). The
    minimum digit sum must itself be divisible by q-1; a violation raises
    NonIntegralTheta rather than truncating.
    """
    best = min(digit_sum(j * spec.n, spec.q) for j in range(1, spec.N + 1))
    if best % (spec.q - 1) != 0:
        raise NonIntegralTheta(
            f"min digit sum {best} is not divisible by q - 1 = {spec.q - 1}")
    return best // (spec.q - 1)


def epsilon_bound(spec: CodeSpec) -> float:
    """Largest phase error that still guarantees exact recovery."""
    return spec.q ** (theta(spec) - 1) / (4.0 * math.sqrt(spec.field.order))


@dataclass(frozen=True)
class IcqParams:
    """Parameters of a candidate code: n = (q**k - 1)/(alpha * k**s)."""

    q: int
    k: int
    alpha: float
    s: float
    epsilon: float

    def __post_init__(self):
        N = self.alpha * self.k**self.s
        if N <= 0 or abs(N - round(N)) > 1e-9:
            raise InvalidParameters(f"N = alpha * k^s = {N} is not a positive integer")
        if self.epsilon <= 0:
            raise InvalidParameters(f"epsilon = {self.epsilon} must be positive")

    @property
    def N(self) -> int:
        return round(self.alpha * self.k**self.s)

    @classmethod
    def from_code_params(cls, q: int, k: int, N: int, epsilon: float) -> "IcqParams":
        return cls(q=q, k=k, alpha=float(N), s=0.0, epsilon=epsilon)


@dataclass
class MembershipReport:
    """Clause-by-clause result of the class-membership check."""

    q: int
    k: int
    N: int
    epsilon: float
    n_integral: bool
    order_ok: bool
    n: int | None
    theta: int | None
    epsilon_bound: float | None
    epsilon_ok: bool | None
    member: bool
    failures: list[str]

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "k": self.k,
            "N": self.N,
            "epsilon": self.epsilon,
            "n_integral": self.n_integral,
            "order_ok": self.order_ok,
            "n": self.n,
            "theta": self.theta,
            "epsilon_bound": self.epsilon_bound,
            "epsilon_ok": self.epsilon_ok,
            "member": self.member,
            "failures": list(self.failures),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "MembershipReport":
        return cls(**{k: d[k] for k in (
            "q", "k", "N", "epsilon", "n_integral", "order_ok", "n",
            "theta", "epsilon_bound", "epsilon_ok", "member", "failures")})


def icq_membership(params: IcqParams) -> MembershipReport:
    """Check the three membership clauses, returning all diagnostics.

    Failures are decisions, not errors: n integral, ord_n(q) = k, and
    epsilon within the recovery bound are each reported separately.
    """
    q, k, N, eps = params.q, params.k, params.N, params.epsilon
    failures: list[str] = []
    if not eps < 1:
        failures.append("EpsilonNotBelowOne")
    total = q**k - 1
    n_integral = total % N == 0
    n = total // N if n_integral else None
    if not n_integral:
        failures.append("IntegralityFailed")
    order_ok = bool(n_integral and multiplicative_order(q, n) == k)
    if n_integral and not order_ok:
        failures.append("OrderCheckFailed")
    theta_val = None
    bound = None
    epsilon_ok = None
    if n_integral and order_ok:
        spec = irreducible_cyclic_code(q, k, N)
        try:
            theta_val = theta(spec)
        except NonIntegralTheta:
            failures.append("NonIntegralTheta")
        else:
            bound = epsilon_bound(spec)
            epsilon_ok = eps <= bound
            if not epsilon_ok:
                failures.append("EpsilonExceedsBound")
    return MembershipReport(
        q=q, k=k, N=N, epsilon=eps,
        n_integral=n_integral, order_ok=order_ok, n=n,
        theta=theta_val, epsilon_bound=bound, epsilon_ok=epsilon_ok,
        member=not failures, failures=failures,
    )


def noisy_gauss_oracle(true_gamma: float, epsilon: float, seed: int) -> float:
    """true_gamma plus a uniform draw from (-epsilon, epsilon).

    The generator is the named stdlib Mersenne Twister seeded with the
    given integer, so identical seeds reproduce identical perturbations.
    """
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    return true_gamma + random.Random(seed).uniform(-epsilon, epsilon)


@dataclass
class PipelineReport:
    """Everything one noisy recovery run produced."""

    q: int
    k: int
    N: int
    n: int
    epsilon: float
    seed: int
    theta: int
    epsilon_bound: float
    d: int
    num_cosets: int
    oracle_calls: int
    injected_errors: list[float]
    recovered_spectrum: WeightSpectrum
    exact: bool

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "k": self.k,
            "N": self.N,
            "n": self.n,
            "epsilon": self.epsilon,
            "seed": self.seed,
            "theta": self.theta,
            "epsilon_bound": self.epsilon_bound,
            "d": self.d,
            "num_cosets": self.num_cosets,
            "oracle_calls": self.oracle_calls,
            "injected_errors": list(self.injected_errors),
            "recovered_spectrum": self.recovered_spectrum.to_dict(),
            "exact": self.exact,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "PipelineReport":
        spectrum = WeightSpectrum.from_dict(d["recovered_spectrum"], d["n"])
        kwargs = {k: d[k] for k in (
            "q", "k", "N", "n", "epsilon", "seed", "theta", "epsilon_bound",
            "d", "num_cosets", "oracle_calls", "injected_errors", "exact")}
        return cls(recovered_spectrum=spectrum, **kwargs)


class _PipelineContext:
    """Per-code state shared across trials: code, exact phases, reference."""

    def __init__(self, q: int, k: int, N: int):
        self.spec = irreducible_cyclic_code(q, k, N)
        partition = coset_leaders(N, q)
        self.leaders = [c.leader for c in partition.cosets]
        self.sizes = [c.size for c in partition.cosets]
        self.gauss = order_d_character_sums(self.spec)
        self.d = len(self.gauss) + 1
        self.gammas = np.array([g.gamma for g in self.gauss])
        self.theta = theta(self.spec)
        self.divisor = q ** (self.theta - 1)
        self.bound = epsilon_bound(self.spec)
        self.base = self.spec.field.order * (q - 1) / (q * N)
        self.coef = (q - 1) / (q * N)
        self.mag = math.sqrt(self.spec.field.order)
        if self.d > 1:
            b = np.array(self.leaders).reshape(-1, 1)
            a = np.arange(1, self.d).reshape(1, -1)
            self.chi = np.exp(-2j * np.pi * ((b * a) % self.d) / self.d)
        else:
            self.chi = None
        self.reference = weight_spectrum_mceliece(self.spec)

    def run_seed(self, epsilon: float, seed: int) -> PipelineReport:
        spec = self.spec
        injected: list[float] = []
        if self.d > 1:
            noisy = np.empty(self.d - 1)
            for a in range(1, self.d):
                g = noisy_gauss_oracle(float(self.gammas[a - 1]), epsilon,
                                       seed * 100003 + a)
                noisy[a - 1] = g
                injected.append(g - float(self.gammas[a - 1]))
            phases = self.mag * np.exp(1j * noisy)
            svals = (self.base - self.coef * (self.chi @ phases)).real
        else:
            svals = np.full(len(self.leaders), self.base)
        tallies: dict[int, int] = {}
        for s, size in zip(svals, self.sizes):
            w = round(float(s) / self.divisor) * self.divisor
            tallies[w] = tallies.get(w, 0) + size
        counts = {w: spec.n * a for w, a in tallies.items()}
        counts[0] = counts.get(0, 0) + 1
        recovered = WeightSpectrum(counts, spec.n)
        exact = recovered.counts == self.reference.counts
        return PipelineReport(
            q=spec.q, k=spec.k, N=spec.N, n=spec.n,
            epsilon=epsilon, seed=seed,
            theta=self.theta, epsilon_bound=self.bound,
            d=self.d, num_cosets=len(self.leaders),
            oracle_calls=self.d - 1,
            injected_errors=injected,
            recovered_spectrum=recovered,
            exact=exact,
        )


def run_pipeline(q: int, k: int, N: int, epsilon: float, seed: int,
                 force: bool = False, strict: bool = False) -> PipelineReport:
    """One noisy recovery run: build the code, sieve the cosets, perturb
    the exact phases, evaluate the weight formula per leader, round to
    multiples of q**(theta-1), tally, and compare to the noiseless
    spectrum.

    Raises MembershipFailed when the epsilon/parameter check fails and
    force is not set; with strict=True a non-exact recovery raises
    RecoveryFailed instead of just being reported.
    """
    membership = icq_membership(IcqParams.from_code_params(q, k, N, epsilon))
    if not membership.member and not force:
        raise MembershipFailed(", ".join(membership.failures))
    report = _PipelineContext(q, k, N).run_seed(epsilon, seed)
    if strict and not report.exact:
        raise RecoveryFailed(
            f"recovered spectrum differs from reference (seed {seed})")
    return report


def run_pipeline_trials(q: int, k: int, N: int, epsilon: float, seeds,
                        force: bool = False) -> list[PipelineReport]:
    """run_pipeline over many seeds with the code built only once."""
    membership = icq_membership(IcqParams.from_code_params(q, k, N, epsilon))
    if not membership.member and not force:
        raise MembershipFailed(", ".join(membership.failures))
    ctx = _PipelineContext(q, k, N)
    return [ctx.run_seed(epsilon, seed) for seed in seeds]
