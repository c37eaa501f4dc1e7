"""Minimal polynomials, factorization of x**n - 1, and irreducible cyclic codes.

factor_xn_minus_1 works per divisor f of n: the primitive f-th roots of
unity contribute phi(f)/ord_q(f) irreducible factors of degree ord_q(f).
When that ratio is 1 the factor is the cyclotomic polynomial of order f
reduced mod q and costs nothing; otherwise the factor products are taken
over a small splitting field GF(q**ord_q(f)) held in polynomial form, so
no log tables (and no table cap) are involved. minimal_polynomial keeps
the direct table-backed route for fields small enough to build.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

import numpy as np

from . import poly
from .cosets import CosetPartition, cosets_full, coset_count_formula, multiplicative_order
from .errors import InvalidParameters, NoDegreeKFactor, OrderMismatch
from .field import DEFAULT_TABLE_CAP, ExtField, build_ext_field
from .intmath import check_prime, euler_phi, factorize

__all__ = [
    "CodeSpec",
    "minimal_polynomial",
    "factor_xn_minus_1",
    "irreducible_cyclic_code",
    "generator_matrix",
    "codeword_from_trace",
]


# ---------------------------------------------------------------------------
# minimal polynomials over a table-backed field


def minimal_polynomial(s: int, partition: CosetPartition, F: ExtField) -> list[int]:
    """M_s(X), the product of (X - alpha_N**eta) over eta in the coset of s.

    alpha_N is the canonical element of order N in F, namely
    alpha**((q**k - 1)/N). The result is monic with coefficients in the
    base field, has degree equal to the coset size, and is irreducible.
    """
    N = partition.N
    if partition.p != F.q:
        raise InvalidParameters(
            f"partition multiplier {partition.p} differs from field characteristic {F.q}")
    if F.group_order % N != 0:
        raise OrderMismatch(f"GF({F.q}^{F.k}) has no element of order {N}")
    coset = next((c for c in partition.cosets if c.leader == s), None)
    if coset is None:
        raise ValueError(f"{s} is not a coset leader of the partition")
    if F.k % coset.size != 0:
        raise OrderMismatch(
            f"coset size {coset.size} does not divide extension degree {F.k}")
    members = coset.members
    if members is None:
        members = []
        a = s
        for _ in range(coset.size):
            members.append(a)
            a = a * partition.p % N
    step = F.group_order // N

    # incremental product of linear factors over F
    prod = [1]
    for eta in members:
        root = F.alpha_pow(step * eta)
        nroot = F.neg(root)
        nxt = [0] * (len(prod) + 1)
        for i, c in enumerate(prod):
            nxt[i + 1] = F.add(nxt[i + 1], c)
            nxt[i] = F.add(nxt[i], F.mul(nroot, c))
        prod = nxt

    coeffs = []
    for c in prod:
        if c >= F.q:
            raise OrderMismatch("minimal polynomial left the base field")
        coeffs.append(c)
    assert coeffs[-1] == 1 and len(coeffs) - 1 == coset.size
    assert poly.is_irreducible(coeffs, F.q)
    return coeffs


# ---------------------------------------------------------------------------
# table-free splitting fields for factor_xn_minus_1


class _SplittingField:
    """GF(q**k) as GF(q)[z]/(h) with numpy coefficient vectors, no tables."""

    def __init__(self, q: int, k: int):
        self.q = q
        self.k = k
        self.modulus = poly.find_irreducible(q, k)
        self.ctx = poly.ModMulContext(self.modulus, q)
        self.one = np.zeros(k, dtype=np.int64)
        self.one[0] = 1

    def mul(self, a, b):
        return self.ctx.mul(a, b)

    def pow(self, a, e: int):
        result = self.one.copy()
        acc = a
        while e:
            if e & 1:
                result = self.mul(result, acc)
            acc = self.mul(acc, acc)
            e >>= 1
        return result

    def element_of_order(self, f: int):
        """Deterministic element of exact multiplicative order f."""
        q, k = self.q, self.k
        cofactor = (q**k - 1) // f
        primes = list(factorize(f)) if f > 1 else []
        for v in range(2, q**k):
            cand = np.zeros(k, dtype=np.int64)
            t = v
            for i in range(k):
                cand[i] = t % q
                t //= q
            eta = self.pow(cand, cofactor)
            if np.array_equal(eta, self.one):
                continue
            if all(not np.array_equal(self.pow(eta, f // p), self.one) for p in primes):
                return eta
        raise OrderMismatch(f"no element of order {f} in GF({q}^{k})")


@lru_cache(maxsize=None)
def _cyclotomic_mod(f: int, q: int) -> tuple[int, ...]:
    """Cyclotomic polynomial of order f reduced mod q (f coprime to q)."""
    num = poly.x_pow_n_minus_1(f, q)
    for d in range(1, f):
        if f % d == 0:
            quot, rem = poly.poly_divmod(num, list(_cyclotomic_mod(d, q)), q)
            assert not rem
            num = quot
    return tuple(num)


@lru_cache(maxsize=None)
def _factor_cyclotomic(f: int, q: int) -> dict[int, tuple[int, ...]]:
    """Irreducible factors of the order-f cyclotomic polynomial over GF(q),
    keyed by the q-cyclotomic coset leader (mod f) of the root exponents."""
    if f == 1:
        return {0: ((q - 1) % q, 1)}
    k = multiplicative_order(q, f)
    phi = euler_phi(f)
    assert phi % k == 0
    if phi == k:
        return {1: _cyclotomic_mod(f, q)}

    sf = _SplittingField(q, k)
    beta = sf.element_of_order(f)
    factors: dict[int, tuple[int, ...]] = {}
    seen = set()
    for s in range(1, f):
        if gcd(s, f) != 1 or s in seen:
            continue
        orbit = []
        a = s
        while a not in seen:
            seen.add(a)
            orbit.append(a)
            a = a * q % f
        prod = [sf.one]
        for e in orbit:
            root = sf.pow(beta, e)
            nroot = (-root) % q
            nxt = [np.zeros(k, dtype=np.int64) for _ in range(len(prod) + 1)]
            for i, c in enumerate(prod):
                nxt[i + 1] = (nxt[i + 1] + c) % q
                nxt[i] = (nxt[i] + sf.mul(nroot, c)) % q
            prod = nxt
        coeffs = []
        for c in prod:
            assert not c[1:].any(), "factor coefficient left the base field"
            coeffs.append(int(c[0]))
        factors[s] = tuple(coeffs)
    assert len(factors) == phi // k
    return factors


def factor_xn_minus_1(n: int, q: int) -> list[list[int]]:
    """Minimal polynomials M_s over all q-cyclotomic coset leaders mod n.

    The returned list is ordered by coset leader; the product of the
    factors is verified to reconstruct x**n - 1 exactly and the factor
    count is checked against the totient/order formula.
    """
    check_prime(q)
    partition = cosets_full(n, q)  # raises NotCoprime when gcd(n, q) != 1
    factors = []
    for coset in partition.cosets:
        f = n // gcd(n, coset.leader) if coset.leader else 1
        table = _factor_cyclotomic(f, q)
        s_mod_f = coset.leader // (n // f)
        orbit_min = s_mod_f
        a = s_mod_f * q % f
        while a != s_mod_f:
            orbit_min = min(orbit_min, a)
            a = a * q % f
        factors.append(list(table[orbit_min]))
        assert len(factors[-1]) - 1 == coset.size

    # product check, mod-q convolution chain
    acc = np.array([1], dtype=np.int64)
    for fac in factors:
        acc = np.convolve(acc, np.array(fac, dtype=np.int64)) % q
    expect = np.array(poly.x_pow_n_minus_1(n, q), dtype=np.int64)
    assert np.array_equal(acc, expect), "factor product != x^n - 1"
    assert len(factors) == coset_count_formula(n, q)
    return factors


# ---------------------------------------------------------------------------
# irreducible cyclic codes


@dataclass
class CodeSpec:
    """An irreducible cyclic [n, k] code over GF(q) with n*N = q**k - 1."""

    q: int
    k: int
    n: int
    N: int
    field: ExtField
    generator: list[int]
    check: list[int]

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "k": self.k,
            "n": self.n,
            "N": self.N,
            "field": self.field.to_dict(),
            "generator": list(self.generator),
            "check": list(self.check),
        }

    def __repr__(self):
        return f"CodeSpec([{self.n},{self.k}] over GF({self.q}), N={self.N})"


def irreducible_cyclic_code(q: int, k: int, N: int,
                            table_cap: int = DEFAULT_TABLE_CAP) -> CodeSpec:
    """Build the [n, k] irreducible cyclic code with n = (q**k - 1)/N.

    The check polynomial is the minimal polynomial of alpha**(-N), which
    is exactly the degree-k irreducible factor of x**n - 1 whose code
    contains every trace word (Tr(tau), Tr(tau*alpha**N), ...).
    """
    check_prime(q)
    if k < 1 or N < 1:
        raise InvalidParameters("k and N must be >= 1")
    total = q**k - 1
    if total % N != 0:
        raise InvalidParameters(f"N = {N} does not divide q^k - 1 = {total}")
    n = total // N
    if multiplicative_order(q, n) != k:
        raise InvalidParameters(
            f"ord_{n}({q}) = {multiplicative_order(q, n)} != k = {k}")

    F = build_ext_field(q, k, table_cap)
    root_exp = (-N) % total if total > 1 else 0

    # Frobenius orbit of alpha**(-N); its size is ord_n(q) = k
    orbit = []
    e = root_exp
    while e not in orbit:
        orbit.append(e)
        e = e * q % total
    if len(orbit) != k:
        raise NoDegreeKFactor(
            f"minimal polynomial of alpha^-N has degree {len(orbit)}, expected {k}")

    h = [1]
    for e in orbit:
        root = F.alpha_pow(e)
        nroot = F.neg(root)
        nxt = [0] * (len(h) + 1)
        for i, c in enumerate(h):
            nxt[i + 1] = F.add(nxt[i + 1], c)
            nxt[i] = F.add(nxt[i], F.mul(nroot, c))
        h = nxt
    assert all(c < q for c in h), "check polynomial left the base field"
    assert poly.is_irreducible(h, q)

    g, rem = poly.poly_divmod(poly.x_pow_n_minus_1(n, q), h, q)
    assert not rem, "check polynomial does not divide x^n - 1"
    return CodeSpec(q=q, k=k, n=n, N=N, field=F, generator=g, check=h)


def generator_matrix(spec: CodeSpec) -> list[list[int]]:
    """k x n matrix whose row i is the coefficient vector of x**i * g(x)."""
    g, n, k = spec.generator, spec.n, spec.k
    rows = []
    for i in range(k):
        row = [0] * n
        for j, c in enumerate(g):
            row[i + j] = c
        rows.append(row)
    return rows


def codeword_from_trace(tau: int, spec: CodeSpec) -> list[int]:
    """The word (Tr(tau), Tr(tau*alpha**N), ..., Tr(tau*alpha**((n-1)N)))."""
    F = spec.field
    F.check(tau)
    if tau == 0:
        return [0] * spec.n
    t = F.dlog(tau)
    tr = F.trace_table()
    M = F.group_order
    return [int(tr[(t + j * spec.N) % M]) for j in range(spec.n)]
