"""Exact polynomial arithmetic over prime fields GF(q).

A polynomial is a list of ints in [0, q), low degree first, with no
trailing zeros; the zero polynomial is the empty list. All arithmetic is
exact. Irreducibility uses Rabin's test with a numpy-backed modular
multiply so that degrees in the low hundreds stay cheap.
"""

import itertools

import numpy as np

from .errors import DivideByZeroPoly, NoIrreducibleFound
from .intmath import factorize


def trim(p: list[int]) -> list[int]:
    """Drop trailing zero coefficients in place-free fashion."""
    end = len(p)
    while end > 0 and p[end - 1] == 0:
        end -= 1
    return p[:end]


def degree(p: list[int]) -> int:
    """Degree of p; -1 for the zero polynomial."""
    return len(p) - 1


def poly_add(a: list[int], b: list[int], q: int) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % q
    return trim(out)


def poly_sub(a: list[int], b: list[int], q: int) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % q
    return trim(out)


def poly_mul(a: list[int], b: list[int], q: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return trim([c % q for c in out])


def poly_divmod(a: list[int], b: list[int], q: int) -> tuple[list[int], list[int]]:
    """Quotient and remainder with deg(remainder) < deg(b)."""
    if not b:
        raise DivideByZeroPoly("polynomial division by zero")
    rem = list(a)
    db = degree(b)
    lead_inv = pow(b[-1], -1, q)
    quot = [0] * max(len(a) - db, 0)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i] % q
        if c == 0:
            continue
        f = (c * lead_inv) % q
        quot[i - db] = f
        for j in range(db + 1):
            rem[i - db + j] = (rem[i - db + j] - f * b[j]) % q
    return trim(quot), trim([c % q for c in rem])


def poly_mod(a: list[int], b: list[int], q: int) -> list[int]:
    return poly_divmod(a, b, q)[1]


def poly_gcd(a: list[int], b: list[int], q: int) -> list[int]:
    """Monic greatest common divisor."""
    while b:
        a, b = b, poly_mod(a, b, q)
    if a:
        inv = pow(a[-1], -1, q)
        a = [(c * inv) % q for c in a]
    return a


def poly_mod_pow(base: list[int], e: int, modulus: list[int], q: int) -> list[int]:
    """base**e mod modulus by square-and-multiply; e >= 0 may be a big int."""
    if e < 0:
        raise ValueError("negative exponent")
    result = [1]
    acc = poly_mod(base, modulus, q)
    while e:
        if e & 1:
            result = poly_mod(poly_mul(result, acc, q), modulus, q)
        acc = poly_mod(poly_mul(acc, acc, q), modulus, q)
        e >>= 1
    return result


def poly_eval(p: list[int], x: int, q: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = (acc * x + c) % q
    return acc


def x_pow_n_minus_1(n: int, q: int) -> list[int]:
    p = [0] * (n + 1)
    p[0] = q - 1
    p[n] = 1
    return p


def to_string(p: list[int]) -> str:
    """Human-readable form, highest degree first, e.g. 'x^4 + x + 1'."""
    if not p:
        return "0"
    terms = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            var = "x" if i == 1 else f"x^{i}"
            terms.append(var if c == 1 else f"{c}*{var}")
    return " + ".join(terms)


class ModMulContext:
    """Multiplication modulo a fixed monic polynomial, numpy-backed.

    Reduction of a product (degree <= 2K-2) is one matrix product with a
    precomputed (K-1) x K table of x^(K+j) mod m, so repeated modular
    squarings in Rabin's test cost two small C-level ops each.
    """

    def __init__(self, modulus: list[int], q: int):
        if not modulus or modulus[-1] != 1:
            raise ValueError("modulus must be monic")
        self.q = q
        self.k = degree(modulus)
        self.modulus = list(modulus)
        k = self.k
        rows = np.zeros((max(k - 1, 0), k), dtype=np.int64)
        # row j holds x^(k+j) mod modulus
        cur = [(-c) % q for c in modulus[:k]]  # x^k mod m
        for j in range(k - 1):
            rows[j, : len(cur)] = cur
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for i in range(k):
                    cur[i] = (cur[i] - top * modulus[i]) % q
        self._rows = rows

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        q, k = self.q, self.k
        c = np.convolve(a, b) % q
        if len(c) <= k:
            out = np.zeros(k, dtype=np.int64)
            out[: len(c)] = c
            return out
        head = np.zeros(k, dtype=np.int64)
        head[: k] = c[:k]
        return (head + c[k:] @ self._rows[: len(c) - k]) % q

    def pow_x(self, e: int) -> np.ndarray:
        """x**e mod modulus for a (possibly huge) exponent e >= 0."""
        k = self.k
        result = np.zeros(k, dtype=np.int64)
        result[0] = 1
        if k == 1:
            # x reduces to a scalar; fall back to plain modular power
            base = (-self.modulus[0]) % self.q
            result[0] = pow(base, e, self.q)
            return result
        acc = np.zeros(k, dtype=np.int64)
        acc[1] = 1
        while e:
            if e & 1:
                result = self.mul(result, acc)
            acc = self.mul(acc, acc)
            e >>= 1
        return result


def is_irreducible(p: list[int], q: int) -> bool:
    """Rabin's irreducibility test over GF(q)."""
    p = trim([c % q for c in p])
    k = degree(p)
    if k <= 0:
        return False
    if k == 1:
        return True
    if p[0] == 0:
        return False  # divisible by x
    inv = pow(p[-1], -1, q)
    monic = [(c * inv) % q for c in p]
    ctx = ModMulContext(monic, q)
    # x^(q^k) == x mod p
    frob = ctx.pow_x(q**k)
    target = np.zeros(k, dtype=np.int64)
    target[1] = 1
    if not np.array_equal(frob, target):
        return False
    # gcd(x^(q^(k/r)) - x, p) == 1 for each prime r | k
    for r in factorize(k):
        sub = ctx.pow_x(q ** (k // r))
        diff = trim([int((sub[i] - (1 if i == 1 else 0)) % q) for i in range(k)])
        g = poly_gcd(diff, monic, q)
        if degree(g) != 0:
            return False
    return True


def find_irreducible(q: int, k: int) -> list[int]:
    """First irreducible monic degree-k polynomial in the deterministic scan.

    Candidates x^k + c_(k-1) x^(k-1) + ... + c_0 are tried in ascending
    order of the packed value sum(c_i * q^i), so builds are reproducible.
    """
    if k < 1:
        raise ValueError("degree must be >= 1")
    for v in range(q**k):
        coeffs = []
        t = v
        for _ in range(k):
            coeffs.append(t % q)
            t //= q
        cand = coeffs + [1]
        if is_irreducible(cand, q):
            return cand
    raise NoIrreducibleFound(f"no irreducible of degree {k} over GF({q})")


def all_monic(q: int, k: int):
    """Yield every monic degree-k polynomial over GF(q) (test helper)."""
    for tail in itertools.product(range(q), repeat=k):
        yield list(tail) + [1]
