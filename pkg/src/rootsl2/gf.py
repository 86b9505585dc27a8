"""Arithmetic in GF(p^k) for odd p.

Field elements are encoded as integers in [0, q): the code of an element
with polynomial-basis coordinates (a_0, ..., a_{k-1}) is sum(a_i * p**i).
All binary operations are table-driven (q <= 125 at desk scale), so the
matrix layer can look arithmetic up with numpy fancy indexing.

The moduli for the small extension fields used by the matrix backend are
fixed, so element encodings are bit-exact across runs; other degrees fall
back to a deterministic seeded search for an irreducible polynomial.
"""

from dataclasses import dataclass
import random

import numpy as np

from .errors import BadInput

# Fixed monic moduli (ascending coefficients, last entry 1) for the
# desk-scale fields.  GF(9) uses x^2+1, so x*x = -1 there.
FIXED_MODULI = {
    (3, 2): (1, 0, 1),
    (5, 2): (2, 0, 1),
    (7, 2): (1, 0, 1),
    (11, 2): (1, 0, 1),
    (3, 4): (2, 1, 0, 0, 1),
    (5, 3): (3, 3, 0, 1),
}

_DIGITS = "0123456789a"  # p <= 11 at desk scale


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _poly_rem(num, den, p):
    """Remainder of num modulo den over GF(p), coefficients ascending."""
    num = list(num)
    dn = len(den) - 1
    inv_lead = pow(den[-1], p - 2, p)
    while len(num) - 1 >= dn:
        if num[-1] == 0:
            num.pop()
            continue
        c = num[-1] * inv_lead % p
        off = len(num) - 1 - dn
        for i, d in enumerate(den):
            num[off + i] = (num[off + i] - c * d) % p
        num.pop()
    return num


def _monic_polys(p, d):
    for code in range(p**d):
        coeffs = []
        c = code
        for _ in range(d):
            coeffs.append(c % p)
            c //= p
        yield coeffs + [1]


def is_irreducible(coeffs, p):
    """Trial factorization over GF(p); fine for the degrees we use."""
    k = len(coeffs) - 1
    if k < 1 or coeffs[-1] != 1:
        return False
    if coeffs[0] == 0:  # divisible by x
        return k == 1
    for d in range(1, k // 2 + 1):
        for g in _monic_polys(p, d):
            if not any(_poly_rem(coeffs, g, p)):
                return False
    return True


def _find_modulus(p, k):
    if (p, k) in FIXED_MODULI:
        return FIXED_MODULI[(p, k)]
    if k == 1:
        return (0, 1)  # x, unused
    rng = random.Random(0xC0FFEE ^ (p << 16) ^ k)
    while True:
        coeffs = [rng.randrange(p) for _ in range(k)] + [1]
        if is_irreducible(coeffs, p):
            return tuple(coeffs)


@dataclass(frozen=True)
class FieldParams:
    """The named finite field: odd p, q = p^k >= 5, fixed monic modulus."""

    p: int
    k: int
    q: int
    modulus: tuple

    @classmethod
    def make(cls, p, k=1, modulus=None):
        if not is_prime(p) or p == 2:
            raise BadInput(f"p = {p} is not an odd prime")
        if k < 1:
            raise BadInput(f"k = {k} must be positive")
        q = p**k
        if q < 5:
            raise BadInput(f"field size q = {q} < 5 is out of scope")
        if modulus is None:
            modulus = _find_modulus(p, k)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise BadInput("modulus must be monic of degree k")
        if k > 1 and not is_irreducible(list(modulus), p):
            raise BadInput("modulus is reducible over GF(p)")
        return cls(p, k, q, modulus)


class GF:
    """GF(p^k) with dense operation tables over integer element codes."""

    def __init__(self, p, k=1, modulus=None):
        self.params = FieldParams.make(p, k, modulus)
        self.p = p
        self.k = k
        self.q = self.params.q
        self._build_tables()

    def _build_tables(self):
        p, k, q = self.p, self.k, self.q
        # coefficient vectors of every code, shape (q, k)
        codes = np.arange(q)
        coeffs = np.empty((q, k), dtype=np.int64)
        c = codes.copy()
        for i in range(k):
            coeffs[:, i] = c % p
            c //= p
        self._coeffs = coeffs
        pows = p ** np.arange(k)

        self.add_table = ((coeffs[:, None, :] + coeffs[None, :, :]) % p @ pows).astype(np.int64)
        self.neg_table = (((-coeffs) % p) @ pows).astype(np.int64)
        self.sub_table = self.add_table[:, self.neg_table]

        # reduction of x^j for j < 2k-1 as coefficient vectors
        red = np.zeros((2 * k - 1, k), dtype=np.int64)
        for j in range(k):
            red[j, j] = 1
        mod_tail = np.array(self.params.modulus[:k], dtype=np.int64)
        for j in range(k, 2 * k - 1):
            # x^j = x * x^(j-1), then reduce the overflow coefficient
            prev = red[j - 1]
            shifted = np.zeros(k + 1, dtype=np.int64)
            shifted[1:] = prev
            red[j] = (shifted[:k] - shifted[k] * mod_tail) % p

        # convolution of coefficient vectors, then reduction, then encode
        conv = np.zeros((q, q, 2 * k - 1), dtype=np.int64)
        for s in range(k):
            for t in range(k):
                conv[:, :, s + t] += coeffs[:, None, s] * coeffs[None, :, t]
        prod_coeffs = conv % p @ red % p  # (q, q, k)
        self.mul_table = (prod_coeffs @ pows).astype(np.int64)

        self.inv_table = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            self.inv_table[a] = self.pow(a, q - 2)

        # Frobenius a -> a^p, iterated for a -> a^(p^j)
        frob = np.array([self.pow(a, p) for a in range(q)], dtype=np.int64)
        self._frob_p = frob

    # -- scalar operations ------------------------------------------------

    def add(self, a, b):
        return int(self.add_table[a, b])

    def sub(self, a, b):
        return int(self.sub_table[a, b])

    def mul(self, a, b):
        return int(self.mul_table[a, b])

    def neg(self, a):
        return int(self.neg_table[a])

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in GF(q)")
        return int(self.inv_table[a])

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        e = int(e)
        if e < 0:
            a, e = self.inv(a), -e
        r, base = 1, a
        while e:
            if e & 1:
                r = int(self.mul_table[r, base])
            base = int(self.mul_table[base, base])
            e >>= 1
        return r

    def frobenius(self, a):
        """a -> a^q0 where the field is GF(q0^2); order-2 automorphism."""
        if self.k % 2:
            raise BadInput("frobenius needs a quadratic extension GF(q0^2)")
        r = a
        for _ in range(self.k // 2):
            r = int(self._frob_p[r])
        return r

    @property
    def frob_table(self):
        if self.k % 2:
            raise BadInput("frobenius needs a quadratic extension GF(q0^2)")
        t = np.arange(self.q)
        for _ in range(self.k // 2):
            t = self._frob_p[t]
        return t

    # -- element structure ------------------------------------------------

    def encode(self, coeffs):
        c = 0
        for i, a in enumerate(coeffs):
            c += (int(a) % self.p) * self.p**i
        return c

    def decode(self, code):
        return tuple(int(x) for x in self._coeffs[code])

    def embed_subfield(self, a):
        """Lift a GF(p) value to its code in this field."""
        return int(a) % self.p

    def element_order(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative order")
        o, x = 1, a
        while x != 1:
            x = self.mul(x, a)
            o += 1
        return o

    def primitive_element(self):
        for a in range(2, self.q):
            if self.element_order(a) == self.q - 1:
                return a
        raise RuntimeError("no primitive element found")  # pragma: no cover

    def is_square(self, a):
        if a == 0:
            return True
        return self.pow(a, (self.q - 1) // 2) == 1

    def nonsquare(self):
        for a in range(2, self.q):
            if not self.is_square(a):
                return a
        raise RuntimeError("no nonsquare found")  # pragma: no cover

    def sqrt(self, a):
        """A square root of a, or None. Brute force; desk scale only."""
        for x in range(self.q):
            if self.mul(x, x) == a:
                return x
        return None

    # -- serialization ----------------------------------------------------

    def to_digits(self, code):
        """Base-p digit string, most significant coefficient first."""
        cs = self.decode(code)
        return "".join(_DIGITS[c] for c in reversed(cs))

    def from_digits(self, s):
        if len(s) != self.k:
            raise BadInput(f"expected {self.k} digits, got {s!r}")
        cs = [_DIGITS.index(ch) for ch in reversed(s)]
        if any(c >= self.p for c in cs):
            raise BadInput(f"digit out of range in {s!r}")
        return self.encode(cs)

    # -- companion embedding (GF(q)-matrices as GF(p)-matrices) ------------

    def companion_matrix(self):
        """k x k companion matrix of the modulus over GF(p)."""
        k, p = self.k, self.p
        C = np.zeros((k, k), dtype=np.int64)
        for i in range(1, k):
            C[i, i - 1] = 1
        C[:, k - 1] = (-np.array(self.params.modulus[:k])) % p
        return C

    def rep_table(self):
        """(q, k, k) array: code -> its k x k matrix over GF(p)."""
        k, p, q = self.k, self.p, self.q
        C = self.companion_matrix()
        pows = [np.eye(k, dtype=np.int64)]
        for _ in range(1, k):
            pows.append(pows[-1] @ C % p)
        reps = np.zeros((q, k, k), dtype=np.int64)
        for a in range(q):
            cs = self._coeffs[a]
            M = np.zeros((k, k), dtype=np.int64)
            for i in range(k):
                if cs[i]:
                    M = (M + cs[i] * pows[i]) % p
            reps[a] = M
        return reps

    def __repr__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"


_CACHE = {}


def field(p, k=1):
    """Shared GF instance for (p, k); tables are immutable."""
    key = (p, k)
    if key not in _CACHE:
        _CACHE[key] = GF(p, k)
    return _CACHE[key]
