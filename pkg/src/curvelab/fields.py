"""Exact arithmetic in small finite fields GF(p^m).

Elements are plain integers: the element sum(c_i * x^i) is encoded as the
base-p integer sum(c_i * p^i), so for p = 2 the encoding is a bitmask and
addition is XOR.  Each field carries exponent and discrete-log tables for
its designated primitive generator, which makes multiplication, inversion,
Frobenius, and subfield embeddings table lookups.  Fields are capped at
2^20 elements so the tables stay small.

The default modulus for each (p, m) is read from a bundled data file whose
polynomials form a norm-compatible system: whenever m_sub divides m_ext,
the modulus of degree m_sub splits in the larger field with the scaled
power g^((p^m_ext - 1)/(p^m_sub - 1)) of the larger field's generator as a
root.  Subfield embedding is therefore multiplication of discrete logs by
that scaling factor, and nothing else.

`Field` instances are immutable after construction and safe to share
across workers.  `FieldElement` is a thin value wrapper for code that
prefers operators over explicit table calls; hot loops should use the
integer encodings and `Field` methods directly.
"""

from __future__ import annotations

import functools
import os
from importlib import resources

__all__ = [
    "Field",
    "FieldElement",
    "build_field",
    "embed",
    "load_default_moduli",
    "MODULI_ENV_VAR",
]

MODULI_ENV_VAR = "CURVELAB_MODULI"

_MAX_ORDER = 1 << 20


# ---------------------------------------------------------------------------
# GF(p)[x] helpers on coefficient tuples (low-to-high), used only during
# construction for the irreducibility check.

def _poly_trim(c):
    while c and c[-1] == 0:
        c = c[:-1]
    return c


def _poly_mod(a, f, p):
    # f monic
    a = list(a)
    df = len(f) - 1
    while len(_poly_trim(tuple(a))) - 1 >= df:
        a = list(_poly_trim(tuple(a)))
        k = len(a) - 1 - df
        c = a[-1]
        for i, fi in enumerate(f):
            a[k + i] = (a[k + i] - c * fi) % p
    return _poly_trim(tuple(a))


def _int_to_poly(e, p):
    digits = []
    while e:
        digits.append(e % p)
        e //= p
    return tuple(digits)


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _irreducible(f, p):
    """Trial factorization: no monic divisor of degree 1..deg(f)//2."""
    m = len(f) - 1
    for k in range(1, m // 2 + 1):
        for enc in range(p**k, 2 * p**k):
            d = _int_to_poly(enc, p)
            if d[-1] != 1:
                continue
            if not _poly_mod(f, d, p):
                return False
    return True


# ---------------------------------------------------------------------------
# Bundled modulus data.

def load_default_moduli(path=None):
    """Parse the modulus table into {(p, m): coefficient tuple}.

    With no argument, reads the path named by the CURVELAB_MODULI
    environment variable if set, else the bundled data file.  Lines are
    "p m c0 c1 ... cm", '#' starts a comment.
    """
    if path is None:
        path = os.environ.get(MODULI_ENV_VAR)
    if path is None:
        text = (resources.files("curvelab") / "data" / "moduli.txt").read_text()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    table = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) < 4:
            raise ValueError(f"modulus file line {lineno}: expected 'p m c0 ... cm'")
        p, m = int(parts[0]), int(parts[1])
        coeffs = tuple(int(t) for t in parts[2:])
        if len(coeffs) != m + 1:
            raise ValueError(
                f"modulus file line {lineno}: degree-{m} entry has {len(coeffs)} coefficients"
            )
        table[(p, m)] = coeffs
    return table


# keyed on the override path so env changes between calls take effect
@functools.lru_cache(maxsize=8)
def _default_moduli_cached(env_path):
    return load_default_moduli(env_path)


# ---------------------------------------------------------------------------
# The field itself.

class Field:
    """Immutable GF(p^m) with exponent/log tables.

    Attributes:
      p, m, order: characteristic, extension degree, p^m.
      modulus: coefficient tuple of the monic irreducible modulus, low-to-high.
      generator: encoding of the primitive generator (x for m >= 2, the
        root of the linear modulus for m = 1).
      exp_table: list of length 2*(order-1); exp_table[i] = generator^i,
        doubled so log sums index without a modular reduction.
      log_table: list of length order; log_table[0] is a -1 sentinel.
    """

    __slots__ = (
        "p",
        "m",
        "order",
        "modulus",
        "generator",
        "exp_table",
        "log_table",
        "_np_tables",
        "_embed_factors",
    )

    def __init__(self, p, m, modulus):
        if not _is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if m < 1:
            raise ValueError(f"extension degree must be positive, got {m}")
        order = p**m
        if order > _MAX_ORDER:
            raise ValueError(
                f"GF({p}^{m}) has {order} elements; table-backed fields are capped at 2^20"
            )
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {m}, got {modulus}")
        if not _irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over GF({p})")

        self.p = p
        self.m = m
        self.order = order
        self.modulus = modulus

        if m == 1:
            # modulus is x + c0; its root -c0 must generate GF(p)*
            gen = (-modulus[0]) % p
        else:
            gen = p  # the class of x
        self.generator = gen

        exp = [0] * (2 * (order - 1))
        log = [-1] * order
        acc = 1
        for i in range(order - 1):
            exp[i] = acc
            exp[i + order - 1] = acc
            if log[acc] != -1:
                raise ValueError(
                    f"designated generator of GF({p}^{m}) is not primitive "
                    f"(order divides {i})"
                )
            log[acc] = i
            acc = self._mul_by_gen(acc)
        if acc != 1:
            raise ValueError(f"generator power table of GF({p}^{m}) failed to close")
        self.exp_table = exp
        self.log_table = log
        self._np_tables = None
        self._embed_factors = {}

    # -- construction helpers ------------------------------------------------

    def _mul_by_gen(self, a):
        p, m = self.p, self.m
        if m == 1:
            return (a * self.generator) % p
        if p == 2:
            a <<= 1
            if a >> m & 1:
                # reduce x^m by the modulus tail
                a &= (1 << m) - 1
                for i, c in enumerate(self.modulus[:-1]):
                    if c:
                        a ^= 1 << i
            return a
        digits = list(_int_to_poly(a, p))
        digits += [0] * (m - len(digits))
        carry = digits[-1]
        shifted = [0] + digits[:-1]
        if carry:
            for i, c in enumerate(self.modulus[:-1]):
                shifted[i] = (shifted[i] - carry * c) % p
        out = 0
        for c in reversed(shifted):
            out = out * p + c
        return out

    # -- integer-encoding arithmetic ----------------------------------------

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        p = self.p
        out = 0
        pw = 1
        while a or b:
            out += ((a % p + b % p) % p) * pw
            a //= p
            b //= p
            pw *= p
        return out

    def neg(self, a):
        if self.p == 2:
            return a
        p = self.p
        out = 0
        pw = 1
        while a:
            out += (-a % p) * pw
            a //= p
            pw *= p
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self.exp_table[self.log_table[a] + self.log_table[b]]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("finite-field inverse of zero")
        n = self.order - 1
        return self.exp_table[n - self.log_table[a]]

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("finite-field division by zero")
        if a == 0:
            return 0
        n = self.order - 1
        return self.exp_table[self.log_table[a] + n - self.log_table[b]]

    def pow(self, a, e):
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("finite-field inverse of zero")
            return 0 if e else 1
        n = self.order - 1
        return self.exp_table[(self.log_table[a] * e) % n]

    def frobenius(self, a, k=1):
        """a^(p^k); k may exceed m (it wraps) but not be negative."""
        if k < 0:
            raise ValueError("frobenius iteration count must be nonnegative")
        if a == 0:
            return 0
        n = self.order - 1
        return self.exp_table[(self.log_table[a] * pow(self.p, k, n)) % n]

    # -- structure ----------------------------------------------------------

    def elements(self):
        """All element encodings, 0 first then generator powers' order."""
        return range(self.order)

    def element(self, enc):
        if not 0 <= enc < self.order:
            raise ValueError(f"encoding {enc} outside GF({self.p}^{self.m})")
        return FieldElement(self, enc)

    def from_int(self, n):
        """The image of the integer n under Z -> GF(p^m) (n mod p as a constant)."""
        return n % self.p

    def embedding_factor(self, ext):
        """Log-scaling factor for the embedding into ext, with compatibility check."""
        key = (ext.p, ext.m, ext.modulus)
        hit = self._embed_factors.get(key)
        if hit is not None:
            return hit
        if ext.p != self.p:
            raise ValueError(
                f"cannot embed GF({self.p}^{self.m}) into GF({ext.p}^{ext.m}): "
                "characteristics differ"
            )
        if ext.m % self.m != 0:
            raise ValueError(
                f"cannot embed GF({self.p}^{self.m}) into GF({ext.p}^{ext.m}): "
                f"{self.m} does not divide {ext.m}"
            )
        factor = (ext.order - 1) // (self.order - 1)
        # the embedding is a ring map iff our modulus vanishes on the image
        # of our generator; with incompatible moduli no log-scaling works
        image = ext.exp_table[(self.log_table[self.generator] * factor) % (ext.order - 1)]
        acc = 0
        for c in reversed(self.modulus):
            acc = ext.add(ext.mul(acc, image), c % ext.p)
        if acc != 0:
            raise ValueError(
                f"moduli of GF({self.p}^{self.m}) and GF({ext.p}^{ext.m}) are not "
                "norm-compatible; log-scaling embedding unavailable"
            )
        self._embed_factors[key] = factor
        return factor

    def embed_enc(self, ext, a):
        """Encoding of a (an element here) inside the extension field ext."""
        if a == 0:
            return 0
        factor = self.embedding_factor(ext)
        return ext.exp_table[(self.log_table[a] * factor) % (ext.order - 1)]

    def in_subfield_image(self, sub, a):
        """Whether encoding a (an element here) lies in the image of sub."""
        if a == 0:
            return True
        factor = sub.embedding_factor(self)
        return self.log_table[a] % factor == 0

    def numpy_tables(self):
        """(exp, log) as numpy arrays for kernel code; cached."""
        if self._np_tables is None:
            import numpy as np

            exp = np.asarray(self.exp_table, dtype=np.int64)
            log = np.asarray(self.log_table, dtype=np.int64)
            self._np_tables = (exp, log)
        return self._np_tables

    # -- formatting ---------------------------------------------------------

    def format_element(self, a):
        if a == 0:
            return "0"
        terms = []
        for i, c in enumerate(_int_to_poly(a, self.p)):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                base = "x" if i == 1 else f"x^{i}"
                terms.append(base if c == 1 else f"{c}*{base}")
        return " + ".join(reversed(terms))

    def __repr__(self):
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))


class FieldElement:
    """Value wrapper pairing a field with an element encoding."""

    __slots__ = ("field", "enc")

    def __init__(self, field, enc):
        self.field = field
        self.enc = enc

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements belong to different fields")
            return other.enc
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        enc = self._coerce(other)
        if enc is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.add(self.enc, enc))

    __radd__ = __add__

    def __sub__(self, other):
        enc = self._coerce(other)
        if enc is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(self.enc, enc))

    def __rsub__(self, other):
        enc = self._coerce(other)
        if enc is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(enc, self.enc))

    def __mul__(self, other):
        enc = self._coerce(other)
        if enc is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.enc, enc))

    __rmul__ = __mul__

    def __truediv__(self, other):
        enc = self._coerce(other)
        if enc is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.div(self.enc, enc))

    def __rtruediv__(self, other):
        enc = self._coerce(other)
        if enc is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.div(enc, self.enc))

    def __pow__(self, e):
        return FieldElement(self.field, self.field.pow(self.enc, e))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.enc))

    def frobenius(self, k=1):
        return FieldElement(self.field, self.field.frobenius(self.enc, k))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.enc == other.enc
        if isinstance(other, int):
            return self.enc == self.field.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.enc))

    def __bool__(self):
        return self.enc != 0

    def __repr__(self):
        return self.field.format_element(self.enc)


@functools.lru_cache(maxsize=None)
def _build_field_cached(p, m, modulus):
    return Field(p, m, modulus)


def build_field(p, m, modulus=None):
    """GF(p^m) with the bundled default modulus, or an explicit one.

    Deterministic for fixed (p, m): the default modulus comes from the
    bundled data file.  Raises ValueError if no default exists and none is
    supplied, or if a supplied modulus is reducible.
    """
    if modulus is None:
        table = _default_moduli_cached(os.environ.get(MODULI_ENV_VAR))
        try:
            modulus = table[(p, m)]
        except KeyError:
            raise ValueError(
                f"no bundled modulus for GF({p}^{m}); pass one explicitly"
            ) from None
    return _build_field_cached(p, m, tuple(modulus))


def embed(sub, ext, x):
    """Image of x under the ring embedding sub -> ext.

    x may be an integer encoding (returns an encoding) or a FieldElement
    of sub (returns a FieldElement of ext).
    """
    if isinstance(x, FieldElement):
        if x.field != sub:
            raise ValueError("element does not belong to the stated subfield")
        return FieldElement(ext, sub.embed_enc(ext, x.enc))
    return sub.embed_enc(ext, x)
