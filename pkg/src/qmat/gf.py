"""Exact arithmetic in small finite fields GF(p^e).

Elements are stored as plain ints: the coefficient vector ``(c_0, ..., c_{e-1})``
of the polynomial ``c_0 + c_1 a + ... + c_{e-1} a^{e-1}`` (``a`` a root of the
modulus) is packed as ``sum(c_i * p**i)``.  All matrix code in the package
works on these ints; :class:`FieldElement` is a thin operator-overloading
wrapper for interactive use.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from .errors import (
    DegreeMismatch,
    DependentBasis,
    DivisionByZero,
    FieldMismatch,
    NonPrime,
    ReducibleModulus,
)

# Low-to-high coefficients, leading 1 included.
DEFAULT_MODULI = {
    (2, 2): (1, 1, 1),  # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),  # x^3 + x + 1, so a^3 = a + 1
    (3, 3): (1, 2, 0, 1),  # x^3 + 2x + 1
}

TABLE_LIMIT = 2**16
ADD_TABLE_LIMIT = 2**10


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo ``m`` over F_p (coefficients low-to-high)."""
    a = _poly_trim([c % p for c in a])
    m = _poly_trim([c % p for c in m])
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) >= len(m):
        coef = (a[-1] * inv_lead) % p
        shift = len(a) - len(m)
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - coef * c) % p
        _poly_trim(a)
    return a


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Exhaustive trial division by every monic polynomial of degree <= deg/2."""
    deg = len(modulus) - 1
    for d in range(1, deg // 2 + 1):
        for low in product(range(p), repeat=d):
            if not _poly_mod(modulus, list(low) + [1], p):
                return False
    return True


def first_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree ``e`` in lexicographic coefficient order."""
    for code in range(p**e):
        low = [(code // p**i) % p for i in range(e)]
        mod = tuple(low) + (1,)
        if low[0] and is_irreducible(mod, p):
            return mod
    raise DegreeMismatch(f"no irreducible polynomial of degree {e} over F_{p}")


class FiniteField:
    """GF(p^e) with an explicit modulus polynomial.

    Use :func:`field` to obtain (cached) instances; two fields compare equal iff
    they share ``p`` and the modulus.
    """

    def __init__(self, p: int, e: int = 1, modulus: Sequence[int] | str | None = None):
        if not is_prime(p):
            raise NonPrime(f"{p} is not prime")
        if e < 1:
            raise DegreeMismatch(f"extension degree must be >= 1, got {e}")
        if p**e > TABLE_LIMIT:
            raise DegreeMismatch(f"GF({p}^{e}) is larger than the supported 2^16 elements")
        if e == 1:
            if modulus not in (None, "default", (), []):
                mod = tuple(int(c) % p for c in modulus)
                if len(mod) != 2 or mod[1] != 1:
                    raise DegreeMismatch("a prime field takes no modulus (or a monic linear one)")
            mod = ()
        else:
            if modulus is None or modulus == "default":
                mod = DEFAULT_MODULI.get((p, e)) or first_irreducible(p, e)
            else:
                mod = tuple(int(c) % p for c in modulus)
            if len(mod) != e + 1:
                raise DegreeMismatch(f"modulus {list(mod)} does not have degree {e}")
            if mod[-1] != 1:
                raise DegreeMismatch("modulus must be monic (leading coefficient 1)")
            if not is_irreducible(mod, p):
                raise ReducibleModulus(f"modulus {list(mod)} is reducible over F_{p}")
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = mod
        self._build_tables()

    # -- construction helpers -------------------------------------------------
    def _poly_mul_int(self, a: int, b: int) -> int:
        p, e = self.p, self.e
        ca, cb = self.coords(a), self.coords(b)
        prod_ = [0] * (2 * e - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod_[i + j] += x * y
        red = _poly_mod(prod_, self.modulus, p) if e > 1 else [prod_[0] % p]
        return self.from_coords(red)

    def _build_tables(self) -> None:
        q, p = self.q, self.p
        if self.e == 1:
            mul = lambda a, b: (a * b) % p  # noqa: E731
        else:
            mul = self._poly_mul_int
        # find a generator of the multiplicative group
        order = q - 1
        prime_factors = [f for f in range(2, order + 1) if order % f == 0 and is_prime(f)]
        gen = 1
        for g in range(1, q):
            if all(self._slow_pow(g, order // f, mul) != 1 for f in prime_factors):
                gen = g
                break
        exp = [0] * (2 * order) if order else []
        log = [0] * q
        x = 1
        for i in range(order):
            exp[i] = x
            exp[i + order] = x
            log[x] = i
            x = mul(x, gen)
        self.generator = gen
        self._exp = exp
        self._log = log
        if p == 2 or self.e == 1:
            self._add_table = None
        elif q <= ADD_TABLE_LIMIT:
            self._add_table = [[self._digit_add(a, b) for b in range(q)] for a in range(q)]
        else:
            self._add_table = None
        self._neg = [self._digit_neg(a) for a in range(q)]

    def _slow_pow(self, g: int, k: int, mul) -> int:
        r = 1
        for _ in range(k):
            r = mul(r, g)
        return r

    def _digit_add(self, a: int, b: int) -> int:
        return self.from_coords([(x + y) % self.p for x, y in zip(self.coords(a), self.coords(b))])

    def _digit_neg(self, a: int) -> int:
        return self.from_coords([(-x) % self.p for x in self.coords(a)])

    # -- encoding ---------------------------------------------------------------
    def coords(self, a: int) -> list[int]:
        """Coefficient vector (length e, low-to-high) of the element ``a``."""
        out = []
        for _ in range(self.e):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def from_coords(self, coords: Iterable[int]) -> int:
        v = 0
        for i, c in enumerate(coords):
            if i >= self.e:
                if c % self.p:
                    raise DegreeMismatch("coordinate vector longer than the extension degree")
                continue
            v += (int(c) % self.p) * self.p**i
        return v

    # -- arithmetic on ints -------------------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.e == 1:
            return (a + b) % self.p
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._digit_add(a, b)

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("0 has no multiplicative inverse")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise DivisionByZero("0 has no multiplicative inverse")
            return 1 if k == 0 else 0
        return self._exp[(self._log[a] * k) % (self.q - 1)]

    @property
    def alpha(self) -> int:
        """The modulus root ``a`` (for prime fields, the element 1)."""
        return self.p if self.e > 1 else 1

    def elements(self) -> range:
        return range(self.q)

    def __call__(self, value) -> "FieldElement":
        """Wrap an int encoding or a coordinate list as a :class:`FieldElement`."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch("element belongs to another field")
            return value
        if isinstance(value, (list, tuple)):
            return FieldElement(self, self.from_coords(value))
        v = int(value)
        if self.e == 1:
            v %= self.p
        elif not 0 <= v < self.q:
            raise FieldMismatch(f"{v} is not an element encoding of GF({self.q})")
        return FieldElement(self, v)

    def element(self, value) -> "FieldElement":
        return self(value)

    # -- identity -------------------------------------------------------------------
    def _key(self):
        return (self.p, self.e, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FiniteField) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.e == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.e}, modulus={list(self.modulus)})"

    def format(self, a: int) -> str:
        """Human-readable polynomial in ``a`` (e.g. ``a^2+a``)."""
        if self.e == 1:
            return str(a)
        terms = []
        for i, c in reversed(list(enumerate(self.coords(a)))):
            if not c:
                continue
            mono = "1" if i == 0 else ("a" if i == 1 else f"a^{i}")
            if c != 1:
                mono = f"{c}" if i == 0 else f"{c}{mono}"
            terms.append(mono)
        return "+".join(terms) or "0"

    def to_json(self) -> dict:
        mod = list(self.modulus) if self.e > 1 else []
        return {"p": self.p, "e": self.e, "modulus": mod}


@lru_cache(maxsize=None)
def _cached_field(p: int, e: int, modulus: tuple | None) -> FiniteField:
    return FiniteField(p, e, modulus)


def field(p: int, e: int = 1, modulus: Sequence[int] | str | None = None) -> FiniteField:
    """Return the (memoized) field GF(p^e) presented by ``modulus``.

    ``modulus`` is a low-to-high coefficient list including the leading 1, or
    ``None``/``"default"`` for the built-in presentations of GF(4), GF(8) and
    GF(27).
    """
    key = None if modulus in (None, "default") else tuple(int(c) for c in modulus)
    if e == 1:
        key = None
    return _cached_field(p, e, key)


def field_from_json(spec: dict) -> FiniteField:
    """Build a field from ``{"p": 2, "e": 3, "modulus": [1, 1, 0, 1]}``."""
    return field(int(spec["p"]), int(spec.get("e", 1)), spec.get("modulus") or None)


@dataclass(frozen=True)
class FieldElement:
    """An element of a :class:`FiniteField`, with arithmetic operators."""

    field: FiniteField
    value: int

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, int):
            return self.field(other).value
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.div(self.value, b))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, k: int):
        return FieldElement(self.field, self.field.pow(self.value, k))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    @property
    def coords(self) -> list[int]:
        return self.field.coords(self.value)

    def __repr__(self):
        return self.field.format(self.value)


def field_arith(a: FieldElement, b: FieldElement | None, op: str) -> FieldElement:
    """Dispatch ``op`` in {add, sub, mul, div, neg, inv, pow}; ``b`` is the exponent for pow."""
    if op == "neg":
        return -a
    if op == "inv":
        return a.inverse()
    if op == "pow":
        return a ** int(b)
    if isinstance(b, FieldElement) and b.field != a.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    ops = {
        "add": lambda: a + b,
        "sub": lambda: a - b,
        "mul": lambda: a * b,
        "div": lambda: a / b,
    }
    if op not in ops:
        raise ValueError(f"unknown field operation {op!r}")
    return ops[op]()


def power_basis(ext: FiniteField) -> list[int]:
    """``[1, a, ..., a^{e-1}]`` as element ints."""
    return [ext.p**j for j in range(ext.e)]


def expand_over_base(v: Sequence[int], ext: FiniteField, basis: Sequence[int] | None = None) -> list[list[int]]:
    """Expand a vector of ``ext`` elements over an F_p-basis of ``ext``.

    Returns the n x m matrix ``M`` with ``v[i] = sum_j M[i][j] * basis[j]``.  The
    base field is the prime field of ``ext``; ``basis`` defaults to the power
    basis of the modulus root.
    """
    m = ext.e
    if basis is None:
        return [ext.coords(x) for x in v]
    if len(basis) != m:
        raise DependentBasis(f"need {m} basis elements, got {len(basis)}")
    for x in v:
        if not 0 <= x < ext.q:
            raise FieldMismatch(f"{x} is not an element of {ext}")
    # columns of B are the coordinate vectors of the basis elements
    from .linalg import solve_prime_field

    cols = [ext.coords(g) for g in basis]
    B = [[cols[j][i] for j in range(m)] for i in range(m)]
    targets = [ext.coords(x) for x in v]
    sol = solve_prime_field(B, targets, ext.p)
    if sol is None:
        raise DependentBasis("basis elements are linearly dependent over the base field")
    return sol


def recombine(M: Sequence[Sequence[int]], ext: FiniteField, basis: Sequence[int] | None = None) -> list[int]:
    """Inverse of :func:`expand_over_base`."""
    if basis is None:
        basis = power_basis(ext)
    out = []
    for row in M:
        acc = 0
        for c, g in zip(row, basis):
            acc = ext.add(acc, ext.mul(c % ext.p, g))
        out.append(acc)
    return out
