"""Exact scalar and univariate polynomial arithmetic.

Rationals are :class:`fractions.Fraction` (always in lowest terms with a
positive denominator).  Prime-field residues are :class:`PrimeFieldElem`.
:class:`Poly` is a dense, immutable polynomial whose coefficients live in
either of those fields.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

__all__ = [
    "Rat", "QQ", "RationalField", "PrimeField", "PrimeFieldElem", "Poly",
    "is_prime", "poly_gcd", "poly_xgcd", "is_squarefree", "sturm_sequence",
    "sign_variations", "count_real_roots",
]

Rat = Fraction

PRIME_CAP = 2 ** 31


def is_prime(p: int) -> bool:
    """Deterministic trial division; only defined for ``p < 2**31``."""
    if p >= PRIME_CAP:
        raise ValueError(f"primality check capped at 2^31, got {p}")
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    for d in range(3, isqrt(p) + 1, 2):
        if p % d == 0:
            return False
    return True


class RationalField:
    """The field of rational numbers, as a coefficient domain."""

    zero = Fraction(0)
    one = Fraction(1)
    characteristic = 0

    def __call__(self, value) -> Fraction:
        if isinstance(value, PrimeFieldElem):
            raise TypeError("cannot coerce a prime-field element to a rational")
        return Fraction(value)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class PrimeField:
    """The prime field F_p."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.zero = PrimeFieldElem(0, p)
        self.one = PrimeFieldElem(1, p)

    def __call__(self, value) -> PrimeFieldElem:
        if isinstance(value, PrimeFieldElem):
            if value.p != self.p:
                raise ValueError(f"element of F_{value.p} used in F_{self.p}")
            return value
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator {value.denominator} vanishes mod {self.p}")
            return PrimeFieldElem(value.numerator * pow(value.denominator, -1, self.p), self.p)
        return PrimeFieldElem(int(value), self.p)

    def elements(self):
        return [PrimeFieldElem(i, self.p) for i in range(self.p)]

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


class PrimeFieldElem:
    """Residue class modulo a prime ``p``; immutable."""

    __slots__ = ("residue", "p")

    def __init__(self, residue: int, p: int):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "residue", residue % p)

    def __setattr__(self, name, value):
        raise AttributeError("PrimeFieldElem is immutable")

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElem):
            if other.p != self.p:
                raise ValueError(f"mixing F_{self.p} and F_{other.p}")
            return other.residue
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElem(self.residue + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElem(self.residue - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElem(o - self.residue, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElem(self.residue * o, self.p)

    __rmul__ = __mul__

    def inverse(self) -> PrimeFieldElem:
        if self.residue == 0:
            raise ZeroDivisionError(f"inverse of 0 in F_{self.p}")
        return PrimeFieldElem(pow(self.residue, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * PrimeFieldElem(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElem(o, self.p) * self.inverse()

    def __neg__(self):
        return PrimeFieldElem(-self.residue, self.p)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** -k
        return PrimeFieldElem(pow(self.residue, k, self.p), self.p)

    def __bool__(self):
        return self.residue != 0

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElem):
            return self.p == other.p and self.residue == other.residue
        if isinstance(other, int):
            return (self.residue - other) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.residue, self.p))

    def __int__(self):
        return self.residue

    def __repr__(self):
        return f"PrimeFieldElem({self.residue}, {self.p})"

    def __str__(self):
        return str(self.residue)


def _domain_of(values, default=QQ):
    for v in values:
        if isinstance(v, PrimeFieldElem):
            return PrimeField(v.p)
    return default


class Poly:
    """Dense univariate polynomial, coefficients lowest degree first.

    The zero polynomial has an empty coefficient tuple, so
    ``deg(0) == -1``.

    >>> Poly([-1, 0, 1]) == Poly([-1, 1]) * Poly([1, 1])
    True
    """

    __slots__ = ("coeffs", "domain")

    def __init__(self, coeffs=(), domain=None):
        coeffs = list(coeffs)
        if domain is None:
            domain = _domain_of(coeffs)
        cs = [domain(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "domain", domain)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def x(cls, domain=QQ) -> Poly:
        return cls([0, 1], domain)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.domain.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def _lift(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.domain != self.domain:
                raise ValueError(f"polynomials over {self.domain} and {other.domain}")
            return other
        return Poly([other], self.domain)

    def __add__(self, other):
        other = self._lift(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out, self.domain)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.domain)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        if not self.coeffs or not other.coeffs:
            return Poly((), self.domain)
        out = [self.domain.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out, self.domain)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = Poly([1], self.domain)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, other) -> tuple[Poly, Poly]:
        """Return ``(q, r)`` with ``self == q*other + r`` and ``deg r < deg other``."""
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dg = other.degree
        inv_lc = self.domain.one / other.lc
        quot = [self.domain.zero] * max(len(rem) - dg, 0)
        for k in range(len(rem) - 1 - dg, -1, -1):
            c = rem[k + dg] * inv_lc
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - c * b
        return Poly(quot, self.domain), Poly(rem[:dg], self.domain)

    def __divmod__(self, other):
        return self.divmod(other)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        inv = self.domain.one / self.lc
        return Poly([c * inv for c in self.coeffs], self.domain)

    def derivative(self) -> Poly:
        return Poly([c * i for i, c in enumerate(self.coeffs)][1:], self.domain)

    def __call__(self, x):
        """Horner evaluation; ``x`` may be anything closed under + and *."""
        acc = self.domain.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def content_free(self) -> Poly:
        """Scale a rational polynomial to a primitive integer polynomial (positive lc)."""
        if self.domain != QQ or self.is_zero():
            return self
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // _gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = _gcd(g, v)
        if ints[-1] < 0:
            g = -g
        return Poly([Fraction(v, g) for v in ints], QQ)

    def integer_coeffs(self) -> list[int]:
        return [int(c) for c in self.content_free().coeffs]

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs and (
                self.domain == other.domain or not self.coeffs)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]}, {self.domain!r})"

    def to_str(self, var: str = "x") -> str:
        return format_poly(self.coeffs, var)

    __str__ = to_str


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def format_poly(coeffs, var: str = "x") -> str:
    """Render coefficients (lowest degree first) like ``1/2+3a-a^2``."""
    parts = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        if isinstance(c, PrimeFieldElem):
            neg, mag = False, str(c.residue)
        else:
            c = Fraction(c)
            neg, mag = c < 0, str(abs(c))
        if i == 0:
            body = mag
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == "1" else f"{mag}{mono}"
        if neg:
            parts.append("-" + body)
        else:
            parts.append(("+" if parts else "") + body)
    return "".join(parts) if parts else "0"


def poly_xgcd(f: Poly, g: Poly) -> tuple[Poly, Poly, Poly]:
    """Extended Euclid: return monic ``h`` and ``s, t`` with ``s*f + t*g == h``."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    dom = f.domain if not f.is_zero() else g.domain
    r0, r1 = f, g
    s0, s1 = Poly([1], dom), Poly((), dom)
    t0, t1 = Poly((), dom), Poly([1], dom)
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inv = dom.one / r0.lc
    return r0 * Poly([inv], dom), s0 * Poly([inv], dom), t0 * Poly([inv], dom)


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor."""
    return poly_xgcd(f, g)[0]


def is_squarefree(m: Poly) -> bool:
    if m.degree < 1:
        raise ValueError("squarefree check needs a nonconstant polynomial")
    dm = m.derivative()
    if dm.is_zero():
        # only possible in characteristic p: m is a p-th power
        return False
    return poly_gcd(m, dm).degree == 0


def sturm_sequence(f: Poly) -> list[Poly]:
    seq = [f, f.derivative()]
    while not seq[-1].is_zero():
        seq.append(-(seq[-2] % seq[-1]))
    seq.pop()
    return seq


def sign_variations(seq, x) -> int:
    signs = []
    for p in seq:
        v = p(x)
        if v:
            signs.append(v > 0)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(f: Poly, lo, hi) -> int:
    """Number of distinct real roots of ``f`` in ``(lo, hi]``."""
    seq = sturm_sequence(f)
    return sign_variations(seq, Fraction(lo)) - sign_variations(seq, Fraction(hi))
