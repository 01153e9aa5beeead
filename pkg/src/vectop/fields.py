"""Computable models of a valued field K and a simple extension D = K(a) of
its completion.

Three families are provided:

* :class:`ArchimedeanModel` -- K = Q with the ordinary absolute value, D a
  real number field Q(a) with ``a`` pinned down by an isolating interval.
* :class:`PadicModel` -- K = Q with the p-adic absolute value, D = Q(a) with
  ``a`` a simple root in Z_p pinned down by a residue and Hensel lifting.
* :class:`PrimeFieldModel` -- K = D = F_p with the trivial (discrete) absolute
  value.

Laurent-series fields are not modelled; a new family only has to provide
``valuation`` and ``is_root`` on top of :class:`FieldModel`.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from .arith import (
    QQ, PrimeField, PrimeFieldElem, Poly, count_real_roots, format_poly,
    is_prime, is_squarefree, poly_gcd, poly_xgcd,
)
from .errors import ModelError, ModelMismatchError, ZeroDivisorError

__all__ = [
    "FieldModel", "ArchimedeanModel", "PadicModel", "PrimeFieldModel",
    "FieldElement", "ValEnclosure", "model_create", "decompose",
    "valuation", "hensel_lift", "refine_interval",
]


@dataclass(frozen=True)
class ValEnclosure:
    """Closed interval ``[lower, upper]`` known to contain an absolute value."""

    lower: Fraction
    upper: Fraction

    def __post_init__(self):
        if not 0 <= self.lower <= self.upper:
            raise ValueError(f"bad enclosure [{self.lower}, {self.upper}]")

    @classmethod
    def point(cls, value) -> ValEnclosure:
        v = Fraction(value)
        return cls(v, v)

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    @property
    def is_exact(self) -> bool:
        return self.lower == self.upper

    def __add__(self, other: ValEnclosure) -> ValEnclosure:
        return ValEnclosure(self.lower + other.lower, self.upper + other.upper)

    def __mul__(self, other: ValEnclosure) -> ValEnclosure:
        return ValEnclosure(self.lower * other.lower, self.upper * other.upper)

    def __contains__(self, value) -> bool:
        return self.lower <= value <= self.upper

    def intersects(self, other: ValEnclosure) -> bool:
        return self.lower <= other.upper and other.lower <= self.upper


class FieldModel:
    """Base class: exact arithmetic in D = K[x]/(m) with a designated root.

    Subclasses set ``kind``, ``base`` (the coefficient field K) and
    ``minpoly``, and implement :meth:`valuation` and :meth:`is_root`.
    """

    kind: str
    base = QQ

    def __init__(self, minpoly: Poly):
        if minpoly.degree < 1:
            raise ModelError("minimal polynomial must have degree >= 1")
        if not is_squarefree(minpoly):
            raise ModelError(f"minimal polynomial {minpoly} is not squarefree")
        self.minpoly = minpoly.monic()
        self.degree = minpoly.degree
        d = self.degree
        # powers a^k for k < 2d-1, reduced mod m, as coordinate tuples
        x = Poly.x(self.base)
        self._powers = []
        for k in range(max(2 * d - 1, 1)):
            r = (x ** k) % self.minpoly
            cs = list(r.coeffs) + [self.base.zero] * (d - len(r.coeffs))
            self._powers.append(tuple(cs))
        self.zero = FieldElement(self, (self.base.zero,) * d)
        self.one = self(1)

    # element construction -------------------------------------------------

    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.model is not self:
                raise ModelMismatchError("element belongs to a different field model")
            return value
        if isinstance(value, Poly):
            return self.from_poly(value)
        c = self.base(value)
        return FieldElement(self, (c,) + (self.base.zero,) * (self.degree - 1))

    def from_coords(self, coords) -> FieldElement:
        coords = tuple(self.base(c) for c in coords)
        if len(coords) != self.degree:
            raise ValueError(f"expected {self.degree} coordinates, got {len(coords)}")
        return FieldElement(self, coords)

    def from_poly(self, f: Poly) -> FieldElement:
        f = Poly(f.coeffs, self.base) % self.minpoly
        cs = list(f.coeffs) + [self.base.zero] * (self.degree - len(f.coeffs))
        return FieldElement(self, tuple(cs))

    @property
    def gen(self) -> FieldElement:
        """The generator a (equal to the constant root when d == 1)."""
        return self.from_poly(Poly.x(self.base))

    def in_base(self, x: FieldElement) -> bool:
        return not any(x.coords[1:])

    # hooks ---------------------------------------------------------------

    def valuation(self, x: FieldElement, precision: int = 32) -> ValEnclosure:
        raise NotImplementedError

    def is_root(self, h: Poly) -> bool:
        """Whether the designated root is a root of ``h`` (a divisor of m)."""
        raise NotImplementedError

    def is_zero(self, x: FieldElement) -> bool:
        """Exact test of x(a) == 0, via membership of a in the roots of gcd(x, m)."""
        if not any(x.coords):
            return True
        if self.in_base(x):
            return False
        h = poly_gcd(x.poly(), self.minpoly)
        return h.degree >= 1 and self.is_root(h)

    def describe(self) -> str:
        raise NotImplementedError

    def __repr__(self):
        return f"<{type(self).__name__} {self.describe()}>"


class ArchimedeanModel(FieldModel):
    """Q(a) inside R, ``a`` being the unique root of m in an isolating interval."""

    kind = "arch"

    def __init__(self, minpoly: Poly, interval):
        if minpoly.domain != QQ:
            raise ModelError("archimedean models need a rational minimal polynomial")
        super().__init__(minpoly)
        lo, hi = (Fraction(v) for v in interval)
        if not lo < hi:
            raise ModelError(f"interval [{lo}, {hi}] is empty")
        m = self.minpoly
        if not m(lo) * m(hi) < 0:
            raise ModelError(f"no sign change of {m} on [{lo}, {hi}]")
        roots = count_real_roots(m, lo, hi)
        if roots != 1:
            raise ModelError(f"[{lo}, {hi}] contains {roots} roots of {m}, need exactly 1")
        self._lo, self._hi = lo, hi
        self._lock = threading.Lock()

    @property
    def interval(self) -> tuple[Fraction, Fraction]:
        with self._lock:
            return self._lo, self._hi

    def describe(self) -> str:
        lo, hi = self.interval
        return f"arch minpoly={self.minpoly.to_str('x')} interval={lo},{hi}"

    def refine_interval(self, target_width) -> tuple[Fraction, Fraction]:
        """Bisect the stored isolating interval until its width is at most ``target_width``."""
        target = Fraction(target_width)
        if target <= 0:
            raise ValueError("target width must be positive")
        m = self.minpoly
        with self._lock:
            lo, hi = self._lo, self._hi
            s_lo = m(lo) > 0
            while hi - lo > target:
                mid = (lo + hi) / 2
                v = m(mid)
                if not v:
                    # mid is the root; step off it symmetrically so endpoints stay non-roots
                    quarter = (hi - lo) / 4
                    lo, hi = mid - quarter, mid + quarter
                    s_lo = m(lo) > 0
                elif (v > 0) == s_lo:
                    lo = mid
                else:
                    hi = mid
            self._lo, self._hi = lo, hi
            return lo, hi

    def enclose(self, f: Poly) -> tuple[Fraction, Fraction]:
        """Interval-Horner enclosure of f(a) over the current interval."""
        lo, hi = self.interval
        acc_lo = acc_hi = Fraction(0)
        for c in reversed(f.coeffs):
            prods = (acc_lo * lo, acc_lo * hi, acc_hi * lo, acc_hi * hi)
            acc_lo, acc_hi = min(prods) + c, max(prods) + c
        return acc_lo, acc_hi

    def is_root(self, h: Poly) -> bool:
        if h.degree < 1:
            return False
        lo, hi = self.interval
        # endpoints are never roots of m, hence never roots of h
        return h(lo) * h(hi) < 0

    def sign(self, x: FieldElement) -> int:
        """Exact sign of x(a)."""
        if self.is_zero(x):
            return 0
        f = x.poly()
        while True:
            lo, hi = self.enclose(f)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            a, b = self.interval
            self.refine_interval((b - a) / 2)

    def valuation(self, x: FieldElement, precision: int = 32) -> ValEnclosure:
        if self.in_base(x):
            return ValEnclosure.point(abs(x.coords[0]))
        if self.is_zero(x):
            return ValEnclosure.point(0)
        f = x.poly()
        tol = Fraction(1, 2 ** precision)
        while True:
            lo, hi = self.enclose(f)
            if lo > 0 or hi < 0:
                lo, hi = (lo, hi) if lo > 0 else (-hi, -lo)
                if hi - lo <= tol:
                    return ValEnclosure(lo, hi)
            a, b = self.interval
            self.refine_interval((b - a) / 2)

    def approx(self, x: FieldElement) -> float:
        lo, hi = self.enclose(x.poly())
        return float((lo + hi) / 2)


class PadicModel(FieldModel):
    """Q(a) inside Q_p, ``a`` the Hensel lift of a simple root ``residue`` of m mod p."""

    kind = "padic"

    def __init__(self, p: int, minpoly: Poly, residue: int):
        if not is_prime(p):
            raise ModelError(f"{p} is not prime")
        if minpoly.domain != QQ:
            raise ModelError("p-adic models need a rational minimal polynomial")
        super().__init__(minpoly)
        self.p = p
        self._int_minpoly = minpoly.integer_coeffs()
        m_int = self._int_minpoly
        dm_int = [i * c for i, c in enumerate(m_int)][1:]
        a = residue % p
        if _eval_int(m_int, a) % p:
            raise ModelError(f"{residue} is not a root of {minpoly} mod {p}")
        if _eval_int(dm_int, a) % p == 0:
            raise ModelError(f"{residue} is a multiple root of {minpoly} mod {p}; Hensel condition fails")
        self.residue = a
        self._dm_inv = pow(_eval_int(dm_int, a), -1, p)
        self._lifts = [None, a]
        self._lock = threading.Lock()

    def describe(self) -> str:
        return f"padic p={self.p} minpoly={self.minpoly.to_str('x')} residue={self.residue}"

    def hensel_lift(self, k: int) -> int:
        """The root modulo p^k, as an integer in [0, p^k)."""
        if k < 1:
            raise ValueError("k must be positive")
        with self._lock:
            lifts = self._lifts
            while len(lifts) <= k:
                j = len(lifts) - 1
                a = lifts[j]
                mod = self.p ** (j + 1)
                lifts.append((a - _eval_int(self._int_minpoly, a) * self._dm_inv) % mod)
            return lifts[k]

    def _residue_at(self, coeffs: list[int], k: int) -> int:
        mod = self.p ** k
        return _eval_int(coeffs, self.hensel_lift(k), mod)

    def is_root(self, h: Poly) -> bool:
        if h.degree < 1:
            return False
        g = self.minpoly // h
        if g.degree < 1:
            return True
        hi, gi = h.integer_coeffs(), g.integer_coeffs()
        k = 1
        # a is a root of exactly one of h, g; the other has a fixed finite valuation at a
        while True:
            if self._residue_at(hi, k):
                return False
            if self._residue_at(gi, k):
                return True
            k *= 2

    def padic_order(self, x: FieldElement) -> int:
        """v_p(x(a)) for nonzero x."""
        f = x.poly()
        den = 1
        for c in f.coeffs:
            den = den * c.denominator // _igcd(den, c.denominator)
        ints = [int(c * den) for c in f.coeffs]
        k = 1
        while True:
            r = self._residue_at(ints, k)
            if r:
                return _vp(r, self.p) - _vp(den, self.p)
            k *= 2

    def valuation(self, x: FieldElement, precision: int = 32) -> ValEnclosure:
        if self.is_zero(x):
            return ValEnclosure.point(0)
        v = self.padic_order(x)
        return ValEnclosure.point(Fraction(self.p) ** (-v))


class PrimeFieldModel(FieldModel):
    """F_p with the trivial absolute value (discrete topology); D = K."""

    kind = "prime"

    def __init__(self, p: int):
        if not is_prime(p):
            raise ModelError(f"{p} is not prime")
        self.p = p
        self.base = PrimeField(p)
        super().__init__(Poly([0, 1], self.base))

    def describe(self) -> str:
        return f"prime p={self.p}"

    def is_root(self, h: Poly) -> bool:
        return h.degree >= 1 and not h(self.base.zero)

    def valuation(self, x: FieldElement, precision: int = 32) -> ValEnclosure:
        return ValEnclosure.point(1 if x.coords[0] else 0)


def _igcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def _vp(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _eval_int(coeffs, x, mod=None):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
        if mod is not None:
            acc %= mod
    return acc


class FieldElement:
    """Immutable element c_0 + c_1 a + ... + c_{d-1} a^{d-1} of a model field."""

    __slots__ = ("model", "coords")

    def __init__(self, model: FieldModel, coords: tuple):
        object.__setattr__(self, "model", model)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def poly(self) -> Poly:
        return Poly(self.coords, self.model.base)

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.model is not self.model:
                raise ModelMismatchError("elements of different field models")
            return other
        if isinstance(other, (int, Fraction, PrimeFieldElem)):
            return self.model(other)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.model, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.model, tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return FieldElement(self.model, tuple(-a for a in self.coords))

    def __pos__(self):
        return self

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        model = self.model
        d = model.degree
        zero = model.base.zero
        if d == 1:
            return FieldElement(model, (self.coords[0] * o.coords[0],))
        if not any(o.coords[1:]):
            c = o.coords[0]
            return FieldElement(model, tuple(a * c for a in self.coords))
        conv = [zero] * (2 * d - 1)
        for i, a in enumerate(self.coords):
            if not a:
                continue
            for j, b in enumerate(o.coords):
                if b:
                    conv[i + j] = conv[i + j] + a * b
        out = list(conv[:d])
        for k in range(d, 2 * d - 1):
            c = conv[k]
            if c:
                for i, pw in enumerate(model._powers[k]):
                    out[i] = out[i] + c * pw
        return FieldElement(model, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        if not any(self.coords):
            raise ZeroDivisionError("inverse of zero")
        model = self.model
        if not any(self.coords[1:]):
            return model(model.base.one / self.coords[0])
        h, s, _ = poly_xgcd(self.poly(), model.minpoly)
        if h.degree > 0:
            raise ZeroDivisorError(
                f"{self} is a zero divisor modulo {model.minpoly}; gcd {h}", witness=h)
        return model.from_poly(s)

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** -k
        result, base = self.model.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.model is other.model and self.coords == other.coords
        if isinstance(other, (int, Fraction)):
            return not any(self.coords[1:]) and self.coords[0] == other
        return NotImplemented

    def __hash__(self):
        if not any(self.coords[1:]):
            return hash(self.coords[0])
        return hash(self.coords)

    def __repr__(self):
        return f"FieldElement({self})"

    def __str__(self):
        return format_poly(self.coords, "a")


# functional surface ----------------------------------------------------------

def model_create(kind: str, *, minpoly=None, interval=None, p=None, residue=None) -> FieldModel:
    """Build and validate a field model.

    ``kind`` is ``"arch"``, ``"padic"`` or ``"prime"``.  ``minpoly`` may be a
    :class:`Poly` or a coefficient list (lowest degree first).
    """
    if minpoly is not None and not isinstance(minpoly, Poly):
        minpoly = Poly(minpoly, QQ)
    if kind in ("arch", "rational-archimedean"):
        if minpoly is None:
            minpoly, interval = Poly([0, 1], QQ), interval or (-1, 1)
        if interval is None:
            raise ModelError("archimedean model needs an isolating interval")
        return ArchimedeanModel(minpoly, interval)
    if kind in ("padic", "rational-padic"):
        if p is None or residue is None:
            raise ModelError("p-adic model needs p and a residue root")
        if minpoly is None:
            minpoly = Poly([0, 1], QQ)
        return PadicModel(p, minpoly, residue)
    if kind in ("prime", "prime-field"):
        if p is None:
            raise ModelError("prime-field model needs p")
        if minpoly is not None and minpoly.degree != 1:
            raise ModelError("prime-field models have degree 1")
        return PrimeFieldModel(p)
    raise ModelError(f"unknown field kind {kind!r}")


def decompose(x: FieldElement) -> list:
    """Coordinates of x over the power basis 1, a, ..., a^(d-1)."""
    return list(x.coords)


def valuation(x: FieldElement, precision: int = 32) -> ValEnclosure:
    return x.model.valuation(x, precision)


def hensel_lift(model: PadicModel, k: int) -> int:
    if not isinstance(model, PadicModel):
        raise ModelError("hensel_lift needs a p-adic model")
    return model.hensel_lift(k)


def refine_interval(model: ArchimedeanModel, target_width) -> tuple[Fraction, Fraction]:
    if not isinstance(model, ArchimedeanModel):
        raise ModelError("refine_interval needs an archimedean model")
    return model.refine_interval(target_width)
