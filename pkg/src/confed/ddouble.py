"""Double-double (compensated) arithmetic: the extended-precision scalar.

A value is an unevaluated pair ``(hi, lo)`` of doubles with
``|lo| <= 0.5 ulp(hi)``, giving ~31 significant decimal digits.  The
primitive error-free transformations below are branch-free and avoid FMA so
that the numba and NumPy backends produce bit-identical results.  The
module-level functions operate on plain floats (or elementwise on arrays in
the NumPy backend); the :class:`DD` wrapper provides an operator interface
for scalar work and tests.
"""

from dataclasses import dataclass

from ._backend import jit

_SPLITTER = 134217729.0  # 2**27 + 1, exact in double


def two_sum(a, b):
    """Knuth two-sum: (s, err) with s + err == a + b exactly."""
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


def quick_two_sum(a, b):
    """Fast two-sum, valid when |a| >= |b|."""
    s = a + b
    return s, b - (s - a)


def two_prod(a, b):
    """Dekker product: (p, err) with p + err == a * b exactly."""
    p = a * b
    ta = _SPLITTER * a
    ahi = ta - (ta - a)
    alo = a - ahi
    tb = _SPLITTER * b
    bhi = tb - (tb - b)
    blo = b - bhi
    err = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo
    return p, err


def dd_add(ah, al, bh, bl):
    s1, s2 = two_sum(ah, bh)
    t1, t2 = two_sum(al, bl)
    s2 = s2 + t1
    s1, s2 = quick_two_sum(s1, s2)
    s2 = s2 + t2
    return quick_two_sum(s1, s2)


def dd_sub(ah, al, bh, bl):
    return dd_add(ah, al, -bh, -bl)


def dd_mul(ah, al, bh, bl):
    p1, p2 = two_prod(ah, bh)
    p2 = p2 + (ah * bl + al * bh)
    return quick_two_sum(p1, p2)


def dd_mul_d(ah, al, b):
    p1, p2 = two_prod(ah, b)
    p2 = p2 + al * b
    return quick_two_sum(p1, p2)


def dd_div(ah, al, bh, bl):
    # long division with two correction steps (~2 ulp)
    q1 = ah / bh
    th, tl = dd_mul_d(bh, bl, q1)
    rh, rl = dd_add(ah, al, -th, -tl)
    q2 = rh / bh
    th, tl = dd_mul_d(bh, bl, q2)
    rh, rl = dd_add(rh, rl, -th, -tl)
    q3 = rh / bh
    q1, q2 = quick_two_sum(q1, q2)
    return dd_add(q1, q2, q3, 0.0)


# rebind through the backend so composed kernels inline the jitted primitives
two_sum = jit(two_sum)
quick_two_sum = jit(quick_two_sum)
two_prod = jit(two_prod)
dd_add = jit(dd_add)
dd_sub = jit(dd_sub)
dd_mul = jit(dd_mul)
dd_mul_d = jit(dd_mul_d)
dd_div = jit(dd_div)


@dataclass(frozen=True)
class DD:
    """Extended-precision scalar (high/low pair), ~31 significant digits.

    Supports +, -, *, /, negation, abs(), comparisons and conversion to and
    from working precision via ``DD.from_float`` / ``float(x)``.
    """

    hi: float
    lo: float = 0.0

    @staticmethod
    def from_float(a: float) -> "DD":
        return DD(float(a), 0.0)

    def __float__(self) -> float:
        return float(self.hi + self.lo)

    def _coerce(self, other):
        if isinstance(other, DD):
            return other
        return DD(float(other), 0.0)

    def __add__(self, other):
        o = self._coerce(other)
        return DD(*dd_add(self.hi, self.lo, o.hi, o.lo))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return DD(*dd_add(self.hi, self.lo, -o.hi, -o.lo))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return DD(*dd_mul(self.hi, self.lo, o.hi, o.lo))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        return DD(*dd_div(self.hi, self.lo, o.hi, o.lo))

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __neg__(self):
        return DD(-self.hi, -self.lo)

    def __abs__(self):
        return -self if self.hi < 0.0 or (self.hi == 0.0 and self.lo < 0.0) else self

    def _cmp(self, other):
        o = self._coerce(other)
        dh, dl = dd_add(self.hi, self.lo, -o.hi, -o.lo)
        if dh != 0.0:
            return -1.0 if dh < 0.0 else 1.0
        if dl != 0.0:
            return -1.0 if dl < 0.0 else 1.0
        return 0.0

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __eq__(self, other):
        if not isinstance(other, (DD, int, float)):
            return NotImplemented
        return self._cmp(other) == 0

    def __repr__(self):
        return f"DD({self.hi!r}, {self.lo!r})"


@dataclass(frozen=True)
class ComplexDD:
    """Complex value with double-double real and imaginary parts."""

    real: DD
    imag: DD

    def __sub__(self, other: "ComplexDD") -> "ComplexDD":
        return ComplexDD(self.real - other.real, self.imag - other.imag)

    def __add__(self, other: "ComplexDD") -> "ComplexDD":
        return ComplexDD(self.real + other.real, self.imag + other.imag)

    def __complex__(self) -> complex:
        return complex(float(self.real), float(self.imag))
