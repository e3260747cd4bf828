"""Dense univariate polynomials over a field from :mod:`cyclotome.gf`."""
from __future__ import annotations

import re
from itertools import zip_longest

from .gf import PrimeField

NEG_INF = float("-inf")


class Polynomial:
    """Immutable polynomial with ascending coefficients and no trailing zeros.

    The zero polynomial has ``coeffs == ()`` and degree ``-inf``.
    """

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field, coeffs=()):
        zero = field.zero
        cs = [field(c) for c in coeffs]
        while cs and cs[-1] == zero:
            cs.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    def __reduce__(self):
        return (Polynomial, (self.field, self.coeffs))

    # --- constructors ----------------------------------------------------
    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def one(cls, field):
        return cls(field, (field.one,))

    @classmethod
    def x(cls, field):
        return cls(field, (field.zero, field.one))

    @classmethod
    def monomial(cls, field, degree: int, coeff=None):
        c = field.one if coeff is None else field(coeff)
        return cls(field, (field.zero,) * degree + (c,))

    @classmethod
    def x_n_minus_1(cls, field, n: int):
        return cls(field, (field.neg(field.one),) + (field.zero,) * (n - 1) + (field.one,))

    @classmethod
    def from_roots(cls, field, roots):
        """``prod(x - r)`` over ``roots``."""
        out = [field.one]
        for r in roots:
            nr = field.neg(r)
            nxt = [field.zero] * (len(out) + 1)
            for i, c in enumerate(out):
                nxt[i + 1] = field.add(nxt[i + 1], c)
                nxt[i] = field.add(nxt[i], field.mul(c, nr))
            out = nxt
        return cls(field, out)

    # --- basic properties --------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.field, self.coeffs))
            object.__setattr__(self, "_hash", h)
        return h

    def sort_key(self):
        """Order by degree, then by coefficients from the leading term down."""
        return (len(self.coeffs), tuple(reversed(self.coeffs)))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    # --- arithmetic --------------------------------------------------------
    def _check(self, other):
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(other).__name__}")
        if other.field != self.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")

    def __add__(self, other):
        self._check(other)
        F = self.field
        return Polynomial(F, [F.add(a, b) for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=F.zero)])

    def __sub__(self, other):
        self._check(other)
        F = self.field
        return Polynomial(F, [F.sub(a, b) for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=F.zero)])

    def __neg__(self):
        return Polynomial(self.field, [self.field.neg(c) for c in self.coeffs])

    def __mul__(self, other):
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial(F, ())
        if isinstance(F, PrimeField):
            p = F.p
            out = [0] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        out[i + j] += x * y
            return Polynomial(F, [c % p for c in out])
        out = [F.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if F.is_zero(x):
                continue
            for j, y in enumerate(b):
                out[i + j] = F.add(out[i + j], F.mul(x, y))
        return Polynomial(F, out)

    def scale(self, c):
        F = self.field
        c = F(c) if isinstance(c, int) else c
        return Polynomial(F, [F.mul(c, a) for a in self.coeffs])

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result = Polynomial.one(self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divrem(self, divisor):
        """Return ``(quotient, remainder)`` with ``deg r < deg divisor``."""
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        F = self.field
        rem = list(self.coeffs)
        dd = len(divisor.coeffs) - 1
        if len(rem) - 1 < dd:
            return Polynomial(F, ()), self
        inv_lead = F.inv(divisor.coeffs[-1])
        dv = divisor.coeffs
        quot = [F.zero] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = F.mul(rem[k], inv_lead)
            if F.is_zero(c):
                continue
            quot[k - dd] = c
            base = k - dd
            for i in range(dd + 1):
                rem[base + i] = F.sub(rem[base + i], F.mul(c, dv[i]))
        return Polynomial(F, quot), Polynomial(F, rem[:dd])

    def __divmod__(self, other):
        return self.divrem(other)

    def __floordiv__(self, other):
        return self.divrem(other)[0]

    def __mod__(self, other):
        return self.divrem(other)[1]

    def divides(self, other) -> bool:
        return (other % self).is_zero()

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.coeffs[-1]))

    def gcd(self, other):
        """Monic gcd; ``gcd(0, 0) == 0``."""
        self._check(other)
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def __call__(self, point):
        """Evaluate by Horner's rule."""
        F = self.field
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, point), c)
        return acc

    def eval_in(self, ext, point):
        """Evaluate a base-field polynomial at a point of extension field ``ext``."""
        acc = ext.zero
        for c in reversed(self.coeffs):
            acc = ext.add(ext.mul(acc, point), ext(c))
        return acc

    def reciprocal(self):
        """Monic normalisation of ``x^deg(f) * f(1/x)``."""
        if self.is_zero() or self.field.is_zero(self.coeffs[0]):
            raise ValueError("reciprocal undefined: f(0) == 0")
        return Polynomial(self.field, reversed(self.coeffs)).monic()

    def weight(self) -> int:
        zero = self.field.zero
        return sum(1 for c in self.coeffs if c != zero)

    # --- text and JSON forms ----------------------------------------------
    def __str__(self):
        F = self.field
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == F.zero:
                continue
            cs = F.format(c)
            if isinstance(F, PrimeField):
                coef = "" if (c == 1 and i > 0) else cs
            else:
                coef = "" if (c == F.one and i > 0) else (f"({cs})" if i > 0 and " " in cs else cs)
            if i == 0:
                terms.append(coef)
            elif i == 1:
                terms.append(f"{coef}x")
            else:
                terms.append(f"{coef}x^{i}")
        return " + ".join(terms)

    def __repr__(self):
        return f"Polynomial({self.field!r}, {list(self.coeffs)!r})"

    def to_json(self) -> list:
        return list(self.coeffs)

    @classmethod
    def from_json(cls, field, data):
        return cls(field, data)

    _TERM = re.compile(r"^(\d*)\*?(x(?:\^(\d+))?)?$")

    @classmethod
    def parse(cls, field: PrimeField, text: str):
        """Parse the display format, e.g. ``"x^4 + 3x^2 + 10"`` or ``"3*x^2 - 1"``."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial text")
        s = s.replace("-", "+-")
        coeffs: dict[int, int] = {}
        for raw in s.split("+"):
            if raw == "":
                continue
            sign = 1
            if raw.startswith("-"):
                sign, raw = -1, raw[1:]
            m = cls._TERM.match(raw)
            if not m or (not m.group(1) and not m.group(2)):
                raise ValueError(f"cannot parse term {raw!r} in {text!r}")
            coef = int(m.group(1)) if m.group(1) else 1
            if m.group(2) is None:
                deg = 0
            else:
                deg = int(m.group(3)) if m.group(3) else 1
            coeffs[deg] = coeffs.get(deg, 0) + sign * coef
        top = max(coeffs) if coeffs else 0
        return cls(field, [coeffs.get(i, 0) for i in range(top + 1)])
