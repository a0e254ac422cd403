"""Exact arithmetic in Z[q, q^-1].

A Laurent polynomial is stored as a dict {exponent: coefficient} with no
zero coefficients (canonical form), so equality is structural.  Coefficients
are Python ints, hence arbitrary precision.  Values are immutable: every
operation returns a fresh object.
"""

from __future__ import annotations

from .errors import NotDivisible


class LaurentInt:
    """An element of Z[q, q^-1]."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        self.coeffs = {e: c for e, c in coeffs.items() if c != 0}

    @classmethod
    def const(cls, n: int) -> "LaurentInt":
        return cls({0: n})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentInt":
        return cls({exp: coeff})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentInt.const(other)
        if not isinstance(other, LaurentInt):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentInt.const(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            n = out.get(e, 0) + c
            if n:
                out[e] = n
            else:
                out.pop(e, None)
        res = LaurentInt.__new__(LaurentInt)
        res.coeffs = out
        return res

    __radd__ = __add__

    def __neg__(self):
        res = LaurentInt.__new__(LaurentInt)
        res.coeffs = {e: -c for e, c in self.coeffs.items()}
        return res

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentInt.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentInt()
            res = LaurentInt.__new__(LaurentInt)
            res.coeffs = {e: c * other for e, c in self.coeffs.items()}
            return res
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                n = out.get(e, 0) + c1 * c2
                if n:
                    out[e] = n
                else:
                    del out[e]
        res = LaurentInt.__new__(LaurentInt)
        res.coeffs = out
        return res

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers of a general element not supported")
        result = one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentInt":
        """Multiply by q^k."""
        res = LaurentInt.__new__(LaurentInt)
        res.coeffs = {e + k: c for e, c in self.coeffs.items()}
        return res

    def bar(self) -> "LaurentInt":
        """The bar involution q -> q^-1."""
        res = LaurentInt.__new__(LaurentInt)
        res.coeffs = {-e: c for e, c in self.coeffs.items()}
        return res

    def subs_neg_q(self) -> "LaurentInt":
        """Substitute q -> -q."""
        res = LaurentInt.__new__(LaurentInt)
        res.coeffs = {e: (c if e % 2 == 0 else -c) for e, c in self.coeffs.items()}
        return res

    def is_bar_symmetric(self) -> bool:
        return all(self.coeffs.get(-e, 0) == c for e, c in self.coeffs.items())

    def coefficients_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs.values())

    def in_qZq(self) -> bool:
        """True if the element lies in qZ[q] (all exponents >= 1)."""
        return all(e >= 1 for e in self.coeffs)

    def in_Nq(self) -> bool:
        """True if the element lies in N[q]."""
        return all(e >= 0 and c >= 0 for e, c in self.coeffs.items())

    def min_exp(self) -> int:
        return min(self.coeffs)

    def max_exp(self) -> int:
        return max(self.coeffs)

    def __getitem__(self, exp: int) -> int:
        return self.coeffs.get(exp, 0)

    def eval_at_one(self) -> int:
        return sum(self.coeffs.values())

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"LaurentInt({render(self)!r})"


zero = LaurentInt()
one = LaurentInt({0: 1})
q = LaurentInt({1: 1})
qinv = LaurentInt({-1: 1})


def add(a: LaurentInt, b: LaurentInt) -> LaurentInt:
    return a + b


def mul(a: LaurentInt, b: LaurentInt) -> LaurentInt:
    return a * b


def bar(p: LaurentInt) -> LaurentInt:
    return p.bar()


def qint(m: int) -> LaurentInt:
    """The balanced quantum integer [m] = q^(m-1) + q^(m-3) + ... + q^(1-m)."""
    if m < 0:
        raise ValueError("qint requires m >= 0")
    return LaurentInt({m - 1 - 2 * i: 1 for i in range(m)})


def qfact(m: int) -> LaurentInt:
    """The quantum factorial [m]! = [m][m-1]...[1], with [0]! = 1."""
    if m < 0:
        raise ValueError("qfact requires m >= 0")
    out = one
    for k in range(2, m + 1):
        out = out * qint(k)
    return out


def div_exact(a: LaurentInt, b: LaurentInt) -> LaurentInt:
    """Exact quotient a / b in Z[q, q^-1].

    Raises NotDivisible when b is zero or does not divide a; a failed
    division signals a violated precondition upstream (e.g. a divided
    power applied to a vector outside the integral form).
    """
    if b.is_zero():
        raise NotDivisible("division by zero")
    if a.is_zero():
        return zero
    # Shift both into Z[q] and run ordinary long division over Z.
    sa, sb = a.min_exp(), b.min_exp()
    num = {e - sa: c for e, c in a.coeffs.items()}
    den = {e - sb: c for e, c in b.coeffs.items()}
    dden = max(den)
    lead = den[dden]
    quot: dict[int, int] = {}
    while num:
        dnum = max(num)
        if dnum < dden:
            raise NotDivisible(f"{render(a)} not divisible by {render(b)}")
        c, r = divmod(num[dnum], lead)
        if r != 0:
            raise NotDivisible(f"{render(a)} not divisible by {render(b)}")
        e = dnum - dden
        quot[e] = c
        for de, dc in den.items():
            k = de + e
            n = num.get(k, 0) - dc * c
            if n:
                num[k] = n
            else:
                num.pop(k, None)
    return LaurentInt(quot).shift(sa - sb)


def render(p: LaurentInt) -> str:
    """Text form with descending exponents, e.g. "3*q^2 + 1 + q^-2"."""
    if p.is_zero():
        return "0"
    parts = []
    for e in sorted(p.coeffs, reverse=True):
        c = p.coeffs[e]
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if e == 0:
            body = str(c)
        else:
            power = "q" if e == 1 else f"q^{e}"
            body = power if c == 1 else f"{c}*{power}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text
