"""Rectangle interval arithmetic over the rationals, with interval Newton.

Used to evaluate polynomials and rational maps at complex root boxes and
to certify/refine isolating boxes of non-real roots.
"""

from __future__ import annotations

from fractions import Fraction

from .polyarith import DomainError, UniPoly


class RInterval:
    """Closed real interval with Fraction endpoints."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        lo = Fraction(lo)
        hi = lo if hi is None else Fraction(hi)
        if lo > hi:
            lo, hi = hi, lo
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __setattr__(self, name, value):
        raise AttributeError("RInterval is immutable")

    def __repr__(self):
        return f"[{self.lo}, {self.hi}]"

    def __add__(self, other):
        other = _as_rint(other)
        return RInterval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self):
        return RInterval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-_as_rint(other))

    def __rsub__(self, other):
        return _as_rint(other) + (-self)

    def __mul__(self, other):
        other = _as_rint(other)
        ps = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return RInterval(min(ps), max(ps))

    __rmul__ = __mul__

    def square(self):
        if self.lo <= 0 <= self.hi:
            m = max(self.lo * self.lo, self.hi * self.hi)
            return RInterval(0, m)
        return self * self

    def contains_zero(self):
        return self.lo <= 0 <= self.hi

    def recip(self):
        if self.contains_zero():
            raise ZeroDivisionError("interval contains zero")
        return RInterval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other):
        return self * _as_rint(other).recip()

    def width(self):
        return self.hi - self.lo

    def mid(self):
        return (self.lo + self.hi) / 2

    def intersect(self, other):
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        if lo > hi:
            return None
        return RInterval(lo, hi)

    def inside_strict(self, other):
        return other.lo < self.lo and self.hi < other.hi

    def contains(self, v):
        return self.lo <= Fraction(v) <= self.hi


def _as_rint(v):
    if isinstance(v, RInterval):
        return v
    return RInterval(Fraction(v))


class CInterval:
    """Axis-aligned rectangle in the complex plane."""

    __slots__ = ("re", "im")

    def __init__(self, re_lo, re_hi=None, im_lo=0, im_hi=None):
        if isinstance(re_lo, RInterval):
            re = re_lo
            im = re_hi if isinstance(re_hi, RInterval) else RInterval(0)
        else:
            re = RInterval(re_lo, re_hi)
            im = RInterval(im_lo, im_hi)
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    def __setattr__(self, name, value):
        raise AttributeError("CInterval is immutable")

    @property
    def re_lo(self):
        return self.re.lo

    @property
    def re_hi(self):
        return self.re.hi

    @property
    def im_lo(self):
        return self.im.lo

    @property
    def im_hi(self):
        return self.im.hi

    def __repr__(self):
        return f"CInterval({self.re!r} + {self.im!r}*i)"

    def __add__(self, other):
        other = _as_cint(other)
        return CInterval(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return CInterval(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-_as_cint(other))

    def __rsub__(self, other):
        return _as_cint(other) + (-self)

    def __mul__(self, other):
        other = _as_cint(other)
        return CInterval(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def modulus_sq(self):
        return self.re.square() + self.im.square()

    def contains_zero(self):
        return self.re.contains_zero() and self.im.contains_zero()

    def recip(self):
        m = self.modulus_sq()
        if m.contains_zero():
            raise ZeroDivisionError("rectangle contains zero")
        return CInterval(self.re / m, (-self.im) / m)

    def __truediv__(self, other):
        return self * _as_cint(other).recip()

    def width(self):
        return max(self.re.width(), self.im.width())

    def mid(self):
        return (self.re.mid(), self.im.mid())

    def intersect(self, other):
        re = self.re.intersect(other.re)
        im = self.im.intersect(other.im)
        if re is None or im is None:
            return None
        return CInterval(re, im)

    def inside_strict(self, other):
        return self.re.inside_strict(other.re) and self.im.inside_strict(other.im)

    def inside(self, other):
        return (
            other.re.lo <= self.re.lo
            and self.re.hi <= other.re.hi
            and other.im.lo <= self.im.lo
            and self.im.hi <= other.im.hi
        )


def _as_cint(v):
    if isinstance(v, CInterval):
        return v
    if isinstance(v, RInterval):
        return CInterval(v, RInterval(0))
    if isinstance(v, tuple):
        return CInterval(RInterval(v[0]), RInterval(v[1]))
    return CInterval(RInterval(Fraction(v)), RInterval(0))


def eval_poly_cint(f: UniPoly, z: CInterval) -> CInterval:
    acc = CInterval(RInterval(0), RInterval(0))
    for c in reversed(f.coeffs):
        acc = acc * z + _as_cint(c)
    return acc


def eval_poly_rint(f: UniPoly, x: RInterval) -> RInterval:
    acc = RInterval(0)
    for c in reversed(f.coeffs):
        acc = acc * x + _as_rint(c)
    return acc


def _exact_complex_eval(f: UniPoly, re: Fraction, im: Fraction):
    a, b = Fraction(0), Fraction(0)
    for c in reversed(f.coeffs):
        a, b = a * re - b * im + c, a * im + b * re
    return a, b


def interval_newton_step(f: UniPoly, box: CInterval):
    """One interval-Newton step; None if the derivative box straddles zero."""
    try:
        dfX = eval_poly_cint(f.derivative(), box)
        mre, mim = box.mid()
        fre, fim = _exact_complex_eval(f, mre, mim)
        fm = CInterval(RInterval(fre), RInterval(fim))
        n = _as_cint((mre, mim)) - fm / dfX
    except ZeroDivisionError:
        return None
    return n


def certify_unique_root(f: UniPoly, box: CInterval):
    """Certified contraction: a box inside `box` holding exactly one root.

    Returns None when the interval-Newton test is inconclusive.
    """
    n = interval_newton_step(f, box)
    if n is None or not n.inside_strict(box):
        return None
    out = n.intersect(box)
    return out


def interval_newton_contract(f: UniPoly, box: CInterval, max_steps=60) -> CInterval:
    """Shrink a certified box to at most half its width."""
    target = box.width() / 2
    cur = box
    for _ in range(max_steps):
        n = interval_newton_step(f, cur)
        if n is not None:
            nxt = n.intersect(cur)
            if nxt is not None and nxt.width() < cur.width():
                cur = nxt
                if cur.width() <= target:
                    return cur
                continue
        # fall back to quadrisection keeping the quadrant certified to hold the root
        cur = _bisect_certified(f, cur)
        if cur.width() <= target:
            return cur
    if cur.width() <= target:
        return cur
    raise DomainError("interval Newton failed to contract")


def _bisect_certified(f: UniPoly, box: CInterval) -> CInterval:
    mre, mim = box.mid()
    quads = []
    for re in (RInterval(box.re.lo, mre), RInterval(mre, box.re.hi)):
        for im in (RInterval(box.im.lo, mim), RInterval(mim, box.im.hi)):
            quads.append(CInterval(re, im))
    holders = []
    for q in quads:
        if certify_unique_root(f, _pad(q)) is not None:
            holders.append(q)
    if len(holders) == 1:
        return holders[0]
    # inconclusive: exclude quadrants whose image certainly avoids zero
    alive = [q for q in quads if eval_poly_cint(f, q).contains_zero()]
    if len(alive) == 1:
        return alive[0]
    raise DomainError("bisection could not relocate the root")


def _pad(box: CInterval) -> CInterval:
    wr = box.re.width() / 4
    wi = box.im.width() / 4
    return CInterval(
        RInterval(box.re.lo - wr, box.re.hi + wr),
        RInterval(box.im.lo - wi, box.im.hi + wi),
    )
