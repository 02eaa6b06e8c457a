"""Algebraic numbers in isolating-interval representation.

Real roots are isolated with Descartes-rule bisection on the square-free
part; intervals have dyadic rational endpoints.  Complex roots are boxes
(real interval x imaginary interval) obtained from the bivariate system
{Re f(x+iy) = 0, Im f(x+iy) = 0}, with a certified interval-Newton
fallback around numeric seeds for high degrees.  Equality and sign
queries always go through gcds, never through refinement alone.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .polyarith import (
    DomainError,
    UniPoly,
    gcd_uni,
    pseudo_rem,
    squarefree_part,
)


def _sign(v):
    return (v > 0) - (v < 0)


def _sign_variations(values):
    count = 0
    prev = 0
    for v in values:
        if v:
            if prev and v != prev:
                count += 1
            prev = v
    return count


# ---------------------------------------------------------------------------
# Sturm chains (used for certification; isolation itself is Descartes-based)
# ---------------------------------------------------------------------------


class SturmChain:
    """Sturm chain of the square-free part of a polynomial."""

    def __init__(self, f: UniPoly):
        p = squarefree_part(f)
        seq = [p, p.derivative()]
        while not seq[-1].is_zero():
            a, b = seq[-2], seq[-1]
            if b.degree < 0:
                break
            k = a.degree - b.degree + 1
            r = pseudo_rem(a, b)
            if b.lc < 0 and k % 2 == 1:
                r = -r  # undo the negative pseudo-division multiplier
            r = (-r).primitive_part()
            if r.is_zero():
                break
            seq.append(r)
            if r.degree <= 0:
                break
        self.seq = seq
        self.poly = p

    def _variations_at(self, x):
        return _sign_variations([q.sign_at_fraction(x) for q in self.seq])

    def _variations_at_inf(self, sgn):
        vals = []
        for q in self.seq:
            if q.is_zero():
                vals.append(0)
            else:
                v = _sign(q.lc)
                if sgn < 0 and q.degree % 2 == 1:
                    v = -v
                vals.append(v)
        return _sign_variations(vals)

    def count(self, lo=None, hi=None) -> int:
        """Distinct real roots in (lo, hi]; whole line for None bounds."""
        va = self._variations_at_inf(-1) if lo is None else self._variations_at(lo)
        vb = self._variations_at_inf(1) if hi is None else self._variations_at(hi)
        return va - vb


def sturm_count(f: UniPoly, lo=None, hi=None) -> int:
    return SturmChain(f).count(lo, hi)


# ---------------------------------------------------------------------------
# Descartes isolation
# ---------------------------------------------------------------------------


def _taylor_shift_1(coeffs):
    """Coefficients of f(x+1)."""
    out = list(coeffs)
    n = len(out)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            out[j] += out[j + 1]
    return out


def _descartes_01(coeffs):
    """Sign-variation bound on the roots in the open interval (0, 1)."""
    rev = list(reversed(coeffs))
    return _sign_variations([_sign(c) for c in _taylor_shift_1(rev)])


def root_bound_power_of_two(f: UniPoly) -> int:
    """Exponent e with every real root of f inside (-2^e, 2^e)."""
    lc = abs(f.lc)
    rest = f.coeffs[:-1]
    m = max((abs(c) for c in rest), default=0)
    if m == 0:
        return 1
    e = 1
    while (lc << e) <= lc + m:
        e += 1
    return e


def _isolate_squarefree(p: UniPoly):
    """Disjoint isolating intervals (lo, hi) for a square-free polynomial.

    Degenerate pairs lo == hi mark exact rational roots; otherwise the
    root lies in the open interval and p changes sign across it.
    """
    e = root_bound_power_of_two(p)
    B = Fraction(1 << e)
    d = p.degree
    # q0(x) = p(-B + 2Bx): integer coefficients since B is an integer
    q0 = _affine_compose_int(p, -B, 2 * B)
    out = []
    stack = [(-B, B, q0)]
    while stack:
        lo, hi, q = stack.pop()
        v = _descartes_01(q)
        if v == 0:
            continue
        if v == 1 and p.sign_at_fraction(lo) * p.sign_at_fraction(hi) < 0:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        if p.eval_fraction(mid) == 0:
            out.append((mid, mid))
        # children via integer transforms: left = 2^d q(x/2), right = left(x+1)
        left = [c << (d - k) for k, c in enumerate(q)]
        right = _taylor_shift_1(left)
        stack.append((lo, mid, left))
        stack.append((mid, hi, right))
    out.sort()
    return _make_disjoint(p, out)


def _make_disjoint(p, intervals):
    """Shrink open intervals that touch an exact rational root endpoint."""
    fixed = []
    for lo, hi in intervals:
        if lo != hi:
            # bisect until neither endpoint is a root of p
            slo, shi = p.sign_at_fraction(lo), p.sign_at_fraction(hi)
            while slo == 0 or shi == 0:
                mid = (lo + hi) / 2
                sm = p.sign_at_fraction(mid)
                if sm == 0:
                    lo = hi = mid
                    break
                if slo != 0 and sm * slo < 0:
                    hi, shi = mid, sm
                else:
                    lo, slo = mid, sm
        fixed.append((lo, hi))
    return fixed


def _affine_compose_int(p: UniPoly, a: Fraction, b: Fraction):
    """Integer coefficient list of p(a + b x), valid when a, b are integers."""
    cs = [Fraction(0)]
    for c in reversed(p.coeffs):
        nxt = [Fraction(0)] * (len(cs) + 1)
        for k, v in enumerate(cs):
            nxt[k] += v * a
            nxt[k + 1] += v * b
        nxt[0] += c
        cs = nxt
    while len(cs) > 1 and cs[-1] == 0:
        cs.pop()
    den = math.lcm(*[c.denominator for c in cs])
    return [int(c * den) for c in cs]


def isolate_real_roots(f: UniPoly):
    """RealAlgebraic values for the distinct real roots of f, ascending."""
    if f.is_zero():
        raise DomainError("cannot isolate roots of the zero polynomial")
    p = squarefree_part(f)
    if p.degree < 1:
        return []
    return [RealAlgebraic(p, lo, hi) for lo, hi in _isolate_squarefree(p)]


# ---------------------------------------------------------------------------
# real algebraic numbers
# ---------------------------------------------------------------------------


class RealAlgebraic:
    """A real root of a square-free integer polynomial in an isolating interval.

    Invariant: the defining polynomial changes sign across (lo, hi), or
    lo == hi is an exact rational root.
    """

    __slots__ = ("defining", "lo", "hi")

    def __init__(self, defining: UniPoly, lo, hi):
        lo, hi = Fraction(lo), Fraction(hi)
        if lo > hi:
            raise DomainError("empty interval")
        object.__setattr__(self, "defining", defining)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __setattr__(self, name, value):
        raise AttributeError("RealAlgebraic is immutable")

    @staticmethod
    def from_rational(v) -> "RealAlgebraic":
        v = Fraction(v)
        return RealAlgebraic(UniPoly((-v.numerator, v.denominator)), v, v)

    @property
    def interval(self):
        return (self.lo, self.hi)

    def is_rational(self):
        return self.lo == self.hi

    def as_rational(self):
        if self.lo != self.hi:
            raise DomainError("not pinned to a rational")
        return self.lo

    def width(self):
        return self.hi - self.lo

    def __repr__(self):
        if self.is_rational():
            return f"RealAlgebraic({self.lo})"
        return f"RealAlgebraic({self.defining!r}, [{self.lo}, {self.hi}])"

    def refined(self, target_width) -> "RealAlgebraic":
        """Same root, interval width at most target_width (bisection)."""
        lo, hi = self.lo, self.hi
        if lo == hi:
            return self
        f = self.defining
        slo = f.sign_at_fraction(lo)
        target_width = Fraction(target_width)
        while hi - lo > target_width:
            mid = (lo + hi) / 2
            sm = f.sign_at_fraction(mid)
            if sm == 0:
                return RealAlgebraic(f, mid, mid)
            if sm == slo:
                lo = mid
            else:
                hi = mid
        return RealAlgebraic(f, lo, hi)

    def refined_halved(self) -> "RealAlgebraic":
        if self.lo == self.hi:
            return self
        return self.refined(self.width() / 2)

    def midpoint_rational(self, precision: int) -> Fraction:
        """Rational within 2^-precision of the root."""
        r = self.refined(Fraction(1, 1 << (precision + 1)))
        return (r.lo + r.hi) / 2

    def sign_of(self, f: UniPoly) -> int:
        return sign_at(f, self)

    def __eq__(self, other):
        if isinstance(other, RealAlgebraic):
            return compare(self, other) == 0
        return NotImplemented

    __hash__ = None  # equality is semantic; do not use as dict/set keys

    def __lt__(self, other):
        return compare(self, other) < 0

    def __le__(self, other):
        return compare(self, other) <= 0

    def __gt__(self, other):
        return compare(self, other) > 0

    def __ge__(self, other):
        return compare(self, other) >= 0


def refine(a: RealAlgebraic, target_width) -> RealAlgebraic:
    return a.refined(target_width)


def midpoint_rational(a: RealAlgebraic, precision: int) -> Fraction:
    return a.midpoint_rational(precision)


def sign_at(f: UniPoly, a: RealAlgebraic) -> int:
    """Exact sign of f at a; zero decided through gcd, never refinement."""
    if f.is_zero():
        return 0
    if a.is_rational():
        return f.sign_at_fraction(a.as_rational())
    g = gcd_uni(f, a.defining)
    if g.degree >= 1 and _is_root_of_divisor(g, a):
        return 0
    if f.degree < 1:
        return _sign(f.lc)
    chain = SturmChain(f)
    cur = a
    while True:
        slo = f.sign_at_fraction(cur.lo)
        if slo != 0 and chain.count(cur.lo, cur.hi) == 0:
            return slo
        cur = cur.refined_halved()


def _is_root_of_divisor(g: UniPoly, a: RealAlgebraic) -> bool:
    """Does g vanish at a?  Requires g | a.defining (both square-free)."""
    if g.eval_fraction(a.lo) == 0 or g.eval_fraction(a.hi) == 0:
        # an endpoint root of g is a root of defining, hence it is a itself
        return (
            a.defining.eval_fraction(a.lo) == 0
            or a.defining.eval_fraction(a.hi) == 0
        )
    return sturm_count(g, a.lo, a.hi) > 0


def compare(a: RealAlgebraic, b: RealAlgebraic) -> int:
    """Exact three-way comparison of real algebraic numbers."""
    if a.is_rational() and b.is_rational():
        return _sign(a.as_rational() - b.as_rational())
    ca, cb = a, b
    for _ in range(2):
        if ca.hi < cb.lo:
            return -1
        if cb.hi < ca.lo:
            return 1
        ca, cb = ca.refined_halved(), cb.refined_halved()
    if _equal_algebraic(ca, cb):
        return 0
    while True:
        if ca.hi < cb.lo:
            return -1
        if cb.hi < ca.lo:
            return 1
        ca, cb = ca.refined_halved(), cb.refined_halved()


def _equal_algebraic(a: RealAlgebraic, b: RealAlgebraic) -> bool:
    if a.is_rational():
        v = a.as_rational()
        return b.lo <= v <= b.hi and sign_at(UniPoly((-v.numerator, v.denominator)), b) == 0
    if b.is_rational():
        return _equal_algebraic(b, a)
    g = gcd_uni(a.defining, b.defining)
    if g.degree < 1:
        return False
    if not (_is_root_of_divisor(g, a) and _is_root_of_divisor(g, b)):
        return False
    roots = isolate_real_roots(g)
    return _identify_root(roots, a) == _identify_root(roots, b)


def _identify_root(roots, a: RealAlgebraic) -> int:
    """Index of the root of the list that equals a (a must be among them)."""
    cands = list(roots)
    cur = a
    while True:
        alive = [
            i
            for i, r in enumerate(cands)
            if r is not None and not (r.hi < cur.lo or cur.hi < r.lo)
        ]
        if len(alive) == 1:
            return alive[0]
        if not alive:
            raise DomainError("root identification failed")
        cur = cur.refined_halved()
        cands = [
            (r.refined_halved() if r is not None and i in alive else None)
            for i, r in enumerate(cands)
        ]


# ---------------------------------------------------------------------------
# complex algebraic numbers
# ---------------------------------------------------------------------------


class ComplexAlgebraic:
    """A complex root of a square-free polynomial in a rational box.

    A real root has im interval None and carries its RealAlgebraic twin.
    """

    __slots__ = ("defining", "re_lo", "re_hi", "im_lo", "im_hi", "real_twin", "_refiner")

    def __init__(self, defining, re_lo, re_hi, im_lo=None, im_hi=None,
                 real_twin=None, refiner=None):
        object.__setattr__(self, "defining", defining)
        object.__setattr__(self, "re_lo", Fraction(re_lo))
        object.__setattr__(self, "re_hi", Fraction(re_hi))
        object.__setattr__(self, "im_lo", None if im_lo is None else Fraction(im_lo))
        object.__setattr__(self, "im_hi", None if im_hi is None else Fraction(im_hi))
        object.__setattr__(self, "real_twin", real_twin)
        object.__setattr__(self, "_refiner", refiner)

    def __setattr__(self, name, value):
        raise AttributeError("ComplexAlgebraic is immutable")

    @property
    def is_real(self):
        return self.im_lo is None

    @property
    def box(self):
        im = None if self.is_real else (self.im_lo, self.im_hi)
        return ((self.re_lo, self.re_hi), im)

    def __repr__(self):
        if self.is_real:
            return f"ComplexAlgebraic(real [{self.re_lo}, {self.re_hi}])"
        return (
            f"ComplexAlgebraic([{self.re_lo}, {self.re_hi}] + "
            f"[{self.im_lo}, {self.im_hi}]*i)"
        )

    def im_abs_lower(self):
        """A positive lower bound on |Im| once the box excludes the real axis."""
        if self.is_real:
            return Fraction(0)
        if self.im_lo > 0:
            return self.im_lo
        if self.im_hi < 0:
            return -self.im_hi
        return Fraction(0)

    def conjugate_box(self):
        if self.is_real:
            return self
        parent = self

        def refiner(_):
            return parent.refined_halved().conjugate_box()

        return ComplexAlgebraic(
            self.defining, self.re_lo, self.re_hi, -self.im_hi, -self.im_lo,
            refiner=refiner,
        )

    def width(self):
        if self.is_real:
            return self.re_hi - self.re_lo
        return max(self.re_hi - self.re_lo, self.im_hi - self.im_lo)

    def refined_halved(self) -> "ComplexAlgebraic":
        if self.is_real:
            t = (self.real_twin or RealAlgebraic(self.defining, self.re_lo, self.re_hi)).refined_halved()
            return ComplexAlgebraic(self.defining, t.lo, t.hi, real_twin=t)
        if self._refiner is not None:
            return self._refiner(self)
        return _newton_refine_box(self)

    def refined(self, target_width) -> "ComplexAlgebraic":
        cur = self
        guard = 0
        while cur.width() > Fraction(target_width):
            cur = cur.refined_halved()
            guard += 1
            if guard > 20000:
                raise DomainError("refinement stalled")
        return cur

    def approx(self, precision: int):
        """(re, im) Fractions within 2^-precision of the root."""
        cur = self.refined(Fraction(1, 1 << (precision + 1)))
        re = (cur.re_lo + cur.re_hi) / 2
        im = Fraction(0) if cur.is_real else (cur.im_lo + cur.im_hi) / 2
        return re, im


def _newton_refine_box(a: ComplexAlgebraic) -> ComplexAlgebraic:
    from .cintervals import CInterval, interval_newton_contract

    box = CInterval(a.re_lo, a.re_hi, a.im_lo, a.im_hi)
    nxt = interval_newton_contract(a.defining, box)
    return ComplexAlgebraic(a.defining, nxt.re_lo, nxt.re_hi, nxt.im_lo, nxt.im_hi)


def real_imag_parts(f: UniPoly):
    """BiPoly pair (Re f(x+iy), Im f(x+iy)); s plays x, t plays y."""
    from .polyarith import BiPoly

    re = BiPoly.zero()
    im = BiPoly.zero()
    pw_re = BiPoly.constant(1)
    pw_im = BiPoly.zero()
    xs = BiPoly.from_terms([(1, 1, 0)])
    ys = BiPoly.from_terms([(1, 0, 1)])
    for c in f.coeffs:
        if c:
            re = re + c * pw_re
            im = im + c * pw_im
        pw_re, pw_im = pw_re * xs - pw_im * ys, pw_re * ys + pw_im * xs
    return re, im


def isolate_complex_roots(f: UniPoly, algorithm="auto"):
    """Isolating boxes for all distinct complex roots of f.

    Real roots come with an empty imaginary interval; non-real roots in
    conjugate-closed mirror boxes.  Moderate degrees go through the
    bivariate real system of the real and imaginary parts; high degrees
    through certified interval-Newton boxes around numeric seeds.
    """
    if f.is_zero():
        raise DomainError("cannot isolate roots of the zero polynomial")
    p = squarefree_part(f)
    if p.degree < 1:
        return []
    reals = isolate_real_roots(p)
    out = [ComplexAlgebraic(p, r.lo, r.hi, real_twin=r) for r in reals]
    n_complex = p.degree - len(reals)
    if n_complex == 0:
        return out
    if algorithm == "auto":
        algorithm = "bivariate" if p.degree <= 6 else "newton"
    if algorithm == "bivariate":
        boxes = _complex_boxes_bivariate(p, n_complex)
    elif algorithm == "newton":
        boxes = _complex_boxes_newton(p, n_complex)
    else:
        raise DomainError(f"unknown algorithm {algorithm!r}")
    out.extend(boxes)
    out.sort(key=lambda c: (c.re_lo, Fraction(0) if c.is_real else (c.im_lo + c.im_hi)))
    return out


def _complex_boxes_bivariate(p: UniPoly, n_complex: int):
    from . import bivsolve

    re, im = real_imag_parts(p)
    sols = bivsolve.real_solutions_of_pair(re, im)
    boxes = []
    y_axis = UniPoly.x()
    for sx, sy in sols:
        sgn = sign_at(y_axis, sy)
        if sgn == 0:
            continue  # a real root, already listed
        while sy.lo <= 0 <= sy.hi:
            sy = sy.refined_halved()
        boxes.append(_box_from_pair(p, sx, sy))
    if len(boxes) != n_complex:
        raise DomainError(
            f"complex isolation inconsistency: {len(boxes)} boxes for "
            f"{n_complex} non-real roots"
        )
    return boxes


def _box_from_pair(p, sx, sy):
    state = [sx, sy]

    def refiner(_):
        state[0] = state[0].refined_halved()
        state[1] = state[1].refined_halved()
        nx, ny = state
        return ComplexAlgebraic(p, nx.lo, nx.hi, ny.lo, ny.hi, refiner=refiner)

    return ComplexAlgebraic(p, sx.lo, sx.hi, sy.lo, sy.hi, refiner=refiner)


def _complex_boxes_newton(p: UniPoly, n_complex: int):
    import mpmath

    from .cintervals import CInterval, certify_unique_root

    deg = p.degree
    prec = max(128, 16 * deg + 8 * p.bitsize())
    for _attempt in range(6):
        with mpmath.workprec(prec):
            try:
                roots = mpmath.polyroots(
                    [mpmath.mpf(c) for c in reversed(p.coeffs)],
                    maxsteps=300,
                    extraprec=prec,
                )
            except mpmath.libmp.NoConvergence:
                prec *= 2
                continue
            cands = [r for r in roots if r.imag > mpmath.mpf(2) ** (-prec // 4)]
        if 2 * len(cands) == n_complex:
            boxes = []
            ok = True
            for r in cands:
                w = Fraction(1, 1 << max(16, prec // 8))
                re_c = _fraction_of_mpf(r.real)
                im_c = _fraction_of_mpf(r.imag)
                cand = CInterval(re_c - w, re_c + w, im_c - w, im_c + w)
                cert = certify_unique_root(p, cand)
                if cert is None:
                    ok = False
                    break
                boxes.append(
                    ComplexAlgebraic(p, cert.re_lo, cert.re_hi, cert.im_lo, cert.im_hi)
                )
            if ok and _pairwise_disjoint(boxes):
                return boxes + [b.conjugate_box() for b in boxes]
        prec *= 2
    raise DomainError("numeric complex isolation failed to certify")


def _fraction_of_mpf(x) -> Fraction:
    import mpmath

    sign, man, exp, _ = mpmath.mpf(x)._mpf_
    v = Fraction(int(man)) * (Fraction(2) ** int(exp))
    return -v if sign else v


def _pairwise_disjoint(boxes):
    for i in range(len(boxes)):
        for j in range(i + 1, len(boxes)):
            a, b = boxes[i], boxes[j]
            if not (
                a.re_hi < b.re_lo
                or b.re_hi < a.re_lo
                or a.im_hi < b.im_lo
                or b.im_hi < a.im_lo
            ):
                return False
    return True
