"""Exact arithmetic for univariate and bivariate integer polynomials.

Univariate polynomials are dense integer coefficient tuples (index =
monomial degree).  Bivariate polynomials are grids indexed by
(degree in s, degree in t).  Everything is immutable; all operations
are pure functions, with randomness supplied through explicit seeds.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction


class DomainError(ValueError):
    """Raised when an operation is applied outside its mathematical domain."""


def _igcd_many(ints):
    g = 0
    for c in ints:
        g = math.gcd(g, c)
        if g == 1:
            return 1
    return g


class UniPoly:
    """Dense univariate polynomial over the integers."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(int(c) for c in cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    # -- constructors ------------------------------------------------

    @staticmethod
    def zero():
        return UniPoly(())

    @staticmethod
    def one():
        return UniPoly((1,))

    @staticmethod
    def constant(c):
        return UniPoly((c,))

    @staticmethod
    def monomial(c, k):
        return UniPoly((0,) * k + (c,))

    @staticmethod
    def x():
        return UniPoly((0, 1))

    # -- basic queries -----------------------------------------------

    @property
    def degree(self):
        """Degree, or -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    @property
    def lc(self):
        if not self.coeffs:
            return 0
        return self.coeffs[-1]

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def bitsize(self):
        """floor(log2 of the largest absolute coefficient); 0 for 0 and +-1."""
        if not self.coeffs:
            return 0
        return max(abs(c) for c in self.coeffs).bit_length() - 1

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "UniPoly(0)"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*t^{k}" if k else f"{c}")
        return "UniPoly(" + " + ".join(terms) + ")"

    # -- ring operations ---------------------------------------------

    def __neg__(self):
        return UniPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return UniPoly(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = UniPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift_up(self, k):
        """Multiply by t^k."""
        if not self.coeffs:
            return self
        return UniPoly((0,) * k + self.coeffs)

    # -- calculus / evaluation ---------------------------------------

    def derivative(self):
        return UniPoly(tuple(k * c for k, c in enumerate(self.coeffs))[1:])

    def eval_int(self, v):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def eval_fraction(self, v):
        v = Fraction(v)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def sign_at_fraction(self, v):
        val = self.eval_fraction(v)
        return (val > 0) - (val < 0)

    def reverse(self):
        """Coefficient reversal t^d * f(1/t)."""
        return UniPoly(tuple(reversed(self.coeffs)))

    # -- content & division ------------------------------------------

    def content(self):
        """Nonnegative gcd of the coefficients (0 for the zero polynomial)."""
        return _igcd_many(abs(c) for c in self.coeffs)

    def primitive_part(self):
        """Content removed, sign of the leading coefficient preserved."""
        c = self.content()
        if c <= 1:
            return self
        return UniPoly(tuple(q // c for q in self.coeffs))

    def normalized(self):
        """Primitive part with positive leading coefficient."""
        p = self.primitive_part()
        if p.lc < 0:
            p = -p
        return p

    def divmod_exactish(self, g):
        """Division over Q returning (quotient, remainder) as Fraction lists."""
        if g.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = [Fraction(c) for c in self.coeffs]
        glc = Fraction(g.lc)
        gd = g.degree
        quo = [Fraction(0)] * max(len(rem) - gd, 0)
        while len(rem) - 1 >= gd and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < gd:
                break
            k = len(rem) - 1 - gd
            q = rem[-1] / glc
            quo[k] = q
            for i, gc in enumerate(g.coeffs):
                rem[k + i] -= q * gc
            rem.pop()
        return quo, rem


def exact_divide(f: UniPoly, g: UniPoly) -> UniPoly:
    """Exact quotient f/g over the integers; errors if not exact."""
    quo, rem = f.divmod_exactish(g)
    if any(rem):
        raise DomainError("inexact polynomial division")
    if any(q.denominator != 1 for q in quo):
        raise DomainError("quotient not integral")
    return UniPoly(tuple(int(q) for q in quo))


def pseudo_rem(f: UniPoly, g: UniPoly) -> UniPoly:
    """Pseudo-remainder: rem of lc(g)^(deg f - deg g + 1) * f by g."""
    if g.is_zero():
        raise ZeroDivisionError("pseudo-remainder by zero")
    df, dg = f.degree, g.degree
    if df < dg:
        return f
    rem = list(f.coeffs)
    glc = g.lc
    for k in range(df - dg, -1, -1):
        if len(rem) - 1 != k + dg:
            # degree dropped early; keep scaling uniform
            rem = [c * glc for c in rem]
            continue
        head = rem[-1]
        rem = [c * glc for c in rem[:-1]]
        for i in range(dg):
            rem[k + i] -= head * g.coeffs[i]
        while rem and rem[-1] == 0:
            rem.pop()
    return UniPoly(rem)


def gcd_uni(f: UniPoly, g: UniPoly) -> UniPoly:
    """Primitive-PRS gcd over Z, positive leading coefficient."""
    if f.is_zero() and g.is_zero():
        return UniPoly.zero()
    if f.is_zero():
        return g.normalized()
    if g.is_zero():
        return f.normalized()
    cont = math.gcd(f.content(), g.content())
    a, b = f.primitive_part(), g.primitive_part()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = pseudo_rem(a, b).primitive_part()
        a, b = b, r
    a = a.normalized()
    return a * cont


def gcd_uni_many(fs, mode="deterministic", seed=0) -> UniPoly:
    """gcd of a family of univariate integer polynomials.

    las_vegas mode combines the tail with random multipliers, computes a
    two-argument gcd and verifies it divides every input, retrying until
    the verification passes; the result always matches deterministic mode.
    """
    fs = [f for f in fs]
    if not fs:
        raise DomainError("empty gcd input")
    nonzero = [f for f in fs if not f.is_zero()]
    if not nonzero:
        raise DomainError("gcd of all-zero family")
    if len(nonzero) == 1:
        return nonzero[0].normalized()
    if mode == "deterministic":
        g = nonzero[0]
        for f in nonzero[1:]:
            g = gcd_uni(g, f)
            if g.is_constant():
                break
        return g.normalized()
    if mode != "las_vegas":
        raise DomainError(f"unknown gcd mode {mode!r}")
    d = max(f.degree for f in nonzero)
    rng = random.Random(seed)
    f1, rest = nonzero[0], nonzero[1:]
    for _ in range(64):
        comb = rest[0]
        for f in rest[1:]:
            comb = comb + rng.randint(1, 4 * max(d, 1)) * f
        g = gcd_uni(f1, comb).normalized()
        if all(_divides_uni(g, f) for f in nonzero):
            # verified divisor of everything; confirm maximality cheaply
            if g == gcd_uni_many(nonzero, mode="deterministic"):
                return g
    raise DomainError("las_vegas gcd failed to verify within retry budget")


def _divides_uni(g, f):
    if g.is_zero():
        return f.is_zero()
    try:
        exact_divide(f, g)
        return True
    except DomainError:
        return False


def squarefree_part(f: UniPoly) -> UniPoly:
    """Product of the distinct irreducible factors, positive lc."""
    if f.is_zero():
        raise DomainError("squarefree part of zero polynomial")
    p = f.normalized()
    if p.degree < 1:
        return UniPoly.one()
    g = gcd_uni(p, p.derivative())
    return exact_divide(p, g).normalized()


def squarefree_decomposition(f: UniPoly):
    """Yun decomposition: list of (g, e) with f = c * prod g^e, g squarefree."""
    if f.is_zero():
        raise DomainError("squarefree decomposition of zero polynomial")
    p = f.normalized()
    out = []
    if p.degree < 1:
        return out
    df = p.derivative()
    a = gcd_uni(p, df)
    b = exact_divide(p, a).normalized()
    quo, rem = df.divmod_exactish(a)
    c = UniPoly(tuple(int(q) for q in quo)) - b.derivative()
    e = 1
    while b.degree >= 1:
        g = gcd_uni(b, c).normalized()
        if g.degree >= 1:
            out.append((g, e))
        b_next = exact_divide(b, g).normalized()
        quo, _ = c.divmod_exactish(g)
        # c/g is exact over Q; scale back to Z via the primitive route
        cg = _fraction_list_to_unipoly(quo)
        c = cg - b_next.derivative()
        b = b_next
        e += 1
    return out


def _fraction_list_to_unipoly(fracs):
    if any(q.denominator != 1 for q in fracs):
        raise DomainError("expected integral coefficients")
    return UniPoly(tuple(int(q) for q in fracs))


def gcd_free_part(f: UniPoly, g: UniPoly) -> UniPoly:
    """Largest divisor of f coprime to g (repeated gcd removal)."""
    h = f.normalized()
    if h.is_zero():
        raise DomainError("gcd-free part of zero polynomial")
    while True:
        d = gcd_uni(h, g)
        if d.degree < 1:
            return h.normalized()
        h = exact_divide(h, d).normalized()


def root_magnitude_bound(A: UniPoly, B: UniPoly) -> int:
    """Exponent b with 2^-b < |B(alpha)| < 2^b for every complex root alpha of A.

    b = m*sigma + n*tau + (m+n)*ceil(log2(m+n)) with m = deg A, n = deg B,
    tau = bitsize(A), sigma = bitsize(B).
    """
    if A.degree < 1:
        raise DomainError("A must have at least one root")
    if B.is_zero():
        raise DomainError("B must be nonzero")
    m, n = A.degree, B.degree
    tau, sigma = A.bitsize(), B.bitsize()
    return m * sigma + n * tau + (m + n) * max((m + n - 1).bit_length(), 1)


def compose_rational(f: UniPoly, num: UniPoly, den: UniPoly):
    """Substitute num/den into f and clear denominators.

    Returns den^deg(f) * f(num/den) as a UniPoly (the numerator of the
    composition; the matching denominator is den^deg(f)).
    """
    if den.is_zero():
        raise DomainError("zero denominator in composition")
    d = max(f.degree, 0)
    acc = UniPoly.zero()
    num_pow = UniPoly.one()
    den_pows = [UniPoly.one()]
    for _ in range(d):
        den_pows.append(den_pows[-1] * den)
    for k in range(d + 1):
        c = f[k]
        if c:
            acc = acc + c * num_pow * den_pows[d - k]
        if k < d:
            num_pow = num_pow * num
    return acc


# ---------------------------------------------------------------------------
# bivariate polynomials
# ---------------------------------------------------------------------------


class BiPoly:
    """Dense bivariate polynomial over Z; coeffs[i][j] multiplies s^i t^j."""

    __slots__ = ("coeffs",)

    def __init__(self, grid=()):
        rows = [list(int(c) for c in row) for row in grid]
        # trim trailing zero columns per row, then trailing zero rows
        width = 0
        for row in rows:
            while row and row[-1] == 0:
                row.pop()
            width = max(width, len(row))
        while rows and not rows[-1]:
            rows.pop()
        width = max((len(r) for r in rows), default=0)
        object.__setattr__(
            self,
            "coeffs",
            tuple(tuple(r + [0] * (width - len(r))) for r in rows),
        )

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    # -- constructors ------------------------------------------------

    @staticmethod
    def zero():
        return BiPoly(())

    @staticmethod
    def constant(c):
        return BiPoly(((c,),)) if c else BiPoly(())

    @staticmethod
    def from_terms(terms):
        """terms: iterable of (coeff, deg_s, deg_t)."""
        if not terms:
            return BiPoly(())
        terms = list(terms)
        rows = max(i for _, i, _ in terms) + 1
        cols = max(j for _, _, j in terms) + 1
        grid = [[0] * cols for _ in range(rows)]
        for c, i, j in terms:
            grid[i][j] += c
        return BiPoly(grid)

    @staticmethod
    def from_uni_s(f: UniPoly):
        """Lift a univariate polynomial in s."""
        return BiPoly(tuple((c,) for c in f.coeffs))

    @staticmethod
    def from_uni_t(f: UniPoly):
        """Lift a univariate polynomial in t."""
        return BiPoly((f.coeffs,)) if not f.is_zero() else BiPoly(())

    # -- queries -----------------------------------------------------

    def is_zero(self):
        return not self.coeffs

    @property
    def degree_s(self):
        return len(self.coeffs) - 1

    @property
    def degree_t(self):
        if not self.coeffs:
            return -1
        return len(self.coeffs[0]) - 1 if self.coeffs[0] else -1

    @property
    def bidegree(self):
        ds = -1
        dt = -1
        for i, row in enumerate(self.coeffs):
            for j, c in enumerate(row):
                if c:
                    ds = max(ds, i)
                    dt = max(dt, j)
        return (ds, dt)

    @property
    def total_degree(self):
        td = -1
        for i, row in enumerate(self.coeffs):
            for j, c in enumerate(row):
                if c:
                    td = max(td, i + j)
        return td

    def is_constant(self):
        return self.total_degree <= 0

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self._terms() == other._terms()

    def __hash__(self):
        return hash(self._terms())

    def _terms(self):
        return tuple(
            (c, i, j)
            for i, row in enumerate(self.coeffs)
            for j, c in enumerate(row)
            if c
        )

    def __repr__(self):
        ts = self._terms()
        if not ts:
            return "BiPoly(0)"
        parts = []
        for c, i, j in ts:
            term = str(c)
            if i:
                term += f"*s^{i}"
            if j:
                term += f"*t^{j}"
            parts.append(term)
        return "BiPoly(" + " + ".join(parts) + ")"

    # -- ring operations ----------------------------------------------

    def __neg__(self):
        return BiPoly(tuple(tuple(-c for c in row) for row in self.coeffs))

    def __add__(self, other):
        rows = max(len(self.coeffs), len(other.coeffs))
        cols = max(
            len(self.coeffs[0]) if self.coeffs else 0,
            len(other.coeffs[0]) if other.coeffs else 0,
        )
        grid = [[0] * cols for _ in range(rows)]
        for src in (self.coeffs, other.coeffs):
            for i, row in enumerate(src):
                for j, c in enumerate(row):
                    grid[i][j] += c
        return BiPoly(grid)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return BiPoly(
                tuple(tuple(c * other for c in row) for row in self.coeffs)
            )
        a, b = self._terms(), other._terms()
        if not a or not b:
            return BiPoly(())
        rows = max(i for _, i, _ in a) + max(i for _, i, _ in b) + 1
        cols = max(j for _, _, j in a) + max(j for _, _, j in b) + 1
        grid = [[0] * cols for _ in range(rows)]
        for ca, ia, ja in a:
            for cb, ib, jb in b:
                grid[ia + ib][ja + jb] += ca * cb
        return BiPoly(grid)

    __rmul__ = __mul__

    # -- views and substitution ---------------------------------------

    def coeffs_in_t(self):
        """View as a polynomial in t: list of UniPoly-in-s coefficients."""
        dt = self.degree_t
        out = []
        for j in range(dt + 1):
            out.append(UniPoly(tuple(row[j] for row in self.coeffs)))
        while out and out[-1].is_zero():
            out.pop()
        return out

    def coeffs_in_s(self):
        """View as a polynomial in s: list of UniPoly-in-t coefficients."""
        return [UniPoly(row) for row in self.coeffs]

    @staticmethod
    def from_coeffs_in_t(cs):
        """Inverse of coeffs_in_t."""
        cs = list(cs)
        while cs and cs[-1].is_zero():
            cs.pop()
        if not cs:
            return BiPoly(())
        rows = max(c.degree for c in cs) + 1
        grid = [[0] * len(cs) for _ in range(rows)]
        for j, c in enumerate(cs):
            for i, v in enumerate(c.coeffs):
                grid[i][j] = v
        return BiPoly(grid)

    @staticmethod
    def from_coeffs_in_s(cs):
        cs = list(cs)
        while cs and cs[-1].is_zero():
            cs.pop()
        return BiPoly(tuple(c.coeffs for c in cs))

    def swap_vars(self):
        return BiPoly.from_coeffs_in_s(self.coeffs_in_t())

    def subs_s_int(self, v):
        """Substitute an integer for s; UniPoly in t."""
        acc = UniPoly.zero()
        power = 1
        for row in self.coeffs:
            acc = acc + power * UniPoly(row)
            power *= v
        return acc

    def subs_t_int(self, v):
        return self.swap_vars().subs_s_int(v)

    def eval_fraction(self, sv, tv):
        sv, tv = Fraction(sv), Fraction(tv)
        acc = Fraction(0)
        for row in reversed(self.coeffs):
            racc = Fraction(0)
            for c in reversed(row):
                racc = racc * tv + c
            acc = acc * sv + racc
        return acc

    def subs_t_rational_cleared(self, num: UniPoly, den: UniPoly):
        """Substitute t = num(s)/den(s); returns den^deg_t * result in s."""
        cs = self.coeffs_in_t()
        d = len(cs) - 1
        acc = UniPoly.zero()
        num_pow = UniPoly.one()
        den_pows = [UniPoly.one()]
        for _ in range(max(d, 0)):
            den_pows.append(den_pows[-1] * den)
        for k, c in enumerate(cs):
            acc = acc + c * num_pow * den_pows[d - k]
            if k < d:
                num_pow = num_pow * num
        return acc

    def content_biv(self):
        return _igcd_many(abs(c) for c, _, _ in self._terms())

    def primitive_biv(self):
        c = self.content_biv()
        if c <= 1:
            return self
        return BiPoly(
            tuple(tuple(v // c for v in row) for row in self.coeffs)
        )

    def normalized(self):
        """Primitive, with positive leading term in (deg_s, deg_t) lex order."""
        p = self.primitive_biv()
        ts = p._terms()
        if not ts:
            return p
        lead = max(ts, key=lambda cij: (cij[1], cij[2]))
        return -p if lead[0] < 0 else p


# ---------------------------------------------------------------------------
# polynomials in one variable with UniPoly coefficients (for elimination)
# ---------------------------------------------------------------------------


def _pp_trim(cs):
    cs = list(cs)
    while cs and cs[-1].is_zero():
        cs.pop()
    return cs


def _pp_degree(cs):
    return len(cs) - 1


def _pp_lc(cs):
    return cs[-1] if cs else UniPoly.zero()


def _pp_scale(cs, k: UniPoly):
    return _pp_trim([c * k for c in cs])


def _pp_sub(a, b):
    out = list(a) + [UniPoly.zero()] * max(len(b) - len(a), 0)
    for i, c in enumerate(b):
        out[i] = out[i] - c
    return _pp_trim(out)


def _pp_prem(a, b):
    """Pseudo-remainder of UniPoly-coefficient polynomials."""
    da, db = _pp_degree(a), _pp_degree(b)
    if db < 0:
        raise ZeroDivisionError("pseudo-remainder by zero")
    if da < db:
        return list(a)
    rem = list(a)
    blc = _pp_lc(b)
    for k in range(da - db, -1, -1):
        rem_deg = len(rem) - 1
        if rem_deg != k + db:
            rem = [c * blc for c in rem]
            continue
        head = rem[-1]
        rem = [c * blc for c in rem[:-1]]
        for i in range(db):
            rem[k + i] = rem[k + i] - head * b[i]
        rem = _pp_trim(rem)
    return rem


def _pp_exact_div_scalar(cs, k: UniPoly):
    return [exact_divide(c, k) for c in cs]


def subresultant_chain_pp(P, Q):
    """Full subresultant chain of two UniPoly-coefficient polynomials.

    P, Q are lists of UniPoly (ascending degree in the eliminated
    variable) with deg P >= deg Q >= 0.  Returns a list `chain` with
    chain[j] = S_j (a list of UniPoly) for j = 0 .. deg Q - 1; unset
    entries are the zero polynomial.  chain[0] holds the resultant.
    """
    P = _pp_trim(P)
    Q = _pp_trim(Q)
    n, m = _pp_degree(P), _pp_degree(Q)
    if n < m or m < 0:
        raise DomainError("subresultant chain requires deg P >= deg Q >= 0")
    chain = [[] for _ in range(max(m, 1))]
    if m == 0:
        # res(P, c) = c^deg(P)
        chain[0] = [_pp_lc(Q) ** n] if n > 0 else [UniPoly.one()]
        return chain
    s = _pp_lc(Q) ** (n - m)
    A = list(Q)
    sign = -1 if (n - m + 1) % 2 else 1
    B = _pp_scale(_pp_prem(P, Q), UniPoly.constant(sign))
    while True:
        d = _pp_degree(A)
        e = _pp_degree(B)
        if not B:
            break
        if d - 1 < len(chain):
            chain[d - 1] = list(B)
        delta = d - e
        if delta > 1:
            # Lazard correction: C = (lc(B)/s)^(delta-1) * B
            num = _pp_lc(B)
            C = list(B)
            for _ in range(delta - 1):
                C = _pp_exact_div_scalar(_pp_scale(C, num), s)
            if 0 <= e < len(chain):
                chain[e] = list(C)
        else:
            C = list(B)
        if e <= 0:
            break
        divisor = (s ** delta) * _pp_lc(A)
        sign = -1 if (delta + 1) % 2 else 1
        B = _pp_exact_div_scalar(
            _pp_scale(_pp_prem(A, B), UniPoly.constant(sign)), divisor
        )
        A = C
        s = _pp_lc(A)
    return chain


def _bipoly_to_pp(f: BiPoly, eliminate: str):
    if eliminate == "t":
        return f.coeffs_in_t()
    if eliminate == "s":
        return f.coeffs_in_s()
    raise DomainError(f"unknown variable {eliminate!r}")


def _pp_to_bipoly(cs, eliminate: str):
    if eliminate == "t":
        return BiPoly.from_coeffs_in_t(cs)
    return BiPoly.from_coeffs_in_s(cs)


def subresultant_sequence(f: BiPoly, g: BiPoly, eliminate: str = "t"):
    """Subresultant chain as BiPoly, ascending index; entry 0 is the resultant.

    The chain is taken with respect to the eliminated variable, with
    coefficients in the surviving one.  If deg f < deg g the arguments
    are swapped internally and the resultant sign adjusted.
    """
    F = _pp_trim(_bipoly_to_pp(f, eliminate))
    G = _pp_trim(_bipoly_to_pp(g, eliminate))
    if not F or not G:
        raise DomainError("subresultants of a zero polynomial")
    swap_sign = 1
    if _pp_degree(F) < _pp_degree(G):
        F, G = G, F
        if (_pp_degree(F) * _pp_degree(G)) % 2:
            swap_sign = -1
    chain = subresultant_chain_pp(F, G)
    out = [_pp_to_bipoly(cs, eliminate) for cs in chain]
    if swap_sign < 0 and out and not out[0].is_zero():
        out[0] = -out[0]
    return out


def resultant_biv(f: BiPoly, g: BiPoly, eliminate: str = "t") -> UniPoly:
    """Resultant with respect to one variable; UniPoly in the other."""
    chain = subresultant_sequence(f, g, eliminate)
    r = chain[0]
    if r.is_zero():
        return UniPoly.zero()
    cs = r.coeffs_in_t() if eliminate == "t" else r.coeffs_in_s()
    # r is free of the eliminated variable by construction
    return cs[0] if cs else UniPoly.zero()


def principal_subresultant_coeffs(f: BiPoly, g: BiPoly, eliminate: str = "t"):
    """sres_j coefficients (UniPoly in the surviving variable), j ascending."""
    F = _pp_trim(_bipoly_to_pp(f, eliminate))
    G = _pp_trim(_bipoly_to_pp(g, eliminate))
    if _pp_degree(F) < _pp_degree(G):
        F, G = G, F
    chain = subresultant_chain_pp(F, G)
    out = []
    for j, cs in enumerate(chain):
        if _pp_degree(cs) == j:
            out.append(cs[j])
        else:
            out.append(UniPoly.zero())
    return out


# ---------------------------------------------------------------------------
# bivariate gcd
# ---------------------------------------------------------------------------


def gcd_biv(f: BiPoly, g: BiPoly) -> BiPoly:
    """Primitive-PRS gcd of two bivariate integer polynomials."""
    if f.is_zero():
        return g.normalized()
    if g.is_zero():
        return f.normalized()
    # work as polynomials in s over Z[t]
    A = _pp_trim(f.coeffs_in_s())
    B = _pp_trim(g.coeffs_in_s())
    cont_a = gcd_uni_many([c for c in A])
    cont_b = gcd_uni_many([c for c in B])
    cont = gcd_uni(cont_a, cont_b)
    A = _pp_exact_div_scalar(A, cont_a)
    B = _pp_exact_div_scalar(B, cont_b)
    if _pp_degree(A) < _pp_degree(B):
        A, B = B, A
    while B:
        R = _pp_prem(A, B)
        if R:
            rc = gcd_uni_many(R)
            R = _pp_exact_div_scalar(R, rc)
        A, B = B, R
    ac = gcd_uni_many(A)
    A = _pp_exact_div_scalar(A, ac)
    return (BiPoly.from_coeffs_in_s(A) * BiPoly.from_uni_t(cont)).normalized()


def _divides_biv(g: BiPoly, f: BiPoly):
    if g.is_zero():
        return f.is_zero()
    d = gcd_biv(g, f)
    # g divides f iff gcd(g, f) == g up to sign/content of a primitive pair
    return d == g.normalized()


def gcd_biv_many(fs, mode="deterministic", seed=0) -> BiPoly:
    """gcd of a family of bivariate polynomials (chained or Las Vegas)."""
    fs = [f for f in fs]
    if not fs:
        raise DomainError("empty gcd input")
    nonzero = [f for f in fs if not f.is_zero()]
    if not nonzero:
        raise DomainError("gcd of all-zero family")
    if len(nonzero) == 1:
        return nonzero[0].normalized()
    if mode == "deterministic":
        g = nonzero[0]
        for f in nonzero[1:]:
            g = gcd_biv(g, f)
            if g.is_constant():
                break
        return g.normalized()
    if mode != "las_vegas":
        raise DomainError(f"unknown gcd mode {mode!r}")
    d = max(max(f.bidegree) for f in nonzero)
    rng = random.Random(seed)
    f1, rest = nonzero[0], nonzero[1:]
    for _ in range(64):
        comb = rest[0]
        for f in rest[1:]:
            comb = comb + rng.randint(1, 4 * max(d, 1)) * f
        g = gcd_biv(f1, comb).normalized()
        if all(_divides_biv(g, f) for f in nonzero):
            if g == gcd_biv_many(nonzero, mode="deterministic"):
                return g
    raise DomainError("las_vegas gcd failed to verify within retry budget")


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------


class RationalFunction:
    """Reduced quotient of two integer polynomials."""

    __slots__ = ("num", "den")

    def __init__(self, num: UniPoly, den: UniPoly, reduce=True):
        if den.is_zero():
            raise DomainError("zero denominator")
        if reduce:
            g = gcd_uni(num, den)
            if g.degree >= 1 or g.content() > 1:
                num = exact_divide(num, g)
                den = exact_divide(den, g)
            if den.lc < 0:
                num, den = -num, -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, RationalFunction)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def is_constant(self):
        return self.num.degree <= 0 and self.den.degree <= 0

    @property
    def degree(self):
        return max(self.num.degree, self.den.degree)

    def eval_fraction(self, v):
        d = self.den.eval_fraction(v)
        if d == 0:
            raise ZeroDivisionError(f"pole at {v}")
        return self.num.eval_fraction(v) / d

    def derivative_num(self):
        """Numerator of the derivative: p'q - pq' (denominator is q^2)."""
        p, q = self.num, self.den
        return p.derivative() * q - p * q.derivative()

    def compose(self, rnum: UniPoly, rden: UniPoly) -> "RationalFunction":
        """Substitute t = rnum/rden."""
        d = self.degree
        pn = compose_rational(self.num, rnum, rden)
        qn = compose_rational(self.den, rnum, rden)
        # both were cleared by rden^deg; rebalance to a common power
        dp, dq = self.num.degree, self.den.degree
        if dp < d:
            pn = pn * rden ** (d - dp)
        if dq < d:
            qn = qn * rden ** (d - dq)
        return RationalFunction(pn, qn)
