"""Exact solver for bivariate integer polynomial systems.

A separating linear form u = s + alpha*t rotates the system; the rotated
pair is eliminated with subresultants, yielding a rational univariate
representation (RUR): a polynomial chi(T) plus coordinate maps
r_s/r_I, r_t/r_I that put the roots of chi in bijection with the system
solutions.  Overdetermined systems are cut down by gcds of univariate
residuals, and every representation is certified symbolically before use.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .polyarith import (
    BiPoly,
    DomainError,
    UniPoly,
    gcd_biv,
    gcd_uni,
    gcd_uni_many,
    principal_subresultant_coeffs,
    resultant_biv,
    squarefree_part,
    subresultant_sequence,
)
from . import realalg
from .realalg import ComplexAlgebraic, RealAlgebraic


# ---------------------------------------------------------------------------
# rational polynomial helpers (Fraction coefficient lists)
# ---------------------------------------------------------------------------


def _q(f: UniPoly):
    return [Fraction(c) for c in f.coeffs]


def _q_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _q_add(a, b):
    out = list(a) + [Fraction(0)] * max(len(b) - len(a), 0)
    for i, c in enumerate(b):
        out[i] += c
    return _q_trim(out)


def _q_neg(a):
    return [-c for c in a]


def _q_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _q_trim(out)


def _q_divmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    quo = [Fraction(0)] * max(len(rem) - len(b) + 1, 0)
    db = len(b) - 1
    while len(rem) - 1 >= db and any(rem):
        rem = _q_trim(rem)
        if len(rem) - 1 < db:
            break
        k = len(rem) - 1 - db
        q = rem[-1] / b[-1]
        quo[k] = q
        for i, c in enumerate(b):
            rem[k + i] -= q * c
        rem.pop()
    return quo, _q_trim(rem)


def _q_mod(a, b):
    return _q_divmod(a, b)[1]


def _q_gcd(a, b):
    a, b = _q_trim(a), _q_trim(b)
    while b:
        a, b = b, _q_mod(a, b)
    if a:
        lc = a[-1]
        a = [c / lc for c in a]
    return a


def _q_invmod(a, m):
    """Inverse of a modulo m over Q (extended Euclid)."""
    r0, r1 = _q_trim(m), _q_trim(a)
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, r = _q_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _q_add(s0, _q_neg(_q_mul(q, s1)))
    if len(r0) != 1:
        raise DomainError("element not invertible in quotient ring")
    inv = [c / r0[0] for c in s0]
    return _q_mod(inv, m)


def _q_to_unipoly_cleared(a):
    """Scale a Fraction list to a primitive integer UniPoly (positive lc)."""
    a = _q_trim(a)
    if not a:
        return UniPoly.zero()
    import math

    den = math.lcm(*[c.denominator for c in a])
    ints = [int(c * den) for c in a]
    return UniPoly(ints).normalized()


def _unipoly_pair_clear(polys):
    """Clear a family of Fraction lists by one common factor, to UniPoly."""
    import math

    den = 1
    for a in polys:
        for c in a:
            den = math.lcm(den, c.denominator)
    out = [UniPoly([int(c * den) for c in a]) for a in polys]
    g = 0
    for p in out:
        g = math.gcd(g, p.content())
    if g > 1:
        from .polyarith import exact_divide

        out = [
            UniPoly([c // g for c in p.coeffs]) for p in out
        ]
    return out


# ---------------------------------------------------------------------------
# data types
# ---------------------------------------------------------------------------


class SeparatingForm:
    """The linear form s + alpha*t, certified to separate specific systems."""

    __slots__ = ("alpha",)

    def __init__(self, alpha: int):
        object.__setattr__(self, "alpha", int(alpha))

    def __setattr__(self, name, value):
        raise AttributeError("SeparatingForm is immutable")

    def __repr__(self):
        return f"SeparatingForm(s + {self.alpha}*t)"


class RUR:
    """chi(T) with coordinate maps T -> (r_s/r_I, r_t/r_I)."""

    __slots__ = ("chi", "r_s", "r_t", "r_I", "alpha", "chi_multiplicity_profile")

    def __init__(self, chi, r_s, r_t, r_I, alpha, profile=()):
        object.__setattr__(self, "chi", chi)
        object.__setattr__(self, "r_s", r_s)
        object.__setattr__(self, "r_t", r_t)
        object.__setattr__(self, "r_I", r_I)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "chi_multiplicity_profile", tuple(profile))

    def __setattr__(self, name, value):
        raise AttributeError("RUR is immutable")

    def __repr__(self):
        return f"RUR(deg chi = {self.chi.degree}, alpha = {self.alpha})"


class SolutionPair:
    """One solution (s, t) of a bivariate system, with its RUR root."""

    __slots__ = ("s", "t", "rur_root", "s_is_real", "t_is_real", "conjugate_index")

    def __init__(self, s, t, rur_root, s_is_real, t_is_real, conjugate_index=None):
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "rur_root", rur_root)
        object.__setattr__(self, "s_is_real", s_is_real)
        object.__setattr__(self, "t_is_real", t_is_real)
        object.__setattr__(self, "conjugate_index", conjugate_index)

    def __setattr__(self, name, value):
        if name == "conjugate_index":
            object.__setattr__(self, name, value)
            return
        raise AttributeError("SolutionPair is immutable")

    @property
    def is_real(self):
        return self.s_is_real and self.t_is_real

    def __repr__(self):
        kind = "real" if self.is_real else "complex"
        return f"SolutionPair({kind}, s={self.s!r}, t={self.t!r})"


class SolutionSet:
    """All solutions of a system plus the resultant eliminating s."""

    __slots__ = ("pairs", "resultant_Rs")

    def __init__(self, pairs, resultant_Rs):
        object.__setattr__(self, "pairs", tuple(pairs))
        object.__setattr__(self, "resultant_Rs", resultant_Rs)

    def __setattr__(self, name, value):
        raise AttributeError("SolutionSet is immutable")

    def real_pairs(self):
        return [p for p in self.pairs if p.is_real]

    def __repr__(self):
        return f"SolutionSet({len(self.pairs)} pairs)"


# ---------------------------------------------------------------------------
# rotation and triangular decomposition
# ---------------------------------------------------------------------------


def rotate_system(f: BiPoly, g: BiPoly, alpha: int):
    """Substitute s = u - alpha*t; returns polynomials in (u, t)."""
    return _rotate_one(f, alpha), _rotate_one(g, alpha)


def _rotate_one(f: BiPoly, alpha: int) -> BiPoly:
    # s -> s - alpha*t in the (s, t) grid
    out = BiPoly.zero()
    sub = BiPoly.from_terms([(1, 1, 0), (-alpha, 0, 1)])  # s - alpha t
    pw = BiPoly.constant(1)
    cs = f.coeffs_in_s()
    for k, c in enumerate(cs):
        out = out + pw * BiPoly.from_uni_t(c)
        if k < len(cs) - 1:
            pw = pw * sub
    return out


def triangular_decomposition(f: BiPoly, g: BiPoly):
    """Decompose V(f, g) into components (A_i, S_i) by fiber gcd degree.

    For every root a of A_i, gcd(f(a, .), g(a, .)) equals S_i(a, .) up to
    a constant and has degree exactly i.  The product of the A_i is the
    square-free part of res_t(f, g) up to constant.
    """
    F = f.coeffs_in_t()
    G = g.coeffs_in_t()
    if not F or not G:
        raise DomainError("triangular decomposition of a zero polynomial")
    if len(F) - 1 < len(G) - 1:
        f, g = g, f
    chain = subresultant_sequence(f, g, "t")
    sres = principal_subresultant_coeffs(f, g, "t")
    res = resultant_biv(f, g, "t")
    if res.is_zero():
        raise DomainError("system has a common factor (infinite zero set)")
    gamma = squarefree_part(res)
    m = len(chain)
    out = []
    P = gamma  # roots with fiber degree >= current j
    for j in range(1, m + 1):
        if P.degree < 1:
            break
        if j < m:
            P_next = gcd_uni(P, sres[j]).normalized()
        else:
            P_next = UniPoly.one()
        from .polyarith import exact_divide

        A_j = exact_divide(P, P_next).normalized()
        if A_j.degree >= 1:
            if j < m:
                S_j = chain[j]
            else:
                S_j = min((f, g), key=lambda h: h.degree_t)
            out.append((j, A_j, S_j))
        P = P_next
    return out


# ---------------------------------------------------------------------------
# separating forms
# ---------------------------------------------------------------------------


def _candidate_alphas(bound):
    yield 0
    k = 1
    while k <= bound:
        yield k
        yield -k
        k += 1


def _separates(f: BiPoly, g: BiPoly, alpha: int) -> bool:
    """Certify that s + alpha*t takes distinct values on V(f, g).

    Criterion: in the triangular decomposition of the rotated system,
    every fiber polynomial restricted to its A_j is a perfect j-th power
    of a linear factor, i.e. each u-fiber holds exactly one t value.
    """
    fr, gr = rotate_system(f, g, alpha)
    if not gcd_biv(fr, gr).is_constant():
        raise DomainError("system has infinitely many solutions")
    try:
        comps = triangular_decomposition(fr, gr)
    except DomainError:
        return False
    for j, A_j, S_j in comps:
        if j == 1:
            continue
        if not _fiber_is_power_of_linear(A_j, S_j, j):
            return False
    return True


def _fiber_is_power_of_linear(A: UniPoly, S: BiPoly, j: int) -> bool:
    """Check S(u, t) = lc(u) * (t - w(u))^j modulo A(u)."""
    cs = S.coeffs_in_t()
    if len(cs) - 1 != j:
        return False
    m = _q(A)
    lead = _q_mod(_q(cs[j]), m)
    if not lead:
        return False
    try:
        inv_lead = _q_invmod(lead, m)
    except DomainError:
        return False
    # w = -S_{j-1} / (j * S_j) mod A
    w = _q_mod(
        _q_mul([Fraction(-1, j)], _q_mul(_q(cs[j - 1]), inv_lead)), m
    )
    # compare S with lc * (t - w)^j coefficientwise mod A
    # binomial: coeff of t^k is lc * C(j,k) * (-w)^(j-k)
    from math import comb

    neg_w = _q_neg(w)
    pw = [Fraction(1)]
    expected = [None] * (j + 1)
    for i in range(j + 1):
        k = j - i
        expected[k] = _q_mod(_q_mul([Fraction(comb(j, k))], _q_mul(lead, pw)), m)
        pw = _q_mod(_q_mul(pw, neg_w), m)
    for k in range(j + 1):
        actual = _q_mod(_q(cs[k]), m)
        if _q_trim(_q_add(actual, _q_neg(expected[k]))) != []:
            return False
    return True


def find_separating_form(systems, seed=0, randomized=False) -> SeparatingForm:
    """One alpha valid for every listed bivariate pair, certified per pair."""
    systems = list(systems)
    if not systems:
        raise DomainError("no systems given")
    delta = 1
    for f, g in systems:
        if gcd_biv(f, g).total_degree >= 1:
            raise DomainError(
                f"pair with a common factor (infinitely many solutions): "
                f"{f!r}, {g!r}"
            )
        delta = max(delta, *f.bidegree, *g.bidegree)
    n = max(len(systems) + 1, 2)
    bound = 2 * n * delta ** 4
    if randomized:
        rng = random.Random(seed)
        cands = (rng.randint(-bound, bound) for _ in range(4 * bound + 8))
    else:
        cands = _candidate_alphas(bound)
    for alpha in cands:
        if all(_separates(f, g, alpha) for f, g in systems):
            return SeparatingForm(alpha)
    raise DomainError("no separating form found within the certified bound")


# ---------------------------------------------------------------------------
# RUR construction
# ---------------------------------------------------------------------------


def rur_pair(f: BiPoly, g: BiPoly, form: SeparatingForm) -> RUR:
    """RUR of V(f, g) for a separating form (certified; raises on failure)."""
    alpha = form.alpha
    fr, gr = rotate_system(f, g, alpha)
    if not gcd_biv(fr, gr).is_constant():
        raise DomainError("system has infinitely many solutions")
    res = resultant_biv(fr, gr, "t")
    if res.is_zero():
        raise DomainError("vanishing resultant after rotation")
    comps = triangular_decomposition(fr, gr)
    chi = squarefree_part(res)
    # per-component t-coordinate: w_j(u) = -S_{j-1}/(j S_j) mod A_j, then CRT
    m_full = _q(chi)
    r_t = _crt_combine(
        [(A, _component_t_map(A, S, j)) for j, A, S in comps], m_full
    )
    # t = r_t mod chi; s = u - alpha * t
    u_poly = [Fraction(0), Fraction(1)]
    r_s = _q_mod(_q_add(u_poly, _q_mul([Fraction(-alpha)], r_t)), m_full)
    chi_p, r_s_p, r_t_p, r_I_p = _clear_rur(m_full, r_s, r_t)
    profile = tuple(
        (gmul, e) for gmul, e in _multiplicity_profile(res)
    )
    rur = RUR(chi_p, r_s_p, r_t_p, r_I_p, alpha, profile)
    if not certify_rur(rur, [f, g]):
        raise DomainError("RUR certification failed (non-separating form?)")
    return rur


def _component_t_map(A: UniPoly, S: BiPoly, j: int):
    m = _q(A)
    cs = S.coeffs_in_t()
    lead = _q_mod(_q(cs[j]), m)
    inv_lead = _q_invmod(lead, m)
    return _q_mod(
        _q_mul([Fraction(-1, j)], _q_mul(_q(cs[j - 1]), inv_lead)), m
    )


def _crt_combine(parts, m_full):
    """Combine residues w_i mod A_i into one polynomial mod prod A_i."""
    if not parts:
        return []
    acc = []
    for A, w in parts:
        mi = _q(A)
        # rest = m_full / mi
        rest, rem = _q_divmod(m_full, mi)
        if rem:
            raise DomainError("CRT moduli do not divide the full modulus")
        inv = _q_invmod(_q_mod(rest, mi), mi)
        term = _q_mul(_q_mul(w, inv), rest)
        acc = _q_add(acc, _q_mod(term, m_full))
    return _q_mod(acc, m_full)


def _clear_rur(chi_q, r_s_q, r_t_q):
    """Scale the Q-coefficient RUR to integer polynomials with common r_I."""
    import math

    den = 1
    for a in (r_s_q, r_t_q):
        for c in a:
            den = math.lcm(den, c.denominator)
    chi = _q_to_unipoly_cleared(chi_q)
    r_s = UniPoly([int(c * den) for c in r_s_q])
    r_t = UniPoly([int(c * den) for c in r_t_q])
    r_I = UniPoly.constant(den)
    g = math.gcd(math.gcd(r_s.content(), r_t.content()), den)
    if g > 1:
        r_s = UniPoly([c // g for c in r_s.coeffs])
        r_t = UniPoly([c // g for c in r_t.coeffs])
        r_I = UniPoly.constant(den // g)
    return chi, r_s, r_t, r_I


def _multiplicity_profile(res: UniPoly):
    from .polyarith import squarefree_decomposition

    return squarefree_decomposition(res)


def certify_rur(rur: RUR, hs) -> bool:
    """True iff every h(r_s/r_I, r_t/r_I) vanishes identically modulo chi."""
    for h in hs:
        if not _residual_numerator_mod_chi_is_zero(rur, h):
            return False
    return True


def residual_numerator_mod_chi(rur: RUR, h: BiPoly) -> UniPoly:
    """Numerator of h(r_s/r_I, r_t/r_I) reduced modulo chi, cleared to Z."""
    m = _q(rur.chi)
    rs = _q_mod(_q(rur.r_s), m)
    rt = _q_mod(_q(rur.r_t), m)
    rI = _q_mod(_q(rur.r_I), m)
    terms = h._terms()
    D = max((i + j for _, i, j in terms), default=0)
    # precompute powers mod chi
    rs_pows = _pow_table(rs, max((i for _, i, _ in terms), default=0), m)
    rt_pows = _pow_table(rt, max((j for _, _, j in terms), default=0), m)
    rI_pows = _pow_table(rI, D, m)
    acc = []
    for c, i, j in terms:
        part = _q_mul([Fraction(c)], _q_mul(rs_pows[i], rt_pows[j]))
        part = _q_mod(_q_mul(part, rI_pows[D - i - j]), m)
        acc = _q_mod(_q_add(acc, part), m)
    return _q_to_unipoly_cleared(acc)


def _residual_numerator_mod_chi_is_zero(rur, h):
    return residual_numerator_mod_chi(rur, h).is_zero()


def _pow_table(base, upto, m):
    out = [[Fraction(1)]]
    for _ in range(upto):
        out.append(_q_mod(_q_mul(out[-1], base), m))
    return out


# ---------------------------------------------------------------------------
# overdetermined systems
# ---------------------------------------------------------------------------


def solve_overdetermined(hs, seed=0, with_solutions=True):
    """RUR and solution set of {h_1 = ... = h_n = 0} (finite zero set).

    chi of the final RUR is a gcd of univariate polynomials: the base
    resultant of the leading pair together with, per extra equation, its
    residual and the cross differences of its pair-RUR coordinate maps
    against the base maps.
    """
    hs = [h for h in hs if not h.is_zero()]
    if len(hs) < 2:
        raise DomainError("need at least two nonzero equations")
    base_idx, partner = _choose_base_pair(hs, seed)
    h1 = hs[base_idx]
    others = [h for k, h in enumerate(hs) if k != base_idx and h is not partner]
    coprime = [g for g in others if gcd_biv(h1, g).is_constant()]
    form = find_separating_form(
        [(h1, partner)] + [(h1, g) for g in coprime], seed=seed
    )
    base_rur = rur_pair(h1, partner, form)
    polys = [base_rur.chi]
    for g in others:
        # chi roots must map to points killed by every extra equation
        polys.append(residual_numerator_mod_chi(base_rur, g))
        if g in coprime:
            r_g = rur_pair(h1, g, form)
            polys.append(r_g.chi)
            # same chi root must name the same point in both pair RURs
            polys.append(base_rur.r_s * r_g.r_I - r_g.r_s * base_rur.r_I)
            polys.append(base_rur.r_t * r_g.r_I - r_g.r_t * base_rur.r_I)
    chi = gcd_uni_many([p for p in polys if not p.is_zero()])
    chi = squarefree_part(chi)
    Rs = resultant_biv(h1, partner, "t")  # roots: s-coordinates
    Rt = resultant_biv(h1, partner, "s")  # roots: t-coordinates
    if chi.degree < 1:
        rur = RUR(UniPoly.one(), base_rur.r_s, base_rur.r_t, base_rur.r_I,
                  base_rur.alpha, base_rur.chi_multiplicity_profile)
        return rur, SolutionSet([], Rs)
    # chi divides the base chi, so the base coordinate maps stay valid
    rur = RUR(
        chi,
        base_rur.r_s,
        base_rur.r_t,
        base_rur.r_I,
        base_rur.alpha,
        base_rur.chi_multiplicity_profile,
    )
    if not certify_rur(rur, hs):
        raise DomainError("final RUR failed certification")
    if not with_solutions:
        return rur, SolutionSet([], Rs)
    pairs = assemble_solutions(rur, Rs, Rt)
    return rur, SolutionSet(pairs, Rs)


def _choose_base_pair(hs, seed):
    """Pick the base pair: lowest-degree h with a coprime partner."""
    order = sorted(range(len(hs)), key=lambda k: (hs[k].total_degree, k))
    for i in order:
        for j in order:
            if i == j:
                continue
            if gcd_biv(hs[i], hs[j]).is_constant():
                return i, hs[j]
    raise DomainError("no coprime pair among the equations")


# ---------------------------------------------------------------------------
# solution assembly (dual representation with R_s root boxes)
# ---------------------------------------------------------------------------


def assemble_solutions(rur: RUR, Rs: UniPoly, Rt: UniPoly):
    """SolutionPairs for every root of chi, real and complex.

    Coordinates are identified with root boxes of the two elimination
    resultants: Rs (roots = s-coordinates) and Rt (roots = t-coordinates).
    """
    chi = rur.chi
    if chi.degree < 1:
        return []
    if Rs.degree < 1 or Rt.degree < 1:
        raise DomainError("degenerate resultant for coordinate representation")
    s_roots = realalg.isolate_complex_roots(squarefree_part(Rs))
    t_roots = realalg.isolate_complex_roots(squarefree_part(Rt))
    chi_roots = realalg.isolate_complex_roots(chi)
    pairs = []
    for root in chi_roots:
        s_val = _locate(rur, root, s_roots, which="s")
        t_val = _locate(rur, root, t_roots, which="t")
        pairs.append(
            SolutionPair(
                s_val,
                t_val,
                root,
                s_is_real=s_val.is_real,
                t_is_real=t_val.is_real,
            )
        )
    _link_conjugates(pairs)
    return pairs


def _locate(rur, root, coord_roots, which):
    from .cintervals import CInterval, RInterval, eval_poly_cint

    num = rur.r_s if which == "s" else rur.r_t
    den = rur.r_I
    cands = list(coord_roots)
    cur = root
    for _round in range(256):
        if cur.is_real:
            box = CInterval(RInterval(cur.re_lo, cur.re_hi), RInterval(0))
        else:
            box = CInterval(
                RInterval(cur.re_lo, cur.re_hi), RInterval(cur.im_lo, cur.im_hi)
            )
        try:
            val = eval_poly_cint(num, box) / eval_poly_cint(den, box)
        except ZeroDivisionError:
            cur = cur.refined_halved()
            continue
        alive = [c for c in cands if _box_meets(val, c)]
        if len(alive) == 1:
            target = alive[0]
            # refine the matched coordinate box until it fits inside val's scope
            return target
        if not alive:
            raise DomainError("coordinate mapping missed every resultant root")
        cands = alive
        cur = cur.refined_halved()
        cands = [c.refined_halved() for c in cands]
    raise DomainError("coordinate identification did not converge")


def _box_meets(val, croot):
    if croot.is_real:
        return (
            val.re.lo <= croot.re_hi
            and croot.re_lo <= val.re.hi
            and val.im.contains_zero()
        )
    return (
        val.re.lo <= croot.re_hi
        and croot.re_lo <= val.re.hi
        and val.im.lo <= croot.im_hi
        and croot.im_lo <= val.im.hi
    )


def _link_conjugates(pairs):
    for i, p in enumerate(pairs):
        if p.conjugate_index is not None or p.is_real:
            continue
        for j in range(len(pairs)):
            if j == i:
                continue
            q = pairs[j]
            if q.conjugate_index is not None:
                continue
            if _is_conjugate(p, q):
                p.conjugate_index = j
                q.conjugate_index = i
                break


def _is_conjugate(p, q):
    return _conj_coord(p.s, q.s) and _conj_coord(p.t, q.t)


def _conj_coord(a, b):
    if a.is_real and b.is_real:
        return not (a.re_hi < b.re_lo or b.re_hi < a.re_lo)
    if a.is_real or b.is_real:
        return False
    ca, cb = a, b
    for _ in range(64):
        sep_re = ca.re_hi < cb.re_lo or cb.re_hi < ca.re_lo
        mirror = not (ca.im_hi < -cb.im_hi or -cb.im_lo < ca.im_lo)
        if sep_re:
            return False
        if not mirror:
            return False
        if ca.width() < Fraction(1, 1 << 20):
            return True
        ca, cb = ca.refined_halved(), cb.refined_halved()
    return True


# ---------------------------------------------------------------------------
# real-only convenience used by complex isolation (no recursion into boxes)
# ---------------------------------------------------------------------------


def real_solutions_of_pair(f: BiPoly, g: BiPoly, seed=0):
    """Real solutions (x, y) of {f = g = 0} as RealAlgebraic pairs.

    Self-contained path used by complex root isolation: only real roots
    of chi are mapped, through exact interval evaluation against the
    real roots of the two elimination resultants.
    """
    form = find_separating_form([(f, g)], seed=seed)
    rur = rur_pair(f, g, form)
    res_x = resultant_biv(f, g, "t")  # roots: x-coordinates
    res_y = resultant_biv(f, g, "s")  # roots: y-coordinates
    x_roots = realalg.isolate_real_roots(res_x)
    y_roots = realalg.isolate_real_roots(res_y)
    out = []
    for root in realalg.isolate_real_roots(rur.chi):
        x = _match_real_coordinate(rur, root, x_roots, which="s")
        y = _match_real_coordinate(rur, root, y_roots, which="t")
        out.append((x, y))
    return out


def _match_real_coordinate(rur, root: RealAlgebraic, coord_roots, which):
    from .cintervals import RInterval, eval_poly_rint

    num = rur.r_s if which == "s" else rur.r_t
    den = rur.r_I
    cands = list(coord_roots)
    cur = root
    for _round in range(512):
        box = RInterval(cur.lo, cur.hi)
        try:
            val = eval_poly_rint(num, box) / eval_poly_rint(den, box)
        except ZeroDivisionError:
            cur = cur.refined_halved()
            continue
        alive = [
            c for c in cands if not (val.hi < c.lo or c.hi < val.lo)
        ]
        if len(alive) == 1:
            return alive[0]
        if not alive:
            raise DomainError("real coordinate mapping missed every root")
        cands = [c.refined_halved() for c in alive]
        cur = cur.refined_halved()
    raise DomainError("real coordinate identification did not converge")
