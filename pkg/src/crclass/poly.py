"""Sparse multivariate polynomials over Q(i) in the intrinsic coordinates.

Variables live in a fixed space determined by the CR dimension n and the
codimension c: slots 0..n-1 are z1..zn, slots n..2n-1 are zb1..zbn (the
formal conjugates), slots 2n..2n+c-1 are u1..uc. zb is a genuine formal
variable; reality of inputs is validated elsewhere, never assumed here.

Terms are kept in a canonical graded-lexicographic order with
z1 < ... < zn < zb1 < ... < zbn < u1 < ... < uc, so equal polynomials are
structurally equal and printing is deterministic.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Literal

from .gaussian import GR_ONE, GaussianRational, gr

Monomial = tuple[int, ...]

VarKind = Literal["z", "zb", "u"]


class ExactDivisionError(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


@dataclass(frozen=True, slots=True)
class VarId:
    """A named variable: kind in {z, zb, u}, 1-based index."""

    kind: VarKind
    index: int

    def __post_init__(self) -> None:
        if self.kind not in ("z", "zb", "u"):
            raise ValueError(f"unknown variable kind {self.kind!r}")
        if self.index < 1:
            raise ValueError("variable index is 1-based")

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"


@dataclass(frozen=True, slots=True)
class VarSpace:
    """The variable universe for one manifold shape (n, c)."""

    n: int
    c: int

    @property
    def nvars(self) -> int:
        return 2 * self.n + self.c

    def slot(self, v: VarId) -> int:
        if v.kind == "z":
            if v.index > self.n:
                raise ValueError(f"variable {v} out of range for n={self.n}")
            return v.index - 1
        if v.kind == "zb":
            if v.index > self.n:
                raise ValueError(f"variable {v} out of range for n={self.n}")
            return self.n + v.index - 1
        if v.index > self.c:
            raise ValueError(f"variable {v} out of range for c={self.c}")
        return 2 * self.n + v.index - 1

    def z_slot(self, i: int) -> int:
        """Slot of z_{i+1}; i is 0-based."""
        if not 0 <= i < self.n:
            raise ValueError(f"z index {i} out of range for n={self.n}")
        return i

    def zb_slot(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise ValueError(f"zb index {i} out of range for n={self.n}")
        return self.n + i

    def u_slot(self, j: int) -> int:
        if not 0 <= j < self.c:
            raise ValueError(f"u index {j} out of range for c={self.c}")
        return 2 * self.n + j

    def conj_slot(self, slot: int) -> int:
        """Slot of the conjugate variable; u-slots are self-conjugate."""
        n = self.n
        if slot < n:
            return slot + n
        if slot < 2 * n:
            return slot - n
        return slot

    def var_name(self, slot: int) -> str:
        n = self.n
        if slot < n:
            return f"z{slot + 1}"
        if slot < 2 * n:
            return f"zb{slot - n + 1}"
        return f"u{slot - 2 * n + 1}"

    def conj_monomial(self, m: Monomial) -> Monomial:
        n = self.n
        return m[n : 2 * n] + m[:n] + m[2 * n :]


def _grlex_key(m: Monomial) -> tuple[int, Monomial]:
    # Later slots are the larger variables, so ties are broken by the
    # reversed exponent vector.
    return (sum(m), m[::-1])


@dataclass(frozen=True, slots=True)
class MultiPoly:
    """Immutable sparse polynomial; terms sorted graded-lex descending."""

    space: VarSpace
    terms: tuple[tuple[Monomial, GaussianRational], ...]

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_map(space: VarSpace, mapping: dict[Monomial, GaussianRational]) -> MultiPoly:
        items = [(m, cf) for m, cf in mapping.items() if not cf.is_zero()]
        items.sort(key=lambda t: _grlex_key(t[0]), reverse=True)
        return MultiPoly(space, tuple(items))

    @staticmethod
    def zero(space: VarSpace) -> MultiPoly:
        return MultiPoly(space, ())

    @staticmethod
    def const(space: VarSpace, value: GaussianRational) -> MultiPoly:
        if value.is_zero():
            return MultiPoly.zero(space)
        return MultiPoly(space, (((0,) * space.nvars, value),))

    @staticmethod
    def one(space: VarSpace) -> MultiPoly:
        return MultiPoly.const(space, GR_ONE)

    @staticmethod
    def variable(space: VarSpace, slot: int) -> MultiPoly:
        m = tuple(1 if i == slot else 0 for i in range(space.nvars))
        return MultiPoly(space, ((m, GR_ONE),))

    @staticmethod
    def monomial(space: VarSpace, m: Monomial, coeff: GaussianRational) -> MultiPoly:
        if coeff.is_zero():
            return MultiPoly.zero(space)
        return MultiPoly(space, ((m, coeff),))

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and sum(self.terms[0][0]) == 0)

    def as_constant(self) -> GaussianRational:
        if self.is_zero():
            return gr(0)
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms[0][1]

    def is_one(self) -> bool:
        return self.is_constant() and not self.is_zero() and self.terms[0][1].is_one()

    # -- leading data ------------------------------------------------------

    def leading_monomial(self) -> Monomial:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading term")
        return self.terms[0][0]

    def leading_coeff(self) -> GaussianRational:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading term")
        return self.terms[0][1]

    def total_degree(self) -> int:
        if self.is_zero():
            return -1
        return max(sum(m) for m, _ in self.terms)

    def degree_in(self, slot: int) -> int:
        if self.is_zero():
            return -1
        return max(m[slot] for m, _ in self.terms)

    # -- arithmetic --------------------------------------------------------

    def _require_same_space(self, other: MultiPoly) -> None:
        if self.space != other.space:
            raise ValueError("mixing polynomials from different variable spaces")

    def __add__(self, other: MultiPoly) -> MultiPoly:
        self._require_same_space(other)
        acc = dict(self.terms)
        for m, cf in other.terms:
            cur = acc.get(m)
            if cur is None:
                acc[m] = cf
            else:
                acc[m] = cur + cf
        return MultiPoly.from_map(self.space, acc)

    def __sub__(self, other: MultiPoly) -> MultiPoly:
        self._require_same_space(other)
        acc = dict(self.terms)
        for m, cf in other.terms:
            cur = acc.get(m)
            if cur is None:
                acc[m] = -cf
            else:
                acc[m] = cur - cf
        return MultiPoly.from_map(self.space, acc)

    def __neg__(self) -> MultiPoly:
        return MultiPoly(self.space, tuple((m, -cf) for m, cf in self.terms))

    def __mul__(self, other: MultiPoly) -> MultiPoly:
        self._require_same_space(other)
        if self.is_zero() or other.is_zero():
            return MultiPoly.zero(self.space)
        acc: dict[Monomial, GaussianRational] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = tuple(a + b for a, b in zip(m1, m2))
                prod = c1 * c2
                cur = acc.get(m)
                if cur is None:
                    acc[m] = prod
                else:
                    acc[m] = cur + prod
        return MultiPoly.from_map(self.space, acc)

    def scale(self, factor: GaussianRational) -> MultiPoly:
        if factor.is_zero():
            return MultiPoly.zero(self.space)
        return MultiPoly(self.space, tuple((m, cf * factor) for m, cf in self.terms))

    def pow(self, e: int) -> MultiPoly:
        if e < 0:
            raise ValueError("negative exponent on a polynomial")
        out = MultiPoly.one(self.space)
        for _ in range(e):
            out = out * self
        return out

    # -- calculus / field structure ---------------------------------------

    def diff(self, slot: int) -> MultiPoly:
        acc: dict[Monomial, GaussianRational] = {}
        for m, cf in self.terms:
            e = m[slot]
            if e == 0:
                continue
            mm = m[:slot] + (e - 1,) + m[slot + 1 :]
            acc[mm] = cf * gr(e)
        return MultiPoly.from_map(self.space, acc)

    def conj(self) -> MultiPoly:
        acc = {
            self.space.conj_monomial(m): cf.conj() for m, cf in self.terms
        }
        return MultiPoly.from_map(self.space, acc)

    def eval(self, values: tuple[GaussianRational, ...]) -> GaussianRational:
        if len(values) != self.space.nvars:
            raise ValueError("wrong number of point coordinates")
        total = gr(0)
        for m, cf in self.terms:
            term = cf
            for slot, e in enumerate(m):
                for _ in range(e):
                    term = term * values[slot]
            total = total + term
        return total

    def monic(self) -> MultiPoly:
        if self.is_zero():
            return self
        lc = self.leading_coeff()
        if lc.is_one():
            return self
        inv = lc.inverse()
        return self.scale(inv)

    def divexact(self, divisor: MultiPoly) -> MultiPoly:
        """Exact division; raises ExactDivisionError if it does not divide."""
        self._require_same_space(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return self
        if divisor.is_constant():
            return self.scale(divisor.as_constant().inverse())
        rem = dict(self.terms)
        out: dict[Monomial, GaussianRational] = {}
        g_lm = divisor.leading_monomial()
        g_lc = divisor.leading_coeff()
        while rem:
            m = max(rem, key=_grlex_key)
            cm = rem[m]
            qm = tuple(a - b for a, b in zip(m, g_lm))
            if any(e < 0 for e in qm):
                raise ExactDivisionError("polynomial does not divide exactly")
            qc = cm / g_lc
            out[qm] = qc
            for dm, dc in divisor.terms:
                mm = tuple(a + b for a, b in zip(qm, dm))
                cur = rem.get(mm)
                val = (cur if cur is not None else gr(0)) - qc * dc
                if val.is_zero():
                    rem.pop(mm, None)
                else:
                    rem[mm] = val
        return MultiPoly.from_map(self.space, out)

    def __str__(self) -> str:
        from .parser import poly_to_text

        return poly_to_text(self)


# -- gcd via content / primitive-part recursion ----------------------------
#
# The base field Q(i) makes contents of constant polynomials units, so the
# recursion bottoms out at 1. Results are monic, so gcd output is canonical.


def _monomial_content(p: MultiPoly) -> Monomial:
    mins = list(p.terms[0][0])
    for m, _ in p.terms[1:]:
        for i, e in enumerate(m):
            if e < mins[i]:
                mins[i] = e
    return tuple(mins)


def _shift_down(p: MultiPoly, m: Monomial) -> MultiPoly:
    if all(e == 0 for e in m):
        return p
    return MultiPoly(
        p.space,
        tuple((tuple(a - b for a, b in zip(mm, m)), cf) for mm, cf in p.terms),
    )


def _univariate_view(p: MultiPoly, slot: int) -> dict[int, MultiPoly]:
    """Coefficients of p seen as a polynomial in one slot."""
    buckets: dict[int, dict[Monomial, GaussianRational]] = {}
    for m, cf in p.terms:
        e = m[slot]
        mm = m[:slot] + (0,) + m[slot + 1 :]
        buckets.setdefault(e, {})[mm] = cf
    return {e: MultiPoly.from_map(p.space, b) for e, b in buckets.items()}


def _from_univariate(space: VarSpace, slot: int, coeffs: dict[int, MultiPoly]) -> MultiPoly:
    acc: dict[Monomial, GaussianRational] = {}
    for e, cp in coeffs.items():
        for m, cf in cp.terms:
            mm = m[:slot] + (e,) + m[slot + 1 :]
            acc[mm] = cf
    return MultiPoly.from_map(space, acc)


def _content_in(p: MultiPoly, slot: int) -> MultiPoly:
    coeffs = sorted(_univariate_view(p, slot).values(), key=lambda q: len(q.terms))
    acc = coeffs[0]
    for q in coeffs[1:]:
        if acc.is_constant():
            break
        acc = poly_gcd(acc, q)
    if acc.is_constant():
        return MultiPoly.one(p.space)
    return acc


# -- coprimality certificate via univariate images --------------------------
#
# For one slot s, deg_s gcd(f, g) <= deg gcd(f(r), g(r)) whenever the leading
# s-coefficient of f survives the evaluation r of the other slots: leading
# s-coefficients multiply, so the gcd's leading coefficient divides f's and
# survives too, and gcd(f, g)(r) keeps its s-degree while dividing the image
# gcd. A zero bound for every shared slot proves the gcd is constant, which
# skips the pseudo-remainder recursion entirely.

_CERT_ATTEMPTS = 3


def _image_coeffs(
    p: MultiPoly, slot: int, vals: tuple[int, ...]
) -> dict[int, GaussianRational]:
    out: dict[int, GaussianRational] = {}
    for m, cf in p.terms:
        k = 1
        for s, e in enumerate(m):
            if s != slot and e:
                k *= vals[s] ** e
        if k != 1:
            cf = GaussianRational(cf.re * k, cf.im * k)
        e = m[slot]
        cur = out.get(e)
        nxt = cf if cur is None else cur + cf
        if nxt.is_zero():
            out.pop(e, None)
        else:
            out[e] = nxt
    return out


def _univ_gcd_degree(
    a: dict[int, GaussianRational], b: dict[int, GaussianRational]
) -> int:
    if not a:
        return max(b) if b else -1
    while b:
        if max(a) < max(b):
            a, b = b, a
        db = max(b)
        lb = b[db]
        bm = {e: c / lb for e, c in b.items()}
        r = dict(a)
        while r and max(r) >= db:
            dr = max(r)
            lr = r.pop(dr)
            for e, c in bm.items():
                if e == db:
                    continue
                shift = e + dr - db
                cur = r.get(shift)
                nxt = -(lr * c) if cur is None else cur - lr * c
                if nxt.is_zero():
                    r.pop(shift, None)
                else:
                    r[shift] = nxt
        a, b = bm, r
    return max(a)


def _coprimality_scan(f: MultiPoly, g: MultiPoly) -> tuple[bool, int | None]:
    """Certify gcd(f, g) constant, or suggest a pseudo-remainder pivot.

    Returns (True, None) when every shared slot provably contributes degree
    zero to the gcd; otherwise (False, slot) pointing at the slot whose
    remainder chain looks shortest.
    """
    space = f.space
    shared = [
        s for s in range(space.nvars) if f.degree_in(s) > 0 and g.degree_in(s) > 0
    ]
    if not shared:
        return True, None
    point_sets: list[tuple[int, ...]] = []
    for attempt in range(_CERT_ATTEMPTS):
        rnd = random.Random((attempt << 8) | 0xA5)
        point_sets.append(tuple(rnd.randrange(2, 20) for _ in range(space.nvars)))
    best: tuple[int, int, int] | None = None
    all_zero = True
    for s in shared:
        df = f.degree_in(s)
        dg = g.degree_in(s)
        bound = min(df, dg)
        for vals in point_sets:
            fi = _image_coeffs(f, s, vals)
            if not fi or max(fi) != df:
                continue
            d = _univ_gcd_degree(fi, _image_coeffs(g, s, vals))
            if d < bound:
                bound = d
            if bound == 0:
                break
        if bound > 0:
            all_zero = False
            key = (min(df, dg) - bound, min(df, dg), s)
            if best is None or key < best:
                best = key
    if all_zero:
        return True, None
    pivot = best[2] if best is not None else shared[-1]
    return False, pivot


# The pseudo-remainder loop squares coefficient sizes at every step, so it
# runs on raw Gaussian-integer pairs: no per-operation Fraction
# normalisation, and the common integer content is stripped after each step.
# Pseudo-remainders are only used up to a scalar, which makes both the
# denominator clearing on entry and the content stripping harmless.

ICoeff = tuple[int, int]
IPoly = dict[Monomial, ICoeff]


def _int_layers(p: MultiPoly, slot: int) -> dict[int, IPoly]:
    den = 1
    for _, cf in p.terms:
        den_c = cf.re.denominator * cf.im.denominator // math.gcd(
            cf.re.denominator, cf.im.denominator
        )
        den = den * den_c // math.gcd(den, den_c)
    out: dict[int, IPoly] = {}
    for m, cf in p.terms:
        re = cf.re * den
        im = cf.im * den
        mm = m[:slot] + (0,) + m[slot + 1 :]
        out.setdefault(m[slot], {})[mm] = (re.numerator, im.numerator)
    return out


def _imul(a: IPoly, b: IPoly) -> IPoly:
    out: IPoly = {}
    for m1, (x1, y1) in a.items():
        for m2, (x2, y2) in b.items():
            m = tuple(i + j for i, j in zip(m1, m2))
            re = x1 * x2 - y1 * y2
            im = x1 * y2 + y1 * x2
            cur = out.get(m)
            if cur is not None:
                re += cur[0]
                im += cur[1]
            if re or im:
                out[m] = (re, im)
            else:
                out.pop(m, None)
    return out


def _istrip(layers: dict[int, IPoly]) -> dict[int, IPoly]:
    g = 0
    for cp in layers.values():
        for re, im in cp.values():
            g = math.gcd(g, re, im)
            if g == 1:
                return layers
    if g <= 1:
        return layers
    return {
        e: {m: (re // g, im // g) for m, (re, im) in cp.items()}
        for e, cp in layers.items()
    }


def _prem(f: MultiPoly, g: MultiPoly, slot: int) -> MultiPoly:
    """Pseudo-remainder of f by g in the given slot, up to a nonzero scalar."""
    space = f.space
    fu = _int_layers(f, slot)
    gu = _int_layers(g, slot)
    dg = max(gu)
    lcg = gu[dg]
    while fu:
        df = max(fu)
        if df < dg:
            break
        lf = fu.pop(df)
        new: dict[int, IPoly] = {}
        for e, cp in fu.items():
            new[e] = _imul(cp, lcg)
        for e, cp in gu.items():
            if e == dg:
                continue
            shift = e + df - dg
            sub = _imul(cp, lf)
            cur = new.get(shift)
            if cur is None:
                new[shift] = {m: (-re, -im) for m, (re, im) in sub.items()}
            else:
                merged = dict(cur)
                for m, (re, im) in sub.items():
                    old = merged.get(m)
                    nre = -re if old is None else old[0] - re
                    nim = -im if old is None else old[1] - im
                    if nre or nim:
                        merged[m] = (nre, nim)
                    else:
                        merged.pop(m, None)
                new[shift] = merged
        fu = _istrip({e: cp for e, cp in new.items() if cp})
    acc: dict[Monomial, GaussianRational] = {}
    for e, cp in fu.items():
        for mm, (re, im) in cp.items():
            m = mm[:slot] + (e,) + mm[slot + 1 :]
            acc[m] = GaussianRational(Fraction(re), Fraction(im))
    return MultiPoly.from_map(space, acc)


def _primitive_part(p: MultiPoly, slot: int) -> MultiPoly:
    mono = _monomial_content(p)
    p = _shift_down(p, mono)
    cont = _content_in(p, slot)
    if not cont.is_one():
        p = p.divexact(cont)
    return p


@lru_cache(maxsize=8192)
def poly_gcd(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Monic gcd over Q(i); gcd(0, 0) = 0."""
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    if f.is_constant() or g.is_constant():
        return MultiPoly.one(f.space)
    mf = _monomial_content(f)
    mg = _monomial_content(g)
    common = tuple(min(a, b) for a, b in zip(mf, mg))
    f = _shift_down(f, mf)
    g = _shift_down(g, mg)
    shared = MultiPoly.monomial(f.space, common, GR_ONE)
    if f.is_constant() or g.is_constant():
        return shared
    coprime, pivot = _coprimality_scan(f, g)
    if coprime:
        return shared
    core = _gcd_primitive(f, g, pivot)
    return (shared * core).monic()


def _gcd_primitive(f: MultiPoly, g: MultiPoly, slot: int) -> MultiPoly:
    space = f.space
    cf = _content_in(f, slot)
    cg = _content_in(g, slot)
    c = poly_gcd(cf, cg)
    big = f.divexact(cf) if not cf.is_one() else f
    small = g.divexact(cg) if not cg.is_one() else g
    if big.degree_in(slot) < small.degree_in(slot):
        big, small = small, big
    while True:
        r = _prem(big, small, slot)
        if r.is_zero():
            prim = small
            break
        if r.degree_in(slot) == 0:
            prim = MultiPoly.one(space)
            break
        big, small = small, _primitive_part(r, slot)
    return c * prim


def poly_lcm(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    if f.is_zero() or g.is_zero():
        return MultiPoly.zero(f.space)
    return (f * g.divexact(poly_gcd(f, g))).monic()
