"""Exact arithmetic on the rational function field Q(t), viewed as the
function field of the projective line.

Places are the closed points of P^1 over the rationals: a rational point
t = a,, the point at infinity, or a conjugacy class of geometric points cut
out by a monic irreducible polynomial of degree >= 2.  All counting is
weighted by the geometric degree of the place, so every quantity here agrees
with its value over the algebraic closure.

The genus is fixed at 0 throughout.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from . import intpoly

Q = Fraction


def _as_q(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


# ---------------------------------------------------------------------------
# univariate polynomials over Q


class UniPoly:
    """Dense univariate polynomial in t with Fraction coefficients.

    Coefficients are stored little-endian with no trailing zeros; the zero
    polynomial is the empty tuple and its degree is the sentinel None.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [_as_q(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, *a):
        raise AttributeError("UniPoly is immutable")

    @staticmethod
    def const(x) -> "UniPoly":
        return UniPoly((_as_q(x),))

    @property
    def degree(self):
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("UniPoly", self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return UniPoly(out)

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-x for x in self.coeffs))

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [Q(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return UniPoly(out)

    def scale(self, c) -> "UniPoly":
        c = _as_q(c)
        if c == 0:
            return UniPoly()
        return UniPoly(tuple(x * c for x in self.coeffs))

    def __pow__(self, e: int) -> "UniPoly":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out = UniPoly.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        d = other.coeffs
        dd = len(d) - 1
        inv = 1 / d[-1]
        q = [Q(0)] * max(0, len(r) - dd)
        for k in range(len(r) - 1, dd - 1, -1):
            c = r[k] * inv
            if c:
                q[k - dd] = c
                for i in range(dd):
                    r[k - dd + i] -= c * d[i]
            r[k] = Q(0)
        return UniPoly(q), UniPoly(r[:dd] if dd else ())

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return self.divmod(other)[0]

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return self.divmod(other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero:
            raise ValueError("division is not exact")
        return q

    def monic(self) -> "UniPoly":
        if self.is_zero:
            raise ValueError("cannot normalize the zero polynomial")
        return self.scale(1 / self.leading)

    def derivative(self) -> "UniPoly":
        return UniPoly(tuple(i * x for i, x in enumerate(self.coeffs) if i))

    def evaluate(self, a) -> Fraction:
        a = _as_q(a)
        acc = Q(0)
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    # -- integer kernel bridge ------------------------------------------------

    def _zlift(self) -> list[int]:
        """Integer polynomial with the same roots (denominators cleared)."""
        if not self.coeffs:
            return []
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        return [int(c * den) for c in self.coeffs]

    def gcd(self, other: "UniPoly") -> "UniPoly":
        """Monic gcd over Q via the modular integer kernel."""
        if self.is_zero:
            return other.monic() if other else UniPoly()
        if other.is_zero:
            return self.monic()
        g = intpoly.gcd(self._zlift(), other._zlift())
        return UniPoly(tuple(Q(x) for x in g)).monic()

    def lcm(self, other: "UniPoly") -> "UniPoly":
        if self.is_zero or other.is_zero:
            return UniPoly()
        return (self * other).exact_div(self.gcd(other)).monic()

    def valuation(self, q: "UniPoly") -> int:
        """Multiplicity of the monic factor q (degree >= 1) in self."""
        if self.is_zero:
            raise ValueError("valuation of zero undefined")
        v = 0
        f = self
        while f.degree is not None and f.degree >= q.degree:
            quo, rem = f.divmod(q)
            if not rem.is_zero:
                break
            f = quo
            v += 1
        return v

    def root_multiplicity(self, a) -> int:
        a = _as_q(a)
        v = 0
        f = self
        while not f.is_zero and f.evaluate(a) == 0:
            f = f.exact_div(UniPoly((-a, Q(1))))
            v += 1
        return v

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        bits = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "t" if i == 1 else f"t^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not bits:
                bits.append(body if sign == "+" else f"-{body}")
            else:
                bits.append(f" {sign} {body}")
        return "".join(bits)

    def __repr__(self):
        return f"UniPoly({self})"


T = UniPoly((0, 1))
ONE = UniPoly.const(1)


def squarefree_decomposition(f: UniPoly) -> tuple[tuple[UniPoly, int], ...]:
    """Yun's algorithm: f = c * prod(part_i ** i) with the parts monic,
    squarefree and pairwise coprime; returned in increasing exponent order.
    The constant c is f's leading coefficient.
    """
    if f.is_zero:
        raise ValueError("cannot decompose the zero polynomial")
    if f.degree == 0:
        return ()
    f = f.monic()
    df = f.derivative()
    g = f.gcd(df)
    if g.degree == 0:
        return ((f, 1),)
    parts = []
    w = f.exact_div(g)
    z = df.exact_div(g) - w.derivative()
    i = 1
    while w.degree and w.degree > 0:
        a = w.gcd(z)
        if a.degree and a.degree > 0:
            parts.append((a, i))
            w = w.exact_div(a)
            z = z.exact_div(a)
        z = z - w.derivative()
        i += 1
    return tuple(parts)


# ---------------------------------------------------------------------------
# sympy bridge (irreducible factorization only)


@functools.lru_cache(maxsize=8192)
def _factor_irreducible(coeffs: tuple) -> tuple[tuple[tuple, int], ...]:
    """Irreducible monic factors of the polynomial with the given coefficient
    tuple, as (coefficient tuple, exponent) pairs.  Backed by sympy."""
    import sympy

    ts = sympy.Symbol("t")
    expr = sum(
        sympy.Rational(c.numerator, c.denominator) * ts**i
        for i, c in enumerate(coeffs)
    )
    _, factors = sympy.Poly(expr, ts, domain="QQ").factor_list()
    out = []
    for poly, e in factors:
        cs = [Q(c.p, c.q) for c in poly.all_coeffs()][::-1]
        mon = UniPoly(cs).monic()
        out.append((mon.coeffs, int(e)))
    return tuple(out)


def irreducible_factors(f: UniPoly) -> tuple[tuple[UniPoly, int], ...]:
    """Monic irreducible factorization of a nonzero polynomial over Q."""
    if f.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    if f.degree == 0:
        return ()
    return tuple(
        (UniPoly(c), e) for c, e in _factor_irreducible(f.coeffs)
    )


def is_irreducible(f: UniPoly) -> bool:
    if f.is_zero or f.degree == 0:
        return False
    fac = _factor_irreducible(f.coeffs)
    return len(fac) == 1 and fac[0][1] == 1 and len(fac[0][0]) == len(f.coeffs)


# ---------------------------------------------------------------------------
# rational functions


class RatFun:
    """Element of Q(t) as a coprime numerator/denominator pair, the
    denominator monic.  The zero function is allowed (num = 0, den = 1)."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = num if isinstance(num, UniPoly) else UniPoly.const(num)
        if den is None:
            den = ONE
        elif not isinstance(den, UniPoly):
            den = UniPoly.const(den)
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            num, den = UniPoly(), ONE
        else:
            g = num.gcd(den)
            if g.degree and g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
            lead = den.leading
            if lead != 1:
                num = num.scale(1 / lead)
                den = den.scale(1 / lead)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("RatFun is immutable")

    @staticmethod
    def const(x) -> "RatFun":
        return RatFun(UniPoly.const(x))

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_constant(self) -> bool:
        return self.num.is_zero or (self.num.degree == 0 and self.den.degree == 0)

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError("not a constant")
        return Q(0) if self.is_zero else self.num.coeffs[0]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFun.const(other)
        return (
            isinstance(other, RatFun)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash(("RatFun", self.num.coeffs, self.den.coeffs))

    def __bool__(self):
        return not self.is_zero

    def _coerce(self, other) -> "RatFun":
        if isinstance(other, RatFun):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFun.const(other)
        if isinstance(other, UniPoly):
            return RatFun(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by the zero function")
        return RatFun(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def inverse(self) -> "RatFun":
        if self.is_zero:
            raise ZeroDivisionError("inverse of the zero function")
        return RatFun(self.den, self.num)

    def __pow__(self, e: int):
        if e == 0:
            return RatFun.const(1)
        if e < 0:
            return self.inverse() ** (-e)
        return RatFun(self.num**e, self.den**e)

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFun({self})"


RF_T = RatFun(T)


# ---------------------------------------------------------------------------
# places of P^1 over Q


class Place:
    """Closed point of P^1 over Q: a rational point t = a, the point at
    infinity, or the conjugacy class of the roots of a monic irreducible
    polynomial of degree >= 2.  The geometric degree weights all counting."""

    __slots__ = ("kind", "a", "q")

    RATIONAL = "rational"
    INFINITY = "infinity"
    CONJUGACY = "conjugacy"

    def __init__(self, kind, a=None, q=None, _checked=False):
        if kind == Place.RATIONAL:
            a = _as_q(a)
        elif kind == Place.INFINITY:
            pass
        elif kind == Place.CONJUGACY:
            if not isinstance(q, UniPoly) or q.is_zero or q.degree < 2:
                raise ValueError("conjugacy class needs a polynomial of degree >= 2")
            q = q.monic()
            if not _checked and not is_irreducible(q):
                raise ValueError(f"{q} is not irreducible over the rationals")
        else:
            raise ValueError(f"unknown place kind {kind!r}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "q", q)

    def __setattr__(self, *a):
        raise AttributeError("Place is immutable")

    @staticmethod
    def rational(a) -> "Place":
        return Place(Place.RATIONAL, a=a)

    @staticmethod
    def infinity() -> "Place":
        return Place(Place.INFINITY)

    @staticmethod
    def conjugacy(q: UniPoly) -> "Place":
        return Place(Place.CONJUGACY, q=q)

    @property
    def degree(self) -> int:
        if self.kind == Place.CONJUGACY:
            return self.q.degree
        return 1

    @property
    def is_infinite(self) -> bool:
        return self.kind == Place.INFINITY

    def minimal_poly(self):
        """Monic polynomial vanishing on the place, or None at infinity."""
        if self.kind == Place.RATIONAL:
            return UniPoly((-self.a, Q(1)))
        if self.kind == Place.CONJUGACY:
            return self.q
        return None

    def sort_key(self):
        # Rationals by value, then conjugacy classes by (degree, coefficients),
        # infinity last.
        if self.kind == Place.RATIONAL:
            return (0, self.a, ())
        if self.kind == Place.CONJUGACY:
            return (1, Q(self.q.degree), tuple(reversed(self.q.coeffs)))
        return (2, Q(0), ())

    def to_text(self) -> str:
        """Text encoding: "inf" | the value a | "irr:<monic polynomial>"."""
        if self.kind == Place.INFINITY:
            return "inf"
        if self.kind == Place.RATIONAL:
            return str(self.a)
        return f"irr:{self.q}"

    def __eq__(self, other):
        return (
            isinstance(other, Place)
            and self.kind == other.kind
            and self.a == other.a
            and self.q == other.q
        )

    def __hash__(self):
        return hash(("Place", self.kind, self.a, self.q))

    def __repr__(self):
        return f"Place({self.to_text()})"


INF = Place.infinity()


class PlaceSet:
    """Finite set of places of P^1 (genus 0); |S| means the degree-weighted
    geometric cardinality."""

    __slots__ = ("places",)

    genus = 0

    def __init__(self, places: Iterable[Place] = ()):
        ps = frozenset(places)
        for p in ps:
            if not isinstance(p, Place):
                raise TypeError("PlaceSet takes Place members")
        object.__setattr__(self, "places", ps)

    def __setattr__(self, *a):
        raise AttributeError("PlaceSet is immutable")

    @property
    def size_geometric(self) -> int:
        return sum(p.degree for p in self.places)

    def __contains__(self, p: Place) -> bool:
        return p in self.places

    def __iter__(self) -> Iterator[Place]:
        return iter(self.sorted_places)

    def __len__(self) -> int:
        return len(self.places)

    @property
    def sorted_places(self) -> tuple[Place, ...]:
        return tuple(sorted(self.places, key=Place.sort_key))

    def union(self, other: Iterable[Place]) -> "PlaceSet":
        return PlaceSet(self.places | frozenset(other))

    def finite_places(self) -> tuple[Place, ...]:
        return tuple(p for p in self.sorted_places if not p.is_infinite)

    def __eq__(self, other):
        return isinstance(other, PlaceSet) and self.places == other.places

    def __hash__(self):
        return hash(("PlaceSet", self.places))

    def __repr__(self):
        return "PlaceSet({%s})" % ", ".join(p.to_text() for p in self.sorted_places)


EMPTY_SET = PlaceSet()


def chi_plus(S: PlaceSet) -> int:
    """max{0, 2g - 2 + |S|} with g = 0 and |S| geometric."""
    return max(0, S.size_geometric - 2)


# ---------------------------------------------------------------------------
# valuations, heights, counting


def order_at(f: RatFun, p: Place) -> int:
    """Normalized order of vanishing of f at the place p."""
    if f.is_zero:
        raise ValueError("valuation of zero undefined")
    if p.kind == Place.INFINITY:
        return f.den.degree - f.num.degree
    if p.kind == Place.RATIONAL:
        return f.num.root_multiplicity(p.a) - f.den.root_multiplicity(p.a)
    return f.num.valuation(p.q) - f.den.valuation(p.q)


def height(f: RatFun) -> int:
    """h(f): the total pole degree, equal to the total zero degree; for a
    coprime representation this is max(deg num, deg den)."""
    if f.is_zero:
        raise ValueError("height of zero undefined")
    return max(f.num.degree, f.den.degree)


def projective_height(fs: Sequence[RatFun]) -> int:
    """sum over places of -min_i v_p(f_i), degree-weighted.  Zero entries are
    ignored; the caller passes the full coordinate tuple (e.g. (1, g1, g2))."""
    fs = [f if isinstance(f, RatFun) else RatFun.const(f) for f in fs]
    nz = [f for f in fs if not f.is_zero]
    if not nz:
        raise ValueError("projective height of the zero tuple undefined")
    lden = ONE
    for f in nz:
        lden = lden.lcm(f.den)
    gnum = UniPoly()
    for f in nz:
        gnum = gnum.gcd(f.num)
    finite = lden.degree - gnum.degree
    at_inf = max(f.num.degree - f.den.degree for f in nz)
    return finite + at_inf


def places_of(f: RatFun) -> tuple[tuple[Place, int], ...]:
    """All places where v_p(f) != 0, with their valuations, canonically
    ordered.  Uses irreducible factorization of numerator and denominator."""
    if f.is_zero:
        raise ValueError("valuation of zero undefined")
    vals: dict[Place, int] = {}
    for poly, sign in ((f.num, 1), (f.den, -1)):
        if poly.degree and poly.degree > 0:
            for q, e in irreducible_factors(poly):
                if q.degree == 1:
                    pl = Place.rational(-q.coeffs[0])
                else:
                    pl = Place(Place.CONJUGACY, q=q, _checked=True)
                vals[pl] = vals.get(pl, 0) + sign * e
    v_inf = f.den.degree - f.num.degree
    if v_inf:
        vals[INF] = v_inf
    items = [(p, v) for p, v in vals.items() if v]
    items.sort(key=lambda pv: pv[0].sort_key())
    return tuple(items)


def _s_part_degree(part: UniPoly, S: PlaceSet) -> int:
    """Degree of the factors of a squarefree part supported inside S."""
    deg = 0
    for p in S.finite_places():
        q = p.minimal_poly()
        if p.kind == Place.RATIONAL:
            if part.evaluate(p.a) == 0:
                deg += 1
        else:
            g = part.gcd(q)
            if g.degree == q.degree:
                deg += q.degree
            elif g.degree and g.degree > 0:
                # Unreachable for validated places: irreducibles over Q meet
                # a squarefree part wholly or not at all.
                raise ValueError("place set incompatible with coefficient field")
    return deg


class CountingReport:
    """Zero or pole counting of f outside S, with truncations.

    total is N_{.,S}(f); truncated maps each level m to N^{(m)}_{.,S}(f);
    per_place lists (place, multiplicity) pairs outside S, computed lazily
    because it needs irreducible factorization.
    """

    def __init__(self, total, truncated, pieces, inf_term, s_places):
        self.total = total
        self.truncated = truncated
        self._pieces = pieces          # ((squarefree part, exponent, outside degree), ...)
        self._inf_term = inf_term      # multiplicity at infinity, 0 if excluded
        self._s_places = s_places

    def truncated_at(self, m: int) -> int:
        if m in self.truncated:
            return self.truncated[m]
        return sum(min(m, e) * deg for _, e, deg in self._pieces) + min(
            m, self._inf_term
        )

    @functools.cached_property
    def per_place(self) -> tuple[tuple[Place, int], ...]:
        out = []
        for part, e, _ in self._pieces:
            for q, _unused in irreducible_factors(part):
                if q.degree == 1:
                    pl = Place.rational(-q.coeffs[0])
                else:
                    pl = Place(Place.CONJUGACY, q=q, _checked=True)
                if pl in self._s_places:
                    continue
                out.append((pl, e))
        if self._inf_term:
            out.append((INF, self._inf_term))
        out.sort(key=lambda pv: pv[0].sort_key())
        return tuple(out)

    def __repr__(self):
        return f"CountingReport(total={self.total}, truncated={self.truncated})"


def counting(f: RatFun, S: PlaceSet, mode: str = "zeros", m: int | None = None) -> CountingReport:
    """N_{0,S} / N_{infty,S} with truncated variants, degree-weighted.

    mode is "zeros" or "poles"; m is the truncation level (None computes up
    to the largest multiplicity, so all levels are available)."""
    if f.is_zero:
        raise ValueError("counting of the zero function undefined")
    if mode == "zeros":
        poly, inf_v = f.num, max(0, f.den.degree - f.num.degree)
    elif mode == "poles":
        poly, inf_v = f.den, max(0, f.num.degree - f.den.degree)
    else:
        raise ValueError("mode must be 'zeros' or 'poles'")
    pieces = []
    max_mult = 0
    if poly.degree and poly.degree > 0:
        for part, e in squarefree_decomposition(poly):
            outside = part.degree - _s_part_degree(part, S)
            pieces.append((part, e, outside))
            if outside:
                max_mult = max(max_mult, e)
    inf_term = inf_v if (inf_v and INF not in S) else 0
    max_mult = max(max_mult, inf_term)
    total = sum(e * deg for _, e, deg in pieces) + inf_term
    top = m if m is not None else max(1, max_mult)
    truncated = {
        lvl: sum(min(lvl, e) * deg for _, e, deg in pieces) + min(lvl, inf_term)
        for lvl in range(1, top + 1)
    }
    return CountingReport(total, truncated, tuple(pieces), inf_term, S.places)


def is_s_unit(f: RatFun, S: PlaceSet) -> bool:
    """True iff v_p(f) = 0 for every place p outside S."""
    if f.is_zero:
        raise ValueError("zero is not an S-unit")
    if _strip_s_factors(f.num, S).degree != 0:
        return False
    if _strip_s_factors(f.den, S).degree != 0:
        return False
    if INF not in S and f.num.degree != f.den.degree:
        return False
    return True


def is_s_integer(f: RatFun, S: PlaceSet) -> bool:
    """True iff v_p(f) >= 0 for every place p outside S."""
    if f.is_zero:
        return True
    if _strip_s_factors(f.den, S).degree != 0:
        return False
    if INF not in S and f.num.degree > f.den.degree:
        return False
    return True


def _strip_s_factors(poly: UniPoly, S: PlaceSet) -> UniPoly:
    for p in S.finite_places():
        q = p.minimal_poly()
        while poly.degree >= q.degree:
            quo, rem = poly.divmod(q)
            if not rem.is_zero:
                break
            poly = quo
    return poly


def enlarge_places(gs: Sequence[RatFun], S: PlaceSet) -> PlaceSet:
    """S together with every zero and pole of the g_i; the result makes each
    g_i an S-unit."""
    extra = set()
    for g in gs:
        if g.is_zero:
            raise ValueError("cannot enlarge places for the zero function")
        for p, _ in places_of(g):
            extra.add(p)
    return S.union(extra)
