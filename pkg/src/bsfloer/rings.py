"""Exact coefficient arithmetic.

Every ring used anywhere in the package lives here: the integers, integral
group rings of finitely generated abelian groups H = Z^r x Z/m (Laurent
polynomials in t1..tr with an order-m generator s), cyclotomic fields
Q(zeta_d), Laurent rings over those fields, and the full rational group
algebra of H presented componentwise by characters of the torsion part.
Also: Smith normal form over Z, exact determinants (cofactor for small
matrices, fraction-free Bareiss above that), and unit-orbit normalization
used for all "equal up to a unit" comparisons.

No floating point anywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd


# ---------------------------------------------------------------------------
# groups and group elements


@dataclass(frozen=True)
class GroupDescriptor:
    """H = Z^free_rank x Z/torsion_order, torsion_order 1 meaning torsion-free."""

    free_rank: int
    torsion_order: int = 1

    def __post_init__(self) -> None:
        if self.free_rank < 0:
            raise ValueError("free_rank must be >= 0")
        if self.torsion_order < 1:
            raise ValueError("torsion_order must be >= 1")

    def identity(self) -> "HWeight":
        return HWeight((0,) * self.free_rank, 0)

    def make_weight(self, free=(), tors: int = 0) -> "HWeight":
        free = tuple(int(e) for e in free)
        if len(free) != self.free_rank:
            raise ValueError("free exponent vector has wrong length")
        return HWeight(free, int(tors) % self.torsion_order)

    def mul_weight(self, a: "HWeight", b: "HWeight") -> "HWeight":
        return self.make_weight(
            tuple(x + y for x, y in zip(a.free, b.free)), a.tors + b.tors
        )

    def inv_weight(self, a: "HWeight") -> "HWeight":
        return self.make_weight(tuple(-x for x in a.free), -a.tors)


@dataclass(frozen=True)
class HWeight:
    """A single group element of H, written multiplicatively in the rings."""

    free: tuple
    tors: int = 0

    def monomial(self) -> tuple:
        return (*self.free, self.tors)

    def is_identity(self) -> bool:
        return self.tors == 0 and all(e == 0 for e in self.free)


def divisors(m: int):
    return [d for d in range(1, m + 1) if m % d == 0]


# ---------------------------------------------------------------------------
# ring interface

# Elements are plain data (ints, dicts, tuples); the ring object owns the
# operations.  Mixed-ring use is rejected by shape checks where cheap.


class Ring:
    name = "ring"

    def zero(self):
        raise NotImplementedError

    def one(self):
        return self.from_int(1)

    def from_int(self, n: int):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        raise NotImplementedError

    def is_zero(self, a) -> bool:
        raise NotImplementedError

    def eq(self, a, b) -> bool:
        raise NotImplementedError

    def exact_div(self, a, b):
        """a / b when the quotient lies in the ring; raises otherwise."""
        raise NotImplementedError

    def to_str(self, a) -> str:
        raise NotImplementedError

    def unit_normalize(self, a):
        """Split a = unit * canonical with canonical a fixed orbit representative.

        Zero maps to (one, zero).  The unit group depends on the ring: {+1,-1}
        over Z, +-(monomials) over group rings with integer coefficients,
        scalar * monomial over field-coefficient Laurent rings.
        """
        raise NotImplementedError

    def unit_inv(self, u):
        raise NotImplementedError

    def sum(self, elems):
        acc = self.zero()
        for e in elems:
            acc = self.add(acc, e)
        return acc


class IntegerRing(Ring):
    name = "Z"

    def zero(self):
        return 0

    def from_int(self, n: int):
        return int(n)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_zero(self, a) -> bool:
        return a == 0

    def eq(self, a, b) -> bool:
        return a == b

    def exact_div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError("inexact integer division")
        return q

    def to_str(self, a) -> str:
        return str(a)

    def unit_normalize(self, a):
        if a == 0:
            return 1, 0
        return (1, a) if a > 0 else (-1, -a)

    def unit_inv(self, u):
        if u not in (1, -1):
            raise ArithmeticError("not a unit of Z")
        return u


class RationalRing(Ring):
    name = "Q"

    def zero(self):
        return Fraction(0)

    def from_int(self, n: int):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_zero(self, a) -> bool:
        return a == 0

    def eq(self, a, b) -> bool:
        return a == b

    def exact_div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return Fraction(a) / b

    def to_str(self, a) -> str:
        return str(a)

    def unit_normalize(self, a):
        if a == 0:
            return Fraction(1), Fraction(0)
        return Fraction(a), Fraction(1)

    def unit_inv(self, u):
        if u == 0:
            raise ArithmeticError("zero is not a unit")
        return 1 / Fraction(u)


ZZ = IntegerRing()
QQ = RationalRing()


# ---------------------------------------------------------------------------
# cyclotomic polynomials and fields


def _poly_trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _poly_trim(out)


def _poly_divexact(a, b):
    """Quotient of integer polynomials when b divides a exactly."""
    a = list(a)
    b = _poly_trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [0] * max(len(a) - len(b) + 1, 0)
    while _poly_trim(a) and len(a) >= len(b):
        if a[-1] % b[-1]:
            raise ArithmeticError("inexact polynomial division")
        c = a[-1] // b[-1]
        d = len(a) - len(b)
        q[d] = c
        for i, y in enumerate(b):
            a[d + i] -= c * y
        _poly_trim(a)
    if _poly_trim(a):
        raise ArithmeticError("inexact polynomial division")
    return _poly_trim(q)


_CYCLO_CACHE: dict = {}


def cyclotomic_polynomial(d: int) -> list:
    """Coefficients of Phi_d, ascending degree, computed by exact division
    of x^d - 1 by the Phi_e for proper divisors e of d."""
    if d < 1:
        raise ValueError("d must be >= 1")
    if d in _CYCLO_CACHE:
        return list(_CYCLO_CACHE[d])
    num = [0] * (d + 1)
    num[0], num[d] = -1, 1
    den = [1]
    for e in divisors(d)[:-1]:
        den = _poly_mul(den, cyclotomic_polynomial(e))
    out = _poly_divexact(num, den)
    _CYCLO_CACHE[d] = list(out)
    return out


class CycloField(Ring):
    """Q(zeta_d) as Q[z]/Phi_d(z); elements are Fraction tuples of length phi(d)."""

    def __init__(self, d: int):
        self.d = d
        self.modulus = [Fraction(c) for c in cyclotomic_polynomial(d)]
        self.degree = len(self.modulus) - 1
        self.name = f"Q(zeta_{d})"

    def zero(self):
        return (Fraction(0),) * self.degree

    def from_int(self, n: int):
        v = [Fraction(0)] * self.degree
        v[0] = Fraction(n)
        return tuple(v)

    def from_fraction(self, q) -> tuple:
        v = [Fraction(0)] * self.degree
        v[0] = Fraction(q)
        return tuple(v)

    def zeta_power(self, k: int):
        """zeta_d^k as a field element."""
        k %= self.d
        poly = [Fraction(0)] * k + [Fraction(1)]
        return self._reduce(poly)

    def _reduce(self, poly) -> tuple:
        poly = list(poly)
        n = self.degree
        while len(poly) > n:
            c = poly.pop()
            if c == 0:
                continue
            d = len(poly) - n
            for i in range(n):
                poly[d + i] -= c * self.modulus[i]
        poly += [Fraction(0)] * (n - len(poly))
        return tuple(poly)

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def mul(self, a, b):
        out = [Fraction(0)] * (2 * self.degree)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return self._reduce(out)

    def is_zero(self, a) -> bool:
        return all(x == 0 for x in a)

    def eq(self, a, b) -> bool:
        return tuple(a) == tuple(b)

    def inv(self, a):
        """Inverse via extended Euclid over Q[x] against Phi_d."""
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        # r0 = Phi_d, r1 = a; track s-coefficients for a only
        r0 = list(self.modulus)
        r1 = _poly_trim([Fraction(x) for x in a])
        s0, s1 = [], [Fraction(1)]
        while r1:
            q, r = _qpoly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _qpoly_sub(s0, _qpoly_mul(q, s1))
        # r0 is the gcd, a nonzero constant since Phi_d is irreducible
        c = r0[0]
        return self._reduce([x / c for x in s0])

    def exact_div(self, a, b):
        return self.mul(a, self.inv(b))

    def to_str(self, a) -> str:
        if self.degree == 1:
            return str(a[0])
        terms = []
        for i, c in enumerate(a):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                z = "z" if i == 1 else f"z^{i}"
                if c == 1:
                    terms.append(z)
                elif c == -1:
                    terms.append(f"-{z}")
                else:
                    terms.append(f"{c}*{z}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    def unit_normalize(self, a):
        if self.is_zero(a):
            return self.one(), self.zero()
        return a, self.one()

    def unit_inv(self, u):
        return self.inv(u)


def _qpoly_divmod(a, b):
    a = [Fraction(x) for x in a]
    b = _poly_trim([Fraction(x) for x in b])
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while _poly_trim(a) and len(a) >= len(b):
        c = a[-1] / b[-1]
        d = len(a) - len(b)
        q[d] = c
        for i, y in enumerate(b):
            a[d + i] -= c * y
        _poly_trim(a)
    return _poly_trim(q), _poly_trim(a)


def _qpoly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _poly_trim(out)


def _qpoly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    for i, y in enumerate(b):
        a[i] -= y
    return _poly_trim(a)


_CYCLO_FIELDS: dict = {}


def cyclo_field(d: int) -> CycloField:
    if d not in _CYCLO_FIELDS:
        _CYCLO_FIELDS[d] = CycloField(d)
    return _CYCLO_FIELDS[d]


# ---------------------------------------------------------------------------
# group rings: Laurent monomials in t1..tr plus a torsion generator s of order m


class GroupRing(Ring):
    """coeff_ring[t1^{\\pm1},...,tr^{\\pm1}] x (Z/m generated by s).

    Elements are dicts mapping monomials (e1,...,er,s) to nonzero coefficients,
    with s reduced into [0, m).  m = 1 gives honest Laurent polynomials; with
    integer coefficients this is Z[G] or Z[H], with cyclotomic coefficients it
    is a character component F[G].
    """

    def __init__(self, free_rank: int, torsion_order: int = 1, coeff_ring: Ring = ZZ):
        self.free_rank = free_rank
        self.torsion_order = torsion_order
        self.coeff = coeff_ring
        self.name = f"GroupRing(r={free_rank},m={torsion_order},{coeff_ring.name})"

    # -- monomials

    def mono(self, free=(), tors: int = 0) -> tuple:
        free = tuple(int(e) for e in free)
        if len(free) != self.free_rank:
            raise ValueError("monomial has wrong free rank")
        return (*free, int(tors) % self.torsion_order)

    def mono_mul(self, g: tuple, h: tuple) -> tuple:
        return self.mono(
            tuple(a + b for a, b in zip(g[:-1], h[:-1])), g[-1] + h[-1]
        )

    def mono_inv(self, g: tuple) -> tuple:
        return self.mono(tuple(-a for a in g[:-1]), -g[-1])

    def monomial(self, g: tuple, c=None):
        c = self.coeff.one() if c is None else c
        if self.coeff.is_zero(c):
            return {}
        return {self.mono(g[:-1], g[-1]): c}

    def from_weight(self, w: HWeight):
        if len(w.free) != self.free_rank:
            raise ValueError("weight has wrong free rank")
        return {self.mono(w.free, w.tors): self.coeff.one()}

    # -- ring ops

    def zero(self):
        return {}

    def from_int(self, n: int):
        c = self.coeff.from_int(n)
        if self.coeff.is_zero(c):
            return {}
        return {self.mono((0,) * self.free_rank, 0): c}

    def _shape_check(self, a) -> None:
        for g in a:
            if len(g) != self.free_rank + 1:
                raise ValueError("element from a different ring")

    def add(self, a, b):
        self._shape_check(a)
        self._shape_check(b)
        out = dict(a)
        for g, c in b.items():
            s = self.coeff.add(out.get(g, self.coeff.zero()), c)
            if self.coeff.is_zero(s):
                out.pop(g, None)
            else:
                out[g] = s
        return out

    def neg(self, a):
        return {g: self.coeff.neg(c) for g, c in a.items()}

    def mul(self, a, b):
        self._shape_check(a)
        self._shape_check(b)
        out: dict = {}
        for g, c in a.items():
            for h, d in b.items():
                k = self.mono_mul(g, h)
                s = self.coeff.add(out.get(k, self.coeff.zero()), self.coeff.mul(c, d))
                if self.coeff.is_zero(s):
                    out.pop(k, None)
                else:
                    out[k] = s
        return out

    def scale(self, c, a):
        return self.mul({self.mono((0,) * self.free_rank, 0): c} if not self.coeff.is_zero(c) else {}, a)

    def is_zero(self, a) -> bool:
        return not a

    def eq(self, a, b) -> bool:
        if len(a) != len(b):
            return False
        return all(g in b and self.coeff.eq(c, b[g]) for g, c in a.items())

    def exact_div(self, a, b):
        """Greedy division by the lex-leading term; exact quotients only.

        Valid whenever the quotient exists in the ring (the only way this is
        called: Bareiss pivots, unit division).  Torsion monomials are not
        ordered compatibly, so division requires m = 1 or b a single monomial.
        """
        if self.is_zero(b):
            raise ZeroDivisionError("division by zero")
        if len(b) == 1:
            (g, c), = b.items()
            gi = self.mono_inv(g)
            out = {}
            for h, d in a.items():
                out[self.mono_mul(h, gi)] = self.coeff.exact_div(d, c)
            return out
        if self.torsion_order != 1:
            raise ArithmeticError("division in a torsion group ring")
        rem = dict(a)
        quot: dict = {}
        bl = max(b)
        bc = b[bl]
        bli = self.mono_inv(bl)
        while rem:
            rl = max(rem)
            qg = self.mono_mul(rl, bli)
            qc = self.coeff.exact_div(rem[rl], bc)
            quot[qg] = qc
            rem = self.sub(rem, self.mul({qg: qc}, b))
            if rem and max(rem) >= rl:
                raise ArithmeticError("inexact division")
        return quot

    # -- printing and parsing

    def _var_names(self):
        return [f"t{i+1}" for i in range(self.free_rank)]

    def mono_str(self, g: tuple) -> str:
        parts = []
        for name, e in zip(self._var_names(), g[:-1]):
            if e == 0:
                continue
            parts.append(name if e == 1 else f"{name}^{e}")
        if g[-1] != 0:
            parts.append("s" if g[-1] == 1 else f"s^{g[-1]}")
        return "*".join(parts) if parts else "1"

    def to_str(self, a) -> str:
        if not a:
            return "0"
        terms = []
        for g in sorted(a):
            c = a[g]
            m = self.mono_str(g)
            cs = self.coeff.to_str(c)
            neg = cs.startswith("-")
            body = cs[1:] if neg else cs
            if " " in cs:
                body = f"({cs})"
                neg = False
            if m != "1":
                body = m if body == "1" else f"{body}*{m}"
            terms.append(("-" if neg else "+", body))
        sign, body = terms[0]
        out = body if sign == "+" else f"-{body}"
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def unit_normalize(self, a):
        if not a:
            return self.from_int(1), {}
        g0 = min(a)
        c0 = a[g0]
        uc, _ = self.coeff.unit_normalize(c0)
        unit = {g0: uc}
        inv = {self.mono_inv(g0): self.coeff.unit_inv(uc)}
        return unit, self.mul(inv, a)

    def unit_inv(self, u):
        if len(u) != 1:
            raise ArithmeticError("not a monomial unit")
        (g, c), = u.items()
        return {self.mono_inv(g): self.coeff.unit_inv(c)}


def augmentation(a) -> int:
    """Sum of the integer coefficients of a Z[H] element."""
    total = 0
    for c in a.values():
        total += c
    return total


# element parsing for the integer-coefficient grammar, e.g. "1 - t1 + t1^2*t2^-1*s"

_TERM_RE = re.compile(r"^(?P<coeff>\d+)?(?P<rest>(\*?[a-z]\w*(\^-?\d+)?)*)$")
_FACTOR_RE = re.compile(r"^(?P<name>[a-z]\w*?)(\^(?P<exp>-?\d+))?$")


def parse_element(ring: GroupRing, text: str):
    """Parse the textual Laurent form into a GroupRing element."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty element string")
    # split into signed terms
    terms = []
    sign = 1
    buf = ""
    for i, ch in enumerate(s):
        # a sign splits terms unless it is an exponent sign as in t1^-2
        if ch in "+-" and i != 0 and s[i - 1] != "^":
            terms.append((sign, buf))
            sign = 1 if ch == "+" else -1
            buf = ""
        elif ch in "+-" and i == 0:
            sign = 1 if ch == "+" else -1
        else:
            buf += ch
    terms.append((sign, buf))
    out = ring.zero()
    for sg, term in terms:
        if not term:
            raise ValueError(f"malformed term in {text!r}")
        m = _TERM_RE.match(term)
        if not m:
            raise ValueError(f"malformed term {term!r}")
        coeff = int(m.group("coeff")) if m.group("coeff") else 1
        free = [0] * ring.free_rank
        tors = 0
        rest = m.group("rest") or ""
        for fac in filter(None, rest.split("*")):
            fm = _FACTOR_RE.match(fac)
            if not fm:
                raise ValueError(f"malformed factor {fac!r}")
            name = fm.group("name")
            exp = int(fm.group("exp")) if fm.group("exp") else 1
            if name == "s":
                if ring.torsion_order == 1:
                    raise ValueError("torsion generator used in a torsion-free ring")
                tors += exp
            elif name.startswith("t"):
                idx = int(name[1:]) - 1
                if not 0 <= idx < ring.free_rank:
                    raise ValueError(f"unknown variable {name!r}")
                free[idx] += exp
            else:
                raise ValueError(f"unknown variable {name!r}")
        out = ring.add(out, {ring.mono(free, tors): ring.coeff.from_int(sg * coeff)})
    return out


def parse_weight(group: GroupDescriptor, text: str) -> HWeight:
    """A weight is a single monomial with coefficient +1 (default "1")."""
    ring = GroupRing(group.free_rank, group.torsion_order)
    elem = parse_element(ring, text)
    if len(elem) != 1:
        raise ValueError(f"weight must be a single monomial: {text!r}")
    (g, c), = elem.items()
    if c != 1:
        raise ValueError(f"weight must have coefficient 1: {text!r}")
    return group.make_weight(g[:-1], g[-1])


# ---------------------------------------------------------------------------
# Q[H] componentwise by characters of the torsion part


class QHRing(Ring):
    """Q[H] = product over divisors d of m of Q(zeta_d)[G].

    One component per divisor d, ascending; the torsion generator s acts on
    component d as multiplication by zeta_d.  Elements are tuples of
    GroupRing-over-CycloField elements.
    """

    def __init__(self, group: GroupDescriptor):
        self.group = group
        self.divisors = divisors(group.torsion_order)
        self.components = [
            GroupRing(group.free_rank, 1, cyclo_field(d)) for d in self.divisors
        ]
        self.name = f"Q[H](r={group.free_rank},m={group.torsion_order})"

    def zero(self):
        return tuple(c.zero() for c in self.components)

    def from_int(self, n: int):
        return tuple(c.from_int(n) for c in self.components)

    def add(self, a, b):
        return tuple(c.add(x, y) for c, x, y in zip(self.components, a, b))

    def neg(self, a):
        return tuple(c.neg(x) for c, x in zip(self.components, a))

    def mul(self, a, b):
        return tuple(c.mul(x, y) for c, x, y in zip(self.components, a, b))

    def is_zero(self, a) -> bool:
        return all(c.is_zero(x) for c, x in zip(self.components, a))

    def eq(self, a, b) -> bool:
        return all(c.eq(x, y) for c, x, y in zip(self.components, a, b))

    def exact_div(self, a, b):
        return tuple(c.exact_div(x, y) for c, x, y in zip(self.components, a, b))

    def to_str(self, a) -> str:
        parts = []
        for d, c, x in zip(self.divisors, self.components, a):
            parts.append(f"[d={d}] {c.to_str(x)}")
        return "; ".join(parts)

    def from_zh(self, zh_elem):
        """Decompose a Z[H] element into character components."""
        out = []
        for d, comp in zip(self.divisors, self.components):
            F = comp.coeff
            acc = comp.zero()
            for g, c in zh_elem.items():
                mono = (*g[:-1], 0)
                coeff = F.mul(F.from_fraction(Fraction(c)), F.zeta_power(g[-1]))
                acc = comp.add(acc, {mono: coeff} if not F.is_zero(coeff) else {})
            out.append(acc)
        return tuple(out)

    def unit_normalize(self, a):
        units = []
        canon = []
        for comp, x in zip(self.components, a):
            u, c = comp.unit_normalize(x)
            units.append(u)
            canon.append(c)
        return tuple(units), tuple(canon)

    def unit_inv(self, u):
        return tuple(c.unit_inv(x) for c, x in zip(self.components, u))


def character_map(group: GroupDescriptor, d: int, zh_elem):
    """The ring map Z[H] -> Q(zeta_d)[G] with s -> zeta_d, t_i -> t_i."""
    if group.torsion_order % d:
        raise ValueError("d must divide the torsion order")
    qh = QHRing(group)
    idx = qh.divisors.index(d)
    return qh.from_zh(zh_elem)[idx]


# ---------------------------------------------------------------------------
# matrices


@dataclass
class Matrix:
    """Dense matrix over a ring, with optional opaque row/column labels."""

    ring: Ring
    entries: list
    row_labels: list = field(default_factory=list)
    col_labels: list = field(default_factory=list)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __post_init__(self) -> None:
        widths = {len(r) for r in self.entries}
        if len(widths) > 1:
            raise ValueError("ragged matrix")

    def entry(self, i: int, j: int):
        return self.entries[i][j]

    def copy(self) -> "Matrix":
        return Matrix(self.ring, [list(r) for r in self.entries],
                      list(self.row_labels), list(self.col_labels))


def _identity_entries(n: int):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(entries):
    """U, D, V with U*M*V = D diagonal, d1 | d2 | ..., U and V unimodular."""
    A = [[int(x) for x in row] for row in entries]
    r = len(A)
    c = len(A[0]) if A else 0
    U = _identity_entries(r)
    V = _identity_entries(c)

    def row_op(i, j, q):  # row_i -= q*row_j
        for k in range(c):
            A[i][k] -= q * A[j][k]
        for k in range(r):
            U[i][k] -= q * U[j][k]

    def col_op(i, j, q):  # col_i -= q*col_j
        for k in range(r):
            A[k][i] -= q * A[k][j]
        for k in range(c):
            V[k][i] -= q * V[k][j]

    def row_swap(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def col_swap(i, j):
        for k in range(r):
            A[k][i], A[k][j] = A[k][j], A[k][i]
        for k in range(c):
            V[k][i], V[k][j] = V[k][j], V[k][i]

    t = 0
    while t < min(r, c):
        # find a nonzero pivot of least absolute value
        best = None
        for i in range(t, r):
            for j in range(t, c):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        row_swap(t, best[0])
        col_swap(t, best[1])
        again = True
        while again:
            again = False
            for i in range(t + 1, r):
                if A[i][t]:
                    row_op(i, t, A[i][t] // A[t][t])
                    if A[i][t]:
                        row_swap(t, i)
                        again = True
            for j in range(t + 1, c):
                if A[t][j]:
                    col_op(j, t, A[t][j] // A[t][t])
                    if A[t][j]:
                        col_swap(t, j)
                        again = True
        # enforce divisibility of the remaining block
        pivot = A[t][t]
        fixed = True
        for i in range(t + 1, r):
            for j in range(t + 1, c):
                if A[i][j] % pivot:
                    row_op(t, i, -1)  # add row i to row t, then re-reduce
                    fixed = False
                    break
            if not fixed:
                break
        if not fixed:
            continue
        if A[t][t] < 0:
            for k in range(c):
                A[t][k] = -A[t][k]
            for k in range(r):
                U[t][k] = -U[t][k]
        t += 1
    return U, A, V


def snf_diagonal(entries):
    _, D, _ = smith_normal_form(entries)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]


def integer_rank(entries) -> int:
    return sum(1 for d in snf_diagonal(entries) if d != 0)


def integer_kernel_is_zero(entries) -> bool:
    cols = len(entries[0]) if entries else 0
    return integer_rank(entries) == cols


def det_cofactor(ring: Ring, entries):
    n = len(entries)
    if n == 0:
        return ring.one()
    if any(len(r) != n for r in entries):
        raise ValueError("determinant of a non-square matrix")
    if n == 1:
        return entries[0][0]
    acc = ring.zero()
    sign = 1
    minor_rows = entries[1:]
    for j in range(n):
        a = entries[0][j]
        if not ring.is_zero(a):
            sub = [row[:j] + row[j + 1:] for row in minor_rows]
            term = ring.mul(a, det_cofactor(ring, sub))
            acc = ring.add(acc, term if sign > 0 else ring.neg(term))
        sign = -sign
    return acc


def _det_bareiss(ring: Ring, entries):
    """Fraction-free Bareiss elimination; divisions are exact in a domain."""
    n = len(entries)
    A = [list(r) for r in entries]
    sign = 1
    prev = ring.one()
    for k in range(n - 1):
        if ring.is_zero(A[k][k]):
            # pivot search
            found = False
            for i in range(k + 1, n):
                if not ring.is_zero(A[i][k]):
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    found = True
                    break
            if not found:
                return ring.zero()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = ring.sub(ring.mul(A[i][j], A[k][k]), ring.mul(A[i][k], A[k][j]))
                A[i][j] = ring.exact_div(num, prev)
            A[i][k] = ring.zero()
        prev = A[k][k]
    det = A[n - 1][n - 1]
    return det if sign > 0 else ring.neg(det)


def det_exact(ring: Ring, entries):
    """Exact determinant: cofactor for n <= 6, Bareiss above.

    Laurent-ring input is cleared to polynomial form row by row (the cleared
    monomials are units and multiply back in) so Bareiss divisions stay in a
    polynomial ring.  0 x 0 gives 1.
    """
    n = len(entries)
    if n == 0:
        return ring.one()
    if any(len(r) != n for r in entries):
        raise ValueError("determinant of a non-square matrix")
    if n <= 6:
        return det_cofactor(ring, entries)
    if isinstance(ring, QHRing):
        comps = []
        for idx, comp in enumerate(ring.components):
            comps.append(det_exact(comp, [[e[idx] for e in row] for row in entries]))
        return tuple(comps)
    if isinstance(ring, GroupRing):
        if ring.torsion_order != 1:
            raise ArithmeticError("large determinants need an integral domain")
        unit = ring.one()
        cleared = []
        for row in entries:
            monos = [g for e in row for g in e]
            if monos:
                shift = tuple(min(g[i] for g in monos) for i in range(ring.free_rank))
                if any(shift):
                    gshift = {ring.mono(shift, 0): ring.coeff.one()}
                    unit = ring.mul(unit, gshift)
                    ginv = {ring.mono_inv(ring.mono(shift, 0)): ring.coeff.one()}
                    row = [ring.mul(ginv, e) for e in row]
            cleared.append(list(row))
        return ring.mul(unit, _det_bareiss(ring, cleared))
    return _det_bareiss(ring, entries)


def rank_over_fractions(ring: Ring, entries) -> int:
    """Column rank over the fraction field of an integral domain, by
    fraction-free elimination with full pivoting."""
    A = [list(r) for r in entries]
    rows = len(A)
    cols = len(A[0]) if A else 0
    prev = ring.one()
    rank = 0
    r0 = 0
    for _ in range(min(rows, cols)):
        piv = None
        for i in range(r0, rows):
            for j in range(r0, cols):
                if not ring.is_zero(A[i][j]):
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        i0, j0 = piv
        A[r0], A[i0] = A[i0], A[r0]
        for row in A:
            row[r0], row[j0] = row[j0], row[r0]
        for i in range(r0 + 1, rows):
            for j in range(r0 + 1, cols):
                num = ring.sub(ring.mul(A[i][j], A[r0][r0]), ring.mul(A[i][r0], A[r0][j]))
                A[i][j] = ring.exact_div(num, prev)
            A[i][r0] = ring.zero()
        prev = A[r0][r0]
        rank += 1
        r0 += 1
    return rank


# ---------------------------------------------------------------------------
# up-to-unit comparisons


def eq_up_to_unit(ring: Ring, a, b):
    """Decide a = u*b for a single unit u of the ring; returns (bool, u or None).

    Unit groups: {1,-1} over Z, +-monomials over integer group rings,
    (nonzero scalar)*monomial per component over Q[H].
    """
    ok, unit = _values_eq_up_to_unit(ring, [(a, b)])
    return ok, unit


def _values_eq_up_to_unit(ring: Ring, pairs):
    """One common unit u with a = u*b for every (a, b) pair."""
    if isinstance(ring, QHRing):
        units = []
        for idx, comp in enumerate(ring.components):
            ok, u = _values_eq_up_to_unit(comp, [(a[idx], b[idx]) for a, b in pairs])
            if not ok:
                return False, None
            units.append(u)
        return True, tuple(units)
    unit = None
    for a, b in pairs:
        az, bz = ring.is_zero(a), ring.is_zero(b)
        if az != bz:
            return False, None
        if az:
            continue
        ua, ca = ring.unit_normalize(a)
        ub, cb = ring.unit_normalize(b)
        if not ring.eq(ca, cb):
            return False, None
        r = ring.mul(ua, ring.unit_inv(ub))
        if unit is None:
            unit = r
        elif not ring.eq(unit, r):
            return False, None
    return True, unit if unit is not None else ring.one()


def values_eq_up_to_unit(ring: Ring, pairs):
    return _values_eq_up_to_unit(ring, list(pairs))
