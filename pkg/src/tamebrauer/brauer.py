"""Brauer classes as formal sums of symbols, and their tame residue calculus.

A class of order dividing n over a tower K is a formal Z/n-combination of
symbols (f, g) with nonzero entries.  The root-of-unity convention is fixed
once and for all by the base field's canonical generator: zeta_n = g^((q-1)/n).

The tame residue at a place v is computed termwise by the tame-symbol formula

    residue_v((f, g)) = class of (-1)^(v(f)v(g)) * f^v(g) * g^(-v(f))

reduced at v.  All residue, invariant, exponent and reciprocity computations
are assembled from this single convention; the transport diagram under Kummer
extensions (residue above = ramification index times restricted residue
below) is exercised by the test suite as the consistency arbiter.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import (
    CharacteristicDivides,
    InternalInvariantViolation,
    IrrationalIntersection,
    NotALineArrangement,
    RootsOfUnityMissing,
    UnsupportedTower,
    ZeroEntry,
)
from .fields import fpoly
from .fields.finite import FF
from .fields.places import (
    KummerSplitting,
    Place,
    kummer_splitting,
    place_irreducible,
    place_laurent,
    reduce_at,
    residue_class_dies,
    residue_field,
    support_places,
    tower_class_order,
    tower_is_nth_power,
    uniformizer,
    valuation,
)
from .fields.towers import (
    ClosureBase,
    FieldElem,
    FiniteBase,
    LaurentLayer,
    RatLayer,
    tower_base,
    tower_ops,
)
from .nt import factorint


# ---------------------------------------------------------------------------
# classes
# ---------------------------------------------------------------------------

class BrauerClass:
    """A formal sum of symbols sum_i c_i * (f_i, g_i) of order dividing n."""

    __slots__ = ("tower", "n", "terms")

    def __init__(self, tower, n, terms):
        base = tower_base(tower)
        if n < 1:
            raise ValueError("order must be positive")
        if isinstance(base, FiniteBase):
            q = base.p ** base.k
            if (q - 1) % n != 0:
                raise RootsOfUnityMissing(
                    f"n = {n} does not divide q - 1 = {q - 1}")
        else:
            if n % base.p == 0:
                raise CharacteristicDivides(
                    "n must be prime to the characteristic")
        clean = []
        for c, f, g in terms:
            c = c % n
            if c == 0:
                continue
            if f.is_zero() or g.is_zero():
                raise ZeroEntry("symbol entries must be nonzero")
            clean.append((c, f, g))
        self.tower = tower
        self.n = n
        self.terms = tuple(clean)

    @staticmethod
    def zero(tower, n):
        return BrauerClass(tower, n, [])

    @staticmethod
    def symbol(tower, n, f, g, coeff=1):
        return BrauerClass(tower, n, [(coeff, f, g)])

    def is_formally_zero(self):
        return not self.terms

    def __add__(self, other):
        if other.tower != self.tower or other.n != self.n:
            raise UnsupportedTower("classes live over different fields")
        return BrauerClass(self.tower, self.n, self.terms + other.terms)

    def scale(self, m):
        return BrauerClass(self.tower, self.n,
                           [((c * m) % self.n, f, g) for c, f, g in self.terms])

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def describe(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*({f!r}, {g!r})" for c, f, g in self.terms)

    def __repr__(self):
        return f"BrauerClass(n={self.n}: {self.describe()})"


# ---------------------------------------------------------------------------
# residues
# ---------------------------------------------------------------------------

@dataclass
class ResidueClass:
    """An element of kappa(v)*/n together with its presentation data."""

    place: Place
    rf: object            # ResidueField
    value: object         # residue-field value (unit)
    n: int

    def is_trivial(self):
        return self.rf.is_nth_power(self.value, self.n)

    def order(self):
        for d in sorted(_divisors(self.n)):
            if self.rf.is_nth_power(self.rf.pow(self.value, d), self.n):
                return d
        raise AssertionError("residue class order must divide n")

    def dlog(self):
        return self.rf.dlog_class(self.value, self.n)

    def describe_value(self):
        return repr(self.value)


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def tame_residue(alpha: BrauerClass, v: Place) -> ResidueClass:
    """The residue class of alpha at v, computed termwise."""
    tower = alpha.tower
    if alpha.n % tower_base(tower).p == 0:
        raise CharacteristicDivides("n must be invertible in kappa(v)")
    acc = FieldElem.one(tower)
    minus_one = FieldElem.from_int(tower, -1)
    for c, f, g in alpha.terms:
        vf = valuation(f, v)
        vg = valuation(g, v)
        if vf == 0 and vg == 0:
            continue
        term = (minus_one ** (vf * vg)) * (f ** vg) * (g ** (-vf))
        acc = acc * term ** c
    rf = residue_field(v, tower)
    value = reduce_at(acc, v)
    if rf.is_zero(value):
        raise InternalInvariantViolation(
            "tame symbol reduced to zero; the unit computation is broken")
    return ResidueClass(place=v, rf=rf, value=value, n=alpha.n)


def class_support(alpha: BrauerClass):
    """The support-driven place set of the class (plus layer infinities)."""
    elems = []
    for _, f, g in alpha.terms:
        elems.append(f)
        elems.append(g)
    return support_places(alpha.tower, elems)


def ramification_divisor(alpha: BrauerClass):
    """[(place, residue class)] over the support, nonzero residues only."""
    out = []
    for v in class_support(alpha):
        r = tame_residue(alpha, v)
        if not r.is_trivial():
            out.append((v, r))
    return out


def residue_profile(alpha: BrauerClass):
    """Full map place -> residue class over the support-driven set."""
    return [(v, tame_residue(alpha, v)) for v in class_support(alpha)]


# ---------------------------------------------------------------------------
# local invariants and reciprocity (global layer over a finite base)
# ---------------------------------------------------------------------------

@dataclass
class LocalInvariant:
    place: Place
    value: Fraction       # in Q/Z, denominator dividing n

    def order(self):
        return self.value.denominator if self.value else 1


def _require_global(alpha: BrauerClass):
    t = alpha.tower
    if not (isinstance(t, RatLayer) and isinstance(t.base, FiniteBase)):
        raise UnsupportedTower(
            "local invariants need a rational layer directly on a finite base")


def local_invariant(alpha: BrauerClass, v: Place) -> LocalInvariant:
    """inv_v = dlog(residue)/n in Q/Z, through the canonical zeta_n."""
    _require_global(alpha)
    r = tame_residue(alpha, v)
    j = r.dlog()
    return LocalInvariant(place=v, value=Fraction(j, alpha.n) % 1)


def local_invariants(alpha: BrauerClass):
    return [local_invariant(alpha, v) for v in class_support(alpha)]


def reciprocity_check(alpha: BrauerClass) -> bool:
    """Sum of local invariants must vanish in Q/Z for every well-formed class."""
    _require_global(alpha)
    total = sum((inv.value for inv in local_invariants(alpha)), Fraction(0))
    return total % 1 == 0


# ---------------------------------------------------------------------------
# Laurent layer splitting
# ---------------------------------------------------------------------------

@dataclass
class LaurentSplit:
    """alpha = (reduced unramified part over the subtower) + (chi_rep, t)."""

    unramified: BrauerClass   # class over the subtower
    chi_rep: object           # FieldElem of the subtower, or None if trivial
    chi_order: int


def _as_field_elem(sub_tower, value):
    """Normalize a residue value to a FieldElem of the residue tower."""
    if isinstance(value, FieldElem):
        return value
    return FieldElem.constant(sub_tower, value)


def laurent_split(alpha: BrauerClass) -> LaurentSplit:
    """Split a class over k((t)) along the uniformizer t.

    Each symbol (t^a u, t^b w) rewrites as (u, w) + ((-1)^(ab) u^b w^(-a), t);
    the first parts reduce at t to a class over k, the second parts collect
    into a single character entry.
    """
    tower = alpha.tower
    if not isinstance(tower, LaurentLayer):
        raise UnsupportedTower("laurent_split needs a Laurent layer on top")
    sub = tower.base
    v_t = place_laurent(tower)
    t_elem = FieldElem.variable(tower, tower.var)
    minus_one = FieldElem.from_int(tower, -1)
    w_acc = FieldElem.one(tower)
    sub_terms = []
    for c, f, g in alpha.terms:
        a = valuation(f, v_t)
        b = valuation(g, v_t)
        u = f * t_elem ** (-a)
        w = g * t_elem ** (-b)
        u_bar = _as_field_elem(sub, reduce_at(u, v_t))
        w_bar = _as_field_elem(sub, reduce_at(w, v_t))
        sub_terms.append((c, u_bar, w_bar))
        piece = (minus_one ** (a * b)) * u ** b * w ** (-a)
        w_acc = w_acc * piece ** c
    chi = _as_field_elem(sub, reduce_at(w_acc, v_t))
    unram = BrauerClass(sub, alpha.n, sub_terms)
    order = tower_class_order(chi, alpha.n)
    if order == 1:
        return LaurentSplit(unramified=unram, chi_rep=None, chi_order=1)
    return LaurentSplit(unramified=unram, chi_rep=chi, chi_order=order)


# ---------------------------------------------------------------------------
# exponent and zero test
# ---------------------------------------------------------------------------

def exponent(alpha: BrauerClass) -> int:
    """Order of the class in the Brauer group, by layered recursion."""
    tower = alpha.tower
    if isinstance(tower, (FiniteBase, ClosureBase)):
        return 1
    if isinstance(tower, RatLayer):
        base = tower.base
        if isinstance(base, ClosureBase):
            return 1
        if isinstance(base, FiniteBase):
            out = 1
            for inv in local_invariants(alpha):
                out = _lcm(out, inv.order())
            return out
        raise UnsupportedTower(
            "exponent over nested rational layers is out of scope")
    split = laurent_split(alpha)
    return _lcm(split.chi_order, exponent(split.unramified))


def _lcm(a, b):
    return a * b // gcd(a, b)


def is_zero(alpha: BrauerClass) -> bool:
    return exponent(alpha) == 1


# ---------------------------------------------------------------------------
# primary decomposition
# ---------------------------------------------------------------------------

def primary_decomposition(alpha: BrauerClass):
    """[(l, alpha_l)] with alpha = sum alpha_l, alpha_l of l-power order."""
    n = alpha.n
    facs = factorint(n)
    if len(facs) <= 1:
        return [(facs[0][0] if facs else 1, alpha)]
    out = []
    for l, e in facs:
        le = l ** e
        rest = n // le
        # CRT idempotent: 1 mod l^e, 0 mod n/l^e
        eps = rest * pow(rest, -1, le) % n
        out.append((l, alpha.scale(eps)))
    return out


# ---------------------------------------------------------------------------
# residue transport along Kummer extensions
# ---------------------------------------------------------------------------

@dataclass
class TransportedResidue:
    place: Place
    split: KummerSplitting
    residue: ResidueClass
    trivial_above: bool


def residue_transport(alpha: BrauerClass, v: Place, f: FieldElem, l: int):
    """Residues of alpha over the places of K(f^(1/l)) above v.

    By the commuting square, the residue above is e_{w/v} times the
    restriction to kappa(w) of the residue below; total ramification
    therefore kills residues mod l.
    """
    if alpha.n != l:
        raise UnsupportedTower("transport is defined for classes of order l")
    r = tame_residue(alpha, v)
    split = kummer_splitting(v, f, l, ambient_tower=alpha.tower)
    dies = residue_class_dies(v, r.value, split, l, alpha.tower)
    records = []
    copies = split.g
    for _ in range(copies):
        records.append(TransportedResidue(place=v, split=split, residue=r,
                                          trivial_above=dies))
    return records


# ---------------------------------------------------------------------------
# the residue-of-residue (surface complex) check on line arrangements
# ---------------------------------------------------------------------------

@dataclass
class PointReport:
    x0: object
    y0: object
    contributions: list   # [(place, partial residue in Z/l)]
    total: int            # in Z/l


def second_residue_check(alpha: BrauerClass):
    """Per-intersection-point sums of second residues; all must vanish.

    Restricted to classes over F_q(x)(y) whose entries are products of
    affine-linear forms and constants.  At each rational intersection point
    P of the arrangement the sum over lines C through P of v_P(residue along
    C) must be 0 in Z/l.
    """
    tower = alpha.tower
    if not (isinstance(tower, RatLayer) and isinstance(tower.base, RatLayer)
            and isinstance(tower.base.base, FiniteBase)):
        raise UnsupportedTower(
            "the surface complex check runs over F_q(x)(y)")
    l = alpha.n
    if len(factorint(l)) != 1 or factorint(l)[0][1] != 1:
        raise UnsupportedTower("the complex check is stated for prime order")
    sub = tower.base                    # F_q(x)
    K = FF(sub.base.p, sub.base.k)
    sub_ops = tower_ops(sub)

    lines = []                           # ("y", a_raw, b_raw) or ("x", c_raw)
    for v in class_support(alpha, ):
        if v.kind != "irred":
            continue
        if v.level_tower == tower:
            poly = v.data                # y - (a x + b), payload over F_q(x)
            if len(poly) != 2:
                raise NotALineArrangement("nonlinear vertical place")
            c0 = poly[0]                 # -(a x + b) as payload of F_q(x)
            num, den = c0
            if fpoly.degree(den) != 0 or fpoly.degree(num) > 1:
                raise NotALineArrangement("line has nonconstant denominator")
            b = K.neg(num[0]) if len(num) > 0 else K.zero
            a = K.neg(num[1]) if len(num) > 1 else K.zero
            lines.append(("y", a, b, v))
        elif v.level_tower == sub:
            poly = v.data
            if len(poly) != 2:
                continue                 # nonlinear x-support is not a line
            c = K.neg(poly[0]) if poly else K.zero
            lines.append(("x", c, None, v))

    # pairwise rational intersection points
    points = {}
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            P = _intersect(K, lines[i], lines[j])
            if P is not None:
                points.setdefault(P, set()).update({i, j})
    # a point can lie on further lines of the arrangement
    for P in points:
        for idx, L in enumerate(lines):
            if _on_line(K, L, P):
                points[P].add(idx)

    reports = []
    for P in sorted(points, key=lambda t: (repr(t[0]), repr(t[1]))):
        x0, y0 = P
        contributions = []
        total = 0
        for idx in sorted(points[P]):
            L = lines[idx]
            v = L[3]
            resid = tame_residue(alpha, v)
            dP = _point_valuation(resid, L, x0, y0, sub, K)
            contributions.append((v, dP % l))
            total += dP
        reports.append(PointReport(x0=K.elt(x0), y0=K.elt(y0),
                                   contributions=contributions,
                                   total=total % l))
    return reports


def _intersect(K, L1, L2):
    if L1[0] == "y" and L2[0] == "y":
        a1, b1 = L1[1], L1[2]
        a2, b2 = L2[1], L2[2]
        if a1 == a2:
            if b1 != b2:
                return None
            raise NotALineArrangement("repeated line in arrangement")
        x0 = K.div(K.sub(b2, b1), K.sub(a1, a2))
        y0 = K.add(K.mul(a1, x0), b1)
        return (x0, y0)
    if L1[0] == "x" and L2[0] == "x":
        if L1[1] == L2[1]:
            raise NotALineArrangement("repeated line in arrangement")
        return None
    if L1[0] == "x":
        L1, L2 = L2, L1
    # L1: y = a x + b, L2: x = c
    c = L2[1]
    return (c, K.add(K.mul(L1[1], c), L1[2]))


def _on_line(K, L, P):
    x0, y0 = P
    if L[0] == "y":
        return y0 == K.add(K.mul(L[1], x0), L[2])
    return x0 == L[1]


def _point_valuation(resid, L, x0, y0, sub, K):
    """Valuation at the point of the residue class along the line."""
    value = resid.value
    if L[0] == "y":
        # kappa(C) = F_q(x); the point is x = x0
        if not isinstance(value, FieldElem) or value.tower != sub:
            raise InternalInvariantViolation("residue landed in a wrong field")
        pl = place_irreducible(sub, (K.neg(x0), K.one), check=False)
        return valuation(value, pl)
    # vertical line x = c: kappa(C) = F_q(y), the point is y = y0
    rt = value.tower
    pl = place_irreducible(rt, (K.neg(y0), K.one), check=False)
    return valuation(value, pl)
