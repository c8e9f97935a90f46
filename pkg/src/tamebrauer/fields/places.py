"""Places, valuations, reductions and Kummer splitting data.

A Place is attached to one layer of a tower: a monic irreducible polynomial
or the point at infinity of a rational layer, or the uniformizer of a tame
Laurent layer.  A place at a lower layer acts on elements of higher layers
through the Gauss extension (minimum of coefficient valuations), which is the
divisorial valuation of the corresponding "vertical" divisor.

Residue fields are presented concretely: finite extensions F_q[t]/(pi) for
places of a rational layer over a finite base, the closure itself over a
closure base, the subtower for Laurent uniformizers, and towers rebuilt from
the residue field for Gauss places.
"""

from dataclasses import dataclass
from math import gcd

from ..errors import (
    CharacteristicDivides,
    NegativeValuation,
    NotALineArrangement,
    UnsupportedTower,
    ZeroElement,
)
from . import fpoly
from .extfield import ExtField
from .finite import FF, ClosureElt, ClosureField, embed
from .towers import (
    ClosureBase,
    FieldElem,
    FiniteBase,
    LaurentLayer,
    RatLayer,
    tower_base,
    tower_layers,
    tower_ops,
)


# ---------------------------------------------------------------------------
# place objects
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Place:
    """A codimension-1 valuation attached to a tower layer.

    kind is one of "irred" (monic irreducible polynomial of the layer, data
    holds its payload-coefficient tuple), "infinity", or "laurent".
    level_tower is the tower truncated at the defining layer.
    """

    level_tower: object
    kind: str
    data: tuple = None

    def __post_init__(self):
        if self.kind == "irred":
            sub = tower_ops(self.level_tower.base)
            if not self.data or not sub.eq(self.data[-1], sub.one):
                raise ValueError("irreducible place data must be monic")
        elif self.kind == "laurent":
            if not isinstance(self.level_tower, LaurentLayer):
                raise ValueError("laurent place needs a Laurent layer")
        elif self.kind == "infinity":
            if not isinstance(self.level_tower, RatLayer):
                raise ValueError("infinity place needs a rational layer")
        else:
            raise ValueError(f"unknown place kind {self.kind!r}")

    @property
    def var(self):
        return self.level_tower.var

    def degree(self):
        """Residue degree over the layer's coefficient field."""
        if self.kind == "irred":
            return len(self.data) - 1
        return 1

    def describe(self):
        if self.kind == "infinity":
            return f"inf({self.var})"
        if self.kind == "laurent":
            return f"({self.var})"
        from .towers import _render_poly
        return f"({_render_poly(self.level_tower.base, self.data, self.var)})"

    def __repr__(self):
        return f"Place[{self.describe()}]"


def place_irreducible(level_tower, poly_payload, check=True):
    sub = tower_ops(level_tower.base)
    poly = fpoly.monic(sub, poly_payload)
    if check and isinstance(level_tower.base, FiniteBase):
        K = FF(level_tower.base.p, level_tower.base.k)
        if not fpoly.is_irreducible(K, poly):
            raise ValueError("polynomial is not irreducible over the base")
    return Place(level_tower, "irred", poly)


def place_infinity(level_tower):
    return Place(level_tower, "infinity")


def place_laurent(level_tower):
    return Place(level_tower, "laurent")


def uniformizer(place, ambient_tower):
    """A FieldElem of the ambient tower with valuation 1 at the place."""
    lt = place.level_tower
    ops = tower_ops(lt)
    if place.kind == "irred":
        elem = FieldElem(lt, (place.data, (ops.S.one,)))
    elif place.kind == "laurent":
        elem = FieldElem.variable(lt, lt.var)
    else:
        elem = FieldElem.variable(lt, lt.var).inv()
    return lift_to(elem, ambient_tower)


def lift_to(elem, ambient_tower):
    """Constant-lift an element of a prefix tower into the ambient tower."""
    if elem.tower == ambient_tower:
        return elem
    chain = []
    t = ambient_tower
    while t != elem.tower:
        if not isinstance(t, (RatLayer, LaurentLayer)):
            raise ValueError("element tower is not a prefix of the ambient")
        chain.append(t)
        t = t.base
    payload = elem.payload
    for layer in reversed(chain):
        payload = tower_ops(layer).lift(payload)
    return FieldElem(ambient_tower, payload)


def tower_prefix_depth(place, ambient_tower):
    """How many layers of the ambient tower sit above the place's layer."""
    depth = 0
    t = ambient_tower
    while t != place.level_tower:
        if not isinstance(t, (RatLayer, LaurentLayer)):
            raise ValueError("place does not belong to this tower")
        depth += 1
        t = t.base
    return depth


# ---------------------------------------------------------------------------
# valuations
# ---------------------------------------------------------------------------

def valuation(elem: FieldElem, place: Place) -> int:
    """The normalized valuation; Gauss-extended above the place's layer."""
    if elem.is_zero():
        raise ZeroElement("valuation of zero")
    depth = tower_prefix_depth(place, elem.tower)
    return _val_payload(elem.tower, elem.payload, place, depth)


def _val_payload(tower, payload, place, depth):
    if depth > 0:
        num, den = payload
        sub = tower.base
        vnum = min(_val_payload(sub, c, place, depth - 1)
                   for c in num if not tower_ops(sub).is_zero(c))
        vden = min(_val_payload(sub, c, place, depth - 1)
                   for c in den if not tower_ops(sub).is_zero(c))
        return vnum - vden
    num, den = payload
    sub = tower_ops(tower).S
    if place.kind == "laurent":
        return _low_index(sub, num) - _low_index(sub, den)
    if place.kind == "infinity":
        return fpoly.degree(den) - fpoly.degree(num)
    return _mult_of(sub, num, place.data) - _mult_of(sub, den, place.data)


def _low_index(sub, poly):
    for i, c in enumerate(poly):
        if not sub.is_zero(c):
            return i
    raise AssertionError("zero polynomial in low-index computation")


def _mult_of(sub, poly, pi):
    m = 0
    while True:
        q, r = fpoly.pdivmod(sub, poly, pi)
        if not fpoly.is_zero(r):
            return m
        poly = q
        m += 1


# ---------------------------------------------------------------------------
# residue fields
# ---------------------------------------------------------------------------

class ResidueField:
    """Concrete presentation of kappa(v) together with its class arithmetic.

    kind "finite": elements are raw values of .field (an FqField/ExtField).
    kind "closure": elements are ClosureElt.
    kind "tower": elements are FieldElems of .tower (a function field).
    """

    def __init__(self, kind, field=None, tower=None, ambient_base=None):
        self.kind = kind
        self.field = field
        self.tower = tower
        self.ambient_base = ambient_base  # FqField of the original tower base

    # description of kappa(v) as a tower, per the data contract
    def tower_description(self):
        if self.kind == "finite":
            bot = self.field
            if isinstance(bot, ExtField):
                p = bot.char
                import math
                k = round(math.log(bot.order, p))
                return FiniteBase(p, k)
            return FiniteBase(bot.p, bot.k)
        if self.kind == "closure":
            return ClosureBase(self.field.p)
        return self.tower

    def one(self):
        if self.kind == "finite":
            return self.field.one
        if self.kind == "closure":
            return self.field.one
        return FieldElem.one(self.tower)

    def mul(self, a, b):
        if self.kind == "finite":
            return self.field.mul(a, b)
        return a * b

    def inv(self, a):
        if self.kind == "finite":
            return self.field.inv(a)
        return a.inv() if isinstance(a, FieldElem) else a.inv()

    def pow(self, a, e):
        if self.kind == "finite":
            return self.field.pow(a, e)
        return a ** e

    def eq(self, a, b):
        if self.kind == "finite":
            return a == b
        return a == b

    def is_zero(self, a):
        if self.kind == "finite":
            return self.field.is_zero(a)
        if self.kind == "closure":
            return a.is_zero()
        return a.is_zero()

    def is_nth_power(self, a, n):
        if self.kind == "finite":
            return self.field.is_nth_power(a, n)
        if self.kind == "closure":
            return a.is_nth_power(n)
        return tower_is_nth_power(a, n)

    def dlog_class(self, a, n):
        if self.kind != "finite":
            raise UnsupportedTower("discrete log classes need a finite residue field")
        return self.field.dlog_class(a, n)

    def describe(self):
        if self.kind == "finite":
            d = self.tower_description()
            return d.describe()
        if self.kind == "closure":
            return f"Fpbar({self.field.p})"
        return self.tower.describe()


def residue_field(place: Place, ambient_tower) -> ResidueField:
    """kappa(v) for the place, seen from the ambient tower (Gauss rebuild)."""
    depth = tower_prefix_depth(place, ambient_tower)
    base_rf = _residue_field_at_level(place)
    if depth == 0:
        return base_rf
    # rebuild the layers above the place on top of the residue field
    layers = tower_layers(ambient_tower)[-depth:]
    t = base_rf.tower_description()
    for layer in layers:
        t = RatLayer(t, layer.var) if isinstance(layer, RatLayer) \
            else LaurentLayer(t, layer.var)
    return ResidueField("tower", tower=t,
                        ambient_base=base_rf.ambient_base)


def _residue_field_at_level(place: Place) -> ResidueField:
    lt = place.level_tower
    sub = lt.base
    if place.kind == "laurent":
        if isinstance(sub, FiniteBase):
            return ResidueField("finite", field=FF(sub.p, sub.k),
                                ambient_base=FF(sub.p, sub.k))
        if isinstance(sub, ClosureBase):
            return ResidueField("closure", field=ClosureField(sub.p))
        return ResidueField("tower", tower=sub,
                            ambient_base=_bottom_field(sub))
    if place.kind == "infinity":
        if isinstance(sub, FiniteBase):
            return ResidueField("finite", field=FF(sub.p, sub.k),
                                ambient_base=FF(sub.p, sub.k))
        if isinstance(sub, ClosureBase):
            return ResidueField("closure", field=ClosureField(sub.p))
        return ResidueField("tower", tower=sub,
                            ambient_base=_bottom_field(sub))
    # irreducible polynomial place
    if isinstance(sub, FiniteBase):
        K = FF(sub.p, sub.k)
        if len(place.data) == 2:
            return ResidueField("finite", field=K, ambient_base=K)
        return ResidueField("finite", field=ExtField(K, place.data, lt.var),
                            ambient_base=K)
    if isinstance(sub, ClosureBase):
        if len(place.data) != 2:
            raise UnsupportedTower(
                "places over the closure are linear after splitting")
        return ResidueField("closure", field=ClosureField(sub.p))
    # sub is itself a function field: only linear (line-arrangement) places
    if len(place.data) != 2:
        raise UnsupportedTower(
            "only line-arrangement places are supported on nested rational layers")
    return ResidueField("tower", tower=sub, ambient_base=_bottom_field(sub))


def _bottom_field(tower):
    b = tower_base(tower)
    if isinstance(b, FiniteBase):
        return FF(b.p, b.k)
    return None


# ---------------------------------------------------------------------------
# reduction
# ---------------------------------------------------------------------------

def reduce_at(elem: FieldElem, place: Place):
    """Image in the residue field; requires valuation >= 0."""
    if elem.is_zero():
        rf = residue_field(place, elem.tower)
        return _rf_zero(rf)
    v = valuation(elem, place)
    if v < 0:
        raise NegativeValuation(
            f"element has valuation {v} < 0 at {place.describe()}")
    rf = residue_field(place, elem.tower)
    if v > 0:
        return _rf_zero(rf)
    return _reduce_unit(elem.tower, elem.payload, place,
                        tower_prefix_depth(place, elem.tower), rf)


def _rf_zero(rf: ResidueField):
    if rf.kind == "finite":
        return rf.field.zero
    if rf.kind == "closure":
        return rf.field.zero
    return FieldElem.zero(rf.tower)


def reduce_unit_part(elem: FieldElem, place: Place):
    """Residue of elem * pi^(-v(elem)): always a nonzero residue value."""
    if elem.is_zero():
        raise ZeroElement("unit part of zero")
    v = valuation(elem, place)
    if v:
        pi = uniformizer(place, elem.tower)
        elem = elem * pi ** (-v)
    rf = residue_field(place, elem.tower)
    return _reduce_unit(elem.tower, elem.payload, place,
                        tower_prefix_depth(place, elem.tower), rf)


def _reduce_unit(tower, payload, place, depth, rf):
    """Reduce a valuation-0 payload at the place."""
    if depth > 0:
        # Gauss reduction: reduce numerator and denominator coefficientwise
        num, den = payload
        sub = tower.base
        sub_ops = tower_ops(sub)
        vnum = min(_val_payload(sub, c, place, depth - 1)
                   for c in num if not sub_ops.is_zero(c))
        vden = min(_val_payload(sub, c, place, depth - 1)
                   for c in den if not sub_ops.is_zero(c))
        if vnum != vden:
            raise AssertionError("unit reduction called on a non-unit")
        pi_sub = uniformizer(place, sub)
        red_num = [_reduce_coeff(sub, c, place, depth - 1, vnum, pi_sub)
                   for c in num]
        red_den = [_reduce_coeff(sub, c, place, depth - 1, vden, pi_sub)
                   for c in den]
        rt = rf.tower
        sub_rt = rt.base
        num_elems = [c for c in red_num]
        den_elems = [c for c in red_den]
        ops = tower_ops(rt)
        num_poly = fpoly.trim(tower_ops(sub_rt), tuple(c.payload for c in num_elems))
        den_poly = fpoly.trim(tower_ops(sub_rt), tuple(c.payload for c in den_elems))
        return FieldElem(rt, ops.make(num_poly, den_poly))
    num, den = payload
    sub_ops = tower_ops(tower).S
    if place.kind == "laurent":
        n0 = _low_index(sub_ops, num)
        d0 = _low_index(sub_ops, den)
        if n0 != d0:
            raise AssertionError("unit reduction called on a non-unit")
        val = tower_ops(tower.base).div(num[n0], den[d0])
        return _sub_value_to_residue(tower.base, val, place)
    if place.kind == "infinity":
        if fpoly.degree(num) != fpoly.degree(den):
            raise AssertionError("unit reduction called on a non-unit")
        val = tower_ops(tower.base).div(num[-1], den[-1])
        return _sub_value_to_residue(tower.base, val, place)
    # irreducible place
    pi = place.data
    rnum = fpoly.pmod(sub_ops, num, pi)
    rden = fpoly.pmod(sub_ops, den, pi)
    if fpoly.is_zero(rden) or fpoly.is_zero(rnum):
        raise AssertionError("unit reduction called on a non-unit")
    sub = tower.base
    if isinstance(sub, FiniteBase):
        K = FF(sub.p, sub.k)
        if len(pi) == 2:
            return K.div(rnum[0] if rnum else K.zero,
                         rden[0] if rden else K.zero)
        E = ExtField(K, pi, tower.var)
        return E.div(tuple(rnum), tuple(rden))
    if isinstance(sub, ClosureBase):
        # linear place x - c: evaluate at c
        c0 = -pi[0]
        nv = fpoly.peval(tower_ops(sub), num, c0)
        dv = fpoly.peval(tower_ops(sub), den, c0)
        return nv / dv
    # nested rational layer, linear place: evaluate at the root
    sub_ops2 = tower_ops(sub)
    root = sub_ops2.neg(pi[0])
    nv = fpoly.peval(sub_ops2, num, root)
    dv = fpoly.peval(sub_ops2, den, root)
    return FieldElem(sub, sub_ops2.div(nv, dv))


def _reduce_coeff(sub_tower, payload, place, depth, shift, pi_sub):
    """Reduce payload * pi^(-shift), allowing zero (positive valuation)."""
    sub_ops = tower_ops(sub_tower)
    if sub_ops.is_zero(payload):
        rf = residue_field(place, sub_tower)
        z = _rf_zero(rf)
        return z if isinstance(z, FieldElem) else _as_elem(rf, z)
    elem = FieldElem(sub_tower, payload)
    if shift:
        elem = elem * pi_sub ** (-shift)
    v = valuation(elem, place)
    rf = residue_field(place, sub_tower)
    if v > 0:
        z = _rf_zero(rf)
        return z if isinstance(z, FieldElem) else _as_elem(rf, z)
    red = _reduce_unit(sub_tower, elem.payload, place, depth, rf)
    return red if isinstance(red, FieldElem) else _as_elem(rf, red)


def _as_elem(rf: ResidueField, value):
    """Wrap a finite/closure residue value as a FieldElem of its tower."""
    t = rf.tower_description()
    if rf.kind == "finite":
        if isinstance(rf.field, ExtField):
            return FieldElem.constant(t, ext_to_lattice(rf.field, value))
        return FieldElem.constant(t, value)
    if rf.kind == "closure":
        return FieldElem.constant(t, value)
    return value


def _sub_value_to_residue(sub_tower, val_payload, place):
    if isinstance(sub_tower, FiniteBase) or isinstance(sub_tower, ClosureBase):
        return val_payload
    return FieldElem(sub_tower, val_payload)


_EXT_ROOT_CACHE = {}


def ext_to_lattice(E: ExtField, raw):
    """Map F_q[t]/(pi) into the lattice field F_{p^(k*deg)} (fixed F_q-embedding)."""
    base = E.base
    if isinstance(base, ExtField):
        raise UnsupportedTower("lattice form of stacked extensions not needed")
    p, k, d = base.p, base.k, E.deg
    target = FF(p, k * d)
    key = (base.p, base.k, E.modulus)
    root = _EXT_ROOT_CACHE.get(key)
    if root is None:
        lifted = tuple(embed(base, target, c) for c in E.modulus)
        rts = fpoly.roots(target, lifted)
        if not rts:
            raise AssertionError("modulus has no root in its lattice field")
        root = sorted(rts)[0]
        _EXT_ROOT_CACHE[key] = root
    acc = target.zero
    for c in reversed(raw):
        acc = target.add(target.mul(acc, root), embed(base, target, c))
    return acc


# ---------------------------------------------------------------------------
# support-driven place enumeration
# ---------------------------------------------------------------------------

def support_places(tower, elems, include_infinity=True):
    """All places of every layer that can carry nonzero valuation for elems.

    This is the finite bad set used everywhere: irreducible factors of the
    numerators and denominators at each rational layer (Gauss-extended when
    the layer sits below the top), the point at infinity of each rational
    layer, and the uniformizer of each Laurent layer.
    """
    out = []
    seen = set()
    level_chain = []
    t = tower
    while isinstance(t, (RatLayer, LaurentLayer)):
        level_chain.append(t)
        t = t.base
    level_chain.reverse()

    for lt in level_chain:
        if isinstance(lt, LaurentLayer):
            pl = place_laurent(lt)
            if pl not in seen:
                seen.add(pl)
                out.append(pl)
            continue
        polys = set()
        for e in elems:
            if e is None or e.is_zero():
                continue
            for poly in _level_polys(e.tower, e.payload, lt):
                polys.add(poly)
        for poly in sorted(polys, key=_poly_key):
            for irr in _layer_irreducible_factors(lt, poly):
                pl = irr
                if pl not in seen:
                    seen.add(pl)
                    out.append(pl)
        if include_infinity:
            pl = place_infinity(lt)
            if pl not in seen:
                seen.add(pl)
                out.append(pl)
    return out


def _poly_key(poly):
    return repr(poly)


def _level_polys(tower, payload, level_tower):
    """Collect this payload's num/den polynomials at the given layer."""
    if tower == level_tower:
        num, den = payload
        return [num, den]
    if not isinstance(tower, (RatLayer, LaurentLayer)):
        return []
    out = []
    num, den = payload
    sub = tower.base
    sub_ops = tower_ops(sub)
    for c in tuple(num) + tuple(den):
        if not sub_ops.is_zero(c):
            out.extend(_level_polys(sub, c, level_tower))
    return out


def _layer_irreducible_factors(level_tower: RatLayer, poly):
    """Places of the layer dividing the polynomial."""
    sub = level_tower.base
    if fpoly.degree(poly) < 1:
        return []
    if isinstance(sub, FiniteBase):
        K = FF(sub.p, sub.k)
        _, facs = fpoly.factor(K, poly)
        return [place_irreducible(level_tower, f, check=False) for f, _ in facs]
    if isinstance(sub, ClosureBase):
        return [place_irreducible(level_tower, ((-c), tower_ops(sub).one),
                                  check=False)
                for c in closure_roots(sub.p, poly)]
    # nested rational layer: line arrangements only
    facs, rest_deg = linear_form_factors(level_tower, poly)
    if rest_deg > 0:
        raise NotALineArrangement(
            "entry is not a product of affine-linear forms")
    return [place_irreducible(level_tower, f, check=False) for f, _ in facs]


def closure_roots(p, poly_over_closure):
    """All roots (as ClosureElt) of a polynomial with closure coefficients."""
    C = ClosureField(p)
    degs = [c.deg for c in poly_over_closure if isinstance(c, ClosureElt) and c]
    m = 1
    for d in degs:
        m = m * d // gcd(m, d)
    roots = []
    # split completely: each irreducible factor of degree d over F_{p^m}
    # has its roots in F_{p^(m d)}
    Km = FF(p, m)
    lifted = tuple(embed(FF(p, c.deg), Km, c.raw) if c else Km.zero
                   for c in poly_over_closure)
    lifted = fpoly.trim(Km, lifted)
    _, facs = fpoly.factor(Km, lifted)
    for f, mult in facs:
        d = fpoly.degree(f)
        Kd = FF(p, m * d)
        up = tuple(embed(Km, Kd, c) for c in f)
        for r in fpoly.roots(Kd, up):
            roots.append(ClosureElt(p, Kd.k, r))
    # deterministic order
    roots.sort(key=lambda c: (c.deg, c.raw))
    return roots


def linear_form_factors(level_tower: RatLayer, poly):
    """Trial-divide by monic-linear forms of the layer; (factors, rest_deg).

    Only used on nested rational layers (line arrangements over F_q(x)).
    Candidates y - (a*x + b) run over the finite base; the leftover content
    in the subfield is reported through rest_deg of the y-part only.
    """
    sub = level_tower.base
    sub_ops = tower_ops(sub)
    if not isinstance(sub, RatLayer) or not isinstance(sub.base, FiniteBase):
        raise UnsupportedTower("linear-form factoring expects F_q(x)(y)")
    K = FF(sub.base.p, sub.base.k)
    factors = []
    rest = poly
    x_elem = FieldElem.variable(sub, sub.var)
    for a_raw in K.iter_elements():
        if fpoly.degree(rest) < 1:
            break
        for b_raw in K.iter_elements():
            if fpoly.degree(rest) < 1:
                break
            cand_c = FieldElem.constant(sub, b_raw) + \
                FieldElem.constant(sub, a_raw) * x_elem
            cand = (sub_ops.neg(cand_c.payload), sub_ops.one)
            mult = 0
            while fpoly.degree(rest) >= 1:
                q, r = fpoly.pdivmod(sub_ops, rest, cand)
                if not fpoly.is_zero(r):
                    break
                rest = q
                mult += 1
            if mult:
                factors.append((cand, mult))
    return factors, fpoly.degree(rest)


# ---------------------------------------------------------------------------
# n-th power tests inside towers
# ---------------------------------------------------------------------------

def tower_is_nth_power(elem: FieldElem, n: int) -> bool:
    """Is the element an n-th power in its tower (Laurent layers complete)?

    On Laurent layers the test uses the complete field k((t)): valuation
    divisible by n and residue unit an n-th power (principal units are n-th
    powers for n prime to the residue characteristic).
    """
    if elem.is_zero():
        raise ZeroElement("n-th power test on zero")
    if n == 1:
        return True
    tower = elem.tower
    if n % tower_base(tower).p == 0:
        raise CharacteristicDivides("n must be invertible in the field")
    if isinstance(tower, FiniteBase):
        return FF(tower.p, tower.k).is_nth_power(elem.payload, n)
    if isinstance(tower, ClosureBase):
        return elem.payload.is_nth_power(n)
    if isinstance(tower, LaurentLayer):
        pl = place_laurent(tower)
        v = valuation(elem, pl)
        if v % n != 0:
            return False
        return tower_is_nth_power(_unit_residue(elem, pl), n)
    # rational layer
    sub = tower.base
    num, den = elem.payload
    if isinstance(sub, FiniteBase):
        K = FF(sub.p, sub.k)
        for poly in (num, den):
            if fpoly.degree(poly) > 0:
                _, facs = fpoly.factor(K, poly)
                if any(m % n for _, m in facs):
                    return False
        lead = K.div(num[-1], den[-1])
        return K.is_nth_power(lead, n)
    if isinstance(sub, ClosureBase):
        for poly in (num, den):
            if fpoly.degree(poly) > 0:
                for _, m in _closure_factor_mults(sub.p, poly):
                    if m % n:
                        return False
        return True
    raise UnsupportedTower(
        "n-th power tests on nested rational layers are out of scope")


def _closure_factor_mults(p, poly):
    degs = [c.deg for c in poly if isinstance(c, ClosureElt) and c]
    m = 1
    for d in degs:
        m = m * d // gcd(m, d)
    Km = FF(p, m)
    lifted = fpoly.trim(Km, tuple(
        embed(FF(p, c.deg), Km, c.raw) if c else Km.zero for c in poly))
    _, facs = fpoly.factor(Km, lifted)
    return facs


def _unit_residue(elem, pl):
    v = valuation(elem, pl)
    if v:
        elem = elem * uniformizer(pl, elem.tower) ** (-v)
    return reduce_at(elem, pl)


def tower_class_order(elem: FieldElem, n: int) -> int:
    """Order of the class of elem in K*/(K*)^n (Laurent layers complete)."""
    for d in sorted(_divisors(n)):
        if tower_is_nth_power(elem ** d, n):
            return d
    raise AssertionError("class order must divide n")


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


# ---------------------------------------------------------------------------
# Kummer splitting
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class KummerSplitting:
    """Local data of K(f^(1/l))/K at a place: e, f, g with e*f*g = l.

    residue_ext is None when the residue field does not extend; for the
    inert case it is the class u whose l-th root generates kappa(w), kept
    symbolically so membership tests stay in kappa(v).
    """

    e: int
    f: int
    g: int
    residue_ext: object = None

    def __post_init__(self):
        pass


def kummer_splitting(place: Place, f_elem: FieldElem, l: int,
                     ambient_tower=None) -> KummerSplitting:
    """Ramification/residue/splitting data of adjoining an l-th root of f."""
    tower = ambient_tower or f_elem.tower
    if l % tower_base(tower).p == 0:
        raise CharacteristicDivides("l equals the characteristic")
    rf = residue_field(place, tower)
    if f_elem.is_zero():
        raise ZeroElement("Kummer extension of a zero element")
    f_elem = lift_to(f_elem, tower)
    a = valuation(f_elem, place)
    if a % l != 0:
        return KummerSplitting(e=l, f=1, g=1)
    u = reduce_unit_part(f_elem, place)
    if rf.is_nth_power(u, l):
        return KummerSplitting(e=1, f=1, g=l)
    return KummerSplitting(e=1, f=l, g=1, residue_ext=u)


def residue_class_dies(place: Place, r, split: KummerSplitting, l: int,
                       ambient_tower) -> bool:
    """Does the residue class r become trivial mod l above the place?

    Ramified: multiplied by e = l, always trivial.  Split: unchanged, test
    in kappa(v).  Inert: kappa(w) = kappa(v)(u^(1/l)); r dies iff r * u^(-j)
    is an l-th power in kappa(v) for some j (Kummer theory).
    """
    rf = residue_field(place, ambient_tower)
    if split.e == l:
        return True
    if split.g == l:
        return rf.is_nth_power(r, l)
    u = split.residue_ext
    cur = r
    u_inv = rf.inv(u)
    for _ in range(l):
        if rf.is_nth_power(cur, l):
            return True
        cur = rf.mul(cur, u_inv)
    return False
