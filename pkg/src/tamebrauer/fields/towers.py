"""Field towers and their elements.

A tower is a chain: a finite base F_{p^k} or the algebraic closure of F_p,
followed by rational function layers F(var) and tame Laurent layers F((var)).
Elements of a Laurent layer are restricted to rational functions of the
Laurent variable (the tame subfield), which keeps all arithmetic exact.

An element of a layered tower is stored as a pair (numerator, denominator) of
univariate polynomials in the top variable whose coefficients are elements of
the subtower, recursively.  Canonical form: gcd(num, den) = 1 and den monic,
so equality is structural.  Everything is immutable and hashable.
"""

from dataclasses import dataclass
from functools import lru_cache

from ..errors import DivisionByZero, TowerMismatch
from . import fpoly
from .finite import FF, ClosureElt, ClosureField, embed


# ---------------------------------------------------------------------------
# tower descriptors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FiniteBase:
    p: int
    k: int = 1

    def __post_init__(self):
        FF(self.p, self.k)  # validates primality and constructs the field

    def describe(self):
        return f"Fq({self.p},{self.k})"


@dataclass(frozen=True)
class ClosureBase:
    p: int

    def __post_init__(self):
        ClosureField(self.p)

    def describe(self):
        return f"Fpbar({self.p})"


@dataclass(frozen=True)
class RatLayer:
    base: object
    var: str

    def __post_init__(self):
        if self.var in tower_vars(self.base):
            raise ValueError(f"duplicate variable {self.var!r} in tower")

    def describe(self):
        return f"{self.base.describe()}({self.var})"


@dataclass(frozen=True)
class LaurentLayer:
    base: object
    var: str

    def __post_init__(self):
        if self.var in tower_vars(self.base):
            raise ValueError(f"duplicate variable {self.var!r} in tower")

    def describe(self):
        return f"{self.base.describe()}(({self.var}))"


def Fq(p, k=1):
    return FiniteBase(p, k)


def Fpbar(p):
    return ClosureBase(p)


def rat(tower, var):
    return RatLayer(tower, var)


def laurent(tower, var):
    return LaurentLayer(tower, var)


def tower_vars(tower):
    out = []
    t = tower
    while isinstance(t, (RatLayer, LaurentLayer)):
        out.append(t.var)
        t = t.base
    return list(reversed(out))


def tower_layers(tower):
    """Layers from bottom (the base) to the top."""
    out = []
    t = tower
    while isinstance(t, (RatLayer, LaurentLayer)):
        out.append(t)
        t = t.base
    out.append(t)
    return list(reversed(out))


def tower_base(tower):
    t = tower
    while isinstance(t, (RatLayer, LaurentLayer)):
        t = t.base
    return t


def base_field(tower):
    """The FqField or ClosureField at the bottom of the tower."""
    b = tower_base(tower)
    if isinstance(b, FiniteBase):
        return FF(b.p, b.k)
    return ClosureField(b.p)


def characteristic(tower):
    return tower_base(tower).p


def is_finite_base(tower):
    return isinstance(tower_base(tower), FiniteBase)


# ---------------------------------------------------------------------------
# payload arithmetic (the fpoly coefficient adapter for each tower)
# ---------------------------------------------------------------------------

class TowerOps:
    """Field operations on raw payloads of a fixed tower.

    Base payloads are FqField raw tuples or ClosureElt; layer payloads are
    (num, den) pairs of fpoly tuples over the subtower payloads.  The class
    satisfies the fpoly field-adapter interface, so towers can serve as
    coefficient fields of further polynomial layers (attribute S is the
    subtower adapter).
    """

    def __init__(self, tower):
        self.tower = tower
        if isinstance(tower, (RatLayer, LaurentLayer)):
            self.S = tower_ops(tower.base)
            self._field = None
            self.zero = ((), (self.S.one,))
            self.one = ((self.S.one,), (self.S.one,))
        elif isinstance(tower, FiniteBase):
            self.S = None
            self._field = FF(tower.p, tower.k)
            self.zero = self._field.zero
            self.one = self._field.one
        else:
            self.S = None
            self._field = ClosureField(tower.p)
            self.zero = self._field.zero
            self.one = self._field.one

    def _is_layer(self):
        return self.S is not None

    def make(self, num, den):
        """Canonical rational payload from polynomial num/den over sub."""
        S = self.S
        if fpoly.is_zero(den):
            raise DivisionByZero("zero denominator")
        if fpoly.is_zero(num):
            return self.zero
        g = fpoly.pgcd(S, num, den)
        if fpoly.degree(g) > 0:
            num = fpoly.pdivmod(S, num, g)[0]
            den = fpoly.pdivmod(S, den, g)[0]
        lead = den[-1]
        if not S.eq(lead, S.one):
            c = S.inv(lead)
            num = fpoly.pscale(S, num, c)
            den = fpoly.pscale(S, den, c)
        return (num, den)

    def add(self, a, b):
        if not self._is_layer():
            return self._field.add(a, b)
        S = self.S
        n = fpoly.padd(S, fpoly.pmul(S, a[0], b[1]), fpoly.pmul(S, b[0], a[1]))
        return self.make(n, fpoly.pmul(S, a[1], b[1]))

    def neg(self, a):
        if not self._is_layer():
            return self._field.neg(a)
        return (fpoly.pneg(self.S, a[0]), a[1])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if not self._is_layer():
            return self._field.mul(a, b)
        S = self.S
        return self.make(fpoly.pmul(S, a[0], b[0]), fpoly.pmul(S, a[1], b[1]))

    def inv(self, a):
        if not self._is_layer():
            return self._field.inv(a)
        if fpoly.is_zero(a[0]):
            raise DivisionByZero("inverse of zero")
        return self.make(a[1], a[0])

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def eq(self, a, b):
        if not self._is_layer():
            return self._field.eq(a, b)
        return a == b

    def is_zero(self, a):
        if not self._is_layer():
            return self._field.is_zero(a)
        return fpoly.is_zero(a[0])

    def pow(self, a, e):
        if e < 0:
            return self.pow(self.inv(a), -e)
        out = self.one
        while e:
            if e & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            e >>= 1
        return out

    def from_int(self, n):
        if not self._is_layer():
            return self._field.from_int(n)
        c = self.S.from_int(n)
        return ((c,), (self.S.one,)) if not self.S.is_zero(c) else self.zero

    def lift(self, sub_payload):
        """Constant-embed a subtower payload one layer up."""
        if not self._is_layer():
            raise TypeError("base tower has no sublayer")
        if self.S.is_zero(sub_payload):
            return self.zero
        return ((sub_payload,), (self.S.one,))


_OPS_CACHE = {}


def tower_ops(tower):
    ops = _OPS_CACHE.get(tower)
    if ops is None:
        ops = TowerOps(tower)
        _OPS_CACHE[tower] = ops
    return ops


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------

class FieldElem:
    """An element of a field tower, in canonical coprime form."""

    __slots__ = ("tower", "payload")

    def __init__(self, tower, payload):
        self.tower = tower
        self.payload = payload

    # construction helpers

    @staticmethod
    def from_int(tower, n):
        return FieldElem(tower, tower_ops(tower).from_int(n))

    @staticmethod
    def zero(tower):
        return FieldElem(tower, tower_ops(tower).zero)

    @staticmethod
    def one(tower):
        return FieldElem(tower, tower_ops(tower).one)

    @staticmethod
    def variable(tower, name):
        """The element given by a declared tower variable."""
        layers = tower_layers(tower)
        names = [l.var for l in layers[1:]]
        if name not in names:
            raise TowerMismatch(f"variable {name!r} not declared in tower")
        ops = tower_ops(tower)
        if isinstance(tower, (RatLayer, LaurentLayer)) and tower.var == name:
            sub = tower_ops(tower.base)
            return FieldElem(tower, ((sub.zero, sub.one), (sub.one,)))
        sub_elem = FieldElem.variable(tower.base, name)
        return FieldElem(tower, ops.lift(sub_elem.payload))

    @staticmethod
    def generator(tower):
        """The canonical generator g of the finite base field."""
        b = tower_base(tower)
        if isinstance(b, FiniteBase):
            raw = FF(b.p, b.k).generator_raw
        else:
            raw = ClosureElt(b.p, 1, FF(b.p).generator_raw)
        return FieldElem.constant(tower, raw)

    @staticmethod
    def constant(tower, base_raw):
        """Lift a base-field raw value (FF raw or ClosureElt) to the tower."""
        ops = tower_ops(tower)
        if isinstance(tower, (RatLayer, LaurentLayer)):
            sub = FieldElem.constant(tower.base, base_raw)
            return FieldElem(tower, ops.lift(sub.payload))
        return FieldElem(tower, base_raw)

    # predicates

    def is_zero(self):
        return tower_ops(self.tower).is_zero(self.payload)

    def __bool__(self):
        return not self.is_zero()

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.tower != self.tower:
                raise TowerMismatch(
                    f"elements of {self.tower.describe()} and "
                    f"{other.tower.describe()} cannot be combined")
            return other.payload
        if isinstance(other, int):
            return tower_ops(self.tower).from_int(other)
        raise TypeError(f"cannot combine FieldElem with {type(other)!r}")

    def __add__(self, other):
        ops = tower_ops(self.tower)
        return FieldElem(self.tower, ops.add(self.payload, self._coerce(other)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(self.tower, tower_ops(self.tower).neg(self.payload))

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) + (-self)

    def _wrap(self, other):
        return FieldElem(self.tower, self._coerce(other))

    def __mul__(self, other):
        ops = tower_ops(self.tower)
        return FieldElem(self.tower, ops.mul(self.payload, self._coerce(other)))

    __rmul__ = __mul__

    def inv(self):
        return FieldElem(self.tower, tower_ops(self.tower).inv(self.payload))

    def __truediv__(self, other):
        ops = tower_ops(self.tower)
        return FieldElem(self.tower, ops.div(self.payload, self._coerce(other)))

    def __rtruediv__(self, other):
        return self._wrap(other) / self

    def __pow__(self, e):
        return FieldElem(self.tower, tower_ops(self.tower).pow(self.payload, e))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.payload == tower_ops(self.tower).from_int(other)
        return (isinstance(other, FieldElem) and self.tower == other.tower
                and self.payload == other.payload)

    def __hash__(self):
        return hash((self.tower, _hashable(self.payload)))

    # structure access (top layer)

    def num_den(self):
        """Numerator and denominator polynomials over the subtower."""
        if not isinstance(self.tower, (RatLayer, LaurentLayer)):
            raise TypeError("base-field element has no num/den split")
        return self.payload

    def __repr__(self):
        return render_payload(self.tower, self.payload)


def _hashable(payload):
    return payload if not isinstance(payload, ClosureElt) else (
        payload.p, payload.deg, payload.raw)


def elem_arith(op, a, b=None):
    """Dispatcher form of the element arithmetic: add, mul, inv, neg."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    if op == "inv":
        if b is not None:
            raise TypeError("inv takes a single operand")
        return a.inv()
    raise ValueError(f"unknown operation {op!r}")


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def render_payload(tower, payload):
    if isinstance(tower, FiniteBase):
        return _render_base_finite(tower, payload)
    if isinstance(tower, ClosureBase):
        return repr(payload)
    num, den = payload
    sub = tower.base
    n = _render_poly(sub, num, tower.var)
    if den == (tower_ops(sub).one,):
        return n
    d = _render_poly(sub, den, tower.var)
    return f"({n})/({d})"


def _render_base_finite(base, raw):
    field = FF(base.p, base.k)
    if base.k == 1:
        return str(raw[0] if raw else 0)
    if not raw:
        return "0"
    terms = []
    for i, c in enumerate(raw):
        if c:
            if i == 0:
                terms.append(str(c))
            else:
                head = "" if c == 1 else f"{c}*"
                terms.append(f"{head}g^{i}" if i > 1 else f"{head}g")
    return " + ".join(terms) if terms else "0"


def _render_poly(sub_tower, poly, var):
    if not poly:
        return "0"
    sub_ops = tower_ops(sub_tower)
    parts = []
    for i in range(len(poly) - 1, -1, -1):
        c = poly[i]
        if sub_ops.is_zero(c):
            continue
        cs = render_payload(sub_tower, c)
        needs_paren = any(s in cs for s in "+-/ ") and i > 0
        if i == 0:
            parts.append(cs)
        else:
            xpow = var if i == 1 else f"{var}^{i}"
            if cs == "1":
                parts.append(xpow)
            else:
                parts.append(f"({cs})*{xpow}" if needs_paren else f"{cs}*{xpow}")
    return " + ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# structural mapping between towers (substitution, base change)
# ---------------------------------------------------------------------------

def map_element(elem, target_tower, var_images, base_map):
    """Rebuild an element inside another tower.

    var_images maps variable names to FieldElems of the target tower;
    base_map sends base payloads (FF raws / ClosureElt) to target FieldElems.
    The map must be a field embedding, so denominators stay nonzero.
    """
    return _map_payload(elem.tower, elem.payload, target_tower, var_images,
                        base_map)


def _map_payload(tower, payload, target, var_images, base_map):
    if isinstance(tower, (FiniteBase, ClosureBase)):
        return base_map(payload)
    num, den = payload
    x_img = var_images[tower.var]
    num_val = _eval_poly(tower.base, num, x_img, target, var_images, base_map)
    den_val = _eval_poly(tower.base, den, x_img, target, var_images, base_map)
    return num_val / den_val


def _eval_poly(sub_tower, poly, x_img, target, var_images, base_map):
    acc = FieldElem.zero(target)
    for c in reversed(poly):
        c_img = _map_payload(sub_tower, c, target, var_images, base_map)
        acc = acc * x_img + c_img
    return acc


def identity_base_map(source_tower, target_tower):
    """Base map for towers sharing a base, or embedding into a larger base."""
    sb = tower_base(source_tower)
    tb = tower_base(target_tower)
    if isinstance(sb, ClosureBase) and isinstance(tb, ClosureBase):
        if sb.p != tb.p:
            raise TowerMismatch("different characteristics")
        return lambda payload: FieldElem.constant(target_tower, payload)
    if isinstance(sb, FiniteBase) and isinstance(tb, FiniteBase):
        if sb.p != tb.p or tb.k % sb.k != 0:
            raise TowerMismatch("no base-field embedding")
        src, dst = FF(sb.p, sb.k), FF(tb.p, tb.k)
        return lambda raw: FieldElem.constant(target_tower,
                                              embed(src, dst, raw))
    raise TowerMismatch("incompatible tower bases")
