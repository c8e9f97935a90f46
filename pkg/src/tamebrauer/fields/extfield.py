"""Relative finite-field extensions built over the lattice fields.

An ExtField is base[z]/(modulus) for a finite base (an FqField or another
ExtField) and an irreducible modulus.  Residue fields of places are realized
this way, e.g. F_q[t]/(pi) for a degree-d place, and Kummer steps stack a
further z^l - u on top.  The bottom FqField of the chain is always reachable,
which keeps the canonical root of unity (and hence discrete-log classes and
local invariants) consistent across every extension without any extra
choices: mu_n lives in the bottom field and embeds canonically upward.
"""

from itertools import islice
from math import gcd

from ..errors import (
    CharacteristicDivides,
    DivisionByZero,
    RootsOfUnityMissing,
    ZeroElement,
)
from ..nt import factorint, prime_divisors
from . import fpoly
from .finite import FqField


class ExtField:
    """base[z]/(modulus); raw elements are trimmed tuples of base raws."""

    def __init__(self, base, modulus, name="z"):
        if fpoly.degree(modulus) < 1:
            raise ValueError("extension modulus must have degree >= 1")
        if not fpoly.is_irreducible(base, modulus):
            raise ValueError("extension modulus is not irreducible")
        self.base = base
        self.modulus = fpoly.monic(base, modulus)
        self.deg = fpoly.degree(modulus)
        self.order = base.order ** self.deg
        self.char = base.char
        self.name = name
        self.zero = ()
        self.one = (base.one,)
        self._generator = None

    # -- adapter arithmetic on raw tuples -------------------------------------

    def add(self, a, b):
        return fpoly.padd(self.base, a, b)

    def sub(self, a, b):
        return fpoly.psub(self.base, a, b)

    def neg(self, a):
        return fpoly.pneg(self.base, a)

    def mul(self, a, b):
        return fpoly.pmod(self.base, fpoly.pmul(self.base, a, b), self.modulus)

    def inv(self, a):
        if not a:
            raise DivisionByZero("inverse of zero in extension field")
        d, s, _ = fpoly.pxgcd(self.base, a, self.modulus)
        if fpoly.degree(d) != 0:
            raise AssertionError("modulus not irreducible after all")
        return fpoly.pmod(self.base,
                          fpoly.pscale(self.base, s, self.base.inv(d[0])),
                          self.modulus)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

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

    def eq(self, a, b):
        return a == b

    def is_zero(self, a):
        return not a

    # -- structure -------------------------------------------------------------

    @property
    def gen(self):
        """The class of z."""
        return (self.base.zero, self.base.one)

    def from_base(self, raw):
        return (raw,) if not self.base.is_zero(raw) else ()

    def from_int(self, n):
        return self.from_base(self.base.from_int(n))

    def bottom(self):
        """The FqField at the bottom of the chain."""
        f = self.base
        while isinstance(f, ExtField):
            f = f.base
        return f

    def lift_bottom(self, raw_bottom):
        """Embed an element of the bottom FqField up the whole chain."""
        if isinstance(self.base, ExtField):
            return self.from_base(self.base.lift_bottom(raw_bottom))
        return self.from_base(raw_bottom)

    def element_seq(self):
        base_elts = list(islice(self.base.element_seq(), 64))
        n = len(base_elts)
        total = n ** self.deg
        for idx in range(total):
            m = idx
            c = []
            for _ in range(self.deg):
                c.append(base_elts[m % n])
                m //= n
            yield fpoly.trim(self.base, tuple(c))

    def iter_elements(self):
        base_elts = list(self.base.iter_elements())
        n = len(base_elts)
        for idx in range(n ** self.deg):
            m = idx
            c = []
            for _ in range(self.deg):
                c.append(base_elts[m % n])
                m //= n
            yield fpoly.trim(self.base, tuple(c))

    def generator(self):
        """A deterministic generator of the multiplicative group."""
        if self._generator is None:
            qs = prime_divisors(self.order - 1)
            for cand in self.element_seq():
                if not cand:
                    continue
                if all(self.pow(cand, (self.order - 1) // q) != self.one
                       for q in qs):
                    self._generator = cand
                    break
            else:
                raise AssertionError("no generator found")
        return self._generator

    # -- power classes ----------------------------------------------------------

    def root_of_unity(self, n):
        if n <= 0 or (self.order - 1) % n != 0:
            raise RootsOfUnityMissing(f"{n} does not divide q - 1")
        bot = self.bottom()
        if (bot.order - 1) % n == 0:
            return self.lift_bottom(bot.root_of_unity(n))
        # n-th roots of unity exist here but not below: use own generator
        return self.pow(self.generator(), (self.order - 1) // n)

    def is_nth_power(self, a, n):
        if not a:
            raise ZeroElement("n-th power test on zero")
        if n % self.char == 0:
            raise CharacteristicDivides("n must be prime to the characteristic")
        d = gcd(n, self.order - 1)
        return self.pow(a, (self.order - 1) // d) == self.one

    def dlog_class(self, a, n):
        """j mod n with a = (canonical generator)^j modulo n-th powers.

        Computed through the canonical primitive n-th root of unity of the
        bottom lattice field; this agrees with the discrete log against any
        norm-compatible generator of the extension.
        """
        if not a:
            raise ZeroElement("discrete log class of zero")
        if (self.order - 1) % n != 0:
            raise RootsOfUnityMissing(f"{n} does not divide q - 1")
        zeta = self.root_of_unity(n)
        target = self.pow(a, (self.order - 1) // n)
        acc = self.one
        for j in range(n):
            if acc == target:
                return j
            acc = self.mul(acc, zeta)
        raise AssertionError("dlog_class: target is not an n-th root of unity")

    def nth_root(self, a, n):
        """Some x with x^n = a, or None; deterministic via discrete logs."""
        if not a:
            raise ZeroElement("n-th root of zero")
        q1 = self.order - 1
        d = gcd(n, q1)
        if self.pow(a, q1 // d) != self.one:
            return None
        from ..nt import solve_linear_congruence
        g = self.generator()
        t = ph_dlog(self, g, a)
        sol = solve_linear_congruence(n % q1, t, q1)
        if sol is None:
            return None
        return self.pow(g, sol[0])

    def __repr__(self):
        return f"{self.base!r}[{self.name}]/deg{self.deg}"

    def __eq__(self, other):
        return (isinstance(other, ExtField) and self.base == other.base
                and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.base, self.modulus))


# ---------------------------------------------------------------------------
# helpers shared by place machinery
# ---------------------------------------------------------------------------

def ph_dlog(K, base, target):
    """Pohlig-Hellman discrete log of target base a full-order base in K."""
    from ..nt import crt_pair
    n = K.order - 1
    residues = []
    for q, e in factorint(n):
        qe = q ** e
        g_q = K.pow(base, n // qe)
        a_q = K.pow(target, n // qe)
        x = 0
        gamma = K.pow(g_q, qe // q)
        for i in range(e):
            h = K.pow(K.mul(a_q, K.inv(K.pow(g_q, x))), qe // (q ** (i + 1)))
            x += _gen_bsgs(K, gamma, h, q) * (q ** i)
        residues.append((x, qe))
    x, m = residues[0]
    for a2, m2 in residues[1:]:
        x, m = crt_pair(x, m, a2, m2)
    return x % n


def _gen_bsgs(K, base, target, order):
    m = int(order ** 0.5) + 1
    table = {}
    e = K.one
    for j in range(m):
        table.setdefault(e, j)
        e = K.mul(e, base)
    step = K.inv(K.pow(base, m))
    gamma = target
    for i in range(m + 1):
        if gamma in table:
            return (i * m + table[gamma]) % order
        gamma = K.mul(gamma, step)
    raise AssertionError("bsgs: log not found")


def field_is_finite(K):
    return isinstance(K, (FqField, ExtField))


def nth_power_with_witness(K, a, n):
    """(bool, witness) over any finite adapter with canonical structure."""
    ok = K.is_nth_power(a, n)
    if not ok:
        return False, None
    w = K.nth_root(a, n)
    if w is None or K.pow(w, n) != a:
        raise AssertionError("witness extraction failed on an n-th power")
    return True, w
