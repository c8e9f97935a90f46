"""Finite fields F_{p^k} with a deterministic compatible lattice.

Every absolute field F_{p^k} is represented as F_p[y]/(f_k) where f_k is the
minimal polynomial of a canonical primitive generator g_k.  The generators
are chosen norm-compatibly: for m | k,

    g_k ** ((p^k - 1) // (p^m - 1))  is a root of f_m,

so the embeddings F_{p^m} -> F_{p^k} defined by g_m -> g_k^((p^k-1)/(p^m-1))
commute across the whole divisibility lattice.  The construction is fully
deterministic (first irreducible modulus, first primitive element, smallest
compatible exponent), so canonical generators, roots of unity and discrete
log classes are reproducible bit for bit.

Raw elements are coefficient tuples over Z/p (length k, little-endian in the
generator).  The field object carries the arithmetic; FFElt is a thin
hashable wrapper used at API boundaries.
"""

from functools import lru_cache
from math import gcd, prod

from ..errors import (
    CharacteristicDivides,
    DivisionByZero,
    RootsOfUnityMissing,
    ZeroElement,
)
from ..nt import crt_pair, factorint, is_prime, prime_divisors, solve_linear_congruence


# ---------------------------------------------------------------------------
# raw polynomial helpers over Z/p (dense little-endian int tuples)
# ---------------------------------------------------------------------------

def _ptrim(c):
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def _padd(p, a, b):
    n = max(len(a), len(b))
    return _ptrim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
                   for i in range(n)])


def _pneg(p, a):
    return tuple((-x) % p for x in a)


def _pmul(p, a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _ptrim(out)


def _pdivmod(p, a, b):
    if not b:
        raise DivisionByZero("polynomial division by zero")
    a = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    inv_lead = pow(b[-1], -1, p)
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] % p
        if c:
            c = c * inv_lead % p
            q[i - db] = c
            for j, y in enumerate(b):
                a[i - db + j] = (a[i - db + j] - c * y) % p
    return _ptrim(q), _ptrim(a)


# ---------------------------------------------------------------------------
# the absolute field
# ---------------------------------------------------------------------------

class FqField:
    """The finite field F_{p^k} in its canonical lattice presentation."""

    def __init__(self, p, k, modulus, generator):
        self.p = p
        self.k = k
        self.order = p ** k
        self.char = p
        self.modulus = modulus          # monic, degree k, over Z/p
        self.generator_raw = generator  # raw tuple, canonical primitive elt
        self.zero = ()
        self.one = (1,) if p > 1 else ()
        self._embed_cache = {}
        self._section_cache = {}

    # -- basic raw arithmetic ------------------------------------------------

    def add(self, a, b):
        return _padd(self.p, a, b)

    def sub(self, a, b):
        return _padd(self.p, a, _pneg(self.p, b))

    def neg(self, a):
        return _pneg(self.p, a)

    def mul(self, a, b):
        return _pdivmod(self.p, _pmul(self.p, a, b), self.modulus)[1]

    def square(self, a):
        return self.mul(a, a)

    def inv(self, a):
        if not a:
            raise DivisionByZero("inverse of zero in F_q")
        # extended Euclid against the modulus
        p = self.p
        r0, r1 = self.modulus, a
        s0, s1 = (), (1,)
        while r1:
            q, r = _pdivmod(p, r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _padd(p, s0, _pneg(p, _pmul(p, q, s1)))
        # r0 is a nonzero constant gcd
        c = pow(r0[0], -1, p)
        return _pdivmod(p, _pmul(p, (c,), s0), self.modulus)[1]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if e < 0:
            return self.pow(self.inv(a), -e)
        out = self.one
        base = a
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def eq(self, a, b):
        return a == b

    def is_zero(self, a):
        return not a

    def from_int(self, n):
        n %= self.p
        return (n,) if n else ()

    def scalar(self, n):
        return self.from_int(n)

    # -- structure -----------------------------------------------------------

    def iter_elements(self):
        """All p^k elements in deterministic counter order."""
        p, k = self.p, self.k
        for n in range(self.order):
            c = []
            m = n
            for _ in range(k):
                c.append(m % p)
                m //= p
            yield _ptrim(c)

    def element_seq(self):
        """Deterministic endless-enough element stream for splitting tricks."""
        return self.iter_elements()

    def multiplicative_order(self, a):
        if not a:
            raise ZeroElement("order of zero")
        n = self.order - 1
        o = n
        for q in prime_divisors(n):
            while o % q == 0 and self.pow(a, o // q) == self.one:
                o //= q
        return o

    def is_generator(self, a):
        if not a:
            return False
        n = self.order - 1
        return all(self.pow(a, n // q) != self.one for q in prime_divisors(n))

    def root_of_unity(self, n):
        """The canonical primitive n-th root of unity g^((q-1)/n)."""
        if n <= 0 or (self.order - 1) % n != 0:
            raise RootsOfUnityMissing(
                f"{n} does not divide q - 1 = {self.order - 1}")
        return self.pow(self.generator_raw, (self.order - 1) // n)

    def dlog_class(self, a, n):
        """j in Z/n with a = g^j modulo n-th powers."""
        if not a:
            raise ZeroElement("discrete log class of zero")
        zeta = self.root_of_unity(n)
        target = self.pow(a, (self.order - 1) // n)
        acc = self.one
        for j in range(n):
            if acc == target:
                return j
            acc = self.mul(acc, zeta)
        raise AssertionError("dlog_class: target not a power of zeta")

    def is_nth_power(self, a, n):
        if not a:
            raise ZeroElement("n-th power test on zero")
        if n % self.p == 0:
            raise CharacteristicDivides(f"gcd({n}, char) != 1")
        d = gcd(n, self.order - 1)
        return self.pow(a, (self.order - 1) // d) == self.one

    def nth_root(self, a, n):
        """Some x with x^n = a, or None.  Deterministic via discrete logs."""
        if not a:
            raise ZeroElement("n-th root of zero")
        t = self.dlog(a)
        sol = solve_linear_congruence(n % (self.order - 1), t, self.order - 1)
        if sol is None:
            return None
        return self.pow(self.generator_raw, sol[0])

    def dlog(self, a):
        """Full discrete log base the canonical generator (Pohlig-Hellman)."""
        if not a:
            raise ZeroElement("discrete log of zero")
        n = self.order - 1
        residues = []
        for q, e in factorint(n):
            qe = q ** e
            g_q = self.pow(self.generator_raw, n // qe)
            a_q = self.pow(a, n // qe)
            x = 0
            gamma = self.pow(g_q, qe // q)  # order q
            for i in range(e):
                h = self.pow(self.mul(a_q, self.inv(self.pow(g_q, x))),
                             qe // (q ** (i + 1)))
                d = _bsgs(self, gamma, h, q)
                x += d * (q ** i)
            residues.append((x, qe))
        x, m = residues[0]
        for a2, m2 in residues[1:]:
            x, m = crt_pair(x, m, a2, m2)
        return x % n

    def elt(self, raw):
        return FFElt(self, raw)

    def __repr__(self):
        return f"F_{self.p}^{self.k}" if self.k > 1 else f"F_{self.p}"

    def __hash__(self):
        return hash((self.p, self.k))

    def __eq__(self, other):
        return isinstance(other, FqField) and (self.p, self.k) == (other.p, other.k)


def _bsgs(K, base, target, order):
    """Baby-step giant-step in the cyclic subgroup of the given prime order."""
    m = int(order ** 0.5) + 1
    table = {}
    e = K.one
    for j in range(m):
        table.setdefault(e, j)
        e = K.mul(e, base)
    factor = K.inv(K.pow(base, m))
    gamma = target
    for i in range(m + 1):
        if gamma in table:
            return (i * m + table[gamma]) % order
        gamma = K.mul(gamma, factor)
    raise AssertionError("bsgs: log not found in claimed subgroup")


class FFElt:
    """Hashable wrapper around a raw element of an FqField."""

    __slots__ = ("field", "raw")

    def __init__(self, field, raw):
        self.field = field
        self.raw = raw

    def __add__(self, other):
        return FFElt(self.field, self.field.add(self.raw, _raw(other, self.field)))

    def __sub__(self, other):
        return FFElt(self.field, self.field.sub(self.raw, _raw(other, self.field)))

    def __mul__(self, other):
        return FFElt(self.field, self.field.mul(self.raw, _raw(other, self.field)))

    def __truediv__(self, other):
        return FFElt(self.field, self.field.div(self.raw, _raw(other, self.field)))

    def __neg__(self):
        return FFElt(self.field, self.field.neg(self.raw))

    def __pow__(self, e):
        return FFElt(self.field, self.field.pow(self.raw, e))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.raw == self.field.from_int(other)
        return (isinstance(other, FFElt) and self.field == other.field
                and self.raw == other.raw)

    def __hash__(self):
        return hash((self.field.p, self.field.k, self.raw))

    def __bool__(self):
        return bool(self.raw)

    def __repr__(self):
        if self.field.k == 1:
            return str(self.raw[0] if self.raw else 0)
        return f"FF({self.field.p}^{self.field.k}, {list(self.raw)})"


def _raw(x, field):
    if isinstance(x, FFElt):
        if x.field != field:
            raise ValueError("mixed finite fields without explicit embedding")
        return x.raw
    if isinstance(x, int):
        return field.from_int(x)
    return x


# ---------------------------------------------------------------------------
# lattice construction
# ---------------------------------------------------------------------------

def _first_irreducible(p, k):
    """First monic irreducible of degree k over F_p in counter order."""
    for n in range(p ** k):
        c = []
        m = n
        for _ in range(k):
            c.append(m % p)
            m //= p
        f = tuple(c) + (1,)
        if _is_irreducible_mod_p(p, f):
            return f
    raise AssertionError("no irreducible polynomial found")


def _is_irreducible_mod_p(p, f):
    k = len(f) - 1
    if k <= 0:
        return False
    x = (0, 1)
    # x^(p^k) = x mod f, and gcd(x^(p^(k/r)) - x, f) = 1 for prime r | k
    xp = _ppow_mod(p, x, p, f)
    pw = xp
    powers = {1: xp}
    for i in range(2, k + 1):
        pw = _ppow_mod(p, pw, p, f)
        powers[i] = pw
    if powers[k] != _pdivmod(p, x, f)[1]:
        return False
    for r in prime_divisors(k):
        d = k // r
        if _pgcd_mod_p(p, _padd(p, powers[d], _pneg(p, x)), f) != (1,):
            return False
    return True


def _ppow_mod(p, a, e, m):
    out = (1,)
    a = _pdivmod(p, a, m)[1]
    while e:
        if e & 1:
            out = _pdivmod(p, _pmul(p, out, a), m)[1]
        a = _pdivmod(p, _pmul(p, a, a), m)[1]
        e >>= 1
    return out


def _pgcd_mod_p(p, a, b):
    while b:
        a, b = b, _pdivmod(p, a, b)[1]
    if a:
        c = pow(a[-1], -1, p)
        a = tuple(x * c % p for x in a)
    return a


def _smallest_primitive_root(p):
    n = p - 1
    qs = prime_divisors(n)
    for g in range(2, p):
        if all(pow(g, n // q, p) != 1 for q in qs):
            return g
    raise AssertionError("no primitive root")


class _Workfield:
    """Scratch field F_p[x]/(e) used while hunting the canonical generator."""

    def __init__(self, p, modulus):
        self.p = p
        self.k = len(modulus) - 1
        self.order = p ** self.k
        self.modulus = modulus
        self.one = (1,)

    def mul(self, a, b):
        return _pdivmod(self.p, _pmul(self.p, a, b), self.modulus)[1]

    def pow(self, a, e):
        out = (1,)
        while e:
            if e & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            e >>= 1
        return out

    def inv(self, a):
        return _ppow_mod_inv(self.p, a, self.modulus)


def _ppow_mod_inv(p, a, m):
    r0, r1 = m, a
    s0, s1 = (), (1,)
    while r1:
        q, r = _pdivmod(p, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _padd(p, s0, _pneg(p, _pmul(p, q, s1)))
    c = pow(r0[0], -1, p)
    return _pdivmod(p, _pmul(p, (c,), s0), m)[1]


def _find_primitive(E):
    qs = prime_divisors(E.order - 1)
    p, k = E.p, E.k
    for n in range(1, E.order):
        c = []
        m = n
        for _ in range(k):
            c.append(m % p)
            m //= p
        a = _ptrim(c)
        if all(E.pow(a, (E.order - 1) // q) != (1,) for q in qs):
            return a
    raise AssertionError("no primitive element")


def _root_indices(E, h, s_m, f_m, pm1):
    """All j mod pm1 with f_m(h^(s_m * j)) = 0, by direct scan."""
    p = E.p
    sigma = E.pow(h, s_m)
    out = []
    cur = (1,)
    for j in range(pm1):
        # Horner evaluation of f_m (coefficients in F_p) at cur
        acc = ()
        for c in reversed(f_m):
            acc = E.mul(acc, cur) if acc else ()
            acc = _padd(p, acc, (c % p,) if c % p else ())
        if not acc:
            out.append(j)
        cur = E.mul(cur, sigma)
    return out


def _root_indices_fast(E, h, s_m, f_m, pm1, p, k):
    """Root indices via one explicit root plus a discrete log."""
    field_like = _WorkAsField(E)
    from .fpoly import roots as poly_roots
    f_lift = tuple((c % p,) if c % p else () for c in f_m)
    rts = poly_roots(field_like, f_lift)
    if not rts:
        raise AssertionError("subfield polynomial has no root in extension")
    rho = rts[0]
    c = _work_dlog(E, h, rho)
    out = set()
    for i in range(len(f_m) - 1):
        sol = solve_linear_congruence(s_m % (E.order - 1),
                                      c * pow(p, i, E.order - 1) % (E.order - 1),
                                      E.order - 1)
        if sol is not None:
            x0, step = sol
            out.add(x0 % pm1)
    return sorted(out)


class _WorkAsField:
    """Adapter exposing a _Workfield with the fpoly field interface."""

    def __init__(self, E):
        self._E = E
        self.p = E.p
        self.char = E.p
        self.order = E.order
        self.zero = ()
        self.one = (1,)

    def add(self, a, b):
        return _padd(self._E.p, a, b)

    def sub(self, a, b):
        return _padd(self._E.p, a, _pneg(self._E.p, b))

    def neg(self, a):
        return _pneg(self._E.p, a)

    def mul(self, a, b):
        return self._E.mul(a, b)

    def inv(self, a):
        if not a:
            raise DivisionByZero("inverse of zero")
        return self._E.inv(a)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        return self._E.pow(a, e) if e >= 0 else self._E.pow(self.inv(a), -e)

    def eq(self, a, b):
        return a == b

    def is_zero(self, a):
        return not a

    def element_seq(self):
        p, k = self._E.p, self._E.k
        for n in range(self.order):
            c = []
            m = n
            for _ in range(k):
                c.append(m % p)
                m //= p
            yield _ptrim(c)


def _work_dlog(E, base, target):
    """Pohlig-Hellman discrete log of target base a primitive base in E."""
    n = E.order - 1
    residues = []
    for q, e in factorint(n):
        qe = q ** e
        g_q = E.pow(base, n // qe)
        a_q = E.pow(target, n // qe)
        x = 0
        gamma = E.pow(g_q, qe // q)
        for i in range(e):
            inv_part = E.inv(E.pow(g_q, x))
            h = E.pow(E.mul(a_q, inv_part), qe // (q ** (i + 1)))
            d = _work_bsgs(E, gamma, h, q)
            x += d * (q ** i)
        residues.append((x, qe))
    x, m = residues[0]
    for a2, m2 in residues[1:]:
        x, m = crt_pair(x, m, a2, m2)
    return x % n


def _work_bsgs(E, base, target, order):
    m = int(order ** 0.5) + 1
    table = {}
    e = (1,)
    for j in range(m):
        table.setdefault(e, j)
        e = E.mul(e, base)
    factor = E.inv(E.pow(base, m))
    gamma = target
    for i in range(m + 1):
        if gamma in table:
            return (i * m + table[gamma]) % order
        gamma = E.mul(gamma, factor)
    raise AssertionError("bsgs failure")


_SCAN_LIMIT = 200_000


@lru_cache(maxsize=None)
def FF(p, k=1):
    """The canonical F_{p^k}; construction is deterministic and cached."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError("extension degree must be >= 1")
    if k == 1:
        g = _smallest_primitive_root(p) if p > 2 else 1
        modulus = ((-g) % p, 1)
        return FqField(p, 1, modulus, (g % p,))

    e_k = _first_irreducible(p, k)
    E = _Workfield(p, e_k)
    h = _find_primitive(E)
    n = E.order - 1

    # congruence conditions j = root-index (mod p^m - 1) at maximal divisors
    conditions = []
    for r in prime_divisors(k):
        m = k // r
        pm1 = p ** m - 1
        s_m = n // pm1
        f_m = FF(p, m).modulus
        if pm1 <= _SCAN_LIMIT:
            idx = _root_indices(E, h, s_m, f_m, pm1)
        else:
            idx = _root_indices_fast(E, h, s_m, f_m, pm1, p, k)
        if not idx:
            raise AssertionError("no compatible root index found")
        conditions.append((pm1, idx))

    j = _solve_generator_exponent(n, conditions)
    g_raw = E.pow(h, j)

    # minimal polynomial of the generator over F_p via the Frobenius orbit
    factors = []
    conj = g_raw
    for _ in range(k):
        factors.append(conj)
        conj = E.pow(conj, p)
    if conj != g_raw:
        raise AssertionError("generator orbit has wrong length")
    # expand prod (y - conj_i) with coefficients in E, then descend to F_p
    poly = [(1,)]
    for c in factors:
        nxt = [()] * (len(poly) + 1)
        for i, co in enumerate(poly):
            nxt[i + 1] = _padd(p, nxt[i + 1], co)
            nxt[i] = _padd(p, nxt[i], _pneg(p, E.mul(co, c)))
        poly = nxt
    modulus = []
    for co in poly:
        if len(co) > 1:
            raise AssertionError("minimal polynomial did not descend to F_p")
        modulus.append(co[0] if co else 0)
    return FqField(p, k, tuple(modulus), (0, 1))


def _solve_generator_exponent(n, conditions):
    """Smallest j >= 1, gcd(j, n) = 1, j = idx (mod p^m-1) for each level."""
    best = None
    choice_lists = [[(i, m) for i in idx] for (m, idx) in conditions]

    def combos(level, cur, mod):
        nonlocal best
        if level == len(choice_lists):
            j = cur % mod if cur % mod else mod
            while gcd(j, n) != 1:
                j += mod
                if j > n:
                    return
            if best is None or j < best:
                best = j
            return
        for (i, m) in choice_lists[level]:
            if level == 0:
                combos(level + 1, i, m)
            else:
                merged = crt_pair(cur, mod, i, m)
                if merged is not None:
                    combos(level + 1, merged[0], merged[1])

    if not choice_lists:
        return 1
    combos(0, 0, 1)
    if best is None:
        raise AssertionError("no norm-compatible generator exponent exists")
    return best


# ---------------------------------------------------------------------------
# embeddings along the lattice
# ---------------------------------------------------------------------------

def embed(src: FqField, dst: FqField, raw):
    """Embed a raw element of F_{p^m} into F_{p^k} for m | k."""
    if src.p != dst.p:
        raise ValueError("different characteristics")
    if src.k == dst.k:
        return raw
    if dst.k % src.k != 0:
        raise ValueError(f"no embedding F_p^{src.k} -> F_p^{dst.k}")
    key = src.k
    powers = dst._embed_cache.get(key)
    if powers is None:
        s = (dst.order - 1) // (src.order - 1)
        img = dst.pow(dst.generator_raw, s)
        powers = [dst.one]
        for _ in range(src.k - 1):
            powers.append(dst.mul(powers[-1], img))
        dst._embed_cache[key] = powers
    out = dst.zero
    for i, c in enumerate(raw):
        if c:
            out = dst.add(out, dst.mul((c,), powers[i]))
    return out


def section(src: FqField, dst: FqField, raw):
    """Partial inverse of embed: express raw in F_{p^m} or return None."""
    if dst.k % src.k != 0:
        raise ValueError("not a lattice pair")
    if src.k == dst.k:
        return raw
    p = dst.p
    key = src.k
    mat = dst._section_cache.get(key)
    if mat is None:
        cols = []
        for i in range(src.k):
            basis = tuple(0 if j != i else 1 for j in range(src.k))
            cols.append(embed(src, dst, _ptrim(basis)))
        mat = cols
        dst._section_cache[key] = mat
    # solve sum x_i * mat[i] = raw over F_p by Gaussian elimination
    rows = dst.k
    aug = [[(mat[c][r] if r < len(mat[c]) else 0) for c in range(src.k)]
           + [raw[r] if r < len(raw) else 0] for r in range(rows)]
    piv = []
    r = 0
    for c in range(src.k):
        sel = None
        for rr in range(r, rows):
            if aug[rr][c] % p:
                sel = rr
                break
        if sel is None:
            continue
        aug[r], aug[sel] = aug[sel], aug[r]
        inv = pow(aug[r][c], -1, p)
        aug[r] = [x * inv % p for x in aug[r]]
        for rr in range(rows):
            if rr != r and aug[rr][c] % p:
                f = aug[rr][c]
                aug[rr] = [(x - f * y) % p for x, y in zip(aug[rr], aug[r])]
        piv.append(c)
        r += 1
    sol = [0] * src.k
    for i, c in enumerate(piv):
        sol[c] = aug[i][-1]
    for rr in range(r, rows):
        if aug[rr][-1] % p:
            return None
    if embed(src, dst, _ptrim(sol)) != raw:
        return None
    return _ptrim(sol)


def minimal_degree(field: FqField, raw):
    """Degree of the smallest lattice subfield containing the element."""
    for d in sorted(divisors(field.k)):
        if field.pow(raw, field.p ** d) == raw:
            return d
    return field.k


def divisors(n):
    out = []
    for d in range(1, n + 1):
        if n % d == 0:
            out.append(d)
    return out


# ---------------------------------------------------------------------------
# the algebraic closure of F_p as a directed union
# ---------------------------------------------------------------------------

class ClosureField:
    """F_p-bar realized as the union of the lattice fields F_{p^m}.

    Elements are stored in the smallest subfield containing them; binary
    operations embed both operands into F_{p^lcm} first.
    """

    def __init__(self, p):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.char = p

    def elt(self, field_or_deg, raw):
        deg = field_or_deg.k if isinstance(field_or_deg, FqField) else field_or_deg
        return ClosureElt(self.p, deg, raw)

    def from_int(self, n):
        return ClosureElt(self.p, 1, FF(self.p).from_int(n))

    @property
    def zero(self):
        return self.from_int(0)

    @property
    def one(self):
        return self.from_int(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        return a.inv()

    def div(self, a, b):
        return a * b.inv()

    def eq(self, a, b):
        return a == b

    def is_zero(self, a):
        return a.is_zero()

    def __repr__(self):
        return f"Fbar_{self.p}"

    def __eq__(self, other):
        return isinstance(other, ClosureField) and self.p == other.p

    def __hash__(self):
        return hash(("closure", self.p))


class ClosureElt:
    """An element of F_p-bar, normalized to its minimal defining subfield."""

    __slots__ = ("p", "deg", "raw")

    def __init__(self, p, deg, raw):
        field = FF(p, deg)
        d = minimal_degree(field, raw) if raw else 1
        if d != deg:
            raw = section(FF(p, d), field, raw)
            deg = d
        self.p = p
        self.deg = deg
        self.raw = raw

    def _pair(self, other):
        if isinstance(other, int):
            other = ClosureElt(self.p, 1, FF(self.p).from_int(other))
        m = self.deg * other.deg // gcd(self.deg, other.deg)
        field = FF(self.p, m)
        return (field,
                embed(FF(self.p, self.deg), field, self.raw),
                embed(FF(other.p, other.deg), field, other.raw))

    def __add__(self, other):
        K, a, b = self._pair(other)
        return ClosureElt(self.p, K.k, K.add(a, b))

    def __sub__(self, other):
        K, a, b = self._pair(other)
        return ClosureElt(self.p, K.k, K.sub(a, b))

    def __mul__(self, other):
        K, a, b = self._pair(other)
        return ClosureElt(self.p, K.k, K.mul(a, b))

    def __neg__(self):
        return ClosureElt(self.p, self.deg, FF(self.p, self.deg).neg(self.raw))

    def inv(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero in F_p-bar")
        return ClosureElt(self.p, self.deg, FF(self.p, self.deg).inv(self.raw))

    def __truediv__(self, other):
        return self * other.inv()

    def __pow__(self, e):
        K = FF(self.p, self.deg)
        return ClosureElt(self.p, self.deg, K.pow(self.raw, e))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.deg == 1 and self.raw == FF(self.p).from_int(other)
        return (isinstance(other, ClosureElt) and self.p == other.p
                and self.deg == other.deg and self.raw == other.raw)

    def __hash__(self):
        return hash(("closure", self.p, self.deg, self.raw))

    def is_zero(self):
        return not self.raw

    def __bool__(self):
        return bool(self.raw)

    def is_nth_power(self, n):
        if self.is_zero():
            raise ZeroElement("n-th power test on zero")
        if n % self.p == 0:
            raise CharacteristicDivides("n must be prime to the characteristic")
        return True

    def nth_root(self, n):
        """A root in the union; search the subfields F_{p^(deg*d)}, d <= n."""
        if self.is_zero():
            raise ZeroElement("n-th root of zero")
        if n % self.p == 0:
            raise CharacteristicDivides("n must be prime to the characteristic")
        for d in range(1, n + 1):
            K = FF(self.p, self.deg * d)
            a = embed(FF(self.p, self.deg), K, self.raw)
            if gcd(n, K.order - 1) == 1 or K.is_nth_power(a, n):
                r = K.nth_root(a, n)
                if r is not None:
                    return ClosureElt(self.p, K.k, r)
        raise AssertionError("closure element has no n-th root in bounded search")

    def __repr__(self):
        if self.deg == 1:
            return str(self.raw[0] if self.raw else 0)
        return f"Fbar({self.p};deg{self.deg};{list(self.raw)})"
