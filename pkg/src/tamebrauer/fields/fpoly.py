"""Univariate polynomial arithmetic over an abstract coefficient field.

Polynomials are trimmed little-endian tuples of raw coefficient values; the
empty tuple is the zero polynomial.  Every function takes the coefficient
field adapter K first.  The same code serves three coefficient domains:
finite fields (FqField / ExtField), the algebraic closure, and whole field
towers (whose elements are themselves rational functions), which is what
makes the recursive tower representation work.

Factorization (squarefree / distinct-degree / equal-degree) requires K to be
finite, i.e. to expose `order`, `char` and `element_seq`.  The equal-degree
splitting uses a deterministic shift sequence instead of random elements so
that factorizations are reproducible bit for bit.
"""

from ..errors import DivisionByZero, ZeroPolynomial


def trim(K, coeffs):
    i = len(coeffs)
    while i > 0 and K.is_zero(coeffs[i - 1]):
        i -= 1
    return tuple(coeffs[:i])


def const(K, c):
    return () if K.is_zero(c) else (c,)


def X(K):
    return (K.zero, K.one)


def degree(f):
    """Degree with deg 0 = -1 for the zero polynomial."""
    return len(f) - 1


def is_zero(f):
    return not f


def lead(K, f):
    if not f:
        raise ZeroPolynomial("leading coefficient of zero polynomial")
    return f[-1]


def padd(K, f, g):
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        a = f[i] if i < len(f) else K.zero
        b = g[i] if i < len(g) else K.zero
        out.append(K.add(a, b))
    return trim(K, out)


def pneg(K, f):
    return tuple(K.neg(c) for c in f)


def psub(K, f, g):
    return padd(K, f, pneg(K, g))


def pmul(K, f, g):
    if not f or not g:
        return ()
    out = [K.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if K.is_zero(a):
            continue
        for j, b in enumerate(g):
            out[i + j] = K.add(out[i + j], K.mul(a, b))
    return trim(K, out)


def pscale(K, f, c):
    if K.is_zero(c):
        return ()
    return trim(K, tuple(K.mul(a, c) for a in f))


def pdivmod(K, f, g):
    if not g:
        raise DivisionByZero("polynomial division by zero")
    r = list(f)
    q = [K.zero] * max(0, len(f) - len(g) + 1)
    inv_lead = K.inv(g[-1])
    dg = len(g) - 1
    for i in range(len(f) - 1, dg - 1, -1):
        if K.is_zero(r[i]):
            continue
        c = K.mul(r[i], inv_lead)
        q[i - dg] = c
        for j, b in enumerate(g):
            r[i - dg + j] = K.sub(r[i - dg + j], K.mul(c, b))
    return trim(K, q), trim(K, r)


def pmod(K, f, g):
    return pdivmod(K, f, g)[1]


def monic(K, f):
    if not f:
        return ()
    return pscale(K, f, K.inv(f[-1]))


def pgcd(K, f, g):
    while g:
        f, g = g, pmod(K, f, g)
    return monic(K, f)


def pxgcd(K, f, g):
    """(d, s, t) with d = s*f + t*g, d monic (or zero)."""
    r0, r1 = f, g
    s0, s1 = (K.one,), ()
    t0, t1 = (), (K.one,)
    while r1:
        q, r = pdivmod(K, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, psub(K, s0, pmul(K, q, s1))
        t0, t1 = t1, psub(K, t0, pmul(K, q, t1))
    if r0:
        c = K.inv(r0[-1])
        r0, s0, t0 = pscale(K, r0, c), pscale(K, s0, c), pscale(K, t0, c)
    return r0, s0, t0


def ppow_mod(K, f, e, m):
    out = (K.one,)
    f = pmod(K, f, m)
    while e:
        if e & 1:
            out = pmod(K, pmul(K, out, f), m)
        f = pmod(K, pmul(K, f, f), m)
        e >>= 1
    return out


def peval(K, f, x):
    acc = K.zero
    for c in reversed(f):
        acc = K.add(K.mul(acc, x), c)
    return acc


def pderiv(K, f):
    out = []
    for i in range(1, len(f)):
        c = f[i]
        s = K.zero
        for _ in range(i):
            s = K.add(s, c)
        out.append(s)
    return trim(K, out)


def pshift_compose(K, f, a):
    """f(x + a)."""
    out = ()
    xa = (a, K.one)
    for c in reversed(f):
        out = padd(K, pmul(K, out, xa), const(K, c))
    return out


# ---------------------------------------------------------------------------
# factorization over finite coefficient fields
# ---------------------------------------------------------------------------

def is_irreducible(K, f):
    """Irreducibility over the finite field K (f of degree >= 1)."""
    d = degree(f)
    if d < 1:
        return False
    if d == 1:
        return True
    f = monic(K, f)
    q = K.order
    x = X(K)
    powers = {0: pmod(K, x, f)}
    cur = powers[0]
    for i in range(1, d + 1):
        cur = ppow_mod(K, cur, q, f)
        powers[i] = cur
    if powers[d] != powers[0]:
        return False
    from ..nt import prime_divisors
    for r in prime_divisors(d):
        if pgcd(K, psub(K, powers[d // r], x), f) != (K.one,):
            return False
    return True


def squarefree_part(K, f):
    """Monic radical of f (product of its distinct irreducible factors)."""
    _, factors = factor(K, f)
    return _mul_all(K, [g for g, _ in factors])


def _pth_root_poly(K, f):
    p = K.char
    q = K.order
    out = []
    for i in range(0, len(f), p):
        c = f[i]
        # c^(q/p) is the p-th root in F_q
        out.append(K.pow(c, q // p) if not K.is_zero(c) else K.zero)
    return trim(K, out)


def distinct_degree(K, f):
    """[(product of irreducible factors of degree d, d)] for squarefree f."""
    out = []
    q = K.order
    x = X(K)
    h = x
    rem = monic(K, f)
    d = 0
    while degree(rem) > 2 * d + 1:
        d += 1
        h = ppow_mod(K, h, q, rem)
        g = pgcd(K, psub(K, h, x), rem)
        if degree(g) > 0:
            out.append((g, d))
            rem = pdivmod(K, rem, g)[0]
            h = pmod(K, h, rem)
    if degree(rem) > 0:
        out.append((rem, degree(rem)))
    return out


def equal_degree_split(K, f, d):
    """Split a squarefree product of degree-d irreducibles (deterministic)."""
    n = degree(f)
    if n == d:
        return [f]
    q = K.order
    for r in _edf_candidates(K, n):
        if q % 2 == 1:
            w = ppow_mod(K, r, (q ** d - 1) // 2, f)
            g = pgcd(K, psub(K, w, (K.one,)), f)
        else:
            # trace splitting for even q
            w = pmod(K, r, f)
            acc = w
            cur = w
            bits = (q ** d).bit_length() - 1
            for _ in range(bits - 1):
                cur = pmod(K, pmul(K, cur, cur), f)
                acc = padd(K, acc, cur)
            g = pgcd(K, acc, f)
        if 0 < degree(g) < n:
            left = equal_degree_split(K, g, d)
            right = equal_degree_split(K, pdivmod(K, f, g)[0], d)
            return left + right
    raise AssertionError("equal-degree splitting exhausted its candidates")


def _edf_candidates(K, n):
    """Deterministic stream of low-degree shift polynomials."""
    for deg in range(1, n + 1):
        count = 0
        for a in K.element_seq():
            coeffs = [K.zero] * deg + [K.one]
            coeffs[0] = a
            yield trim(K, coeffs)
            count += 1
            if count >= min(K.order, 64):
                break


def factor(K, f):
    """Full factorization: (leading unit, [(monic irreducible, mult)]).

    Multiplicities prime to the characteristic are split off through the
    derivative gcd; what remains is a perfect p-th power handled through
    coefficient-wise p-th roots.  Obviously terminating and exact.
    """
    if not f:
        raise ZeroPolynomial("factor of the zero polynomial")
    unit = f[-1]
    f = monic(K, f)
    found = {}
    order = []

    def record(irr, mult):
        if irr in found:
            found[irr] += mult
        else:
            found[irr] = mult
            order.append(irr)

    def run(g, scale):
        if degree(g) == 0:
            return
        dg = pderiv(K, g)
        if not dg:
            run(_pth_root_poly(K, g), scale * K.char)
            return
        w = pdivmod(K, g, pgcd(K, g, dg))[0]
        rest = g
        for h, d in distinct_degree(K, w):
            for irr in equal_degree_split(K, h, d):
                m = 0
                while True:
                    q_, r_ = pdivmod(K, rest, irr)
                    if r_:
                        break
                    rest = q_
                    m += 1
                record(irr, m * scale)
        if degree(rest) > 0:
            run(_pth_root_poly(K, rest), scale * K.char)

    run(f, 1)
    out = [(g, found[g]) for g in order]
    out.sort(key=lambda t: (degree(t[0]), _poly_sort_key(K, t[0])))
    return unit, out


def _poly_sort_key(K, f):
    return tuple(repr(c) for c in f)


def roots(K, f):
    """Roots of f in K, each listed once, in deterministic order."""
    if not f:
        raise ZeroPolynomial("roots of the zero polynomial")
    q = K.order
    x = X(K)
    f = monic(K, f)
    # gcd with x^q - x isolates the part splitting over K
    xq = ppow_mod(K, x, q, f)
    lin = pgcd(K, psub(K, xq, x), f)
    out = []
    for g, _ in _linear_factors(K, lin):
        out.append(K.neg(g[0]))
    return out


def _linear_factors(K, f):
    if degree(f) <= 0:
        return []
    if degree(f) == 1:
        return [(monic(K, f), 1)]
    pieces = equal_degree_split(K, monic(K, f), 1)
    return [(p_, 1) for p_ in pieces]


def _mul_all(K, polys):
    out = (K.one,)
    for f in polys:
        out = pmul(K, out, f)
    return out


def first_irreducible(K, deg, avoid=()):
    """First monic irreducible of given degree in counter order over K."""
    count = 0
    for coeffs in _counter_polys(K, deg):
        f = coeffs + (K.one,)
        if is_irreducible(K, f) and f not in avoid:
            return f
        count += 1
        if count > K.order ** deg + 1:
            break
    raise AssertionError("no irreducible polynomial found")


def _counter_polys(K, deg):
    elems = list(K.element_seq()) if K.order <= 4096 else None
    if elems is not None:
        idx = [0] * deg
        total = len(elems) ** deg
        for n in range(total):
            m = n
            c = []
            for _ in range(deg):
                c.append(elems[m % len(elems)])
                m //= len(elems)
            yield tuple(c)
    else:
        # large fields: vary only the constant coefficient
        for a in K.element_seq():
            yield (a,) + (K.zero,) * (deg - 1)
