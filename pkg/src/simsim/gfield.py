"""Small finite fields F_q (q <= 16) with table-driven arithmetic, and monic
polynomial factorization over them up to degree 4.

Field elements are plain ints in 0..q-1.  For prime fields these are residues;
for extensions F_{p^e} an element is the base-p packing of its coefficient
vector, so that 0 and 1 are always the additive and multiplicative identities.
Polynomials over the field are tuples of element ints, lowest degree first,
with no trailing zeros (the zero polynomial is the empty tuple).
"""

from functools import lru_cache


class FieldError(ValueError):
    pass


def _is_prime(m):
    if m < 2:
        return False
    for d in range(2, int(m ** 0.5) + 1):
        if m % d == 0:
            return False
    return True


def _factor_prime_power(q):
    """Return (p, e) with q = p^e, or raise FieldError."""
    for p in range(2, q + 1):
        if _is_prime(p) and q % p == 0:
            e = 0
            m = q
            while m % p == 0:
                m //= p
                e += 1
            if m == 1:
                return p, e
            raise FieldError("%d is not a prime power" % q)
    raise FieldError("%d is not a prime power" % q)


class FieldCtx:
    """A concrete finite field of order q = p^e with full arithmetic tables.

    Immutable after construction; all methods are pure.
    """

    def __init__(self, q):
        if not isinstance(q, int) or q < 2 or q > 16:
            raise FieldError("field order %r out of supported range 2..16" % (q,))
        p, e = _factor_prime_power(q)
        self.q = q
        self.p = p
        self.e = e
        self.modulus = self._find_modulus(p, e) if e > 1 else None
        self._build_tables()

    @staticmethod
    def _find_modulus(p, e):
        """Lexicographically smallest monic irreducible of degree e over F_p.

        Coefficient tuples are compared low-degree-first, which matches the
        base-p packing order used for extension elements.
        """
        base = FieldCtx(p)
        for f in _monics(base, e):
            if _is_irreducible(base, f):
                return f
        raise AssertionError("no irreducible of degree %d over F_%d" % (e, p))

    def _build_tables(self):
        q, p, e = self.q, self.p, self.e
        if e == 1:
            self._add = [[(a + b) % p for b in range(p)] for a in range(p)]
            self._mul = [[(a * b) % p for b in range(p)] for a in range(p)]
        else:
            base = FieldCtx(p)
            mod = self.modulus

            def unpack(x):
                cs = []
                for _ in range(e):
                    cs.append(x % p)
                    x //= p
                return tuple(cs)

            def pack(cs):
                x = 0
                for c in reversed(cs):
                    x = x * p + c
                return x

            def polmod(f):
                f = list(f)
                while len(f) >= len(mod):
                    lead = f[-1]
                    shift = len(f) - len(mod)
                    for i, c in enumerate(mod):
                        f[shift + i] = (f[shift + i] - lead * c) % p
                    while f and f[-1] == 0:
                        f.pop()
                return tuple(f)

            elems = [unpack(x) for x in range(q)]
            self._add = [[pack([(a[i] + b[i]) % p for i in range(e)])
                          for b in elems] for a in elems]
            mul = []
            for a in elems:
                row = []
                for b in elems:
                    prod = [0] * (2 * e - 1)
                    for i, ai in enumerate(a):
                        if ai:
                            for j, bj in enumerate(b):
                                prod[i + j] = (prod[i + j] + ai * bj) % p
                    r = polmod(prod)
                    row.append(pack(list(r) + [0] * (e - len(r))))
                mul.append(row)
            self._mul = mul
            del base
        self._neg = [0] * q
        for a in range(q):
            for b in range(q):
                if self._add[a][b] == 0:
                    self._neg[a] = b
                    break
        self._inv = [None] * q
        for a in range(1, q):
            for b in range(1, q):
                if self._mul[a][b] == 1:
                    self._inv[a] = b
                    break
            if self._inv[a] is None:
                raise AssertionError("no inverse for %d in F_%d" % (a, q))

    def add(self, a, b):
        return self._add[a][b]

    def sub(self, a, b):
        return self._add[a][self._neg[b]]

    def mul(self, a, b):
        return self._mul[a][b]

    def neg(self, a):
        return self._neg[a]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_%d" % self.q)
        return self._inv[a]

    def tables(self):
        """(add, mul, neg, inv) lookup tables, for tight loops."""
        return self._add, self._mul, self._neg, self._inv

    def __repr__(self):
        return "FieldCtx(q=%d)" % self.q

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and other.q == self.q

    def __hash__(self):
        return hash(("FieldCtx", self.q))


@lru_cache(maxsize=None)
def make_field(q):
    """Construct (and cache) the field of order q, 2 <= q <= 16."""
    return FieldCtx(q)


# ---------------------------------------------------------------------------
# Polynomials over a FieldCtx: tuples of ints, lowest degree first.

def poly_trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return tuple(f)


def poly_deg(f):
    return len(f) - 1 if f else -1


def poly_add(ctx, f, g):
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        a = f[i] if i < len(f) else 0
        b = g[i] if i < len(g) else 0
        out.append(ctx.add(a, b))
    return poly_trim(out)


def poly_sub(ctx, f, g):
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        a = f[i] if i < len(f) else 0
        b = g[i] if i < len(g) else 0
        out.append(ctx.sub(a, b))
    return poly_trim(out)


def poly_mul(ctx, f, g):
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] = ctx.add(out[i + j], ctx.mul(a, b))
    return poly_trim(out)


def poly_divmod(ctx, f, g):
    """Quotient and remainder of f by g (g nonzero)."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = list(f)
    glead_inv = ctx.inv(g[-1])
    quot = [0] * max(0, len(f) - len(g) + 1)
    while len(f) >= len(g) and any(f):
        while f and f[-1] == 0:
            f.pop()
        if len(f) < len(g):
            break
        c = ctx.mul(f[-1], glead_inv)
        shift = len(f) - len(g)
        quot[shift] = c
        for i, gc in enumerate(g):
            f[shift + i] = ctx.sub(f[shift + i], ctx.mul(c, gc))
    return poly_trim(quot), poly_trim(f)


def poly_pow(ctx, f, k):
    out = (1,)
    for _ in range(k):
        out = poly_mul(ctx, out, f)
    return out


def poly_eval(ctx, f, x):
    acc = 0
    for c in reversed(f):
        acc = ctx.add(ctx.mul(acc, x), c)
    return acc


def _monics(ctx, d):
    """All monic polynomials of degree d, in lex coefficient order
    (low-degree coefficients vary fastest position-wise from c0 upward)."""
    q = ctx.q
    for code in range(q ** d):
        cs = []
        x = code
        for _ in range(d):
            cs.append(x % q)
            x //= q
        yield tuple(cs) + (1,)


def _is_irreducible(ctx, f):
    """Trial division; valid for deg f <= 4 plus linear/quadratic divisor
    search for the modulus bootstrap (deg <= 4 covers all uses here)."""
    d = poly_deg(f)
    if d <= 0:
        return False
    if d == 1:
        return True
    # A reducible polynomial of degree <= 4 (indeed <= 5) has a factor of
    # degree <= 2.
    for e in (1, 2):
        if e >= d:
            break
        for g in _monics(ctx, e):
            if not poly_divmod(ctx, f, g)[1]:
                return False
    return True


@lru_cache(maxsize=None)
def _irreducible_monics_cached(q, d):
    ctx = make_field(q)
    return tuple(f for f in _monics(ctx, d) if _is_irreducible(ctx, f))


def irreducible_monics(ctx, d):
    """All monic irreducibles of degree d over ctx, in lex coefficient order."""
    if not 1 <= d <= 4:
        raise FieldError("irreducible_monics: degree %r outside 1..4" % (d,))
    return list(_irreducible_monics_cached(ctx.q, d))


def factor_monic(ctx, f):
    """Factor a monic polynomial of degree 1..4 into irreducible powers.

    Returns a dict {irreducible: multiplicity}.  Trial division by all
    irreducibles of degree <= 2 suffices: any remaining factor of degree 3
    or 4 has no divisor of degree <= 2 and is itself irreducible.
    """
    f = poly_trim(f)
    d = poly_deg(f)
    if d < 1 or d > 4:
        raise FieldError("factor_monic: degree %d outside 1..4" % d)
    if f[-1] != 1:
        raise FieldError("factor_monic: input is not monic")
    out = {}
    rem = f
    for e in (1, 2):
        for p in irreducible_monics(ctx, e):
            while poly_deg(rem) >= e:
                quot, r = poly_divmod(ctx, rem, p)
                if r:
                    break
                out[p] = out.get(p, 0) + 1
                rem = quot
    if poly_deg(rem) >= 1:
        out[rem] = out.get(rem, 0) + 1
    return out


def poly_str(f, var="t"):
    if not f:
        return "0"
    terms = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            v = var if i == 1 else "%s^%d" % (var, i)
            terms.append(v if c == 1 else "%d*%s" % (c, v))
    return " + ".join(terms)
