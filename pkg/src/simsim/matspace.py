"""Dense matrices over a small finite field, kernel/rref machinery,
centralizer algebras and GL_n(F_q) conjugacy classes (n <= 4).

A matrix is stored as a tuple of row tuples of field-element ints, so values
are immutable, hashable and safe to share.  Vectors over F_q are plain tuples.
The subalgebra code keeps every basis in reduced row echelon form of the
flattened n^2-vectors, so equal subalgebras compare equal as data.
"""

from functools import lru_cache

from .gfield import poly_mul, poly_sub, poly_trim


class ResourceError(RuntimeError):
    """An explicit enumeration bound was exceeded."""


class MatrixFq:
    __slots__ = ("ctx", "n", "entries")

    def __init__(self, ctx, entries):
        rows = tuple(tuple(r) for r in entries)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix is not square")
        if any(not (0 <= x < ctx.q) for r in rows for x in r):
            raise ValueError("entry outside field F_%d" % ctx.q)
        self.ctx = ctx
        self.n = n
        self.entries = rows

    def __eq__(self, other):
        return (isinstance(other, MatrixFq) and other.ctx == self.ctx
                and other.entries == self.entries)

    def __hash__(self):
        return hash((self.ctx.q, self.entries))

    def __repr__(self):
        return "MatrixFq(q=%d, %r)" % (self.ctx.q, [list(r) for r in self.entries])

    def __mul__(self, other):
        return mat_mul(self, other)

    def __add__(self, other):
        return mat_add(self, other)

    def flat(self):
        return tuple(x for row in self.entries for x in row)

    def code(self):
        """Row-major base-q integer code of the matrix."""
        c = 0
        q = self.ctx.q
        for x in self.flat():
            c = c * q + x
        return c


def mat_from_code(ctx, n, code):
    q = ctx.q
    flat = []
    for _ in range(n * n):
        flat.append(code % q)
        code //= q
    flat.reverse()
    return MatrixFq(ctx, [flat[i * n:(i + 1) * n] for i in range(n)])


def mat_from_flat(ctx, n, flat):
    return MatrixFq(ctx, [flat[i * n:(i + 1) * n] for i in range(n)])


def zero_matrix(ctx, n):
    return MatrixFq(ctx, [[0] * n for _ in range(n)])


def identity(ctx, n):
    return MatrixFq(ctx, [[1 if i == j else 0 for j in range(n)] for i in range(n)])


def scalar_matrix(ctx, n, a):
    return MatrixFq(ctx, [[a if i == j else 0 for j in range(n)] for i in range(n)])


def mat_add(A, B):
    ctx = A.ctx
    return MatrixFq(ctx, [[ctx.add(a, b) for a, b in zip(ra, rb)]
                          for ra, rb in zip(A.entries, B.entries)])


def mat_sub(A, B):
    ctx = A.ctx
    return MatrixFq(ctx, [[ctx.sub(a, b) for a, b in zip(ra, rb)]
                          for ra, rb in zip(A.entries, B.entries)])


def mat_scale(A, c):
    ctx = A.ctx
    return MatrixFq(ctx, [[ctx.mul(c, x) for x in row] for row in A.entries])


def mat_mul(A, B):
    ctx = A.ctx
    n = A.n
    Bt = list(zip(*B.entries))
    out = []
    for ra in A.entries:
        row = []
        for cb in Bt:
            s = 0
            for a, b in zip(ra, cb):
                if a and b:
                    s = ctx.add(s, ctx.mul(a, b))
            row.append(s)
        out.append(row)
    return MatrixFq(ctx, out)


def mat_pow(A, k):
    out = identity(A.ctx, A.n)
    for _ in range(k):
        out = mat_mul(out, A)
    return out


def block_diag(ctx, blocks):
    n = sum(b.n for b in blocks)
    rows = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i in range(b.n):
            for j in range(b.n):
                rows[off + i][off + j] = b.entries[i][j]
        off += b.n
    return MatrixFq(ctx, rows)


# ---------------------------------------------------------------------------
# Gaussian elimination over F_q on tuple-vectors.

def rref(ctx, rows):
    """Reduced row echelon form; returns (basis_rows, pivot_columns).

    Deterministic pivoting: first nonzero entry in column order.
    """
    rows = [list(r) for r in rows if any(r)]
    ncols = len(rows[0]) if rows else 0
    basis = []
    pivots = []
    for col in range(ncols):
        pr = None
        for i, r in enumerate(rows):
            if r[col]:
                pr = i
                break
        if pr is None:
            continue
        row = rows.pop(pr)
        inv = ctx.inv(row[col])
        row = [ctx.mul(inv, x) for x in row]
        for r in rows:
            c = r[col]
            if c:
                for j in range(ncols):
                    r[j] = ctx.sub(r[j], ctx.mul(c, row[j]))
        for b in basis:
            c = b[col]
            if c:
                for j in range(ncols):
                    b[j] = ctx.sub(b[j], ctx.mul(c, row[j]))
        basis.append(row)
        pivots.append(col)
        rows = [r for r in rows if any(r)]
    order = sorted(range(len(pivots)), key=lambda i: pivots[i])
    return [tuple(basis[i]) for i in order], [pivots[i] for i in order]


def rank(ctx, rows):
    return len(rref(ctx, rows)[0])


def kernel_basis(ctx, rows, ncols):
    """Basis (rref) of the right kernel of the matrix with the given rows."""
    basis, pivots = rref(ctx, rows)
    free = [c for c in range(ncols) if c not in pivots]
    out = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for b, pc in zip(basis, pivots):
            v[pc] = ctx.neg(b[fc])
        out.append(tuple(v))
    return rref(ctx, out)[0]


def mat_rank(A):
    return rank(A.ctx, [list(r) for r in A.entries])


def is_invertible(A):
    return mat_rank(A) == A.n


def mat_inverse(A):
    ctx, n = A.ctx, A.n
    aug = [list(A.entries[i]) + [1 if j == i else 0 for j in range(n)]
           for i in range(n)]
    basis, pivots = rref(ctx, aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return MatrixFq(ctx, [row[n:] for row in basis])


# ---------------------------------------------------------------------------
# Characteristic polynomial: det(tI - A) by exact cofactor expansion over
# the polynomial ring F_q[t].  n <= 4 keeps the O(n!) expansion trivial.

def char_poly(A):
    ctx, n = A.ctx, A.n
    # entries of tI - A as polynomials in t
    M = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j:
                M[i][j] = poly_trim((ctx.neg(A.entries[i][j]), 1))
            else:
                M[i][j] = poly_trim((ctx.neg(A.entries[i][j]),))
    return _poly_det(ctx, M)


def _poly_det(ctx, M):
    n = len(M)
    if n == 1:
        return M[0][0]
    det = ()
    for i in range(n):
        if not M[i][0]:
            continue
        minor = [row[1:] for k, row in enumerate(M) if k != i]
        term = poly_mul(ctx, M[i][0], _poly_det(ctx, minor))
        det = poly_add_signed(ctx, det, term, i % 2 == 0)
    return det


def poly_add_signed(ctx, f, g, plus):
    return (poly_trim(tuple(ctx.add(a, b) for a, b in _zip_pad(f, g))) if plus
            else poly_sub(ctx, f, g))


def _zip_pad(f, g):
    n = max(len(f), len(g))
    for i in range(n):
        yield (f[i] if i < len(f) else 0), (g[i] if i < len(g) else 0)


def apply_poly(f, A):
    """f(A) for a coefficient tuple f."""
    ctx, n = A.ctx, A.n
    out = zero_matrix(ctx, n)
    for c in reversed(f):
        out = mat_mul(out, A)
        if c:
            out = mat_add(out, scalar_matrix(ctx, n, c))
    return out


# ---------------------------------------------------------------------------
# Subalgebras of M_n(F_q), given by a canonical (rref) basis.

class SubalgebraBasis:
    """Canonical basis of a unital subalgebra of M_n(F_q).

    basis holds MatrixFq values whose flattened vectors are in rref, so two
    equal subalgebras produce identical objects.
    """

    __slots__ = ("ctx", "n", "basis", "pivots")

    def __init__(self, ctx, n, vectors):
        vecs, pivots = rref(ctx, vectors)
        self.ctx = ctx
        self.n = n
        self.basis = tuple(mat_from_flat(ctx, n, v) for v in vecs)
        self.pivots = tuple(pivots)

    @property
    def dim(self):
        return len(self.basis)

    def key(self):
        return (self.ctx.q, self.n, tuple(b.flat() for b in self.basis))

    def __eq__(self, other):
        return isinstance(other, SubalgebraBasis) and other.key() == self.key()

    def __hash__(self):
        return hash(self.key())

    def coords_of(self, M):
        """Coordinates of a span member in the rref basis (values at pivots)."""
        flat = M.flat()
        return tuple(flat[p] for p in self.pivots)

    def contains(self, M):
        return self.from_coords(self.coords_of(M)) == M

    def from_coords(self, coords):
        ctx, n = self.ctx, self.n
        out = zero_matrix(ctx, n)
        for c, b in zip(coords, self.basis):
            if c:
                out = mat_add(out, mat_scale(b, c))
        return out

    def elements(self):
        """Iterate over all q^dim span members (coords in lex order)."""
        q = self.ctx.q
        m = self.dim
        for code in range(q ** m):
            coords = []
            x = code
            for _ in range(m):
                coords.append(x % q)
                x //= q
            yield self.from_coords(tuple(coords))


def commutator(A, B):
    return mat_sub(mat_mul(A, B), mat_mul(B, A))


def centralizer_basis(tuple_):
    """Canonical basis of the common centralizer of a commuting tuple.

    Kernel of the stacked maps X -> A_i X - X A_i on the n^2-dimensional
    matrix space.  Raises on a non-commuting pair, naming the offenders.
    """
    if not tuple_:
        raise ValueError("empty tuple has no defined centralizer here")
    ctx = tuple_[0].ctx
    n = tuple_[0].n
    for M in tuple_:
        if M.ctx != ctx or M.n != n:
            raise ValueError("mixed field or dimension in tuple")
    for i in range(len(tuple_)):
        for j in range(i + 1, len(tuple_)):
            if mat_mul(tuple_[i], tuple_[j]) != mat_mul(tuple_[j], tuple_[i]):
                raise ValueError("matrices %d and %d do not commute" % (i, j))
    rows = []
    for A in tuple_:
        a = A.entries
        # row for output position (r, c): sum_{r',c'} M[(r,c),(r',c')] X[r'][c']
        for r in range(n):
            for c in range(n):
                row = [0] * (n * n)
                for k in range(n):
                    # (A X)[r][c] contribution: A[r][k] X[k][c]
                    row[k * n + c] = ctx.add(row[k * n + c], a[r][k])
                    # -(X A)[r][c] contribution: -X[r][k] A[k][c]
                    row[r * n + k] = ctx.sub(row[r * n + k], a[k][c])
                rows.append(row)
    vecs = kernel_basis(ctx, rows, n * n)
    return SubalgebraBasis(ctx, n, vecs)


def centralizer_in(Z, M):
    """Centralizer of span member M inside the subalgebra Z (canonical)."""
    ctx = Z.ctx
    C = ad_matrix(Z, Z.coords_of(M))
    coord_kernel = kernel_basis(ctx, C, Z.dim)
    vecs = [Z.from_coords(v).flat() for v in coord_kernel]
    return SubalgebraBasis(ctx, Z.n, vecs)


# Structure constants / adjoint maps within a subalgebra.

def mult_tables(Z):
    """(L, R): L[i] is the matrix of left multiplication by basis element i
    acting on coordinates, as a dim x dim row list; similarly R for right
    multiplication.  Also serves as the closure check for the span."""
    m = Z.dim
    L = [[[0] * m for _ in range(m)] for _ in range(m)]
    R = [[[0] * m for _ in range(m)] for _ in range(m)]
    for i, bi in enumerate(Z.basis):
        for j, bj in enumerate(Z.basis):
            p = mat_mul(bi, bj)
            coords = Z.coords_of(p)
            if Z.from_coords(coords) != p:
                raise ValueError("span is not closed under multiplication")
            for k, c in enumerate(coords):
                L[i][k][j] = c  # coordinate k of b_i * b_j
                R[j][k][i] = c
    return L, R


def ad_tables(Z):
    """D[i] = matrix of x -> b_i x - x b_i on coordinates, for each basis i."""
    ctx = Z.ctx
    L, R = mult_tables(Z)
    m = Z.dim
    return [[[ctx.sub(L[i][r][c], R[i][r][c]) for c in range(m)]
             for r in range(m)] for i in range(m)]


def ad_matrix(Z, coords, tables=None):
    """Matrix (rows) of x -> a x - x a on coordinates, a given by coords."""
    ctx = Z.ctx
    m = Z.dim
    if tables is None:
        A = Z.from_coords(coords)
        cols = [Z.coords_of(commutator(A, bj)) for bj in Z.basis]
        return [[cols[j][k] for j in range(m)] for k in range(m)]
    out = [[0] * m for _ in range(m)]
    for i, c in enumerate(coords):
        if c:
            Di = tables[i]
            for r in range(m):
                drow = Di[r]
                orow = out[r]
                for col in range(m):
                    if drow[col]:
                        orow[col] = ctx.add(orow[col], ctx.mul(c, drow[col]))
    return out


def unit_count(Z):
    """Number of invertible elements in the span, by full enumeration."""
    q = Z.ctx.q
    if q ** Z.dim > 2 ** 24:
        raise ResourceError("unit_count: q^dim = %d exceeds 2^24" % q ** Z.dim)
    count = 0
    for M in Z.elements():
        if mat_rank(M) == Z.n:
            count += 1
    return count


def units_of(Z):
    """All invertible span members with inverses: list of (u, u_inv)."""
    q = Z.ctx.q
    if q ** Z.dim > 2 ** 24:
        raise ResourceError("units_of: q^dim = %d exceeds 2^24" % q ** Z.dim)
    out = []
    for M in Z.elements():
        if mat_rank(M) == Z.n:
            out.append((M, mat_inverse(M)))
    return out


def full_matrix_algebra(ctx, n):
    vecs = []
    for i in range(n * n):
        v = [0] * (n * n)
        v[i] = 1
        vecs.append(v)
    return SubalgebraBasis(ctx, n, vecs)


def gl_order(n, q):
    out = 1
    for i in range(n):
        out *= q ** n - q ** i
    return out


@lru_cache(maxsize=None)
def _gl_conjugacy_classes_cached(n, q):
    from .typeclass import classify_matrix  # cycle broken at call time
    from .gfield import make_field

    ctx = make_field(q)
    if q ** (n * n) > 2 ** 16:
        raise ResourceError("gl_conjugacy_classes: q^(n^2) = %d too large"
                            % q ** (n * n))
    reps = {}
    counts = {}
    for code in range(q ** (n * n)):
        A = mat_from_code(ctx, n, code)
        if mat_rank(A) != n:
            continue
        label = classify_matrix(A)
        key = label.assignment
        if key not in reps:
            reps[key] = A
            counts[key] = 0
        counts[key] += 1
    out = [(reps[k], counts[k]) for k in sorted(reps)]
    assert sum(c for _, c in out) == gl_order(n, q)
    return out


def gl_conjugacy_classes(n, ctx):
    """One representative per GL_n(F_q) conjugacy class, with class sizes."""
    return list(_gl_conjugacy_classes_cached(n, ctx.q))
