"""Similarity class types for commuting tuples of n x n matrices, n <= 4.

A classical type is a multiset of (degree, partition) pairs, one per
irreducible factor of the characteristic polynomial of a single matrix,
with sum of degree * |partition| equal to n.  Written like "(2,1)_1(1)_1".
Beyond those, six types NT1..NT6 occur only for tuples of 4 x 4 matrices;
their centralizer algebras match no single-matrix centralizer.

Types are recognized through a structural fingerprint of the centralizer
algebra (dimension, unit/nilpotent/idempotent counts, chain of dimensions
of powers of the nilpotent ideal when there is one).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import math
import re

from .gfield import make_field, irreducible_monics, factor_monic, poly_trim
from .matspace import (
    MatrixFq, ResourceError, zero_matrix, identity, block_diag,
    mat_mul, mat_add, char_poly, apply_poly, kernel_basis, rref,
    centralizer_basis, SubalgebraBasis, mat_from_flat,
)
from .polyq import PolyQ

NEW_TYPE_TAGS = ("NT1", "NT2", "NT3", "NT4", "NT5", "NT6")

FINGERPRINT_ELEMENT_BOUND = 1 << 20


class InfeasibleTypeError(ValueError):
    """The type needs more distinct irreducibles than F_q has."""


class UnknownTypeError(ValueError):
    """A tuple whose centralizer fingerprint matches no catalogued type."""

    def __init__(self, msg, fingerprint=None):
        super().__init__(msg)
        self.fingerprint = fingerprint


def _partition_key(lam):
    # descending partitions compare naturally; bigger first within a degree
    return tuple(-x for x in lam)


@dataclass(frozen=True)
class TypeDescriptor:
    """Either a classical type (components nonempty, new_tag None) or one
    of the six extra 4 x 4 tuple types (components empty)."""

    components: tuple  # tuple of (degree, partition-tuple), canonical order
    new_tag: str = None

    @staticmethod
    def classical(components):
        comps = []
        for d, lam in components:
            lam = tuple(sorted(lam, reverse=True))
            if d < 1 or not lam or min(lam) < 1:
                raise ValueError("bad component (%r, %r)" % (d, lam))
            comps.append((d, lam))
        comps.sort(key=lambda c: (c[0], _partition_key(c[1])))
        return TypeDescriptor(tuple(comps))

    @staticmethod
    def new(tag):
        if tag not in NEW_TYPE_TAGS:
            raise ValueError("unknown new-type tag %r" % (tag,))
        return TypeDescriptor((), tag)

    @staticmethod
    def regular_aggregate():
        """The catch-all Regular type: commutative centralizer of dim n.
        Tuple branches of this kind need not share one algebra up to
        isomorphism, so they get a single aggregate label."""
        return TypeDescriptor((), "Regular")

    @property
    def n(self):
        if self.new_tag == "Regular":
            return None
        if self.new_tag is not None:
            return 4
        return sum(d * sum(lam) for d, lam in self.components)

    def is_new(self):
        return self.new_tag in NEW_TYPE_TAGS

    def is_central(self):
        return (not self.is_new() and len(self.components) == 1
                and self.components[0][0] == 1
                and set(self.components[0][1]) == {1})

    def is_regular(self):
        """Aggregate Regular, or classical with every partition a single
        part (the matrix is cyclic)."""
        if self.new_tag == "Regular":
            return True
        return (self.new_tag is None
                and all(len(lam) == 1 for _, lam in self.components))

    def rcf_type(self):
        """Partition of n read off the rational canonical form."""
        if self.new_tag is not None:
            raise ValueError("rcf_type is only defined for classical types")
        parts = {}
        for d, lam in self.components:
            for j, part in enumerate(lam):
                parts[j] = parts.get(j, 0) + d * part
        return tuple(parts[j] for j in sorted(parts))

    def render(self):
        if self.new_tag is not None:
            return self.new_tag
        return "".join("(%s)_%d" % (",".join(str(x) for x in lam), d)
                       for d, lam in self.components)

    __str__ = render


_COMP_RE = re.compile(r"\((\d+(?:,\d+)*)\)_(\d+)")


def parse_type(text):
    """Inverse of TypeDescriptor.render; accepts components in any order."""
    text = text.strip()
    if text in NEW_TYPE_TAGS:
        return TypeDescriptor.new(text)
    if text == "Regular":
        return TypeDescriptor.regular_aggregate()
    comps = []
    pos = 0
    while pos < len(text):
        m = _COMP_RE.match(text, pos)
        if not m:
            raise ValueError("cannot parse type string %r at %r"
                             % (text, text[pos:]))
        lam = tuple(int(x) for x in m.group(1).split(","))
        comps.append((int(m.group(2)), lam))
        pos = m.end()
    if not comps:
        raise ValueError("empty type string")
    return TypeDescriptor.classical(comps)


@dataclass(frozen=True)
class ClassLabel:
    """A full similarity class of one matrix: irreducible -> partition."""

    n: int
    q: int
    assignment: tuple  # sorted tuple of (irreducible-coeff-tuple, partition)

    def type_descriptor(self):
        comps = [(len(p) - 1, lam) for p, lam in self.assignment]
        return TypeDescriptor.classical(comps)


# ---------------------------------------------------------------------------
# classifying a single matrix


def classify_matrix(A):
    """ClassLabel of one matrix, via kernel dimensions of p(A)^i."""
    ctx = A.ctx
    n = A.n
    fact = factor_monic(ctx, char_poly(A))
    assignment = []
    for p, mult in sorted(fact.items()):
        d = len(p) - 1
        pa = apply_poly(p, A)
        power = identity(ctx, n)
        kdims = [0]
        while kdims[-1] < d * mult:
            power = mat_mul(power, pa)
            kdims.append(n - _mat_rank_of(power))
        # counts[i] = number of parts >= i
        counts = []
        for i in range(1, len(kdims)):
            step = kdims[i] - kdims[i - 1]
            if step % d:
                raise AssertionError("kernel jump not divisible by degree")
            counts.append(step // d)
        lam = []
        for i, c in enumerate(counts):
            nxt = counts[i + 1] if i + 1 < len(counts) else 0
            lam.extend([i + 1] * (c - nxt))
        lam = tuple(sorted(lam, reverse=True))
        assignment.append((p, lam))
    return ClassLabel(n, ctx.q, tuple(sorted(assignment)))


def _mat_rank_of(M):
    from .matspace import mat_rank
    return mat_rank(M)


# ---------------------------------------------------------------------------
# representatives


def _companion(ctx, f):
    """Companion matrix of a monic f (coefficient tuple, constant first)."""
    d = len(f) - 1
    rows = [[0] * d for _ in range(d)]
    for i in range(1, d):
        rows[i][i - 1] = 1
    for i in range(d):
        rows[i][d - 1] = ctx.neg(f[i])
    return MatrixFq(ctx, tuple(tuple(r) for r in rows))


def _jordan_block(ctx, a, m):
    rows = [[0] * m for _ in range(m)]
    for i in range(m):
        rows[i][i] = a
        if i + 1 < m:
            rows[i][i + 1] = 1
    return MatrixFq(ctx, tuple(tuple(r) for r in rows))


def _poly_power(ctx, f, m):
    from .gfield import poly_mul
    out = (1,)
    for _ in range(m):
        out = poly_mul(ctx, out, f)
    return out


def _matrix_unit(ctx, n, i, j):
    rows = [[0] * n for _ in range(n)]
    rows[i][j] = 1
    return MatrixFq(ctx, tuple(tuple(r) for r in rows))


def _nt_base_pair(ctx):
    """A = the square-zero rank-2 matrix shared by NT1/NT2/NT3/NT6."""
    rows = [[0, 0, 1, 0], [0, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0]]
    return MatrixFq(ctx, tuple(tuple(r) for r in rows))


def _nt_b(ctx, d_block):
    """Matrix with the given 2 x 2 block in the top-right corner."""
    rows = [[0] * 4 for _ in range(4)]
    for i in range(2):
        for j in range(2):
            rows[i][2 + j] = d_block[i][j]
    return MatrixFq(ctx, tuple(tuple(r) for r in rows))


def representative(desc, ctx):
    """A commuting tuple with the given type.  Classical types give a
    1-tuple; NT1..NT5 give pairs and NT6 a triple."""
    if desc.new_tag == "Regular":
        raise ValueError("the aggregate Regular type has no single "
                         "canonical representative; use a cyclic classical "
                         "type such as (%d)_1" % (4,))
    if desc.is_new():
        A = _nt_base_pair(ctx)
        tag = desc.new_tag
        if tag == "NT1":
            return (A, _nt_b(ctx, [[0, 1], [0, 0]]))
        if tag == "NT2":
            f = irreducible_monics(ctx, 2)[0]
            c = _companion(ctx, f)
            return (A, _nt_b(ctx, [[c.entries[0][0], c.entries[0][1]],
                                   [c.entries[1][0], c.entries[1][1]]]))
        if tag == "NT3":
            return (A, _nt_b(ctx, [[0, 0], [0, 1]]))
        if tag == "NT4":
            return (_matrix_unit(ctx, 4, 0, 3), _matrix_unit(ctx, 4, 0, 1))
        if tag == "NT5":
            return (_matrix_unit(ctx, 4, 0, 3), _matrix_unit(ctx, 4, 1, 3))
        if tag == "NT6":
            return (A, _nt_b(ctx, [[0, 1], [0, 0]]),
                    _matrix_unit(ctx, 4, 1, 2))
        raise AssertionError(tag)

    # classical: take the lexicographically smallest distinct irreducibles
    # of each degree, handed out to components in canonical order
    used = {}
    blocks = []
    for d, lam in desc.components:
        pool = irreducible_monics(ctx, d)
        i = used.get(d, 0)
        if i >= len(pool):
            raise InfeasibleTypeError(
                "type %s needs %d distinct irreducibles of degree %d over "
                "F_%d but only %d exist" % (desc, i + 1, d, ctx.q, len(pool)))
        used[d] = i + 1
        p = pool[i]
        for part in lam:
            if d == 1:
                # p = t + c0, eigenvalue -c0
                blocks.append(_jordan_block(ctx, ctx.neg(p[0]), part))
            else:
                blocks.append(_companion(ctx, _poly_power(ctx, p, part)))
    return (block_diag(ctx, blocks),)


def algebra_model(desc, ctx):
    """The centralizer algebra of a classical type as a block-diagonal
    subalgebra of M_n(F_q).

    Unlike representative, each component uses the first irreducible of its
    degree and lives in its own diagonal block, so no distinctness of
    irreducibles is needed: the algebra exists at every q even when no
    single matrix of the type does (tuples can still realize it).
    """
    if desc.new_tag is not None:
        raise ValueError("algebra_model is for classical types only")
    n = desc.n
    offset = 0
    vectors = []
    for d, lam in desc.components:
        p = irreducible_monics(ctx, d)[0]
        m = d * sum(lam)
        blocks = []
        for part in lam:
            if d == 1:
                blocks.append(_jordan_block(ctx, ctx.neg(p[0]), part))
            else:
                blocks.append(_companion(ctx, _poly_power(ctx, p, part)))
        Zc = centralizer_basis((block_diag(ctx, blocks),))
        for b in Zc.basis:
            big = [[0] * n for _ in range(n)]
            for i in range(m):
                for j in range(m):
                    big[i + offset][j + offset] = b.entries[i][j]
            vectors.append([x for row in big for x in row])
        offset += m
    return SubalgebraBasis(ctx, n, vectors)


# ---------------------------------------------------------------------------
# fingerprints


@dataclass(frozen=True)
class Fingerprint:
    """Isomorphism-stable statistics of a centralizer algebra over F_q."""

    q: int
    dim: int
    commutative: bool
    center_dim: int
    unit_count: int
    nilpotent_count: int
    idempotent_count: int
    nil_ideal_chain: tuple = None  # dims of powers of the nilpotent span,
                                   # present only when that span is a
                                   # two-sided ideal of nilpotents
    # dims of {z : zV = 0} and {z : Vz = 0} for V the nilpotent span; the
    # ordered pair sees chirality that element counts cannot (an algebra
    # and its opposite share every count, but swap these two numbers)
    nil_left_ann: int = None
    nil_right_ann: int = None


def _enum_stats_q2(Z):
    """Unit/nilpotent/idempotent census over a GF(2) span, rows bit-packed."""
    ctx = Z.ctx
    n = Z.n
    basis_rows = []
    for flat in (b.flat() for b in Z.basis):
        rows = []
        for i in range(n):
            r = 0
            for j in range(n):
                if flat[i * n + j]:
                    r |= 1 << j
            rows.append(r)
        basis_rows.append(rows)
    m = Z.dim
    full = 0
    for j in range(n):
        full |= 1 << j

    def rank(rows):
        rs = [r for r in rows if r]
        rk = 0
        while rs:
            piv = rs.pop()
            rk += 1
            low = piv & -piv
            rs = [(r ^ piv) if (r & low) else r for r in rs]
            rs = [r for r in rs if r]
        return rk

    def mul(a, b):
        out = []
        for i in range(n):
            acc = 0
            ai = a[i]
            for j in range(n):
                if ai & (1 << j):
                    acc ^= b[j]
            out.append(acc)
        return out

    units = nilp = idem = 0
    nil_flats = []
    cur = [0] * n
    prev_gray = 0
    for g in range(1 << m):
        gray = g ^ (g >> 1)
        diff = gray ^ prev_gray
        prev_gray = gray
        if diff:
            k = diff.bit_length() - 1
            bk = basis_rows[k]
            for i in range(n):
                cur[i] ^= bk[i]
        if rank(cur) == n:
            units += 1
            continue
        sq = mul(cur, cur)
        if sq == cur:
            idem += 1
        p = sq
        if n == 3:
            p = mul(sq, cur)
        elif n == 4:
            p = mul(sq, sq)
        if not any(p):
            nilp += 1
            flat = []
            for i in range(n):
                for j in range(n):
                    flat.append(1 if cur[i] & (1 << j) else 0)
            nil_flats.append(tuple(flat))
    return units, nilp, idem, nil_flats


def _enum_stats_generic(Z):
    ctx = Z.ctx
    n = Z.n
    n2 = n * n
    m = Z.dim
    q = ctx.q
    add_t, mul_t, neg_t, inv_t = ctx.tables()
    # scaled copies of every basis vector
    scaled = [[tuple(mul_t[c][v] for v in b.flat()) for c in range(q)]
              for b in Z.basis]

    def flat_mul(a, b):
        out = [0] * n2
        pos = 0
        for i in range(n):
            for j in range(n):
                acc = 0
                for k in range(n):
                    acc = add_t[acc][mul_t[a[i * n + k]][b[k * n + j]]]
                out[pos] = acc
                pos += 1
        return out

    def flat_rank(a):
        rows = [list(a[i * n:(i + 1) * n]) for i in range(n)]
        rk = 0
        for col in range(n):
            piv = None
            for r in range(rk, n):
                if rows[r][col]:
                    piv = r
                    break
            if piv is None:
                continue
            rows[rk], rows[piv] = rows[piv], rows[rk]
            inv = inv_t[rows[rk][col]]
            rows[rk] = [mul_t[inv][v] for v in rows[rk]]
            for r in range(n):
                if r != rk and rows[r][col]:
                    f = neg_t[rows[r][col]]
                    rows[r] = [add_t[rows[r][c]][mul_t[f][rows[rk][c]]]
                               for c in range(n)]
            rk += 1
        return rk

    units = nilp = idem = 0
    nil_flats = []
    digits = [0] * m
    # suffix[i] holds the contribution of basis vectors i..m-1
    suffix = [[0] * n2 for _ in range(m + 1)]
    total = q ** m
    cur = suffix[0]
    for step in range(total):
        if step:
            k = 0
            while digits[k] == q - 1:
                digits[k] = 0
                k += 1
            digits[k] += 1
            sk = scaled[k][digits[k]]
            hi = suffix[k + 1]
            row = [add_t[hi[t]][sk[t]] for t in range(n2)]
            # rebuild from digit k down (lower digits all reset to 0,
            # except digit k itself which we just bumped)
            for i in range(k, -1, -1):
                suffix[i] = row
            cur = row
        if flat_rank(cur) == n:
            units += 1
            continue
        sq = flat_mul(cur, cur)
        if sq == list(cur):
            idem += 1
        if n <= 2:
            p = sq
        elif n == 3:
            p = flat_mul(sq, cur)
        else:
            p = flat_mul(sq, sq)
        if not any(p):
            nilp += 1
            nil_flats.append(tuple(cur))
    return units, nilp, idem, nil_flats


def _span_products(ctx, abasis, bbasis, n):
    """rref span of pairwise products of two lists of flat matrices."""
    prods = []
    for x in abasis:
        X = mat_from_flat(ctx, n, x)
        for y in bbasis:
            Y = mat_from_flat(ctx, n, y)
            prods.append(mat_mul(X, Y).flat())
    basis, _ = rref(ctx, prods)
    return basis


def _nil_ideal_chain(Z, nil_flats, nilpotent_count):
    """Chain of dims of powers of the span of the nilpotent elements, or
    None when that span is not a two-sided nil ideal."""
    ctx = Z.ctx
    n = Z.n
    vbasis, _ = rref(ctx, list(nil_flats))
    if not vbasis:
        return (0,)
    # every element of the span must itself be nilpotent
    if ctx.q ** len(vbasis) != nilpotent_count:
        return None
    vspan = SubalgebraBasis(ctx, n, vbasis)
    for Zm in Z.basis:
        for v in vbasis:
            Vm = mat_from_flat(ctx, n, v)
            if not vspan.contains(mat_mul(Zm, Vm)):
                return None
            if not vspan.contains(mat_mul(Vm, Zm)):
                return None
    chain = [len(vbasis)]
    power = vbasis
    while power:
        power = _span_products(ctx, vbasis, power, n)
        chain.append(len(power))
    return tuple(chain)


def fingerprint(Z):
    """Fingerprint of a SubalgebraBasis; enumerates all q^dim elements."""
    ctx = Z.ctx
    if ctx.q ** Z.dim > FINGERPRINT_ELEMENT_BOUND:
        raise ResourceError(
            "fingerprint needs %d^%d elements, above the %d bound"
            % (ctx.q, Z.dim, FINGERPRINT_ELEMENT_BOUND))
    if ctx.q == 2:
        units, nilp, idem, nil_flats = _enum_stats_q2(Z)
    else:
        units, nilp, idem, nil_flats = _enum_stats_generic(Z)
    from .matspace import ad_tables
    D = ad_tables(Z)
    commutative = all(all(all(v == 0 for v in row) for row in d) for d in D)
    if commutative:
        center_dim = Z.dim
    else:
        m = Z.dim
        rows = []
        for jk in range(m * m):
            j, k = divmod(jk, m)
            rows.append(tuple(D[i][j][k] for i in range(m)))
        center_dim = len(kernel_basis(ctx, rows, m))
    chain = _nil_ideal_chain(Z, nil_flats, nilp)
    left_ann, right_ann = _nil_annihilator_dims(Z, nil_flats)
    return Fingerprint(ctx.q, Z.dim, commutative, center_dim,
                       units, nilp, idem, chain, left_ann, right_ann)


def _nil_annihilator_dims(Z, nil_flats):
    """dims of the left and the right annihilator in Z of the span of the
    nilpotent elements."""
    ctx = Z.ctx
    n = Z.n
    vbasis, _ = rref(ctx, list(nil_flats))
    if not vbasis:
        return Z.dim, Z.dim
    vmats = [mat_from_flat(ctx, n, v) for v in vbasis]
    left_rows = []
    right_rows = []
    for V in vmats:
        prods_l = [mat_mul(b, V).flat() for b in Z.basis]
        prods_r = [mat_mul(V, b).flat() for b in Z.basis]
        for pos in range(n * n):
            left_rows.append(tuple(p[pos] for p in prods_l))
            right_rows.append(tuple(p[pos] for p in prods_r))
    return (len(kernel_basis(ctx, left_rows, Z.dim)),
            len(kernel_basis(ctx, right_rows, Z.dim)))


# ---------------------------------------------------------------------------
# catalog of all types for a given n


def _partitions_of(m):
    """Partitions of m as descending tuples."""
    if m == 0:
        return [()]
    out = []

    def rec(rem, mx, acc):
        if rem == 0:
            out.append(tuple(acc))
            return
        for part in range(min(rem, mx), 0, -1):
            acc.append(part)
            rec(rem - part, part, acc)
            acc.pop()

    rec(m, m, [])
    return out


def all_classical_types(n):
    """Every classical type of total size n, in canonical order."""
    items = []
    for d in range(1, n + 1):
        for m in range(1, n // d + 1):
            for lam in _partitions_of(m):
                items.append((d, lam))
    items.sort(key=lambda c: (c[0], _partition_key(c[1])))
    weights = [d * sum(lam) for d, lam in items]
    out = []

    def rec(start, rem, acc):
        if rem == 0:
            out.append(TypeDescriptor.classical(list(acc)))
            return
        for i in range(start, len(items)):
            if weights[i] <= rem:
                acc.append(items[i])
                rec(i, rem - weights[i], acc)
                acc.pop()

    rec(0, n, [])
    return out


# number of monic irreducibles of each degree, as a polynomial in q
_IRR_COUNT = {
    1: PolyQ.q(1),
    2: (PolyQ.q(2) - PolyQ.q(1)) * Fraction(1, 2),
    3: (PolyQ.q(3) - PolyQ.q(1)) * Fraction(1, 3),
    4: (PolyQ.q(4) - PolyQ.q(2)) * Fraction(1, 4),
}


def class_count(desc):
    """Number of single-matrix similarity classes of this type, as a
    polynomial in q (with rational coefficients; integer at every prime
    power).  The six tuple-only types contribute zero."""
    if desc.is_new():
        return PolyQ()
    by_degree = {}
    for d, lam in desc.components:
        by_degree.setdefault(d, []).append(lam)
    out = PolyQ.const(1)
    for d, lams in by_degree.items():
        nd = _IRR_COUNT[d]
        for i in range(len(lams)):
            out = out * (nd - i)
        mults = {}
        for lam in lams:
            mults[lam] = mults.get(lam, 0) + 1
        for m in mults.values():
            out = out * Fraction(1, math.factorial(m))
    return out


@dataclass(frozen=True)
class CatalogEntry:
    desc: TypeDescriptor
    class_count: PolyQ
    fingerprint: Fingerprint = None
    skip_reason: str = None


@lru_cache(maxsize=None)
def catalog(n, q):
    """All types for n x n tuples over F_q, with fingerprints computed
    where the element bound allows.

    Classical fingerprints come from block-diagonal algebra models, which
    exist at every q; tuples can realize a type even when no single matrix
    does, so fingerprints must not depend on representative feasibility.
    """
    if not 1 <= n <= 4:
        raise ValueError("catalog supports 1 <= n <= 4, got %r" % (n,))
    ctx = make_field(q)
    descs = list(all_classical_types(n))
    if n == 4:
        descs.extend(TypeDescriptor.new(t) for t in NEW_TYPE_TAGS)
    entries = []
    for desc in descs:
        cc = class_count(desc)
        if desc.new_tag is None:
            Z = algebra_model(desc, ctx)
        else:
            Z = centralizer_basis(representative(desc, ctx))
        try:
            fp = fingerprint(Z)
        except ResourceError as e:
            entries.append(CatalogEntry(desc, cc, None, str(e)))
            continue
        entries.append(CatalogEntry(desc, cc, fp))
    return tuple(entries)


def classify_tuple(tuple_):
    """TypeDescriptor of a commuting tuple, by fingerprint lookup."""
    Z = centralizer_basis(tuple_)
    fp = fingerprint(Z)
    n, q = Z.n, Z.ctx.q
    hits = [e for e in catalog(n, q) if e.fingerprint == fp]
    if not hits:
        # Commutative centralizer of dim n is the defining property of a
        # Regular tuple; the algebra itself need not match any single
        # matrix's centralizer, so these fall outside the catalog.
        if fp.commutative and fp.dim == n:
            return TypeDescriptor.regular_aggregate()
        raise UnknownTypeError(
            "centralizer fingerprint matches no catalogued type for "
            "n=%d, q=%d: %r" % (n, q, fp), fp)
    if len(hits) > 1:
        raise AssertionError(
            "fingerprint ambiguity between %s"
            % ", ".join(str(e.desc) for e in hits))
    return hits[0].desc
