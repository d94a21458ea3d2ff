"""Brute-force verification oracles.

Everything here is independent of the branching-matrix machinery: tuples are
enumerated, orbits are counted by canonical representatives or by Burnside,
and branch tables are reproduced by conjugating centralizer algebras by their
own unit groups.  Slow on purpose; correct by construction.
"""

import time
from dataclasses import dataclass, field

from .gfield import make_field
from .matspace import (
    ResourceError, mat_from_code, mat_mul, mat_rank, identity, rank,
    centralizer_basis, centralizer_in, full_matrix_algebra,
    gl_conjugacy_classes, gl_order, units_of, ad_tables, ad_matrix,
)
from .typeclass import TypeDescriptor, classify_tuple

TUPLE_SPACE_BOUND = 2 ** 16   # q^(n^2) cap for full enumeration
DIRECT_GROUP_BOUND = 10 ** 4  # |GL_n(F_q)| cap for the direct method
DIRECT_TUPLE_BOUND = 10 ** 7  # commuting tuple cap for the direct method
CENSUS_ELEMENT_BOUND = 2 ** 20  # q^dim cap for a branch census


@dataclass(frozen=True)
class OrbitReport:
    n: int
    k: int
    q: int
    method: str  # "direct" or "burnside"
    orbit_count: int
    total_tuples: int
    elapsed: float


@dataclass
class CensusReport:
    base: tuple
    base_type: TypeDescriptor
    q: int
    rows: dict = field(default_factory=dict)  # TypeDescriptor -> branch count


# ---------------------------------------------------------------------------
# Counting pairwise-commuting tuples inside a subalgebra.

def _rank_bits(rows):
    """Rank over F_2 of bit-packed rows."""
    piv = {}
    for row in rows:
        while row:
            t = row.bit_length()
            other = piv.get(t)
            if other is None:
                piv[t] = row
                break
            row ^= other
    return len(piv)


def _pair_count_q2(Z):
    """Sum over a in Z of 2^(dim ker ad_a), via Gray-code row flips."""
    m = Z.dim
    D = ad_tables(Z)
    packed = []
    for i in range(m):
        packed.append([sum(bit << c for c, bit in enumerate(row))
                       for row in D[i]])
    rows = [0] * m
    total = 1 << m  # a = 0: ad is zero, whole algebra commutes
    for step in range(1, 1 << m):
        i = (step & -step).bit_length() - 1
        Di = packed[i]
        for r in range(m):
            rows[r] ^= Di[r]
        total += 1 << (m - _rank_bits([x for x in rows if x]))
    return total


def _pair_count_generic(Z):
    ctx = Z.ctx
    q = ctx.q
    m = Z.dim
    D = ad_tables(Z)
    total = 0
    coords = [0] * m
    for code in range(q ** m):
        x = code
        for i in range(m):
            coords[i] = x % q
            x //= q
        A = ad_matrix(Z, coords, tables=D)
        total += q ** (m - rank(ctx, A))
    return total


def _commuting_count_in(Z, k, memo):
    """Number of pairwise-commuting k-tuples with entries in the span of Z."""
    q = Z.ctx.q
    if k == 1:
        return q ** Z.dim
    key = (Z.key(), k)
    got = memo.get(key)
    if got is not None:
        return got
    if q ** Z.dim > CENSUS_ELEMENT_BOUND:
        raise ResourceError("commuting count: q^dim = %d exceeds %d"
                            % (q ** Z.dim, CENSUS_ELEMENT_BOUND))
    if k == 2:
        val = _pair_count_q2(Z) if q == 2 else _pair_count_generic(Z)
    else:
        val = 0
        for a in Z.elements():
            val += _commuting_count_in(centralizer_in(Z, a), k - 1, memo)
    memo[key] = val
    return val


def commuting_tuple_count(n, q, k):
    """Number of k-tuples of pairwise-commuting matrices in M_n(F_q)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if q ** (n * n) > TUPLE_SPACE_BOUND:
        raise ResourceError("commuting_tuple_count: q^(n^2) = %d exceeds %d"
                            % (q ** (n * n), TUPLE_SPACE_BOUND))
    ctx = make_field(q)
    return _commuting_count_in(full_matrix_algebra(ctx, n), k, {})


# ---------------------------------------------------------------------------
# Orbit counting under simultaneous conjugation.

def orbit_count_direct(n, q, k):
    """Count orbits by reducing every commuting tuple to its minimal
    conjugate (lexicographically smallest tuple of matrix codes)."""
    t0 = time.perf_counter()
    if gl_order(n, q) > DIRECT_GROUP_BOUND:
        raise ResourceError("orbit_count_direct: |GL_%d(F_%d)| = %d exceeds %d"
                            % (n, q, gl_order(n, q), DIRECT_GROUP_BOUND))
    total = commuting_tuple_count(n, q, k)
    if total > DIRECT_TUPLE_BOUND:
        raise ResourceError("orbit_count_direct: %d tuples exceed %d"
                            % (total, DIRECT_TUPLE_BOUND))
    ctx = make_field(q)
    top = full_matrix_algebra(ctx, n)
    ncodes = q ** (n * n)
    # one permutation of matrix codes per group element
    perms = []
    for u, uinv in units_of(top):
        p = [0] * ncodes
        for code in range(ncodes):
            M = mat_from_code(ctx, n, code)
            p[code] = mat_mul(mat_mul(u, M), uinv).code()
        perms.append(p)

    minima = set()
    seen_tuples = 0

    def finalize(codes):
        nonlocal seen_tuples
        seen_tuples += 1
        best = codes
        for p in perms:
            cand = tuple(p[c] for c in codes)
            if cand < best:
                best = cand
        minima.add(best)

    def walk(codes, Z):
        if len(codes) + 1 == k:
            for B in Z.elements():
                finalize(codes + (B.code(),))
        else:
            for B in Z.elements():
                walk(codes + (B.code(),), centralizer_in(Z, B))

    walk((), top)
    assert seen_tuples == total, "enumeration disagrees with the count"
    return OrbitReport(n=n, k=k, q=q, method="direct",
                       orbit_count=len(minima), total_tuples=total,
                       elapsed=time.perf_counter() - t0)


def orbit_count_burnside(n, q, k):
    """Count orbits as the average number of tuples fixed by a group element.

    Fixed tuples of g are exactly the commuting k-tuples inside Z(g), so one
    conjugacy-class representative per class suffices.
    """
    t0 = time.perf_counter()
    if k < 1:
        raise ValueError("k must be at least 1")
    ctx = make_field(q)
    classes = gl_conjugacy_classes(n, ctx)
    order = gl_order(n, q)
    one = identity(ctx, n)
    memo = {}
    acc = 0
    total_tuples = None
    for rep, size in classes:
        Z = centralizer_basis((rep,))
        fixed = _commuting_count_in(Z, k, memo)
        acc += size * fixed
        if rep == one:
            total_tuples = fixed
    count, rem = divmod(acc, order)
    assert rem == 0, "Burnside sum not divisible by the group order"
    assert total_tuples is not None
    return OrbitReport(n=n, k=k, q=q, method="burnside",
                       orbit_count=count, total_tuples=total_tuples,
                       elapsed=time.perf_counter() - t0)


# ---------------------------------------------------------------------------
# Branch census: orbits of Z(base) under conjugation by its own units.

def branch_census(base, ctx=None):
    """Classify every orbit of Z(base) under unit conjugation.

    Regular branches (simple types, or centralizer algebras that are
    commutative of dimension n) are aggregated into the single Regular row,
    matching how branch tables are stated.
    """
    if ctx is None:
        ctx = base[0].ctx
    q = ctx.q
    Z = centralizer_basis(base)
    m = Z.dim
    if q ** m > CENSUS_ELEMENT_BOUND:
        raise ResourceError("branch_census: q^dim = %d exceeds %d"
                            % (q ** m, CENSUS_ELEMENT_BOUND))
    base_type = classify_tuple(base)
    units = units_of(Z)
    regular = TypeDescriptor.regular_aggregate()
    rows = {}
    memo = {}
    seen = bytearray(q ** m)
    covered = 0
    for code in range(q ** m):
        if seen[code]:
            continue
        coords = []
        x = code
        for _ in range(m):
            coords.append(x % q)
            x //= q
        M = Z.from_coords(tuple(coords))
        orbit = set()
        for u, uinv in units:
            c = Z.coords_of(mat_mul(mat_mul(u, M), uinv))
            oc = 0
            for v in reversed(c):
                oc = oc * q + v
            orbit.add(oc)
        assert code in orbit
        for oc in orbit:
            seen[oc] = 1
        covered += len(orbit)
        branch = base + (M,)
        key = centralizer_basis(branch).key()
        desc = memo.get(key)
        if desc is None:
            desc = classify_tuple(branch)
            if desc.is_regular():
                desc = regular
            memo[key] = desc
        rows[desc] = rows.get(desc, 0) + 1
    assert covered == q ** m, "census does not partition the centralizer"
    return CensusReport(base=base, base_type=base_type, q=q, rows=rows)
