"""Branching matrices for commuting tuples of n x n matrices, n = 2, 3, 4.

The reduced matrix B_n is indexed by rcf partitions plus (for n = 4) the six
tuple-only types.  Entry (i, j) counts branches of index i that a tuple of
index j has; c_{n,k}(q) = 1' B_n^k e_1 with e_1 the all-ones-partition slot.

The matrices are stored as data.  average_branches rederives every column
from the per-type branch tables and the rcf probability tables, which the
test suite uses as a double-entry check on the transcription.
"""

from fractions import Fraction

from .polyq import PolyQ, RatQ
from .typeclass import parse_type, NEW_TYPE_TAGS


def _p(terms):
    """Tiny builder: terms is a list of (exp, coeff) pairs."""
    out = PolyQ()
    for e, c in terms:
        out = out + PolyQ.q(e, c) if e else out + PolyQ.const(c)
    return out


_Q = PolyQ.q
_HALF = Fraction(1, 2)


class BranchingMatrix:
    def __init__(self, n, index, entries):
        self.n = n
        self.index = tuple(index)
        self.entries = [list(row) for row in entries]
        assert len(self.entries) == len(self.index)
        assert all(len(r) == len(self.index) for r in self.entries)

    def entry(self, target, source):
        return self.entries[self.index.index(target)][self.index.index(source)]


_B2 = BranchingMatrix(2, [(1, 1), (2,)], [
    [_Q(1), PolyQ()],
    [_Q(2), _Q(2)],
])

_B3 = BranchingMatrix(3, [(1, 1, 1), (2, 1), (3,)], [
    [_Q(1), PolyQ(), PolyQ()],
    [_Q(2), _Q(2), PolyQ()],
    [_Q(3), _Q(3) + 1, _Q(3)],
])

_Z = PolyQ()
_B4_INDEX = [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,),
             "NT1", "NT2", "NT3", "NT4", "NT5", "NT6"]
_HQ2 = PolyQ({2: _HALF, 1: -_HALF})  # (q^2 - q)/2

_B4 = BranchingMatrix(4, _B4_INDEX, [
    [_Q(1), _Z, _Z, _Z, _Z, _Z, _Z, _Z, _Z, _Z, _Z],
    [_Q(2), _Q(2), _Z, _Z, _Z, _Z, _Z, _Z, _Z, _Z, _Z],
    [_Q(2), _Z, _Q(2), _Z, _Z, _Z, _Z, _Z, _Z, _Z, _Z],
    [_Q(3), _Q(3) + _Q(2) - _Q(1) - 1, _Q(3) - _Q(2), _Q(3),
     _Z, _Z, _Z, _Z, _Z, _Z, _Z],
    [_Q(4), _Q(4) + _Q(1), _Q(4), _Q(4) + _Q(1), _Q(4),
     _Q(4) - _Q(3), _Q(4) - _Q(3), _Q(4) - _Q(3), _Q(4), _Q(4), _Z],
    [_Z, PolyQ.const(1), _Q(1), _Z, _Z, _Q(3), _Z, _Z, _Z, _Z, _Z],
    [_Z, _Z, _HQ2, _Z, _Z, _Z, _Q(3), _Z, _Z, _Z, _Z],
    [_Z, _Q(1), _HQ2, _Z, _Z, _Z, _Z, _Q(3), _Z, _Z, _Z],
    [_Z, PolyQ.const(1), _Z, _Z, _Z, _Z, _Z, _Z, _Q(3), _Z, _Z],
    [_Z, PolyQ.const(1), _Z, _Z, _Z, _Z, _Z, _Z, _Z, _Q(3), _Z],
    [_Z, _Z, _Z, _Z, _Z, _Q(4) - _Q(2), _Q(4) - _Q(3), _Q(4) + _Q(3),
     _Q(3) + _Q(2), _Q(3) + _Q(2), _Q(5)],
])


def branching_matrix(n):
    if n == 2:
        return _B2
    if n == 3:
        return _B3
    if n == 4:
        return _B4
    raise ValueError("branching matrix only defined for n = 2, 3, 4")


def count(n, k):
    """c_{n,k}(q) = 1' B_n^k e_1, asserted to land in Z[q]."""
    if k < 1:
        raise ValueError("k must be >= 1")
    B = branching_matrix(n)
    m = len(B.index)
    v = [PolyQ.const(1)] + [PolyQ() for _ in range(m - 1)]
    for _ in range(k):
        v = [sum((B.entries[i][j] * v[j] for j in range(m)), PolyQ())
             for i in range(m)]
    total = sum(v, PolyQ())
    if not total.is_integral():
        raise AssertionError("c_{%d,%d} not in Z[q]: %r" % (n, k, total))
    if n <= 3 and not total.is_nonneg():
        raise AssertionError("c_{%d,%d} has a negative coefficient" % (n, k))
    return total


# ---------------------------------------------------------------------------
# per-type branch tables and rcf probabilities (the averaging inputs)
#
# Branch targets are full type strings, the aggregate "Regular", or a
# new-type tag.  Sources likewise; "Central" would be the all-ones type but
# is written out in full for parseability.

TYPE_BRANCHES = {
    2: {
        "(1,1)_1": {"(1,1)_1": _Q(1), "Regular": _Q(2)},
        "Regular": {"Regular": _Q(2)},
    },
    3: {
        "(1,1,1)_1": {"(1,1,1)_1": _Q(1), "(2,1)_1": _Q(1),
                      "(1,1)_1(1)_1": _Q(2) - _Q(1), "Regular": _Q(3)},
        "(2,1)_1": {"(2,1)_1": _Q(2), "Regular": _Q(3) + _Q(1)},
        "(1,1)_1(1)_1": {"(1,1)_1(1)_1": _Q(2), "Regular": _Q(3)},
        "Regular": {"Regular": _Q(3)},
    },
    4: {
        "(1,1,1,1)_1": {
            "(1,1,1,1)_1": _Q(1),
            "(2,1,1)_1": _Q(1),
            "(1,1,1)_1(1)_1": _Q(2) - _Q(1),
            "(2,2)_1": _Q(1),
            "(1,1)_1(1,1)_1": _HQ2,
            "(1,1)_2": _HQ2,
            "(3,1)_1": _Q(1),
            "(2,1)_1(1)_1": _Q(2) - _Q(1),
            "(1,1)_1(1)_1(1)_1": (_Q(1) * (_Q(1) - 1) * (_Q(1) - 2)) * _HALF,
            "(1,1)_1(2)_1": _Q(2) - _Q(1),
            "(1,1)_1(1)_2": (_Q(3) - _Q(2)) * _HALF,
            "Regular": _Q(4),
        },
        "(1,1,1)_1(1)_1": {
            "(1,1,1)_1(1)_1": _Q(2), "(2,1)_1(1)_1": _Q(2),
            "(1,1)_1(1)_1(1)_1": _Q(3) - _Q(2), "Regular": _Q(4),
        },
        "(2,1,1)_1": {
            "(2,1,1)_1": _Q(2),
            "(3,1)_1": _Q(2) - _Q(1),
            "(1,1)_1(2)_1": _Q(3) - _Q(2),
            "(2,1)_1(1)_1": _Q(3) - _Q(2),
            "Regular": _Q(4) + _Q(2),
            "NT1": _Q(1), "NT3": _Q(2), "NT4": _Q(1), "NT5": _Q(1),
        },
        "(1,1)_1(1,1)_1": {
            "(1,1)_1(1,1)_1": _Q(2),
            "(1,1)_1(2)_1": _Q(2, 2),
            "(1,1)_1(1)_2": _Q(3) - _Q(2),
            "(1,1)_1(1)_1(1)_1": _Q(3) - _Q(2),
            "Regular": _Q(4),
        },
        "(2,2)_1": {
            "(2,2)_1": _Q(2), "Regular": _Q(4),
            "NT1": _Q(2), "NT2": _HQ2 * _Q(1), "NT3": _HQ2 * _Q(1),
        },
        "(1,1)_2": {"(1,1)_2": _Q(2), "Regular": _Q(4)},
        "(3,1)_1": {"(3,1)_1": _Q(3), "Regular": _Q(4) + _Q(2)},
        # self-branch count is q^3, confirmed by the brute-force census at
        # q = 2 and q = 3; only q^3 makes the rcf (3,1) column average q^3
        "(2,1)_1(1)_1": {"(2,1)_1(1)_1": _Q(3), "Regular": _Q(4) + _Q(2)},
        "(1,1)_1(2)_1": {"(1,1)_1(2)_1": _Q(3), "Regular": _Q(4)},
        "(1,1)_1(1)_2": {"(1,1)_1(1)_2": _Q(3), "Regular": _Q(4)},
        "(1,1)_1(1)_1(1)_1": {"(1,1)_1(1)_1(1)_1": _Q(3), "Regular": _Q(4)},
        "Regular": {"Regular": _Q(4)},
        "NT1": {"NT1": _Q(3), "Regular": _Q(4) - _Q(3), "NT6": _Q(4) - _Q(2)},
        "NT2": {"NT2": _Q(3), "Regular": _Q(4) - _Q(3), "NT6": _Q(4) - _Q(3)},
        "NT3": {"NT3": _Q(3), "Regular": _Q(4) - _Q(3), "NT6": _Q(4) + _Q(3)},
        "NT4": {"NT4": _Q(3), "NT6": _Q(3) + _Q(2), "Regular": _Q(4)},
        "NT5": {"NT5": _Q(3), "NT6": _Q(3) + _Q(2), "Regular": _Q(4)},
        "NT6": {"NT6": _Q(5)},
    },
}

# p_tau^lambda: probability that an rcf-lambda class has similarity type tau
RCF_PROBS = {
    2: {
        (1, 1): {"(1,1)_1": RatQ(1)},
        (2,): {"Regular": RatQ(1)},
    },
    3: {
        (1, 1, 1): {"(1,1,1)_1": RatQ(1)},
        (2, 1): {"(1,1)_1(1)_1": RatQ(_Q(1) - 1, _Q(1)),
                 "(2,1)_1": RatQ(1, _Q(1))},
        (3,): {"Regular": RatQ(1)},
    },
    4: {
        (1, 1, 1, 1): {"(1,1,1,1)_1": RatQ(1)},
        (2, 1, 1): {"(1,1,1)_1(1)_1": RatQ(_Q(1) - 1, _Q(1)),
                    "(2,1,1)_1": RatQ(1, _Q(1))},
        (2, 2): {"(1,1)_1(1,1)_1": RatQ(_Q(1) - 1, _Q(1, 2)),
                 "(2,2)_1": RatQ(1, _Q(1)),
                 "(1,1)_2": RatQ(_Q(1) - 1, _Q(1, 2))},
        (3, 1): {"(3,1)_1": RatQ(1, _Q(2)),
                 "(2,1)_1(1)_1": RatQ(_Q(1) - 1, _Q(2)),
                 "(1,1)_1(2)_1": RatQ(_Q(1) - 1, _Q(2)),
                 "(1,1)_1(1)_2": RatQ(_Q(1) - 1, _Q(1, 2)),
                 "(1,1)_1(1)_1(1)_1":
                     RatQ((_Q(1) - 1) * (_Q(1) - 2), _Q(2, 2))},
        (4,): {"Regular": RatQ(1)},
    },
}


def _target_index(n, target):
    """Reduced-matrix index of a branch target named by a type string."""
    if target in NEW_TYPE_TAGS:
        return target
    if target == "Regular":
        return (n,)
    return parse_type(target).rcf_type()


def average_branches(type_rows, lam):
    """One column of the reduced matrix: average over the types of rcf lam.

    type_rows maps a type string to (probability: RatQ, branches: map of
    target type string -> PolyQ).  Probabilities must sum to exactly 1.
    Returns a map from reduced index (rcf partition or new-type tag) to
    PolyQ; the averages are asserted to be polynomial.
    """
    total_p = RatQ(0)
    for p, _ in type_rows.values():
        total_p = total_p + p
    if total_p != RatQ(1):
        raise ValueError("probabilities for rcf %r do not sum to 1" % (lam,))
    n = sum(lam)
    acc = {}
    for tau, (p, branches) in type_rows.items():
        if tau not in NEW_TYPE_TAGS and tau != "Regular":
            if parse_type(tau).rcf_type() != tuple(lam):
                raise ValueError("type %s does not have rcf %r" % (tau, lam))
        grouped = {}
        for target, cnt in branches.items():
            idx = _target_index(n, target)
            grouped[idx] = grouped.get(idx, PolyQ()) + cnt
        for idx, cnt in grouped.items():
            acc[idx] = acc.get(idx, RatQ(0)) + p * cnt
    return {idx: v.as_polyq() for idx, v in acc.items()}


def derived_matrix(n):
    """Rebuild the full reduced matrix from the per-type data; used as a
    double-entry test against branching_matrix(n)."""
    B = branching_matrix(n)
    out = BranchingMatrix(n, B.index,
                          [[PolyQ()] * len(B.index) for _ in B.index])
    for j, src in enumerate(B.index):
        if isinstance(src, str):  # new-type column: a single type, p = 1
            col = {}
            for target, cnt in TYPE_BRANCHES[n][src].items():
                idx = _target_index(n, target)
                col[idx] = col.get(idx, PolyQ()) + cnt
        else:
            probs = RCF_PROBS[n][src]
            rows = {tau: (p, TYPE_BRANCHES[n][tau])
                    for tau, p in probs.items()}
            col = average_branches(rows, src)
        for idx, v in col.items():
            out.entries[out.index.index(idx)][j] = v
    return out
