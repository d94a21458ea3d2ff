import pytest

from simsim.gfield import make_field
from simsim.matspace import ResourceError, centralizer_basis, mat_from_code
from simsim.typeclass import (TypeDescriptor, parse_type, catalog,
                              classify_matrix, classify_tuple, representative,
                              algebra_model, fingerprint, class_count,
                              all_classical_types, InfeasibleTypeError,
                              NEW_TYPE_TAGS)


def test_parse_render_round_trip():
    for s in ["(2,1)_1(1)_1", "(1,1)_2", "(4)_1", "NT3", "Regular",
              "(1)_1(1)_1(1)_1(1)_1"]:
        assert parse_type(s).render() == parse_type(parse_type(s).render()).render()


def test_parse_accepts_any_component_order():
    assert parse_type("(1)_1(2,1)_1") == parse_type("(2,1)_1(1)_1")


def test_parse_rejects_garbage():
    for s in ["", "NT9", "(2,1)", "(0)_1", "q^2"]:
        with pytest.raises(ValueError):
            parse_type(s)


def test_type_counts_per_n():
    assert len(all_classical_types(2)) == 4
    assert len(all_classical_types(3)) == 8
    assert len(all_classical_types(4)) == 22
    assert len(catalog(4, 2)) == 28


def test_rcf_type():
    assert parse_type("(2,1)_1(1)_1").rcf_type() == (3, 1)
    assert parse_type("(1,1)_2").rcf_type() == (2, 2)
    assert parse_type("(4)_1").rcf_type() == (4,)
    with pytest.raises(ValueError):
        parse_type("NT1").rcf_type()


def test_classify_matrix_recovers_jordan_type():
    ctx = make_field(2)
    desc = parse_type("(2,1)_1")
    (A,) = representative(desc, ctx)
    assert classify_matrix(A).type_descriptor() == desc


def test_representative_round_trip_all_types():
    for q in (2, 3):
        ctx = make_field(q)
        for n in (2, 3, 4):
            for entry in catalog(n, q):
                try:
                    rep = representative(entry.desc, ctx)
                except InfeasibleTypeError:
                    continue
                try:
                    assert classify_tuple(rep) == entry.desc
                except ResourceError:
                    pass  # the scalar type at q=3 is over the element bound


def test_algebra_model_matches_representative_fingerprint():
    ctx = make_field(3)
    for entry in catalog(3, 3):
        if entry.desc.new_tag is not None:
            continue
        rep = representative(entry.desc, ctx)
        assert fingerprint(centralizer_basis(rep)) == \
            fingerprint(algebra_model(entry.desc, ctx))


def test_algebra_model_exists_where_representative_does_not():
    ctx = make_field(2)
    desc = parse_type("(1)_1(1)_1(1)_1")  # needs 3 distinct eigenvalues
    with pytest.raises(InfeasibleTypeError):
        representative(desc, ctx)
    Z = algebra_model(desc, ctx)
    assert Z.dim == 3


def test_fingerprints_distinct_in_catalog():
    for q in (2, 3):
        for n in (2, 3, 4):
            fps = [e.fingerprint for e in catalog(n, q)
                   if e.fingerprint is not None]
            assert len(fps) == len(set(fps))


def test_nt4_nt5_separated_by_annihilator_dims():
    by_tag = {e.desc.new_tag: e.fingerprint for e in catalog(4, 2)
              if e.desc.new_tag}
    f4, f5 = by_tag["NT4"], by_tag["NT5"]
    assert f4 != f5
    assert (f4.nil_left_ann, f4.nil_right_ann) == \
        (f5.nil_right_ann, f5.nil_left_ann)


def test_class_count_values():
    q = 3
    # (1)_1(1)_1: unordered pairs of distinct eigenvalues
    assert class_count(parse_type("(1)_1(1)_1")).eval_at(q) == q * (q - 1) // 2
    # single regular nilpotent-style type: one choice of linear irreducible
    assert class_count(parse_type("(2)_1")).eval_at(q) == q
    for tag in NEW_TYPE_TAGS:
        assert class_count(TypeDescriptor.new(tag)).eval_at(q) == 0


def test_classify_tuple_regular_aggregate_fallback():
    # a commuting pair whose centralizer is F[x,y]/(x^3, xy, y^2):
    # commutative of dimension 4 but not any single-matrix centralizer
    ctx = make_field(2)
    A = [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0], [0, 0, 0, 0]]
    B = [[0, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]
    from simsim.matspace import MatrixFq
    pair = (MatrixFq(ctx, A), MatrixFq(ctx, B))
    desc = classify_tuple(pair)
    assert desc.new_tag == "Regular"
    assert desc.is_regular()
