"""Polycyclic presentations: construction, structure theory, files, bounds."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from solvchar.pcgroup import (
    BoundExceeded,
    Element,
    GroupFileError,
    GroupMap,
    InconsistentPresentation,
    PcPresentation,
    Subgroup,
    central_product,
    center,
    centralizer,
    core,
    cyclic,
    derived_series,
    derived_subgroup,
    direct_product,
    elementary_abelian,
    embed_left,
    embed_right,
    extraspecial,
    fitting_subgroup,
    format_group_file,
    frattini_subgroup,
    hall,
    intersect,
    is_nilpotent_group,
    lower_central_series,
    minimal_normal_subgroups,
    nilpotent_length,
    normal_subgroups,
    normalizer,
    parse_group_file,
    quotient,
    semidirect,
    subgroup_classes_of_order,
    subgroups_of_index,
    sylow,
)


def frobenius21():
    """Nonabelian group of order 21: C7 : C3 with the action q -> q^2."""
    C7 = cyclic(7)
    act = GroupMap(C7, C7, [C7.element((2,)).idx])
    return semidirect(cyclic(3), C7, [act])


def group_1053():
    """(C3^3 : C13) : C3, Fitting length 3.

    C3^3 is the additive group of F27 = F3[w]/(w^3 - w - 1); C13 acts as
    multiplication by w (a generator of F27* has order 26, w has order 13),
    and the top C3 acts as the Frobenius x -> x^3, which conjugates
    multiplication-by-w to multiplication-by-w^3.
    """
    V = elementary_abelian(3, 3)
    mul_w = GroupMap(
        V, V,
        [V.element((0, 1, 0)).idx, V.element((0, 0, 1)).idx, V.element((1, 1, 0)).idx],
    )
    frob = GroupMap(
        V, V,
        [V.element((1, 0, 0)).idx, V.element((1, 1, 0)).idx, V.element((1, 2, 1)).idx],
    )
    C13 = cyclic(13)
    act13 = GroupMap(C13, C13, [C13.element((3,)).idx])
    T39 = semidirect(cyclic(3), C13, [act13])
    return semidirect(T39, V, [frob, mul_w])


# -- basic presentations ----------------------------------------------------


def test_cyclic_group():
    C12 = cyclic(12)
    assert C12.order == 12
    assert C12.orders == (2, 2, 3)
    assert C12.is_abelian()
    assert C12.class_count == 12
    assert C12.exponent() == 12
    orders = sorted(Element(C12, i).order() for i in range(12))
    assert orders == [1, 2, 3, 3, 4, 4, 6, 6, 12, 12, 12, 12]


def test_presentation_validation():
    with pytest.raises(ValueError):
        PcPresentation((4,), ((0,),), {})  # 4 is not prime
    with pytest.raises(ValueError):
        PcPresentation((3, 3), ((1, 0), (0, 0)), {})  # power word not below g1
    with pytest.raises(InconsistentPresentation):
        # C3 pretending to act on C7 by q -> q^3: 3^3 != 1 mod 7
        PcPresentation((3, 7), ((0, 0), (0, 0)), {(0, 1): (0, 3)})


def test_order_bound():
    with pytest.raises(BoundExceeded):
        elementary_abelian(5, 6)


def test_semidirect_rejects_non_action():
    C7 = cyclic(7)
    bad = GroupMap(C7, C7, [C7.element((3,)).idx])
    with pytest.raises(ValueError):
        semidirect(cyclic(3), C7, [bad])


def test_semidirect_needs_one_map_per_generator():
    C7 = cyclic(7)
    act = GroupMap(C7, C7, [C7.element((2,)).idx])
    with pytest.raises(ValueError):
        semidirect(cyclic(9), C7, [act])  # cyclic(9) has two pc generators


# -- structure of F21 ---------------------------------------------------------


def test_frobenius21_structure():
    F21 = frobenius21()
    assert F21.order == 21
    assert F21.class_count == 5
    assert center(F21).order == 1
    assert derived_subgroup(F21).order == 7
    assert sylow(F21, 3).order == 3
    assert sylow(F21, 7).order == 7
    assert hall(F21, {3, 7}).order == 21
    assert nilpotent_length(F21) == 2
    assert fitting_subgroup(F21).order == 7
    assert not is_nilpotent_group(F21)


def test_frobenius21_subgroups():
    F21 = frobenius21()
    P3 = sylow(F21, 3)
    assert normalizer(F21, P3).order == 3  # seven conjugate Sylow 3-subgroups
    assert core(F21, P3).order == 1
    mns = minimal_normal_subgroups(F21)
    assert [N.order for N in mns] == [7]
    assert [N.order for N in normal_subgroups(F21)] == [1, 7, 21]
    P7 = sylow(F21, 7)
    assert intersect(P3, P7).order == 1
    assert centralizer(F21, P7) == P7


# -- extraspecial 3^(1+2) ------------------------------------------------------


def test_extraspecial27():
    ES = extraspecial(3, 1)
    assert ES.order == 27
    assert ES.class_count == 11
    assert ES.exponent() == 3
    Z = center(ES)
    assert Z.order == 3
    assert derived_subgroup(ES) == Z
    assert frattini_subgroup(ES) == Z
    assert is_nilpotent_group(ES) and nilpotent_length(ES) == 1
    assert len(lower_central_series(ES)) == 3  # ES > Z > 1


def test_extraspecial27_subgroup_enumeration():
    ES = extraspecial(3, 1)
    reps = subgroup_classes_of_order(ES, 3)
    total = sum(ES.order // normalizer(ES, H).order for H in reps)
    assert total == 13  # the central C3 plus twelve noncentral ones
    maximals = subgroups_of_index(ES, 3)
    assert len(maximals) == 4
    assert all(H.order == 9 and H.is_normal_in() for H in maximals)


def test_quotient_projection():
    ES = extraspecial(3, 1)
    Z = center(ES)
    q = quotient(ES, Z)
    assert q.group.order == 9 and q.group.is_abelian()
    assert q.projection.kernel() == Z
    assert q.projection.is_homomorphism()


def test_subgroup_as_group_is_isomorphic_embedding():
    ES = extraspecial(3, 1)
    H9 = subgroups_of_index(ES, 3)[0]
    pres, embed, coord = H9.as_group()
    assert pres.order == 9
    for a in range(9):
        for b in range(9):
            assert embed(pres.mul_idx(a, b)) == ES.mul_idx(embed(a), embed(b))
            assert coord(embed(a)) == a


# -- products ------------------------------------------------------------------


def test_direct_product_embeddings():
    C3, C7 = cyclic(3), cyclic(7)
    D = direct_product(C3, C7)
    assert D.order == 21 and D.is_abelian()
    lhs = embed_left(D, C3)
    rhs = embed_right(D, C7)
    a, b = lhs.images[0], rhs.images[0]
    assert D.mul_idx(a, b) == D.mul_idx(b, a)
    assert D.element_order(D.mul_idx(a, b)) == 21


def test_central_product_identifies_centers():
    C9a, C9b = cyclic(9), cyclic(9)
    a = C9a.element((0, 1))  # generator of the unique central C3
    b = C9b.element((0, 1))
    CP, eA, eB = central_product(C9a, C9b, [(a, b)])
    assert CP.order == 27
    assert eA.apply_idx(a.idx) == eB.apply_idx(b.idx)


def test_frattini_of_prime_power_cyclic():
    assert frattini_subgroup(cyclic(9)).order == 3
    assert frattini_subgroup(elementary_abelian(3, 2)).order == 1


# -- Fitting length 3 example ---------------------------------------------------


def test_group_1053_structure():
    G = group_1053()
    assert G.order == 1053
    assert center(G).order == 1
    assert derived_subgroup(G).order == 27 * 13
    assert nilpotent_length(G) == 3
    assert sylow(G, 3).order == 81
    assert sylow(G, 13).order == 13
    assert len(derived_series(G)) == 4  # G > G' > G'' > 1


# -- group files -----------------------------------------------------------------


def test_group_file_round_trip():
    F21 = frobenius21()
    text = format_group_file(F21)
    back = parse_group_file(text)
    assert back.orders == F21.orders
    assert back.powers == F21.powers
    assert back.conjugates == F21.conjugates


def test_group_file_comments_and_defaults():
    G = parse_group_file("# C9\npcgroup 2\norder 1 3\norder 2 3\npower 1 : 0 1\n")
    assert G.order == 9 and G.exponent() == 9


def test_group_file_errors_carry_line_numbers():
    cases = [
        ("pcgroup 2\norder 1 3\norder 2 3\nconj 2 1 : 0 0\n", 4),
        ("order 1 3\n", 1),
        ("pcgroup 1\norder 1 3\nfrob 1 : 0\n", 3),
        ("pcgroup 1\norder 1 3\npower 1 : 0 0\n", 3),
    ]
    for text, line_no in cases:
        with pytest.raises(GroupFileError) as exc:
            parse_group_file(text)
        assert exc.value.line_no == line_no
        assert str(exc.value).startswith(f"line {line_no}:")


def test_group_file_semantic_errors():
    # errors not tied to a single line report line 0
    with pytest.raises(GroupFileError) as exc:
        parse_group_file("pcgroup 1\norder 1 4\n")
    assert exc.value.line_no == 0
    with pytest.raises(GroupFileError):
        parse_group_file("pcgroup 2\norder 1 3\n")  # generator 2 has no order


# -- property tests ----------------------------------------------------------------


@st.composite
def group_and_indices(draw):
    builders = [
        lambda: cyclic(12),
        frobenius21,
        lambda: extraspecial(3, 1),
        lambda: direct_product(cyclic(3), cyclic(9)),
    ]
    G = draw(st.sampled_from(builders))()
    xs = draw(st.lists(st.integers(0, G.order - 1), min_size=3, max_size=3))
    return G, xs


@settings(max_examples=60, deadline=None)
@given(group_and_indices())
def test_group_axioms(data):
    G, (a, b, c) = data
    e = G.identity.idx
    assert G.mul_idx(G.mul_idx(a, b), c) == G.mul_idx(a, G.mul_idx(b, c))
    assert G.mul_idx(a, e) == a and G.mul_idx(e, a) == a
    assert G.mul_idx(a, G.inv_idx(a)) == e
    # (ab)^-1 = b^-1 a^-1
    assert G.inv_idx(G.mul_idx(a, b)) == G.mul_idx(G.inv_idx(b), G.inv_idx(a))


@settings(max_examples=30, deadline=None)
@given(group_and_indices())
def test_class_partition(data):
    G, (a, b, _) = data
    sizes = G.class_sizes()
    assert sum(sizes) == G.order
    assert all(G.order % s == 0 for s in sizes)
    # conjugation preserves element order
    conj = G.mul_idx(G.inv_idx(b), G.mul_idx(a, b))
    assert G.element_order(conj) == G.element_order(a)
