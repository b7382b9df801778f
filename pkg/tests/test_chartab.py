"""Character tables: oracle equivalence, induction, extensions, monomiality."""

import pytest

from solvchar.cyclotomic import ONE
from solvchar.pcgroup import (
    GroupMap,
    Subgroup,
    center,
    cyclic,
    elementary_abelian,
    embed_left,
    embed_right,
    extraspecial,
    semidirect,
)
from solvchar.chartab import (
    canonical_extension,
    character_center_subgroup,
    character_table,
    conjugate_character,
    decompose,
    determinantal_order,
    extension_set,
    gallagher_factor,
    induce,
    inner_product_int,
    is_invariant,
    is_irreducible,
    is_monomial,
    kernel_subgroup,
    linear_characters,
    restrict,
    semidirect_character,
    table_to_dict,
    trivial_character,
    verify_table_orthogonality,
)

from oracle_chartab import oracle_character_table
from sample_groups import abelian_21, frobenius21, group_63, group_75, wreath_81


def sorted_rows(table):
    return sorted(
        (tuple(chi.values) for chi in table.irreducibles),
        key=lambda row: (int(row[0].as_rational()), [v.serialize() for v in row]),
    )


# -- equivalence with the independent lattice-based table ----------------------


@pytest.mark.parametrize(
    "builder",
    [
        lambda: cyclic(3),
        lambda: cyclic(9),
        frobenius21,
        lambda: extraspecial(3, 1),
        group_63,
        group_75,
        wreath_81,
    ],
    ids=["C3", "C9", "F21", "ES27", "C7:C9", "(C5xC5):C3", "C3wrC3"],
)
def test_table_matches_induction_lattice_oracle(builder):
    G = builder()
    got = sorted_rows(character_table(G))
    want = [tuple(row) for row in oracle_character_table(G)]
    assert got == want


# -- frozen degree patterns ------------------------------------------------------


def test_degree_multisets():
    cases = [
        (cyclic(3), [1, 1, 1]),
        (frobenius21(), [1, 1, 1, 3, 3]),
        (extraspecial(3, 1), [1] * 9 + [3, 3]),
        (group_63(), [1] * 9 + [3] * 6),
        (group_75(), [1, 1, 1] + [3] * 8),
        (wreath_81(), [1] * 9 + [3] * 8),
        (extraspecial(3, 2), [1] * 81 + [9, 9]),
    ]
    for G, want in cases:
        table = character_table(G)
        assert sorted(table.degrees) == want
        assert sum(d * d for d in table.degrees) == G.order
        verify_table_orthogonality(table)


def test_linear_characters_form_dual_of_abelianization():
    F21 = frobenius21()
    lins = linear_characters(F21)
    assert len(lins) == 3  # |G / G'| with G' = C7
    for lam in lins:
        assert lam.is_linear and is_irreducible(lam)
    table = character_table(F21)
    assert [chi.values for chi in table.linears()] == [lam.values for lam in lins]


def test_table_is_closed_under_complex_conjugation():
    table = character_table(group_75())
    rows = {tuple(chi.values) for chi in table.irreducibles}
    for chi in table.irreducibles:
        assert tuple(chi.complex_conjugate().values) in rows


# -- induction and reciprocity -----------------------------------------------------


def test_induce_linear_from_normal_c7():
    F21 = frobenius21()
    C7 = cyclic(7)
    N7 = Subgroup.from_generator_idxs(F21, [embed_right(F21, C7).images[0]])
    assert N7.order == 7
    presN, _, _ = N7.as_group()
    lam = next(
        c for c in character_table(presN).irreducibles
        if c.values != trivial_character(presN).values
    )
    ind = induce(lam, F21, N7)
    assert ind.degree == 3
    assert inner_product_int(ind, ind) == 1  # induced character is irreducible
    table = character_table(F21)
    assert ind.values in [c.values for c in table.irreducibles]
    # Frobenius reciprocity against every irreducible
    for chi in table.irreducibles:
        assert inner_product_int(ind, chi) == inner_product_int(lam, restrict(chi, N7))


def test_decompose_induced_trivial():
    # 1_H^G decomposes with multiplicity <chi|_H, 1> and total degree [G:H]
    F21 = frobenius21()
    P3 = Subgroup.from_generator_idxs(F21, [embed_left(F21, cyclic(3)).images[0]])
    assert P3.order == 3
    presP, _, _ = P3.as_group()
    ind = induce(trivial_character(presP), F21, P3)
    assert ind.degree == 7
    parts = decompose(ind)
    assert sum(m * chi.degree for m, chi in parts) == 7
    mults = sorted((m, chi.degree) for m, chi in parts)
    assert mults == [(1, 1), (1, 3), (1, 3)]  # trivial once, each cubic once


# -- kernels, centers, determinants --------------------------------------------------


def test_faithful_cubic_of_extraspecial():
    ES = extraspecial(3, 1)
    table = character_table(ES)
    chi3 = next(c for c in table.irreducibles if c.degree == 3)
    assert kernel_subgroup(chi3).order == 1
    assert character_center_subgroup(chi3) == center(ES)
    assert determinantal_order(chi3) in (1, 3)
    lam = next(c for c in table.linears() if c.values != trivial_character(ES).values)
    assert kernel_subgroup(lam).order == 9
    assert determinantal_order(lam) == 3


# -- monomiality -----------------------------------------------------------------------


def test_extraspecial_is_monomial_with_witnesses():
    ES = extraspecial(3, 1)
    for chi in character_table(ES).irreducibles:
        res = is_monomial(chi)
        assert res.status == "monomial"
        if chi.degree > 1:
            assert res.subgroup.order == 9
            again = induce(res.linear, ES, res.subgroup)
            assert again.values == chi.values


def test_frobenius21_cubics_are_induced_from_c7():
    F21 = frobenius21()
    for chi in character_table(F21).irreducibles:
        if chi.degree != 3:
            continue
        res = is_monomial(chi)
        assert res.status == "monomial" and res.subgroup.order == 7


# -- invariance, extensions, Gallagher --------------------------------------------------


def c21_with_c7():
    C21 = abelian_21()
    B7 = Subgroup.from_generator_idxs(C21, [embed_right(C21, cyclic(7)).images[0]])
    return C21, B7


def test_extension_set_of_invariant_linear():
    C21, B7 = c21_with_c7()
    presB, _, _ = B7.as_group()
    theta = character_table(presB).irreducibles[1]
    assert is_invariant(theta, B7)
    exts = extension_set(theta, C21, B7)
    assert len(exts) == 3  # one per linear character of C21 / C7
    for ext in exts:
        assert ext.degree == 1
        assert restrict(ext, B7).values == theta.values
    ce = canonical_extension(theta, C21, B7)
    a_gen = embed_left(C21, cyclic(3)).images[0]
    assert ce.value_at_idx(a_gen) == ONE  # determinantal-order-preserving choice


def test_extension_requires_invariance():
    F21 = frobenius21()
    N7 = Subgroup.from_generator_idxs(F21, [embed_right(F21, cyclic(7)).images[0]])
    presN, _, _ = N7.as_group()
    lam = next(
        c for c in character_table(presN).irreducibles
        if c.values != trivial_character(presN).values
    )
    assert not is_invariant(lam, N7)
    g = embed_left(F21, cyclic(3)).images[0]
    moved = conjugate_character(lam, N7, g)
    assert moved.values != lam.values
    with pytest.raises(ValueError):
        extension_set(lam, F21, N7)


def test_semidirect_character_gallagher_round_trip():
    C21, B7 = c21_with_c7()
    A3 = Subgroup.from_generator_idxs(C21, [embed_left(C21, cyclic(3)).images[0]])
    presA, _, _ = A3.as_group()
    presB, _, _ = B7.as_group()
    for alpha in character_table(presA).irreducibles:
        for beta in character_table(presB).irreducibles:
            chi = semidirect_character(C21, A3, B7, alpha, beta)
            assert inner_product_int(chi, chi) == 1
            back = gallagher_factor(chi, C21, A3, B7, beta)
            assert back.values == alpha.values


# -- serialization -------------------------------------------------------------------------


def test_table_to_dict_shape():
    F21 = frobenius21()
    d = table_to_dict(character_table(F21))
    assert set(d) == {"group", "order", "class_representatives", "class_sizes", "characters"}
    assert d["order"] == 21
    assert sorted(d["class_sizes"]) == [1, 3, 3, 7, 7]
    assert len(d["characters"]) == 5
    assert d["characters"][0][0] == "1:[0=1]"
