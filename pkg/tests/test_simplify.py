import random
from itertools import combinations
from math import gcd

import pytest

from arrpi.arvola import LabelRule, complement_presentation_arvola
from arrpi.boundary import boundary_presentation, boundary_presentation_from_diagram
from arrpi.errors import DomainError
from arrpi.inclusion import complement_presentation_inclusion, inclusion_data
from arrpi.simplify import (
    AbelianInvariants,
    abelianization,
    canonical_eq,
    eliminate_generator,
    families_eq,
    presentation_eq,
    smith_normal_form,
)
from arrpi.words import Presentation, W, Word, alpha, eps


def minor_gcd_divisors(rows):
    """Independent oracle: d_1 * ... * d_k equals the gcd of all k x k minors."""
    if not rows or not rows[0]:
        return []
    nr, nc = len(rows), len(rows[0])

    def det(sub):
        n = len(sub)
        if n == 1:
            return sub[0][0]
        total = 0
        for j in range(n):
            minor = [r[:j] + r[j + 1:] for r in sub[1:]]
            total += (-1) ** j * sub[0][j] * det(minor)
        return total

    prods = []
    for k in range(1, min(nr, nc) + 1):
        g = 0
        for ri in combinations(range(nr), k):
            for ci in combinations(range(nc), k):
                g = gcd(g, det([[rows[i][j] for j in ci] for i in ri]))
        if g == 0:
            break
        prods.append(g)
    divisors = []
    prev = 1
    for p in prods:
        divisors.append(p // prev)
        prev = p
    return divisors


def test_snf_against_minor_gcds():
    rng = random.Random(99)
    for _ in range(40):
        nr = rng.randint(1, 4)
        nc = rng.randint(1, 4)
        rows = [[rng.randint(-6, 6) for _ in range(nc)] for _ in range(nr)]
        got = [d for d in smith_normal_form(rows) if d != 0]
        assert got == minor_gcd_divisors(rows), rows


def test_snf_known_cases():
    assert smith_normal_form([[2, 0], [0, 3]]) == [1, 6]
    assert smith_normal_form([[0, 0], [0, 0]]) == []
    assert smith_normal_form([[4]]) == [4]
    assert smith_normal_form([[2, 4], [4, 8]]) == [2]


def test_abelianization_examples():
    p = Presentation((alpha(1),), relators=(W("a1 a1"),))
    assert abelianization(p) == AbelianInvariants(0, (2,))
    free = Presentation((alpha(1), alpha(2)))
    assert abelianization(free) == AbelianInvariants(2, ())


def test_didactic_complement_rank(didactic_wd):
    ab = abelianization(complement_presentation_inclusion(didactic_wd, "framed"))
    assert ab == AbelianInvariants(4, ())


def test_didactic_boundary_rank(didactic_arr):
    ab = abelianization(boundary_presentation(didactic_arr))
    assert ab == AbelianInvariants(10, ())


def test_eliminate_trivial_defining():
    p = Presentation((alpha(9), alpha(1)), ((W("a9"), W("a1")),))
    q = eliminate_generator(p, alpha(9), Word())
    assert q.generators == (alpha(1),)
    assert q.relator_count() == 0


def test_eliminate_requires_foreign_defining():
    p = Presentation((alpha(1), alpha(2)))
    with pytest.raises(DomainError):
        eliminate_generator(p, alpha(1), W("a1 a2"))
    with pytest.raises(DomainError):
        eliminate_generator(p, alpha(3), W("a2"))


def test_eliminate_infinity_meridian(didactic_wd):
    """Adjoin the infinity meridian and the product relation, then remove it."""
    pres = complement_presentation_inclusion(didactic_wd, "framed")
    with_inf = Presentation(
        (alpha(0),) + pres.generators,
        pres.families,
        pres.relators + (W("a0 a1 a2 a3 a4"),),
    )
    assert abelianization(with_inf).rank == 4
    reduced = eliminate_generator(with_inf, alpha(0), ~W("a1 a2 a3 a4"))
    assert reduced.generators == pres.generators
    assert presentation_eq(reduced, pres)


def test_eliminate_cycles_reproduces_final_presentation(maclane_wd):
    """Eliminating every cycle generator from the boundary-style presentation
    via its kernel relation lands exactly on the derived presentation."""
    data = inclusion_data(maclane_wd, "framed", LabelRule.BOTTOM_CONJ)
    bp = boundary_presentation_from_diagram(maclane_wd)
    pres = Presentation(
        bp.generators,
        bp.families,
        bp.relators + (W("a0 a1 a2 a3 a4 a5 a6 a7"),),
    )
    # substitute later cycles first: their defining words only use earlier ones
    for pd in reversed(data.pairs):
        pres = eliminate_generator(pres, eps(*pd.pair), pd.image_raw)
    pres = eliminate_generator(pres, alpha(0), ~W("a1 a2 a3 a4 a5 a6 a7"))
    target = complement_presentation_inclusion(maclane_wd, "framed", LabelRule.BOTTOM_CONJ)
    assert len(pres.generators) == 7
    assert pres.relator_count() == 13
    assert families_eq(pres, target)


def test_elimination_drops_rank_by_one(maclane_wd):
    pres = complement_presentation_inclusion(maclane_wd, "framed", rule=LabelRule.BOTTOM_CONJ)
    with_inf = Presentation(
        (alpha(0),) + pres.generators, pres.families,
        pres.relators + (W("a0 a1 a2 a3 a4 a5 a6 a7"),),
    )
    before = abelianization(with_inf)
    after = abelianization(eliminate_generator(with_inf, alpha(0), ~W("a1 a2 a3 a4 a5 a6 a7")))
    assert before.rank == after.rank == 7


def test_canonical_eq():
    assert canonical_eq(W("a4^a3"), W("a3^-1 a4 a3"))
    assert not canonical_eq(W("a4^a3"), W("a4^(a3^-1)"))
    rng = random.Random(2)
    gens = [alpha(1), alpha(2)]
    for _ in range(30):
        w = Word([(rng.choice(gens), rng.choice((1, -1))) for _ in range(6)])
        from arrpi.words import parse_word

        assert canonical_eq(parse_word(str(w)), w)


def test_presentation_eq_family_vs_expanded():
    fam = Presentation((alpha(1), alpha(2)), ((W("a1"), W("a2")),))
    flat = Presentation((alpha(1), alpha(2)), relators=(W("a1 a2 a1^-1 a2^-1"),))
    assert presentation_eq(fam, flat)
    assert not families_eq(fam, flat)


def test_arvola_and_inclusion_presentations_differ_syntactically(didactic_wd):
    a = complement_presentation_arvola(didactic_wd)
    b = complement_presentation_inclusion(didactic_wd, "framed")
    assert not presentation_eq(a, b)
    assert abelianization(a) == abelianization(b)
