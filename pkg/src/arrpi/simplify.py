"""Presentation post-processing: generator elimination, abelianization,
canonical comparison.

Only substitution-style moves are offered; no search for shorter
presentations is attempted, since the pipeline's outputs are already minimal
and aggressive rewriting would destroy exact comparisons.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import gcd
from typing import List, Sequence, Tuple

from .errors import DomainError
from .words import Gen, GroupMap, Presentation, Word


def eliminate_generator(p: Presentation, g: Gen, defining: Word) -> Presentation:
    """Remove g, replacing every occurrence by `defining` (a word without g)."""
    if g in defining.generators():
        raise DomainError("defining word must not contain the eliminated generator")
    if g not in p.generators:
        raise DomainError("generator not in the presentation")
    images = {h: Word.gen(h) for h in p.generators if h != g}
    images[g] = defining
    m = GroupMap(images)
    families = tuple(tuple(m(w) for w in fam) for fam in p.families)
    relators = tuple(w for w in (m(r) for r in p.relators) if w)
    gens = tuple(h for h in p.generators if h != g)
    return Presentation(gens, families, relators)


# -- integer normal form -------------------------------------------------------


def smith_normal_form(rows: Sequence[Sequence[int]]) -> List[int]:
    """Divisor chain d_1 | d_2 | ... of an integer matrix (nonzero entries only)."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return []
    nr, nc = len(m), len(m[0])
    divisors: List[int] = []
    top = 0

    def find_pivot() -> Tuple[int, int]:
        best = None
        for i in range(top, nr):
            for j in range(top, nc):
                if m[i][j] != 0 and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        return best

    while top < min(nr, nc):
        piv = find_pivot()
        if piv is None:
            break
        i0, j0 = piv
        m[top], m[i0] = m[i0], m[top]
        for row in m:
            row[top], row[j0] = row[j0], row[top]
        while True:
            # clear the pivot column
            again = False
            for i in range(top + 1, nr):
                if m[i][top]:
                    q = m[i][top] // m[top][top]
                    for j in range(top, nc):
                        m[i][j] -= q * m[top][j]
                    if m[i][top]:
                        m[top], m[i] = m[i], m[top]
                        again = True
            if again:
                continue
            # clear the pivot row
            for j in range(top + 1, nc):
                if m[top][j]:
                    q = m[top][j] // m[top][top]
                    for i in range(top, nr):
                        m[i][j] -= q * m[i][top]
                    if m[top][j]:
                        for row in m:
                            row[top], row[j] = row[j], row[top]
                        again = True
            if again:
                continue
            # pivot must divide every remaining entry
            fixed = True
            for i in range(top + 1, nr):
                for j in range(top + 1, nc):
                    if m[i][j] % m[top][top]:
                        for jj in range(top, nc):
                            m[top][jj] += m[i][jj]
                        fixed = False
                        break
                if not fixed:
                    break
            if fixed:
                break
        divisors.append(abs(m[top][top]))
        top += 1

    # enforce the divisibility chain
    for i in range(len(divisors)):
        for j in range(i + 1, len(divisors)):
            a, b = divisors[i], divisors[j]
            g = gcd(a, b)
            divisors[i], divisors[j] = g, a * b // g
    return divisors


@dataclass(frozen=True)
class AbelianInvariants:
    rank: int
    torsion: Tuple[int, ...]

    def __post_init__(self):
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise DomainError("torsion coefficients must form a divisor chain")

    def is_free(self) -> bool:
        return not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


def abelianization(p: Presentation) -> AbelianInvariants:
    """Invariants of the presented group made abelian: integer normal form of
    the relators' exponent-sum matrix."""
    gens = list(p.generators)
    rows = [[w.exponent_sum(g) for g in gens] for w in p.expanded()]
    divisors = smith_normal_form(rows)
    nonzero = [d for d in divisors if d != 0]
    rank = len(gens) - len(nonzero)
    torsion = tuple(d for d in nonzero if d > 1)
    return AbelianInvariants(rank, torsion)


# -- canonical comparison --------------------------------------------------------


def canonical_eq(w1: Word, w2: Word) -> bool:
    return w1.letters == w2.letters


def presentation_eq(p1: Presentation, p2: Presentation) -> bool:
    """Same generator list, same multiset of expanded reduced relators."""
    if p1.generators != p2.generators:
        return False
    return Counter(w.letters for w in p1.expanded()) == Counter(
        w.letters for w in p2.expanded()
    )


def families_eq(p1: Presentation, p2: Presentation) -> bool:
    """Verbatim comparison at the family level (multisets of factor tuples)."""
    if p1.generators != p2.generators:
        return False
    key1 = Counter(tuple(w.letters for w in fam) for fam in p1.families)
    key2 = Counter(tuple(w.letters for w in fam) for fam in p2.families)
    return key1 == key2 and Counter(w.letters for w in p1.relators) == Counter(
        w.letters for w in p2.relators
    )
