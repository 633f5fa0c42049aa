"""Free-group words over meridian and cycle generators.

Generators come in two kinds: ``a(i)`` is the meridian of line i, and
``e(s, t)`` is the cycle generator attached to the line pair (s, t).  A word
is a freely reduced sequence of signed generators; the canonical comparison
form is that reduced letter sequence, never a pretty-printed string.

The notation ``w ** v`` for words v is conjugation v^-1 * w * v, matching
the usual a^b convention for group elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

from .errors import DomainError, InputError

# A generator is ('a', i) or ('e', s, t); a letter is (gen, +1 | -1).
Gen = Tuple
Letter = Tuple[Gen, int]


def alpha(i: int) -> Gen:
    return ("a", i)


def eps(s: int, t: int) -> Gen:
    return ("e", s, t)


def gen_str(g: Gen) -> str:
    if g[0] == "a":
        return f"a{g[1]}"
    return f"e{g[1]},{g[2]}"


def _reduce(letters: Iterable[Letter]) -> Tuple[Letter, ...]:
    out: List[Letter] = []
    for g, e in letters:
        if e not in (1, -1):
            raise DomainError(f"letter exponent must be +-1, got {e}")
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


class Word:
    """An immutable, freely reduced word."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Letter] = ()):
        object.__setattr__(self, "letters", _reduce(letters))

    # -- constructors -----------------------------------------------------

    @staticmethod
    def gen(g: Gen, e: int = 1) -> "Word":
        return Word(((g, e),))

    @staticmethod
    def identity() -> "Word":
        return Word()

    # -- group operations ---------------------------------------------------

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __invert__(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.letters)))

    def __pow__(self, other) -> "Word":
        if isinstance(other, int):
            if other == 0:
                return Word()
            base = self if other > 0 else ~self
            return Word(base.letters * abs(other))
        if isinstance(other, Word):
            return ~other * self * other
        return NotImplemented

    def conj(self, by: "Word") -> "Word":
        """by^-1 * self * by."""
        return ~by * self * by

    # -- queries ----------------------------------------------------------

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def generators(self) -> set:
        return {g for g, _ in self.letters}

    def exponent_sum(self, g: Gen) -> int:
        return sum(e for h, e in self.letters if h == g)

    def __repr__(self) -> str:
        return f"Word({self})"

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        parts = []
        for g, e in self.letters:
            parts.append(gen_str(g) + ("" if e == 1 else "^-1"))
        return " ".join(parts)

    def pretty(self) -> str:
        """Fold symmetric conjugation: u^-1 g u prints as g^(u).

        Cosmetic only; canonical comparison always uses the letter sequence.
        """
        letters = list(self.letters)
        conj: List[Letter] = []
        while len(letters) > 2 and letters[0][0] == letters[-1][0] and letters[0][1] == -letters[-1][1]:
            conj.insert(0, letters.pop())
            letters.pop(0)
        if not conj:
            return str(self)
        core = Word(letters)
        by = Word(conj)
        core_s = str(core) if len(core) == 1 else f"({core})"
        by_s = str(by) if len(by) == 1 and by.letters[0][1] == 1 else f"({by})"
        return f"{core_s}^{by_s}"


def reduce_word(w: Word) -> Word:
    """Identity on Word (construction already reduces); kept as the named op."""
    return Word(w.letters)


def concat(ws: Sequence[Word]) -> Word:
    out: List[Letter] = []
    for w in ws:
        out.extend(w.letters)
    return Word(out)


def conjugate(w: Word, by: Word) -> Word:
    return w.conj(by)


def invert(w: Word) -> Word:
    return ~w


def expand_relator_family(factors: Sequence[Word]) -> List[Word]:
    """Relators expressing the equality of all cyclic permutations.

    [w1, ..., wm] stands for w1...wm = w2...wm w1 = ... ; each adjacent
    equality contributes one relator, m-1 in total.
    """
    m = len(factors)
    if m < 2:
        raise DomainError("a cyclic relator family needs at least 2 factors")
    rotations = [concat(tuple(factors[k:]) + tuple(factors[:k])) for k in range(m)]
    return [rotations[k] * ~rotations[k + 1] for k in range(m - 1)]


@dataclass(frozen=True)
class GroupMap:
    """A homomorphism given on generators; generators absent from ``images``
    are not in the domain and raising on them catches wiring mistakes."""

    images: Dict[Gen, Word]

    def __call__(self, w: Word) -> Word:
        out: List[Letter] = []
        for g, e in w.letters:
            try:
                img = self.images[g]
            except KeyError:
                raise DomainError(f"generator {gen_str(g)} not in the map's domain") from None
            out.extend(img.letters if e == 1 else (~img).letters)
        return Word(out)

    @staticmethod
    def identity_on(gens: Iterable[Gen]) -> "GroupMap":
        return GroupMap({g: Word.gen(g) for g in gens})

    def updated(self, more: Dict[Gen, Word]) -> "GroupMap":
        images = dict(self.images)
        images.update(more)
        return GroupMap(images)


def apply_map(m: GroupMap, w: Word) -> Word:
    return m(w)


@dataclass(frozen=True)
class Presentation:
    """A finite presentation with its relators kept as cyclic families.

    ``families`` hold the multi-factor cyclic relator families; ``relators``
    hold any extra plain relator words (such as a product-of-meridians
    relation).  ``expanded()`` flattens everything to honest relators.
    """

    generators: Tuple[Gen, ...]
    families: Tuple[Tuple[Word, ...], ...] = ()
    relators: Tuple[Word, ...] = ()

    def __post_init__(self):
        gens = set(self.generators)
        for w in self.all_words():
            missing = w.generators() - gens
            if missing:
                names = ", ".join(sorted(gen_str(g) for g in missing))
                raise DomainError(f"relator uses generators not listed: {names}")

    def all_words(self) -> List[Word]:
        out = [w for fam in self.families for w in fam]
        out.extend(self.relators)
        return out

    def expanded(self) -> List[Word]:
        """All relators, freely reduced, trivial ones dropped."""
        out: List[Word] = []
        for fam in self.families:
            out.extend(expand_relator_family(fam))
        out.extend(self.relators)
        return [w for w in out if w]

    def relator_count(self) -> int:
        return len(self.expanded())

    def describe(self) -> str:
        gens = ", ".join(gen_str(g) for g in self.generators)
        fams = ", ".join(
            "[" + ", ".join(str(w) for w in fam) + "]" for fam in self.families
        )
        rels = ", ".join(str(r) for r in self.relators)
        body = "; ".join(x for x in (fams, rels) if x)
        return f"< {gens} | {body} >"


# ---------------------------------------------------------------------------
# Word expression parser.
#
# Grammar (whitespace ignored):
#   word   := factor+
#   factor := atom suffix*
#   atom   := gen | '(' word ')'
#   suffix := '^' signed_int | '^' atom          (power / conjugation)
#   gen    := 'a' INT | 'e' INT ',' INT
# ---------------------------------------------------------------------------


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> str:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        c = self.peek()
        self.pos += 1
        return c

    def int_(self) -> int:
        self.peek()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] == "-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start or self.text[start:self.pos] == "-":
            raise InputError(f"expected integer at position {start} in {self.text!r}")
        return int(self.text[start:self.pos])


def _parse_atom(toks: _Tokens) -> Word:
    c = toks.peek()
    if c == "1":
        toks.take()
        return Word()
    if c == "(":
        toks.take()
        w = _parse_word(toks)
        if toks.take() != ")":
            raise InputError(f"unbalanced parenthesis in {toks.text!r}")
        return w
    if c == "a":
        toks.take()
        return Word.gen(alpha(toks.int_()))
    if c == "e":
        toks.take()
        s = toks.int_()
        if toks.take() != ",":
            raise InputError(f"expected ',' in cycle generator in {toks.text!r}")
        t = toks.int_()
        return Word.gen(eps(s, t))
    raise InputError(f"unexpected character {c!r} in word {toks.text!r}")


def _parse_factor(toks: _Tokens) -> Word:
    w = _parse_atom(toks)
    while toks.peek() == "^":
        toks.take()
        c = toks.peek()
        if c.isdigit() or c == "-":
            w = w ** toks.int_()
        else:
            w = w ** _parse_atom(toks)
    return w


def _parse_word(toks: _Tokens) -> Word:
    out = Word()
    while toks.peek() not in ("", ")"):
        out = out * _parse_factor(toks)
    return out


def parse_word(text: str) -> Word:
    """Parse expressions like ``a4^a3``, ``a4^(a3^-1) a2 e1,2^-1``."""
    toks = _Tokens(text)
    w = _parse_word(toks)
    if toks.peek():
        raise InputError(f"trailing input at position {toks.pos} in {text!r}")
    return w


def W(text: str) -> Word:
    """Shorthand used heavily in tests and fixtures."""
    return parse_word(text)
