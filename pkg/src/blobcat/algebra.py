"""
Rewriting kernel for the three quotient levels of the affine-C
Temperley-Lieb tower: the full diagram algebra, the two-boundary quotient,
and the symplectic blob quotient.

Scalars are sparse polynomials with integer coefficients in six independent
parameters d, dL, dR, kL, kR, k (loop weights of the interior and the two
boundaries, the two boundary-braid weights, and the global blob weight).  A
product of generators rewrites to a single parameter monomial times a
canonical basis word; the rules all strictly shorten the word, and a redex
is searched across the whole commutation class, so termination is by length
and the surviving word is reduced and fully commutative.

At rank 1 the two boundary pairs coincide; overlapping rules are resolved by
fixed priority (blob rules first, then the left boundary), which keeps the
kernel deterministic there.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from functools import lru_cache
from itertools import product

from . import enumeration
from .grids import i_generators, is_blobbed, j_generators, oblique_bar_word, oblique_tilde_word
from .normal_forms import (
    bar,
    block_word,
    is_left_positive,
    is_positive,
    normal_form_of_word,
    positive_blocks_of,
    tilde,
    word_of_normal_form,
)
from .words import Letters, canonical_word, check_rank, check_word, iter_commutation_class

PARAMS = ("d", "dL", "dR", "kL", "kR", "k")
_PARAM_INDEX = {name: i for i, name in enumerate(PARAMS)}
_ZERO_EXP = (0,) * len(PARAMS)

Exponents = tuple[int, ...]


class Scalar:
    """Sparse integer polynomial in the six parameters; canonical, no zeros."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Exponents, int] | None = None):
        self.terms: dict[Exponents, int] = {
            e: c for e, c in (terms or {}).items() if c != 0
        }

    @classmethod
    def zero(cls) -> "Scalar":
        return cls()

    @classmethod
    def one(cls) -> "Scalar":
        return cls({_ZERO_EXP: 1})

    @classmethod
    def integer(cls, value: int) -> "Scalar":
        return cls({_ZERO_EXP: value})

    @classmethod
    def param(cls, name: str) -> "Scalar":
        exp = [0] * len(PARAMS)
        exp[_PARAM_INDEX[name]] = 1
        return cls({tuple(exp): 1})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Scalar) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "Scalar") -> "Scalar":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Scalar(out)

    def __neg__(self) -> "Scalar":
        return Scalar({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Scalar") -> "Scalar":
        return self + (-other)

    def __mul__(self, other: "Scalar") -> "Scalar":
        out: dict[Exponents, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Scalar(out)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def substitute(self, mapping: dict[str, str]) -> "Scalar":
        """Rename parameters (e.g. collapse dL into dR); exponents merge."""
        out: dict[Exponents, int] = {}
        for exps, coeff in self.terms.items():
            new = [0] * len(PARAMS)
            for name, e in zip(PARAMS, exps):
                new[_PARAM_INDEX[mapping.get(name, name)]] += e
            key = tuple(new)
            out[key] = out.get(key, 0) + coeff
        return Scalar(out)

    @staticmethod
    def _term_str(exps: Exponents, coeff: int) -> str:
        factors = []
        for name, e in zip(PARAMS, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if not factors:
            return str(coeff)
        body = "*".join(factors)
        if coeff == 1:
            return body
        if coeff == -1:
            return f"-{body}"
        return f"{coeff}*{body}"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(self._term_str(e, c) for e, c in sorted(self.terms.items()))

    def __repr__(self) -> str:
        return f"Scalar({self})"


D = Scalar.param("d")
DL = Scalar.param("dL")
DR = Scalar.param("dR")
KL = Scalar.param("kL")
KR = Scalar.param("kR")
K = Scalar.param("k")


class AlgebraLevel(IntEnum):
    TL = 0
    TWO_BOUNDARY = 1
    SYMPLECTIC_BLOB = 2

    @classmethod
    def parse(cls, text: str) -> "AlgebraLevel":
        try:
            return {"tl": cls.TL, "2btl": cls.TWO_BOUNDARY, "sb": cls.SYMPLECTIC_BLOB}[
                text.lower()
            ]
        except KeyError:
            raise ValueError(f"unknown level {text!r}; expected tl, 2btl, or sb")


@dataclass(frozen=True)
class Rule:
    pattern: Letters
    replacement: Letters
    scalar: Scalar


def _square_scalar(n: int, i: int) -> Scalar:
    if i == 0:
        return DL
    if i == n:
        return DR
    return D


@lru_cache(maxsize=None)
def rewrite_rules(level: AlgebraLevel, n: int) -> tuple[Rule, ...]:
    """
    The rule list in priority order; identical patterns introduced by lower
    levels are shadowed (this is what keeps rank 1, where the two boundary
    pairs coincide, deterministic).
    """
    check_rank(n)
    rules: list[Rule] = []
    seen: set[Letters] = set()

    def add(pattern: Letters, replacement: Letters, scalar: Scalar) -> None:
        if pattern not in seen:
            seen.add(pattern)
            rules.append(Rule(pattern, replacement, scalar))

    if level >= AlgebraLevel.SYMPLECTIC_BLOB:
        iw = tuple(sorted(i_generators(n)))
        jw = tuple(sorted(j_generators(n)))
        add(iw + jw + iw, iw, K)
        add(jw + iw + jw, jw, K)
    if level >= AlgebraLevel.TWO_BOUNDARY:
        add((1, 0, 1), (1,), KL)
        add((n - 1, n, n - 1), (n - 1,), KR)
    for i in range(n + 1):
        add((i, i), (i,), _square_scalar(n, i))
    for i in range(1, n - 1):
        add((i, i + 1, i), (i,), Scalar.one())
        add((i + 1, i, i + 1), (i + 1,), Scalar.one())
    add((0, 1, 0, 1), (0, 1), KL)
    add((1, 0, 1, 0), (1, 0), KL)
    add((n - 1, n, n - 1, n), (n - 1, n), KR)
    add((n, n - 1, n, n - 1), (n, n - 1), KR)
    return tuple(rules)


def _find_redex(
    level: AlgebraLevel, n: int, word: Letters, strategy: str
) -> tuple[Letters, int, Rule] | None:
    """
    First redex in class-BFS order from `word`: the earliest visited member
    containing any rule pattern, with the position chosen by the strategy
    and ties between rules at one position broken by priority.
    """
    rules = rewrite_rules(level, n)
    for member in iter_commutation_class(n, word):
        positions = range(len(member))
        if strategy == "rightmost":
            positions = reversed(positions)
        for pos in positions:
            for rule in rules:
                if member[pos : pos + len(rule.pattern)] == rule.pattern:
                    return member, pos, rule
    return None


@lru_cache(maxsize=None)
def _reduce_canonical(
    level: AlgebraLevel, n: int, word: Letters, strategy: str
) -> tuple[Scalar, Letters]:
    hit = _find_redex(level, n, word, strategy)
    if hit is None:
        return Scalar.one(), word
    member, pos, rule = hit
    shorter = member[:pos] + rule.replacement + member[pos + len(rule.pattern) :]
    assert len(shorter) < len(member), "rules must strictly shorten"
    scalar, final = _reduce_canonical(level, n, canonical_word(n, shorter), strategy)
    return rule.scalar * scalar, final


def reduce_word(
    level: AlgebraLevel, n: int, word: Letters, strategy: str = "leftmost"
) -> tuple[Scalar, Letters]:
    """
    Rewrite a product of generators to (parameter monomial, canonical basis
    word) under the level's relations.  Total on arbitrary words.
    """
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    word = check_word(n, word)
    return _reduce_canonical(level, n, canonical_word(n, word), strategy)


# ---------------------------------------------------------------------------
# basis elements and their products


def in_index_set(level: AlgebraLevel, n: int, word: Letters) -> bool:
    """Does the (reduced, FC) word index a basis monomial at this level?"""
    try:
        nf = normal_form_of_word(n, word)
    except ValueError:
        return False
    if level == AlgebraLevel.TL:
        return True
    if not is_positive(n, nf):
        return False
    if level == AlgebraLevel.TWO_BOUNDARY:
        return True
    return is_blobbed(n, positive_blocks_of(n, nf))


@dataclass(frozen=True)
class BasisElement:
    level: AlgebraLevel
    n: int
    word: Letters

    def __post_init__(self) -> None:
        object.__setattr__(self, "word", canonical_word(self.n, self.word))
        if not in_index_set(self.level, self.n, self.word):
            raise ValueError(
                f"{self.word} does not index a basis monomial at level {self.level.name}"
            )


def multiply(x: BasisElement, y: BasisElement) -> tuple[Scalar, BasisElement]:
    if x.level != y.level or x.n != y.n:
        raise ValueError("can only multiply basis elements of one algebra")
    scalar, word = reduce_word(x.level, x.n, x.word + y.word)
    return scalar, BasisElement(x.level, x.n, word)


class AlgebraElement:
    """A finite linear combination of basis monomials of one level."""

    __slots__ = ("level", "n", "terms")

    def __init__(
        self, level: AlgebraLevel, n: int, terms: dict[BasisElement, Scalar] | None = None
    ):
        self.level = level
        self.n = check_rank(n)
        self.terms: dict[BasisElement, Scalar] = {}
        for basis, coeff in (terms or {}).items():
            if basis.level != level or basis.n != n:
                raise ValueError("mixed levels or ranks in one element")
            if coeff:
                self.terms[basis] = coeff

    @classmethod
    def from_word(cls, level: AlgebraLevel, n: int, word: Letters) -> "AlgebraElement":
        scalar, basis_word = reduce_word(level, n, word)
        return cls(level, n, {BasisElement(level, n, basis_word): scalar})

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if (self.level, self.n) != (other.level, other.n):
            raise ValueError("can only add elements of one algebra")
        out = dict(self.terms)
        for basis, coeff in other.terms.items():
            out[basis] = out.get(basis, Scalar.zero()) + coeff
        return AlgebraElement(self.level, self.n, out)

    def scaled(self, scalar: Scalar) -> "AlgebraElement":
        return AlgebraElement(
            self.level, self.n, {b: scalar * c for b, c in self.terms.items()}
        )

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        if (self.level, self.n) != (other.level, other.n):
            raise ValueError("can only multiply elements of one algebra")
        out = AlgebraElement(self.level, self.n)
        for (bx, cx), (by, cy) in product(self.terms.items(), other.terms.items()):
            scalar, bz = multiply(bx, by)
            out = out + AlgebraElement(self.level, self.n, {bz: cx * cy * scalar})
        return out

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, AlgebraElement)
            and (self.level, self.n) == (other.level, other.n)
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        if not self.terms:
            return "AlgebraElement(0)"
        body = " + ".join(
            f"({coeff})*b[{','.join(map(str, basis.word))}]"
            for basis, coeff in sorted(self.terms.items(), key=lambda kv: kv[0].word)
        )
        return f"AlgebraElement({body})"


# ---------------------------------------------------------------------------
# quotient identities


def quotient_image_check(
    level_from: AlgebraLevel, level_to: AlgebraLevel, n: int, word: Letters
) -> bool:
    """
    Check that a basis monomial of `level_from` that leaves the index set of
    `level_to` reduces there to the predicted multiple of its shortening
    image (bar for a failed left boundary or a lost alternation, tilde for a
    failed right boundary or a lost even-ended alternation).
    """
    word = check_word(n, word)
    if not in_index_set(level_from, n, word):
        raise ValueError(f"{word} is not a basis word at level {level_from.name}")
    if in_index_set(level_to, n, word):
        raise ValueError(f"{word} stays a basis word at level {level_to.name}")
    if (level_from, level_to) == (AlgebraLevel.TL, AlgebraLevel.TWO_BOUNDARY):
        nf = normal_form_of_word(n, word)
        if not is_left_positive(n, nf):
            image, needs_kr = bar(n, nf)
            factor = KL * KR if needs_kr else KL
        else:
            image = tilde(n, nf)
            factor = KR
        image_word = word_of_normal_form(n, image)
    elif (level_from, level_to) == (
        AlgebraLevel.TWO_BOUNDARY,
        AlgebraLevel.SYMPLECTIC_BLOB,
    ):
        nf = normal_form_of_word(n, word)
        blocks = positive_blocks_of(n, nf)
        try:
            image_word = oblique_bar_word(n, blocks)
        except ValueError:
            image_word = oblique_tilde_word(n, blocks)
        factor = K
    else:
        raise ValueError("supported steps: TL->TWO_BOUNDARY, TWO_BOUNDARY->SYMPLECTIC_BLOB")
    lhs_scalar, lhs_word = reduce_word(level_to, n, word)
    rhs_scalar, rhs_word = reduce_word(level_to, n, image_word)
    return lhs_word == rhs_word and lhs_scalar == factor * rhs_scalar


# ---------------------------------------------------------------------------
# the blob basis and its multiplication table


@lru_cache(maxsize=None)
def sb_basis(n: int) -> tuple[Letters, ...]:
    """Canonical words of all blobbed elements, sorted; its size is the
    dimension of the blob quotient."""
    check_rank(n)
    words = set()
    for s in range(n + 1):
        for blocks in enumeration.iter_positive_blocks(n, s):
            if is_blobbed(n, blocks):
                words.add(canonical_word(n, block_word(blocks)))
    return tuple(sorted(words))


def structure_constants(
    n: int, max_rank: int = 3
) -> dict[tuple[Letters, Letters], tuple[Scalar, Letters]]:
    """
    Full multiplication table of the blob-quotient basis.  Every target must
    land back in the basis; a miss raises, because it would disprove closure.
    """
    if n > max_rank:
        raise ValueError(f"structure constants budget exceeded: n={n} > {max_rank}")
    basis = sb_basis(n)
    index = set(basis)
    table: dict[tuple[Letters, Letters], tuple[Scalar, Letters]] = {}
    for xw, yw in product(basis, repeat=2):
        scalar, zw = reduce_word(AlgebraLevel.SYMPLECTIC_BLOB, n, xw + yw)
        if zw not in index:
            raise AssertionError(f"product {xw} * {yw} left the blob basis: {zw}")
        table[(xw, yw)] = (scalar, zw)
    return table


def structure_constants_records(n: int, max_rank: int = 3) -> list[dict[str, str]]:
    """The table as JSON-ready records {x, y, scalar, z} (word text encoding)."""
    from .words import format_word

    return [
        {
            "x": format_word(xw),
            "y": format_word(yw),
            "scalar": str(scalar),
            "z": format_word(zw),
        }
        for (xw, yw), (scalar, zw) in sorted(structure_constants(n, max_rank).items())
    ]
