"""Word-level combinatorics: commutation classes, reducedness, containment."""

import random

import pytest

from blobcat import words
from blobcat.words import (
    ClassSizeError,
    affine_length,
    braid_order,
    canonical_word,
    commutation_class,
    commutes,
    contains_pattern,
    format_word,
    is_reduced_fc,
    parse_word,
    same_element,
)


# ---------------------------------------------------------------------------
# independent oracle: exhaustive closure under commutation AND braid rewrites


def all_reduced_expressions(n, word):
    seen = {tuple(word)}
    stack = [tuple(word)]
    while stack:
        current = stack.pop()
        for p in range(len(current) - 1):
            a, b = current[p], current[p + 1]
            if a == b:
                continue
            order = braid_order(n, a, b)
            if order == 2:
                nxt = current[:p] + (b, a) + current[p + 2 :]
            elif order == 3 and current[p : p + 3] == (a, b, a):
                nxt = current[:p] + (b, a, b) + current[p + 3 :]
            elif order == 4 and current[p : p + 4] == (a, b, a, b):
                nxt = current[:p] + (b, a, b, a) + current[p + 4 :]
            else:
                continue
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return seen


def oracle_contains(n, word, pattern):
    patterns = all_reduced_expressions(n, pattern)
    k = len(pattern)
    if k == 0:
        return True
    for member in all_reduced_expressions(n, word):
        for p in range(len(member) - k + 1):
            if member[p : p + k] in patterns:
                return True
    return False


def random_words(seed, count, max_n=4, max_len=12):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(1, max_n)
        length = rng.randint(0, max_len)
        out.append((n, tuple(rng.randint(0, n) for _ in range(length))))
    return out


# ---------------------------------------------------------------------------
# stated examples


@pytest.mark.parametrize(
    "n,i,j,expected",
    [(4, 0, 2, True), (4, 2, 3, False), (1, 0, 1, False)],
)
def test_commutes(n, i, j, expected):
    assert commutes(n, i, j) is expected


@pytest.mark.parametrize(
    "n,i,j,expected",
    [(5, 0, 1, 4), (5, 2, 3, 3), (5, 1, 4, 2), (5, 4, 5, 4), (1, 0, 1, 4)],
)
def test_braid_order(n, i, j, expected):
    assert braid_order(n, i, j) == expected


def test_braid_order_rejects_equal_indices():
    with pytest.raises(ValueError):
        braid_order(3, 2, 2)


def test_commutation_class_examples():
    assert commutation_class(3, (0, 2)) == {(0, 2), (2, 0)}
    assert commutation_class(2, ()) == {()}
    assert commutation_class(4, (1, 3, 2)) == {(1, 3, 2), (3, 1, 2)}


def test_commutation_class_cap():
    with pytest.raises(ClassSizeError):
        commutation_class(8, (0, 2, 4, 6, 8, 0, 2, 4, 6, 8), cap=10)


@pytest.mark.parametrize(
    "n,word,expected",
    [
        (2, (1, 0, 1), True),
        (2, (1, 0, 1, 0), False),
        (4, (2, 2), False),
        (3, (1, 2, 1), False),
        (2, (1, 2, 1), True),
        (2, (0, 1, 0, 1, 0), False),
    ],
)
def test_is_reduced_fc(n, word, expected):
    assert is_reduced_fc(n, word) is expected


def test_canonical_word_examples():
    assert canonical_word(4, (3, 1, 2)) == (1, 3, 2)
    assert canonical_word(2, ()) == ()
    assert canonical_word(3, (0, 2, 1)) == (0, 2, 1)


def test_canonical_word_matches_class_minimum():
    for n, word in random_words(seed=11, count=150, max_n=4, max_len=9):
        assert canonical_word(n, word) == min(commutation_class(n, word))


def test_same_element_matches_class_membership():
    rng = random.Random(13)
    for n, word in random_words(seed=17, count=120, max_n=4, max_len=8):
        cls = commutation_class(n, word)
        member = rng.choice(sorted(cls))
        assert same_element(n, word, member)
        other = tuple(reversed(word))
        assert same_element(n, word, other) == (other in cls)


def test_contains_pattern_examples():
    assert contains_pattern(2, (1, 0, 1, 2), (1, 0, 1)) is True
    assert contains_pattern(2, (), (0,)) is False
    assert contains_pattern(3, (0, 1, 2), ()) is True
    # the grid of (2,1) sits inside the grid of this word, and the word also
    # contains (2,1): its member (1,0,2,1,3,2) shows the factor directly
    assert contains_pattern(4, (1, 2, 3, 0, 1, 2), (2, 1)) is True
    assert same_element(4, (1, 2, 3, 0, 1, 2), (1, 0, 2, 1, 3, 2))


def test_contains_pattern_reflexive():
    for n, word in random_words(seed=23, count=80, max_n=4, max_len=10):
        if is_reduced_fc(n, word):
            assert contains_pattern(n, word, word)


def test_contains_pattern_agrees_with_exhaustive_oracle():
    pattern_pool = [(1, 0, 1), (2, 1), (1, 2), (0, 1, 0), (1, 2, 1), (0, 2)]
    checked = 0
    for n, word in random_words(seed=29, count=400, max_n=4, max_len=12):
        if not is_reduced_fc(n, word):
            continue
        for pattern in pattern_pool:
            if not pattern or max(pattern) > n:
                continue
            if not is_reduced_fc(n, pattern):
                continue
            assert contains_pattern(n, word, pattern) == oracle_contains(
                n, word, pattern
            ), (n, word, pattern)
            checked += 1
    assert checked > 300


def test_class_invariance():
    for n, word in random_words(seed=31, count=60, max_n=4, max_len=8):
        reduced = is_reduced_fc(n, word)
        canon = canonical_word(n, word)
        length = affine_length(n, word)
        for member in commutation_class(n, word):
            assert is_reduced_fc(n, member) == reduced
            assert canonical_word(n, member) == canon
            assert affine_length(n, member) == length


@pytest.mark.parametrize(
    "n,word,expected",
    [(2, (0, 1), 0), (2, (1, 2, 0, 1, 2), 2), (3, (), 0)],
)
def test_affine_length(n, word, expected):
    assert affine_length(n, word) == expected


def test_word_text_encoding():
    assert parse_word("1,0,1") == (1, 0, 1)
    assert parse_word("") == ()
    assert format_word((1, 0, 1)) == "1,0,1"
    assert format_word(()) == ""
    with pytest.raises(ValueError):
        parse_word("1,x")


def test_letters_validated():
    with pytest.raises(ValueError):
        words.check_word(2, (3,))
    with pytest.raises(ValueError):
        words.check_rank(0)
