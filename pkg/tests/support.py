"""Shared builders and fixture presentations for the test suite."""

import itertools

from stephen_kit import Presentation, Word


def pos(text: str) -> Word:
    """Positive word from single-character letters."""
    return Word(tuple((ch, 1) for ch in text))


def w(text: str) -> Word:
    """Signed word from single-character letters; '^' inverts, spaces ignored."""
    letters = []
    for ch in text:
        if ch == "^":
            letters[-1] = (letters[-1][0], -1)
        elif ch == " ":
            continue
        else:
            letters.append((ch, 1))
    return Word(tuple(letters))


COMM = Presentation(("a", "b"), ((pos("ab"), pos("ba")),))
CASE1 = Presentation(("a", "b", "c"), ((pos("aba"), pos("c")),))
CASE2 = Presentation(("a", "b", "c"), ((pos("aab"), pos("bcc")),))
FACT1 = Presentation(("a", "b", "c", "d"), ((pos("ab"), pos("cd")),))
SUBWORD = Presentation(("a", "b"), ((pos("aba"), pos("b")),))
FREE2 = Presentation(("a", "b"), ())


def random_positive_word(rng, alphabet: str, max_len: int, min_len: int = 1) -> Word:
    n = rng.randint(min_len, max_len)
    return Word(tuple((rng.choice(alphabet), 1) for _ in range(n)))


def random_signed_word(rng, alphabet: str, max_len: int, min_len: int = 0) -> Word:
    n = rng.randint(min_len, max_len)
    return Word(tuple((rng.choice(alphabet), rng.choice((1, -1))) for _ in range(n)))


def all_signed_words(alphabet: str, max_len: int):
    signed = [(x, s) for x in alphabet for s in (1, -1)]
    for n in range(max_len + 1):
        for combo in itertools.product(signed, repeat=n):
            yield Word(combo)


def all_positive_words(alphabet: str, max_len: int, min_len: int = 1):
    for n in range(min_len, max_len + 1):
        for combo in itertools.product(alphabet, repeat=n):
            yield Word(tuple((x, 1) for x in combo))
