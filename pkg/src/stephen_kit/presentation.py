"""Positive presentations of inverse semigroups.

Parsing and validation of presentation files, the left/right side graphs,
the Adian (cycle-free) property, overlap analysis of the two sides of a
one-relation presentation, and the finiteness certificate that the overlap
case determines.

File format (UTF-8, line oriented, ``#`` starts a comment)::

    X: a b          # alphabet, whitespace separated letters
    R: ab = ba      # one relation per line, both sides positive

Letters are maximal runs of non-space characters; ``=``, ``:`` and ``^``
are reserved.  Words are written either as concatenated single-letter
symbols (``ab``) or as space-separated multi-character letters.  Query
words (not relation sides) may invert a letter with a trailing ``^``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

Letter = str

RESERVED_CHARS = frozenset("=:^#")


class PresentationError(ValueError):
    """Malformed presentation or word text; carries the offending line."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


@dataclass(frozen=True)
class Word:
    """A word over X and the inverse letters, as (letter, sign) pairs.

    Signs are +1 or -1; a word is positive when every sign is +1.
    """

    letters: tuple[tuple[Letter, int], ...] = ()

    def __post_init__(self):
        for item in self.letters:
            if len(item) != 2 or not item[0] or item[1] not in (1, -1):
                raise ValueError(f"bad signed letter {item!r}")

    @property
    def is_positive(self) -> bool:
        return all(sign == 1 for _, sign in self.letters)

    def inverse(self) -> "Word":
        return Word(tuple((x, -s) for x, s in reversed(self.letters)))

    def symbols(self) -> tuple[Letter, ...]:
        return tuple(x for x, _ in self.letters)

    def __add__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        tokens = [x + ("^" if s < 0 else "") for x, s in self.letters]
        if all(len(x) == 1 for x, _ in self.letters):
            return "".join(tokens)
        return " ".join(tokens)


def parse_word(text: str, alphabet: Iterable[Letter], *, line: int | None = None) -> Word:
    """Parse a word against a declared alphabet.

    With embedded whitespace the text is split into letter tokens; without,
    every character is a single-letter symbol.  A trailing ``^`` on a token
    (or character) inverts that letter.
    """
    known = set(alphabet)
    text = text.strip()
    if not text:
        return Word()
    if any(ch.isspace() for ch in text):
        tokens = text.split()
    else:
        tokens = []
        for ch in text:
            if ch == "^":
                if not tokens:
                    raise PresentationError("'^' with no preceding letter", line)
                tokens[-1] += "^"
            else:
                tokens.append(ch)
    letters = []
    for token in tokens:
        sign = 1
        if token.endswith("^"):
            sign, token = -1, token[:-1]
        if not token or any(ch in RESERVED_CHARS for ch in token):
            raise PresentationError(f"malformed letter token {token!r}", line)
        if token not in known:
            raise PresentationError(f"undeclared letter {token!r}", line)
        letters.append((token, sign))
    return Word(tuple(letters))


@dataclass(frozen=True)
class Presentation:
    """A positive presentation: an alphabet and relations between positive words."""

    alphabet: tuple[Letter, ...]
    relations: tuple[tuple[Word, Word], ...] = ()

    def __post_init__(self):
        if not self.alphabet:
            raise ValueError("alphabet is empty")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("duplicate letters in alphabet")
        known = set(self.alphabet)
        for i, (lhs, rhs) in enumerate(self.relations):
            for side in (lhs, rhs):
                if len(side) == 0:
                    raise ValueError(f"relation {i}: empty side")
                if not side.is_positive:
                    raise ValueError(f"relation {i}: non-positive side '{side}'")
                for x, _ in side:
                    if x not in known:
                        raise ValueError(f"relation {i}: undeclared letter {x!r}")
            if lhs == rhs:
                raise ValueError(f"relation {i}: sides are identical")

    def check_word(self, w: Word) -> None:
        """Raise ValueError if w uses a letter outside the alphabet."""
        known = set(self.alphabet)
        for x, _ in w:
            if x not in known:
                raise ValueError(f"letter {x!r} is not in the alphabet")

    def __str__(self) -> str:
        rels = ", ".join(f"{u}={v}" for u, v in self.relations)
        return f"⟨{','.join(self.alphabet)} | {rels}⟩"


def parse_presentation(text: str) -> Presentation:
    """Parse presentation source text; see the module docstring for the format."""
    alphabet: tuple[Letter, ...] | None = None
    relations: list[tuple[Word, Word]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if alphabet is None:
            if not line.startswith("X:"):
                raise PresentationError("expected alphabet line 'X: ...'", lineno)
            letters = line[2:].split()
            if not letters:
                raise PresentationError("alphabet declares no letters", lineno)
            for letter in letters:
                if any(ch in RESERVED_CHARS for ch in letter):
                    raise PresentationError(f"letter {letter!r} uses a reserved character", lineno)
            if len(set(letters)) != len(letters):
                raise PresentationError("duplicate letter declaration", lineno)
            alphabet = tuple(letters)
            continue
        if not line.startswith("R:"):
            raise PresentationError("expected relation line 'R: <word> = <word>'", lineno)
        body = line[2:]
        if body.count("=") != 1:
            raise PresentationError("relation needs exactly one '='", lineno)
        left_text, right_text = body.split("=")
        lhs = parse_word(left_text, alphabet, line=lineno)
        rhs = parse_word(right_text, alphabet, line=lineno)
        for side in (lhs, rhs):
            if len(side) == 0:
                raise PresentationError("empty relation side", lineno)
            if not side.is_positive:
                raise PresentationError(f"non-positive relation side '{side}'", lineno)
        if lhs == rhs:
            raise PresentationError("relation sides are identical", lineno)
        relations.append((lhs, rhs))
    if alphabet is None:
        raise PresentationError("no alphabet line")
    return Presentation(alphabet, tuple(relations))


@dataclass(frozen=True)
class SideGraph:
    """Undirected multigraph on the alphabet with one edge per relation.

    Self-loops (both sides of a relation start, or end, with the same
    letter) are recorded like any other edge.
    """

    vertices: tuple[Letter, ...]
    edges: tuple[tuple[Letter, Letter], ...]


def side_graphs(p: Presentation) -> tuple[SideGraph, SideGraph]:
    """The left graph (joining first letters) and right graph (joining last letters)."""
    left = tuple((u.letters[0][0], v.letters[0][0]) for u, v in p.relations)
    right = tuple((u.letters[-1][0], v.letters[-1][0]) for u, v in p.relations)
    return SideGraph(p.alphabet, left), SideGraph(p.alphabet, right)


def _cycle_free(g: SideGraph) -> bool:
    # A multigraph is cycle-free iff every edge joins two previously
    # disconnected vertices; self-loops and parallel edges fail at once.
    parent = {x: x for x in g.vertices}

    def find(x: Letter) -> Letter:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in g.edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def is_adian(p: Presentation) -> bool:
    """True iff neither side graph contains a closed path.

    Closed paths include self-loops and parallel edges, so this is exactly
    the condition that both side graphs are simple forests.
    """
    left, right = side_graphs(p)
    return _cycle_free(left) and _cycle_free(right)


class OverlapCase(enum.Enum):
    NO_INTERACTION = "NoInteraction"
    CASE1 = "Case1"
    CASE2 = "Case2"
    CASE3 = "Case3"
    CASE4 = "Case4"
    SUBWORD = "Subword"


@dataclass(frozen=True)
class OverlapProfile:
    """Self-borders and cross overlaps of the two sides of a relation.

    ``u_border_len`` is the largest k > 0 with 2k <= |u| such that the
    length-k prefix and suffix of u coincide (so u factors as x s x); the
    bound excludes self-overlapping borders.  Cross overlaps are proper:
    k < min(|u|, |v|).
    """

    u_subword_of_v: bool
    v_subword_of_u: bool
    u_border_len: int
    v_border_len: int
    suffix_u_prefix_v_len: int
    suffix_v_prefix_u_len: int
    case_label: OverlapCase


def _occurrences(needle: tuple[Letter, ...], haystack: tuple[Letter, ...]) -> int:
    if not needle or len(needle) > len(haystack):
        return 0
    return sum(
        1
        for i in range(len(haystack) - len(needle) + 1)
        if haystack[i : i + len(needle)] == needle
    )


def _border_len(w: tuple[Letter, ...]) -> int:
    best = 0
    for k in range(1, len(w) // 2 + 1):
        if w[:k] == w[-k:]:
            best = k
    return best


def _cross_len(u: tuple[Letter, ...], v: tuple[Letter, ...]) -> int:
    """Largest proper k > 0 with suffix_k(u) = prefix_k(v), else 0."""
    best = 0
    for k in range(1, min(len(u), len(v))):
        if u[-k:] == v[:k]:
            best = k
    return best


def overlap_profile(u: Word, v: Word) -> OverlapProfile:
    """Exhaustive overlap analysis of two distinct non-empty positive words."""
    for w in (u, v):
        if len(w) == 0:
            raise ValueError("overlap analysis needs non-empty words")
        if not w.is_positive:
            raise ValueError(f"overlap analysis needs positive words, got '{w}'")
    if u == v:
        raise ValueError("overlap analysis needs two distinct words")
    us, vs = u.symbols(), v.symbols()
    u_in_v = _occurrences(us, vs) > 0
    v_in_u = _occurrences(vs, us) > 0
    u_border = _border_len(us)
    v_border = _border_len(vs)
    uv = _cross_len(us, vs)
    vu = _cross_len(vs, us)
    crosses = (uv > 0) + (vu > 0)
    if u_in_v or v_in_u:
        label = OverlapCase.SUBWORD
    elif crosses == 2:
        label = OverlapCase.CASE4
    elif crosses == 1:
        label = OverlapCase.CASE3 if (u_border or v_border) else OverlapCase.CASE2
    elif u_border or v_border:
        label = OverlapCase.CASE1
    else:
        label = OverlapCase.NO_INTERACTION
    return OverlapProfile(u_in_v, v_in_u, u_border, v_border, uv, vu, label)


def count_r_word_occurrences(w: Word, p: Presentation) -> int:
    """Occurrences of either relation side as a subword of positive w.

    Counts (side, start position) pairs; overlapping occurrences count
    separately.  Only defined for one-relation presentations.
    """
    if not w.is_positive:
        raise ValueError(f"expected a positive word, got '{w}'")
    if len(p.relations) != 1:
        raise ValueError("occurrence counting is defined for one-relation presentations")
    p.check_word(w)
    lhs, rhs = p.relations[0]
    ws = w.symbols()
    return _occurrences(lhs.symbols(), ws) + _occurrences(rhs.symbols(), ws)


class FinitenessVerdict(enum.Enum):
    CERTIFIED_FINITE = "certified-finite"
    CERTIFIED_INFINITE = "certified-infinite"
    UNKNOWN = "unknown"


class CertificateBasis(enum.Enum):
    FACT1 = "fact-1"
    PROP1 = "proposition-1"
    PROP2 = "proposition-2"
    SUBWORD_ARGUMENT = "subword-argument"
    NONE = "none"


@dataclass(frozen=True)
class FinitenessCertificate:
    verdict: FinitenessVerdict
    basis: CertificateBasis


_CERTIFICATES = {
    OverlapCase.NO_INTERACTION: FinitenessCertificate(
        FinitenessVerdict.CERTIFIED_FINITE, CertificateBasis.FACT1
    ),
    OverlapCase.CASE1: FinitenessCertificate(
        FinitenessVerdict.CERTIFIED_FINITE, CertificateBasis.PROP1
    ),
    OverlapCase.CASE2: FinitenessCertificate(
        FinitenessVerdict.CERTIFIED_FINITE, CertificateBasis.PROP2
    ),
    OverlapCase.CASE3: FinitenessCertificate(
        FinitenessVerdict.UNKNOWN, CertificateBasis.NONE
    ),
    OverlapCase.CASE4: FinitenessCertificate(
        FinitenessVerdict.UNKNOWN, CertificateBasis.NONE
    ),
    OverlapCase.SUBWORD: FinitenessCertificate(
        FinitenessVerdict.CERTIFIED_INFINITE, CertificateBasis.SUBWORD_ARGUMENT
    ),
}


def classify_finiteness(p: Presentation) -> FinitenessCertificate:
    """Static certificate for a one-relation Adian presentation.

    No interaction between the sides, a border with no cross overlap, or a
    single cross overlap with no borders each certify that every positive
    word closes to a finite automaton.  One side inside the other certifies
    divergence.  The remaining overlap cases are left open; the closure
    budget is the operational safeguard there.
    """
    if len(p.relations) != 1:
        raise ValueError("finiteness classification needs a one-relation presentation")
    if not is_adian(p):
        raise ValueError("finiteness classification needs an Adian presentation")
    u, v = p.relations[0]
    return _CERTIFICATES[overlap_profile(u, v).case_label]
