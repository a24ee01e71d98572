"""Labeled posets defining partially ordered patterns.

A pattern of length k is a strict partial order on the labels {1..k}.
The labels name the positions of a prospective occurrence, read left to
right; a relation a < b says "the value in occurrence position a must be
smaller than the value in occurrence position b".  A chain therefore
recovers a classical pattern, an antichain matches every subsequence,
and everything in between interpolates.

Builders cover every family used by the counting theorems: chains,
complete bipartite patterns (A over B), the length-4 path patterns
encoded by N-words, longer alternating paths, and disjoint unions of
chains.  The two label symmetries that preserve avoidance counts
(complementing the labels, dualizing the order) live here too.

Relations are stored transitively closed; every constructed Poset is a
valid strict partial order or the builder raises.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InvalidInputError, InvalidPosetError
from .perms import Permutation, reduce


Pair = tuple[int, int]


def _transitive_closure(k: int, pairs: Iterable[Pair]) -> frozenset[Pair]:
    reach = [[False] * (k + 1) for _ in range(k + 1)]
    for a, b in pairs:
        reach[a][b] = True
    for m in range(1, k + 1):
        for a in range(1, k + 1):
            if reach[a][m]:
                row_a, row_m = reach[a], reach[m]
                for b in range(1, k + 1):
                    if row_m[b]:
                        row_a[b] = True
    return frozenset(
        (a, b)
        for a in range(1, k + 1)
        for b in range(1, k + 1)
        if reach[a][b]
    )


def _check_labels(k: int, pairs: Iterable[Pair]) -> None:
    for a, b in pairs:
        if not (1 <= a <= k and 1 <= b <= k):
            raise InvalidInputError(
                f"label out of range 1..{k} in relation ({a},{b})"
            )


@dataclass(frozen=True)
class Poset:
    """Strict partial order on labels {1..k}, stored transitively closed.

    relations holds pairs (a, b) meaning a is below b.  Equality is
    label-exact: two posets are equal only when both k and the relation
    sets coincide.
    """

    k: int
    relations: frozenset[Pair]

    def __post_init__(self):
        if self.k < 0:
            raise InvalidInputError(f"negative size: {self.k}")
        rels = frozenset(self.relations)
        object.__setattr__(self, "relations", rels)
        _check_labels(self.k, rels)
        if rels != _transitive_closure(self.k, rels):
            raise InvalidPosetError("relations are not transitively closed")
        for a, b in rels:
            if a == b:
                raise InvalidPosetError(f"label {a} is related to itself")
            if (b, a) in rels:
                raise InvalidPosetError(
                    f"labels {a} and {b} are related both ways"
                )

    def __repr__(self) -> str:
        pairs = ",".join(f"({a},{b})" for a, b in sorted(self.relations))
        return f"Poset(k={self.k}, relations={{{pairs}}})"

    def less(self, a: int, b: int) -> bool:
        """True iff label a is below label b."""
        return (a, b) in self.relations


def from_relations(k: int, covers: Iterable[Pair]) -> Poset:
    """Poset generated by arbitrary relation pairs (a below b).

    The pairs are closed transitively; a cycle (including a pair related
    both ways) is rejected.  An empty cover list gives the antichain,
    which every length-k subsequence matches.
    """
    covers = list(covers)
    _check_labels(k, covers)
    closed = _transitive_closure(k, covers)
    for a, b in closed:
        if a == b or (b, a) in closed:
            raise InvalidPosetError(
                f"relations contain a cycle through label {a}"
            )
    return Poset(k, closed)


def chain(word: Permutation | Sequence[int]) -> Poset:
    """Chain poset whose occurrences are classical occurrences of word.

    Label i sits below label j exactly when word_i < word_j, so the
    values of an occurrence are ordered the same way as the word.
    """
    word = word if isinstance(word, Permutation) else Permutation(word)
    k = len(word)
    pairs = [
        (i, j)
        for i in range(1, k + 1)
        for j in range(1, k + 1)
        if word[i - 1] < word[j - 1]
    ]
    return Poset(k, frozenset(pairs))


def complete_bipartite(k: int, a_set: Iterable[int]) -> Poset:
    """Every label outside a_set below every label inside it.

    a_set must be a nonempty proper subset of {1..k}; the pattern asks
    for |a_set| values, at the a_set positions of the occurrence, that
    all exceed the values at the remaining positions.
    """
    a_labels = set(a_set)
    for a in a_labels:
        if not (1 <= a <= k):
            raise InvalidInputError(f"label {a} out of range 1..{k}")
    if not a_labels or len(a_labels) == k:
        raise InvalidInputError(
            "upper set must be a nonempty proper subset of the labels"
        )
    b_labels = set(range(1, k + 1)) - a_labels
    return Poset(k, frozenset((b, a) for b in b_labels for a in a_labels))


def n_pattern(word: Permutation | Sequence[int]) -> Poset:
    """Length-4 path pattern encoded by a 4-letter word.

    The word lists the labels along the path low-high-low-high, giving
    relations w1 < w2, w3 < w2, w3 < w4.
    """
    word = word if isinstance(word, Permutation) else Permutation(word)
    if len(word) != 4:
        raise InvalidInputError("word must have length 4")
    w1, w2, w3, w4 = word
    return Poset(4, frozenset({(w1, w2), (w3, w2), (w3, w4)}))


_SHAPE_ALIASES = {"^": "^", "v": "v", "∧": "^", "∨": "v"}


def zigzag(word: Permutation | Sequence[int], shape: str) -> Poset:
    """Alternating-path pattern with labels read along the path.

    shape is a string over {^, v}, one step per edge: '^' makes the next
    label an upper neighbour of the current one, 'v' a lower neighbour.
    Steps must strictly alternate (the path has no straight runs), and
    the word must be one letter longer than the shape.
    """
    word = word if isinstance(word, Permutation) else Permutation(word)
    try:
        steps = "".join(_SHAPE_ALIASES[c] for c in shape)
    except KeyError as exc:
        raise InvalidInputError(f"bad shape character in {shape!r}") from exc
    if len(word) != len(steps) + 1:
        raise InvalidInputError(
            f"word length {len(word)} does not fit shape of {len(steps)} steps"
        )
    for prev, cur in zip(steps, steps[1:]):
        if prev == cur:
            raise InvalidInputError(f"shape {shape!r} does not alternate")
    pairs = set()
    for i, step in enumerate(steps):
        a, b = word[i], word[i + 1]
        pairs.add((a, b) if step == "^" else (b, a))
    return Poset(len(word), frozenset(pairs))


def dc_pop(words: Sequence[Permutation | Sequence[int]]) -> Poset:
    """Disjoint union of chains, one per word, letters read top down.

    Each word lists one chain's labels from its maximum element to its
    minimum.  When the words' letters together form exactly {1..K} they
    are taken literally, so chains may interleave label ranges (e.g.
    [31, 2] puts labels 1 and 3 on the chain and leaves 2 isolated).
    Otherwise each word is reduced and the i-th chain takes the i-th
    consecutive block of labels.
    """
    if not words:
        raise InvalidInputError("need at least one chain word")
    letter_lists: list[tuple[int, ...]] = []
    for w in words:
        letters = tuple(w) if not isinstance(w, Permutation) else w.entries
        if not letters:
            raise InvalidInputError("empty chain word")
        if len(set(letters)) != len(letters):
            raise InvalidInputError(f"repeated letter in chain word {letters!r}")
        if any(v < 1 for v in letters):
            raise InvalidInputError(f"non-positive letter in {letters!r}")
        letter_lists.append(letters)

    total = sum(len(w) for w in letter_lists)
    flat = [v for w in letter_lists for v in w]
    if sorted(flat) == list(range(1, total + 1)):
        blocks = letter_lists
    else:
        blocks = []
        base = 0
        for letters in letter_lists:
            rho = reduce(letters)
            blocks.append(tuple(base + r for r in rho))
            base += len(letters)

    pairs = set()
    for labels in blocks:
        for i, upper in enumerate(labels):
            for lower in labels[i + 1 :]:
                pairs.add((lower, upper))
    return Poset(total, frozenset(pairs))


def label_complement(p: Poset) -> Poset:
    """Replace each label x by k+1-x (an avoidance-preserving symmetry)."""
    k = p.k
    return Poset(
        k, frozenset((k + 1 - a, k + 1 - b) for a, b in p.relations)
    )


def vertical_flip(p: Poset) -> Poset:
    """Order dual: reverse every relation (avoidance-preserving)."""
    return Poset(p.k, frozenset((b, a) for a, b in p.relations))


def is_bipartite(p: Poset) -> bool:
    """True iff the poset has no chain of three labels (two levels only)."""
    rels = p.relations
    below_something = {a for a, _ in rels}
    return not any(b in below_something for _, b in rels)


@dataclass(frozen=True)
class PatternFamily:
    """A named list of same-length posets, input to the classifier.

    display_names, when given, provides one human-readable notation
    string per member (e.g. "n:2134").
    """

    name: str
    members: tuple[Poset, ...]
    display_names: tuple[str, ...] | None = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        if self.display_names is not None:
            object.__setattr__(
                self, "display_names", tuple(self.display_names)
            )
        if not self.members:
            raise InvalidInputError("a pattern family cannot be empty")
        sizes = {p.k for p in self.members}
        if len(sizes) > 1:
            raise InvalidInputError(
                f"family members differ in length: {sorted(sizes)}"
            )
        if self.display_names is not None and len(self.display_names) != len(
            self.members
        ):
            raise InvalidInputError(
                "display_names must match members one to one"
            )
