"""Exact brute-force avoidance counting.

The counter builds permutations one entry at a time, left to right, in
reduced form: a prefix of length m is a permutation of {1..m} recording
the relative order of the entries placed so far.  Appending an entry of
rank r bumps the existing values >= r up by one.  A prefix is discarded
as soon as it contains the pattern; containment is hereditary (deleting
an entry never creates an occurrence), so every avoider of length n
extends an avoider of length n-1 and the prune is exact, not heuristic.
Because the parent prefix avoided the pattern, the incremental test
only has to look for occurrences that use the new final entry.

The exact counts these routines produce are the ground truth against
which every closed form in the package is checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterator

from .errors import InvalidInputError, ResourceLimitError
from .matcher import _contains_with_last, _slot_constraints, quasi_avoids
from .perms import DEFAULT_CAP
from .posets import Poset

_SOURCES = ("brute-force", "theorem-name", "gf-expansion", "egf-expansion")


@dataclass(frozen=True)
class CountSequence:
    """Exact avoidance counts a(0..n_max) with their provenance.

    pattern is the Poset counted, or the name of the sequence generator
    for values that come from a closed form rather than a search.
    """

    pattern: Poset | str
    values: tuple[int, ...]
    source: str

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if self.source not in _SOURCES:
            raise InvalidInputError(f"unknown source {self.source!r}")
        if not self.values:
            raise InvalidInputError("a sequence needs at least a(0)")
        if self.values[0] != 1:
            raise InvalidInputError("a(0) must be 1 (the empty permutation)")
        if any(v < 0 for v in self.values):
            raise InvalidInputError("avoidance counts cannot be negative")
        if isinstance(self.pattern, Poset):
            # Below the pattern length nothing can be contained.
            for n in range(min(len(self.values), self.pattern.k)):
                if self.values[n] != factorial(n):
                    raise InvalidInputError(
                        f"a({n}) must be {n}! for a pattern of length "
                        f"{self.pattern.k}, got {self.values[n]}"
                    )

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> int:
        return self.values[n]


def _check_cap(n: int, cap: int) -> None:
    if n < 0:
        raise InvalidInputError(f"negative length: {n}")
    if n > cap:
        raise ResourceLimitError(
            f"avoidance counting to length {n} exceeds cap {cap}; "
            "raise the cap explicitly if this is intended"
        )


def _avoiding_prefix_levels(p: Poset, n_max: int) -> Iterator[list[tuple[int, ...]]]:
    """Yield the avoiding prefixes of each length 0..n_max in turn."""
    if p.k == 0:
        raise InvalidInputError(
            "the empty pattern occurs in every permutation"
        )
    table = _slot_constraints(p)
    level: list[tuple[int, ...]] = [()]
    yield level
    for m in range(1, n_max + 1):
        nxt = []
        for prefix in level:
            for rank in range(1, m + 1):
                candidate = tuple(
                    v if v < rank else v + 1 for v in prefix
                ) + (rank,)
                if not _contains_with_last(candidate, p, table):
                    nxt.append(candidate)
        level = nxt
        yield level


def count_avoiders(p: Poset, n: int, cap: int = DEFAULT_CAP) -> int:
    """Number of n-permutations with no occurrence of p."""
    _check_cap(n, cap)
    for m, level in enumerate(_avoiding_prefix_levels(p, n)):
        if m == n:
            return len(level)
    raise AssertionError("unreachable")


def avoidance_sequence(p: Poset, n_max: int, cap: int = DEFAULT_CAP) -> CountSequence:
    """Exact counts a(0..n_max) for p-avoiding permutations."""
    _check_cap(n_max, cap)
    values = [len(level) for level in _avoiding_prefix_levels(p, n_max)]
    return CountSequence(pattern=p, values=tuple(values), source="brute-force")


def count_quasi_avoiders(p: Poset, n: int, cap: int = DEFAULT_CAP) -> int:
    """Number of n-permutations that contain p while their length-(n-1)
    prefix pattern avoids it.

    Every quasi-avoider extends an avoiding prefix, so only extensions
    of avoiding (n-1)-prefixes are tested, each against the definition.
    """
    if n < 1:
        raise InvalidInputError("quasi-avoidance needs length >= 1")
    _check_cap(n, cap)
    for m, level in enumerate(_avoiding_prefix_levels(p, n - 1)):
        if m == n - 1:
            prefixes = level
            break
    count = 0
    for prefix in prefixes:
        for rank in range(1, n + 1):
            candidate = tuple(
                v if v < rank else v + 1 for v in prefix
            ) + (rank,)
            if quasi_avoids(candidate, p):
                count += 1
    return count
