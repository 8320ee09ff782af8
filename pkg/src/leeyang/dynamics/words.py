"""Substitution words and letter-to-coupling maps.

The Fibonacci substitution a -> ab, b -> a generates the words u_k = S^k(a)
whose lengths are the Fibonacci numbers F_{k+2} (with F_1 = F_2 = 1). Each
u_k is a prefix of u_{k+1}, so prefixes of the one-sided fixed point are
well defined and independent of k.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import DomainError, ResourceCapError
from ..sequences import CouplingSequence

FIBONACCI_RULES = {"a": "ab", "b": "a"}

DEFAULT_WORD_CAP = 10_000_000


@dataclass(frozen=True)
class SymbolicWord:
    """Nonempty finite word over a declared finite alphabet."""

    letters: str
    alphabet: frozenset

    def __post_init__(self):
        if not self.letters:
            raise DomainError("word must be nonempty")
        object.__setattr__(self, "alphabet", frozenset(self.alphabet))
        bad = set(self.letters) - self.alphabet
        if bad:
            raise DomainError(f"letters {sorted(bad)} not in alphabet {sorted(self.alphabet)}")

    def __len__(self) -> int:
        return len(self.letters)

    def __getitem__(self, k) -> str:
        return self.letters[k]

    def count(self, letter: str) -> int:
        return self.letters.count(letter)


def _check_rules(rules: dict, seed: str) -> frozenset:
    alphabet = frozenset(rules)
    if seed not in alphabet:
        raise DomainError(f"seed {seed!r} not in alphabet {sorted(alphabet)}")
    for letter, image in rules.items():
        if not image:
            raise DomainError(f"rule for {letter!r} maps to the empty word")
        bad = set(image) - alphabet
        if bad:
            raise DomainError(f"rule for {letter!r} uses letters {sorted(bad)} outside the alphabet")
    image = rules[seed]
    if not (image.startswith(seed) and len(image) >= 2):
        raise DomainError(
            f"substitution is not prolongable at {seed!r}: "
            f"rule image {image!r} must start with the seed and have length >= 2"
        )
    return alphabet


def substitution_fixed_point(rules: dict, seed: str, n: int, cap: int = DEFAULT_WORD_CAP) -> SymbolicWord:
    """First n letters of the substitution fixed point lim_k S^k(seed)."""
    alphabet = _check_rules(rules, seed)
    if n < 1:
        raise DomainError("prefix length must be >= 1")
    if n > cap:
        raise ResourceCapError(f"requested prefix length {n} exceeds cap {cap}")
    # the word always starts with the seed, whose image has length >= 2,
    # so each round strictly extends the stabilized prefix
    word = seed
    while len(word) < n:
        word = "".join(rules[c] for c in word)
    return SymbolicWord(word[:n], alphabet)


def fibonacci_numbers(count: int) -> list:
    """F_1, ..., F_count with F_1 = F_2 = 1."""
    fibs = []
    a, b = 1, 1
    for _ in range(count):
        fibs.append(a)
        a, b = b, a + b
    return fibs


def fibonacci_word(k: int, cap: int = DEFAULT_WORD_CAP) -> SymbolicWord:
    """The k-th Fibonacci substitution word u_k = S^k(a); |u_k| = F_{k+2}."""
    if k < 0:
        raise DomainError("iteration count must be >= 0")
    length = fibonacci_numbers(k + 2)[-1]
    if length > cap:
        raise ResourceCapError(f"u_{k} has length {length}, exceeding cap {cap}")
    word = "a"
    for _ in range(k):
        word = "".join(FIBONACCI_RULES[c] for c in word)
    return SymbolicWord(word, frozenset("ab"))


def couplings_from_word(word: SymbolicWord, mapping: dict) -> CouplingSequence:
    """Pointwise letter -> positive coupling translation of a word."""
    missing = set(word.letters) - set(mapping)
    if missing:
        raise DomainError(f"no coupling mapped for letters {sorted(missing)}")
    for letter, value in mapping.items():
        if not value > 0:
            raise DomainError(f"coupling for {letter!r} must be positive, got {value}")
    return CouplingSequence(np.array([mapping[c] for c in word.letters], dtype=float))
