"""Word encodings of card sequences.

A length-l sequence is encoded as a pair (gamma, delta).  The forward pass
walks the cards keeping a list of words that record, per ball currently in
the air, the beat at which it was last thrown (0 = before the window).  At a
beat that throws, the bottom word is consumed (recorded in delta) and the
thrown balls appear as the beat's symbol inside the departure words; gamma is
the final word list.  The backward pass deletes the highest symbol, drops
emptied words and puts delta's word back at the front, recovering every card.

Words are exponent tuples (c0, ..., cl): symbol s occurs c_s times.  The
empty word (delta_i when beat i throws nothing) is the distinct value None,
serialized as `e`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cards import (
    Card,
    Embedding,
    Verdict,
    card_to_embedding,
    embedding_to_card,
    enumerate_embeddings,
)
from .errors import InvalidEmbeddingError, InvalidSequenceError
from .sequences import CardSequence, require_valid_sequence

__all__ = [
    "Embedding",
    "SequenceEmbedding",
    "enumerate_embeddings",
    "enumerate_sequence_embeddings",
    "sequence_to_embedding",
    "embedding_to_sequence",
    "validate_sequence_embedding",
    "format_embedding",
    "parse_embedding",
    "format_sequence_embedding",
    "parse_sequence_embedding",
]

Word = tuple[int, ...]


@dataclass(frozen=True)
class SequenceEmbedding:
    """(gamma, delta) encoding of a length-l card sequence.

    gamma and the non-empty delta entries are words over {0, ..., l} stored
    as exponent tuples of arity l+1; delta[i-1] is None for a beat that
    throws nothing.
    """

    gamma: tuple[Word, ...]
    delta: tuple[Word | None, ...]
    capacity: int

    @property
    def length(self) -> int:
        return len(self.delta)

    @property
    def balls(self) -> int:
        return sum(sum(w) for w in self.gamma)


def _symbol_count(words, symbol: int) -> int:
    return sum(w[symbol] for w in words if w is not None)


def validate_sequence_embedding(se: SequenceEmbedding) -> Verdict:
    l = se.length
    if l < 1:
        return Verdict(False, "sequence embeddings need length >= 1")
    if se.capacity < 1:
        return Verdict(False, "capacity must be positive")
    arity = l + 1
    for w in se.gamma:
        if len(w) != arity:
            return Verdict(False, f"gamma word {w} must have arity {arity}")
        if any(c < 0 for c in w):
            return Verdict(False, "negative symbol count in gamma word")
        if not 1 <= sum(w) <= se.capacity:
            return Verdict(False, f"gamma word length must be in 1..{se.capacity}")
    for i, w in enumerate(se.delta, start=1):
        if w is None:
            continue
        if len(w) != arity:
            return Verdict(False, f"delta word {w} must have arity {arity}")
        if any(c < 0 for c in w):
            return Verdict(False, "negative symbol count in delta word")
        if any(w[s] for s in range(i, arity)):
            return Verdict(False, f"delta word {i} may only use symbols below {i}")
        if not 1 <= sum(w) <= se.capacity:
            return Verdict(
                False, f"delta word {i} length must be in 1..{se.capacity}"
            )
    for i in range(1, l + 1):
        d = se.delta[i - 1]
        have = 0 if d is None else sum(d)
        need = _symbol_count(se.gamma, i) + _symbol_count(se.delta[i:], i)
        if have != need:
            return Verdict(
                False,
                f"delta word {i} has length {have} but symbol {i} occurs "
                f"{need} times later",
            )
    return Verdict(True)


def _require_valid(se: SequenceEmbedding) -> None:
    verdict = validate_sequence_embedding(se)
    if not verdict:
        raise InvalidEmbeddingError(verdict.reason)


def sequence_to_embedding(cs: CardSequence) -> SequenceEmbedding:
    """Forward pass over the cards producing (gamma, delta)."""
    require_valid_sequence(cs)
    l = cs.length
    arity = l + 1
    alpha: list[Word] = [(a,) + (0,) * l for a in cs.cards[0].arrival]
    delta: list[Word | None] = []
    for i, card in enumerate(cs.cards, start=1):
        emb = card_to_embedding(card, capacity=cs.capacity)
        if emb.total_ones == 0:
            delta.append(None)
            continue
        consumed, passing = alpha[0], alpha[1:]
        new_alpha: list[Word] = []
        ptr = 0
        for u, v in emb.words:
            if u > 0:
                if ptr >= len(passing) or sum(passing[ptr]) != u:
                    raise InvalidSequenceError(
                        "pass-through groups do not line up with the card words"
                    )
                spliced = list(passing[ptr])
                ptr += 1
                spliced[i] = v
                new_alpha.append(tuple(spliced))
            else:
                fresh = [0] * arity
                fresh[i] = v
                new_alpha.append(tuple(fresh))
        if ptr != len(passing):
            raise InvalidSequenceError("unconsumed pass-through group")
        delta.append(consumed)
        alpha = new_alpha
    return SequenceEmbedding(tuple(alpha), tuple(delta), cs.capacity)


def embedding_to_sequence(se: SequenceEmbedding) -> CardSequence:
    """Backward pass recovering the unique card sequence; exact inverse of
    sequence_to_embedding."""
    _require_valid(se)
    alpha = list(se.gamma)
    cards: list[Card] = []
    for i in range(se.length, 0, -1):
        words = tuple((sum(w[:i]), w[i]) for w in alpha)
        cards.append(embedding_to_card(Embedding(words, se.capacity)))
        d = se.delta[i - 1]
        if d is not None:
            stripped = []
            for w in alpha:
                reduced = w[:i] + (0,) * (len(w) - i)
                if any(reduced):
                    stripped.append(reduced)
            alpha = [d] + stripped
    cards.reverse()
    cs = CardSequence(tuple(cards), se.capacity)
    require_valid_sequence(cs)
    return cs


def enumerate_sequence_embeddings(b: int, k: int, length: int) -> list[SequenceEmbedding]:
    """All (b,k,l)-embeddings, generated by recursing over delta choices with
    running symbol budgets."""
    if b < 0:
        raise ValueError("b must be nonnegative")
    if k < 1:
        raise ValueError("k must be positive")
    if length < 1:
        raise ValueError("length must be >= 1")
    arity = length + 1
    pool = _word_pool(arity, k)
    results: list[SequenceEmbedding] = []

    gammas: list[tuple[Word, ...]] = []

    def grow(prefix: list[Word], remaining: int):
        if remaining == 0:
            gammas.append(tuple(prefix))
            return
        for w in pool:
            if sum(w) <= remaining:
                prefix.append(w)
                grow(prefix, remaining - sum(w))
                prefix.pop()

    grow([], b)

    for gamma in gammas:
        counts = [_symbol_count(gamma, s) for s in range(arity)]
        choices: list[Word | None] = [None] * length

        def pick(i: int):
            if i == 0:
                results.append(
                    SequenceEmbedding(gamma, tuple(choices), k)
                )
                return
            need = counts[i]
            if need == 0:
                choices[i - 1] = None
                pick(i - 1)
                return
            if need > k:
                return
            for split in _weak_compositions(need, i):
                word = split + (0,) * (arity - i)
                for s in range(1, i):
                    counts[s] += split[s]
                choices[i - 1] = word
                pick(i - 1)
                for s in range(1, i):
                    counts[s] -= split[s]

        pick(length)
    return results


def _word_pool(arity: int, k: int) -> list[Word]:
    """All words of arity `arity` with total length 1..k, ordered."""
    pool: list[Word] = []

    def build(prefix: list[int], left: int):
        if len(prefix) == arity:
            if sum(prefix) >= 1:
                pool.append(tuple(prefix))
            return
        for c in range(left + 1):
            prefix.append(c)
            build(prefix, left - c)
            prefix.pop()

    build([], k)
    return pool


def _weak_compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _weak_compositions(total - first, parts - 1):
            yield (first,) + rest


# -- text formats --------------------------------------------------------------


def word_string(word: Word) -> str:
    return "".join(str(sym) * count for sym, count in enumerate(word))


def _parse_word(text: str, arity: int) -> Word:
    counts = [0] * arity
    prev = -1
    for ch in text:
        if not ch.isdigit():
            raise ValueError(f"invalid symbol {ch!r} in word {text!r}")
        sym = int(ch)
        if sym >= arity:
            raise ValueError(f"symbol {sym} too large in word {text!r}")
        if sym < prev:
            raise ValueError(f"word {text!r} must be weakly increasing")
        prev = sym
        counts[sym] += 1
    return tuple(counts)


def format_embedding(emb: Embedding) -> str:
    return "|".join(emb.word_strings())


def parse_embedding(text: str, capacity: int) -> Embedding:
    text = text.strip()
    if text == "":
        return Embedding((), capacity)
    words = []
    for tok in text.split("|"):
        counts = _parse_word(tok.strip(), 2)
        words.append((counts[0], counts[1]))
    return Embedding(tuple(words), capacity)


def format_sequence_embedding(se: SequenceEmbedding) -> str:
    gamma = "|".join(word_string(w) for w in se.gamma)
    delta = "|".join("e" if w is None else word_string(w) for w in se.delta)
    return f"gamma={gamma};delta={delta}"


def parse_sequence_embedding(text: str, capacity: int) -> SequenceEmbedding:
    """Parse `gamma=0004|112|2|4;delta=0000|0011|e|22`; `e` is the empty word."""
    gamma_part, sep, delta_part = text.partition(";")
    if not sep:
        raise ValueError("expected `gamma=...;delta=...`")
    if not gamma_part.strip().startswith("gamma=") or not delta_part.strip().startswith(
        "delta="
    ):
        raise ValueError("expected `gamma=...;delta=...`")
    gamma_text = gamma_part.strip()[len("gamma="):].strip()
    delta_text = delta_part.strip()[len("delta="):].strip()
    delta_tokens = delta_text.split("|") if delta_text else []
    if not delta_tokens:
        raise ValueError("delta must list one word (or `e`) per beat")
    arity = len(delta_tokens) + 1
    gamma_words = tuple(
        _parse_word(tok.strip(), arity)
        for tok in (gamma_text.split("|") if gamma_text else [])
    )
    delta_words: list[Word | None] = []
    for tok in delta_tokens:
        tok = tok.strip()
        delta_words.append(None if tok == "e" else _parse_word(tok, arity))
    return SequenceEmbedding(gamma_words, tuple(delta_words), capacity)
