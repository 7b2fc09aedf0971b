"""Card sequences and the two counting routes for them.

A length-l sequence chains l cards so that each card's departure composition
is the next card's arrival composition.  Counting goes either by brute-force
chaining over the actual cards or through the transfer matrix over bounded
compositions; powers of the matrix count sequences with free endpoints and
its trace counts the periodic ones (first arrival == last departure).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cards import Card, Verdict, enumerate_cards, validate_card
from .compositions import compositions_bounded
from .errors import BudgetExceededError, InvalidSequenceError

DEFAULT_ENUMERATION_LIMIT = 200_000


@dataclass(frozen=True)
class CardSequence:
    """An ordered chain of compatible cards within a capacity context."""

    cards: tuple[Card, ...]
    capacity: int

    @property
    def length(self) -> int:
        return len(self.cards)

    @property
    def balls(self) -> int:
        return self.cards[0].balls if self.cards else 0


def compatible(first: Card, second: Card) -> bool:
    """True iff the first card's departure equals the second card's arrival."""
    return first.departure == second.arrival


def validate_sequence(cs: CardSequence) -> Verdict:
    if not cs.cards:
        return Verdict(False, "a card sequence must contain at least one card")
    if cs.capacity < 1:
        return Verdict(False, "capacity must be positive")
    b = cs.cards[0].balls
    for pos, card in enumerate(cs.cards, start=1):
        verdict = validate_card(card)
        if not verdict:
            return Verdict(False, f"card {pos}: {verdict.reason}")
        if card.balls != b:
            return Verdict(False, f"card {pos} has {card.balls} balls, expected {b}")
        if card.capacity > cs.capacity:
            return Verdict(False, f"card {pos} exceeds capacity {cs.capacity}")
    for pos, (a, b2) in enumerate(zip(cs.cards, cs.cards[1:]), start=1):
        if not compatible(a, b2):
            return Verdict(False, f"cards {pos} and {pos + 1} are not compatible")
    return Verdict(True)


def require_valid_sequence(cs: CardSequence) -> None:
    verdict = validate_sequence(cs)
    if not verdict:
        raise InvalidSequenceError(verdict.reason)


# -- transfer matrix ----------------------------------------------------------


@dataclass(frozen=True)
class TransferMatrix:
    """Square matrix over the compositions of b with parts <= k; entry
    (row, col) counts cards from state row to state col."""

    balls: int
    capacity: int
    states: tuple[tuple[int, ...], ...]
    counts: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.states)

    def total(self) -> int:
        return sum(sum(row) for row in self.counts)

    def power(self, exponent: int) -> list[list[int]]:
        """Matrix power with exact big-int entries (binary exponentiation)."""
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        n = self.size
        result = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        base = [list(row) for row in self.counts]
        e = exponent
        while e:
            if e & 1:
                result = _mat_mul(result, base)
            e >>= 1
            if e:
                base = _mat_mul(base, base)
        return result

    def char_poly(self) -> list[int]:
        """Characteristic polynomial det(xI - M), coefficients by ascending
        power of x, leading coefficient 1 (Faddeev-LeVerrier, exact)."""
        n = self.size
        coeffs = [Fraction(0)] * (n + 1)
        coeffs[n] = Fraction(1)
        m = [[Fraction(v) for v in row] for row in self.counts]
        work = [[Fraction(0)] * n for _ in range(n)]
        for step in range(1, n + 1):
            for i in range(n):
                work[i][i] += coeffs[n - step + 1]
            work = _mat_mul(m, work)
            trace = sum(work[i][i] for i in range(n))
            coeffs[n - step] = -trace / step
        out = []
        for c in coeffs:
            if c.denominator != 1:
                raise ArithmeticError("characteristic polynomial not integral")
            out.append(int(c))
        return out

    def to_json_dict(self) -> dict:
        return {
            "b": self.balls,
            "k": self.capacity,
            "states": [list(s) for s in self.states],
            "counts": [list(row) for row in self.counts],
        }


def _mat_mul(a, b):
    n = len(a)
    m = len(b[0])
    inner = len(b)
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        row = out[i]
        for t in range(inner):
            v = ai[t]
            if not v:
                continue
            bt = b[t]
            for j in range(m):
                row[j] += v * bt[j]
    return out


def build_transfer_matrix(b: int, k: int) -> TransferMatrix:
    """Bucket all cards with b balls and parts <= k by (arrival, departure)."""
    states = tuple(compositions_bounded(b, k))
    index = {s: i for i, s in enumerate(states)}
    counts = [[0] * len(states) for _ in states]
    for card in enumerate_cards(b, k):
        counts[index[card.arrival]][index[card.departure]] += 1
    return TransferMatrix(b, k, states, tuple(tuple(row) for row in counts))


def count_sequences(b: int, k: int, length: int) -> int:
    """Number of length-l card sequences with b balls and capacity k.

    length 0 is defined as the number of states (useful when debugging the
    matrix); meaningful sequence counts start at length 1.
    """
    if length < 0:
        raise ValueError("length must be nonnegative")
    matrix = build_transfer_matrix(b, k)
    power = matrix.power(length)
    return sum(sum(row) for row in power)


def count_periodic(b: int, k: int, length: int) -> int:
    """Sequences whose first arrival equals their last departure (trace)."""
    if length < 1:
        raise ValueError("length must be positive")
    matrix = build_transfer_matrix(b, k)
    power = matrix.power(length)
    return sum(power[i][i] for i in range(len(power)))


# -- brute-force routes ---------------------------------------------------------


def _cards_by_arrival(b: int, k: int) -> dict[tuple[int, ...], list[Card]]:
    by_arrival: dict[tuple[int, ...], list[Card]] = {}
    for card in enumerate_cards(b, k):
        by_arrival.setdefault(card.arrival, []).append(card)
    return by_arrival


def count_sequences_brute(
    b: int, k: int, length: int, periodic: bool = False, limit: int = 10_000_000
) -> int:
    """Count sequences by explicitly chaining cards, never powering a matrix.

    For the free-endpoint count the last link only needs the size of the
    compatible bucket; the periodic count filters full chains on first
    arrival == last departure.  Raises BudgetExceededError once more than
    `limit` chain prefixes have been visited.
    """
    if length < 1:
        raise ValueError("length must be positive")
    cards = enumerate_cards(b, k)
    by_arrival = _cards_by_arrival(b, k)
    budget = [limit]

    def spend():
        budget[0] -= 1
        if budget[0] < 0:
            raise BudgetExceededError(f"brute-force walk exceeded {limit} steps")

    def walk(current: Card, depth: int, first_arrival) -> int:
        spend()
        if depth == length:
            if periodic:
                return 1 if current.departure == first_arrival else 0
            return 1
        bucket = by_arrival.get(current.departure, ())
        if depth == length - 1 and not periodic:
            return len(bucket)
        return sum(walk(card, depth + 1, first_arrival) for card in bucket)

    return sum(walk(card, 1, card.arrival) for card in cards)


def enumerate_sequences(
    b: int, k: int, length: int, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> list[CardSequence]:
    """Materialize every length-l sequence; guarded against state-space blowups."""
    if length < 1:
        raise ValueError("length must be positive")
    by_arrival = _cards_by_arrival(b, k)
    out: list[CardSequence] = []

    def extend(chain: list[Card]):
        if len(chain) == length:
            if len(out) >= limit:
                raise BudgetExceededError(
                    f"enumeration would exceed {limit} sequences"
                )
            out.append(CardSequence(tuple(chain), k))
            return
        for card in by_arrival.get(chain[-1].departure, ()):
            chain.append(card)
            extend(chain)
            chain.pop()

    for first in enumerate_cards(b, k):
        extend([first])
    return out
