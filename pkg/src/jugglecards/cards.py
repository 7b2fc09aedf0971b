"""Cards: one beat of multiplex juggling.

A card is (arrival, departure, landing): the in-air ball groups before and
after the beat, plus the strictly increasing landing map saying where each
arrival group goes.  landing[i] == 0 means the bottom group is caught and its
balls are rethrown; otherwise every group passes straight through, which
forces landing to be the identity and arrival == departure.

Cards with b balls and every part <= k are in bijection with (b,k)-embeddings:
word j is 0^u 1^v where the u zeros are balls passing into departure group j
and the v ones are balls newly thrown there.  Enumeration goes through the
embeddings and maps back.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidCardError, InvalidEmbeddingError


@dataclass(frozen=True)
class Verdict:
    """Validation outcome; carries the first violated rule."""

    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class Embedding:
    """A (b,k)-embedding: words stored as (zeros, ones) count pairs."""

    words: tuple[tuple[int, int], ...]
    capacity: int

    @property
    def balls(self) -> int:
        return sum(u + v for u, v in self.words)

    @property
    def total_ones(self) -> int:
        return sum(v for _, v in self.words)

    def word_strings(self) -> tuple[str, ...]:
        return tuple("0" * u + "1" * v for u, v in self.words)


@dataclass(frozen=True)
class Card:
    """A multiplex juggling card (arrival, departure, landing map).

    landing is stored as a tuple with landing[i-1] = image of arrival group i;
    0 stands for the ground vertex.
    """

    arrival: tuple[int, ...]
    departure: tuple[int, ...]
    landing: tuple[int, ...]

    @property
    def balls(self) -> int:
        return sum(self.arrival)

    @property
    def capacity(self) -> int:
        return max(self.arrival + self.departure, default=0)


EMPTY_CARD = Card((), (), ())


def validate_card(card: Card) -> Verdict:
    """Check every structural rule; the verdict names the first violation."""
    if not all(isinstance(p, int) and p >= 1 for p in card.arrival):
        return Verdict(False, "arrival parts must be positive integers")
    if not all(isinstance(p, int) and p >= 1 for p in card.departure):
        return Verdict(False, "departure parts must be positive integers")
    if sum(card.arrival) != sum(card.departure):
        return Verdict(False, "arrival and departure must have equal ball counts")
    s, t = len(card.arrival), len(card.departure)
    if len(card.landing) != s:
        return Verdict(False, "landing map must assign every arrival group")
    for j in card.landing:
        if not isinstance(j, int) or j < 0 or j > t:
            return Verdict(False, "landing values must lie in 0..len(departure)")
    for a, b in zip(card.landing, card.landing[1:]):
        if a >= b:
            return Verdict(False, "landing map must be strictly increasing")
    for i, j in enumerate(card.landing):
        if j != 0 and card.arrival[i] > card.departure[j - 1]:
            return Verdict(
                False,
                f"arrival group {i + 1} does not fit in departure group {j}",
            )
    if card.landing and card.landing[0] != 0:
        if s != t or card.landing != tuple(range(1, s + 1)):
            return Verdict(False, "without a catch, landing must be the identity")
    return Verdict(True)


def _require_valid(card: Card) -> None:
    verdict = validate_card(card)
    if not verdict:
        raise InvalidCardError(verdict.reason)


def validate_embedding(emb: Embedding) -> Verdict:
    k = emb.capacity
    if k < 1:
        return Verdict(False, "capacity must be positive")
    for u, v in emb.words:
        if u < 0 or v < 0:
            return Verdict(False, "word counts must be nonnegative")
        if not 1 <= u + v <= k:
            return Verdict(False, f"word length must be in 1..{k}")
    if emb.total_ones > k:
        return Verdict(False, f"total number of 1s must be at most {k}")
    return Verdict(True)


def card_to_embedding(card: Card, capacity: int | None = None) -> Embedding:
    """The word encoding of a card: word j is 0^a 1^(b_j - a) when arrival
    group i with a balls lands in departure group j, else 1^(b_j).
    """
    _require_valid(card)
    landing_of = {j: i for i, j in enumerate(card.landing) if j != 0}
    words = []
    for j, part in enumerate(card.departure, start=1):
        if j in landing_of:
            a = card.arrival[landing_of[j]]
            words.append((a, part - a))
        else:
            words.append((0, part))
    if capacity is None:
        capacity = max(card.capacity, 1)
    return Embedding(tuple(words), capacity)


def embedding_to_card(emb: Embedding) -> Card:
    """Exact inverse of card_to_embedding.

    No 1s anywhere means a pass-through card (arrival == departure, identity
    landing); otherwise the total count of 1s is the caught bottom group and
    the zero-containing words are the pass-through groups in order.
    """
    verdict = validate_embedding(emb)
    if not verdict:
        raise InvalidEmbeddingError(verdict.reason)
    departure = tuple(u + v for u, v in emb.words)
    ones = emb.total_ones
    if ones == 0:
        arrival = departure
        landing = tuple(range(1, len(departure) + 1))
    else:
        zero_positions = tuple(
            j for j, (u, _) in enumerate(emb.words, start=1) if u > 0
        )
        arrival = (ones,) + tuple(emb.words[j - 1][0] for j in zero_positions)
        landing = (0,) + zero_positions
    card = Card(arrival, departure, landing)
    _require_valid(card)
    return card


def enumerate_embeddings(b: int, k: int) -> list[Embedding]:
    """All (b,k)-embeddings exactly once, sorted by their word strings."""
    if b < 0:
        raise ValueError("b must be nonnegative")
    if k < 1:
        raise ValueError("k must be positive")
    results: list[Embedding] = []

    def extend(prefix: list[tuple[int, int]], remaining: int, ones_left: int):
        if remaining == 0:
            results.append(Embedding(tuple(prefix), k))
            return
        for u in range(0, min(k, remaining) + 1):
            for v in range(max(1 - u, 0), min(k - u, remaining - u, ones_left) + 1):
                prefix.append((u, v))
                extend(prefix, remaining - u - v, ones_left - v)
                prefix.pop()

    extend([], b, k)
    results.sort(key=lambda e: e.word_strings())
    return results


def enumerate_cards(b: int, k: int) -> list[Card]:
    """All cards with b balls and capacity at most k, via the embedding bijection."""
    return [embedding_to_card(e) for e in enumerate_embeddings(b, k)]


# -- text format -------------------------------------------------------------


def format_card(card: Card) -> str:
    return (
        "arrival=" + ",".join(map(str, card.arrival))
        + ";departure=" + ",".join(map(str, card.departure))
        + ";f=" + ",".join(map(str, card.landing))
    )


def parse_card(text: str) -> Card:
    """Parse `arrival=4,2,3;departure=4,2,3;f=1,2,3`.

    Structure is strict (the three keys, in order); whitespace around
    separators is ignored.  The result is not validated here.
    """
    fields = [f.strip() for f in text.split(";")]
    if len(fields) != 3:
        raise ValueError("card text must have exactly three ;-separated fields")
    values = []
    for field, key in zip(fields, ("arrival", "departure", "f")):
        name, eq, rest = field.partition("=")
        if not eq or name.strip() != key:
            raise ValueError(f"expected `{key}=...`, got {field!r}")
        rest = rest.strip()
        if rest == "":
            values.append(())
            continue
        try:
            values.append(tuple(int(tok.strip()) for tok in rest.split(",")))
        except ValueError:
            raise ValueError(f"non-integer entry in `{key}` field") from None
    return Card(values[0], values[1], values[2])


# -- ASCII rendering ----------------------------------------------------------

_INNER_WIDTH = 13


def render_card(card: Card) -> str:
    """Deterministic ASCII diagram of a card.

    One row per ball slot, top slot first; arrival labels on the left,
    departure labels on the right, both bottom-to-top.  Pass-through edges
    run left to right, bending through a '|' bus column when the endpoints
    sit on different rows.  'o' on the bottom border is the ground vertex;
    a catch is drawn as '\\' next to the bottom arrival group and every
    throw as '/' next to the receiving departure group.  The golden file in
    the test suite pins the exact format.
    """
    _require_valid(card)
    s, t = len(card.arrival), len(card.departure)
    n = max(s, t, 1)
    cross = sum(1 for i, j in enumerate(card.landing, start=1) if j not in (0, i))
    width = max(_INNER_WIDTH, 2 * cross + 5)
    grid = [[" "] * width for _ in range(n)]

    def left_row(slot: int) -> int:
        return n - slot

    right_row = left_row

    edges = [(i + 1, j) for i, j in enumerate(card.landing) if j != 0]
    for i, j in edges:
        if i == j:
            r = left_row(i)
            for c in range(width):
                grid[r][c] = "-"
    bus = 2
    for i, j in edges:
        if i == j:
            continue
        r1, r2 = left_row(i), right_row(j)
        for c in range(bus):
            grid[r1][c] = "-"
        for c in range(bus + 1, width):
            grid[r2][c] = "-"
        grid[r1][bus] = "+"
        grid[r2][bus] = "+"
        for r in range(min(r1, r2) + 1, max(r1, r2)):
            grid[r][bus] = "|"
        bus += 2

    if card.landing and card.landing[0] == 0:
        grid[left_row(1)][1] = "\\"
        image = {j for j in card.landing if j != 0}
        landed_from = {j: i for i, j in enumerate(card.landing) if j != 0}
        for j in range(1, t + 1):
            receives = j not in image or (
                card.arrival[landed_from[j]] < card.departure[j - 1]
            )
            if receives:
                grid[right_row(j)][width - 2] = "/"

    lines = ["    +" + "-" * width + "+"]
    for r in range(n):
        slot = n - r
        left = f"{card.arrival[slot - 1]:>3} " if slot <= s else "    "
        right = f" {card.departure[slot - 1]}" if slot <= t else ""
        lines.append(left + "|" + "".join(grid[r]) + "|" + right)
    half = width // 2
    lines.append("    +" + "-" * half + "o" + "-" * (width - half - 1) + "+")
    return "\n".join(line.rstrip() for line in lines)
