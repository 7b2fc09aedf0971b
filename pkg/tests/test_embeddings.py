import pytest

from jugglecards.cards import Card
from jugglecards.embeddings import (
    SequenceEmbedding,
    embedding_to_sequence,
    enumerate_sequence_embeddings,
    format_sequence_embedding,
    parse_sequence_embedding,
    sequence_to_embedding,
    validate_sequence_embedding,
    word_string,
)
from jugglecards.cards import enumerate_embeddings
from jugglecards.errors import InvalidEmbeddingError
from jugglecards.sequences import CardSequence, count_sequences, enumerate_sequences

WORKED_CARDS = (
    Card((4, 2, 3), (4, 3, 2), (0, 1, 2)),
    Card((4, 3, 2), (2, 3, 3, 1), (0, 2, 3)),
    Card((2, 3, 3, 1), (2, 3, 3, 1), (1, 2, 3, 4)),
    Card((2, 3, 3, 1), (4, 3, 1, 1), (0, 1, 2, 3)),
)
WORKED_TEXT = "gamma=0004|112|2|4;delta=0000|0011|e|22"


def test_worked_example_forward():
    cs = CardSequence(WORKED_CARDS, 4)
    se = sequence_to_embedding(cs)
    assert format_sequence_embedding(se) == WORKED_TEXT
    assert se == parse_sequence_embedding(WORKED_TEXT, 4)


def test_worked_example_backward():
    se = parse_sequence_embedding(WORKED_TEXT, 4)
    assert embedding_to_sequence(se) == CardSequence(WORKED_CARDS, 4)


def test_single_card_delta_records_caught_group():
    # one card with a catch: delta_1 is the full history word of the caught
    # group, its length equal to the number of thrown balls
    card = Card((6, 1, 2, 2), (3, 1, 2, 3, 2), (0, 1, 3, 4))
    se = sequence_to_embedding(CardSequence((card,), 6))
    assert tuple(word_string(w) for w in se.gamma) == ("011", "1", "00", "001", "11")
    assert se.delta == ((6, 0),)
    assert format_sequence_embedding(se) == "gamma=011|1|00|001|11;delta=000000"


def test_pass_through_sequences_have_empty_deltas():
    card = Card((2, 1), (2, 1), (1, 2))
    cs = CardSequence((card, card, card), 2)
    se = sequence_to_embedding(cs)
    assert se.delta == (None, None, None)
    assert tuple(word_string(w) for w in se.gamma) == ("00", "0")
    assert embedding_to_sequence(se) == cs


def test_empty_sequence_of_zero_balls():
    empty = Card((), (), ())
    cs = CardSequence((empty, empty), 3)
    se = sequence_to_embedding(cs)
    assert se.gamma == ()
    assert se.delta == (None, None)
    assert embedding_to_sequence(se) == cs


def test_round_trip_grid():
    for k in (1, 2):
        for length in (1, 2, 3):
            for b in range(0, 5):
                for cs in enumerate_sequences(b, k, length):
                    se = sequence_to_embedding(cs)
                    assert embedding_to_sequence(se) == cs
                for se in enumerate_sequence_embeddings(b, k, length):
                    assert sequence_to_embedding(embedding_to_sequence(se)) == se


def test_enumeration_counts():
    assert len(enumerate_sequence_embeddings(1, 1, 1)) == 2
    assert len(enumerate_sequence_embeddings(2, 2, 2)) == count_sequences(2, 2, 2)
    for k in (1, 2, 3):
        for b in range(0, 9):
            assert len(enumerate_sequence_embeddings(b, k, 1)) == len(
                enumerate_embeddings(b, k)
            )


def test_spot_sample_wider_capacity():
    # round trips both ways at (balls, capacity, length) = (4, 3, 2)
    sequences = enumerate_sequences(4, 3, 2)
    assert len(sequences) == count_sequences(4, 3, 2)
    for cs in sequences:
        assert embedding_to_sequence(sequence_to_embedding(cs)) == cs
    embeddings = enumerate_sequence_embeddings(4, 3, 2)
    assert len(embeddings) == len(sequences)
    for se in embeddings:
        assert sequence_to_embedding(embedding_to_sequence(se)) == se


def test_embeddings_are_valid_and_unique():
    seen = set()
    for se in enumerate_sequence_embeddings(3, 2, 2):
        assert validate_sequence_embedding(se)
        key = (se.gamma, se.delta)
        assert key not in seen
        seen.add(key)


def test_bookkeeping_violations_rejected():
    # symbol 1 appears once in gamma but delta_1 is empty
    bad = SequenceEmbedding(((0, 1),), (None,), 1)
    verdict = validate_sequence_embedding(bad)
    assert not verdict
    with pytest.raises(InvalidEmbeddingError):
        embedding_to_sequence(bad)
    # delta word too long for its symbol count
    bad2 = SequenceEmbedding(((1, 0),), ((2, 0),), 2)
    assert not validate_sequence_embedding(bad2)
    # gamma word longer than the capacity
    bad3 = SequenceEmbedding(((3, 0),), (None,), 2)
    assert not validate_sequence_embedding(bad3)
    # delta word uses a symbol at or above its beat index
    bad4 = SequenceEmbedding(((0, 2),), ((1, 1),), 2)
    assert not validate_sequence_embedding(bad4)


def test_text_format_round_trip():
    for se in enumerate_sequence_embeddings(3, 2, 2):
        text = format_sequence_embedding(se)
        assert parse_sequence_embedding(text, 2) == se
    with pytest.raises(ValueError):
        parse_sequence_embedding("gamma=01", 2)
    with pytest.raises(ValueError):
        parse_sequence_embedding("gamma=10;delta=e", 2)  # not weakly increasing


def test_single_card_text_format():
    from jugglecards.embeddings import format_embedding, parse_embedding

    for emb in enumerate_embeddings(4, 2):
        assert parse_embedding(format_embedding(emb), 2) == emb
    parsed = parse_embedding("011|1|00|001|11", 6)
    assert parsed.word_strings() == ("011", "1", "00", "001", "11")
    assert parse_embedding("", 2).words == ()


def test_census_at_module_bounds():
    # embedding count equals the transfer count over the documented grid
    for k in (1, 2):
        for length in (1, 2, 3):
            for b in range(7):
                assert len(enumerate_sequence_embeddings(b, k, length)) == (
                    count_sequences(b, k, length)
                ), (b, k, length)
