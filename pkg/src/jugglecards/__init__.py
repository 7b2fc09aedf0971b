"""Exact enumeration of multiplex juggling cards and card sequences."""

from .cards import (
    Card,
    Embedding,
    Verdict,
    card_to_embedding,
    embedding_to_card,
    enumerate_cards,
    enumerate_embeddings,
    format_card,
    parse_card,
    render_card,
    validate_card,
)
from .compositions import (
    compositions,
    compositions_bounded,
    compositions_with_parts,
    ext_binomial,
    homogeneous,
    parts_at_least_two,
)
from .embeddings import (
    SequenceEmbedding,
    embedding_to_sequence,
    enumerate_sequence_embeddings,
    sequence_to_embedding,
)
from .errors import (
    BudgetExceededError,
    InvalidCardError,
    InvalidEmbeddingError,
    InvalidSequenceError,
    ProfileMismatchError,
)
from .genfun import (
    card_series,
    infinite_capacity_rational,
    infinite_capacity_recurrence,
    infinite_capacity_series,
    rational_by_binomials,
    rational_by_compositions,
    sequence_series,
)
from .qcalc import apply_homogeneous_operator, q_derivative
from .rational import (
    Polynomial,
    RationalFunction,
    Recurrence,
    expand,
    fit_recurrence,
    reduce,
)
from .sequences import (
    CardSequence,
    TransferMatrix,
    build_transfer_matrix,
    compatible,
    count_periodic,
    count_sequences,
    count_sequences_brute,
    enumerate_sequences,
)
from .series import Profile, TruncatedSeries, extract_z_top

__version__ = "0.1.0"
