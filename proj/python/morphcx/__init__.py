"""Type/token ratio and morph-model complexity measures.

Thin re-export of the compiled ``_morphcx`` extension. Report functions
return rendered text; ``*_report(..., format="json")`` output can be passed
to :func:`json.loads`.
"""

from ._morphcx import (
    AlignmentError,
    BigramModel,
    ComplexityMeasures,
    Corpus,
    DecodeError,
    EmptyEventStreamError,
    Error,
    ModelError,
    TypeTokenRatio,
    UndefinedMeasureError,
    ValidationError,
    VocabStats,
    WordContextModel,
    __version__,
    compare_report,
    entropy_report,
    evaluate,
    fit_bigram,
    fit_word_context,
    generate_corpus,
    parse_segmented,
    parse_tokens,
    ttr_percent,
    ttr_report,
    vocab_stats,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
