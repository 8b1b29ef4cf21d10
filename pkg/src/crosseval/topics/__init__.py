"""Topic models (LDA, HDP) and topic-distribution similarity."""

from .hdp import HdpModel, fit_hdp, infer_hdp_distribution
from .io import load_model, save_model
from .lda import LdaModel, build_vocabulary, fit_lda, infer_lda_distribution
from .similarity import topic_similarity


def infer_topic_distribution(model, tokens):
    """Dispatch inference on a fitted LDA or HDP model."""
    if isinstance(model, LdaModel):
        return infer_lda_distribution(model, tokens)
    if isinstance(model, HdpModel):
        return infer_hdp_distribution(model, tokens)
    raise TypeError(f"not a fitted topic model: {type(model)!r}")


__all__ = [
    "LdaModel",
    "HdpModel",
    "fit_lda",
    "fit_hdp",
    "infer_lda_distribution",
    "infer_hdp_distribution",
    "infer_topic_distribution",
    "topic_similarity",
    "build_vocabulary",
    "save_model",
    "load_model",
]
