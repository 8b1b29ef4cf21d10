"""crosseval: a cross-lingual LLM evaluation harness.

Three evaluation criteria over multilingual health Q&A benchmarks:
comparative correctness grading, K-sample consistency metrics, and binary
claim verification, backed by a statistics kernel and a human-annotation
validation service.
"""

from ._kernels import BACKEND as KERNEL_BACKEND

__version__ = "0.1.0"

__all__ = ["KERNEL_BACKEND", "__version__"]
