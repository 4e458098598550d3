"""Public-opinion sentiment analytics.

Ingests opinion documents, enriches them with regions, keywords, and
abstracts, classifies sentiment with a lexicon engine and trainable
models, and serves aggregate analytics over HTTP and a CLI.
"""

__version__ = "0.1.0"

from ._kernels import BACKEND as KERNEL_BACKEND

__all__ = ["KERNEL_BACKEND", "__version__"]
