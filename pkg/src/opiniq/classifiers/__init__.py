"""Binary sentiment classifiers over word embeddings."""

from .io import ModelFileError, load_classifier, save_classifier
from .lstm import LSTMParams, init_lstm, lstm_cell, lstm_forward, lstm_probability
from .mlp import MLPParams, init_mlp, mlp_forward
from .svm import SVMParams, init_svm, margin
from .train import (
    CLASSIFIER_KINDS,
    ClassifierModel,
    TrainConfig,
    gradient_check,
    predict,
    predict_tokens,
    train,
)

__all__ = [
    "CLASSIFIER_KINDS",
    "ClassifierModel",
    "LSTMParams",
    "MLPParams",
    "ModelFileError",
    "SVMParams",
    "TrainConfig",
    "gradient_check",
    "init_lstm",
    "init_mlp",
    "init_svm",
    "load_classifier",
    "lstm_cell",
    "lstm_forward",
    "lstm_probability",
    "margin",
    "mlp_forward",
    "predict",
    "predict_tokens",
    "save_classifier",
    "train",
]
