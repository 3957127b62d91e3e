"""Motion forecasting with chain-of-thought scene annotation.

Subpackages:
    ingest      trajectory loading, windowing, maneuver labels, splits
    annotation  scene serialization, 4-step dialogue protocol, teacher clients
    student     lightweight language model distillation and scoring
    net         encoders, cross-modal attention, ensemble + Gaussian decoder
    metrics     training losses and trajectory evaluation metrics
    cli         experiment commands (synth / annotate / distill / train / eval / baselines)
"""

__version__ = "0.1.0"
