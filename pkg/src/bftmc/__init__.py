"""Verification workbench for Byzantine fault tolerant blockchain components."""

from bftmc.core import Params, Message, RecvLedger, thresholds, validate_params

__all__ = ["Params", "Message", "RecvLedger", "thresholds", "validate_params"]
__version__ = "0.1.0"
