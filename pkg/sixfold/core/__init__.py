"""Sixfold core module
"""
from sixfold.core.configuration import Configuration
from sixfold.core.session import Session

__all__ = ["Session", "Configuration"]
