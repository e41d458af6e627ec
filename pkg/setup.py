"""Setuptools shim; all metadata for sixfold lives in setup.cfg."""
from setuptools import setup

if __name__ == "__main__":
    setup()
