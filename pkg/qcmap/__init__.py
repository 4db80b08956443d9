"""qcmap - quantum circuit mapping toolkit."""

__version__ = "0.1.0"
