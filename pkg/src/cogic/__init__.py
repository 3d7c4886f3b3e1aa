"""Rate regions for cognitive interference channels."""
__version__ = "0.1.0"
