"""Exact construction of sl(3,O) as operators on the Albert algebra, with its gradings and subalgebras."""

__version__ = "0.1.0"
