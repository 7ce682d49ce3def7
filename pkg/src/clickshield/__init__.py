"""Clickbait headline detection and personalized blocking toolkit."""

__version__ = "1.0.0"
