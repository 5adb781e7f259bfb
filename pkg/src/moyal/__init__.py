"""Moyal star products, twisted convolutions and Gelfand-Shilov norm diagnostics."""

from moyal.const import VERSION

__version__ = VERSION
