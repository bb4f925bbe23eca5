"""etlogic — a desk-scale toolkit for four-valued non-Fregean logic."""

__version__ = "0.1.0"
