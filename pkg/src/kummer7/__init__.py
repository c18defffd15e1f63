"""Point-count verification of the Kummer Calabi-Yau threefold built from the
elliptic modular surface for Gamma_1(7)."""

__version__ = "0.1.0"
