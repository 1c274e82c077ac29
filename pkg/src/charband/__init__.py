"""Symmetric-function characters of Drinfel'd-Kohno Lie algebras and of the
Bousfield-Kan E^1-page for spaces of long embeddings."""

__version__ = "0.1.0"
