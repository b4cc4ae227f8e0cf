"""Exact reconstruction and verification of planar Brauer trees for the
weight-1 unipotent blocks of the dihedral, H3 and H4 q-analogue series."""

__version__ = "0.1.0"
