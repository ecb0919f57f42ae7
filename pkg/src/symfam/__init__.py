"""Exact symmetric-function engine for cyclically induced character families.

Core layers: partitions and number theory, the power-sum ring (symfunc),
Schur conversion (schur), the psi-indexed families (repmodules), truncated
plethystic series (series), the tableau oracle (tableaux), and the check
registry (verify). service exposes everything over HTTP; cli is a thin client.
"""

__version__ = "0.1.0"
