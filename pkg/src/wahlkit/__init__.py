"""Exact computations around Wahl singularities on stable surfaces.

Modules: qsing (continued fractions, Wahl strings), pic (Picard lattices of
rational surfaces), ade (root systems and weights), flopsim (flop reduction),
localint (curve germs and intersection numbers), modulidim (dimension counts),
verify (acceptance checks) and cli.
"""
__version__ = "0.1.0"
