"""Finite categories generated from quivers, with decision procedures,
functors, natural transformations and double-pushout graph rewriting."""
