"""monodromy-atlas: marked trivalent graphs, modular subgroups and elliptic surface families."""

__version__ = "1.0.0"
