"""Core graph, spectral, exact and leader-controllability components."""
