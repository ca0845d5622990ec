"""pcgraph command line interface."""
