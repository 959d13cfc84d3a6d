"""Factor linear maps on n x n matrices into Jordan multiplication operators."""
