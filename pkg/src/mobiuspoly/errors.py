class InputError(ValueError):
    """Rejected input: bad poset data, rank axioms, automorphism, or file."""
