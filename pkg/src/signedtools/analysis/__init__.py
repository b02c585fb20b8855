"""
Bound checks, lemma checks, exhaustive sweeps and the lower-optimal generator.
"""
