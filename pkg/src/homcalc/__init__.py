"""homcalc: exact homological invariants of positively graded quotient rings."""

__version__ = "0.1.0"
