"""majid-roots - exact 3-cocycles, twisted doubles and root data over finite abelian groups."""

__version__ = "0.1.0"
