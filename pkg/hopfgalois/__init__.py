"""hopfgalois - exact Hopf-Galois extension kernel with a command-line front end."""

__version__ = "1.0.0"
