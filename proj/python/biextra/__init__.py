"""Biextraspecial group calculator: dent spaces, composition calculus, Out(G)."""

try:
    from ._biextra import *  # noqa: F401,F403  (wheel layout)
except ImportError:  # plain-CMake builds leave _biextra next to the build tree
    from _biextra import *  # noqa: F401,F403

__version__ = "0.1.0"
