"""Zeno-like measurement dynamics on the double Jaynes-Cummings system."""

try:
    from ._qzeno import *  # noqa: F401,F403
except ImportError:  # plain cmake build: extension sits on sys.path directly
    from _qzeno import *  # noqa: F401,F403
