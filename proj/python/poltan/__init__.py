"""Exact toolkit for split power ideals and their deformation spaces."""

try:
    from ._poltan import *  # noqa: F401,F403  (installed layout)
except ImportError:  # in-tree build: extension on sys.path
    from _poltan import *  # noqa: F401,F403
