"""Altruistic coalition formation games: valuation, stability, search."""

try:
    from ._acfg import *  # noqa: F401,F403  (installed layout)
    from ._acfg import __version__  # noqa: F401
except ImportError:  # build-tree layout: extension sits on sys.path directly
    from _acfg import *  # type: ignore  # noqa: F401,F403
    from _acfg import __version__  # type: ignore # noqa: F401
