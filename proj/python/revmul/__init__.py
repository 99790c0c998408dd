"""Base-n reverse multiples: numbers X with k*X = reverse(X) for 1 < k < n."""

try:
    from ._revmul import *  # noqa: F401,F403  (installed package layout)
    from ._revmul import __version__  # noqa: F401
except ImportError:  # in-tree builds put the extension on sys.path directly
    from _revmul import *  # noqa: F401,F403
    from _revmul import __version__  # noqa: F401
