"""Principal autoparallel analysis for point-cloud manifolds."""

try:
    from ._papa import *  # noqa: F401,F403
except ImportError:
    # Build-tree layout: the extension sits on sys.path as a top-level
    # module instead of inside the package.
    from _papa import *  # noqa: F401,F403

__version__ = "0.1.0"
