"""Decision trees, neighbourhood functions, and bar constructions on Baire space."""

try:
    from ._baire import *  # noqa: F401,F403
    from ._baire import __doc__  # noqa: F401
except ImportError:  # in-tree test runs load the extension straight off the build tree
    from _baire import *  # noqa: F401,F403
