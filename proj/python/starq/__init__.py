"""Exact Grassmann/Clifford algebra with configurable star products."""

try:
    from ._starq import *  # noqa: F401,F403
    from ._starq import __doc__ as _doc
except ImportError:  # local builds put the extension on PYTHONPATH directly
    from _starq import *  # noqa: F401,F403
    from _starq import __doc__ as _doc

__doc__ = _doc
