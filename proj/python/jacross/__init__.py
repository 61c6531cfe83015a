"""Jacobi polynomials and spectral sums on compact rank-one symmetric spaces."""

from ._jacross import *  # noqa: F401,F403
from ._jacross import __doc__  # noqa: F401
