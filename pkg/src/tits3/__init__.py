"""Exact construction and verification of composition algebras, H3 Jordan
algebras, the Tits construction and the characteristic-3 superalgebras
(s (x) A) + d_{A,A}.

Arithmetic is exact: GF(p) values live in int64 arrays, Q values in
Fraction arrays.  Entry points are `tits3.catalog.build_target` and the
``tits3`` command line tool.
"""

from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("artifact")
except PackageNotFoundError:  # running from a source tree
    __version__ = "0.1.0"
