"""
- :mod:`spoverma.algebra` defines the alphabet, weights, shapes and the matrix realization of spo(4|1).
- :mod:`spoverma.tableaux` enumerates and orders column-strict and KN tableaux.
- :mod:`spoverma.verma` relates b-vectors, Verma vectors and KN tableaux.
- :mod:`spoverma.modulespace` expands Verma vectors in the tensor module and computes exact ranks.
- :mod:`spoverma.verify` runs the verification suites.
- :mod:`spoverma.cli` is the ``spoverma`` command line tool.
"""
__title__ = 'spoverma'
__author__ = 'spoverma developers'
__version__ = "0.1.0"
