"""Exact weight combinatorics for mod p Serre weights of GL3(F_q).

The package covers the GL3 weight lattice and its f-fold restriction of
scalars, alcove regions of restricted weights, formal characters of Weyl,
simple and tilting modules, the tensor decomposition of ``L(lambda) x L(a13)``,
H-eigenspace supports, and a verdict engine comparing Ext^1 over
``GL3(O_L)/Z_1`` with Ext^1 over ``GL3(F_q)``.
"""

from gl3ext.weights import Root, Weight, WeylElement, parse_tuple, parse_weight

__all__ = ["Root", "Weight", "WeylElement", "parse_tuple", "parse_weight"]
__version__ = "0.1.0"
