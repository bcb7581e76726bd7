"""
Graph representation, file formats, structural predicates and canonical labelling.
"""
from pmcuts.graphs.multigraph import Bond, MultiGraph, PartialOrientation, PlaneEmbedding

__all__ = ['Bond', 'MultiGraph', 'PartialOrientation', 'PlaneEmbedding']
