# -*- coding: utf-8 -*-
"""
Enums used by the pmcuts graph types.
"""
from enum import Enum, IntEnum


class EdgeState(IntEnum):
    """
    Direction state of one edge of a partial orientation.

    FORWARD means the stored endpoint `a` is the tail and `b` the head of the arc.
    """

    UNDIRECTED = 0
    FORWARD = 1
    BACKWARD = 2

    def reversed(self):
        """
        Return the state describing the opposite arc.
        """
        return {
            EdgeState.UNDIRECTED: EdgeState.UNDIRECTED,
            EdgeState.FORWARD: EdgeState.BACKWARD,
            EdgeState.BACKWARD: EdgeState.FORWARD,
        }[self]


class VertexRole(Enum):
    """
    Role of a vertex of a fully oriented graph with respect to its out-degree.
    """

    SOURCE = 'source'
    SINK = 'sink'
    INTERNAL = 'internal'
