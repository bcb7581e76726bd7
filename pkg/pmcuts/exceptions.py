# -*- coding: utf-8 -*-
"""
Exceptions that will be used by pmcuts to indicate different errors.
"""


class GraphFormatError(Exception):
    """
    Exception to raise when a graph6, sparse6, digraph6, planar_code or sidecar record is malformed.
    """

    def __init__(self, message, offset=None):
        """
        Keep the byte offset of the offending input alongside the message.
        """
        if offset is not None:
            message = '{} (byte offset {})'.format(message, offset)
        super().__init__(message)
        self.offset = offset


class UnsupportedFormatError(Exception):
    """
    Exception to raise when a graph cannot be represented in the requested format.
    """


class ContractViolationError(Exception):
    """
    Exception to raise when an operation is called outside of its precondition.
    """


class UnknownEdgeError(ContractViolationError):
    """
    Exception to raise when an edge id does not belong to the host graph.
    """


class BoundExceededError(Exception):
    """
    Exception to raise when an exhaustive computation would exceed its configured size bound.
    """


class InvalidEmbeddingError(Exception):
    """
    Exception to raise when a rotation system does not describe a plane embedding.
    """


class NotPlanarError(Exception):
    """
    Exception to raise when a planar embedding is requested for a non planar graph.
    """


class WiringCollisionError(Exception):
    """
    Exception to raise when a gadget wiring would create loops, parallel edges or wrong degrees.
    """


class InvalidCommandOptionsError(Exception):
    """
    Exception to raise when incorrect command options are provided.
    """
