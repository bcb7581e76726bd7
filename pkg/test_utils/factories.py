# -*- coding: utf-8 -*-
"""
Factories for the pmcuts tests.
"""
import factory
from faker import Factory as FakerFactory

from pmcuts.enums import EdgeState
from pmcuts.graphs.formats import GraphRecord
from pmcuts.graphs.multigraph import MultiGraph, PartialOrientation
from pmcuts.graphs.named import named_graph
from pmcuts.search import SearchProblem

FAKER = FakerFactory.create()
FAKER.seed_instance(1729)


# pylint: disable=no-member, invalid-name
class MultiGraphFactory(factory.Factory):
    """
    Factory class for MultiGraph, K4 unless told otherwise.
    """

    class Meta:
        """
        Meta for ``MultiGraph``.
        """

        model = MultiGraph

    n = 4
    edges = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


# pylint: disable=no-member, invalid-name
class NamedGraphFactory(factory.Factory):
    """
    Factory class for the graphs of `pmcuts.graphs.named`.
    """

    class Meta:
        """
        Meta for ``MultiGraph``.
        """

        model = MultiGraph

    class Params:
        name = 'k4'

    n = factory.LazyAttribute(lambda x: named_graph(x.name).n)
    edges = factory.LazyAttribute(lambda x: named_graph(x.name).edges)


# pylint: disable=no-member, invalid-name
class PartialOrientationFactory(factory.Factory):
    """
    Factory class for PartialOrientation; defaults to a random full orientation of K4.
    """

    class Meta:
        """
        Meta for ``PartialOrientation``.
        """

        model = PartialOrientation

    host = factory.SubFactory(MultiGraphFactory)
    state = factory.LazyAttribute(
        lambda x: tuple(
            FAKER.random_element(elements=(EdgeState.FORWARD, EdgeState.BACKWARD)) for _ in range(x.host.m)
        )
    )


# pylint: disable=no-member, invalid-name
class GraphRecordFactory(factory.Factory):
    """
    Factory class for GraphRecord.
    """

    class Meta:
        """
        Meta for ``GraphRecord``.
        """

        model = GraphRecord

    index = factory.Sequence(lambda n: n)
    source = factory.LazyAttribute(lambda x: 'factory:{}'.format(x.index + 1))
    graph = factory.SubFactory(MultiGraphFactory)


# pylint: disable=no-member, invalid-name
class SearchProblemFactory(factory.Factory):
    """
    Factory class for SearchProblem on the Petersen graph.
    """

    class Meta:
        """
        Meta for ``SearchProblem``.
        """

        model = SearchProblem

    host = factory.SubFactory(NamedGraphFactory, name='petersen')
    restrict_to_edge = None
