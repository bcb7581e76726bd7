"""
Serializers for pmcuts certificates and reports.

This module depends on serializers provided by django-rest-framework.
"""

import math

from rest_framework import serializers

from pmcuts import constants
from pmcuts.choices import CertificateKind
from pmcuts.enums import EdgeState
from pmcuts.exceptions import GraphFormatError
from pmcuts.graphs.formats import write_graph6, write_sidecar
from pmcuts.graphs.multigraph import Bond, MultiGraph, PartialOrientation
from pmcuts.search import Certificate


def infinite_as_text(value):
    """
    Return `value` with `math.inf` spelled as the string "inf" for JSON output.
    """
    if isinstance(value, float) and math.isinf(value):
        return 'inf'
    return value


def _graph6_or_none(graph: MultiGraph):
    return write_graph6(graph) if graph.is_simple() else None


def _sidecar_line_or_none(orientation: PartialOrientation):
    if orientation is None or not orientation.host.is_simple():
        return None
    return write_sidecar(orientation).splitlines()[1]


class BondSerializer(serializers.Serializer):  # pylint: disable=abstract-method
    """
    Bond serializer: the side containing the smaller vertices and the edge ids of the cut.
    """

    side = serializers.SerializerMethodField()
    edges = serializers.SerializerMethodField()

    def get_side(self, obj):
        return sorted(obj.side)

    def get_edges(self, obj):
        return sorted(obj.edges)


class GraphSerializer(serializers.Serializer):  # pylint: disable=abstract-method
    """
    Multigraph serializer; `edges[i]` is the endpoint pair of edge id `i`.
    """

    n = serializers.IntegerField()
    edges = serializers.SerializerMethodField()
    graph6 = serializers.SerializerMethodField()

    def get_edges(self, obj):
        return [list(pair) for pair in obj.edges]

    def get_graph6(self, obj):
        return _graph6_or_none(obj)


class OrientationSerializer(serializers.Serializer):  # pylint: disable=abstract-method
    """
    Partial orientation serializer with the per edge id states (0 undirected, 1 forward, 2 backward).
    """

    graph = GraphSerializer(source='host')
    state = serializers.SerializerMethodField()
    sidecar = serializers.SerializerMethodField()

    def get_state(self, obj):
        return [int(value) for value in obj.state]

    def get_sidecar(self, obj):
        return _sidecar_line_or_none(obj)


class EmbeddingSerializer(serializers.Serializer):  # pylint: disable=abstract-method
    """
    Plane embedding as adjacency with rotation: `rotation[v]` lists the neighbours of `v` counterclockwise and
    `darts[v]` the matching dart ids (`2 e` at the first endpoint of edge `e`, `2 e + 1` at the second).
    """

    graph = GraphSerializer(source='host')
    rotation = serializers.SerializerMethodField()
    darts = serializers.SerializerMethodField()

    def get_rotation(self, obj):
        return [
            [obj.host.edges[dart >> 1][1 - (dart & 1)] for dart in darts]
            for darts in obj.rotation
        ]

    def get_darts(self, obj):
        return [list(darts) for darts in obj.rotation]


class CertificateSerializer(serializers.Serializer):  # pylint: disable=abstract-method
    """
    Certificate serializer following the versioned certificate schema.

    `graph` is the graph6 line and `orientation` the `O:` sidecar line when the host is simple; `edges` and
    `state` always carry the host and orientation keyed by edge id, which witnesses refer to.
    """

    schema_version = serializers.SerializerMethodField()
    kind = serializers.CharField()
    n = serializers.SerializerMethodField()
    edges = serializers.SerializerMethodField()
    graph = serializers.SerializerMethodField()
    orientation = serializers.SerializerMethodField()
    state = serializers.SerializerMethodField()
    witnesses = serializers.SerializerMethodField()
    good_matching = serializers.SerializerMethodField()
    a_arc = serializers.SerializerMethodField()
    stats = serializers.DictField()

    def get_schema_version(self, obj):  # pylint: disable=unused-argument
        return constants.CERTIFICATE_SCHEMA_VERSION

    def get_n(self, obj):
        return obj.host.n

    def get_edges(self, obj):
        return [list(pair) for pair in obj.host.edges]

    def get_graph(self, obj):
        return _graph6_or_none(obj.host)

    def get_orientation(self, obj):
        return _sidecar_line_or_none(obj.orientation)

    def get_state(self, obj):
        if obj.orientation is None:
            return None
        return [int(value) for value in obj.orientation.state]

    def get_witnesses(self, obj):
        return [
            {'matching': sorted(edges), 'bond': BondSerializer(bond).data}
            for edges, bond in obj.witnesses
        ]

    def get_good_matching(self, obj):
        return sorted(obj.good_matching) if obj.good_matching is not None else None

    def get_a_arc(self, obj):
        if obj.a_arc is None:
            return None
        edge_id, tail, head = obj.a_arc
        return {'edge': edge_id, 'tail': tail, 'head': head}


def load_certificate(data) -> Certificate:
    """
    Rebuild a certificate from the output of `CertificateSerializer`.
    """
    version = data.get('schema_version')
    if version != constants.CERTIFICATE_SCHEMA_VERSION:
        raise GraphFormatError('Unsupported certificate schema version {!r}'.format(version))
    if data.get('kind') not in CertificateKind.values:
        raise GraphFormatError('Unknown certificate kind {!r}'.format(data.get('kind')))
    host = MultiGraph(n=data['n'], edges=tuple(tuple(pair) for pair in data['edges']))
    orientation = None
    if data.get('state') is not None:
        orientation = PartialOrientation(host=host, state=tuple(EdgeState(value) for value in data['state']))
    witnesses = tuple(
        (
            frozenset(witness['matching']),
            Bond(side=frozenset(witness['bond']['side']), edges=frozenset(witness['bond']['edges'])),
        )
        for witness in data.get('witnesses', [])
    )
    a_arc = data.get('a_arc')
    good_matching = data.get('good_matching')
    return Certificate(
        kind=data['kind'],
        host=host,
        orientation=orientation,
        witnesses=witnesses,
        good_matching=frozenset(good_matching) if good_matching is not None else None,
        a_arc=(a_arc['edge'], a_arc['tail'], a_arc['head']) if a_arc else None,
        stats=dict(data.get('stats', {})),
    )


class VerificationResultSerializer(serializers.Serializer):  # pylint: disable=abstract-method
    """
    Verification result serializer.
    """

    valid = serializers.BooleanField()
    reason = serializers.CharField(allow_blank=True)
    exhaustive = serializers.BooleanField()


class GraphAnalysisSerializer(serializers.Serializer):  # pylint: disable=abstract-method
    """
    Serializer for the per graph report of `analyze_graphs`; infinite values are written as "inf".
    """

    source = serializers.CharField()
    n = serializers.IntegerField()
    m = serializers.IntegerField()
    cubic = serializers.BooleanField()
    bipartite = serializers.BooleanField()
    planar = serializers.BooleanField()
    girth = serializers.SerializerMethodField()
    edge_connectivity = serializers.IntegerField()
    vertex_connectivity = serializers.IntegerField()
    cyclic_connectivity = serializers.SerializerMethodField()
    perfect_matchings = serializers.IntegerField()
    min_cut_in_perfect_matching = serializers.SerializerMethodField()
    hamiltonian = serializers.BooleanField()
    faces = serializers.IntegerField(allow_null=True)

    def get_girth(self, obj):
        return infinite_as_text(obj.girth)

    def get_cyclic_connectivity(self, obj):
        return infinite_as_text(obj.cyclic_connectivity)

    def get_min_cut_in_perfect_matching(self, obj):
        return infinite_as_text(obj.min_cut_in_perfect_matching)


class CampaignItemSerializer(serializers.Serializer):  # pylint: disable=abstract-method
    """
    Serializer for one campaign item.
    """

    index = serializers.IntegerField()
    source = serializers.CharField()
    status = serializers.CharField()
    reason = serializers.CharField(allow_blank=True)
    graph = serializers.SerializerMethodField()
    orientation = serializers.SerializerMethodField()
    certificate = serializers.SerializerMethodField()
    analysis = serializers.SerializerMethodField()
    details = serializers.DictField()

    def get_graph(self, obj):
        return _graph6_or_none(obj.graph) if obj.graph is not None else None

    def get_orientation(self, obj):
        return _sidecar_line_or_none(obj.orientation)

    def get_certificate(self, obj):
        return CertificateSerializer(obj.certificate).data if obj.certificate is not None else None

    def get_analysis(self, obj):
        return GraphAnalysisSerializer(obj.analysis).data if obj.analysis is not None else None


class CampaignReportSerializer(serializers.Serializer):  # pylint: disable=abstract-method
    """
    Serializer for a campaign report with its status counts and exit code.
    """

    command = serializers.CharField()
    counts = serializers.DictField()
    exit_code = serializers.IntegerField()
    items = CampaignItemSerializer(many=True)
