"""
Module for storing django choice fields used by pmcuts commands and serializers.
"""
from djchoices import ChoiceItem, DjangoChoices


class CertificateKind(DjangoChoices):
    """
    Kinds of certificates produced by the orientation search.
    """

    OrientationFound = ChoiceItem('orientation-found', 'Orientation found')
    Refuted = ChoiceItem('refuted', 'Refuted')
    GoodMatching = ChoiceItem('good-matching', 'Good matching')
    Vacuous = ChoiceItem('vacuous', 'No perfect matching, vacuous success')
    AllMatchingsCut = ChoiceItem('all-matchings-cut', 'Every perfect matching contains a cut')


class Conjecture(DjangoChoices):
    """
    The eight conjectures of the bipartite / planar / directed cube.
    """

    Tait = ChoiceItem('tait', 'Tait')
    Barnette = ChoiceItem('barnette', 'Barnette')
    Tutte = ChoiceItem('tutte', 'Tutte')
    NeumannLaraPrime = ChoiceItem('nl-prime', 'Neumann-Lara, cubic reformulation')
    HochstaettlerPrime = ChoiceItem('hochstaettler-prime', 'Hochstaettler, cubic reformulation')
    KV = ChoiceItem('kv', 'Bipartite cubic digraphs')
    NeumannLara = ChoiceItem('nl', 'Neumann-Lara')
    Hochstaettler = ChoiceItem('hochstaettler', 'Hochstaettler')


class SearchMode(DjangoChoices):
    """
    Modes of the `search_orientations` command.
    """

    AArc = ChoiceItem('a-arc', 'Can an edge be an a-arc')
    AllPmCut = ChoiceItem('all-pm-cut', 'Every perfect matching contains a directed cut')


class Construction(DjangoChoices):
    """
    Constructions offered by the `construct_graph` command.
    """

    Split = ChoiceItem('split', 'Vertex split')
    Hat = ChoiceItem('hat', 'Hat construction')
    Tilde = ChoiceItem('tilde', 'Tilde construction')
    Orient = ChoiceItem('orient', 'Sink / source completion')
    DPlus = ChoiceItem('dplus', 'Seven vertex replacement')
    ContractTriangle = ChoiceItem('contract-triangle', 'Triangle contraction')
    C4Reduce = ChoiceItem('c4-reduce', 'Four cycle reduction')
    Expand = ChoiceItem('expand', 'Cubic expansion')
    Dual = ChoiceItem('dual', 'Directed plane dual')


# Graph class of every conjecture: (bipartite, planar, directed).
CONJECTURE_CLASSES = {
    Conjecture.Tait: (False, True, False),
    Conjecture.Barnette: (True, True, False),
    Conjecture.Tutte: (True, False, False),
    Conjecture.NeumannLaraPrime: (False, True, True),
    Conjecture.HochstaettlerPrime: (False, False, True),
    Conjecture.KV: (True, False, True),
    Conjecture.NeumannLara: (False, True, True),
    Conjecture.Hochstaettler: (False, False, True),
}


class CampaignStatus(DjangoChoices):
    """
    Outcome of one input of a campaign.
    """

    Holds = ChoiceItem('holds', 'Holds')
    Counterexample = ChoiceItem('counterexample', 'Counterexample')
    Reduced = ChoiceItem('reduced', 'Covered by a reduction filter')
    Skipped = ChoiceItem('skipped', 'Skipped')
    Incomplete = ChoiceItem('incomplete', 'Incomplete, a size bound was hit')
    Error = ChoiceItem('error', 'Error')
