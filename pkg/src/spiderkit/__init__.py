"""Spider graph recognition from degree counts, spider degree sequences and P4-sparse checks."""

from .degseq import (
    DegreeSequence,
    counts_to_list,
    havel_hakimi_realize,
    is_graphical,
    list_to_counts,
    parse_sequence,
    reverse_counts,
)
from .graph import (
    Graph,
    GraphParseError,
    complement,
    connected_components,
    degree,
    degree_sequence,
    induced_subgraph,
    parse_graph,
    read_graph,
    serialize_graph,
    write_graph,
)
from .kernels import BACKEND
from .p4sparse import P4SparseResult, count_induced_p4, induces_p4, is_p4_sparse_bruteforce, is_p4_sparse_recursive
from .spider import (
    GuardError,
    SpiderClass,
    SpiderPartition,
    Verdict,
    brute_force_recognize,
    classify,
    recognize_thick,
    recognize_thin,
    verify_thick,
    verify_thin,
)
from .spiderseq import (
    ThinWitness,
    construct_thick_spider,
    construct_thin_spider,
    thick_spider_realizable,
    thin_spider_realizable,
)

__version__ = "0.1.0"
