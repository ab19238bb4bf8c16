"""Attribute relevance in formal contexts.

Build formal contexts, enumerate their concept lattices, measure exact
relative relevance of attribute sets, approximate it through context
entropies, and compare subset-selection strategies (exhaustive, greedy,
entropy-guided, random). See the ``demos/`` scripts for guided tours and
the ``fcarel`` command for the CLI.
"""

from .context import ClarificationMap, FormalContext, ScaleKind, make_scale
from .datasets import greedy_trap, water4, water6
from .entropy import (
    EntropyKind,
    entropy,
    object_entropy,
    object_entropy_exact,
    scale_entropy,
    shannon_object_entropy,
)
from .errors import (
    ConceptCapacityError,
    DegenerateContextError,
    DegenerateEntropyError,
    FcaError,
    FormatError,
    SelectionSizeError,
    UnclarifiedContextError,
)
from .experiment import ExperimentRecord, plot_records, records_to_csv, run_experiment
from .io import parse_context, read_context_file, write_context, write_context_file
from .lattice import (
    Concept,
    ConceptSet,
    enumerate_concepts,
    extent_labels,
    extent_sum,
    surviving_concepts,
)
from .relevance import (
    Relevance,
    is_irreducible,
    is_relevant,
    is_relevant_to_context,
    relative_relevance,
    relevance_from_concepts,
)
from .selection import (
    RandomBaseline,
    SelectionResult,
    era_score,
    select_era,
    select_exhaustive,
    select_imrs,
    select_random,
)

__version__ = "0.1.0"

__all__ = [
    "ClarificationMap",
    "Concept",
    "ConceptCapacityError",
    "ConceptSet",
    "DegenerateContextError",
    "DegenerateEntropyError",
    "EntropyKind",
    "ExperimentRecord",
    "FcaError",
    "FormalContext",
    "FormatError",
    "RandomBaseline",
    "Relevance",
    "ScaleKind",
    "SelectionResult",
    "SelectionSizeError",
    "UnclarifiedContextError",
    "entropy",
    "enumerate_concepts",
    "era_score",
    "extent_labels",
    "extent_sum",
    "greedy_trap",
    "is_irreducible",
    "is_relevant",
    "is_relevant_to_context",
    "make_scale",
    "object_entropy",
    "object_entropy_exact",
    "parse_context",
    "plot_records",
    "read_context_file",
    "records_to_csv",
    "relative_relevance",
    "relevance_from_concepts",
    "run_experiment",
    "scale_entropy",
    "select_era",
    "select_exhaustive",
    "select_imrs",
    "select_random",
    "shannon_object_entropy",
    "surviving_concepts",
    "water4",
    "water6",
    "write_context",
    "write_context_file",
]
