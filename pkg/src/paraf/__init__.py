"""Classical and paracoherent semantics for abstract argumentation frameworks."""

from .af import ArgSet, Framework, attacked_set, is_conflict_free, range_of, validate
from .errors import (
    BindingError,
    DispatchError,
    InputError,
    ParafError,
    ParseError,
    PreconditionError,
    SizeError,
)
from .generators import fixtures, gen_cycle, gen_radial_star, gen_random, gen_srp, radial_star_family
from .lp import Program, answer_sets, minimal_models
from .paraco import af_to_program, mes_models, projected_models, seq_models, sst_models, to_extensions
from .reasoning import Query, Task, credulous, skeptical, solve
from .semantics import ExtensionSet, Semantics, extensions, is_extension
from .stabilizer import (
    global_minimal_stabilizers,
    is_stabilizer,
    minimal_stabilizers_of,
    paracoherent_extensions,
    paracoherent_via_shadow,
)

__all__ = [
    "ArgSet", "BindingError", "DispatchError", "ExtensionSet", "Framework", "InputError",
    "ParafError", "ParseError", "PreconditionError", "Query", "Semantics", "SizeError", "Task",
    "attacked_set", "credulous", "extensions", "global_minimal_stabilizers", "is_conflict_free",
    "is_extension", "is_stabilizer", "minimal_stabilizers_of", "paracoherent_extensions",
    "paracoherent_via_shadow", "range_of", "skeptical", "solve", "validate",
    "fixtures", "gen_cycle", "gen_radial_star", "gen_random", "gen_srp", "radial_star_family",
    "Program", "answer_sets", "minimal_models",
    "af_to_program", "mes_models", "projected_models", "seq_models", "sst_models", "to_extensions",
]
