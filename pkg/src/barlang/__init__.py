"""Regular data languages over names: bar strings, bar NFAs and their decision procedures."""

from .barnfa import BarNFA, ParseError, compile_rbe, degree, dumps_nfa, loads_nfa, parse_rbe, to_dot
from .barstring import (BarLetter, alpha_equivalent, canonical_form, clean_form, format_bar_string,
                        free_names, is_clean, is_closed, parse_bar_string, unbind)
from .inclusion import BudgetExceeded, InclusionVerdict, equivalence, inclusion, inclusion_bar, inclusion_local
from .models import Fsuba, ForgetfulRA, to_barnfa
from .nominal import PartialRenaming, Transposition
from .rnna import Semantics, SymbolicRnna, accepts

__version__ = "0.1.0"

__all__ = [
    "BarLetter", "BarNFA", "BudgetExceeded", "ForgetfulRA", "Fsuba", "InclusionVerdict",
    "ParseError", "PartialRenaming", "Semantics", "SymbolicRnna", "Transposition",
    "accepts", "alpha_equivalent", "canonical_form", "clean_form", "compile_rbe", "degree",
    "dumps_nfa", "equivalence", "format_bar_string", "free_names", "inclusion", "inclusion_bar",
    "inclusion_local", "is_clean", "is_closed", "loads_nfa", "parse_bar_string", "parse_rbe",
    "to_barnfa", "to_dot", "unbind",
]
