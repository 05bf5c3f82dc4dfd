"""Left-sequential propositional terms with side effects: evaluation-tree
semantics, normal forms, tree decompositions, and equivalence checking."""

from .terms import (Atom, AndFull, AndSC, Cond, FalseConst, Not, OrFull,
                    OrSC, ParseError, Term, TrueConst, Var, atom_occurrences,
                    classify_language, is_ct_term, is_ft_term, is_st_term,
                    parse, parse_open, print_term)
from .evaltree import (FALSE, HOLE, HOLE1, HOLE2, Leaf, Node, TRUE, Trace,
                       Tree, ce, contains_leaf, depth, fe, format_tree,
                       is_perfect, leaf_count, memorize, parse_tree, replace,
                       replay, se, sorted_traces, to_dot, traces,
                       tree_from_traces)
from .normalize import (NormalCategory, NormalFormError, classify_fnf,
                        classify_snf, fel_fc, fel_fn, fel_normalize,
                        is_normal, scl_fc, scl_fn, scl_normalize)
from .decompose import (Decomposition, InversionError, fel_cd, fel_dd, fel_g,
                        fel_tsd, scl_cd, scl_dd, scl_g, scl_tsd)
from .equiv import (CATALOGS, Catalog, Counterexample, EquationSchema,
                    EquivResult, GuardExceeded, SchemaReport, catalog_table,
                    check_schema, equal_ffel, equal_fscl, equal_mixed,
                    find_witness, gen_term, substitute, translate_h)

__all__ = [name for name in dir() if not name.startswith("_")]
