"""Incidence bialgebras of finitary coloured operads, in exact arithmetic.

Constructs the incidence bialgebra of an operad window, computes
comultiplications and symmetry factors through finite-groupoid cardinality,
and verifies the generalized Faa di Bruno formula

    Delta(G) = sum over colour words w of  G^w (x) g_w

coefficient-exactly, reproducing the classical, noncommutative,
multivariate, tree, and degenerate instances.
"""

from .algebra import (IDENTITY, MODES, NONSYMMETRIC, POINTED, SYMMETRIC,
                      GeneratorSymbol, Monomial, Rational, Series, Tensor2,
                      Window, coefficient, mono_mul, series_mul, series_pow,
                      tensor_mul, unit_series, unit_tensor)
from .bialgebra import (DeltaResult, check_coassoc, check_counit_laws,
                        check_multiplicativity, counit, counit_series, delta,
                        delta_gen, delta_word_direct, segal_check)
from .errors import (BadSpecFile, CapMismatch, CompletedSeriesCounit,
                     EmptyColourSet, IllegalProduct, ModeMismatch,
                     NotAnAction, NotFiniteDecomposition, OperadError,
                     OracleScaleExceeded, UnknownBuiltin, UnknownObject,
                     UnknownOperation, WindowExceeded)
from .green import (FdBReport, GreenFunction, bell_oracle,
                    c2_equivalence_check, classical_crosscheck,
                    classical_eq1_terms, cut_oracle, fdb_check, g_part,
                    green, green_power, set_partitions)
from .groupoid import (FinGroupoid, GroupoidFunctor, action_groupoid,
                       discrete, disjoint_union, fiber_cardinality_vector,
                       homotopy_fiber, indiscrete_group_component,
                       one_object_group, pullback, split_check)
from .library import (BUILTINS, PTreeGenerator, builtin, comm_plus,
                      free_binary, free_binary_nullary, free_operad,
                      monoid_operad, multivariate, nat_plus,
                      nonsym_semimonoid, pointed_demo, pointed_module)
from .operad import (IsoClass, LocalFinitenessReport, Operation, OperadData,
                     ValidationReport, aut_order_word, enumerate_classes,
                     factorization_groupoid, iso_classify,
                     local_finiteness_report, two_level_classes,
                     validate_operad)
from .specfile import export_operad, load_operad, load_operad_file

__version__ = "0.1.0"
