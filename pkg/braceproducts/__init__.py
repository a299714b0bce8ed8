"""
braceproducts is a Python library for computing with brace products of
fibrations with section: graded quasi-Lie algebras of homotopy groups, James
and generalized brace products, the J-homomorphism of clutched sphere
bundles and the rational splitting of their total spaces.

Decisions are returned as qualified verdicts carrying certificates and the
citations of the homotopy-group tables they rest on.
"""
from .version import __version__
from .graded_lie import (FreeGradedLieAlgebra, GradingView, LieElement,
                         LieAlgebraMorphism, bracket, jacobi_defect,
                         adjoint_shift, graded_basis)
from .abelian_groups import FGAbGroup, GroupHomomorphism
from .homotopy_tables import (HomotopyTable, SpaceName, default_table,
                              group_lookup, ingest_table)
from .verdict import Status, Verdict
from .fibration import (SplitFibration, TotalLieAlgebra, FreeLoopFibration,
                        HomotopyClass, assemble_total_lie, james_brace,
                        whitehead_product)
from .clutching import (ClutchingClass, brace_from_clutching,
                        exactness_audit, fibre_equiv_decision,
                        husemoller_rectified, p_map,
                        rational_split_certificate, thom_attaching)
from .j_homomorphism import j_rules_apply
from .decisions import (FibrationDescriptor, analyze_descriptor,
                        h_split_verdict, rational_verdicts,
                        surface_bundle_report)
