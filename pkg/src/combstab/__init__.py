"""Polarized stability of syzygy bundles on comb-like curves of compact type."""

from .catalog import (Destabilizer, DestabilizerKind, RestrictionVerdict, build_catalog,
                      restriction_kernel, restriction_slope_check)
from .curve import CombCurve, arithmetic_genus, chi_structure_sheaf
from .errors import ParseError, TheoremViolation, ValidationError
from .feasibility import (Certificate, CertificateTerm, FeasibilityResult, LinearConstraint,
                          StabilityReport, Status, TheoremHypotheses, build_constraint_system,
                          decide, grid_oracle, grid_oracle_scan, strong_instability_report,
                          theorem_hypotheses, verify_certificate)
from .instance import Instance, dumps_instance, loads_instance, parse_instance
from .polarization import (Polarization, Relation, SlopeComparison, Verdict, VerdictKind,
                           compare_slopes, slope, verdict_at)
from .sheaves import (GeneratedPairData, MultiSheaf, base_kernel_from_intersections,
                      check_intersections, chi_bundle, chi_nonnegative, kernel_rank,
                      lemma_kernels_nonzero, syzygy_multisheaf)

__version__ = "0.1.0"
