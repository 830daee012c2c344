"""Analysis reports.

The machine report is a JSON-ready dict; rationals are written as ``"p/q"``
strings.  The human table is rendered from that dict alone, so every number
a reader sees is also in the machine output.
"""

from fractions import Fraction

from .catalog import build_catalog, restriction_slope_check
from .curve import arithmetic_genus, chi_structure_sheaf
from .feasibility import grid_oracle, strong_instability_report
from .instance import Instance, instance_to_dict
from .polarization import verdict_at
from .sheaves import chi_bundle, chi_nonnegative, lemma_kernels_nonzero, syzygy_multisheaf

SCHEMA_VERSION = 1


def q(x) -> str:
    return str(Fraction(x))


def _polarization(w):
    return None if w is None else [q(x) for x in w.weights]


def _certificate(cert):
    if cert is None:
        return None
    coeffs, bound, strict = cert.combined()
    return {
        "terms": [{"provenance": sorted(t.provenance), "constraint": str(t.constraint),
                   "multiplier": q(t.multiplier)} for t in cert.terms],
        "combined_coefficient": q(coeffs[0]),
        "combined_bound": q(bound),
        "strict": strict,
        "summary": cert.summary(),
    }


def run_analyze(instance: Instance, oracle_denominator=None) -> dict:
    curve, pair = instance.curve, instance.pair
    m = syzygy_multisheaf(curve, pair)
    stab = strong_instability_report(curve, pair)
    hyp = stab.hypotheses

    lemma = None
    if instance.intersection_dims is not None:
        lemma = lemma_kernels_nonzero(instance.intersection_dims, curve.n)

    report = {
        "schema_version": SCHEMA_VERSION,
        "instance": instance_to_dict(instance),
        "invariants": {
            "arithmetic_genus": arithmetic_genus(curve),
            "chi_structure_sheaf": chi_structure_sheaf(curve),
            "chi_bundle": chi_bundle(curve, pair),
            "chi_syzygy": m.chi,
            "syzygy_rank": pair.syzygy_rank,
            "total_degree": pair.total_degree,
            "ratio": q(hyp.ratio),
            "threshold": hyp.threshold,
            "chi_syzygy_nonnegative": chi_nonnegative(curve, pair),
        },
        "restriction_checks": [
            {"component": i, "kernel_rank": pair.kernel_ranks[i - 1],
             "degree": pair.degrees[i - 1],
             "verdict": restriction_slope_check(curve, pair, i).value}
            for i in range(1, curve.n + 1)
        ],
        "catalog": [
            {"tag": e.tag, "kind": e.kind.value, "component": e.source_component,
             "multirank": list(e.sheaf.multirank), "chi": e.sheaf.chi, "label": e.sheaf.label}
            for e in stab.catalog
        ],
        "constraints": [
            {"provenance": sorted(c.provenance), "coefficients": [q(x) for x in c.coefficients],
             "bound": q(c.bound), "strict": c.strict, "text": str(c)}
            for c in stab.system
        ],
        "feasibility": {
            "status": stab.result.status.value,
            "witness": _polarization(stab.witness),
            "verdict_at_witness": (verdict_at(stab.witness, curve, pair, stab.catalog).kind.value
                                   if stab.witness is not None else None),
            "certificate": _certificate(stab.certificate),
        },
        "hypotheses": {
            "ratio": q(hyp.ratio),
            "threshold": hyp.threshold,
            "ratio_exceeds_threshold": hyp.ratio_exceeds_threshold,
            "kernels_nonzero": hyp.kernels_nonzero,
            "lemma_intersections_nonzero": lemma,
        },
        "verdict": stab.verdict,
        "empty_catalog": not stab.catalog,
        "oracle": None,
    }
    if oracle_denominator is not None:
        report["oracle"] = grid_report(instance, oracle_denominator, stab.result.feasible)
    return report


def grid_report(instance: Instance, denominator: int, decided_feasible=None) -> dict:
    curve, pair = instance.curve, instance.pair
    found = grid_oracle(curve, pair, build_catalog(curve, pair), denominator)
    out = {
        "denominator": denominator,
        "status": "FoundWitness" if found is not None else "NoneFound",
        "witness": _polarization(found),
    }
    if decided_feasible is not None:
        # a grid witness is a real witness; the converse needs a fine enough grid
        out["consistent"] = found is None or decided_feasible
    return out


def feasibility_summary(instance: Instance) -> dict:
    stab = strong_instability_report(instance.curve, instance.pair)
    return {
        "schema_version": SCHEMA_VERSION,
        "status": stab.result.status.value,
        "verdict": stab.verdict,
    }


def _rows(headers, rows):
    table = [headers] + [[str(x) for x in row] for row in rows]
    widths = [max(len(r[i]) for r in table) for i in range(len(headers))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in table]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return lines


def render_table(report: dict, certificate: bool = False) -> str:
    inv = report["invariants"]
    hyp = report["hypotheses"]
    feas = report["feasibility"]
    out = ["Invariants"]
    out += _rows(["quantity", "value"], [
        ["p_a(C)", inv["arithmetic_genus"]],
        ["chi(O_C)", inv["chi_structure_sheaf"]],
        ["chi(E)", inv["chi_bundle"]],
        ["chi(M)", inv["chi_syzygy"]],
        ["rk(M)", inv["syzygy_rank"]],
        ["d", inv["total_degree"]],
        ["d/(l-r)", inv["ratio"]],
        ["n-1", inv["threshold"]],
    ])
    if inv["chi_syzygy_nonnegative"]:
        out.append("warning: chi(M) is not negative")

    out += ["", "Restrictions M|C_i"]
    out += _rows(["component", "t_i", "d_i", "verdict"],
                 [[r["component"], r["kernel_rank"], r["degree"], r["verdict"]]
                  for r in report["restriction_checks"]])

    out += ["", "Catalog"]
    if report["catalog"]:
        out += _rows(["tag", "kind", "multirank", "chi"],
                     [[c["tag"], c["kind"], "(" + ",".join(map(str, c["multirank"])) + ")",
                       c["chi"]] for c in report["catalog"]])
    else:
        out.append("(empty: every restriction is injective on V)")

    out += ["", "Constraints (with sum w_i = 1)"]
    out += ["  " + "+".join(c["provenance"]) + ": " + c["text"] for c in report["constraints"]]

    out += ["", f"Feasibility: {feas['status']}"]
    if feas["witness"] is not None:
        out.append("witness w = (" + ", ".join(feas["witness"]) + ")")
        out.append(f"verdict at witness: {feas['verdict_at_witness']}")
    cert = feas["certificate"]
    if cert is not None:
        out.append(f"certificate: {cert['summary']}")
        if certificate:
            for term in cert["terms"]:
                out.append(f"  {term['multiplier']} x [{term['constraint']}]")

    out += ["", "Theorem hypotheses"]
    out.append(f"  d/(l-r) = {hyp['ratio']} > n-1 = {hyp['threshold']}: "
               f"{hyp['ratio_exceeds_threshold']}")
    out.append(f"  all restriction kernels nonzero: {hyp['kernels_nonzero']}")
    if hyp["lemma_intersections_nonzero"] is not None:
        out.append(f"  two nonzero node intersections: {hyp['lemma_intersections_nonzero']}")

    oracle = report["oracle"]
    if oracle is not None:
        wit = "" if oracle["witness"] is None else " (" + ", ".join(oracle["witness"]) + ")"
        out.append("")
        out.append(f"Grid oracle (D = {oracle['denominator']}): {oracle['status']}{wit}, "
                   f"consistent: {oracle['consistent']}")

    out += ["", f"Verdict: {report['verdict']}"]
    return "\n".join(out) + "\n"
