"""Text and JSON renderings of a decomposition"""

from typing import List, Optional

from decomposer.models import Decomposition, VerificationReport
from decomposer.schemas import DecompositionDocument, PartSchema, VerificationSchema
from family.models import BoundParams, SetFamily


def _flag(value: bool) -> str:
    return "true" if value else "false"


def render_text(
    family: SetFamily,
    decomposition: Decomposition,
    bound: int,
    verified: bool,
    verbose: bool = False,
) -> str:
    """Header, one line per part, then provenance comments"""
    header = f"parts={decomposition.part_count} bound={bound} verified={_flag(verified)}"
    if decomposition.compacted_from is not None:
        header += f" compacted_from={decomposition.compacted_from}"
    lines: List[str] = [header]
    for i, part in enumerate(decomposition.parts):
        line = f"part {i}: " + " ".join(str(m) for m in part)
        if verbose:
            line += "  # " + " ".join(str(family[m]) for m in part)
        lines.append(line)
    if decomposition.kernel_size is not None:
        lines.append(f"# kernel_size={decomposition.kernel_size} trace_count={decomposition.trace_count}")
    for i, label in enumerate(decomposition.labels):
        if label:
            lines.append(f"# part {i} traces: " + " ".join(str(t) for t in label))
    return "\n".join(lines) + "\n"


def render_json(
    family: SetFamily,
    decomposition: Decomposition,
    params: BoundParams,
    bound: int,
    report: Optional[VerificationReport],
    verbose: bool = False,
) -> str:
    """Single JSON document with the same fields as the text format"""
    verification = None
    if report is not None:
        verification = VerificationSchema(
            covers=report.covers,
            disjoint=report.disjoint,
            parts_ok=report.parts_ok,
            within_bound=report.within_bound,
            failing_part=report.failing_part,
            witness=list(report.witness) if report.witness is not None else None,
        )
    document = DecompositionDocument(
        parts=decomposition.part_count,
        bound=bound,
        verified=report.verified if report is not None else True,
        s=params.s,
        k=params.k,
        u=params.u,
        ell=params.ell,
        family_size=len(family),
        kernel_size=decomposition.kernel_size,
        trace_count=decomposition.trace_count,
        compacted_from=decomposition.compacted_from,
        verification=verification,
        part_list=[
            PartSchema(
                index=i,
                members=list(part),
                traces=[list(t.elements) for t in label],
                sets=[list(family[m].elements) for m in part] if verbose else None,
            )
            for i, (part, label) in enumerate(zip(decomposition.parts, decomposition.labels))
        ],
    )
    return document.model_dump_json(indent=2, exclude_none=True) + "\n"
