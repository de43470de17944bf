from .derive import (
    band_entries,
    derive_dual_rep,
    linear_relations,
    solve_involution,
    solve_k1,
)
from .free_params import (
    FreeParams,
)
from .notes import (
    Discrepancy,
    TranscriptionNotes,
    compare_printed_derived,
    diff_reps,
    render_notes,
    transcription_notes,
)
from .printed import (
    KnownIssue,
    build_dual_rep_printed,
    known_issues,
    printed_anchor_gamma,
    printed_anchor_u,
    unit_gauge_printed,
)
from .rep import (
    DualRep,
    block_indices,
    block_label,
    dual_spectrum,
    n_blocks,
)
from .similarity import (
    dual_intertwiner,
    intertwiner_space,
    intertwiner_system,
    similarity_to_primal,
    unit_gauge,
    verify_similarity,
)
from .verify import (
    verify_dual_rep,
)
