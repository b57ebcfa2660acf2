"""Pairbot: paired anonymous robots on the triangular grid.

Simulator, exhaustive ASYNC explorer and coating-set analysis for the
marching and object-coating algorithms.
"""
from .algorithms import ALGORITHM_NAMES, Algorithm, coating_compute, coating_dir, get_algorithm, marching_compute
from .analysis import (
    check_coating_solved,
    check_marching_progress,
    coating_set,
    non_coating_set,
    surface_set,
)
from .engine import (
    AsyncRandom,
    AsyncState,
    Event,
    FSync,
    SSync,
    is_terminated,
    make_scheduler,
    replay,
    run,
    step_async,
    step_fsync,
    step_ssync,
)
from .explore import explore
from .geometry import Point, dist, label_offset, neighbors, next_label
from .model import (
    Configuration,
    PairState,
    Scene,
    Snapshot,
    apply_move,
    is_line_formed,
    load_scene,
    pair_state,
    parse_scene,
    take_snapshot,
)
from .trace import Trace

__version__ = "0.1.0"
