"""hexswarm: deterministic target-seeking robot swarms on a hexagonal grid.

Three controllers (genetic, ant-colony, bee-colony) steer robots that share
knowledge over a range-limited multi-hop ad hoc network. Everything is
seedable and replays bit-identically.
"""

from .aco import AcoParams, DeadEndError, PheromoneField, decide_move_aco, transition_probs
from .bco import (
    BcoParams,
    DanceBoard,
    SwarmExtinct,
    Task,
    choose_task,
    dance_strength,
    decide_move_bco,
    elect_leader,
)
from .comms import (
    DanceAdvert,
    Message,
    PositionReport,
    TargetReport,
    TrackerLog,
    comm_neighbors,
    connectivity_components,
    flood_round,
    flood_until_quiet,
)
from .config import ConfigError, ScenarioConfig, parse_config
from .engine import (
    MoveIntent,
    Robot,
    RunResult,
    SimState,
    derive_rng,
    init_state,
    resolve_conflicts,
    run,
    spawn_step,
    tick,
)
from .ga import (
    Chromosome,
    GaParams,
    Observation,
    crossover,
    decide_move_ga,
    fitness,
    mutate,
    tournament_select,
)
from .hexworld import (
    Direction,
    HexCoord,
    Move,
    World,
    WorldConfigError,
    accessible_neighbors,
    hex_distance,
    make_world,
    step,
)

__version__ = "0.1.0"
