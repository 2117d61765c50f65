"""Exact power indices, axiom checks and index-design experiments for simple games."""

from .errors import CapExceededError, InvalidGameError, InvalidInputError, PowerLabError
from .games import (
    DesirabilityRelation,
    SimpleGame,
    WeightedRepresentation,
    are_equivalent,
    coalition,
    critical_players,
    desirability,
    from_minimal_winning,
    from_weighted,
    is_complete,
    is_null_player,
    is_weighted,
    maximal_losing,
    members,
    minimal_winning,
    relabel,
    shift_minimal_winning,
    weighted_game,
)
from .indices import (
    INDICES,
    CountingScheme,
    Selector,
    Transform,
    banzhaf,
    count_index,
    deegan_packel,
    get_index,
    johnston,
    kb_equal_division,
    koenig_braeuninger,
    nucleolus,
    pgi,
    shapley_shubik,
    shift_deegan_packel,
    shift_index,
)

__version__ = "0.1.0"
