"""Finite automata networks under update schedules.

Simulation of networks under arbitrary update schedules, exhaustive
checks of commutativity, dynamical locality, bijectivity and idempotence,
and the structure theory of globally commutative Boolean networks.
"""

from .commutativity import (
    CommutativityVerdict,
    check_commutativity,
    check_global_commutative_fast,
    influences,
    schedule_invariance,
    support,
)
from .core import (
    Network,
    NetworkError,
    Schedule,
    StateSpaceTooLarge,
    apply,
    compose,
    decode,
    delta,
    encode,
    power,
    schedule_network,
    update,
    update_network,
    update_word,
)
from .dynamics import (
    ComponentDecomposition,
    OrbitReport,
    ScopeVerdict,
    check_bijective,
    check_dynamically_local,
    check_idempotent,
    components,
    orbit_analysis,
    pi,
)

__version__ = "0.1.0"
