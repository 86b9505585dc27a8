"""Black-box classical group algorithms: root SL2(q)-subgroup systems.

The library realizes, at desk scale, a Monte-Carlo pipeline for finite
classical groups of odd characteristic given only by a multiplication
oracle: random element generation, involution-centralizer machinery,
probabilistic type recognition, and construction of the family of root
SL2(q)-subgroups attached to the nodes of the extended Dynkin diagram
(an extended Curtis-Tits or Phan system), together with an empirical
harness for the probability floors the method relies on.
"""

from .errors import (
    BadInput,
    MonteCarloExhausted,
    RecognitionFailed,
    RootSL2Error,
    VerificationFailed,
)

__all__ = [
    "BadInput",
    "MonteCarloExhausted",
    "RecognitionFailed",
    "RootSL2Error",
    "VerificationFailed",
]

__version__ = "0.1.0"
