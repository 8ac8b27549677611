from .channels import LocalChannel
from .channels import apply_channel
from .channels import heisenberg
from .channels import local_dephasing
from .geometry import hs_distance
from .geometry import hyperplane_residual
from .ppt import is_ppt
from .ppt import mix_with_noise
from .ppt import partial_transpose
from .ppt import ppt_threshold
from .sampling import random_channel
from .sampling import random_commuting_family
from .sampling import random_maximally_entangled
from .sampling import random_observable
from .sampling import random_operator
from .sampling import random_pure_state
from .sampling import random_separable
from .sampling import random_unitary
from .schmidt import SchmidtDecomposition
from .schmidt import is_maximally_entangled
from .schmidt import schmidt
from .schmidt import transfer_to_B
from .schmidt import transferred_operator
from .simulator import check_commuting
from .simulator import common_eigenbasis
from .simulator import separable_simulator
from .states import DensityMatrix
from .states import Observable
from .states import PureState
from .states import SeparableState
from .states import expectation
from .states import maximally_entangled
from .states import pauli
from .states import pauli_eigenprojector
from .states import phi_plus
from .states import projector
from .states import reduced_state
from .witness import ProductEnsemble
from .witness import WitnessSuite
from .witness import classical_prediction
from .witness import classical_terms
from .witness import witness_suite
from .witness import witness_sweep

__all__ = [
    "DensityMatrix",
    "LocalChannel",
    "Observable",
    "ProductEnsemble",
    "PureState",
    "SchmidtDecomposition",
    "SeparableState",
    "WitnessSuite",
    "apply_channel",
    "check_commuting",
    "classical_prediction",
    "classical_terms",
    "common_eigenbasis",
    "expectation",
    "heisenberg",
    "hs_distance",
    "hyperplane_residual",
    "is_maximally_entangled",
    "is_ppt",
    "local_dephasing",
    "maximally_entangled",
    "mix_with_noise",
    "partial_transpose",
    "pauli",
    "pauli_eigenprojector",
    "phi_plus",
    "ppt_threshold",
    "projector",
    "random_channel",
    "random_commuting_family",
    "random_maximally_entangled",
    "random_observable",
    "random_operator",
    "random_pure_state",
    "random_separable",
    "random_unitary",
    "reduced_state",
    "schmidt",
    "separable_simulator",
    "transfer_to_B",
    "transferred_operator",
    "witness_suite",
    "witness_sweep",
]
