"""ZX canonical forms of Clifford encoders and stabilizer tableaus."""

from .canonical import (
    DiagramError,
    ZxcfDiagram,
    canonicalize,
    decompile,
    enumerate_zxcf,
    from_json,
    strip_locals,
    to_json,
    validate_zxcf,
)
from .circuit import CliffordCircuit, EncoderCircuit, Gate, synthesize_encoder
from .counting import count_tableaus
from .pauli import PauliString, parse_pauli
from .tableau import StabilizerTableau, groups_equal, parse_tableau

__version__ = "0.1.0"
