"""k-fermions, braided Grassmann variables, fractional supercoherent states and a
Z_k-graded supersymmetric oscillator, built as small dense matrices."""
from .qnum import Deformation, principal_sqrt, qexp, qfactorial, qnumber, root_qfactorial
from .operators import Basis, Operator, StateVector
from .kfermion import build_boson, build_fk, verify_fk_relations
from .grassmann import GrassmannAlgebra, GrassmannElement, verify_realization
from .fracsusy import build_all, spectrum
from .reports import CheckReport, SpectrumReport

__version__ = "0.1.0"
