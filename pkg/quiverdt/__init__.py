from quiverdt.exceptions import *  # noqa: F401 F403
from quiverdt.motivic import (  # noqa: F401
    DTResult,
    check_numerical_koszulness,
    dt_invariants,
    g_character,
    motivic_series,
    poincare_A,
)
from quiverdt.qseries import MSeries, QRat, pleth_exp, pleth_log  # noqa: F401
from quiverdt.quiver import Quiver, parse_quiver  # noqa: F401
from quiverdt.result import Verdict  # noqa: F401
from quiverdt.version import __version__  # noqa: F401
