"""
Numeric tolerances used by the floating-point verification layer, read
from the bundled suite catalogue.
"""

from pathlib import Path
from typing import Any, Dict

import yaml

CATALOGUE_PATH = Path(__file__).parent.parent / "data" / "suites.yaml"


def load_catalogue(path: Path = CATALOGUE_PATH) -> Dict[str, Any]:
    """
    Returns the parsed suite catalogue.
    """
    with open(path, "r", encoding="utf-8") as f:
        return yaml.safe_load(f)


_catalogue = load_catalogue()
TOLERANCES: Dict[str, float] = {
    k: float(v) for k, v in _catalogue["tolerances"].items()
}

# distance below which an argument counts as sitting on a pole
POLE_DISTANCE = TOLERANCES["pole-distance"]

# |t|^2 + |r|^2 = 1
UNITARITY = TOLERANCES["unitarity"]

# shape-constraint and symmetry ratios of amplitudes
AMPLITUDE_RATIO = TOLERANCES["amplitude-ratio"]

# located t poles against i(h - n)
POLE_LOCATION = TOLERANCES["pole-location"]

# KdV residual for soliton counts where exact cancellation is skipped
KDV_NUMERIC = TOLERANCES["kdv-numeric"]

# quadrature against closed form norms
ORTHOGONALITY = TOLERANCES["orthogonality"]
MULTI_ORTHOGONALITY = TOLERANCES["multi-orthogonality"]
NORM_RATIO = TOLERANCES["norm-ratio"]

# five point Schrodinger residuals, normalized by max |psi|
FD_BASE = TOLERANCES["fd-base"]
FD_DEFORMED = TOLERANCES["fd-deformed"]

# reflection identity of the complex log gamma
REFLECTION = TOLERANCES["reflection"]

# two evaluations of one potential
POTENTIAL_AGREEMENT = TOLERANCES["potential-agreement"]

MIN_GRID_POINTS = int(_catalogue["limits"]["min-grid-points"])
MIN_NODE_SAMPLES = int(_catalogue["limits"]["min-node-samples"])
