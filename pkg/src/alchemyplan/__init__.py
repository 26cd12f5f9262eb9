"""Latent-chemistry POMDP benchmark, stochastic tree-search planner, and dynamics models.

The package is organised around five pieces:

* :mod:`alchemyplan.env` -- the episodic hidden-chemistry environment,
* :mod:`alchemyplan.planner` -- tree search with chance nodes over any dynamics model,
* :mod:`alchemyplan.models` -- ground-truth, exact-belief, and neural dynamics models,
* :mod:`alchemyplan.dataset` -- offline trajectory generation and the ATD1 file format,
* :mod:`alchemyplan.evaluate` -- agents, paired evaluation, and score reports.

Hot numeric kernels are JIT-compiled with numba when available; set
``ALCHEMYPLAN_DISABLE_NUMBA=1`` to force the pure-numpy fallback.
"""

from alchemyplan.config import EnvConfig, SearchConfig, reduced_config
from alchemyplan.env import Env
from alchemyplan.planner import plan

__all__ = ["EnvConfig", "SearchConfig", "reduced_config", "Env", "plan"]

__version__ = "0.1.0"
