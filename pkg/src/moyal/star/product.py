import logging

from moyal.geometry import ThetaMatrix
from moyal.grids import SampledField
from moyal.star.base import Operand
from moyal.star.config import StarConfig
from moyal.star.toolkit import StarToolkit

_LOGGER = logging.getLogger(__name__)


def twisted_product(f: Operand, g: Operand, theta: ThetaMatrix, cfg: StarConfig) -> SampledField:
    algorithm = StarToolkit(cfg).get_algorithm()
    _LOGGER.debug("Twisted product with %s", algorithm.name)
    return algorithm.run(f, g, theta, cfg.spec)
