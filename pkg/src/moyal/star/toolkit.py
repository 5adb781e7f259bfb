from moyal.errors import MoyalError
from moyal.star.base import StarAlgorithm
from moyal.star.config import Algorithm, StarConfig
from moyal.star.direct import DirectQuadrature
from moyal.star.shifted import ShiftedQuadrature
from moyal.star.tensor import TensorPhaseIFFT


class StarToolkit:
    def __init__(self, config: StarConfig):
        self.config = config

    def get_algorithms(self) -> list[StarAlgorithm]:
        return [
            TensorPhaseIFFT(),
            ShiftedQuadrature(),
            DirectQuadrature(refine=self.config.refine),
        ]

    def get_algorithm(self, algorithm: Algorithm | str | None = None) -> StarAlgorithm:
        wanted = Algorithm(algorithm or self.config.algorithm)
        for candidate in self.get_algorithms():
            if candidate.name == wanted.value:
                return candidate
        raise MoyalError(f"no star algorithm named {wanted.value}")
