import math

import numpy as np
import pytest

from moyal.logmath import (
    SignedLog,
    log_abs,
    log_double_factorial,
    log_factorial,
    log_multi_power,
    signed_logsumexp,
    xlogx,
)


class TestFactorials:
    @pytest.mark.parametrize("k, value", [(-1, 1), (0, 1), (1, 1), (5, 15), (6, 48), (9, 945)])
    def test_double_factorial(self, k, value):
        assert log_double_factorial(k) == pytest.approx(math.log(value), abs=1e-12)

    def test_large_double_factorial_is_finite(self):
        # 399!! overflows a double
        assert math.isfinite(log_double_factorial(399))
        assert log_double_factorial(399) > 709

    def test_log_factorial(self):
        assert log_factorial(10) == pytest.approx(math.log(3628800))

    def test_zero_power_convention(self):
        assert xlogx(0) == 0.0
        assert log_multi_power((0, 2), 0.5) == pytest.approx(0.5 * 2 * math.log(2))


class TestSignedLog:
    def test_round_trip(self):
        assert SignedLog.from_value(-3.5).value() == pytest.approx(-3.5)
        assert SignedLog.from_value(0.0).sign == 0

    def test_product(self):
        product = SignedLog.from_value(-2.0) * SignedLog.from_value(4.0)
        assert product.value() == pytest.approx(-8.0)
        assert (SignedLog.zero() * SignedLog.from_value(4.0)).sign == 0

    def test_signed_sum(self):
        total = signed_logsumexp([math.log(2.0), math.log(3.0)], [1, -1])
        assert total.sign == -1
        assert total.log == pytest.approx(0.0, abs=1e-14)

    def test_exact_cancellation_is_zero(self):
        assert signed_logsumexp([1.0, 1.0], [1, -1]).sign == 0

    def test_sum_of_huge_magnitudes(self):
        total = signed_logsumexp([2000.0, 2000.0], [1, 1])
        assert total.log == pytest.approx(2000.0 + math.log(2.0))

    def test_log_abs_of_zero(self):
        out = log_abs(np.array([0.0, -math.e]))
        assert out[0] == -math.inf
        assert out[1] == pytest.approx(1.0)
