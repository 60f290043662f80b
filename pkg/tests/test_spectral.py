import math

import numpy as np
import pytest

from latticegas.chain import Boundary, Direction, Family, transfer_chain
from latticegas.compat import StepMatrix, compose
from latticegas.spectral import ConvergenceError, dominant_eigenvalue
from latticegas.statespace import StateKind, enumerate_states


def free(n):
    return enumerate_states(StateKind.FREE, n)


class TestKnownRoots:
    def test_narrowest_quadratic_strip(self):
        # 2-site path slices: [[1,1,1],[1,0,1],[1,1,0]] has Perron
        # root 1 + sqrt(2), the silver ratio.
        chain = transfer_chain(Family.QUADRATIC, Direction.COLUMNWISE, 1)
        res = dominant_eigenvalue(chain)
        assert res.value == pytest.approx(1.0 + math.sqrt(2.0), abs=1e-12)
        lam = res.value
        assert abs(lam**3 - lam**2 - 3 * lam - 1) < 1e-9

    @pytest.mark.parametrize(
        "family, direction, width",
        [
            (Family.QUADRATIC, Direction.COLUMNWISE, 3),
            (Family.QUADRATIC, Direction.ROWWISE, 4),
            (Family.CROSSED, Direction.COLUMNWISE, 3),
            (Family.CROSSED, Direction.ROWWISE, 4),
            (Family.AZTEC, Direction.COLUMNWISE, 3),
            (Family.AZTEC, Direction.ROWWISE, 3),
            (Family.TRUNCATED_SQUARE, Direction.COLUMNWISE, 2),
            (Family.TRUNCATED_SQUARE, Direction.ROWWISE, 3),
        ],
    )
    def test_agrees_with_dense_symmetric_solver(self, family, direction, width):
        boundary = Boundary.CYCLIC if direction is Direction.ROWWISE else Boundary.OPEN
        chain = transfer_chain(family, direction, width, boundary)
        composite = compose(chain.steps).dense
        assert np.allclose(composite, composite.T)
        reference = float(np.linalg.eigvalsh(composite).max())
        res = dominant_eigenvalue(chain)
        assert res.value == pytest.approx(reference, abs=1e-10)

    def test_factored_matches_composed(self):
        chain = transfer_chain(Family.TRUNCATED_SQUARE, Direction.COLUMNWISE, 3)
        a = dominant_eigenvalue(chain.steps)
        b = dominant_eigenvalue([compose(chain.steps)])
        assert a.value == pytest.approx(b.value, rel=1e-12)


class TestResultContract:
    def test_vector_is_positive_and_normalized(self):
        res = dominant_eigenvalue(transfer_chain(Family.QUADRATIC, Direction.COLUMNWISE, 4))
        assert np.all(res.vector > 0)
        assert np.linalg.norm(res.vector) == pytest.approx(1.0, abs=1e-12)

    def test_residual_meets_tolerance(self):
        res = dominant_eigenvalue(
            transfer_chain(Family.CROSSED, Direction.COLUMNWISE, 5), tol=1e-13
        )
        assert res.residual <= 1e-13
        assert res.iterations >= 2

    def test_tighter_tolerance_takes_more_iterations(self):
        chain = transfer_chain(Family.AZTEC, Direction.COLUMNWISE, 4)
        loose = dominant_eigenvalue(chain, tol=1e-6)
        tight = dominant_eigenvalue(chain, tol=1e-13)
        assert tight.iterations >= loose.iterations
        assert tight.value == pytest.approx(loose.value, rel=1e-5)


class TestFailureModes:
    def test_periodic_matrix_never_converges(self):
        # eigenvalues +/- sqrt(2) tie in modulus, so the iterate orbits
        two = free(1)
        flip = StepMatrix(two, two, ((0, 2), (1, 0)))
        with pytest.raises(ConvergenceError):
            dominant_eigenvalue([flip], max_iterations=500)

    def test_iteration_budget_enforced(self):
        chain = transfer_chain(Family.QUADRATIC, Direction.COLUMNWISE, 2)
        with pytest.raises(ConvergenceError):
            dominant_eigenvalue(chain, max_iterations=1)

    def test_rejects_rectangular_chain(self):
        chain = transfer_chain(Family.AZTEC, Direction.COLUMNWISE, 3)
        with pytest.raises(ValueError):
            dominant_eigenvalue(chain.steps[:1])

    def test_rejects_empty_chain(self):
        with pytest.raises(ValueError):
            dominant_eigenvalue([])

    def test_rejects_bad_tolerance(self):
        chain = transfer_chain(Family.QUADRATIC, Direction.COLUMNWISE, 2)
        with pytest.raises(ValueError):
            dominant_eigenvalue(chain, tol=0.0)

    def test_nilpotent_matrix_reported_degenerate(self):
        two = free(1)
        shift = StepMatrix(two, two, ((0, 1), (0, 0)))
        with pytest.raises(ValueError, match="degenerate"):
            dominant_eigenvalue([shift])
