"""Small dense primal-dual interior-point method for semidefinite programs.

Solves the pair

  (P)  minimize <C, X>  s.t. <A_i, X> = b_i,  X PSD
  (D)  maximize b^T y   s.t. C - sum_i y_i A_i = S,  S PSD

with block-diagonal C, A_i, X, S. Infeasible-start path following with the
HKM search direction and a predictor step choosing the centering parameter.
Only used as an advisory stage: nothing it returns is trusted before exact
rational confirmation.
"""

import logging

import numpy as np
import scipy.linalg

logger = logging.getLogger(__name__)


class SdpResult:
    """Final iterate of :func:`solve_sdp`.

    Attributes
    ----------

    status
      ``"optimal"`` (all residuals below tolerance), ``"max_iterations"`` or
      ``"numerical_error"``.

    X, S
      Lists of blocks of the primal and dual slack matrices.

    y
      Dual vector.
    """

    def __init__(self, status, X, y, S, primal_objective, dual_objective,
                 iterations, primal_infeasibility, dual_infeasibility):
        self.status = status
        self.X = X
        self.y = y
        self.S = S
        self.primal_objective = primal_objective
        self.dual_objective = dual_objective
        self.iterations = iterations
        self.primal_infeasibility = primal_infeasibility
        self.dual_infeasibility = dual_infeasibility

    @property
    def converged(self):
        return self.status == "optimal"

    def __repr__(self):
        return (
            "SdpResult(%s, iterations=%d, pobj=%.3g, dobj=%.3g, pinf=%.1e, dinf=%.1e)"
            % (
                self.status,
                self.iterations,
                self.primal_objective,
                self.dual_objective,
                self.primal_infeasibility,
                self.dual_infeasibility,
            )
        )


def _inner(blocks_a, blocks_b):
    return sum(float(np.sum(a * b)) for a, b in zip(blocks_a, blocks_b))


def _apply_constraints(A, blocks):
    """The vector (<A_i, X>)_i."""
    return sum(np.einsum("kij,ij->k", A_b, X_b) for A_b, X_b in zip(A, blocks))


def _combine(A, y):
    """The blocks of sum_i y_i A_i."""
    return [np.einsum("k,kij->ij", y, A_b) for A_b in A]


def _max_step(X, dX):
    """Largest alpha with X + alpha*dX PSD (X positive definite), per block."""
    alpha = np.inf
    for X_b, dX_b in zip(X, dX):
        if X_b.shape[0] == 0:
            continue
        L = np.linalg.cholesky(X_b)
        L_inv = scipy.linalg.solve_triangular(L, np.eye(L.shape[0]), lower=True)
        smallest = np.linalg.eigvalsh(L_inv @ dX_b @ L_inv.T)[0]
        if smallest < 0:
            alpha = min(alpha, -1.0 / smallest)
    return alpha


def _symmetrize(M):
    return 0.5 * (M + M.T)


def solve_sdp(C, A, b, tolerance=1e-8, max_iterations=80, step_backoff=0.95):
    """Solve a block-diagonal semidefinite program.

    Parameters
    ----------

    C
      List of symmetric blocks (2D arrays).

    A
      List, one entry per block, of 3D arrays of shape (m, n_b, n_b): the
      blocks of the m constraint matrices.

    b
      Array of length m.

    tolerance
      Target for the relative primal and dual infeasibilities and the
      relative duality gap.

    max_iterations
      Iteration cap.

    step_backoff
      Fraction of the step to the boundary of the cone taken each iteration.
    """
    b = np.asarray(b, dtype=float)
    m = b.shape[0]
    sizes = [C_b.shape[0] for C_b in C]
    total = sum(sizes)
    norm_b = np.linalg.norm(b)
    norm_C = np.sqrt(sum(np.sum(C_b ** 2) for C_b in C))
    norm_A = max(
        [np.sqrt(sum(np.sum(A_b[k] ** 2) for A_b in A)) for k in range(m)] or [1.0]
    )
    xi = max(10.0, np.sqrt(total), (1 + norm_b) / (1 + norm_A) * np.sqrt(total))
    eta = max(10.0, np.sqrt(total), norm_C, norm_A)
    X = [xi * np.eye(n) for n in sizes]
    S = [eta * np.eye(n) for n in sizes]
    y = np.zeros(m)
    status = "max_iterations"
    iteration = 0
    pobj = dobj = pinf = dinf = np.inf

    for iteration in range(1, max_iterations + 1):
        rp = b - _apply_constraints(A, X)
        Ay = _combine(A, y)
        Rd = [C_b - S_b - Ay_b for C_b, S_b, Ay_b in zip(C, S, Ay)]
        gap = _inner(X, S)
        mu = gap / total
        pobj = _inner(C, X)
        dobj = float(b @ y)
        pinf = np.linalg.norm(rp) / (1 + norm_b)
        dinf = np.sqrt(sum(np.sum(R ** 2) for R in Rd)) / (1 + norm_C)
        relgap = abs(pobj - dobj) / (1 + abs(pobj) + abs(dobj))
        logger.debug(
            "iteration %d: pobj=%.6g dobj=%.6g pinf=%.1e dinf=%.1e gap=%.1e",
            iteration, pobj, dobj, pinf, dinf, relgap,
        )
        if max(pinf, dinf, relgap) < tolerance:
            status = "optimal"
            break
        try:
            S_inv = [np.linalg.inv(S_b) for S_b in S]
            schur = np.zeros((m, m))
            for A_b, X_b, Si_b in zip(A, X, S_inv):
                n = A_b.shape[1]
                if n == 0:
                    continue
                B = X_b[None, :, :] @ A_b @ Si_b[None, :, :]
                schur += A_b.reshape(m, n * n) @ B.reshape(m, n * n).T
            schur = _symmetrize(schur)
            XRdSi = [X_b @ R_b @ Si_b for X_b, R_b, Si_b in zip(X, Rd, S_inv)]
            base_rhs = b + _apply_constraints(A, XRdSi)
            Ainv_term = _apply_constraints(A, S_inv)
            try:
                factor = scipy.linalg.cho_factor(schur)

                def solve(rhs):
                    return scipy.linalg.cho_solve(factor, rhs)

            except np.linalg.LinAlgError:

                def solve(rhs):
                    return np.linalg.lstsq(schur, rhs, rcond=None)[0]

            def direction(sigma):
                dy = solve(base_rhs - sigma * mu * Ainv_term)
                Ady = _combine(A, dy)
                dS = [R_b - Ady_b for R_b, Ady_b in zip(Rd, Ady)]
                dX = [
                    _symmetrize(sigma * mu * Si_b - X_b - X_b @ dS_b @ Si_b)
                    for Si_b, X_b, dS_b in zip(S_inv, X, dS)
                ]
                return dX, dy, dS

            dX, dy, dS = direction(0.0)
            alpha_p = min(1.0, _max_step(X, dX))
            alpha_d = min(1.0, _max_step(S, dS))
            predicted = _inner(
                [X_b + alpha_p * d for X_b, d in zip(X, dX)],
                [S_b + alpha_d * d for S_b, d in zip(S, dS)],
            ) / total
            sigma = min(1.0, max(0.0, predicted / mu) ** 3)
            dX, dy, dS = direction(sigma)
            alpha_p = min(1.0, step_backoff * _max_step(X, dX))
            alpha_d = min(1.0, step_backoff * _max_step(S, dS))
        except np.linalg.LinAlgError as err:
            logger.debug("interior point stopped: %s", err)
            status = "numerical_error"
            break
        X = [X_b + alpha_p * d for X_b, d in zip(X, dX)]
        S = [S_b + alpha_d * d for S_b, d in zip(S, dS)]
        y = y + alpha_d * dy
        if not all(np.all(np.isfinite(X_b)) for X_b in X) or not np.all(
            np.isfinite(y)
        ):
            status = "numerical_error"
            break

    return SdpResult(
        status, X, y, S, pobj, dobj, iteration, float(pinf), float(dinf)
    )
