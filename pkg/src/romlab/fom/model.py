"""Semidiscrete full-order models: interface and shared machinery.

A model represents the parametric ODE system

    E du/dt = A u + f(u, mu) + B(t, mu),    u(0, mu) = u0(mu)

obtained from a finite-difference discretization.  Both benchmarks have
E = identity and A = 0, but the interface keeps them explicit so the
projection and residual code stays generic.

Besides full-field evaluation, a model supports *sampled* ("gappy")
evaluation of f and its Jacobian at a subset of rows, given the state only
at the stencil closure of those rows.  Hyper-reduced ROMs rely on this to
keep their online cost independent of n.
"""

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp


@dataclass
class SamplePlan:
    """Precomputed index bookkeeping for gappy evaluation of f.

    ``rows`` are the requested state rows, ``closure`` the sorted superset of
    state indices needed to evaluate f there.  Model subclasses attach their
    own local index arrays (positions into ``closure``) as extra attributes.
    """

    rows: np.ndarray
    closure: np.ndarray


class FomModel:
    """Base class; subclasses implement the nonlinearity and its Jacobian."""

    n = None
    grid = None
    parameter_bounds = ()
    strict_bounds = False

    # --- linear part (identity mass, zero stiffness for both benchmarks) ---

    def apply_E(self, x):
        return x

    def apply_A(self, x):
        return np.zeros_like(x)

    def E_matrix(self):
        return sp.identity(self.n, format="csr")

    def A_matrix(self):
        return sp.csr_matrix((self.n, self.n))

    # --- problem data, provided by subclasses ---

    def eval_f(self, u, mu):
        raise NotImplementedError

    def eval_B(self, t, mu):
        raise NotImplementedError

    def jac_f(self, u, mu):
        """Sparse Jacobian of f at u (csr)."""
        raise NotImplementedError

    def u0(self, mu):
        raise NotImplementedError

    # --- sampled evaluation -------------------------------------------------

    def stencil_closure(self, rows):
        """State indices needed to evaluate f at ``rows`` (superset of rows)."""
        raise NotImplementedError

    def sample_plan(self, rows):
        raise NotImplementedError

    def f_sampled(self, plan, u_closure, mu):
        """f at plan.rows from state values at plan.closure."""
        raise NotImplementedError

    def jac_f_sampled(self, plan, u_closure, mu):
        """Dense (len(rows), len(closure)) Jacobian block of f."""
        raise NotImplementedError

    # --- parameter handling ---------------------------------------------

    def validate_mu(self, mu):
        mu = np.atleast_1d(np.asarray(mu, dtype=float))
        if self.strict_bounds:
            for k, (lo, hi) in enumerate(self.parameter_bounds):
                if not (lo <= mu[k] <= hi):
                    raise ValueError(
                        f"parameter component {k}={mu[k]} outside [{lo}, {hi}]"
                    )
        return mu


def positions_in(closure, indices):
    """Positions of ``indices`` inside the sorted array ``closure``."""
    pos = np.searchsorted(closure, indices)
    if not np.array_equal(closure[pos], indices):
        raise ValueError("indices not contained in closure")
    return pos
