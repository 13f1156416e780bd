"""scikit-learn style front end.

:class:`DiscreteEntropy` is a transformer: ``fit`` builds the spectral data
for one family and degree, ``transform`` maps points ``lambda`` to the
generalised entropy ``S_n(lambda)``. It clones, pickles and composes with
pipelines like any other estimator.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from ._validation import check_option, check_positive_int
from .closedform import closed_form_values
from .entropy import entropy_at_lambda, entropy_table
from .families import FAMILIES, FamilySpec
from .spectrum import decompose

__all__ = ["DiscreteEntropy"]

_CLOSED_FORM_KIND = {"chebyshev1": 1, "chebyshev2": 2}


class DiscreteEntropy(TransformerMixin, BaseEstimator):
    """Discrete Shannon entropy of an orthonormal polynomial family.

    Parameters
    ----------
    family : str, default="chebyshev1"
        One of ``chebyshev1``, ``chebyshev2``, ``jacobi``, ``pollaczek``, ``meixner``.
    n : int, default=10
        Degree; the entropies live on the ``n`` zeros of ``p_n``.
    alpha, beta : float, optional
        Jacobi parameters, or ``beta`` for Meixner.
    theta, a : float, optional
        Pollaczek parameters.
    c : float, optional
        Meixner parameter in (0, 1).
    method : {"spectral", "closed_form"}, default="spectral"
        ``closed_form`` is available for the two Chebyshev kinds only.
    include_dual : bool, default=False
        Also compute the row (dual) entropies. Spectral method only.

    Attributes
    ----------
    family_spec_ : FamilySpec
    zeros_ : ndarray of shape (n,)
        Zeros of ``p_n`` in ascending order.
    christoffel_ : ndarray of shape (n,)
    entropy_ : ndarray of shape (n,)
        ``S_{n,j}`` aligned with ``zeros_``.
    dual_entropy_ : ndarray of shape (n,) or None
    decomposition_ : SpectralDecomposition or None
        ``None`` for the closed-form method.

    Examples
    --------
    >>> est = DiscreteEntropy(family="chebyshev2", n=3).fit()
    >>> round(float(est.entropy_[1]), 12) == round(float(np.log(2)), 12)
    True
    """

    def __init__(
        self,
        family="chebyshev1",
        n=10,
        alpha=None,
        beta=None,
        theta=None,
        a=None,
        c=None,
        method="spectral",
        include_dual=False,
    ):
        self.family = family
        self.n = n
        self.alpha = alpha
        self.beta = beta
        self.theta = theta
        self.a = a
        self.c = c
        self.method = method
        self.include_dual = include_dual

    def _family_spec(self):
        check_option(self.family, "family", FAMILIES)
        return FamilySpec.from_name(
            self.family, alpha=self.alpha, beta=self.beta, theta=self.theta, a=self.a, c=self.c
        )

    def fit(self, X=None, y=None):
        """Compute zeros, weights and entropies. ``X`` and ``y`` are ignored."""
        n = check_positive_int(self.n, "n")
        check_option(self.method, "method", ("spectral", "closed_form"))
        spec = self._family_spec()
        self.family_spec_ = spec

        if self.method == "closed_form":
            if spec.kind not in _CLOSED_FORM_KIND:
                raise ValueError(f"closed_form is only available for {sorted(_CLOSED_FORM_KIND)}")
            if self.include_dual:
                raise ValueError("dual entropies need the spectral method")
            kind = _CLOSED_FORM_KIND[spec.kind]
            j = np.arange(1, n + 1)
            if kind == 1:
                zeros = np.cos((2 * j - 1) * np.pi / (2 * n))
                weights = np.full(n, 1.0 / n)
            else:
                zeros = np.cos(j * np.pi / (n + 1))
                weights = 2.0 * np.sin(j * np.pi / (n + 1)) ** 2 / (n + 1)
            # angular order is descending in lambda; flip to ascending
            self.zeros_ = zeros[::-1].copy()
            self.christoffel_ = weights[::-1].copy()
            self.entropy_ = closed_form_values(kind, n)[::-1].copy()
            self.dual_entropy_ = None
            self.decomposition_ = None
            return self

        dec = decompose(spec, n)
        table = entropy_table(dec, include_dual=bool(self.include_dual))
        self.decomposition_ = dec
        self.zeros_ = dec.zeros
        self.christoffel_ = dec.christoffel
        self.entropy_ = table.values
        self.dual_entropy_ = table.dual_values
        return self

    def transform(self, X):
        """Generalised entropy ``S_n(lambda)`` at each sample.

        ``X`` holds one ``lambda`` per row, shape ``(n_samples,)`` or
        ``(n_samples, 1)``. Returns an array of shape ``(n_samples, 1)``.
        """
        check_is_fitted(self, "entropy_")
        X = np.asarray(X, dtype=float)
        if X.ndim == 1:
            X = X.reshape(-1, 1)
        X = check_array(X, dtype=float)
        if X.shape[1] != 1:
            raise ValueError(f"expected a single column of lambda values, got shape {X.shape}")
        out = [entropy_at_lambda(self.family_spec_, int(self.n), lam) for lam in X[:, 0]]
        return np.asarray(out, dtype=float).reshape(-1, 1)

    def get_feature_names_out(self, input_features=None):
        return np.array(["S_n"], dtype=object)
