"""Linear discriminant classifier and OLS R^2 feature diagnostics."""
from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

import numpy as np

from .errors import DegenerateTrainingError, ModelFormatError, SingularCovarianceError
from .features import FEATURE_NAMES, FeatureVector, feature_matrix, label_array

FORMAT_TAG = "miftah-lda/1"
DEFAULT_EPSILON = 1e-6
DEFAULT_ANOVA_ORDER = ("x5", "x6", "x2", "x1", "x4", "x8")

# reciprocal-condition-number floor below which the covariance is rejected
_RCOND_FLOOR = 1e3 * np.finfo(float).eps

Mask = tuple[bool, ...]
FeatureRef = Union[str, int]


@dataclass(frozen=True)
class LdaModel:
    feature_names: tuple[str, ...]
    mask: Mask
    mu_yes: np.ndarray
    mu_no: np.ndarray
    covariance: np.ndarray
    cov_inv: np.ndarray
    prior_yes: float
    prior_no: float
    epsilon: float

    @property
    def dim(self) -> int:
        return len(self.feature_names)

    def select(self, X: np.ndarray) -> np.ndarray:
        """Apply the feature mask to full-width rows; masked rows pass through."""
        X = np.asarray(X, dtype=float)
        width = X.shape[-1]
        if width == self.dim:
            return X
        if width == len(self.mask):
            return X[..., np.asarray(self.mask, dtype=bool)]
        raise ValueError(
            f"dimension mismatch: model expects {self.dim} features, got {width}"
        )

    def discriminants(self, X: np.ndarray) -> np.ndarray:
        """Rows of ``(f_yes, f_no)`` for a batch of masked feature rows."""
        X = np.atleast_2d(np.asarray(X, dtype=float))
        if X.shape[1] != self.dim:
            raise ValueError(
                f"dimension mismatch: model expects {self.dim} features, got {X.shape[1]}"
            )
        out = np.empty((X.shape[0], 2))
        for k, (mu, prior) in enumerate(
            ((self.mu_yes, self.prior_yes), (self.mu_no, self.prior_no))
        ):
            a = mu @ self.cov_inv
            out[:, k] = X @ a - 0.5 * (a @ mu) + math.log(prior)
        return out

    def scores(self, X: np.ndarray) -> np.ndarray:
        f = self.discriminants(X)
        return f[:, 0] - f[:, 1]


def discriminant(model: LdaModel, x: Sequence[float]) -> tuple[float, float]:
    """``f_i = mu_i' C^-1 x - mu_i' C^-1 mu_i / 2 + ln p_i`` for both groups."""
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or x.shape[0] != model.dim:
        raise ValueError(
            f"dimension mismatch: model expects {model.dim} features, got {x.shape}"
        )
    f_yes, f_no = model.discriminants(x[None, :])[0]
    return float(f_yes), float(f_no)


def classify(model: LdaModel, x: Sequence[float]) -> bool:
    """True for the keyphrase group. Exact ties go to the non-keyphrase group."""
    f_yes, f_no = discriminant(model, x)
    return f_yes > f_no


def score(model: LdaModel, x: Sequence[float]) -> float:
    f_yes, f_no = discriminant(model, x)
    return f_yes - f_no


def parse_mask(spec: Union[str, Sequence[FeatureRef], None]) -> Mask:
    """Turn ``"x5,x6,x2"`` (or a list of names/indices) into an 8-wide mask."""
    if spec is None:
        return (True,) * len(FEATURE_NAMES)
    if isinstance(spec, str):
        spec = [s.strip() for s in spec.split(",") if s.strip()]
    idx = {_feature_index(s) for s in spec}
    if not idx:
        raise ValueError("feature mask selects no features")
    return tuple(i in idx for i in range(len(FEATURE_NAMES)))


def _feature_index(ref: FeatureRef) -> int:
    if isinstance(ref, (int, np.integer)):
        if not 0 <= ref < len(FEATURE_NAMES):
            raise ValueError(f"feature index out of range: {ref}")
        return int(ref)
    name = ref.lower()
    if name not in FEATURE_NAMES:
        raise ValueError(f"unknown feature {ref!r}; expected one of {FEATURE_NAMES}")
    return FEATURE_NAMES.index(name)


def fit_lda(
    X: np.ndarray,
    y: np.ndarray,
    epsilon: float = DEFAULT_EPSILON,
    feature_names: Optional[Sequence[str]] = None,
    mask: Optional[Mask] = None,
) -> LdaModel:
    """Fit class means, pooled within-class covariance and class priors.

    The pooled covariance is inflated by ``epsilon * trace(C) / d`` on the
    diagonal before inversion.
    """
    X = np.asarray(X, dtype=float)
    if X.ndim == 1:
        X = X[:, None]
    y = np.asarray(y, dtype=bool)
    n, d = X.shape
    if y.shape != (n,):
        raise ValueError("labels must be one per sample")
    if epsilon < 0:
        raise ValueError("epsilon must be non-negative")
    n_yes = int(y.sum())
    n_no = n - n_yes
    if n_yes < 2 or n_no < 2:
        raise DegenerateTrainingError(
            f"degenerate training set: {n_yes} positive and {n_no} negative samples "
            "(need at least 2 of each)"
        )
    if feature_names is None:
        feature_names = tuple(f"x{i + 1}" for i in range(d))
    feature_names = tuple(feature_names)
    if mask is None:
        mask = (True,) * d

    Xy, Xn = X[y], X[~y]
    mu_yes = Xy.mean(axis=0)
    mu_no = Xn.mean(axis=0)
    Dy = Xy - mu_yes
    Dn = Xn - mu_no
    cov = (Dy.T @ Dy + Dn.T @ Dn) / (n - 2)
    cov = (cov + cov.T) / 2

    ridge = epsilon * np.trace(cov) / d
    reg = cov + ridge * np.eye(d)
    with np.errstate(divide="ignore", invalid="ignore"):
        rcond = 1.0 / np.linalg.cond(reg)
    if not rcond >= _RCOND_FLOOR:
        flat = [feature_names[i] for i in range(d) if cov[i, i] <= 0.0]
        raise SingularCovarianceError(
            "singular covariance; zero-variance features: "
            + (", ".join(flat) if flat else "none (collinear features)"),
            flat,
        )
    cov_inv = np.linalg.inv(reg)
    cov_inv = (cov_inv + cov_inv.T) / 2

    return LdaModel(
        feature_names=feature_names,
        mask=tuple(bool(m) for m in mask),
        mu_yes=mu_yes,
        mu_no=mu_no,
        covariance=cov,
        cov_inv=cov_inv,
        prior_yes=n_yes / n,
        prior_no=n_no / n,
        epsilon=float(epsilon),
    )


def train_lda(
    vectors: Sequence[FeatureVector],
    mask: Union[Mask, str, None] = None,
    epsilon: float = DEFAULT_EPSILON,
) -> LdaModel:
    """Train on labelled feature vectors, keeping only the masked features."""
    if mask is None or isinstance(mask, str):
        mask = parse_mask(mask)
    mask = tuple(bool(m) for m in mask)
    if len(mask) != len(FEATURE_NAMES):
        raise ValueError(f"mask must have {len(FEATURE_NAMES)} entries")
    y = label_array(vectors)
    X = feature_matrix(vectors)[:, np.asarray(mask)]
    names = [n for n, keep in zip(FEATURE_NAMES, mask) if keep]
    return fit_lda(X, y, epsilon=epsilon, feature_names=names, mask=mask)


# -- serialization -----------------------------------------------------------


def model_to_dict(model: LdaModel) -> dict:
    return {
        "format": FORMAT_TAG,
        "feature_names": list(model.feature_names),
        "mask": list(model.mask),
        "mu_yes": model.mu_yes.tolist(),
        "mu_no": model.mu_no.tolist(),
        "covariance": model.covariance.tolist(),
        "cov_inv": model.cov_inv.tolist(),
        "prior_yes": model.prior_yes,
        "prior_no": model.prior_no,
        "epsilon": model.epsilon,
    }


def model_from_dict(data: dict) -> LdaModel:
    if not isinstance(data, dict):
        raise ModelFormatError("corrupt model: top level is not an object")
    tag = data.get("format")
    if tag != FORMAT_TAG:
        raise ModelFormatError(f"unsupported model version {tag!r} (expected {FORMAT_TAG})")
    try:
        names = tuple(str(s) for s in data["feature_names"])
        d = len(names)
        model = LdaModel(
            feature_names=names,
            mask=tuple(bool(m) for m in data["mask"]),
            mu_yes=np.array(data["mu_yes"], dtype=float),
            mu_no=np.array(data["mu_no"], dtype=float),
            covariance=np.array(data["covariance"], dtype=float),
            cov_inv=np.array(data["cov_inv"], dtype=float),
            prior_yes=float(data["prior_yes"]),
            prior_no=float(data["prior_no"]),
            epsilon=float(data["epsilon"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ModelFormatError(f"corrupt model: {exc}") from exc
    shapes_ok = (
        model.mu_yes.shape == (d,)
        and model.mu_no.shape == (d,)
        and model.covariance.shape == (d, d)
        and model.cov_inv.shape == (d, d)
        and sum(model.mask) == d
    )
    if not shapes_ok:
        raise ModelFormatError("corrupt model: inconsistent dimensions")
    return model


def save_model(model: LdaModel, path: Union[str, os.PathLike]) -> None:
    # json writes floats with repr(), the shortest exact round-trip form
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(model_to_dict(model), fh, indent=2)
        fh.write("\n")


def load_model(path: Union[str, os.PathLike]) -> LdaModel:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelFormatError(f"corrupt model: {exc}") from exc
    return model_from_dict(data)


# -- ANOVA for regression ----------------------------------------------------


@dataclass
class AnovaReport:
    single_r2: list[float]
    accumulated: list[tuple[tuple[str, ...], float]] = field(default_factory=list)
    rank_deficient: list[tuple[str, ...]] = field(default_factory=list)


def ols_r2(X: np.ndarray, y: np.ndarray) -> tuple[float, bool]:
    """R^2 of an intercept OLS fit of ``y`` on the columns of ``X``.

    Returns ``(r2, rank_deficient)``; rank-deficient designs use the
    minimum-norm least-squares solution.
    """
    X = np.asarray(X, dtype=float)
    if X.ndim == 1:
        X = X[:, None]
    y = np.asarray(y, dtype=float)
    design = np.column_stack([np.ones(len(y)), X])
    beta, _, rank, _ = np.linalg.lstsq(design, y, rcond=None)
    resid = y - design @ beta
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    if ss_tot == 0.0:
        return 0.0, rank < design.shape[1]
    r2 = 1.0 - float(resid @ resid) / ss_tot
    return min(max(r2, 0.0), 1.0), rank < design.shape[1]


def _check_anova_input(X: np.ndarray, y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    if X.ndim == 1:
        X = X[:, None]
    if len(y) < 3:
        raise DegenerateTrainingError("ANOVA needs at least 3 samples")
    if np.all(y == y[0]):
        raise DegenerateTrainingError("ANOVA needs both classes present")
    return X, y


def anova_single(X: np.ndarray, y: np.ndarray) -> list[float]:
    """Per-column R^2; constant columns score 0."""
    X, y = _check_anova_input(X, y)
    out = []
    for j in range(X.shape[1]):
        col = X[:, j]
        if np.all(col == col[0]):
            out.append(0.0)
        else:
            out.append(ols_r2(col, y)[0])
    return out


def _accumulate(X, y, order):
    cols = [_feature_index(r) for r in order]
    if not cols:
        raise ValueError("inclusion order is empty")
    if len(set(cols)) != len(cols):
        raise ValueError("inclusion order has duplicates")
    return [ols_r2(X[:, cols[: k + 1]], y) for k in range(len(cols))]


def anova_accumulated(
    X: np.ndarray, y: np.ndarray, order: Sequence[FeatureRef] = DEFAULT_ANOVA_ORDER
) -> list[float]:
    """R^2 of nested OLS fits over successive prefixes of ``order``."""
    X, y = _check_anova_input(X, y)
    return [r2 for r2, _ in _accumulate(X, y, order)]


def anova_report(
    vectors: Sequence[FeatureVector], order: Sequence[FeatureRef] = DEFAULT_ANOVA_ORDER
) -> AnovaReport:
    X, y = _check_anova_input(feature_matrix(vectors), label_array(vectors))
    names = [FEATURE_NAMES[_feature_index(r)] for r in order]
    steps = _accumulate(X, y, names)
    report = AnovaReport(single_r2=anova_single(X, y))
    for k, (r2, deficient) in enumerate(steps):
        subset = tuple(names[: k + 1])
        report.accumulated.append((subset, r2))
        if deficient:
            report.rank_deficient.append(subset)
    return report
