"""Group-theoretic scaffolding: orthogonality/unitarity predicates, Hadamard
layers, quasi-orthogonal perturbations, and verified cyclic generators.

Matrices are plain numpy arrays.  The spectral norm used by
``orthogonality_defect`` is computed by a fixed-budget power iteration so the
result is reproducible without any external linear-algebra solver.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

DENSE_QUBIT_CAP = 12
_POWER_ITERATIONS = 200
_POWER_TOL = 1e-12
_SKEW_TOL = 1e-12


def _require_square(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    return a


def matrix_csv(a) -> str:
    """Row-major CSV rendering, for debugging."""
    a = np.asarray(a)
    if a.ndim != 2:
        raise ValueError("expected a 2-D matrix")
    cast = complex if np.iscomplexobj(a) else float
    return "\n".join(",".join(repr(cast(v)) for v in row) for row in a) + "\n"


def is_orthogonal(a, tol: float = 1e-12) -> bool:
    """True iff max-entry |A^T A - I| <= tol."""
    a = _require_square(a)
    defect = a.T @ a - np.eye(a.shape[0])
    return float(np.max(np.abs(defect))) <= tol


def is_special_unitary(u, tol: float = 1e-12) -> bool:
    """True iff U is unitary within tol and |det(U) - 1| <= tol."""
    u = _require_square(u)
    defect = u.conj().T @ u - np.eye(u.shape[0])
    if float(np.max(np.abs(defect))) > tol:
        return False
    return abs(np.linalg.det(u) - 1.0) <= tol


def hadamard_matrix() -> np.ndarray:
    return np.array([[1.0, 1.0], [1.0, -1.0]]) / np.sqrt(2.0)


def hadamard_layer(n: int) -> np.ndarray:
    """n-fold tensor power of the Hadamard gate (dense, n <= 12)."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > DENSE_QUBIT_CAP:
        raise ValueError(f"n={n} exceeds the dense cap of {DENSE_QUBIT_CAP}")
    h = hadamard_matrix()
    out = h
    for _ in range(n - 1):
        out = np.kron(out, h)
    return out


def build_quasi_rotation(epsilon: float, m) -> np.ndarray:
    """R = I + epsilon.M for a skew-symmetric M."""
    m = _require_square(m)
    if float(np.max(np.abs(m.T + m))) > _SKEW_TOL:
        raise ValueError("M must be skew-symmetric (M^T = -M)")
    return np.eye(m.shape[0]) + epsilon * m


def orthogonality_defect(r) -> float:
    """Spectral norm of R^T R - I (how far R is from orthogonal).

    Power iteration on A^H A with a deterministic all-ones start vector,
    200 iterations, early stop at relative change 1e-12.
    """
    r = _require_square(r)
    a = r.T @ r - np.eye(r.shape[0])
    return _spectral_norm(a)


def _spectral_norm(a: np.ndarray) -> float:
    gram = a.conj().T @ a
    v = np.ones(gram.shape[0]) / np.sqrt(gram.shape[0])
    lam = 0.0
    for _ in range(_POWER_ITERATIONS):
        w = gram @ v
        norm = float(np.linalg.norm(w))
        if norm == 0.0:
            return 0.0
        new_lam = float(np.real(v.conj() @ w))
        v = w / norm
        if abs(new_lam - lam) <= _POWER_TOL * max(1.0, abs(new_lam)):
            lam = new_lam
            break
        lam = new_lam
    return float(np.sqrt(max(lam, 0.0)))


def cz_epsilon(epsilon: float, form: str = "formula") -> np.ndarray:
    """Epsilon-perturbed CZ.

    form='formula' expands I + epsilon.Z(x)Z entrywise; form='displayed'
    returns the off-diagonal 4x4 variant printed alongside it.  The two
    presentations genuinely differ; both are kept on purpose.
    """
    if abs(epsilon) >= 1:
        raise ValueError("|epsilon| must be < 1")
    if form == "formula":
        e = epsilon
        return np.diag([1 + e, 1 - e, 1 - e, 1 + e]).astype(float)
    if form == "displayed":
        out = np.eye(4)
        out[2, 3] = out[3, 2] = epsilon
        return out
    raise ValueError(f"unknown form {form!r}")


@dataclass
class CyclicGroupSpec:
    """A generator of verified finite order n, with its full element list."""

    order: int
    generator: object
    elements: list = field(default_factory=list)


def shift_permutation(n: int, i: int = 1) -> tuple:
    """Permutation sending position p to read from position (p + i) mod n."""
    return tuple((p + i) % n for p in range(n))


def apply_permutation(perm, seq):
    if isinstance(seq, str):
        return "".join(seq[p] for p in perm)
    return type(seq)(seq[p] for p in perm)


def generate_cyclic_group(g, n: int) -> CyclicGroupSpec:
    """Verify g has order exactly n and return {g^0, ..., g^(n-1)}.

    g is a permutation (sequence of ints) or a square matrix.
    """
    if n < 1:
        raise ValueError("order must be positive")
    if isinstance(g, np.ndarray) or (
        hasattr(g, "__len__") and g and isinstance(g[0], (list, tuple, np.ndarray))
    ):
        mat = _require_square(np.asarray(g))
        ident = np.eye(mat.shape[0])
        elements = [ident]
        cur = ident
        for k in range(1, n + 1):
            cur = cur @ mat
            if k < n:
                if np.allclose(cur, ident, atol=1e-12):
                    raise ValueError(f"generator order {k} is less than {n}")
                elements.append(cur)
        if not np.allclose(cur, ident, atol=1e-12):
            raise ValueError(f"generator order does not equal {n}")
        return CyclicGroupSpec(n, mat, elements)

    perm = tuple(g)
    if sorted(perm) != list(range(len(perm))):
        raise ValueError("not a permutation")
    ident = tuple(range(len(perm)))
    elements = [ident]
    cur = ident
    for k in range(1, n + 1):
        cur = tuple(cur[perm[p]] for p in range(len(perm)))
        if k < n:
            if cur == ident:
                raise ValueError(f"generator order {k} is less than {n}")
            elements.append(cur)
    if cur != ident:
        raise ValueError(f"generator order does not equal {n}")
    return CyclicGroupSpec(n, perm, elements)
