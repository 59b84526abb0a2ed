"""Vertex weights and R-matrices for the six-vertex and nineteen-vertex models.

Six-vertex weights (spectral parameters zeta, z; anisotropy q):

    a = (q^2 zeta^2 - z^2) / ((q^2-1) zeta z)
    b = q (zeta^2 - z^2)   / ((q^2-1) zeta z)
    c = 1

Nineteen-vertex weights are functions of the single ratio rho = zeta/z; the
formulas are kept verbatim in `weight19_ratio`, including the sqrt(rho) and
sqrt(q) factors of the line-turning vertices.  `weight19_cleared` multiplies
by z^2 = v^4 so every vertex weight becomes a polynomial in the square roots
u, v of the rapidities (and in q, sqrt(q)).

Edge states are +1 / -1 for the six-vertex model and +1 / 0 / -1 for the
nineteen-vertex model; the tensor basis is ordered (+, 0, -).  Matrix entry
(a,b),(c,d) of an R-matrix is the amplitude for input pair (c,d) going to
output pair (a,b); it vanishes unless a+b = c+d (charge conservation).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ExactDomainError

STATES_6V = (1, -1)
STATES_19V = (1, 0, -1)

# (row, col, label): row = output pair index, col = input pair index,
# with pair index = len(states)*first + second.
R6_LAYOUT = (
    (0, 0, "a"),
    (1, 1, "b"), (1, 2, "c"),
    (2, 1, "c"), (2, 2, "b"),
    (3, 3, "a"),
)

R19_LAYOUT = (
    (0, 0, "x1"),
    (1, 1, "x2"), (1, 3, "x5"),
    (2, 2, "x3"), (2, 4, "x6"), (2, 6, "x7"),
    (3, 1, "y5"), (3, 3, "x2"),
    (4, 2, "y6"), (4, 4, "x4"), (4, 6, "x6"),
    (5, 5, "x2"), (5, 7, "x5"),
    (6, 2, "y7"), (6, 4, "y6"), (6, 6, "x3"),
    (7, 5, "y5"), (7, 7, "x2"),
    (8, 8, "x1"),
)

W19_LABELS = ("x1", "x2", "x3", "x4", "x5", "x6", "x7", "y5", "y6", "y7")


def weights6v(zeta, z, q) -> dict:
    """The three six-vertex weights, denominators included."""
    if q * q == 1:
        raise ExactDomainError("six-vertex weights need q^2 != 1")
    if not zeta or not z:
        raise ExactDomainError("six-vertex weights need nonzero rapidities")
    den = (q * q - 1) * zeta * z
    return {
        "a": (q * q * zeta * zeta - z * z) / den,
        "b": q * (zeta * zeta - z * z) / den,
        "c": den / den,
    }


def weight6_cleared(label, zeta, z, q):
    """Six-vertex weight times the per-vertex denominator (q^2-1) zeta z."""
    if label == "a":
        return q * q * zeta * zeta - z * z
    if label == "b":
        return q * (zeta * zeta - z * z)
    if label == "c":
        return (q * q - 1) * zeta * z
    raise KeyError(label)


def weight19_ratio(label, zeta, sqrt_zeta, q, sqrt_q):
    """A nineteen-vertex weight at ratio argument zeta, exactly as tabulated.

    The caller supplies consistent square roots: sqrt_zeta^2 == zeta and
    sqrt_q^2 == q.
    """
    if sqrt_zeta * sqrt_zeta != zeta:
        raise ExactDomainError("sqrt_zeta^2 != zeta")
    if sqrt_q * sqrt_q != q:
        raise ExactDomainError("sqrt_q^2 != q")
    if label == "x1":
        return (zeta * q * q - 1) * (zeta * q ** 3 + 1)
    if label == "x2":
        return (zeta - 1) * q * (zeta * q ** 3 + 1)
    if label == "x3":
        return (zeta - 1) * q * q * (zeta * q + 1)
    if label == "x4":
        return (
            -zeta
            + zeta * q ** 5
            + zeta * (zeta - 1) * q ** 4
            - zeta * q ** 3
            + zeta * q * q
            + (zeta - 1) * q
        )
    if label in ("x5", "y5"):
        return sqrt_zeta * (q * q - 1) * (zeta * q ** 3 + 1)
    if label == "x6":
        return sqrt_zeta * (zeta - 1) * (-sqrt_q) * (q * q - 1)
    if label == "x7":
        return zeta * (q * q - 1) * (zeta * q ** 3 + (zeta - 1) * q + 1)
    if label == "y6":
        return sqrt_zeta * (zeta - 1) * sqrt_q ** 5 * (q * q - 1)
    if label == "y7":
        return (q * q - 1) * (zeta * q ** 3 - (zeta - 1) * q * q + 1)
    raise KeyError(label)


def weight19_cleared(label, u, v, q, sqrt_q):
    """v^4 times the ratio weight at zeta = u^2/v^2, with sqrt(zeta) := u/v.

    A polynomial in u and v; the square roots of the rapidities are inputs,
    never computed.
    """
    zeta = u * u
    z = v * v
    uv = u * v
    if label == "x1":
        return (q * q * zeta - z) * (q ** 3 * zeta + z)
    if label == "x2":
        return (zeta - z) * q * (q ** 3 * zeta + z)
    if label == "x3":
        return (zeta - z) * q * q * (q * zeta + z)
    if label == "x4":
        zz = zeta * z
        return (
            -zz
            + q ** 5 * zz
            + q ** 4 * zeta * (zeta - z)
            - q ** 3 * zz
            + q * q * zz
            + q * (zeta - z) * z
        )
    if label in ("x5", "y5"):
        return uv * (q * q - 1) * (q ** 3 * zeta + z)
    if label == "x6":
        return -sqrt_q * (q * q - 1) * uv * (zeta - z)
    if label == "x7":
        return zeta * (q * q - 1) * (q ** 3 * zeta + q * (zeta - z) + z)
    if label == "y6":
        return sqrt_q ** 5 * (q * q - 1) * uv * (zeta - z)
    if label == "y7":
        return (q * q - 1) * (q ** 3 * zeta - q * q * (zeta - z) + z) * z
    raise KeyError(label)


def normalized_weight(label, u, v, q, sqrt_q):
    """Cleared-denominator weight; `v` must be invertible for the raw form to exist."""
    if not v:
        raise ExactDomainError("normalized weight needs v != 0")
    return weight19_cleared(label, u, v, q, sqrt_q)


# ----------------------------------------------------------------- R-matrices

def state_index(model: str, state: int) -> int:
    states = STATES_6V if model == "6v" else STATES_19V
    return states.index(state)


def build_rmatrix(model: str, u, v, q, sqrt_q, checked: bool = False):
    """The R-matrix (or, with checked=True, P*R) at rapidity square-roots u, v.

    zeta = u^2 and z = v^2; the six-vertex entries keep their denominators,
    the nineteen-vertex entries are the ratio-argument weights.
    """
    if model == "6v":
        d = 2
        table = weights6v(u * u, v * v, q)
        layout = R6_LAYOUT
        entry = lambda label: table[label]
    elif model == "19v":
        d = 3
        if not u or not v:
            raise ExactDomainError("nineteen-vertex ratio needs nonzero rapidities")
        zeta = (u * u) / (v * v)
        sqrt_zeta = u / v
        layout = R19_LAYOUT
        entry = lambda label: weight19_ratio(label, zeta, sqrt_zeta, q, sqrt_q)
    else:
        raise ValueError(f"unknown model {model!r}")
    dim = d * d
    zero = q * 0
    m = [[zero for _ in range(dim)] for _ in range(dim)]
    for row, col, label in layout:
        m[row][col] = entry(label)
    if checked:
        # left-multiply by the permutation matrix: swap the two output legs
        m = [m[d * (row % d) + row // d] for row in range(dim)]
    return m


def charge_of_pair(model: str, pair_index: int) -> int:
    states = STATES_6V if model == "6v" else STATES_19V
    d = len(states)
    return states[pair_index // d] + states[pair_index % d]


def sparsity_labels(model: str) -> dict:
    layout = R6_LAYOUT if model == "6v" else R19_LAYOUT
    return {(row, col): label for row, col, label in layout}


# ------------------------------------------------------------- Yang-Baxter

def _sparse(matrix) -> dict:
    out = {}
    for i, row in enumerate(matrix):
        for j, value in enumerate(row):
            if value:
                out[(i, j)] = value
    return out


def _sparse_mul(a: dict, b: dict) -> dict:
    by_row: dict = {}
    for (k, j), value in b.items():
        by_row.setdefault(k, []).append((j, value))
    out: dict = {}
    for (i, k), left in a.items():
        for j, right in by_row.get(k, ()):
            key = (i, j)
            s = out.get(key)
            term = left * right
            s = term if s is None else s + term
            if s:
                out[key] = s
            elif key in out:
                del out[key]
    return out


def _embed(matrix: dict, d: int, first: bool) -> dict:
    # lift a d^2-dim operator to d^3, acting on legs (1,2) or (2,3)
    out = {}
    for (r, c), value in matrix.items():
        r1, r2 = divmod(r, d)
        c1, c2 = divmod(c, d)
        for k in range(d):
            if first:
                out[((r1 * d + r2) * d + k, (c1 * d + c2) * d + k)] = value
            else:
                out[(k * d * d + r1 * d + r2, k * d * d + c1 * d + c2)] = value
    return out


def check_yang_baxter(model: str, ux, uy, uz, q, sqrt_q):
    """LHS - RHS of the braid-form Yang-Baxter equation on three strands.

    Rapidities are passed as square roots (x = ux^2 and so on).  Returns the
    residual as a dict keyed by (row, col); empty means the identity holds.
    """
    d = 2 if model == "6v" else 3

    def rc(ua, ub):
        return _sparse(build_rmatrix(model, ua, ub, q, sqrt_q, checked=True))

    r_yx = rc(uy, ux)
    r_zx = rc(uz, ux)
    r_zy = rc(uz, uy)
    lhs = _sparse_mul(_embed(r_yx, d, False), _sparse_mul(_embed(r_zx, d, True), _embed(r_zy, d, False)))
    rhs = _sparse_mul(_embed(r_zy, d, True), _sparse_mul(_embed(r_zx, d, False), _embed(r_yx, d, True)))
    residual = dict(lhs)
    for key, value in rhs.items():
        s = residual.get(key)
        s = -value if s is None else s - value
        if s:
            residual[key] = s
        elif key in residual:
            del residual[key]
    return residual


# ---------------------------------------------------------------- JSON dump

def weight_table_json(model: str) -> dict:
    """Machine-readable weight table: label -> canonical expression string.

    Expressions are written over u, v (rapidity square roots), q and
    r = sqrt(q), as cleared-denominator polynomials; the six-vertex entries
    list numerator and the common denominator separately.
    """
    from .mpoly import MPoly

    if model == "6v":
        vars = ("u", "v", "q")
        u, v, q = MPoly.gens(vars)
        zeta, z = u * u, v * v
        return {
            "model": model,
            "denominator": str((q * q - 1) * zeta * z),
            "weights": {
                "a": str(q * q * zeta * zeta - z * z),
                "b": str(q * (zeta * zeta - z * z)),
                "c": str((q * q - 1) * zeta * z),
            },
        }
    if model == "19v":
        vars = ("u", "v", "q", "r")
        u, v, q, r = MPoly.gens(vars)
        return {
            "model": model,
            "denominator": str((v * v) ** 2),
            "weights": {
                label: str(weight19_cleared(label, u, v, q, r))
                for label in W19_LABELS
            },
        }
    raise ValueError(f"unknown model {model!r}")
