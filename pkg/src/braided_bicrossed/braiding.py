"""The diagonal braiding Q of a bicrossed product and its consistency laws.

``Q[g, h, x, y]`` is the exponent of Q^{x,y}_{g,h}, the scalar with
c(δ_g x ⊗ δ_h y) = Q^{x,y}_{g,h} δ_h y ⊗ δ_g x.
"""

from __future__ import annotations

from math import gcd

import numpy as np

from .cocycles import BicrossedDatum
from .report import Report, sweep


class _Ops:
    """Vectorized group operations and cocycle lookups for one datum."""

    def __init__(self, datum: BicrossedDatum):
        mp = datum.mp
        self.n = datum.conductor
        self.S = datum.sigma
        self.T = datum.tau
        self.L = mp.act_l
        self.R = mp.act_r
        self.Gm = mp.G.mult
        self.Fm = mp.F.mult
        self.Gi = mp.G.inv
        self.Fi = mp.F.inv
        self.nG = mp.nG
        self.nF = mp.nF

    def lhd(self, g, x):
        return self.L[g, x]

    def rhd(self, g, x):
        return self.R[g, x]

    def gm(self, g, h):
        return self.Gm[g, h]

    def fm(self, x, y):
        return self.Fm[x, y]

    def axes(self, *kinds: str):
        """Broadcastable index grids, one per axis; kinds are 'G' or 'F'."""
        k = len(kinds)
        out = []
        for i, kind in enumerate(kinds):
            shape = [1] * k
            shape[i] = self.nG if kind == "G" else self.nF
            out.append(np.arange(shape[i]).reshape(shape))
        return out


def _q_terms(o: _Ops, g, h, x, y):
    """Six exponent terms of Q^{x,y}_{g,h}; returned in display order."""
    gx = o.rhd(g, x)
    u = o.Fi[gx]
    w = o.lhd(h, u)
    gl = o.lhd(g, x)
    yp = o.rhd(o.Gi[gl], y)
    return (
        o.S[o.gm(w, g), x, yp],
        -o.S[w, gx, y],
        -o.S[g, x, yp],
        o.T[o.fm(x, yp), w, g],
        -o.T[yp, h, gl],
        -o.T[x, w, g],
    )


def compute_q(datum: BicrossedDatum) -> np.ndarray:
    """Exponent table Q[g, h, x, y] from σ, τ and the actions.

    With u = (g▷x)⁻¹, w = h◁u and y' = (g◁x)⁻¹▷y:
    Q = σ_{wg}(x,y') σ_w(g▷x,y)⁻¹ σ_g(x,y')⁻¹ τ_{xy'}(w,g) τ_{y'}(h,g◁x)⁻¹ τ_x(w,g)⁻¹.
    """
    o = _Ops(datum)
    g, h, x, y = o.axes("G", "G", "F", "F")
    return sum(_q_terms(o, g, h, x, y)) % o.n


def check_q_multiplicativity(mp, q: np.ndarray, n: int) -> Report:
    """The four laws saying m and Δ commute with the diagonal braiding."""
    Q = np.asarray(q, dtype=np.int64)
    L, R, Gm, Fm = mp.act_l, mp.act_r, mp.G.mult, mp.F.mult
    nG, nF = mp.nG, mp.nF
    rep = Report("Q multiplicativity")
    g = np.arange(nG)[:, None, None, None, None]
    s = np.arange(nG)[None, :, None, None, None]
    x = np.arange(nF)[None, None, :, None, None]
    y = np.arange(nF)[None, None, None, :, None]
    z = np.arange(nF)[None, None, None, None, :]
    e = Q[g, s, x, Fm[y, z]] - Q[g, s, x, y] - Q[g, L[s, y], x, z]
    rep.add(sweep("Q^{x,yz}_{g,s} = Q^{x,y}_{g,s} Q^{x,z}_{g,s◁y}", e % n != 0, ("g", "s", "x", "y", "z")))
    e = Q[g, s, Fm[x, y], z] - Q[g, s, x, z] - Q[L[g, x], s, y, z]
    rep.add(sweep("Q^{xy,z}_{g,s} = Q^{x,z}_{g,s} Q^{y,z}_{g◁x,s}", e % n != 0, ("g", "s", "x", "y", "z")))
    g = np.arange(nG)[:, None, None, None, None]
    t = np.arange(nG)[None, :, None, None, None]
    s = np.arange(nG)[None, None, :, None, None]
    x = np.arange(nF)[None, None, None, :, None]
    y = np.arange(nF)[None, None, None, None, :]
    e = Q[g, Gm[t, s], x, y] - Q[g, t, x, R[s, y]] - Q[g, s, x, y]
    rep.add(sweep("Q^{x,y}_{g,ts} = Q^{x,s▷y}_{g,t} Q^{x,y}_{g,s}", e % n != 0, ("g", "t", "s", "x", "y")))
    e = Q[Gm[t, s], g, x, y] - Q[t, g, R[s, x], y] - Q[s, g, x, y]
    rep.add(sweep("Q^{x,y}_{ts,g} = Q^{s▷x,y}_{t,g} Q^{x,y}_{s,g}", e % n != 0, ("g", "t", "s", "x", "y")))
    return rep


def theorem_condition_residuals(datum: BicrossedDatum, shortcut_subscripts: bool = False) -> dict[str, np.ndarray]:
    """Exponent residuals (lhs - rhs) of the four sufficient conditions.

    Each condition is written out term by term from σ and τ, independently
    of :func:`compute_q`.  Conditions one and two are indexed
    (g, s, x, y, z); three and four are indexed (g, s, t, x, y).

    ``shortcut_subscripts=True`` swaps in two tempting simplifications:
    s◁u for (s◁y)◁u in condition one, and (g◁x)⁻¹▷y for the shifted
    F-argument of the τ subscript in condition four.  Neither is
    equivalent to the multiplicativity laws once ◁ is nontrivial; the
    switch exists so tests can show where they break.
    """
    o = _Ops(datum)
    S, T, Gi, Fi = o.S, o.T, o.Gi, o.Fi
    out = {}

    g, s, x, y, z = o.axes("G", "G", "F", "F", "F")
    gx = o.rhd(g, x)
    u = Fi[gx]
    gl = o.lhd(g, x)
    gli = Gi[gl]

    # condition 1: Q^{x,yz}_{g,s} = Q^{x,y}_{g,s} Q^{x,z}_{g,s◁y}
    yz = o.fm(y, z)
    A = o.lhd(s, u)
    Ty, Tz, Tyz = o.rhd(gli, y), o.rhd(gli, z), o.rhd(gli, yz)
    sy = o.lhd(s, y)
    B = A if shortcut_subscripts else o.lhd(sy, u)
    B_full = o.lhd(sy, u)
    lhs = (
        S[o.gm(A, g), x, Tyz] - S[A, gx, yz] - S[g, x, Tyz]
        + T[o.fm(x, Tyz), A, g] - T[Tyz, s, gl]
    )
    rhs = (
        S[o.gm(A, g), x, Ty] - S[A, gx, y] - S[g, x, Ty]
        + T[o.fm(x, Ty), A, g] - T[Ty, s, gl]
        + S[o.gm(B_full, g), x, Tz] - S[B, gx, z] - S[g, x, Tz]
        + T[o.fm(x, Tz), B_full, g] - T[Tz, sy, gl] - T[x, B_full, g]
    )
    out["condition 1"] = (lhs - rhs) % o.n

    # condition 2: Q^{xy,z}_{g,s} = Q^{x,z}_{g,s} Q^{y,z}_{g◁x,s}
    X = o.fm(x, y)
    gX = o.rhd(g, X)
    glX = o.lhd(g, X)
    TXz = o.rhd(Gi[glX], z)
    AX = o.lhd(s, Fi[gX])
    lhs = (
        S[o.gm(AX, g), X, TXz] - S[AX, gX, z] - S[g, X, TXz]
        + T[o.fm(X, TXz), AX, g] - T[X, AX, g]
    )
    rhs = sum(_q_terms(o, g, s, x, z))
    gly = o.rhd(gl, y)
    A2 = o.lhd(s, Fi[gly])
    rhs = rhs + (
        S[o.gm(A2, gl), y, TXz] - S[A2, gly, z] - S[gl, y, TXz]
        + T[o.fm(y, TXz), A2, gl] - T[y, A2, gl]
    )
    out["condition 2"] = (lhs - rhs) % o.n

    g, s, t, x, y = o.axes("G", "G", "G", "F", "F")
    gx = o.rhd(g, x)
    u = Fi[gx]
    gl = o.lhd(g, x)
    gli = Gi[gl]

    # condition 3: Q^{x,y}_{g,ts} = Q^{x,s▷y}_{g,t} Q^{x,y}_{g,s}
    ts = o.gm(t, s)
    A = o.lhd(ts, u)
    Ty = o.rhd(gli, y)
    lhs = (
        S[o.gm(A, g), x, Ty] - S[A, gx, y]
        + T[o.fm(x, Ty), A, g] - T[Ty, ts, gl] - T[x, A, g]
    )
    sy = o.rhd(s, y)
    Tsy = o.rhd(o.gm(gli, s), y)
    At = o.lhd(t, u)
    rhs = (
        S[o.gm(At, g), x, Tsy] - S[At, gx, sy] - S[g, x, Tsy]
        + T[o.fm(x, Tsy), At, g] - T[Tsy, t, gl] - T[x, At, g]
    )
    As = o.lhd(s, u)
    rhs = rhs + (
        S[o.gm(As, g), x, Ty] - S[As, gx, y]
        + T[o.fm(x, Ty), As, g] - T[Ty, s, gl] - T[x, As, g]
    )
    out["condition 3"] = (lhs - rhs) % o.n

    # condition 4: Q^{x,y}_{gt,s} = Q^{t▷x,y}_{g,s} Q^{x,y}_{t,s}
    gt = o.gm(g, t)
    gtx = o.rhd(gt, x)
    A0 = o.lhd(s, Fi[gtx])
    gtl = o.lhd(gt, x)
    T0y = o.rhd(Gi[gtl], y)
    lhs = (
        S[o.gm(A0, gt), x, T0y] - S[gt, x, T0y]
        + T[o.fm(x, T0y), A0, gt] - T[T0y, s, gtl] - T[x, A0, gt]
    )
    x1 = o.rhd(t, x)
    g1l = o.lhd(g, x1)
    T1y = o.rhd(Gi[g1l], y)
    T1y_sub = o.rhd(gli, y) if shortcut_subscripts else T1y
    rhs = (
        S[o.gm(A0, g), x1, T1y] - S[g, x1, T1y]
        + T[o.fm(x1, T1y_sub), A0, g] - T[T1y, s, g1l] - T[x1, A0, g]
    )
    rhs = rhs + sum(_q_terms(o, t, s, x, y))
    out["condition 4"] = (lhs - rhs) % o.n
    return out


def check_theorem_conditions(datum: BicrossedDatum, shortcut_subscripts: bool = False) -> Report:
    rep = Report("sufficient conditions" + (" (shortcut subscripts)" if shortcut_subscripts else ""))
    axes = {
        "condition 1": ("g", "s", "x", "y", "z"),
        "condition 2": ("g", "s", "x", "y", "z"),
        "condition 3": ("g", "s", "t", "x", "y"),
        "condition 4": ("g", "s", "t", "x", "y"),
    }
    for name, res in theorem_condition_residuals(datum, shortcut_subscripts).items():
        rep.add(sweep(name, res != 0, axes[name]))
    return rep


def compatibility_residual(datum: BicrossedDatum, q: np.ndarray) -> np.ndarray:
    """Residual over (s, t, x, y) of the identity tying σ, τ and Q.

    σ_{ts}(x,y) τ_{xy}(t,s) =
        Q^{x,(s◁x)▷y}_{s, t◁(s▷x)} τ_x(t,s) τ_y(t◁(s▷x), s◁x)
        σ_t(s▷x, (s◁x)▷y) σ_s(x,y).

    It is equivalent to Δ being multiplicative for the Q-twisted product
    on R ⊗ R.  Any table laid out like Q may be passed, in particular the
    pairing table of a realization.
    """
    o = _Ops(datum)
    Q = np.asarray(q, dtype=np.int64)
    S, T = o.S, o.T
    s, t, x, y = o.axes("G", "G", "F", "F")
    sx_r = o.rhd(s, x)
    sx_l = o.lhd(s, x)
    t2 = o.lhd(t, sx_r)
    y2 = o.rhd(sx_l, y)
    lhs = S[o.gm(t, s), x, y] + T[o.fm(x, y), t, s]
    rhs = Q[s, t2, x, y2] + T[x, t, s] + T[y, t2, sx_l] + S[t, sx_r, y2] + S[s, x, y]
    return (lhs - rhs) % o.n


def check_compatibility(datum: BicrossedDatum, q: np.ndarray | None = None) -> Report:
    if q is None:
        q = compute_q(datum)
    rep = Report("σ, τ, Q compatibility")
    rep.add(sweep("Δ multiplicative for the Q-twisted product", compatibility_residual(datum, q) != 0,
                  ("s", "t", "x", "y")))
    return rep


def antipode_invariance(datum: BicrossedDatum, q: np.ndarray) -> Report:
    """Q is unchanged when its first argument is replaced by its antipode image.

    S(δ_g x) is a multiple of δ_{(g◁x)⁻¹}(g▷x)⁻¹, and c commutes with S⊗id.
    """
    mp = datum.mp
    Q = np.asarray(q, dtype=np.int64)
    g = np.arange(mp.nG)[:, None, None, None]
    h = np.arange(mp.nG)[None, :, None, None]
    x = np.arange(mp.nF)[None, None, :, None]
    y = np.arange(mp.nF)[None, None, None, :]
    g2 = mp.G.inv[mp.act_l[g, x]]
    x2 = mp.F.inv[mp.act_r[g, x]]
    rep = Report("antipode invariance")
    rep.add(sweep("Q^{x,y}_{g,h} = Q^{(g▷x)⁻¹,y}_{(g◁x)⁻¹,h}",
                  (Q[g, h, x, y] - Q[g2, h, x2, y]) % datum.conductor != 0, ("g", "h", "x", "y")))
    return rep


def symmetrization_order(q: np.ndarray, n: int) -> int:
    """Order of c² as an operator: lcm of the orders of Q(a,b)Q(b,a).

    Returns 1 exactly when the braiding is symmetric.
    """
    Q = np.asarray(q, dtype=np.int64)
    sym = (Q + Q.transpose(1, 0, 3, 2)) % n
    order = 1
    for e in np.unique(sym):
        k = n // gcd(int(e), n)
        order = order * k // gcd(order, k)
    return order


def is_trivial(q: np.ndarray, n: int) -> bool:
    return bool(np.all(np.asarray(q) % n == 0))


def trivial_action_parts(datum: BicrossedDatum) -> tuple[np.ndarray, np.ndarray]:
    """Differentials of σ: G → Z²(F) and τ: F → Z²(G), laid out like Q.

    Returns ``(dsigma, dtau)`` with
    dsigma[g,h,x,y] = σ_{hg}(x,y) / σ_h(x,y) σ_g(x,y) and
    dtau[g,h,x,y] = τ_{xy}(h,g) / τ_x(h,g) τ_y(h,g).
    Only meaningful when both actions are trivial.
    """
    mp = datum.mp
    if not (mp.has_trivial_left_action() and mp.has_trivial_right_action()):
        raise ValueError("both actions must be trivial")
    n, S, T = datum.conductor, datum.sigma, datum.tau
    Gm, Fm = mp.G.mult, mp.F.mult
    g = np.arange(mp.nG)[:, None, None, None]
    h = np.arange(mp.nG)[None, :, None, None]
    x = np.arange(mp.nF)[None, None, :, None]
    y = np.arange(mp.nF)[None, None, None, :]
    dsigma = S[Gm[h, g], x, y] - S[h, x, y] - S[g, x, y]
    dtau = T[Fm[x, y], h, g] - T[x, h, g] - T[y, h, g]
    return dsigma % n, dtau % n


def check_trivial_action_decomposition(datum: BicrossedDatum, q: np.ndarray | None = None) -> Report:
    """Q splits as the product of the two differentials when the actions are trivial."""
    if q is None:
        q = compute_q(datum)
    dsigma, dtau = trivial_action_parts(datum)
    rep = Report("trivial-action decomposition")
    rep.add(sweep("Q^{x,y}_{g,h} = ∂σ(h,g)(x,y) ∂τ(x,y)(h,g)", (q - dsigma - dtau) % datum.conductor != 0,
                  ("g", "h", "x", "y")))
    return rep
