"""The two 2-cocycles of a bicrossed product.

Values are roots of unity stored as integer exponents modulo a common
conductor ``N``:

* ``sigma[g, x, y]`` is the exponent of σ_g(x, y)   (shape |G| x |F| x |F|)
* ``tau[x, g, h]``   is the exponent of τ_x(g, h)   (shape |F| x |G| x |G|)
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CocycleFails, NormalizationFails
from .matched_pair import MatchedPair
from .report import Report, sweep
from .smith import solve_mod


def _table(arr, shape: tuple[int, ...], n: int, name: str) -> np.ndarray:
    out = np.mod(np.asarray(arr, dtype=np.int64), n)
    if out.shape != shape:
        raise ValueError(f"{name} must have shape {shape}, got {out.shape}")
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class BicrossedDatum:
    """A matched pair together with exponent tables for σ and τ."""

    mp: MatchedPair
    conductor: int
    sigma: np.ndarray
    tau: np.ndarray

    def __post_init__(self) -> None:
        nF, nG, n = self.mp.nF, self.mp.nG, self.conductor
        if n < 1:
            raise ValueError("conductor must be positive")
        object.__setattr__(self, "sigma", _table(self.sigma, (nG, nF, nF), n, "sigma"))
        object.__setattr__(self, "tau", _table(self.tau, (nF, nG, nG), n, "tau"))

    @classmethod
    def trivial(cls, mp: MatchedPair, conductor: int = 1) -> "BicrossedDatum":
        nF, nG = mp.nF, mp.nG
        return cls(mp, conductor, np.zeros((nG, nF, nF), np.int64), np.zeros((nF, nG, nG), np.int64))

    def with_conductor(self, n: int) -> "BicrossedDatum":
        """Same scalars over a multiple ``n`` of the current conductor."""
        if n % self.conductor:
            raise ValueError(f"{self.conductor} does not divide {n}")
        k = n // self.conductor
        return BicrossedDatum(self.mp, n, self.sigma * k, self.tau * k)

    def replace(self, sigma=None, tau=None) -> "BicrossedDatum":
        return BicrossedDatum(
            self.mp,
            self.conductor,
            self.sigma if sigma is None else sigma,
            self.tau if tau is None else tau,
        )

    def validate(self) -> Report:
        rep = Report("cocycles")
        rep.extend(validate_sigma(self.mp, self.sigma, self.conductor), "sigma ")
        rep.extend(validate_tau(self.mp, self.tau, self.conductor), "tau ")
        return rep

    def to_dict(self) -> dict:
        return {
            "conductor": self.conductor,
            "sigma": self.sigma.tolist(),
            "tau": self.tau.tolist(),
        }


def validate_sigma(mp: MatchedPair, sigma: np.ndarray, n: int) -> Report:
    """Cocycle law, both normalizations, and the derived antipode identities."""
    S = np.asarray(sigma, dtype=np.int64)
    L, Rt, Fm = mp.act_l, mp.act_r, mp.F.mult
    Gi, Fi = mp.G.inv, mp.F.inv
    nG, nF = mp.nG, mp.nF
    g = np.arange(nG)[:, None, None, None]
    x = np.arange(nF)[None, :, None, None]
    y = np.arange(nF)[None, None, :, None]
    z = np.arange(nF)[None, None, None, :]
    rep = Report("sigma")
    # σ_{g◁x}(y,z) σ_g(x,yz) = σ_g(xy,z) σ_g(x,y)
    e = S[L[g, x], y, z] + S[g, x, Fm[y, z]] - S[g, Fm[x, y], z] - S[g, x, y]
    rep.add(sweep("cocycle", e % n != 0, ("g", "x", "y", "z"), CocycleFails))
    bad = (S[:, :, 0] % n != 0) | (S[:, 0, :] % n != 0)
    rep.add(sweep("normalized: σ_g(x,1) = σ_g(1,x) = 1", bad, ("g", "x"), NormalizationFails))
    rep.add(sweep("unit condition: σ_1(x,y) = 1", S[0] % n != 0, ("x", "y"), NormalizationFails))
    if rep.passed:
        g2 = np.arange(nG)[:, None]
        x2 = np.arange(nF)[None, :]
        e = S[L[g2, x2], Fi[x2], x2] - S[g2, x2, Fi[x2]]
        rep.add(sweep("derived: σ_{g◁x}(x⁻¹,x) = σ_g(x,x⁻¹)", e % n != 0, ("g", "x")))
        v = Rt[g2, x2]
        e = S[Gi[L[g2, x2]], Fi[v], v] - S[Gi[g2], v, Fi[v]]
        rep.add(
            sweep("derived: σ_{(t◁x)⁻¹}((t▷x)⁻¹,t▷x) = σ_{t⁻¹}(t▷x,(t▷x)⁻¹)", e % n != 0, ("t", "x"))
        )
    return rep


def validate_tau(mp: MatchedPair, tau: np.ndarray, n: int) -> Report:
    T = np.asarray(tau, dtype=np.int64)
    Rt, Gm = mp.act_r, mp.G.mult
    nG, nF = mp.nG, mp.nF
    x = np.arange(nF)[:, None, None, None]
    g = np.arange(nG)[None, :, None, None]
    h = np.arange(nG)[None, None, :, None]
    k = np.arange(nG)[None, None, None, :]
    rep = Report("tau")
    # τ_x(gh,k) τ_{k▷x}(g,h) = τ_x(h,k) τ_x(g,hk)
    e = T[x, Gm[g, h], k] + T[Rt[k, x], g, h] - T[x, h, k] - T[x, g, Gm[h, k]]
    rep.add(sweep("cocycle", e % n != 0, ("x", "g", "h", "k"), CocycleFails))
    bad = (T[:, :, 0] % n != 0) | (T[:, 0, :] % n != 0)
    rep.add(sweep("normalized: τ_x(g,1) = τ_x(1,g) = 1", bad, ("x", "g"), NormalizationFails))
    rep.add(sweep("unit condition: τ_1(g,h) = 1", T[0] % n != 0, ("g", "h"), NormalizationFails))
    return rep


def sigma_coboundary(mp: MatchedPair, f: np.ndarray, n: int) -> np.ndarray:
    """σ_g(x,y) = f_{g◁x}(y) f_g(x) / f_g(xy) for ``f[g, x]`` with f_g(1) = 1."""
    f = np.asarray(f, dtype=np.int64)
    g = np.arange(mp.nG)[:, None, None]
    x = np.arange(mp.nF)[None, :, None]
    y = np.arange(mp.nF)[None, None, :]
    return (f[mp.act_l[g, x], y] + f[g, x] - f[g, mp.F.mult[x, y]]) % n


def tau_coboundary(mp: MatchedPair, f: np.ndarray, n: int) -> np.ndarray:
    """τ_x(g,h) = f(g, h▷x) f(h, x) / f(gh, x) for ``f[g, x]`` with f(1, x) = 1."""
    f = np.asarray(f, dtype=np.int64)
    x = np.arange(mp.nF)[:, None, None]
    g = np.arange(mp.nG)[None, :, None]
    h = np.arange(mp.nG)[None, None, :]
    return (f[g, mp.act_r[h, x]] + f[h, x] - f[mp.G.mult[g, h], x]) % n


def is_sigma_coboundary(
    mp: MatchedPair, sigma: np.ndarray, n: int, multiplier: int = 1
) -> np.ndarray | None:
    """Search for ``f`` with σ = ∂f, values in μ_{n·multiplier}.

    Returns ``f[g, x]`` as exponents modulo ``n * multiplier`` (with
    ``f[g, 1] = 0``), or ``None`` if the linear system over Z/(n·multiplier)
    has no solution.  With ``multiplier > 1`` the search allows f to take
    values in a larger group of roots of unity than σ itself.
    """
    big = n * multiplier
    nG, nF = mp.nG, mp.nF
    unknown = {}
    for g in range(nG):
        for x in range(1, nF):
            unknown[(g, x)] = len(unknown)
    rows, rhs = [], []
    S = np.asarray(sigma, dtype=np.int64)
    for g in range(nG):
        for x in range(1, nF):
            gx = mp.lhd(g, x)
            for y in range(1, nF):
                row = [0] * len(unknown)
                row[unknown[(gx, y)]] += 1
                row[unknown[(g, x)]] += 1
                xy = mp.F.mul(x, y)
                if xy:
                    row[unknown[(g, xy)]] -= 1
                rows.append(row)
                rhs.append(int(S[g, x, y]) * multiplier)
    if not rows:
        return np.zeros((nG, nF), dtype=np.int64)
    sol = solve_mod(rows, rhs, big)
    if sol is None:
        return None
    vec, _ = sol
    f = np.zeros((nG, nF), dtype=np.int64)
    for (g, x), i in unknown.items():
        f[g, x] = vec[i]
    return f
