"""Numerical holonomy of the KZ connection on Verma weight spaces.

The connection is A = pref * sum_{i<j} Omega^{ij} (dz_i - dz_j)/(z_i - z_j)
on the trivial bundle over the ordered configuration space, restricted to a
weight-graded piece W[n lam - 2m] (optionally to its nullvector subspace).
Two parameter conventions are exposed, pref = h / (2 pi i) and pref = 1/tau;
internally everything is one complex prefactor.

Braid generators are represented by counterclockwise half-turns of the two
moving points about their midpoint (clockwise for the inverse letter);
holonomy of a letter is leg-swap composed with parallel transport along the
open path, the concrete model of the connection descended to the unordered
configuration space.  A word's monodromy multiplies letter holonomies with
the first letter acting first (column convention), so with h = 0 the result
is exactly the permutation operator of the word.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .verma import (
    is_generic,
    generic_null_dim,
    leg_permutation_matrix,
    nullspace_basis,
    omega_matrix,
    weight_dim,
)
from .words import BraidWord, Permutation, underlying_permutation

MIN_POINT_DISTANCE = 1e-9


@dataclass(frozen=True)
class PathSegment:
    """One closed-form curve s in [0,1] -> n point positions with derivative."""

    position: Callable
    velocity: Callable

    def reversed(self) -> "PathSegment":
        pos, vel = self.position, self.velocity
        return PathSegment(lambda s: pos(1.0 - s), lambda s: -vel(1.0 - s))


@dataclass(frozen=True)
class ConfigPath:
    """A piecewise-smooth path of n labelled points in the plane."""

    n: int
    segments: tuple

    def reversed(self) -> "ConfigPath":
        return ConfigPath(self.n, tuple(seg.reversed() for seg in reversed(self.segments)))

    def concat(self, other: "ConfigPath") -> "ConfigPath":
        if self.n != other.n:
            raise ValueError("point count mismatch")
        return ConfigPath(self.n, self.segments + other.segments)

    def min_pairwise_distance(self, samples: int = 257) -> float:
        worst = math.inf
        for seg in self.segments:
            for k in range(samples):
                z = seg.position(k / (samples - 1))
                for i in range(self.n):
                    for j in range(i + 1, self.n):
                        worst = min(worst, abs(z[i] - z[j]))
        return worst


def basepoint(n: int) -> np.ndarray:
    return np.arange(1, n + 1, dtype=complex)


def generator_path(n: int, i: int, sign: int = 1) -> ConfigPath:
    """Half-turn of z_i and z_{i+1} about their midpoint c = i + 1/2 with
    radius 1/2, counterclockwise for sign=+1, clockwise for sign=-1; all
    other points sit at their integer base positions."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for n={n}")
    c = i + 0.5
    w = sign * math.pi

    def pos(s: float) -> np.ndarray:
        z = basepoint(n)
        r = 0.5 * cmath.exp(1j * w * s)
        z[i - 1] = c - r
        z[i] = c + r
        return z

    def vel(s: float) -> np.ndarray:
        v = np.zeros(n, dtype=complex)
        r = 0.5j * w * cmath.exp(1j * w * s)
        v[i - 1] = -r
        v[i] = r
        return v

    return ConfigPath(n, (PathSegment(pos, vel),))


def pure_loop_path(n: int, i: int, semi_axes=(0.5, 0.5)) -> ConfigPath:
    """Full counterclockwise loop of z_i and z_{i+1} about their midpoint,
    tracing an ellipse with the given semi-axes; realizes sigma_i^2."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for n={n}")
    c = i + 0.5
    rx, ry = semi_axes

    def offset(s):
        ang = 2 * math.pi * s
        return rx * math.cos(ang) + 1j * ry * math.sin(ang)

    def doffset(s):
        ang = 2 * math.pi * s
        return 2 * math.pi * (-rx * math.sin(ang) + 1j * ry * math.cos(ang))

    def pos(s: float) -> np.ndarray:
        z = basepoint(n)
        z[i - 1] = c - offset(s)
        z[i] = c + offset(s)
        return z

    def vel(s: float) -> np.ndarray:
        v = np.zeros(n, dtype=complex)
        v[i - 1] = -doffset(s)
        v[i] = doffset(s)
        return v

    return ConfigPath(n, (PathSegment(pos, vel),))


@dataclass(frozen=True)
class KzSpec:
    """Parameters of a KZ transport problem on W[n lam - 2m].

    Exactly one of ``h`` (pref = h / 2 pi i) and ``tau`` (pref = 1 / tau)
    must be given.
    """

    n: int
    lam: object
    m: int
    h: object = None
    tau: object = None
    restrict_to_nullspace: bool = False

    def __post_init__(self):
        if (self.h is None) == (self.tau is None):
            raise ValueError("give exactly one of h and tau")
        if self.n < 2:
            raise ValueError("need at least two strands")

    @property
    def prefactor(self) -> complex:
        if self.h is not None:
            return complex(self.h) / (2j * math.pi)
        return 1.0 / complex(self.tau)


@dataclass(frozen=True)
class MonodromyResult:
    """Transport matrix with an accumulated local-error estimate."""

    matrix: np.ndarray
    est_error: float
    steps: int
    leg_permutation: Permutation | None = None


def _lam_complex(lam) -> complex:
    return complex(float(lam)) if isinstance(lam, Fraction) else complex(lam)


class KzSystem:
    """Precomputed Omega placements (optionally nullspace-compressed) and
    leg-swap operators for one KzSpec."""

    def __init__(self, spec: KzSpec):
        self.spec = spec
        n, m = spec.n, spec.m
        lam_c = _lam_complex(spec.lam)
        omegas = {}
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                block = omega_matrix(n, i, j, lam_c, m).block
                omegas[(i, j)] = np.asarray(block, dtype=complex)
        swaps = {
            i: np.asarray(
                leg_permutation_matrix(n, lam_c, m, Permutation.transposition(n, i).images),
                dtype=complex,
            )
            for i in range(1, n)
        }
        if spec.restrict_to_nullspace:
            basis = nullspace_matrix(n, spec.lam, m)
            pinv = np.linalg.pinv(basis)
            omegas = {key: pinv @ om @ basis for key, om in omegas.items()}
            swaps = {i: pinv @ p @ basis for i, p in swaps.items()}
            self.dim = basis.shape[1]
        else:
            self.dim = weight_dim(n, m)
        self.omegas = omegas
        self.swaps = swaps
        self.pairs = sorted(omegas)

    def connection(self, positions, velocities) -> np.ndarray:
        z = np.asarray(positions, dtype=complex)
        v = np.asarray(velocities, dtype=complex)
        acc = np.zeros((self.dim, self.dim), dtype=complex)
        for (i, j), om in self.omegas.items():
            dz = z[i - 1] - z[j - 1]
            if abs(dz) < MIN_POINT_DISTANCE:
                raise ValueError(f"points {i} and {j} collide (|dz| = {abs(dz):.2e})")
            acc += ((v[i - 1] - v[j - 1]) / dz) * om
        return self.spec.prefactor * acc


def nullspace_matrix(n: int, lam, m: int) -> np.ndarray:
    """Columns spanning N[n lam - 2m] as a complex matrix; exact kernel for
    rational weights, SVD kernel otherwise."""
    if isinstance(lam, (int, Fraction)):
        lam = Fraction(lam)
        if not is_generic(lam, m):
            raise ValueError(f"highest weight {lam} is degenerate for m={m}")
        kernel = nullspace_basis(n, lam, m)
        if len(kernel) != generic_null_dim(n, m):
            raise ValueError(f"nullspace rank {len(kernel)} is not the generic value")
        return np.asarray([[complex(float(x)) for x in vec] for vec in kernel]).T
    from .verma import tensor_generator_matrix

    e_mat = np.asarray(tensor_generator_matrix("E", n, complex(lam), m), dtype=complex)
    if e_mat.size == 0:
        return np.eye(weight_dim(n, m), dtype=complex)
    _, sing, vh = np.linalg.svd(e_mat)
    tolerance = max(e_mat.shape) * np.finfo(float).eps * (sing[0] if len(sing) else 1.0)
    rank = int(np.sum(sing > tolerance))
    kernel = vh[rank:].conj().T
    if kernel.shape[1] != generic_null_dim(n, m):
        raise ValueError(f"nullspace rank {kernel.shape[1]} is not the generic value")
    return kernel


def connection_value(spec: KzSpec, point, velocity) -> np.ndarray:
    """The connection 1-form evaluated on one tangent vector."""
    return KzSystem(spec).connection(point, velocity)


# Dormand-Prince 5(4) pair
_DP_C = (0.0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1.0, 1.0)
_DP_A = (
    (),
    (1 / 5,),
    (3 / 40, 9 / 40),
    (44 / 45, -56 / 15, 32 / 9),
    (19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729),
    (9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656),
    (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84),
)
_DP_B5 = (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84, 0.0)
_DP_B4 = (5179 / 57600, 0.0, 7571 / 16695, 393 / 640, -92097 / 339200, 187 / 2100, 1 / 40)


def _transport_segment(afun, psi: np.ndarray, tol: float):
    """Integrate Psi' = A(s) Psi over s in [0,1] with adaptive embedded
    Dormand-Prince steps; deterministic acceptance, mixed abs/rel control."""
    s = 0.0
    hstep = 0.1
    est = 0.0
    steps = 0
    while s < 1.0:
        hstep = min(hstep, 1.0 - s)
        if hstep < 1e-14:
            raise ArithmeticError("step size underflow in parallel transport")
        k = []
        for c_i, a_row in zip(_DP_C, _DP_A):
            y = psi
            for a, kj in zip(a_row, k):
                if a:
                    y = y + (hstep * a) * kj
            k.append(afun(s + c_i * hstep) @ y)
        psi5 = psi
        psi4 = psi
        for b5, b4, kj in zip(_DP_B5, _DP_B4, k):
            if b5:
                psi5 = psi5 + (hstep * b5) * kj
            if b4:
                psi4 = psi4 + (hstep * b4) * kj
        local = float(np.max(np.abs(psi5 - psi4)))
        scale = tol * max(1.0, float(np.max(np.abs(psi5))))
        if local <= scale:
            psi = psi5
            s += hstep
            est += local
            steps += 1
            grow = 5.0 if local == 0.0 else min(5.0, 0.9 * (scale / local) ** 0.2)
            hstep *= max(0.2, grow)
        else:
            hstep *= max(0.2, 0.9 * (scale / local) ** 0.2)
        if not np.isfinite(psi).all():
            raise ArithmeticError("non-finite transport value")
    return psi, est, steps


def parallel_transport(spec: KzSpec, path: ConfigPath, tol: float = 1e-9) -> MonodromyResult:
    """Parallel transport along a path, starting from the identity frame."""
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    system = KzSystem(spec)
    psi = np.eye(system.dim, dtype=complex)
    est = 0.0
    steps = 0
    for seg in path.segments:
        afun = lambda s: system.connection(seg.position(s), seg.velocity(s))
        psi, seg_est, seg_steps = _transport_segment(afun, psi, tol)
        est += seg_est
        steps += seg_steps
    return MonodromyResult(psi, est, steps)


def monodromy(spec: KzSpec, w: BraidWord, tol: float = 1e-9) -> MonodromyResult:
    """Holonomy of a braid word: per letter, transport along the half-turn
    path composed with the leg swap; letters act first-to-last."""
    if w.n != spec.n:
        raise ValueError(f"word on {w.n} strands does not match spec n={spec.n}")
    system = KzSystem(spec)
    total = np.eye(system.dim, dtype=complex)
    est = 0.0
    steps = 0
    for i, sign in w.letters:
        path = generator_path(spec.n, i, sign)
        seg = path.segments[0]
        afun = lambda s: system.connection(seg.position(s), seg.velocity(s))
        psi, seg_est, seg_steps = _transport_segment(afun, np.eye(system.dim, dtype=complex), tol)
        hol = system.swaps[i] @ psi
        total = hol @ total  # first letter acts first
        est += seg_est
        steps += seg_steps
    return MonodromyResult(total, est, steps, underlying_permutation(w))


def nullspace_rep(spec: KzSpec, w: BraidWord, tol: float = 1e-9) -> MonodromyResult:
    """The braid representation on the nullvector subspace N[n lam - 2m]."""
    if not spec.restrict_to_nullspace:
        spec = KzSpec(spec.n, spec.lam, spec.m, spec.h, spec.tau, True)
    return monodromy(spec, w, tol)


def flatness_residual(spec: KzSpec, point, tangent_u, tangent_v) -> float:
    """Relative size of the curvature 2-form on a tangent pair.

    The 1-forms are closed, so the curvature reduces to the commutator
    [A(u), A(v)] of the connection values; with the Kohno-Drinfeld
    relations in force this vanishes to rounding error.
    """
    system = KzSystem(spec)
    a_u = system.connection(point, tangent_u)
    a_v = system.connection(point, tangent_v)
    num = float(np.max(np.abs(a_u @ a_v - a_v @ a_u)))
    den = float(np.max(np.abs(a_u)) * np.max(np.abs(a_v)))
    return num / den if den > 0 else num


def curvature_form(spec: KzSpec, point, tangent_u, tangent_v) -> np.ndarray:
    """Raw curvature evaluation [A(u), A(v)] (bilinear in the tangents)."""
    system = KzSystem(spec)
    a_u = system.connection(point, tangent_u)
    a_v = system.connection(point, tangent_v)
    return a_u @ a_v - a_v @ a_u


def homotopy_invariance_check(spec: KzSpec, tol: float = 1e-10) -> float:
    """Transport along two homotopic realizations of the sigma_1^2 loop
    (round circle vs 0.5 x 0.3 ellipse) and return the difference norm."""
    circle = pure_loop_path(spec.n, 1, (0.5, 0.5))
    ellipse = pure_loop_path(spec.n, 1, (0.5, 0.3))
    t_circle = parallel_transport(spec, circle, tol)
    t_ellipse = parallel_transport(spec, ellipse, tol)
    return float(np.max(np.abs(t_circle.matrix - t_ellipse.matrix)))
