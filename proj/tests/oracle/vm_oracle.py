#!/usr/bin/env python3
"""Independent reference implementation of the vertex-multiplication pipeline.

Used once to pin golden regression files for the acceptance suite; kept in
the tree so the pins can be regenerated and audited. Deliberately built on
numpy.linalg only, with no code shared with the C++ library.

Usage:
    python3 vm_oracle.py <output-dir>
"""

import json
import sys

import numpy as np

TWO_PI = 2.0 * np.pi
ZERO_MOD_EPS = 1e-10
TIE_EPS = 1e-12


def cyclic_shift(n):
    s = np.zeros((n, n), dtype=complex)
    for i in range(n):
        s[i, (i - 1) % n] = 1.0
    return s


def dft_matrix(n):
    k = np.arange(n).reshape(-1, 1)
    m = np.arange(n).reshape(1, -1)
    return np.exp(-2j * np.pi * ((k * m) % n) / n) / np.sqrt(n)


def demo_graph(kind, n):
    a = cyclic_shift(n)
    if kind == "g1":
        return a
    if kind == "g2":
        a[2, 0] = 1.0
        return a
    if kind == "g3":
        return cyclic_shift(n) + cyclic_shift(n) @ cyclic_shift(n)
    raise ValueError(kind)


SEAM_SNAP = 1e-9


def frequency_of(lam):
    w = -np.angle(lam)
    if w < 0.0:
        w += TWO_PI
    # frequencies within fp noise of the 2*pi seam belong at 0
    if w >= TWO_PI - SEAM_SNAP:
        w = 0.0
    return w + 0.0  # never -0.0


def normalize_column(v):
    v = v / np.linalg.norm(v)
    mods = np.abs(v)
    top = mods.max()
    pivot = int(np.nonzero(mods >= top - TIE_EPS)[0][0])
    v = v * (np.conj(v[pivot]) / mods[pivot])
    v[pivot] = mods[pivot] + 0j
    return v


def assign_midpoint_frequency(omegas_known):
    """Place a missing frequency at the midpoint of the largest circular gap
    (earliest gap start on ties) among the known frequencies."""
    w = np.sort(omegas_known)
    n = len(w)
    best_gap = -1.0
    best_mid = None
    for i in range(n):
        lo = w[i]
        hi = w[(i + 1) % n] + (TWO_PI if i == n - 1 else 0.0)
        gap = hi - lo
        # earliest gap wins ties closer than 1e-12
        if gap > best_gap + 1e-12:
            best_gap = gap
            best_mid = (lo + hi) / 2.0
    mid = best_mid % TWO_PI
    return mid


def ordered_spectrum(a, eps_freq=1e-8, policy="error"):
    lam, vraw = np.linalg.eig(a)
    n = len(lam)
    zero_idx = [i for i in range(n) if abs(lam[i]) <= ZERO_MOD_EPS]
    omegas = np.empty(n)
    if zero_idx:
        if policy != "midpoint" or len(zero_idx) != 1:
            raise RuntimeError("ZeroModulusEigenvalue: %r" % zero_idx)
        known = [frequency_of(lam[i]) for i in range(n) if i not in zero_idx]
        for i in range(n):
            if i in zero_idx:
                omegas[i] = assign_midpoint_frequency(np.array(known))
            else:
                omegas[i] = frequency_of(lam[i])
    else:
        omegas = np.array([frequency_of(z) for z in lam])

    order = np.argsort(omegas, kind="stable")
    omegas = omegas[order]
    lam = lam[order]
    v = np.column_stack([normalize_column(vraw[:, j]) for j in order])

    delta = np.empty(n)
    delta[0] = omegas[0] - (omegas[-1] - TWO_PI)
    delta[1:] = np.diff(omegas)
    if delta.min() < eps_freq:
        raise RuntimeError("DegenerateFrequencies")

    vinv = np.linalg.inv(v)
    return lam, omegas, delta, v, vinv


def log_cyclic_shift(n):
    f = dft_matrix(n)
    d = np.diag([-1j * TWO_PI * k / n for k in range(n)])
    return f.conj().T @ d @ f


def vertex_multiplication(a, eps_freq=1e-8, policy="error", perturb_eps=1e-6):
    n = a.shape[0]
    if policy == "perturb":
        a = a + perturb_eps * cyclic_shift(n)
        policy_inner = "error"
    else:
        policy_inner = policy
    lam, omegas, delta, v, vinv = ordered_spectrum(a, eps_freq, policy_inner)
    nabla_dual = 1j * np.diag(1.0 / delta) @ log_cyclic_shift(n)
    u = vinv @ nabla_dual @ v
    return u, omegas, delta, v, vinv


def coords_l1(u):
    return np.abs(u).sum(axis=0)


def coords_normalized(c):
    n = len(c)
    lo, hi = c.min(), c.max()
    return (n - 1) * (c - lo) / (hi - lo)


def vm_json(kind, n, policy, perturb_eps=1e-6):
    a = demo_graph(kind, n)
    u, omegas, _, _, _ = vertex_multiplication(a, policy=policy,
                                               perturb_eps=perturb_eps)
    c = coords_l1(u)
    cn = coords_normalized(c)
    doc = {
        "n": n,
        "U": {"re": u.real.tolist(), "im": u.imag.tolist()},
        "coords_l1": c.tolist(),
        "coords_norm": cn.tolist(),
        "omegas": omegas.tolist(),
        "policy": policy,
        "non_paper": policy != "error",
    }
    if policy == "perturb":
        doc["perturb_eps"] = perturb_eps
    return doc


def main():
    outdir = sys.argv[1] if len(sys.argv) > 1 else "."
    pins = [
        ("g2_n8_error.json", vm_json("g2", 8, "error")),
        ("g3_n8_midpoint.json", vm_json("g3", 8, "midpoint")),
        ("g3_n8_perturb.json", vm_json("g3", 8, "perturb")),
    ]
    for name, doc in pins:
        path = outdir + "/" + name
        with open(path, "w") as fh:
            json.dump(doc, fh, indent=1)
            fh.write("\n")
        print("wrote", path)


if __name__ == "__main__":
    main()
