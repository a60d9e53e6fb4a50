"""NumPy implementation of the certification kernel (used when the compiled one is absent)."""
import numpy as np


def certify_block(u1, u2, system, h2, h3, bound_a2, bound_a3, nus, fs_bounds, slack):
    """Reconstruct candidates from Schwarz samples and score them against the bounds.

    Returns ``(admissible, violations, max_a2, max_a3, max_fs)`` where
    ``max_fs`` holds one maximum ratio per entry of ``nus``.
    """
    c1, e1, e2, f1, f2 = system
    u1 = np.asarray(u1, dtype=complex)
    u2 = np.asarray(u2, dtype=complex)
    nus = np.asarray(nus, dtype=float)
    fs_bounds = np.asarray(fs_bounds, dtype=float)

    u1sq = u1 * u1
    a2 = h2 * u1 / c1
    a2sq = a2 * a2
    a3 = (h2 * u2 + h3 * u1sq - e2 * a2sq) / e1
    v2 = (f1 * a2sq + f2 * a3 - h3 * u1sq) / h2

    lim = 1.0 + 1e-12
    ok = (np.abs(u1) <= lim) & (np.abs(u2) <= lim) & (np.abs(v2) <= lim)
    a2, a2sq, a3 = a2[ok], a2sq[ok], a3[ok]

    bad = np.zeros(a2.shape, dtype=bool)
    max_fs = np.zeros(nus.size)
    with np.errstate(divide="ignore", invalid="ignore"):
        r2 = np.abs(a2) / bound_a2 if np.isfinite(bound_a2) else np.zeros(a2.shape)
        r3 = np.abs(a3) / bound_a3 if np.isfinite(bound_a3) else np.zeros(a3.shape)
        bad |= (r2 > 1 + slack) | (r3 > 1 + slack)
        for i, (nu, bound) in enumerate(zip(nus, fs_bounds)):
            if not np.isfinite(bound):
                continue
            r = np.abs(a3 - nu * a2sq) / bound
            bad |= r > 1 + slack
            if r.size:
                max_fs[i] = r.max()
    max_a2 = float(r2.max()) if r2.size else 0.0
    max_a3 = float(r3.max()) if r3.size else 0.0
    return int(ok.sum()), int(bad.sum()), max_a2, max_a3, max_fs
