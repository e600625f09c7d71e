"""Hot numerical kernels with a numba fast path and a pure-numpy fallback.

Set STABLEMULT_DISABLE_NUMBA=1 to force the numpy implementations; the
two backends produce identical results (same arithmetic, same RNG
streams) and are cross-checked in the test suite.

Kernel families:
  * weighted second-difference sums over fine/coarse lag sets (the h
    quadrature of the operator T, its square-function variant, and the
    bilinear pairing sum);
  * splitmix64-based per-path RNG streams and the Euler path loops for
    the Monte Carlo module.
"""

import math
import os

import numpy as np

USE_NUMBA = os.environ.get("STABLEMULT_DISABLE_NUMBA", "") not in ("1", "true", "yes")
if USE_NUMBA:
    try:
        import numba
        from numba import njit, prange
    except ImportError:
        USE_NUMBA = False

BACKEND = "numba" if USE_NUMBA else "numpy"


# ---------------------------------------------------------------------------
# second-difference quadrature sums
#
# F is the field upsampled by `refine` (length n*refine); coarse grid
# points sit at indices i*refine.  wf weights lags j*dxf for j = 1..nf,
# wc weights lags k*dx for k = kcut+1..kcut+nc, gamma closes the far
# field with a multiple of the field itself.
# ---------------------------------------------------------------------------

def _hsum_numpy(F, n, refine, kcut, wf, wc, gamma, out):
    N = F.size
    base = np.arange(n) * refine
    Fc = F[base]
    nf = wf.size
    jf = np.arange(1, nf + 1)
    plus = F[(base[:, None] + jf[None, :]) % N]
    minus = F[(base[:, None] - jf[None, :]) % N]
    out[:] = (2.0 * Fc * wf.sum()) - (plus + minus) @ wf
    nc = wc.size
    kc = np.arange(kcut + 1, kcut + nc + 1)
    cplus = Fc[(np.arange(n)[:, None] + kc[None, :]) % n]
    cminus = Fc[(np.arange(n)[:, None] - kc[None, :]) % n]
    out += (2.0 * Fc * wc.sum()) - (cplus + cminus) @ wc
    out += gamma * Fc


def _gsum_numpy(F, G, n, refine, kcut, wf, wc, ws, dxf, out):
    """One-sided difference products: sum_j w_j [(F+ - F)(G+ - G) +
    (F- - F)(G- - G)] over both lag sets, plus the derivative-product
    singular-cell term ws * F'(x) G'(x)."""
    N = F.size
    base = np.arange(n) * refine
    Fc, Gc = F[base], G[base]
    nf = wf.size
    jf = np.arange(1, nf + 1)
    ip = (base[:, None] + jf[None, :]) % N
    im = (base[:, None] - jf[None, :]) % N
    dFp, dFm = F[ip] - Fc[:, None], F[im] - Fc[:, None]
    dGp, dGm = G[ip] - Gc[:, None], G[im] - Gc[:, None]
    out[:] = (dFp * dGp + dFm * dGm) @ wf
    nc = wc.size
    kc = np.arange(kcut + 1, kcut + nc + 1)
    ip = (np.arange(n)[:, None] + kc[None, :]) % n
    im = (np.arange(n)[:, None] - kc[None, :]) % n
    out += ((Fc[ip] - Fc[:, None]) * (Gc[ip] - Gc[:, None])
            + (Fc[im] - Fc[:, None]) * (Gc[im] - Gc[:, None])) @ wc
    fp = (F[(base + 1) % N] - F[(base - 1) % N]) / (2.0 * dxf)
    gp = (G[(base + 1) % N] - G[(base - 1) % N]) / (2.0 * dxf)
    out += ws * fp * gp


if USE_NUMBA:

    @njit(cache=True, parallel=True)
    def _hsum_numba(F, n, refine, kcut, wf, wc, gamma, out):
        N = F.size
        nf = wf.size
        nc = wc.size
        wfs = 0.0
        for j in range(nf):
            wfs += wf[j]
        wcs = 0.0
        for k in range(nc):
            wcs += wc[k]
        for i in prange(n):
            ir = i * refine
            acc = 2.0 * F[ir] * (wfs + wcs) + gamma * F[ir]
            for j in range(1, nf + 1):
                acc -= wf[j - 1] * (F[(ir + j) % N] + F[(ir - j) % N])
            for k in range(1, nc + 1):
                lag = (kcut + k) * refine
                acc -= wc[k - 1] * (F[(ir + lag) % N] + F[(ir - lag) % N])
            out[i] = acc

    @njit(cache=True, parallel=True)
    def _gsum_numba(F, G, n, refine, kcut, wf, wc, ws, dxf, out):
        N = F.size
        nf = wf.size
        nc = wc.size
        for i in prange(n):
            ir = i * refine
            fc = F[ir]
            gc = G[ir]
            acc = 0.0
            for j in range(1, nf + 1):
                acc += wf[j - 1] * ((F[(ir + j) % N] - fc) * (G[(ir + j) % N] - gc)
                                    + (F[(ir - j) % N] - fc) * (G[(ir - j) % N] - gc))
            for k in range(1, nc + 1):
                lag = (kcut + k) * refine
                acc += wc[k - 1] * ((F[(ir + lag) % N] - fc) * (G[(ir + lag) % N] - gc)
                                    + (F[(ir - lag) % N] - fc) * (G[(ir - lag) % N] - gc))
            fp = (F[(ir + 1) % N] - F[(ir - 1) % N]) / (2.0 * dxf)
            gp = (G[(ir + 1) % N] - G[(ir - 1) % N]) / (2.0 * dxf)
            acc += ws * fp * gp
            out[i] = acc


def hsum(F, n, refine, kcut, wf, wc, gamma, out):
    if USE_NUMBA:
        _hsum_numba(F, n, refine, kcut, wf, wc, gamma, out)
    else:
        _hsum_numpy(F, n, refine, kcut, wf, wc, gamma, out)


def gsum(F, G, n, refine, kcut, wf, wc, ws, dxf, out):
    if USE_NUMBA:
        _gsum_numba(F, G, n, refine, kcut, wf, wc, ws, dxf, out)
    else:
        _gsum_numpy(F, G, n, refine, kcut, wf, wc, ws, dxf, out)


# ---------------------------------------------------------------------------
# splitmix64 per-path RNG streams
#
# Path i consumes a fixed number of 64-bit words per step regardless of
# branches, so the scalar (numba) and lockstep-vectorized (numpy)
# simulators walk identical streams.  Schedules: vertical-only paths use
# 3 words per step (2 Gaussian, 1 bridge); (Y, Z) paths use 5 (2 stable,
# 2 Gaussian, 1 bridge).
# ---------------------------------------------------------------------------

_M64 = (1 << 64) - 1
_GOLD = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def _mix64_py(x):
    x &= _M64
    x ^= x >> 30
    x = (x * _MIX1) & _M64
    x ^= x >> 27
    x = (x * _MIX2) & _M64
    x ^= x >> 31
    return x


def stream_state_py(seed, idx):
    """Initial splitmix64 state for path `idx` of run `seed`."""
    return (seed ^ _mix64_py((idx + 1) * _GOLD)) & _M64


def next_u64_py(state):
    state = (state + _GOLD) & _M64
    return state, _mix64_py(state)


def uniform_from_bits(bits):
    """Map a 64-bit word to the open interval (0, 1)."""
    return ((bits >> 11) + 0.5) * 2.0 ** -53


def stream_states_np(seed, n_paths):
    idx = np.arange(1, n_paths + 1, dtype=np.uint64)
    x = idx * np.uint64(_GOLD)
    x ^= x >> np.uint64(30)
    x *= np.uint64(_MIX1)
    x ^= x >> np.uint64(27)
    x *= np.uint64(_MIX2)
    x ^= x >> np.uint64(31)
    return np.uint64(seed & _M64) ^ x


def next_u64_np(states):
    states += np.uint64(_GOLD)
    z = states.copy()
    z ^= z >> np.uint64(30)
    z *= np.uint64(_MIX1)
    z ^= z >> np.uint64(27)
    z *= np.uint64(_MIX2)
    z ^= z >> np.uint64(31)
    return z


def _uniform_np(states):
    bits = next_u64_np(states)
    return ((bits >> np.uint64(11)).astype(np.float64) + 0.5) * 2.0 ** -53


# green-functional integrand codes
F_EXP = 0
F_INDICATOR = 1
F_TABLE = 2


def _z_paths_numpy(seed, n_paths, a, dt, max_steps,
                   f_kind, f_param, f_table, f_zhi, z_adapt):
    states = stream_states_np(seed, n_paths)
    z = np.full(n_paths, a)
    tcur = np.zeros(n_paths)
    exit_time = np.full(n_paths, np.nan)
    green = np.zeros(n_paths)
    alive = np.arange(n_paths)
    nt = f_table.size

    def fval(zz):
        if f_kind == F_EXP:
            return np.exp(-zz)
        if f_kind == F_INDICATOR:
            return (zz <= f_param).astype(np.float64)
        pos = np.clip(zz, 0.0, f_zhi) * (nt - 1) / f_zhi
        i0 = np.minimum(pos.astype(np.int64), nt - 2)
        w = pos - i0
        return f_table[i0] * (1.0 - w) + f_table[i0 + 1] * w

    for _ in range(max_steps):
        if alive.size == 0:
            break
        st = states[alive]
        u1 = _uniform_np(st)
        u2 = _uniform_np(st)
        u3 = _uniform_np(st)
        states[alive] = st
        gauss = np.sqrt(-2.0 * np.log(u1)) * np.cos(2.0 * math.pi * u2)
        z0 = z[alive]
        # step coarsening above z_adapt: the diffusive scale dt*(z/z_adapt)^2
        # keeps the relative step size constant, so crossings are still
        # resolved at the fine dt near the boundary
        if z_adapt > 0.0:
            dte = dt * np.maximum(z0 / z_adapt, 1.0) ** 2
        else:
            dte = np.full(z0.shape, dt)
        z1 = z0 + np.sqrt(2.0 * dte) * gauss
        crossed = z1 <= 0.0
        frac = np.where(crossed, z0 / np.maximum(z0 - z1, 1e-300), 1.0)
        z1c = np.maximum(z1, 0.0)
        bridge = (~crossed & (z0 * z1c <= 40.0 * dte)
                  & (u3 < np.exp(-z0 * z1c / dte)))
        frac = np.where(bridge, 0.5, frac)
        done = crossed | bridge
        f0 = fval(z0)
        f1 = np.where(done, fval(np.zeros_like(z1)), fval(z1))
        green[alive] += 0.5 * (f0 + f1) * frac * dte
        tnew = tcur[alive] + frac * dte
        exit_time[alive[done]] = tnew[done]
        tcur[alive] += dte
        z[alive] = z1
        alive = alive[~done]
    return exit_time, green


def _yz_paths_numpy(seed, n_paths, alpha, x0, a, dt, max_steps, z_adapt):
    states = stream_states_np(seed, n_paths)
    y = np.full(n_paths, float(x0))
    z = np.full(n_paths, a)
    tcur = np.zeros(n_paths)
    exit_time = np.full(n_paths, np.nan)
    exit_pos = np.full(n_paths, np.nan)
    alive = np.arange(n_paths)
    ia = 1.0 / alpha
    for _ in range(max_steps):
        if alive.size == 0:
            break
        st = states[alive]
        u1 = _uniform_np(st)
        u2 = _uniform_np(st)
        u3 = _uniform_np(st)
        u4 = _uniform_np(st)
        u5 = _uniform_np(st)
        states[alive] = st
        z0 = z[alive]
        if z_adapt > 0.0:
            dte = dt * np.maximum(z0 / z_adapt, 1.0) ** 2
        else:
            dte = np.full(z0.shape, dt)
        U = math.pi * (u1 - 0.5)
        W = -np.log(u2)
        # increments are exact in law at any step size, so the coarsened
        # steps bias nothing but the boundary detection (fine-dt region)
        dy = (np.sin(alpha * U) / np.cos(U) ** ia
              * (np.cos((1.0 - alpha) * U) / W) ** ((1.0 - alpha) * ia)) * dte ** ia
        gauss = np.sqrt(-2.0 * np.log(u3)) * np.cos(2.0 * math.pi * u4)
        z1 = z0 + np.sqrt(2.0 * dte) * gauss
        crossed = z1 <= 0.0
        frac = np.where(crossed, z0 / np.maximum(z0 - z1, 1e-300), 1.0)
        z1c = np.maximum(z1, 0.0)
        bridge = (~crossed & (z0 * z1c <= 40.0 * dte)
                  & (u5 < np.exp(-z0 * z1c / dte)))
        frac = np.where(bridge, 0.5, frac)
        done = crossed | bridge
        y[alive] += dy * frac ** ia
        tnew = tcur[alive] + frac * dte
        exit_time[alive[done]] = tnew[done]
        exit_pos[alive[done]] = y[alive[done]]
        tcur[alive] += dte
        z[alive] = z1
        alive = alive[~done]
    return exit_time, exit_pos


def _jump_paths_numpy(seed, n_paths, alpha, a, dt, max_steps,
                      win_lo, win_w, utable, z_hi, y_origin, y_len):
    states = stream_states_np(seed, n_paths)
    nz, ny = utable.shape
    dy_grid = y_len / ny
    dz_tab = z_hi / (nz - 1)

    def u_interp(yy, zz):
        zc = np.clip(zz, 0.0, z_hi)
        fz = zc / dz_tab
        iz = np.minimum(fz.astype(np.int64), nz - 2)
        wz = fz - iz
        fy = (yy - y_origin) / dy_grid
        fy -= np.floor(fy / ny) * ny
        iy = np.minimum(fy.astype(np.int64), ny - 1)
        wy = fy - iy
        iy1 = (iy + 1) % ny
        v00 = utable[iz, iy]
        v01 = utable[iz, iy1]
        v10 = utable[iz + 1, iy]
        v11 = utable[iz + 1, iy1]
        return (v00 * (1 - wz) * (1 - wy) + v01 * (1 - wz) * wy
                + v10 * wz * (1 - wy) + v11 * wz * wy)

    u0 = _uniform_np(states)
    y = win_lo + win_w * u0
    start = y.copy()
    z = np.full(n_paths, a)
    Usum = np.zeros(n_paths)
    uqv = np.zeros(n_paths)
    mqv = np.zeros(n_paths)
    exited = np.zeros(n_paths, dtype=bool)
    alive = np.arange(n_paths)
    sig = math.sqrt(2.0 * dt)
    ia = 1.0 / alpha
    sc = dt ** ia
    for _ in range(max_steps):
        if alive.size == 0:
            break
        st = states[alive]
        u1 = _uniform_np(st)
        u2 = _uniform_np(st)
        u3 = _uniform_np(st)
        u4 = _uniform_np(st)
        u5 = _uniform_np(st)
        states[alive] = st
        U = math.pi * (u1 - 0.5)
        W = -np.log(u2)
        dy = (np.sin(alpha * U) / np.cos(U) ** ia
              * (np.cos((1.0 - alpha) * U) / W) ** ((1.0 - alpha) * ia)) * sc
        gauss = np.sqrt(-2.0 * np.log(u3)) * np.cos(2.0 * math.pi * u4)
        z0 = z[alive]
        z1 = z0 + sig * gauss
        crossed = z1 <= 0.0
        frac = np.where(crossed, z0 / np.maximum(z0 - z1, 1e-300), 1.0)
        z1c = np.maximum(z1, 0.0)
        bridge = (~crossed & (z0 * z1c <= 40.0 * dt)
                  & (u5 < np.exp(-z0 * z1c / dt)))
        frac = np.where(bridge, 0.5, frac)
        done = crossed | bridge
        dyeff = dy * frac ** ia
        z_cls = np.where(done, 0.0, z1)
        y0 = y[alive]
        y1 = y0 + dyeff
        delta = u_interp(y1, z_cls) - u_interp(y0, z_cls)
        small = np.abs(dyeff) < z_cls ** (2.0 * ia)
        mqv[alive] += delta * delta
        uqv[alive] += np.where(small, delta * delta, 0.0)
        Usum[alive] += np.where(small, delta, 0.0)
        y[alive] = y1
        z[alive] = z1
        exited[alive[done]] = True
        alive = alive[~done]
    return start, Usum, uqv, mqv, exited


if USE_NUMBA:

    @njit(cache=True, inline="always")
    def _next_u(state):
        state = (state + numba.uint64(_GOLD))
        z = state
        z = z ^ (z >> numba.uint64(30))
        z = z * numba.uint64(_MIX1)
        z = z ^ (z >> numba.uint64(27))
        z = z * numba.uint64(_MIX2)
        z = z ^ (z >> numba.uint64(31))
        u = (np.float64(z >> numba.uint64(11)) + 0.5) * 2.0 ** -53
        return state, u

    @njit(cache=True, inline="always")
    def _stream_state(seed, idx):
        x = numba.uint64(idx + 1) * numba.uint64(_GOLD)
        x = x ^ (x >> numba.uint64(30))
        x = x * numba.uint64(_MIX1)
        x = x ^ (x >> numba.uint64(27))
        x = x * numba.uint64(_MIX2)
        x = x ^ (x >> numba.uint64(31))
        return numba.uint64(seed) ^ x

    @njit(cache=True, parallel=True)
    def _z_paths_numba(seed, n_paths, a, dt, max_steps,
                       f_kind, f_param, f_table, f_zhi, z_adapt):
        exit_time = np.full(n_paths, np.nan)
        green = np.zeros(n_paths)
        nt = f_table.size
        for i in prange(n_paths):
            state = _stream_state(seed, i)
            z0 = a
            t = 0.0
            acc = 0.0
            for _ in range(max_steps):
                state, u1 = _next_u(state)
                state, u2 = _next_u(state)
                state, u3 = _next_u(state)
                if z_adapt > 0.0 and z0 > z_adapt:
                    dte = dt * (z0 / z_adapt) ** 2
                else:
                    dte = dt
                gauss = math.sqrt(-2.0 * math.log(u1)) * math.cos(2.0 * math.pi * u2)
                z1 = z0 + math.sqrt(2.0 * dte) * gauss
                crossed = z1 <= 0.0
                if crossed:
                    frac = z0 / max(z0 - z1, 1e-300)
                    done = True
                else:
                    frac = 1.0
                    # crossing prob < 4e-18 when z0*z1 > 40*dte: skip the exp
                    done = (z0 * z1 <= 40.0 * dte
                            and u3 < math.exp(-z0 * z1 / dte))
                    if done:
                        frac = 0.5
                if f_kind == 0:
                    f0 = math.exp(-z0)
                    f1 = 1.0 if done else math.exp(-z1)
                elif f_kind == 1:
                    f0 = 1.0 if z0 <= f_param else 0.0
                    f1 = 1.0 if (done or z1 <= f_param) else 0.0
                else:
                    pos = min(max(z0, 0.0), f_zhi) * (nt - 1) / f_zhi
                    i0 = min(int(pos), nt - 2)
                    w = pos - i0
                    f0 = f_table[i0] * (1.0 - w) + f_table[i0 + 1] * w
                    ze = 0.0 if done else z1
                    pos = min(max(ze, 0.0), f_zhi) * (nt - 1) / f_zhi
                    i0 = min(int(pos), nt - 2)
                    w = pos - i0
                    f1 = f_table[i0] * (1.0 - w) + f_table[i0 + 1] * w
                acc += 0.5 * (f0 + f1) * frac * dte
                if done:
                    exit_time[i] = t + frac * dte
                    break
                z0 = z1
                t += dte
            green[i] = acc
        return exit_time, green

    @njit(cache=True, parallel=True)
    def _yz_paths_numba(seed, n_paths, alpha, x0, a, dt, max_steps, z_adapt):
        exit_time = np.full(n_paths, np.nan)
        exit_pos = np.full(n_paths, np.nan)
        ia = 1.0 / alpha
        for i in prange(n_paths):
            state = _stream_state(seed, i)
            y = x0
            z0 = a
            t = 0.0
            for _ in range(max_steps):
                state, u1 = _next_u(state)
                state, u2 = _next_u(state)
                state, u3 = _next_u(state)
                state, u4 = _next_u(state)
                state, u5 = _next_u(state)
                if z_adapt > 0.0 and z0 > z_adapt:
                    dte = dt * (z0 / z_adapt) ** 2
                else:
                    dte = dt
                U = math.pi * (u1 - 0.5)
                W = -math.log(u2)
                dy = (math.sin(alpha * U) / math.cos(U) ** ia
                      * (math.cos((1.0 - alpha) * U) / W) ** ((1.0 - alpha) * ia)) * dte ** ia
                gauss = math.sqrt(-2.0 * math.log(u3)) * math.cos(2.0 * math.pi * u4)
                z1 = z0 + math.sqrt(2.0 * dte) * gauss
                if z1 <= 0.0:
                    frac = z0 / max(z0 - z1, 1e-300)
                    done = True
                else:
                    frac = 1.0
                    done = (z0 * z1 <= 40.0 * dte
                            and u5 < math.exp(-z0 * z1 / dte))
                    if done:
                        frac = 0.5
                y += dy * frac ** ia
                if done:
                    exit_time[i] = t + frac * dte
                    exit_pos[i] = y
                    break
                z0 = z1
                t += dte
        return exit_time, exit_pos

    @njit(cache=True, inline="always")
    def _u_interp_scalar(utable, yy, zz, z_hi, y_origin, dy_grid):
        nz, ny = utable.shape
        dz_tab = z_hi / (nz - 1)
        zc = min(max(zz, 0.0), z_hi)
        fz = zc / dz_tab
        iz = min(int(fz), nz - 2)
        wz = fz - iz
        fy = (yy - y_origin) / dy_grid
        fy -= math.floor(fy / ny) * ny
        iy = min(int(fy), ny - 1)
        wy = fy - iy
        iy1 = (iy + 1) % ny
        return (utable[iz, iy] * (1 - wz) * (1 - wy) + utable[iz, iy1] * (1 - wz) * wy
                + utable[iz + 1, iy] * wz * (1 - wy) + utable[iz + 1, iy1] * wz * wy)

    @njit(cache=True, parallel=True)
    def _jump_paths_numba(seed, n_paths, alpha, a, dt, max_steps,
                          win_lo, win_w, utable, z_hi, y_origin, y_len):
        ny = utable.shape[1]
        dy_grid = y_len / ny
        start = np.empty(n_paths)
        Usum = np.zeros(n_paths)
        uqv = np.zeros(n_paths)
        mqv = np.zeros(n_paths)
        exited = np.zeros(n_paths, dtype=np.bool_)
        sig = math.sqrt(2.0 * dt)
        ia = 1.0 / alpha
        sc = dt ** ia
        for i in prange(n_paths):
            state = _stream_state(seed, i)
            state, u0 = _next_u(state)
            y = win_lo + win_w * u0
            start[i] = y
            z0 = a
            for _ in range(max_steps):
                state, u1 = _next_u(state)
                state, u2 = _next_u(state)
                state, u3 = _next_u(state)
                state, u4 = _next_u(state)
                state, u5 = _next_u(state)
                U = math.pi * (u1 - 0.5)
                W = -math.log(u2)
                dy = (math.sin(alpha * U) / math.cos(U) ** ia
                      * (math.cos((1.0 - alpha) * U) / W) ** ((1.0 - alpha) * ia)) * sc
                gauss = math.sqrt(-2.0 * math.log(u3)) * math.cos(2.0 * math.pi * u4)
                z1 = z0 + sig * gauss
                if z1 <= 0.0:
                    frac = z0 / max(z0 - z1, 1e-300)
                    done = True
                else:
                    frac = 1.0
                    done = (z0 * z1 <= 40.0 * dt
                            and u5 < math.exp(-z0 * z1 / dt))
                    if done:
                        frac = 0.5
                dyeff = dy * frac ** ia
                z_cls = 0.0 if done else z1
                y1 = y + dyeff
                delta = (_u_interp_scalar(utable, y1, z_cls, z_hi, y_origin, dy_grid)
                         - _u_interp_scalar(utable, y, z_cls, z_hi, y_origin, dy_grid))
                mqv[i] += delta * delta
                if abs(dyeff) < z_cls ** (2.0 * ia):
                    uqv[i] += delta * delta
                    Usum[i] += delta
                y = y1
                z0 = z1
                if done:
                    exited[i] = True
                    break
        return start, Usum, uqv, mqv, exited


def z_paths(seed, n_paths, a, dt, max_steps, f_kind=F_EXP, f_param=1.0,
            f_table=None, f_zhi=1.0, z_adapt=0.0):
    if f_table is None:
        f_table = np.zeros(2)
    if USE_NUMBA:
        return _z_paths_numba(seed, n_paths, a, dt, max_steps,
                              f_kind, f_param, f_table, f_zhi, z_adapt)
    return _z_paths_numpy(seed, n_paths, a, dt, max_steps,
                          f_kind, f_param, f_table, f_zhi, z_adapt)


def yz_paths(seed, n_paths, alpha, x0, a, dt, max_steps, z_adapt=0.0):
    if USE_NUMBA:
        return _yz_paths_numba(seed, n_paths, alpha, x0, a, dt, max_steps, z_adapt)
    return _yz_paths_numpy(seed, n_paths, alpha, x0, a, dt, max_steps, z_adapt)


def jump_paths(seed, n_paths, alpha, a, dt, max_steps,
               win_lo, win_w, utable, z_hi, y_origin, y_len):
    if USE_NUMBA:
        return _jump_paths_numba(seed, n_paths, alpha, a, dt, max_steps,
                                 win_lo, win_w, utable, z_hi, y_origin, y_len)
    return _jump_paths_numpy(seed, n_paths, alpha, a, dt, max_steps,
                             win_lo, win_w, utable, z_hi, y_origin, y_len)
